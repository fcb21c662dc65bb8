//! Buchberger's algorithm with the Gebauer-Moeller pair update, optionally
//! tracking every basis element as a combination of the input generators.

use std::sync::{Arc, Mutex};
use std::time::Instant;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::{Monomial, Ring};
use crate::scalar::Field;

use super::division::{divide, Divisor};
use super::MonomialOrder;

static DEADLINE: Mutex<Option<Instant>> = Mutex::new(None);

/// Process-wide wall-clock limit for Groebner computations. Runs that pass
/// it fail with [`Error::Timeout`].
pub fn set_deadline(deadline: Option<Instant>) {
    *DEADLINE.lock().expect("deadline lock") = deadline;
}

fn check_deadline() -> Result<()> {
    match *DEADLINE.lock().expect("deadline lock") {
        Some(d) if Instant::now() >= d => Err(Error::Timeout),
        _ => Ok(()),
    }
}

/// Rows are basis elements, columns are input generators.
pub type Representation<K> = Vec<Vec<Polynomial<K>>>;

/// A reduced Groebner basis, sorted by ascending leading monomial.
#[derive(Debug, Clone)]
pub struct GroebnerBasis<K: Field> {
    ring: Arc<Ring>,
    order: MonomialOrder,
    elements: Vec<Polynomial<K>>,
    representation: Option<Representation<K>>,
}

impl<K: Field> GroebnerBasis<K> {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial<K>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<Polynomial<K>> {
        self.elements
    }

    /// Present when computed with tracking: `elements[k] = sum_j rep[k][j] * gens[j]`.
    pub fn representation(&self) -> Option<&Representation<K>> {
        self.representation.as_ref()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|e| e.leading_monomial(self.order).expect("nonzero").clone())
            .collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|e| e.total_degree() == Some(0))
    }

    /// Every S-polynomial reduces to zero, no monomial of an element is
    /// divisible by another element's leading monomial, and elements are monic.
    pub fn check_invariants(&self) -> bool {
        let order = self.order;
        let divisors: Vec<_> = self
            .elements
            .iter()
            .map(|e| Divisor::new(e, order).expect("nonzero"))
            .collect();
        for (i, d) in divisors.iter().enumerate() {
            let (_, c) = d.poly.leading_term(order).expect("nonzero");
            if !c.is_one() {
                return false;
            }
            for (j, e) in divisors.iter().enumerate() {
                if i != j && d.poly.terms().any(|(m, _)| e.lead.divides(m)) {
                    return false;
                }
            }
        }
        for i in 0..divisors.len() {
            for j in i + 1..divisors.len() {
                let s = s_polynomial(&divisors[i], &divisors[j]);
                let (_, r) = divide(&s, &divisors, order, false);
                if !r.is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn s_polynomial<K: Field>(a: &Divisor<'_, K>, b: &Divisor<'_, K>) -> Polynomial<K> {
    let lcm = a.lead.lcm(&b.lead);
    let ta = a.lead.quotient_of(&lcm).expect("lcm");
    let tb = b.lead.quotient_of(&lcm).expect("lcm");
    let mut s = a.poly.mul_term(&a.lead_inv, &ta);
    s.add_scaled(&-b.lead_inv.clone(), &tb, b.poly);
    s
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

struct Engine<K> {
    ring: Arc<Ring>,
    order: MonomialOrder,
    polys: Vec<Polynomial<K>>,
    leads: Vec<Monomial>,
    reps: Option<Representation<K>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<K: Field> Engine<K> {
    fn reduce(
        &self,
        f: &Polynomial<K>,
        rep: Option<Vec<Polynomial<K>>>,
        among: &[usize],
    ) -> (Polynomial<K>, Option<Vec<Polynomial<K>>>) {
        let divisors: Vec<_> = among
            .iter()
            .map(|&k| Divisor::new(&self.polys[k], self.order).expect("nonzero"))
            .collect();
        let (quotients, remainder) = divide(f, &divisors, self.order, rep.is_some());
        let rep = rep.map(|mut rep| {
            let reps = self.reps.as_ref().expect("tracking");
            for (q, &k) in quotients.iter().zip(among) {
                if q.is_zero() {
                    continue;
                }
                for (slot, r) in rep.iter_mut().zip(&reps[k]) {
                    if !r.is_zero() {
                        *slot = &*slot - &(q * r);
                    }
                }
            }
            rep
        });
        (remainder, rep)
    }

    fn insert(&mut self, h: Polynomial<K>, rep: Option<Vec<Polynomial<K>>>) {
        let (lead, c) = h.leading_term(self.order).expect("nonzero");
        let lead = lead.clone();
        let inv = c.inverse().expect("nonzero");
        let h = h.scale(&inv);
        let idx = self.polys.len();
        self.polys.push(h);
        self.leads.push(lead);
        if let Some(reps) = self.reps.as_mut() {
            let rep = rep.expect("tracking");
            reps.push(rep.iter().map(|r| r.scale(&inv)).collect());
        }
        self.update(idx);
    }

    /// Gebauer-Moeller update for a new element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.leads[h].clone();
        let candidates: Vec<(usize, Monomial)> = self
            .active
            .iter()
            .map(|&g| (g, lh.lcm(&self.leads[g])))
            .collect();
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (g, l)) in candidates.iter().enumerate() {
            let coprime = lh.is_coprime(&self.leads[*g]);
            let dominated = candidates[idx + 1..]
                .iter()
                .chain(kept.iter())
                .any(|(_, l2)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*g, l.clone()));
            }
        }
        kept.retain(|(g, _)| !lh.is_coprime(&self.leads[*g]));

        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm) && leads[p.i].lcm(&lh) != p.lcm && leads[p.j].lcm(&lh) != p.lcm)
        });
        self.pairs
            .extend(kept.into_iter().map(|(g, lcm)| Pair { i: g, j: h, lcm }));

        self.active.retain(|&g| !lh.divides(&leads[g]));
        self.active.push(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then(a.i.min(a.j).cmp(&b.i.min(b.j)))
                    .then(a.i.max(a.j).cmp(&b.i.max(b.j)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

pub(crate) fn compute<K: Field>(
    ring: &Arc<Ring>,
    gens: &[Polynomial<K>],
    order: MonomialOrder,
    track: bool,
) -> Result<GroebnerBasis<K>> {
    for g in gens {
        if g.ring() != ring {
            return Err(Error::RingMismatch);
        }
    }
    let n = gens.len();
    let mut engine = Engine {
        ring: Arc::clone(ring),
        order,
        polys: Vec::new(),
        leads: Vec::new(),
        reps: track.then(Vec::new),
        active: Vec::new(),
        pairs: Vec::new(),
    };

    // zero generators and exact duplicates are skipped
    let mut inputs: Vec<usize> = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        if !g.is_zero() && !inputs.iter().any(|&k| gens[k] == *g) {
            inputs.push(j);
        }
    }
    inputs.sort_by_key(|&j| (gens[j].total_degree(), j));

    let unit = |j: usize| -> Vec<Polynomial<K>> {
        (0..n)
            .map(|k| {
                if k == j {
                    Polynomial::constant(ring, K::one())
                } else {
                    Polynomial::zero(ring)
                }
            })
            .collect()
    };

    for j in inputs {
        check_deadline()?;
        let active = engine.active.clone();
        let (h, rep) = engine.reduce(&gens[j], track.then(|| unit(j)), &active);
        if !h.is_zero() {
            engine.insert(h, rep);
        }
    }

    while let Some(pair) = engine.next_pair() {
        check_deadline()?;
        let (a, b) = (pair.i.min(pair.j), pair.i.max(pair.j));
        let da = Divisor::new(&engine.polys[a], order).expect("nonzero");
        let db = Divisor::new(&engine.polys[b], order).expect("nonzero");
        let s = s_polynomial(&da, &db);
        let rep = engine.reps.as_ref().map(|reps| {
            let ta = da.lead.quotient_of(&pair.lcm).expect("lcm");
            let tb = db.lead.quotient_of(&pair.lcm).expect("lcm");
            reps[a]
                .iter()
                .zip(&reps[b])
                .map(|(ra, rb)| {
                    let mut r = ra.mul_term(&K::one(), &ta);
                    r.add_scaled(&-K::one(), &tb, rb);
                    r
                })
                .collect()
        });
        let active = engine.active.clone();
        let (h, rep) = engine.reduce(&s, rep, &active);
        if !h.is_zero() {
            engine.insert(h, rep);
        }
    }

    // interreduce the minimal basis
    let mut active = engine.active.clone();
    active.sort_by(|&a, &b| order.cmp(&engine.leads[a], &engine.leads[b]));
    debug_assert!(active.iter().all(|&a| active
        .iter()
        .all(|&b| a == b || !engine.leads[a].divides(&engine.leads[b]))));
    for pos in 0..active.len() {
        let k = active[pos];
        let others: Vec<usize> = active.iter().copied().filter(|&o| o != k).collect();
        let rep = engine.reps.as_ref().map(|r| r[k].clone());
        let (h, rep) = engine.reduce(&engine.polys[k], rep, &others);
        debug_assert_eq!(h.leading_monomial(order), Some(&engine.leads[k]));
        engine.polys[k] = h;
        if let (Some(reps), Some(rep)) = (engine.reps.as_mut(), rep) {
            reps[k] = rep;
        }
    }

    let elements: Vec<Polynomial<K>> = active.iter().map(|&k| engine.polys[k].clone()).collect();
    let representation = engine
        .reps
        .map(|reps| active.iter().map(|&k| reps[k].clone()).collect());
    let basis = GroebnerBasis {
        ring: engine.ring,
        order,
        elements,
        representation,
    };
    debug_assert!(basis.check_invariants());
    Ok(basis)
}
