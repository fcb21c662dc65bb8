//! Groebner bases and the ideal-theoretic queries built on them.

mod buchberger;
mod division;
mod order;

use std::sync::Arc;

pub use buchberger::{set_deadline, GroebnerBasis, Representation};
pub use division::{normal_form, QuotientRecord};
pub use order::MonomialOrder;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::scalar::Field;

/// Reduced Groebner basis of `(gens)`. Zero generators and exact duplicates
/// are ignored.
pub fn reduced_groebner<K: Field>(
    ring: &Arc<Ring>,
    gens: &[Polynomial<K>],
    order: MonomialOrder,
) -> Result<GroebnerBasis<K>> {
    buchberger::compute(ring, gens, order, false)
}

/// Like [`reduced_groebner`], additionally recording each basis element as a
/// combination of `gens`.
pub fn reduced_groebner_tracked<K: Field>(
    ring: &Arc<Ring>,
    gens: &[Polynomial<K>],
    order: MonomialOrder,
) -> Result<GroebnerBasis<K>> {
    buchberger::compute(ring, gens, order, true)
}

#[derive(Debug, Clone)]
pub struct Membership<K: Field> {
    pub is_member: bool,
    /// On membership: quotients aligned with the ORIGINAL generators and a
    /// zero remainder.
    pub record: Option<QuotientRecord<K>>,
}

/// Decides `f in (gens)` and, when it is, expresses `f` over `gens` by
/// composing the division quotients with the Buchberger transcript.
pub fn ideal_member<K: Field>(f: &Polynomial<K>, gens: &[Polynomial<K>]) -> Result<Membership<K>> {
    let ring = f.ring();
    for g in gens {
        f.check_same_ring(g)?;
    }
    if f.is_zero() {
        return Ok(Membership {
            is_member: true,
            record: Some(QuotientRecord {
                quotients: gens.iter().map(|_| Polynomial::zero(ring)).collect(),
                remainder: Polynomial::zero(ring),
            }),
        });
    }
    let order = MonomialOrder::GrevLex;
    let basis = reduced_groebner_tracked(ring, gens, order)?;
    let nf = normal_form(f, basis.elements(), order)?;
    if !nf.remainder.is_zero() {
        return Ok(Membership {
            is_member: false,
            record: None,
        });
    }
    let rep = basis.representation().expect("tracked");
    let mut quotients: Vec<Polynomial<K>> = gens.iter().map(|_| Polynomial::zero(ring)).collect();
    for (q, row) in nf.quotients.iter().zip(rep) {
        if q.is_zero() {
            continue;
        }
        for (slot, r) in quotients.iter_mut().zip(row) {
            if !r.is_zero() {
                *slot = &*slot + &(q * r);
            }
        }
    }
    let record = QuotientRecord {
        quotients,
        remainder: Polynomial::zero(ring),
    };
    debug_assert!(record.is_valid_for(f, gens));
    Ok(Membership {
        is_member: true,
        record: Some(record),
    })
}

/// Equality of ideals, decided by comparing reduced grevlex bases.
pub fn ideal_equal<K: Field>(
    ring: &Arc<Ring>,
    a: &[Polynomial<K>],
    b: &[Polynomial<K>],
) -> Result<bool> {
    let order = MonomialOrder::GrevLex;
    let ga = reduced_groebner(ring, a, order)?;
    let gb = reduced_groebner(ring, b, order)?;
    Ok(ga.elements() == gb.elements())
}

fn require_homogeneous<K: Field>(gens: &[Polynomial<K>]) -> Result<()> {
    if gens.iter().all(Polynomial::is_homogeneous) {
        Ok(())
    } else {
        Err(Error::NotHomogeneous)
    }
}

/// Generators of the ideal spanned by all elements of `(gens)` of degree
/// below `m`.
///
/// For a homogeneous ideal and a degree-compatible order, an element of
/// degree `d` reduces to zero using only basis elements of degree at most
/// `d`, so the reduced-basis elements of degree `< m` generate the truncated
/// ideal. They need not form a Groebner basis of it.
pub fn truncated_generators<K: Field>(
    ring: &Arc<Ring>,
    gens: &[Polynomial<K>],
    m: u32,
) -> Result<Vec<Polynomial<K>>> {
    if m < 1 {
        return Err(Error::DegreeConstraint(
            "degree cut must be at least 1".into(),
        ));
    }
    require_homogeneous(gens)?;
    let basis = reduced_groebner(ring, gens, MonomialOrder::GrevLex)?;
    Ok(basis
        .into_elements()
        .into_iter()
        .filter(|e| e.total_degree().is_some_and(|d| d < m))
        .collect())
}

/// Dimension of the projective vanishing locus: one less than the largest
/// set of variables containing the support of no grevlex leading monomial.
/// Returns -1 when the locus is empty.
pub fn projective_dimension<K: Field>(ring: &Arc<Ring>, gens: &[Polynomial<K>]) -> Result<i64> {
    require_homogeneous(gens)?;
    let basis = reduced_groebner(ring, gens, MonomialOrder::GrevLex)?;
    if basis.is_unit_ideal() {
        return Err(Error::ImproperIdeal);
    }
    let masks: Vec<u64> = basis
        .leading_monomials()
        .iter()
        .map(|m| m.support_mask())
        .collect();
    Ok(max_independent_set(ring.num_vars(), &masks) as i64 - 1)
}

fn max_independent_set(num_vars: usize, masks: &[u64]) -> usize {
    assert!(num_vars < 64, "too many variables");
    let mut best = 0;
    for set in 0u64..(1 << num_vars) {
        let size = set.count_ones() as usize;
        if size > best && masks.iter().all(|m| m & !set != 0) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::{FieldDescriptor, Fp, Rational};
    use proptest::prelude::*;

    fn ring(n: usize) -> Arc<Ring> {
        Ring::with_standard_names(FieldDescriptor::Rational, n).unwrap()
    }

    fn polys(texts: &[&str], r: &Arc<Ring>) -> Vec<Polynomial<Rational>> {
        texts
            .iter()
            .map(|t| parse_polynomial(t, r).unwrap())
            .collect()
    }

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    const CUBIC: [&str; 3] = ["T0*T2 - T1^2", "T1*T3 - T2^2", "T0*T3 - T1*T2"];

    #[test]
    fn division_examples() {
        let r = ring(4);
        let f = polys(&["T0*T2 - T1^2"], &r);
        let g = polys(&["T0*(T0*T2 - T1^2)"], &r)[0].clone();
        let rec = normal_form(&g, &f, MonomialOrder::GrevLex).unwrap();
        assert_eq!(rec.quotients, polys(&["T0"], &r));
        assert!(rec.remainder.is_zero());

        let basis = reduced_groebner(&r, &polys(&CUBIC, &r), MonomialOrder::GrevLex).unwrap();
        let t1sq = polys(&["T1^2"], &r)[0].clone();
        let rec = normal_form(&t1sq, basis.elements(), MonomialOrder::GrevLex).unwrap();
        assert_eq!(rec.remainder, polys(&["T0*T2"], &r)[0]);

        let rec = normal_form(&t1sq, &[], MonomialOrder::GrevLex).unwrap();
        assert!(rec.quotients.is_empty());
        assert_eq!(rec.remainder, t1sq);
    }

    #[test]
    fn division_rejects_other_rings() {
        let f = polys(&["T0"], &ring(4))[0].clone();
        let g = polys(&["T0"], &ring(3));
        assert_eq!(
            normal_form(&f, &g, MonomialOrder::GrevLex),
            Err(Error::RingMismatch)
        );
    }

    #[test]
    fn twisted_cubic_is_already_reduced() {
        let r = ring(4);
        let gens = polys(&CUBIC, &r);
        let basis = reduced_groebner(&r, &gens, MonomialOrder::GrevLex).unwrap();
        // monic in grevlex: leading terms T1^2, T1*T2, T2^2
        let expected = polys(&["T2^2 - T1*T3", "T1*T2 - T0*T3", "T1^2 - T0*T2"], &r);
        assert_eq!(basis.elements(), expected.as_slice());
        assert!(basis.check_invariants());
    }

    #[test]
    fn linear_form_tail_reduces_quadric() {
        let r = ring(4);
        let basis = reduced_groebner(
            &r,
            &polys(&["T0 - T1", "T0*T3 - T1*T2"], &r),
            MonomialOrder::GrevLex,
        )
        .unwrap();
        assert_eq!(
            basis.elements(),
            polys(&["T0 - T1", "T1*T2 - T1*T3"], &r).as_slice()
        );
    }

    #[test]
    fn single_generator_made_monic() {
        let r = ring(3);
        let basis =
            reduced_groebner(&r, &polys(&["-2*T0^2 + T1*T2"], &r), MonomialOrder::GrevLex).unwrap();
        assert_eq!(
            basis.elements(),
            polys(&["T0^2 - 1/2*T1*T2"], &r).as_slice()
        );
    }

    #[test]
    fn lex_basis_of_twisted_cubic() {
        let r = ring(4);
        let basis = reduced_groebner(&r, &polys(&CUBIC, &r), MonomialOrder::Lex).unwrap();
        assert!(basis.check_invariants());
        let grevlex = reduced_groebner(&r, basis.elements(), MonomialOrder::GrevLex).unwrap();
        let direct = reduced_groebner(&r, &polys(&CUBIC, &r), MonomialOrder::GrevLex).unwrap();
        assert_eq!(grevlex.elements(), direct.elements());
    }

    #[test]
    fn zero_and_duplicate_generators_ignored() {
        let r = ring(4);
        let mut gens = polys(&CUBIC, &r);
        gens.push(Polynomial::zero(&r));
        gens.push(gens[0].clone());
        let a = reduced_groebner(&r, &gens, MonomialOrder::GrevLex).unwrap();
        let b = reduced_groebner(&r, &polys(&CUBIC, &r), MonomialOrder::GrevLex).unwrap();
        assert_eq!(a.elements(), b.elements());
        assert!(reduced_groebner(
            &r,
            &[Polynomial::<Rational>::zero(&r)],
            MonomialOrder::GrevLex
        )
        .unwrap()
        .elements()
        .is_empty());
    }

    #[test]
    fn membership_examples() {
        let r = ring(4);
        let gens = polys(&CUBIC, &r);
        let tilde = &(&gens[0] + &gens[1]) - &gens[2];
        let m = ideal_member(&tilde, &gens).unwrap();
        assert!(m.is_member);
        let rec = m.record.unwrap();
        assert!(rec.is_valid_for(&tilde, &gens));
        assert_eq!(
            rec.quotients,
            vec![
                Polynomial::constant(&r, q(1)),
                Polynomial::constant(&r, q(1)),
                Polynomial::constant(&r, q(-1))
            ]
        );
        assert!(
            !ideal_member(&polys(&["T0"], &r)[0], &gens)
                .unwrap()
                .is_member
        );
        let z = ideal_member(&Polynomial::zero(&r), &gens).unwrap();
        assert!(z.is_member);
        assert!(z.record.unwrap().quotients.iter().all(Polynomial::is_zero));
    }

    #[test]
    fn membership_over_prime_field() {
        let r = Ring::with_standard_names(FieldDescriptor::Prime(7919), 4).unwrap();
        let gens: Vec<Polynomial<Fp>> = CUBIC
            .iter()
            .map(|t| parse_polynomial(t, &r).unwrap())
            .collect();
        let f: Polynomial<Fp> =
            parse_polynomial("T3*(T0*T2 - T1^2) + 5*T0*(T1*T3 - T2^2)", &r).unwrap();
        let m = ideal_member(&f, &gens).unwrap();
        assert!(m.is_member);
        assert!(m.record.unwrap().is_valid_for(&f, &gens));
    }

    #[test]
    fn equality_examples() {
        let r = ring(4);
        let gens = polys(&CUBIC, &r);
        let perm = vec![gens[2].clone(), gens[0].clone(), gens[1].clone()];
        assert!(ideal_equal(&r, &gens, &perm).unwrap());
        let a = polys(&["T0 - T1", "T0*T3 - T1*T2"], &r);
        let b = polys(&["T0 - T1", "T0*T3 - T1*T2 + T1*(T0 - T1)"], &r);
        assert!(ideal_equal(&r, &a, &b).unwrap());
        assert!(!ideal_equal(&r, &gens[..1], &gens[..2]).unwrap());
    }

    #[test]
    fn truncation_examples() {
        let r = ring(4);
        assert!(truncated_generators(&r, &polys(&CUBIC, &r), 2)
            .unwrap()
            .is_empty());
        let g = polys(&["T0 - T1", "T0*T3 - T1*T2"], &r);
        assert_eq!(
            truncated_generators(&r, &g, 2).unwrap(),
            polys(&["T0 - T1"], &r)
        );
        assert_eq!(
            truncated_generators(&r, &g, 3).unwrap(),
            polys(&["T0 - T1", "T1*T2 - T1*T3"], &r)
        );
        assert!(truncated_generators(&r, &g, 0).is_err());
    }

    #[test]
    fn dimension_examples() {
        let r = ring(4);
        assert_eq!(projective_dimension(&r, &polys(&CUBIC, &r)).unwrap(), 1);
        assert_eq!(
            projective_dimension(&r, &polys(&["T0*T3 - T1*T2"], &r)).unwrap(),
            2
        );
        assert_eq!(
            projective_dimension(&r, &polys(&["T0", "T1", "T2", "T3"], &r)).unwrap(),
            -1
        );
        assert_eq!(
            projective_dimension(&r, &polys(&["T0", "T1^2 + T0"], &r)),
            Err(Error::NotHomogeneous)
        );
        assert_eq!(
            projective_dimension(&r, &polys(&["T0^2", "3"], &r)),
            Err(Error::ImproperIdeal)
        );
    }

    fn shuffled(v: &[Polynomial<Rational>], seed: &[usize]) -> Vec<Polynomial<Rational>> {
        let mut out = v.to_vec();
        let len = out.len();
        for (i, s) in seed.iter().enumerate() {
            out.swap(i % len, s % len);
        }
        out
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn basis_is_permutation_invariant(seed in proptest::collection::vec(0usize..6, 6)) {
            let r = ring(5);
            let gens = polys(&[
                "T0*T2 - T1^2", "T0*T3 - T1*T2", "T0*T4 - T2^2",
                "T1*T3 - T2^2", "T1*T4 - T2*T3", "T2*T4 - T3^2",
            ], &r);
            let a = reduced_groebner(&r, &gens, MonomialOrder::GrevLex).unwrap();
            let b = reduced_groebner(&r, &shuffled(&gens, &seed), MonomialOrder::GrevLex).unwrap();
            prop_assert_eq!(a.elements(), b.elements());
            prop_assert!(a.check_invariants());
        }

        #[test]
        fn dimension_ignores_redundant_generators(c in -3i64..=3, d in -3i64..=3) {
            let r = ring(4);
            let gens = polys(&CUBIC, &r);
            let lin = polys(&["T0 + T3", "T1"], &r);
            let extra = &(&lin[1] * &gens[0]).scale(&q(c)) + &(&lin[0] * &gens[1]).scale(&q(d));
            let mut more = gens.clone();
            more.push(extra);
            prop_assert_eq!(projective_dimension(&r, &more).unwrap(), 1);
        }
    }
}
