//! Shared test support: corpus loading, random forms, and a Macaulay-matrix
//! oracle that uses only polynomial arithmetic and its own elimination.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;

use ciforge::cli::IdealFile;
use ciforge::decision::GeneratorSystem;
use ciforge::{Field, Monomial, Polynomial, ProjectivePoint, Ring};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn corpus_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus")
}

pub fn corpus_path(name: &str) -> PathBuf {
    corpus_dir().join(format!("{name}.ideal"))
}

pub fn load(name: &str) -> IdealFile {
    let text = std::fs::read_to_string(corpus_path(name)).expect("corpus file");
    IdealFile::parse(&text).expect("valid corpus file")
}

/// All corpus entries, sorted by name.
pub fn corpus() -> Vec<(String, IdealFile)> {
    let mut names: Vec<String> = std::fs::read_dir(corpus_dir())
        .expect("corpus dir")
        .map(|e| e.expect("dir entry").path())
        .filter(|p| p.extension().is_some_and(|e| e == "ideal"))
        .map(|p| p.file_stem().unwrap().to_string_lossy().into_owned())
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|n| {
            let f = load(&n);
            (n, f)
        })
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == n - 1 {
            prefix.push(d);
            out.push(Monomial::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for e in 0..=d {
            prefix.push(e);
            go(n, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, d, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Incremental sparse row echelon form; rows are keyed by column.
pub struct SparseEchelon<K> {
    pivots: BTreeMap<usize, BTreeMap<usize, K>>,
}

impl<K: Field> SparseEchelon<K> {
    pub fn new() -> Self {
        SparseEchelon {
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Inserts a row; returns whether it was independent of the previous ones.
    pub fn insert(&mut self, mut row: BTreeMap<usize, K>) -> bool {
        row.retain(|_, c| !c.is_zero());
        while let Some((&lead, c)) = row.iter().next() {
            match self.pivots.get(&lead) {
                None => {
                    let inv = c.inverse().expect("nonzero");
                    for v in row.values_mut() {
                        *v = v.clone() * inv.clone();
                    }
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    let c = c.clone();
                    for (col, v) in p {
                        let e = row.entry(*col).or_insert_with(K::zero);
                        *e = e.clone() - c.clone() * v.clone();
                        if e.is_zero() {
                            row.remove(col);
                        }
                    }
                }
            }
        }
        false
    }
}

fn row_of<K: Field>(p: &Polynomial<K>, index: &BTreeMap<Vec<u32>, usize>) -> BTreeMap<usize, K> {
    p.terms()
        .map(|(m, c)| (index[m.exponents()], c.clone()))
        .collect()
}

/// Echelon form of `span{ m * g : deg m + deg g = d }` over the generators
/// with degree in `keep`.
fn graded_span<K: Field>(
    ring: &Arc<Ring>,
    gens: &[Polynomial<K>],
    d: u32,
    keep: impl Fn(u32) -> bool,
) -> SparseEchelon<K> {
    let n = ring.num_vars();
    let index: BTreeMap<Vec<u32>, usize> = monomials_of_degree(n, d)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m.exponents().to_vec(), i))
        .collect();
    let one = ring.scalar::<K>(1);
    let mut ech = SparseEchelon::new();
    for g in gens {
        let e = g.total_degree().expect("nonzero generator");
        if e > d || !keep(e) {
            continue;
        }
        for m in monomials_of_degree(n, d - e) {
            ech.insert(row_of(&g.mul_term(&one, &m), &index));
        }
    }
    ech
}

/// `dim_K I_d` for the ideal generated by homogeneous `gens`.
pub fn ideal_dim_in_degree<K: Field>(ring: &Arc<Ring>, gens: &[Polynomial<K>], d: u32) -> usize {
    graded_span(ring, gens, d, |_| true).rank()
}

/// Hilbert function `dim S_d - dim I_d`.
pub fn hilbert_function<K: Field>(ring: &Arc<Ring>, gens: &[Polynomial<K>], d: u32) -> usize {
    let n = ring.num_vars() as u64;
    binomial(n - 1 + d as u64, d as u64) as usize - ideal_dim_in_degree(ring, gens, d)
}

/// Minimal number of homogeneous generators: `sum_d dim (I / m I)_d`.
pub fn minimal_generator_count<K: Field>(ring: &Arc<Ring>, gens: &[Polynomial<K>]) -> usize {
    let top = gens
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(0);
    (1..=top)
        .map(|d| {
            let all = graded_span(ring, gens, d, |_| true).rank();
            let lower = graded_span(ring, gens, d, |e| e < d).rank();
            all - lower
        })
        .sum()
}

/// Degree of the Hilbert polynomial, read off finite differences of the
/// Hilbert function on a window past the generator degrees; -1 when it
/// vanishes there.
pub fn projective_dimension_oracle<K: Field>(ring: &Arc<Ring>, gens: &[Polynomial<K>]) -> i64 {
    let top = gens
        .iter()
        .filter_map(|g| g.total_degree())
        .max()
        .unwrap_or(1);
    let n = ring.num_vars() as u32;
    let mut values: Vec<i64> = (top..=top + n)
        .map(|d| hilbert_function(ring, gens, d) as i64)
        .collect();
    let mut degree = -1;
    let mut k = 0;
    while !values.is_empty() {
        if values.iter().any(|&v| v != 0) {
            degree = k;
        }
        values = values.windows(2).map(|w| w[1] - w[0]).collect();
        k += 1;
    }
    degree
}

pub fn codimension_oracle<K: Field>(ring: &Arc<Ring>, gens: &[Polynomial<K>]) -> usize {
    (ring.num_vars() as i64 - 1 - projective_dimension_oracle(ring, gens)) as usize
}

/// Number of degree-`d` monomials divisible by none of `leads`.
pub fn standard_monomial_count(n: usize, d: u32, leads: &[Monomial]) -> usize {
    monomials_of_degree(n, d)
        .iter()
        .filter(|m| !leads.iter().any(|l| l.divides(m)))
        .count()
}

/// A nonzero form of the given degree.
pub fn random_form<K: Field, R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    degree: u32,
    max_terms: usize,
    coeff: i64,
) -> Polynomial<K> {
    let monos = monomials_of_degree(ring.num_vars(), degree);
    loop {
        let mut f = Polynomial::zero(ring);
        for _ in 0..rng.gen_range(1..=max_terms) {
            let m = monos[rng.gen_range(0..monos.len())].clone();
            let c = rng.gen_range(-coeff..=coeff);
            f.add_term(m, ring.scalar::<K>(c));
        }
        if !f.is_zero() {
            return f;
        }
    }
}

pub fn random_point<K: Field, R: Rng>(
    rng: &mut R,
    ring: &Arc<Ring>,
    range: i64,
) -> ProjectivePoint<K> {
    loop {
        let coords: Vec<i64> = (0..ring.num_vars())
            .map(|_| rng.gen_range(-range..=range))
            .collect();
        if let Ok(p) = ProjectivePoint::from_i64(&coords, ring) {
            return p;
        }
    }
}

/// Adjusts `f` by a multiple of `T_k^deg` so that it vanishes at `x`.
pub fn force_zero<K: Field>(f: &Polynomial<K>, x: &ProjectivePoint<K>) -> Polynomial<K> {
    let ring = f.ring();
    let d = f.degree().expect("homogeneous");
    let k = x.pivot();
    let value = f.evaluate(x).unwrap();
    let xk = x.coords()[k].clone();
    let mut xkd = ring.scalar::<K>(1);
    for _ in 0..d {
        xkd = xkd * xk.clone();
    }
    let mut g = f.clone();
    g.add_term(Monomial::var(ring.num_vars(), k, d), -(value / xkd));
    g
}

pub fn system_of<K: Field>(file: &IdealFile) -> (Arc<Ring>, GeneratorSystem<K>) {
    let ring = file.ring(file.field).unwrap();
    let sys = file.system(&ring).unwrap();
    (ring, sys)
}

pub fn point_of<K: Field>(file: &IdealFile, ring: &Arc<Ring>) -> ProjectivePoint<K> {
    ciforge::cli::parse_point(file.point.as_ref().expect("corpus point"), ring).unwrap()
}
