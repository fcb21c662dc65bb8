//! Dense exact linear algebra: rank, kernels, and linear relations among
//! polynomials of one degree.

use crate::error::{Error, Result};
use crate::poly::{Homogeneity, Polynomial};
use crate::ring::Monomial;
use crate::scalar::Field;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix<K> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

/// Reduced row echelon form plus the pivot column of each nonzero row.
#[derive(Debug, Clone)]
pub struct Echelon<K> {
    pub matrix: ExactMatrix<K>,
    pub pivots: Vec<usize>,
}

impl<K: Field> ExactMatrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![K::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in &rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    actual: row.len(),
                });
            }
            entries.extend(row.iter().cloned());
        }
        Ok(ExactMatrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<K>], rows: usize) -> Result<Self> {
        let mut m = ExactMatrix::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::DimensionMismatch {
                    expected: rows,
                    actual: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m.set(i, j, v.clone());
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(K::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Gauss-Jordan elimination to reduced row echelon form.
    pub fn echelon(&self) -> Echelon<K> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let mut best: Option<usize> = None;
            for r in row..m.rows {
                let v = m.get(r, col);
                if v.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some(r),
                    Some(b) if v.is_better_pivot_than(m.get(b, col)) => best = Some(r),
                    _ => {}
                }
            }
            let Some(p) = best else { continue };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inverse().expect("nonzero pivot");
            for c in col..m.cols {
                let v = m.get(row, c).clone() * inv.clone();
                m.set(row, c, v);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let v = m.get(r, c).clone() - factor.clone() * m.get(row, c).clone();
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Basis of the right null space, one vector per free column in
    /// ascending order. Each vector has a 1 at its free column, which is
    /// also its last nonzero coordinate.
    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        let Echelon { matrix, pivots } = self.echelon();
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().peekable();
        for free in 0..self.cols {
            if pivot_iter.peek() == Some(&&free) {
                pivot_iter.next();
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (r, &pc) in pivots.iter().enumerate() {
                if pc > free {
                    break;
                }
                v[pc] = -matrix.get(r, free).clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Coefficient vector `c != 0` with `sum c_i P_i = 0`, or `None` when the
/// polynomials are linearly independent.
pub fn linear_relation_polys<K: Field>(polys: &[Polynomial<K>]) -> Result<Option<Vec<K>>> {
    let Some(first) = polys.first() else {
        return Ok(None);
    };
    let mut degree = None;
    for p in polys {
        p.check_same_ring(first)?;
        match p.homogeneous_degree() {
            Homogeneity::Zero => {}
            Homogeneity::NotHomogeneous => return Err(Error::NotHomogeneous),
            Homogeneity::Degree(d) => match degree {
                None => degree = Some(d),
                Some(e) if e != d => return Err(Error::MixedDegrees),
                _ => {}
            },
        }
    }
    let mut monomials: Vec<Monomial> = polys
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    monomials.sort_by(|a, b| b.cmp_grevlex(a));
    monomials.dedup();
    let columns: Vec<Vec<K>> = polys
        .iter()
        .map(|p| monomials.iter().map(|m| p.coefficient(m)).collect())
        .collect();
    let matrix = ExactMatrix::from_columns(&columns, monomials.len())?;
    Ok(matrix.kernel_basis().into_iter().next())
}
