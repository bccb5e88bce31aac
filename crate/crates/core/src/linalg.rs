//! Exact dense linear algebra over the rationals.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                got: entries.len(),
            });
        }
        Ok(RationalMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for k in 0..n {
            m.set(k, k, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    got: r.len(),
                });
            }
            entries.extend(r);
        }
        RationalMatrix::new(n, cols, entries)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&v| Rational::from_integer(v.into()))
                        .collect()
                })
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Top-left `rows x cols` block.
    pub fn submatrix(&self, rows: usize, cols: usize) -> Result<RationalMatrix> {
        if rows > self.rows || cols > self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows.min(self.cols),
                got: rows.max(cols),
            });
        }
        let entries = (0..rows)
            .flat_map(|r| self.row(r)[..cols].iter().cloned())
            .collect();
        RationalMatrix::new(rows, cols, entries)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Result<Vec<Rational>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref_with_pivots(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let v = m.get(row, c) * &inv;
                m.set(row, c, v);
            }
            let pivot_row: Vec<Rational> = m.row(row).to_vec();
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let factor = m.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for (c, p) in pivot_row.iter().enumerate().skip(col) {
                    if p.is_zero() {
                        continue;
                    }
                    let v = m.get(r, c) - &factor * p;
                    m.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> RationalMatrix {
        self.rref_with_pivots().0
    }

    pub fn rank(&self) -> usize {
        self.rref_with_pivots().1.len()
    }

    pub fn det(&self) -> Result<Rational> {
        if self.rows != self.cols {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            for r in col + 1..n {
                let factor = m.get(r, col) / &pivot;
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = m.get(r, c) - &factor * m.get(col, c);
                    m.set(r, c, v);
                }
            }
            det *= pivot;
        }
        Ok(det)
    }

    /// Basis of `{v : Mv = 0}` in reduced echelon form, so each vector's
    /// first nonzero coordinate is 1.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref_with_pivots();
        let mut raw = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.get(k, free).clone();
            }
            raw.push(v);
        }
        echelon_normalize(raw, self.cols)
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Reduced echelon basis of the span of `vectors`.
pub fn echelon_normalize(vectors: Vec<Vec<Rational>>, dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let n = vectors.len();
    let m = RationalMatrix::from_rows(vectors, dim).expect("uniform vector length");
    let (r, pivots) = m.rref_with_pivots();
    (0..pivots.len().min(n))
        .map(|k| r.row(k).to_vec())
        .collect()
}

/// Null space of a system whose rows arrive one at a time in sparse form.
///
/// Keeps a basis of the solutions of all constraints seen so far; each new
/// row costs one dot product per basis vector, so tall sparse systems never
/// need to be materialized.
#[derive(Clone, Debug)]
pub struct NullspaceTracker {
    dim: usize,
    basis: Vec<Vec<Rational>>,
}

impl NullspaceTracker {
    pub fn new(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|k| {
                let mut v = vec![Rational::zero(); dim];
                v[k] = Rational::one();
                v
            })
            .collect();
        NullspaceTracker { dim, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Imposes `sum_c row[c] * v[c] = 0`.
    pub fn add_constraint(&mut self, row: &[(usize, Rational)]) {
        let dots: Vec<Rational> = self
            .basis
            .iter()
            .map(|b| {
                row.iter()
                    .fold(Rational::zero(), |acc, (c, a)| acc + a * &b[*c])
            })
            .collect();
        let Some(k) = dots.iter().position(|d| !d.is_zero()) else {
            return;
        };
        let pivot = self.basis.remove(k);
        let pivot_dot = &dots[k];
        let rest = dots[..k].iter().chain(&dots[k + 1..]);
        for (b, d) in self.basis.iter_mut().zip(rest) {
            if d.is_zero() {
                continue;
            }
            let factor = d / pivot_dot;
            for (x, p) in b.iter_mut().zip(&pivot) {
                if !p.is_zero() {
                    *x -= &factor * p;
                }
            }
        }
    }

    pub fn into_basis(self) -> Vec<Vec<Rational>> {
        echelon_normalize(self.basis, self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn rank_of_all_ones() {
        let m = RationalMatrix::from_ints(&[&[1, 1], &[1, 1], &[1, 1]]).unwrap();
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn small_determinant() {
        let m = RationalMatrix::from_ints(&[&[1, 2], &[2, 6]]).unwrap();
        assert_eq!(m.det().unwrap(), q(2));
        let m = RationalMatrix::from_ints(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(m.det().unwrap(), q(-1));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = RationalMatrix::zeros(2, 3);
        assert_eq!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3 }));
    }

    #[test]
    fn identity_kernel_is_empty() {
        assert!(RationalMatrix::identity(4).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_is_normalized() {
        let m = RationalMatrix::from_ints(&[&[1, 2, 3], &[2, 4, 6]]).unwrap();
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            let first = v.iter().find(|x| !x.is_zero()).unwrap();
            assert!(first.is_one());
            assert!(m.mul_vec(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn dimension_checks() {
        assert!(RationalMatrix::new(2, 2, vec![q(1)]).is_err());
        let m = RationalMatrix::identity(2);
        assert!(m.mul_vec(&[q(1)]).is_err());
    }

    #[test]
    fn tracker_matches_dense_kernel() {
        let m = RationalMatrix::from_ints(&[&[1, 0, -1, 2], &[0, 1, 1, 1], &[1, 1, 0, 3]]).unwrap();
        let mut t = NullspaceTracker::new(4);
        for r in 0..m.rows() {
            let row: Vec<(usize, Rational)> = m
                .row(r)
                .iter()
                .cloned()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            t.add_constraint(&row);
        }
        assert_eq!(t.into_basis(), m.kernel_basis());
    }
}
