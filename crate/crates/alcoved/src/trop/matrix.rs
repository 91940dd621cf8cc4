//! Square matrices over the max-plus semiring.

use std::fmt;

use thiserror::Error;

use super::scalar::{rat, Rational, TropScalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("matrix order must be at least 2, got {n}")]
    OrderTooSmall { n: usize },
    #[error("rows do not form a square grid")]
    NotSquare,
    #[error("matrix orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("expected {expected} entries, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("{0:?} is not a permutation of 0..{1}")]
    BadPermutation(Vec<usize>, usize),
    #[error("{}", fmt_non_finite(*.i, *.j))]
    NonFinite { i: usize, j: usize },
    #[error("index ({i},{j}) out of range for order {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
}

fn fmt_non_finite(i: usize, j: usize) -> String {
    format!(
        "entry a_{}{} is -inf; the operation requires finite entries",
        i + 1,
        j + 1
    )
}

/// A square matrix of [`TropScalar`] entries, row-major. Indices are 0-based.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TropMatrix {
    n: usize,
    entries: Vec<TropScalar>,
}

impl TropMatrix {
    pub fn from_rows(rows: Vec<Vec<TropScalar>>) -> Result<TropMatrix, MatrixError> {
        let n = rows.len();
        if n < 2 {
            return Err(MatrixError::OrderTooSmall { n });
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(MatrixError::NotSquare);
        }
        Ok(TropMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    /// Builds a finite matrix from integer rows. Panics on a non-square grid;
    /// meant for literals in tests and sample data.
    pub fn from_int_rows(rows: &[&[i64]]) -> TropMatrix {
        let converted = rows
            .iter()
            .map(|r| r.iter().map(|&v| TropScalar::from(v)).collect())
            .collect();
        TropMatrix::from_rows(converted).expect("square integer grid")
    }

    /// The tropical identity: 0 on the diagonal, `-inf` elsewhere.
    pub fn identity(n: usize) -> TropMatrix {
        let mut entries = vec![TropScalar::NegInf; n * n];
        for i in 0..n {
            entries[i * n + i] = TropScalar::zero();
        }
        TropMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &TropScalar {
        &self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[TropScalar] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn all_finite(&self) -> bool {
        self.entries.iter().all(|e| !e.is_neg_inf())
    }

    /// First `-inf` entry in row-major order, if any.
    pub fn first_non_finite(&self) -> Option<(usize, usize)> {
        self.entries
            .iter()
            .position(TropScalar::is_neg_inf)
            .map(|p| (p / self.n, p % self.n))
    }

    /// Tropical matrix product: entry `(i,j)` is `max_k (a_ik + b_kj)`.
    pub fn trop_mul(&self, rhs: &TropMatrix) -> Result<TropMatrix, MatrixError> {
        if self.n != rhs.n {
            return Err(MatrixError::OrderMismatch {
                left: self.n,
                right: rhs.n,
            });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = TropScalar::NegInf;
                for k in 0..n {
                    acc = acc.trop_add(&self.get(i, k).trop_mul(rhs.get(k, j)));
                }
                entries.push(acc);
            }
        }
        Ok(TropMatrix { n, entries })
    }

    /// Whether `A (*) A = A`.
    pub fn is_idempotent(&self) -> bool {
        self.trop_mul(self).map(|sq| sq == *self).unwrap_or(false)
    }

    pub fn transpose(&self) -> TropMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(j, i).clone());
            }
        }
        TropMatrix { n, entries }
    }

    /// Conjugation by the invertible diagonal matrix `diag(b)`: entry `(i,j)`
    /// becomes `b_i + a_ij - b_j`.
    pub fn conjugate(&self, b: &[Rational]) -> Result<TropMatrix, MatrixError> {
        if b.len() != self.n {
            return Err(MatrixError::BadLength {
                expected: self.n,
                got: b.len(),
            });
        }
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(match self.get(i, j) {
                    TropScalar::NegInf => TropScalar::NegInf,
                    TropScalar::Finite(a) => TropScalar::Finite(&b[i] + a - &b[j]),
                });
            }
        }
        Ok(TropMatrix { n, entries })
    }

    /// Conjugation by a tropical permutation matrix: entry `(i,j)` becomes
    /// `a_{sigma(i) sigma(j)}`. `sigma` is the image list of `0..n`.
    pub fn permute_conjugate(&self, sigma: &[usize]) -> Result<TropMatrix, MatrixError> {
        let n = self.n;
        let mut seen = vec![false; n];
        if sigma.len() != n
            || sigma
                .iter()
                .any(|&s| s >= n || std::mem::replace(&mut seen[s], true))
        {
            return Err(MatrixError::BadPermutation(sigma.to_vec(), n));
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.get(sigma[i], sigma[j]).clone());
            }
        }
        Ok(TropMatrix { n, entries })
    }

    /// The 2-minor `a_{ij;kl} = a_ik + a_jl - a_il - a_jk` (classical
    /// arithmetic). All four entries must be finite.
    pub fn two_minor(
        &self,
        i: usize,
        j: usize,
        k: usize,
        l: usize,
    ) -> Result<Rational, MatrixError> {
        let n = self.n;
        for &(r, c) in &[(i, k), (j, l), (i, l), (j, k)] {
            if r >= n || c >= n {
                return Err(MatrixError::IndexOutOfRange { i: r, j: c, n });
            }
        }
        let fin = |r: usize, c: usize| {
            self.get(r, c)
                .finite()
                .cloned()
                .ok_or(MatrixError::NonFinite { i: r, j: c })
        };
        Ok(fin(i, k)? + fin(j, l)? - fin(i, l)? - fin(j, k)?)
    }

    /// The geometric matrix: entry `(i,j)` becomes `a_ij - a_{n-1,j}`, so the
    /// last row is zero and each column is a tropical scalar multiple of the
    /// original column. The last row must be finite.
    pub fn geometric(&self) -> Result<TropMatrix, MatrixError> {
        let n = self.n;
        let mut last = Vec::with_capacity(n);
        for j in 0..n {
            last.push(
                self.get(n - 1, j)
                    .finite()
                    .cloned()
                    .ok_or(MatrixError::NonFinite { i: n - 1, j })?,
            );
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(match self.get(i, j) {
                    TropScalar::NegInf => TropScalar::NegInf,
                    TropScalar::Finite(a) => TropScalar::Finite(a - &last[j]),
                });
            }
        }
        Ok(TropMatrix { n, entries })
    }

    /// Column `j` as owned scalars.
    pub fn column(&self, j: usize) -> Vec<TropScalar> {
        (0..self.n).map(|i| self.get(i, j).clone()).collect()
    }

    /// Finite row as rationals, if every entry is finite.
    pub fn finite_row(&self, i: usize) -> Option<Vec<Rational>> {
        self.row(i).iter().map(|e| e.finite().cloned()).collect()
    }

    pub fn zero_matrix(n: usize) -> TropMatrix {
        TropMatrix {
            n,
            entries: vec![TropScalar::Finite(rat(0)); n * n],
        }
    }
}

impl fmt::Display for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.n)
            .map(|i| self.row(i).iter().map(|e| e.to_string()).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for (i, row) in cells.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for TropMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TropMatrix(order {}):\n{}", self.n, self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn remark_b() -> TropMatrix {
        TropMatrix::from_int_rows(&[&[0, 0, 0], &[-1, 0, 0], &[-1, -2, 0]])
    }

    #[test]
    fn product_of_non_idempotent_normal_matrix() {
        let b = remark_b();
        let sq = b.trop_mul(&b).unwrap();
        let expected = TropMatrix::from_int_rows(&[&[0, 0, 0], &[-1, 0, 0], &[-1, -1, 0]]);
        assert_eq!(sq, expected);
        assert!(!b.is_idempotent());
    }

    #[test]
    fn identity_is_neutral() {
        let a = TropMatrix::from_int_rows(&[&[0, -4, -5], &[-3, 0, -6], &[-2, -3, 0]]);
        let i = TropMatrix::identity(3);
        assert_eq!(i.trop_mul(&a).unwrap(), a);
        assert_eq!(a.trop_mul(&i).unwrap(), a);
    }

    #[test]
    fn order_mismatch_is_rejected() {
        let a = TropMatrix::identity(3);
        let b = TropMatrix::identity(4);
        assert_eq!(
            a.trop_mul(&b),
            Err(MatrixError::OrderMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn conjugate_by_zero_vector_is_identity_transform() {
        let a = remark_b();
        let zeros = vec![rat(0), rat(0), rat(0)];
        assert_eq!(a.conjugate(&zeros).unwrap(), a);
    }

    #[test]
    fn conjugate_then_inverse_conjugate_restores() {
        let a = remark_b();
        let b = vec![rat(3), rat(-1), rat(2)];
        let neg: Vec<Rational> = b.iter().map(|x| -x).collect();
        assert_eq!(a.conjugate(&b).unwrap().conjugate(&neg).unwrap(), a);
    }

    #[test]
    fn permute_conjugate_identity_and_involution() {
        let a = remark_b();
        assert_eq!(a.permute_conjugate(&[0, 1, 2]).unwrap(), a);
        let swapped = a.permute_conjugate(&[0, 2, 1]).unwrap();
        assert_eq!(swapped.permute_conjugate(&[0, 2, 1]).unwrap(), a);
    }

    #[test]
    fn two_minor_vanishes_on_repeated_indices() {
        let a = remark_b();
        assert_eq!(a.two_minor(1, 1, 0, 2).unwrap(), rat(0));
        assert_eq!(a.two_minor(0, 2, 1, 1).unwrap(), rat(0));
    }

    #[test]
    fn two_minor_rejects_neg_inf() {
        let a = TropMatrix::identity(3);
        assert!(matches!(
            a.two_minor(0, 1, 0, 1),
            Err(MatrixError::NonFinite { .. })
        ));
    }

    #[test]
    fn conjugating_by_the_last_row_corners_the_cube() {
        let q = TropMatrix::from_int_rows(&[
            &[0, -2, -2, -1],
            &[-2, 0, -2, -1],
            &[-2, -2, 0, -1],
            &[-1, -1, -1, 0],
        ]);
        let row4 = q.finite_row(3).unwrap();
        let cornered = q.conjugate(&row4).unwrap();
        let expected = TropMatrix::from_int_rows(&[
            &[0, -2, -2, -2],
            &[-2, 0, -2, -2],
            &[-2, -2, 0, -2],
            &[0, 0, 0, 0],
        ]);
        assert_eq!(cornered, expected);
    }

    #[test]
    fn permute_conjugate_relabels_rows_and_columns() {
        let a = TropMatrix::from_int_rows(&[
            &[0, -4, -5, -8],
            &[-3, 0, -6, -8],
            &[-2, -3, 0, -8],
            &[0, 0, 0, 0],
        ]);
        let swapped = a.permute_conjugate(&[1, 0, 2, 3]).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let si = if i < 2 { 1 - i } else { i };
                let sj = if j < 2 { 1 - j } else { j };
                assert_eq!(swapped.get(i, j), a.get(si, sj));
            }
        }
    }

    #[test]
    fn geometric_matrix_of_remark_example() {
        let b0 = remark_b().geometric().unwrap();
        let expected = TropMatrix::from_int_rows(&[&[1, 2, 0], &[0, 2, 0], &[0, 0, 0]]);
        assert_eq!(b0, expected);
    }
}
