//! Small exact linear algebra over the rationals.

use num_traits::Zero;

use crate::trop::Rational;

/// Solves a 3x3 system `rows * x = rhs`; `None` when singular.
pub fn solve3(rows: &[[Rational; 3]; 3], rhs: &[Rational; 3]) -> Option<[Rational; 3]> {
    let mut m: Vec<[Rational; 4]> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| [r[0].clone(), r[1].clone(), r[2].clone(), b.clone()])
        .collect();
    for col in 0..3 {
        let pivot_row = (col..3).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        let pivot = m[col][col].clone();
        for k in col..4 {
            m[col][k] = &m[col][k] / &pivot;
        }
        for r in 0..3 {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in col..4 {
                    m[r][k] = &m[r][k] - &(&factor * &m[col][k]);
                }
            }
        }
    }
    Some([m[0][3].clone(), m[1][3].clone(), m[2][3].clone()])
}

/// Rank of a list of row vectors in `R^3`.
pub fn rank3(rows: &[[Rational; 3]]) -> usize {
    let mut m: Vec<[Rational; 3]> = rows.to_vec();
    let mut rank = 0;
    for col in 0..3 {
        let Some(pivot_row) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let pivot = m[rank][col].clone();
        for r in rank + 1..m.len() {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &pivot;
                for k in col..3 {
                    m[r][k] = &m[r][k] - &(&factor * &m[rank][k]);
                }
            }
        }
        rank += 1;
        if rank == 3 {
            break;
        }
    }
    rank
}

/// Dimension of the affine hull of a point list (given as coordinate rows).
pub fn affine_rank(points: &[[Rational; 3]]) -> usize {
    let Some(first) = points.first() else {
        return 0;
    };
    let diffs: Vec<[Rational; 3]> = points[1..]
        .iter()
        .map(|p| [&p[0] - &first[0], &p[1] - &first[1], &p[2] - &first[2]])
        .collect();
    rank3(&diffs)
}

/// Cross product of two rational vectors.
pub fn cross(a: &[Rational; 3], b: &[Rational; 3]) -> [Rational; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// Dot product.
pub fn dot(a: &[Rational; 3], b: &[Rational; 3]) -> Rational {
    &(&a[0] * &b[0]) + &(&a[1] * &b[1]) + &(&a[2] * &b[2])
}
