//! Box-perturbation decomposition `A = B - E` of a visualized matrix and the
//! cant and difference tuples read from `E`.

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::trop::{Rational, TropMatrix, TropScalar};

use super::{check_ni, ViMatrix};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecomposeError {
    #[error("box parameter t_{} is positive", .k + 1)]
    PositiveBoxParameter { k: usize },
    #[error("perturbation entry e_{}{} must be {expected}", .i + 1, .j + 1)]
    BadPerturbationEntry {
        i: usize,
        j: usize,
        expected: &'static str,
    },
}

/// The matrix of an axis-parallel box with North Pole at the origin and edge
/// lengths `|t_1|, |t_2|, |t_3|`: row `i` holds `t_i` off the diagonal for
/// `i < 4`, the last row is zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoxMatrix {
    t: [Rational; 3],
}

impl BoxMatrix {
    pub fn new(t: [Rational; 3]) -> Result<BoxMatrix, DecomposeError> {
        match t.iter().position(|v| *v > Rational::zero()) {
            Some(k) => Err(DecomposeError::PositiveBoxParameter { k }),
            None => Ok(BoxMatrix { t }),
        }
    }

    pub fn t(&self) -> &[Rational; 3] {
        &self.t
    }

    pub fn edge_lengths(&self) -> [Rational; 3] {
        [-&self.t[0], -&self.t[1], -&self.t[2]]
    }

    /// Materializes the 4x4 visualized idempotent matrix of the box.
    pub fn to_vi(&self) -> ViMatrix {
        let rows: Vec<Vec<TropScalar>> = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| {
                        if i == j || i == 3 {
                            TropScalar::zero()
                        } else {
                            TropScalar::Finite(self.t[i].clone())
                        }
                    })
                    .collect()
            })
            .collect();
        let m = TropMatrix::from_rows(rows).expect("4x4 grid");
        let ni = check_ni(m).expect("a box matrix is NI");
        ViMatrix::try_from(ni).expect("a box matrix has zero last row")
    }
}

/// The nonpositive perturbation `E = B - A` of a visualized matrix: zero on
/// the diagonal, the last row and the last column; entry `(i,j)` records how
/// deeply the cantable edge between facets `i` and `j` has been beveled.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PerturbationMatrix {
    e: [[Rational; 4]; 4],
}

impl PerturbationMatrix {
    pub fn new(e: [[Rational; 4]; 4]) -> Result<PerturbationMatrix, DecomposeError> {
        for i in 0..4 {
            for j in 0..4 {
                let must_be_zero = i == j || i == 3 || j == 3;
                if must_be_zero && !e[i][j].is_zero() {
                    return Err(DecomposeError::BadPerturbationEntry {
                        i,
                        j,
                        expected: "zero",
                    });
                }
                if e[i][j] > Rational::zero() {
                    return Err(DecomposeError::BadPerturbationEntry {
                        i,
                        j,
                        expected: "nonpositive",
                    });
                }
            }
        }
        Ok(PerturbationMatrix { e })
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        &self.e[i][j]
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().flatten().all(Zero::is_zero)
    }

    /// Reads the six free entries along the crooked closed path
    /// `e_23, e_13, e_12, e_32, e_31, e_21`.
    pub fn cant_tuple(&self) -> CantTuple {
        CantTuple([
            self.e[1][2].clone(),
            self.e[0][2].clone(),
            self.e[0][1].clone(),
            self.e[2][1].clone(),
            self.e[2][0].clone(),
            self.e[1][0].clone(),
        ])
    }

    pub fn transpose(&self) -> PerturbationMatrix {
        let mut e: [[Rational; 4]; 4] = Default::default();
        for i in 0..4 {
            for j in 0..4 {
                e[i][j] = self.e[j][i].clone();
            }
        }
        PerturbationMatrix { e }
    }

    /// Entry relabeling `e_{sigma(i) sigma(j)}` for a permutation of `{0,1,2}`
    /// extended by the fixed index 3.
    pub fn permute_conjugate(&self, sigma: &super::Perm3) -> PerturbationMatrix {
        let img = |i: usize| if i == 3 { 3 } else { sigma.apply(i) };
        let mut e: [[Rational; 4]; 4] = Default::default();
        for i in 0..4 {
            for j in 0..4 {
                e[i][j] = self.e[img(i)][img(j)].clone();
            }
        }
        PerturbationMatrix { e }
    }
}

pub(super) fn decompose(a: &ViMatrix) -> (BoxMatrix, PerturbationMatrix) {
    let t = [
        a.entry(0, 3).clone(),
        a.entry(1, 3).clone(),
        a.entry(2, 3).clone(),
    ];
    let b = BoxMatrix::new(t).expect("last column of a VI matrix is nonpositive");
    let bm = b.to_vi();
    let mut e: [[Rational; 4]; 4] = Default::default();
    for i in 0..4 {
        for j in 0..4 {
            e[i][j] = bm.entry(i, j) - a.entry(i, j);
        }
    }
    let e = PerturbationMatrix::new(e).expect("B - A of a VI matrix is a perturbation");
    (b, e)
}

/// The six cant depths `c = (e_23, e_13, e_12, e_32, e_31, e_21)`, all
/// nonpositive.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CantTuple(pub(crate) [Rational; 6]);

impl CantTuple {
    pub fn components(&self) -> &[Rational; 6] {
        &self.0
    }

    /// Cyclic first differences `d_i = c_{i+1} - c_i` with `c_7 = c_1`.
    pub fn difference_tuple(&self) -> DifferenceTuple {
        let c = &self.0;
        DifferenceTuple::new([
            &c[1] - &c[0],
            &c[2] - &c[1],
            &c[3] - &c[2],
            &c[4] - &c[3],
            &c[5] - &c[4],
            &c[0] - &c[5],
        ])
    }
}

/// The difference tuple `d` of a perturbation; its component signs determine
/// the quasi-Euclidean class. The components always sum to zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DifferenceTuple([Rational; 6]);

impl DifferenceTuple {
    pub fn new(d: [Rational; 6]) -> DifferenceTuple {
        DifferenceTuple(d)
    }

    pub fn components(&self) -> &[Rational; 6] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k]
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }
}

impl fmt::Display for CantTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.0, f)
    }
}

impl fmt::Display for DifferenceTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_tuple(&self.0, f)
    }
}

fn fmt_tuple(t: &[Rational; 6], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let parts: Vec<String> = t.iter().map(|c| c.to_string()).collect();
    write!(f, "({})", parts.join(", "))
}
