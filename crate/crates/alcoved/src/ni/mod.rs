//! Order-4 normal idempotent matrices and their transforms: visualization,
//! box-perturbation decomposition, cant and difference tuples, and the
//! twelve-element symmetry group acting on them.

mod decompose;
mod group;

use std::fmt;

use thiserror::Error;

use crate::trop::{Rational, TropMatrix};

pub use decompose::{BoxMatrix, CantTuple, DifferenceTuple, PerturbationMatrix};
pub use group::{GroupElement, Perm3, Sign, SignedPerm6};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NiError {
    #[error("matrix must have order 4, got {n}")]
    NotOrder4 { n: usize },
    #[error("{}", fmt_entry("is -inf; only finite matrices are accepted", *.i, *.j))]
    NotFinite { i: usize, j: usize },
    #[error("{}", fmt_diag(*.i))]
    NotNormal { i: usize },
    #[error("{}", fmt_entry("is positive; a normal matrix is nonpositive", *.i, *.j))]
    NotNonpositive { i: usize, j: usize },
    #[error("{}", fmt_idem(*.i, *.k, *.j))]
    NotIdempotent { i: usize, k: usize, j: usize },
    #[error("row {} is not zero, matrix is not visualized", .i + 1)]
    NotVisualized { i: usize },
}

fn fmt_entry(msg: &str, i: usize, j: usize) -> String {
    format!("entry a_{}{} {msg}", i + 1, j + 1)
}

fn fmt_diag(i: usize) -> String {
    format!(
        "diagonal entry a_{}{} is not zero, matrix is not normal",
        i + 1,
        i + 1
    )
}

fn fmt_idem(i: usize, k: usize, j: usize) -> String {
    format!(
        "idempotency fails at ({},{},{}): a_{}{} + a_{}{} > a_{}{}",
        i + 1,
        k + 1,
        j + 1,
        i + 1,
        k + 1,
        k + 1,
        j + 1,
        i + 1,
        j + 1
    )
}

/// A normal idempotent matrix of order 4: finite, nonpositive, zero-diagonal
/// and tropically idempotent (`a_ik + a_kj <= a_ij` for all `i, j, k`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NiMatrix {
    m: TropMatrix,
}

/// A visualized idempotent matrix: normal idempotent with zero last row. It
/// is the unique representative of a cornered alcoved polytope.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ViMatrix {
    ni: NiMatrix,
}

/// Validates a matrix as normal idempotent, reporting the first violated
/// constraint in scan order: entries row-major (finiteness, zero diagonal,
/// nonpositivity), then idempotency triples `(i, k, j)` meaning the violated
/// inequality `a_ik + a_kj <= a_ij`.
pub fn check_ni(m: TropMatrix) -> Result<NiMatrix, NiError> {
    let n = m.order();
    if n != 4 {
        return Err(NiError::NotOrder4 { n });
    }
    let zero = Rational::from_integer(0.into());
    for i in 0..4 {
        for j in 0..4 {
            let Some(v) = m.get(i, j).finite() else {
                return Err(NiError::NotFinite { i, j });
            };
            if i == j {
                if *v != zero {
                    return Err(NiError::NotNormal { i });
                }
            } else if *v > zero {
                return Err(NiError::NotNonpositive { i, j });
            }
        }
    }
    let entry = |i: usize, j: usize| m.get(i, j).finite().expect("checked finite");
    for i in 0..4 {
        for k in 0..4 {
            for j in 0..4 {
                if entry(i, k) + entry(k, j) > *entry(i, j) {
                    return Err(NiError::NotIdempotent { i, k, j });
                }
            }
        }
    }
    Ok(NiMatrix { m })
}

impl NiMatrix {
    pub fn as_matrix(&self) -> &TropMatrix {
        &self.m
    }

    /// Finite entry `a_ij`.
    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.m.get(i, j).finite().expect("NI matrices are finite")
    }

    pub fn two_minor(&self, i: usize, j: usize, k: usize, l: usize) -> Rational {
        self.m
            .two_minor(i, j, k, l)
            .expect("NI matrices are finite")
    }

    pub fn transpose(&self) -> NiMatrix {
        check_ni(self.m.transpose()).expect("the transpose of an NI matrix is NI")
    }

    pub fn is_visualized(&self) -> bool {
        (0..4).all(|j| *self.entry(3, j) == Rational::from_integer(0.into()))
    }

    /// Conjugation by `diag(row(A, 4))`: entry `(i,j)` becomes
    /// `a_4i + a_ij - a_4j`. The result is visualized idempotent and
    /// represents the cornered translate of the same polytope.
    pub fn visualize(&self) -> ViMatrix {
        let b = self.m.finite_row(3).expect("NI matrices are finite");
        let v = self.m.conjugate(&b).expect("length 4");
        let ni = check_ni(v).expect("the visualization of an NI matrix is NI");
        ViMatrix::try_from(ni).expect("the visualization has zero last row")
    }

    /// The geometric matrix `a_ij - a_4j`, whose columns locate the
    /// generators of the polytope in `R^3`.
    pub fn geometric(&self) -> TropMatrix {
        self.m.geometric().expect("NI matrices are finite")
    }

    /// Difference tuple computed through the box-perturbation decomposition
    /// of the visualization. Agrees with [`NiMatrix::difference_tuple_via_minors`].
    pub fn difference_tuple(&self) -> DifferenceTuple {
        let (_, e) = self.visualize().decompose();
        let d = e.cant_tuple().difference_tuple();
        debug_assert_eq!(d, self.difference_tuple_via_minors());
        d
    }

    /// Difference tuple read directly from 2-minors:
    /// `d_1 = -a_{12;34}`, `d_3 = -a_{31;24}`, `d_5 = -a_{23;14}`,
    /// `d_2 = -a_{14;23}`, `d_4 = -a_{34;12}`, `d_6 = -a_{24;31}`.
    pub fn difference_tuple_via_minors(&self) -> DifferenceTuple {
        DifferenceTuple::new([
            -self.two_minor(0, 1, 2, 3),
            -self.two_minor(0, 3, 1, 2),
            -self.two_minor(2, 0, 1, 3),
            -self.two_minor(2, 3, 0, 1),
            -self.two_minor(1, 2, 0, 3),
            -self.two_minor(1, 3, 2, 0),
        ])
    }

    pub fn cant_tuple(&self) -> CantTuple {
        let (_, e) = self.visualize().decompose();
        e.cant_tuple()
    }
}

impl TryFrom<TropMatrix> for NiMatrix {
    type Error = NiError;
    fn try_from(m: TropMatrix) -> Result<NiMatrix, NiError> {
        check_ni(m)
    }
}

impl TryFrom<NiMatrix> for ViMatrix {
    type Error = NiError;
    fn try_from(ni: NiMatrix) -> Result<ViMatrix, NiError> {
        match ni.is_visualized() {
            true => Ok(ViMatrix { ni }),
            false => Err(NiError::NotVisualized { i: 3 }),
        }
    }
}

impl ViMatrix {
    pub fn as_ni(&self) -> &NiMatrix {
        &self.ni
    }

    pub fn as_matrix(&self) -> &TropMatrix {
        &self.ni.m
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rational {
        self.ni.entry(i, j)
    }

    /// Splits `A = B - E` (classical subtraction) into the bounding box
    /// matrix, read off the last column, and the nonpositive perturbation.
    pub fn decompose(&self) -> (BoxMatrix, PerturbationMatrix) {
        decompose::decompose(self)
    }

    pub fn difference_tuple(&self) -> DifferenceTuple {
        self.ni.difference_tuple()
    }
}

impl fmt::Display for NiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.m.fmt(f)
    }
}

impl fmt::Debug for NiMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NiMatrix:\n{}", self.m)
    }
}

impl fmt::Display for ViMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.ni.fmt(f)
    }
}

impl fmt::Debug for ViMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ViMatrix:\n{}", self.ni.m)
    }
}

/// Whether every entry satisfies `a_ij <= 0` with zero diagonal (normality),
/// regardless of idempotency. Exposed for the column-location diagnostics.
pub fn is_normal(m: &TropMatrix) -> bool {
    let zero = Rational::from_integer(0.into());
    (0..m.order()).all(|i| {
        (0..m.order()).all(|j| match m.get(i, j).finite() {
            Some(v) if i == j => *v == zero,
            Some(v) => *v <= zero,
            None => false,
        })
    })
}
