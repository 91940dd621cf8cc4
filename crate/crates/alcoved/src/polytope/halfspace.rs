//! The twelve-inequality halfspace description of an alcoved polyhedron.

use std::fmt;

use num_traits::Zero;

use crate::ni::NiMatrix;
use crate::trop::{Point, Rational};

/// Identifies one inequality as an off-diagonal index pair `(row, col)` of
/// the defining matrix: the constraint is `x_row - x_col >= a_{row,col}`,
/// reading `x_3 = 0`. Pairs with `col == 3` are lower bounds `x_i >= a_i4`,
/// pairs with `row == 3` are upper bounds `x_j <= -a_4j`, and pairs inside
/// `{0,1,2}` bound the differences `x_i - x_j`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ConstraintId {
    pub row: usize,
    pub col: usize,
}

/// Fixed enumeration order of the twelve constraints; bitmask positions and
/// all iteration orders follow it.
pub const CONSTRAINT_IDS: [ConstraintId; 12] = {
    let mut ids = [ConstraintId { row: 0, col: 0 }; 12];
    let mut idx = 0;
    let mut row = 0;
    while row < 4 {
        let mut col = 0;
        while col < 4 {
            if row != col {
                ids[idx] = ConstraintId { row, col };
                idx += 1;
            }
            col += 1;
        }
        row += 1;
    }
    ids
};

impl ConstraintId {
    pub fn index(&self) -> usize {
        CONSTRAINT_IDS
            .iter()
            .position(|id| id == self)
            .expect("off-diagonal pair")
    }
}

/// One inequality `coeffs . x >= rhs` over `(x_1, x_2, x_3)`.
#[derive(Clone, Debug)]
pub struct Constraint {
    pub id: ConstraintId,
    pub coeffs: [Rational; 3],
    pub rhs: Rational,
}

impl Constraint {
    pub fn slack(&self, p: &Point) -> Rational {
        let mut acc = -self.rhs.clone();
        for k in 0..3 {
            if !self.coeffs[k].is_zero() {
                acc += &self.coeffs[k] * p.get(k);
            }
        }
        acc
    }

    pub fn satisfies(&self, p: &Point) -> bool {
        self.slack(p) >= Rational::zero()
    }

    pub fn is_tight(&self, p: &Point) -> bool {
        self.slack(p).is_zero()
    }

    /// The facet plane equation in conventional coordinates.
    pub fn plane_equation(&self) -> String {
        let ConstraintId { row, col } = self.id;
        match (row, col) {
            (i, 3) => format!("x{} = {}", i + 1, self.rhs),
            (3, j) => format!("x{} = {}", j + 1, -self.rhs.clone()),
            (i, j) => format!("x{} - x{} = {}", i + 1, j + 1, self.rhs),
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ConstraintId { row, col } = self.id;
        match (row, col) {
            (i, 3) => write!(f, "x{} >= {}", i + 1, self.rhs),
            (3, j) => write!(f, "x{} <= {}", j + 1, -self.rhs.clone()),
            (i, j) => write!(f, "x{} - x{} >= {}", i + 1, j + 1, self.rhs),
        }
    }
}

/// The complete system of twelve inequalities cut out by a normal idempotent
/// matrix: `a_k4 <= x_k <= -a_4k` and `a_ij <= x_i - x_j <= -a_ji`. For NI
/// input every inequality is attained on the polytope.
#[derive(Clone, Debug)]
pub struct HalfspaceSystem {
    constraints: Vec<Constraint>,
}

/// Builds the halfspace description of `P(A)`.
pub fn halfspaces(a: &NiMatrix) -> HalfspaceSystem {
    let constraints = CONSTRAINT_IDS
        .iter()
        .map(|&id| {
            let mut coeffs = [Rational::zero(), Rational::zero(), Rational::zero()];
            if id.row < 3 {
                coeffs[id.row] += Rational::from_integer(1.into());
            }
            if id.col < 3 {
                coeffs[id.col] -= Rational::from_integer(1.into());
            }
            Constraint {
                id,
                coeffs,
                rhs: a.entry(id.row, id.col).clone(),
            }
        })
        .collect();
    HalfspaceSystem { constraints }
}

impl HalfspaceSystem {
    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn constraint(&self, id: ConstraintId) -> &Constraint {
        &self.constraints[id.index()]
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.constraints.iter().all(|c| c.satisfies(p))
    }

    /// Bounds of `x_k` as the interval `[a_k4, -a_4k]`.
    pub fn coordinate_bounds(&self, k: usize) -> (Rational, Rational) {
        let lo = self.constraint(ConstraintId { row: k, col: 3 }).rhs.clone();
        let hi = -self.constraint(ConstraintId { row: 3, col: k }).rhs.clone();
        (lo, hi)
    }

    /// Bounds of `x_i - x_j` as the interval `[a_ij, -a_ji]`.
    pub fn difference_bounds(&self, i: usize, j: usize) -> (Rational, Rational) {
        let lo = self.constraint(ConstraintId { row: i, col: j }).rhs.clone();
        let hi = -self.constraint(ConstraintId { row: j, col: i }).rhs.clone();
        (lo, hi)
    }
}
