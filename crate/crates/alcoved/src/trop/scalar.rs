//! Scalars of the max-plus semiring: exact rationals extended by `-inf`.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number. All arithmetic in this crate is exact; the
/// classification depends on exact signs, so floating point is never used.
pub type Rational = BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the [`Rational`] `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of the max-plus semiring: a finite rational or the neutral
/// element `-inf` of tropical addition.
///
/// Tropical addition is `max` and tropical multiplication is classical `+`,
/// with `-inf` as the absorbing element of multiplication. The variant order
/// makes `NegInf` compare below every finite value, so `Ord` agrees with the
/// semiring order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TropScalar {
    NegInf,
    Finite(Rational),
}

impl TropScalar {
    /// The neutral element of tropical addition.
    pub const NEG_INF: TropScalar = TropScalar::NegInf;

    /// The neutral element of tropical multiplication (classical zero).
    pub fn zero() -> TropScalar {
        TropScalar::Finite(Rational::from_integer(BigInt::from(0)))
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            TropScalar::NegInf => None,
            TropScalar::Finite(r) => Some(r),
        }
    }

    pub fn is_neg_inf(&self) -> bool {
        matches!(self, TropScalar::NegInf)
    }

    /// Tropical addition, `x (+) y = max(x, y)`.
    pub fn trop_add(&self, other: &TropScalar) -> TropScalar {
        std::cmp::max(self, other).clone()
    }

    /// Tropical multiplication, `x (*) y = x + y`, with `-inf` absorbing.
    pub fn trop_mul(&self, other: &TropScalar) -> TropScalar {
        match (self, other) {
            (TropScalar::Finite(a), TropScalar::Finite(b)) => TropScalar::Finite(a + b),
            _ => TropScalar::NegInf,
        }
    }
}

impl From<Rational> for TropScalar {
    fn from(r: Rational) -> Self {
        TropScalar::Finite(r)
    }
}

impl From<i64> for TropScalar {
    fn from(n: i64) -> Self {
        TropScalar::Finite(rat(n))
    }
}

/// `+` is tropical addition: `a + b = max(a, b)`.
impl Add for TropScalar {
    type Output = TropScalar;
    fn add(self, rhs: TropScalar) -> TropScalar {
        self.trop_add(&rhs)
    }
}

/// `*` is tropical multiplication: `a * b` is classical `a + b`.
impl Mul for TropScalar {
    type Output = TropScalar;
    fn mul(self, rhs: TropScalar) -> TropScalar {
        self.trop_mul(&rhs)
    }
}

impl fmt::Display for TropScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropScalar::NegInf => write!(f, "-inf"),
            TropScalar::Finite(r) => write!(f, "{r}"),
        }
    }
}
