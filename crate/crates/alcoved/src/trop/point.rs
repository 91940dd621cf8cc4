//! Points with exact rational coordinates and the tropical distance.

use std::fmt;

use num_traits::{Signed, Zero};
use thiserror::Error;

use super::scalar::{rat, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("point dimensions differ: {left} vs {right}")]
pub struct DimensionMismatch {
    pub left: usize,
    pub right: usize,
}

/// A point of `R^d` with finite rational coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Point {
        Point(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Point {
        Point(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn get(&self, k: usize) -> &Rational {
        &self.0[k]
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Tropical distance `dd(p, q) = max_{i,j} { |p_i - q_i|, |p_i - q_i - p_j + q_j| }`.
///
/// On points with integer coordinates this is an integer. It satisfies the
/// metric axioms and measures tropical edge-lengths.
pub fn trop_distance(p: &Point, q: &Point) -> Result<Rational, DimensionMismatch> {
    if p.dim() != q.dim() {
        return Err(DimensionMismatch {
            left: p.dim(),
            right: q.dim(),
        });
    }
    let diffs: Vec<Rational> = p.0.iter().zip(&q.0).map(|(a, b)| a - b).collect();
    let mut best = Rational::zero();
    for d in &diffs {
        best = best.max(d.abs());
    }
    if let (Some(max), Some(min)) = (diffs.iter().max(), diffs.iter().min()) {
        best = best.max(max - min);
    }
    Ok(best)
}
