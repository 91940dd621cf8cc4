//! The covering regions `R_1, ..., R_n` of `R^{n-1}` that locate the columns
//! of a geometric matrix.

use num_traits::Signed;

use crate::trop::Point;

/// Membership in region `R_{j+1}` of `R^d` (0-based `j`, `0 <= j <= d`):
/// for `j < d` the region where `x_j >= 0` dominates every coordinate, for
/// `j == d` the nonpositive orthant.
pub fn in_region(x: &Point, j: usize) -> bool {
    let d = x.dim();
    if j == d {
        return x.coords().iter().all(|c| !c.is_positive());
    }
    !x.get(j).is_negative() && x.coords().iter().all(|c| c <= x.get(j))
}

/// The smallest `j` (0-based) with `x` in `R_{j+1}`. Total, because the
/// regions cover `R^d`.
pub fn region_of(x: &Point) -> usize {
    (0..=x.dim())
        .find(|&j| in_region(x, j))
        .expect("the regions cover the whole space")
}
