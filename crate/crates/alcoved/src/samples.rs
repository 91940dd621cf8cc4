//! Reference matrices used across tests, docs and the command line: the
//! eight quasi-Euclidean class representatives, the unit cube in centered
//! and cornered position, and single-cant boxes.

use crate::ni::{check_ni, NiError, NiMatrix, ViMatrix};
use crate::trop::TropMatrix;

/// The visualized representative of quasi-Euclidean class `k` (1 through 8).
/// Every one is a maximal alcoved dodecahedron whose bounding box is the
/// cube of edge length 8.
///
/// Panics if `k` is out of range.
pub fn class_representative(k: usize) -> ViMatrix {
    let rows: [[i64; 4]; 4] = match k {
        1 => [
            [0, -4, -5, -8],
            [-3, 0, -6, -8],
            [-4, -5, 0, -8],
            [0, 0, 0, 0],
        ],
        2 => [
            [0, -4, -5, -8],
            [-3, 0, -6, -8],
            [-2, -3, 0, -8],
            [0, 0, 0, 0],
        ],
        3 => [
            [0, -5, -6, -8],
            [-4, 0, -5, -8],
            [-3, -4, 0, -8],
            [0, 0, 0, 0],
        ],
        4 => [
            [0, -4, -5, -8],
            [-5, 0, -6, -8],
            [-4, -5, 0, -8],
            [0, 0, 0, 0],
        ],
        5 => [
            [0, -5, -6, -8],
            [-6, 0, -5, -8],
            [-5, -4, 0, -8],
            [0, 0, 0, 0],
        ],
        6 => [
            [0, -6, -5, -8],
            [-5, 0, -6, -8],
            [-6, -5, 0, -8],
            [0, 0, 0, 0],
        ],
        7 => [
            [0, -5, -6, -8],
            [-2, 0, -7, -8],
            [-3, -4, 0, -8],
            [0, 0, 0, 0],
        ],
        8 => [
            [0, -4, -5, -8],
            [-3, 0, -6, -8],
            [-4, -3, 0, -8],
            [0, 0, 0, 0],
        ],
        other => panic!("class index {other} out of range 1..=8"),
    };
    vi_from_rows(rows)
}

/// The unit cube of edge length 2 centered at the origin: normal idempotent
/// but not visualized.
pub fn centered_cube() -> NiMatrix {
    let m = TropMatrix::from_int_rows(&[
        &[0, -2, -2, -1],
        &[-2, 0, -2, -1],
        &[-2, -2, 0, -1],
        &[-1, -1, -1, 0],
    ]);
    check_ni(m).expect("the centered cube matrix is NI")
}

/// The cornered cube of edge length 2 (the visualization of
/// [`centered_cube`]).
pub fn cornered_cube() -> ViMatrix {
    let m = TropMatrix::from_int_rows(&[
        &[0, -2, -2, -2],
        &[-2, 0, -2, -2],
        &[-2, -2, 0, -2],
        &[0, 0, 0, 0],
    ]);
    ViMatrix::try_from(check_ni(m).expect("the cornered cube matrix is NI")).expect("zero last row")
}

/// A box with edge lengths `|t_1|, |t_2|, |t_3|` whose top front edge has
/// been canted by the nonpositive parameter `e23` (pass `0` for the plain
/// box). Fails when the parameters do not produce a normal idempotent
/// matrix, e.g. when `|e23| > min(|t_2|, |t_3|)`.
pub fn one_cant(t: [i64; 3], e23: i64) -> Result<ViMatrix, NiError> {
    let m = TropMatrix::from_int_rows(&[
        &[0, t[0], t[0], t[0]],
        &[t[1], 0, t[1] - e23, t[1]],
        &[t[2], t[2], 0, t[2]],
        &[0, 0, 0, 0],
    ]);
    ViMatrix::try_from(check_ni(m)?)
}

fn vi_from_rows(rows: [[i64; 4]; 4]) -> ViMatrix {
    let slices: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let m = TropMatrix::from_int_rows(&slices);
    ViMatrix::try_from(check_ni(m).expect("sample matrices are NI"))
        .expect("sample matrices are visualized")
}
