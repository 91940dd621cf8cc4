//! Benchmark-only crate; see `benches/pipeline.rs`.
//!
//! Small input helpers shared by the benchmarks live here.

use alcoved::ni::{check_ni, NiMatrix};
use alcoved::trop::{ratio, TropMatrix, TropScalar};

/// A deterministic batch of normal idempotent matrices: path closures of a
/// simple linear-congruential stream of nonpositive rationals.
pub fn matrix_batch(count: usize) -> Vec<NiMatrix> {
    let mut state: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut next = || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    (0..count)
        .map(|_| {
            let rows: Vec<Vec<TropScalar>> = (0..4)
                .map(|i| {
                    (0..4)
                        .map(|j| {
                            if i == j {
                                TropScalar::zero()
                            } else {
                                let den = next().rem_euclid(3) + 1;
                                let num = -(next().rem_euclid(12 * den + 1));
                                TropScalar::Finite(ratio(num, den))
                            }
                        })
                        .collect()
                })
                .collect();
            let w = TropMatrix::from_rows(rows).unwrap();
            let w3 = w.trop_mul(&w).unwrap().trop_mul(&w).unwrap();
            check_ni(w3).expect("path closure is NI")
        })
        .collect()
}
