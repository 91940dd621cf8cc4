//! Shared helpers for the integration suites: seeded random normal
//! idempotent matrices via the max-plus path closure.
#![allow(dead_code)] // each test binary uses a different subset

use alcoved::ni::{check_ni, NiMatrix, ViMatrix};
use alcoved::trop::{ratio, TropMatrix, TropScalar};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random nonpositive zero-diagonal matrix with small rational entries.
pub fn random_nonpositive(rng: &mut ChaCha8Rng) -> TropMatrix {
    let rows: Vec<Vec<TropScalar>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    if i == j {
                        TropScalar::zero()
                    } else {
                        let den = rng.random_range(1..=3i64);
                        let num = rng.random_range(-12 * den..=0);
                        TropScalar::Finite(ratio(num, den))
                    }
                })
                .collect()
        })
        .collect();
    TropMatrix::from_rows(rows).unwrap()
}

/// Random normal idempotent matrix: the strongest-path closure of a random
/// nonpositive matrix. With a zero diagonal and nonpositive cycle weights,
/// the third tropical power is the closure and is idempotent.
pub fn random_ni(rng: &mut ChaCha8Rng) -> NiMatrix {
    let w = random_nonpositive(rng);
    let w2 = w.trop_mul(&w).unwrap();
    let w3 = w2.trop_mul(&w).unwrap();
    check_ni(w3).expect("the path closure of a nonpositive zero-diagonal matrix is NI")
}

pub fn random_vi(rng: &mut ChaCha8Rng) -> ViMatrix {
    random_ni(rng).visualize()
}
