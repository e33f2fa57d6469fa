//! Fixtures shared by the criterion benches.

use quivmod::quiver::{extension_rep, random_rep_stream, LinePoint, Rep22};
use quivmod::exact::rat;

/// `n` seeded integer representations with entries in `[-10, 10]`.
pub fn generic_reps(n: u64) -> Vec<Rep22> {
    (0..n).map(|i| random_rep_stream(7, i, 10).expect("positive bound")).collect()
}

/// Non-split extensions of two integer lines.
pub fn extension_reps(n: i64) -> Vec<Rep22> {
    (1..=n)
        .map(|k| {
            let a = LinePoint::from_ints([1, k, -2]).expect("nonzero");
            let b = LinePoint::from_ints([k, 3, 1]).expect("nonzero");
            extension_rep(&a, &b, &[rat(k), rat(1), rat(-k)])
        })
        .collect()
}
