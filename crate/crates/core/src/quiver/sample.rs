//! Seeded sampling of integer representations.
//!
//! Each representation comes from its own ChaCha8 stream
//! (`rand_chacha::ChaCha8Rng::seed_from_u64(seed)` with `set_stream(stream)`),
//! drawing twelve integers uniformly from `[-bound, bound]` via
//! `Rng::gen_range`, in the order Y1, Y2, Y3, each row-major. Batch results
//! therefore do not depend on how the work is split across threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::rep::Rep22;
use super::stability::{stability_class, StabilityClass};
use crate::error::{Error, Result};
use crate::exact::rat;

fn check_bound(bound: u64) -> Result<i64> {
    if bound == 0 || bound > i64::MAX as u64 {
        return Err(Error::Range(format!("bound must be in 1..=i64::MAX, got {bound}")));
    }
    Ok(bound as i64)
}

/// Stream 0 of [`random_rep_stream`].
pub fn random_rep(seed: u64, bound: u64) -> Result<Rep22> {
    random_rep_stream(seed, 0, bound)
}

pub fn random_rep_stream(seed: u64, stream: u64, bound: u64) -> Result<Rep22> {
    let b = check_bound(bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    let coords: Vec<_> = (0..12).map(|_| rat(rng.gen_range(-b..=b))).collect();
    Rep22::from_coordinates(&coords)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StrataCounts {
    pub stable: u64,
    pub strictly_semistable: u64,
    pub unstable: u64,
}

impl StrataCounts {
    pub fn total(&self) -> u64 {
        self.stable + self.strictly_semistable + self.unstable
    }

    fn add(self, o: StrataCounts) -> StrataCounts {
        StrataCounts {
            stable: self.stable + o.stable,
            strictly_semistable: self.strictly_semistable + o.strictly_semistable,
            unstable: self.unstable + o.unstable,
        }
    }
}

/// Classifies streams `0..count` of `seed`.
pub fn sample_strata(seed: u64, count: u64, bound: u64) -> Result<StrataCounts> {
    check_bound(bound)?;
    let counts = (0..count)
        .into_par_iter()
        .map(|i| {
            let r = random_rep_stream(seed, i, bound).expect("bound checked");
            let mut c = StrataCounts::default();
            match stability_class(&r) {
                StabilityClass::Stable => c.stable = 1,
                StabilityClass::StrictlySemistable(_) => c.strictly_semistable = 1,
                StabilityClass::Unstable(_) => c.unstable = 1,
            }
            c
        })
        .reduce(StrataCounts::default, StrataCounts::add);
    Ok(counts)
}
