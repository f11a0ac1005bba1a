//! Seeded, splittable sampling: every shard draws from its own ChaCha stream
//! so results do not depend on thread scheduling.

use num::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::Rational;

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Uniform draw from `{lo, lo + 1/denom, ..., hi}`.
pub fn grid_rational<R: Rng>(rng: &mut R, lo: i64, hi: i64, denom: i64) -> Rational {
    let k = rng.gen_range(lo * denom..=hi * denom);
    Rational::new(BigInt::from(k), BigInt::from(denom))
}

pub fn grid_point<R: Rng>(rng: &mut R, len: usize, lo: i64, hi: i64, denom: i64) -> Vec<Rational> {
    (0..len)
        .map(|_| grid_rational(rng, lo, hi, denom))
        .collect()
}
