//! Shared inputs for the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sharpmean_core::PositivePair;

/// `n` pairs `(b (1 + 10^e), b)` with `b = 10^x`, `x` uniform in `[-6, 6]`
/// and `e` uniform in `[-6, 6]`, from a fixed seed.
pub fn sample_pairs(n: usize, seed: u64) -> Vec<PositivePair> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let b = 10f64.powf(rng.gen_range(-6.0..6.0));
            let a = b * (1.0 + 10f64.powf(rng.gen_range(-6.0..6.0)));
            PositivePair::new(a, b).expect("positive")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_distinct() {
        let a = sample_pairs(100, 7);
        assert_eq!(a, sample_pairs(100, 7));
        assert!(a.iter().all(|p| p.a() > p.b()));
    }
}
