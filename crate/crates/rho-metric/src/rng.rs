//! Seeded, splittable random streams.
//!
//! Every sampling routine in this crate takes an explicit generator, and
//! suites derive one independent stream per sample index. Splitting by
//! stream id (rather than sequential draws) keeps results identical under
//! any parallel schedule.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The generator used throughout the crate.
pub type Rng = ChaCha8Rng;

/// Root generator for a seed.
pub fn root(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream `index` of the generator family identified by `seed`.
///
/// Streams with distinct indices never overlap, so a per-sample stream can
/// be replayed in isolation.
pub fn substream(seed: u64, index: u64) -> Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng as _;

    #[test]
    fn substreams_are_independent_and_reproducible() {
        let a: Vec<u64> = (0..4).map(|i| substream(7, i).gen()).collect();
        let b: Vec<u64> = (0..4).map(|i| substream(7, i).gen()).collect();
        assert_eq!(a, b);
        // distinct indices give distinct draws
        assert!(a.windows(2).all(|w| w[0] != w[1]));
        // distinct seeds give distinct draws
        assert_ne!(substream(7, 0).gen::<u64>(), substream(8, 0).gen::<u64>());
    }
}
