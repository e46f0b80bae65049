//! Small deterministic RNG for the randomized solver.
//!
//! SplitMix64, written in 2015 by Sebastiano Vigna (public domain),
//! <https://xoshiro.di.unimi.it/splitmix64.c>. Good enough statistically
//! for coin flips and tiny enough to keep the crate dependency free.

/// SplitMix64 stream.
#[derive(Debug, Clone)]
pub struct SplitMix64(u64);

#[inline]
fn mix(mut x: u64) -> u64 {
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self(seed)
    }

    /// Stream for iteration `index` of a search seeded with `seed`.
    /// Distinct indices give statistically independent streams.
    pub fn for_stream(seed: u64, index: u64) -> Self {
        Self(mix(seed ^ mix(index.wrapping_add(0x9e37_79b9_7f4a_7c15))))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        mix(self.0)
    }

    /// Uniform value in `0..bound` (`bound > 0`), rejection sampled.
    pub fn below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let reject = (u64::MAX - bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v >= reject {
                return v % bound;
            }
        }
    }

    /// Bernoulli trial with exact probability `num / den`.
    pub fn bernoulli(&mut self, num: u64, den: u64) -> bool {
        debug_assert!(den > 0 && num <= den);
        if num == den {
            return true;
        }
        self.below(den) < num
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_differ() {
        let a: alloc::vec::Vec<u64> = {
            let mut r = SplitMix64::for_stream(7, 0);
            (0..8).map(|_| r.next_u64()).collect()
        };
        let b: alloc::vec::Vec<u64> = {
            let mut r = SplitMix64::for_stream(7, 1);
            (0..8).map(|_| r.next_u64()).collect()
        };
        assert_ne!(a, b);
        let a2: alloc::vec::Vec<u64> = {
            let mut r = SplitMix64::for_stream(7, 0);
            (0..8).map(|_| r.next_u64()).collect()
        };
        assert_eq!(a, a2);
    }

    #[test]
    fn bernoulli_degenerate() {
        let mut r = SplitMix64::new(1);
        for _ in 0..100 {
            assert!(r.bernoulli(1, 1));
            assert!(!r.bernoulli(0, 5));
        }
    }

    #[test]
    fn below_is_in_range() {
        let mut r = SplitMix64::new(99);
        for bound in 1..50u64 {
            for _ in 0..100 {
                assert!(r.below(bound) < bound);
            }
        }
    }
}
