//! Deterministic random number generation.
//!
//! Every random draw in this crate flows through [`SplitMix64`], so that a
//! 64-bit seed fully determines filter banks, datasets, parameter
//! initialization, and batch order — bit for bit, across platforms.
//!
//! The generator is the standard SplitMix64 scheme: the state advances by the
//! 64-bit golden-ratio constant `0x9E3779B97F4A7C15` and each output is the
//! finalizer
//!
//! ```text
//! z  = state
//! z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//! z ^= z >> 27;  z *= 0x94D049BB133111EB
//! out = z ^ (z >> 31)
//! ```
//!
//! Uniform doubles take the top 53 bits: `(out >> 11) * 2^-53`, giving values
//! in `[0, 1)`. Normal deviates use the Box–Muller transform on two uniforms.
//!
//! Independent sub-streams are derived as
//! `stream(seed, tag) = SplitMix64::new(mix(seed ^ mix(tag)))` where `mix` is
//! the finalizer above; string tags are folded to a `u64` with FNV-1a. The
//! derivation is pure, so stream layouts never depend on call order.

const GOLDEN: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 finalizer; also used as the seed/tag mixer.
fn mix(mut z: u64) -> u64 {
    z ^= z >> 30;
    z = z.wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z ^= z >> 27;
    z = z.wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// FNV-1a over a byte string, for deriving streams from parameter names.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01B3);
    }
    h
}

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// A named sub-stream of `seed`, independent of any draws made so far.
    pub fn stream(seed: u64, tag: u64) -> Self {
        SplitMix64::new(mix(seed ^ mix(tag)))
    }

    /// Like [`SplitMix64::stream`] with a string tag (FNV-1a folded).
    pub fn stream_named(seed: u64, tag: &str) -> Self {
        SplitMix64::stream(seed, fnv1a(tag.as_bytes()))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN);
        mix(self.state)
    }

    /// Uniform in `[0, 1)` with 53 bits of precision.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in `[0, n)`. Modulo bias is negligible for n << 2^64.
    pub fn next_index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    /// Standard normal deviate via Box–Muller (cosine branch).
    pub fn normal(&mut self) -> f64 {
        // 1 - u in (0, 1] keeps the log argument strictly positive.
        let u1 = 1.0 - self.next_f64();
        let u2 = self.next_f64();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    }

    /// Fisher–Yates shuffle, in place.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_index(i + 1);
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_sequence() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
    }

    #[test]
    fn streams_are_independent_of_draw_order() {
        let s1 = SplitMix64::stream(7, 1).next_u64();
        let mut root = SplitMix64::new(7);
        root.next_u64();
        let s1_again = SplitMix64::stream(7, 1).next_u64();
        assert_eq!(s1, s1_again);
        assert_ne!(s1, root.next_u64());
    }

    #[test]
    fn uniform_range_and_normal_moments() {
        let mut rng = SplitMix64::new(3);
        for _ in 0..1000 {
            let u = rng.next_f64();
            assert!((0.0..1.0).contains(&u));
        }
        let n = 20_000;
        let mut sum = 0.0;
        let mut sq = 0.0;
        for _ in 0..n {
            let z = rng.normal();
            sum += z;
            sq += z * z;
        }
        let mean = sum / n as f64;
        let var = sq / n as f64 - mean * mean;
        assert!(mean.abs() < 0.03, "mean {mean}");
        assert!((var - 1.0).abs() < 0.05, "var {var}");
    }

    #[test]
    fn shuffle_is_a_permutation() {
        let mut rng = SplitMix64::new(11);
        let mut v: Vec<usize> = (0..50).collect();
        rng.shuffle(&mut v);
        let mut sorted = v.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..50).collect::<Vec<_>>());
    }
}
