//! Seeded deterministic generator for general coefficients.
//!
//! SplitMix64 is hand-rolled so that identical seeds produce identical
//! reductions on every platform and toolchain, independent of any external
//! RNG crate's versioning.

#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform integer in `[-bound, bound]`.
    pub fn coeff(&mut self, bound: i64) -> i64 {
        let span = (2 * bound + 1) as u64;
        (self.next_u64() % span) as i64 - bound
    }
}
