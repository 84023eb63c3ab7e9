//! Scalar abstraction for the exact linear-algebra layer.

use std::fmt::Debug;

use num_traits::{FromPrimitive, Num, Signed};

/// Field scalar for row reduction, kernels and graded slices.
///
/// Any `num-traits` field-like type qualifies (`Ratio<i64>`, `f64`, ...),
/// but the correctness contract of this crate (exact equality of slices,
/// facet offsets, lengths) is only met by exact types. All shipped entry
/// points instantiate with [`crate::Q`].
pub trait Scalar: Num + Signed + FromPrimitive + Clone + PartialOrd + Debug {}

impl<T: Num + Signed + FromPrimitive + Clone + PartialOrd + Debug> Scalar for T {}

/// Binomial coefficient as `u64`; desk-scale arguments only.
pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
