//! Shared inputs for the criterion benches.

use hvector_core::HVector;

/// Symmetric vectors `(1, r, v, r, 1)` straddling the lower bound, for
/// timing the decomposition filter on both verdicts.
pub fn filter_inputs() -> Vec<HVector> {
    (10..=20u64)
        .flat_map(|r| {
            let lower = hvector_core::lower_bound(r, 4).expect("r >= 2").lower;
            [lower - 1, lower, lower + 1].map(|v| HVector::new(vec![1, r, v, r, 1]))
        })
        .collect()
}
