//! Macaulay i-binomial expansions and their shifted sums.
//!
//! Every `n >= 0` has a unique expansion
//! `n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j)` with
//! `n_i > n_{i-1} > ... > n_j >= j >= 1`. Shifting every top by `b` and
//! every bottom by `a` gives the sums that drive Macaulay's growth bound
//! and Green's restriction bound.

use std::fmt;

use crate::error::{Error, Result};

/// `C(n, k)`, or `None` when the result does not fit in a `u64`.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        // acc == C(n, j) here, and C(n, j) <= C(n, k) for j <= k <= n/2.
        acc = acc.checked_mul(u128::from(n - j))? / u128::from(j + 1);
        if acc > u128::from(u64::MAX) {
            return None;
        }
    }
    u64::try_from(acc).ok()
}

/// Binomial coefficient with the convention `C(m, q) = 0` whenever
/// `m < q` or `q < 0`; `C(m, 0) = 1` for `m >= 0`.
pub fn binomial_signed(m: i64, q: i64) -> Option<u64> {
    if q < 0 || m < q {
        return Some(0);
    }
    binomial(m as u64, q as u64)
}

/// One summand `C(top, bottom)` of an expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BinomialTerm {
    pub top: u64,
    pub bottom: u32,
}

/// Shift applied to an expansion: `a` moves every bottom, `b` every top.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ShiftSpec {
    pub a: i64,
    pub b: i64,
}

impl ShiftSpec {
    pub const IDENTITY: ShiftSpec = ShiftSpec { a: 0, b: 0 };
    /// `(.)_1^1`, Macaulay's maximal growth.
    pub const MACAULAY: ShiftSpec = ShiftSpec { a: 1, b: 1 };
    /// `(.)_0^{-1}`, Green's hyperplane restriction.
    pub const GREEN: ShiftSpec = ShiftSpec { a: 0, b: -1 };

    pub const fn new(a: i64, b: i64) -> Self {
        ShiftSpec { a, b }
    }
}

/// The i-binomial expansion `n_(i)` of a non-negative integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinomialExpansion {
    index: u32,
    terms: Vec<BinomialTerm>,
}

impl BinomialExpansion {
    /// The `i` of `n_(i)`.
    pub fn index(&self) -> u32 {
        self.index
    }

    /// Terms ordered from bottom `i` downwards.
    pub fn terms(&self) -> &[BinomialTerm] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The represented integer.
    pub fn value(&self) -> u64 {
        self.eval_shift(ShiftSpec::IDENTITY)
    }

    /// `(n_(i))_a^b`: the sum of `C(top + b, bottom + a)` over all terms.
    ///
    /// # Panics
    ///
    /// Panics if a shifted coefficient or the sum exceeds `u64::MAX`.
    pub fn eval_shift(&self, shift: ShiftSpec) -> u64 {
        self.try_eval_shift(shift)
            .expect("shifted binomial sum overflows u64")
    }

    /// Like [`eval_shift`](Self::eval_shift) but reports overflow as `None`.
    pub fn try_eval_shift(&self, shift: ShiftSpec) -> Option<u64> {
        self.terms.iter().try_fold(0u64, |acc, t| {
            let top = i64::try_from(t.top).ok()?.checked_add(shift.b)?;
            let bottom = i64::from(t.bottom) + shift.a;
            acc.checked_add(binomial_signed(top, bottom)?)
        })
    }

    /// Checks the structural invariants: consecutive bottoms from `index`
    /// down to some `j >= 1`, strictly decreasing tops, `n_j >= j`.
    pub fn is_well_formed(&self) -> bool {
        let mut expected_bottom = self.index;
        let mut prev_top: Option<u64> = None;
        for t in &self.terms {
            if t.bottom != expected_bottom || t.bottom == 0 || t.top < u64::from(t.bottom) {
                return false;
            }
            if prev_top.is_some_and(|p| p <= t.top) {
                return false;
            }
            prev_top = Some(t.top);
            expected_bottom -= 1;
        }
        true
    }
}

impl fmt::Display for BinomialExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, t) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "C({},{})", t.top, t.bottom)?;
        }
        Ok(())
    }
}

/// Largest `top` with `C(top, k) <= target`, given `target >= 1`.
fn largest_top(target: u64, k: u32) -> u64 {
    let k64 = u64::from(k);
    let fits = |top: u64| binomial(top, k64).is_some_and(|c| c <= target);
    // C(k, k) = 1 <= target, so `lo` always fits.
    let mut lo = k64;
    let mut step = 1u64;
    let mut hi = loop {
        let probe = lo.saturating_add(step);
        if probe == lo || !fits(probe) {
            break probe;
        }
        lo = probe;
        step = step.saturating_mul(2);
    };
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if fits(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    lo
}

/// Greedy i-binomial expansion of `n`.
pub fn expand(n: u64, i: u32) -> Result<BinomialExpansion> {
    if i == 0 {
        return Err(Error::ZeroIndex(i));
    }
    let mut terms = Vec::new();
    let mut rest = n;
    let mut bottom = i;
    while rest > 0 && bottom > 0 {
        let top = largest_top(rest, bottom);
        rest -= binomial(top, u64::from(bottom)).expect("fits by construction");
        terms.push(BinomialTerm { top, bottom });
        bottom -= 1;
    }
    debug_assert_eq!(rest, 0, "bottom 1 absorbs any remainder");
    Ok(BinomialExpansion { index: i, terms })
}

/// `((h)_(d))_1^1`: the largest admissible `h_{d+1}` after `h_d = h`.
pub fn macaulay_bound(h: u64, d: u32) -> Result<u64> {
    Ok(expand(h, d)?.eval_shift(ShiftSpec::MACAULAY))
}

/// `((h)_(d))_0^{-1}`: the largest degree-`d` dimension left after
/// quotienting by a general linear form.
pub fn green_bound(h: u64, d: u32) -> Result<u64> {
    Ok(expand(h, d)?.eval_shift(ShiftSpec::GREEN))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Every strictly decreasing binomial sum with bottoms i, i-1, ..., j
    /// and tops at most `max_top` that adds up to `n`.
    fn all_expansions(n: u64, i: u32, max_top: u64) -> Vec<Vec<(u64, u32)>> {
        fn go(
            rest: u64,
            bottom: u32,
            top_cap: u64,
            acc: &mut Vec<(u64, u32)>,
            out: &mut Vec<Vec<(u64, u32)>>,
        ) {
            if rest == 0 {
                if !acc.is_empty() {
                    out.push(acc.clone());
                }
                return;
            }
            if bottom == 0 {
                return;
            }
            for top in u64::from(bottom)..=top_cap {
                let c = binomial(top, u64::from(bottom)).unwrap();
                if c > rest {
                    break;
                }
                acc.push((top, bottom));
                go(rest - c, bottom - 1, top.saturating_sub(1), acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        go(n, i, max_top, &mut Vec::new(), &mut out);
        out
    }

    fn pairs(e: &BinomialExpansion) -> Vec<(u64, u32)> {
        e.terms().iter().map(|t| (t.top, t.bottom)).collect()
    }

    #[test]
    fn binomial_small_values() {
        assert_eq!(binomial(5, 2), Some(10));
        assert_eq!(binomial(0, 0), Some(1));
        assert_eq!(binomial(3, 4), Some(0));
        assert_eq!(binomial(67, 33), Some(14_226_520_737_620_288_370));
        assert_eq!(binomial(100, 50), None);
        assert_eq!(binomial_signed(-1, 0), Some(0));
        assert_eq!(binomial_signed(4, -1), Some(0));
        assert_eq!(binomial_signed(0, 0), Some(1));
    }

    #[test]
    fn expand_matches_exhaustive_oracle() {
        let found = all_expansions(13, 3, 13);
        assert_eq!(found, vec![vec![(5, 3), (3, 2)]]);
        assert_eq!(pairs(&expand(13, 3).unwrap()), found[0]);

        let found = all_expansions(9, 3, 13);
        assert_eq!(found, vec![vec![(4, 3), (3, 2), (2, 1)]]);
        assert_eq!(pairs(&expand(9, 3).unwrap()), found[0]);

        for n in 1..=60 {
            for i in 1..=5 {
                let found = all_expansions(n, i, n + u64::from(i));
                assert_eq!(found.len(), 1, "n={n} i={i}");
                assert_eq!(pairs(&expand(n, i).unwrap()), found[0]);
            }
        }
    }

    #[test]
    fn expand_edge_cases() {
        assert!(expand(0, 4).unwrap().is_empty());
        assert_eq!(expand(0, 4).unwrap().eval_shift(ShiftSpec::MACAULAY), 0);
        assert_eq!(pairs(&expand(10, 2).unwrap()), vec![(5, 2)]);
        assert_eq!(expand(5, 0), Err(Error::ZeroIndex(0)));
        assert_eq!(expand(13, 3).unwrap().to_string(), "C(5,3) + C(3,2)");
        let big = expand(1_000_000_000, 1).unwrap();
        assert_eq!(pairs(&big), vec![(1_000_000_000, 1)]);
        let big = expand(1_000_000_000, 12).unwrap();
        assert!(big.is_well_formed());
        assert_eq!(big.value(), 1_000_000_000);
    }

    #[test]
    fn shifted_sums() {
        let e = expand(13, 3).unwrap();
        assert_eq!(e.eval_shift(ShiftSpec::new(-1, -1)), 8);
        assert_eq!(e.eval_shift(ShiftSpec::new(-1, -2)), 4);
        assert_eq!(e.eval_shift(ShiftSpec::IDENTITY), 13);
    }

    #[test]
    fn macaulay_and_green() {
        assert_eq!(macaulay_bound(3, 1).unwrap(), 6);
        assert_eq!(macaulay_bound(5, 2).unwrap(), 7);
        for d in 1..8 {
            assert_eq!(macaulay_bound(0, d).unwrap(), 0);
            assert_eq!(green_bound(1, d).unwrap(), 0);
        }
        assert_eq!(green_bound(13, 3).unwrap(), 5);
        assert_eq!(green_bound(10, 3).unwrap(), 4);
        assert_eq!(macaulay_bound(3, 0), Err(Error::ZeroIndex(0)));
        assert_eq!(green_bound(3, 0), Err(Error::ZeroIndex(0)));
    }

    #[test]
    fn roundtrip_and_pascal_complement() {
        for n in 0..=10_000u64 {
            for i in 1..=12 {
                let e = expand(n, i).unwrap();
                assert!(e.is_well_formed(), "n={n} i={i}");
                assert_eq!(e.value(), n);
                if n > 0 {
                    let g = green_bound(n, i).unwrap();
                    assert_eq!(g + e.eval_shift(ShiftSpec::new(-1, -1)), n);
                }
            }
        }
    }

    #[test]
    fn macaulay_bound_strictly_increasing() {
        for d in 1..=8 {
            let mut prev = macaulay_bound(0, d).unwrap();
            for m in 1..=3000 {
                let cur = macaulay_bound(m, d).unwrap();
                assert!(cur > prev, "d={d} m={m}");
                prev = cur;
            }
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn large_inputs_roundtrip(n in 0u64..=1_000_000_000, i in 1u32..=12) {
                let e = expand(n, i).unwrap();
                prop_assert!(e.is_well_formed());
                prop_assert_eq!(e.value(), n);
            }
        }
    }
}
