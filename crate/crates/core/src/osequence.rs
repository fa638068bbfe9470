//! h-vectors, O-sequence validation and unimodality.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use crate::binomial::macaulay_bound;
use crate::error::{Error, Result};

/// A finite tuple `(h_0, ..., h_e)` of non-negative integers. Entries past
/// the end are implicitly zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HVector(Vec<u64>);

impl HVector {
    pub fn new(entries: Vec<u64>) -> Self {
        HVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<u64> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h_i`, zero past the recorded entries.
    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `h_1`.
    pub fn codimension(&self) -> u64 {
        self.get(1)
    }

    /// Last index holding a positive entry.
    pub fn socle_degree(&self) -> Option<usize> {
        self.0.iter().rposition(|&x| x > 0)
    }

    /// Copy with trailing zeros removed.
    pub fn trimmed(&self) -> HVector {
        let end = self.socle_degree().map_or(0, |e| e + 1);
        HVector(self.0[..end].to_vec())
    }

    /// `h_i = h_{e-i}` on the trimmed vector.
    pub fn is_symmetric(&self) -> bool {
        let t = self.trimmed();
        t.0.iter().eq(t.0.iter().rev())
    }

    pub(crate) fn require_leading_one(&self) -> Result<()> {
        match self.0.first() {
            None => Err(Error::EmptyVector),
            Some(1) => Ok(()),
            Some(&other) => Err(Error::LeadingEntry(other)),
        }
    }
}

impl From<Vec<u64>> for HVector {
    fn from(v: Vec<u64>) -> Self {
        HVector(v)
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for HVector {
    type Err = Error;

    /// Parses comma-separated integers without spaces, e.g. `1,13,12,13,1`.
    fn from_str(s: &str) -> Result<Self> {
        let fail = |reason: String| Error::ParseVector {
            input: s.to_string(),
            reason,
        };
        if s.is_empty() {
            return Err(fail("empty input".into()));
        }
        s.split(',')
            .map(|tok| {
                tok.parse::<u64>()
                    .map_err(|e| fail(format!("bad entry {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(HVector)
    }
}

/// True iff `h` satisfies Macaulay's growth bound in every degree and no
/// positive entry follows a zero.
pub fn is_osequence(h: &HVector) -> Result<bool> {
    h.require_leading_one()?;
    let e = h.entries();
    for d in 1..e.len().saturating_sub(1) {
        let (cur, next) = (e[d], e[d + 1]);
        if cur == 0 && next > 0 {
            return Ok(false);
        }
        if next > macaulay_bound(cur, d as u32)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// True iff the sequence never strictly increases after a strict decrease.
pub fn is_unimodal(h: &HVector) -> bool {
    let mut descended = false;
    for w in h.entries().windows(2) {
        if w[1] < w[0] {
            descended = true;
        } else if w[1] > w[0] && descended {
            return false;
        }
    }
    true
}

const ORACLE_MAX_VARS: usize = 3;
const ORACLE_MAX_DEGREE: usize = 4;

/// Exponent vectors of total degree `d` in `n` variables.
fn monomials(n: usize, d: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            monomials(n - 1, d - first)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

struct OrderIdealEnumerator {
    max_degree: usize,
    /// `divisors[d][k]`: bitmask of degree-`d` monomials dividing the
    /// `k`-th monomial of degree `d + 1`.
    divisors: Vec<Vec<u32>>,
    memo: HashMap<(usize, u32), BTreeSet<Vec<u64>>>,
}

impl OrderIdealEnumerator {
    fn new(num_vars: usize, max_degree: usize) -> Self {
        let by_degree: Vec<_> = (0..=max_degree).map(|d| monomials(num_vars, d)).collect();
        let divisors = (0..max_degree)
            .map(|d| {
                by_degree[d + 1]
                    .iter()
                    .map(|m| {
                        let mut mask = 0u32;
                        for v in 0..num_vars {
                            if m[v] == 0 {
                                continue;
                            }
                            let mut q = m.clone();
                            q[v] -= 1;
                            let pos = by_degree[d].iter().position(|x| *x == q).unwrap();
                            mask |= 1 << pos;
                        }
                        mask
                    })
                    .collect()
            })
            .collect();
        OrderIdealEnumerator {
            max_degree,
            divisors,
            memo: HashMap::new(),
        }
    }

    /// Degree-`d + 1` monomials all of whose divisors lie in `mask`.
    fn upper_shadow(&self, d: usize, mask: u32) -> u32 {
        self.divisors[d]
            .iter()
            .enumerate()
            .filter(|(_, div)| *div & mask == **div)
            .fold(0, |acc, (k, _)| acc | (1 << k))
    }

    /// Trimmed counting vectors `(h_d, h_{d+1}, ...)` of order ideals whose
    /// degree-`d` part is `mask`.
    fn suffixes(&mut self, d: usize, mask: u32) -> BTreeSet<Vec<u64>> {
        if mask == 0 {
            return BTreeSet::from([Vec::new()]);
        }
        let here = u64::from(mask.count_ones());
        if d == self.max_degree {
            return BTreeSet::from([vec![here]]);
        }
        if let Some(hit) = self.memo.get(&(d, mask)) {
            return hit.clone();
        }
        let up = self.upper_shadow(d, mask);
        let mut out = BTreeSet::new();
        if d + 1 == self.max_degree {
            // Any subset of the shadow is allowed; only its size matters.
            for k in 0..=u64::from(up.count_ones()) {
                out.insert(if k == 0 { vec![here] } else { vec![here, k] });
            }
        } else {
            let mut sub = up;
            loop {
                for tail in self.suffixes(d + 1, sub) {
                    let mut v = Vec::with_capacity(tail.len() + 1);
                    v.push(here);
                    v.extend(tail);
                    out.insert(v);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & up;
            }
        }
        self.memo.insert((d, mask), out.clone());
        out
    }
}

/// Counting vectors of all order ideals of monomials in `num_vars`
/// variables truncated at `max_degree`. Exhaustive, so only small
/// parameters (at most 3 variables, degree at most 4) are accepted.
pub fn oracle_osequences(num_vars: usize, max_degree: usize) -> Result<BTreeSet<HVector>> {
    if !(1..=ORACLE_MAX_VARS).contains(&num_vars) || !(1..=ORACLE_MAX_DEGREE).contains(&max_degree)
    {
        return Err(Error::OracleRange(format!(
            "num_vars={num_vars} (1..={ORACLE_MAX_VARS}), max_degree={max_degree} (1..={ORACLE_MAX_DEGREE})"
        )));
    }
    let mut walker = OrderIdealEnumerator::new(num_vars, max_degree);
    Ok(walker.suffixes(0, 1).into_iter().map(HVector).collect())
}
