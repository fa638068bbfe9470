//! Lower bounds on the degree-two entry of Gorenstein h-vectors and the
//! linear-form decomposition filter behind them.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::binomial::{binomial, expand, green_bound, macaulay_bound, ShiftSpec};
use crate::error::{Error, Result};
use crate::osequence::{is_osequence, HVector};

/// Lower bound for `h_2` over Gorenstein h-vectors `(1, r, h_2, ..., 1)` of
/// socle degree `e`, split into its two shifted binomial sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BoundReport {
    pub codimension: u64,
    pub socle_degree: u32,
    pub lower: u64,
    /// `(r_(e-1))_{-1}^{-1}`
    pub term_first: u64,
    /// `(r_(e-1))_{-(e-3)}^{-(e-2)}`
    pub term_second: u64,
}

/// Computes `(r_(e-1))_{-1}^{-1} + (r_(e-1))_{-(e-3)}^{-(e-2)}`.
pub fn lower_bound(r: u64, e: u32) -> Result<BoundReport> {
    if e < 4 {
        return Err(Error::SocleDegree { min: 4, got: e });
    }
    if r < 2 {
        return Err(Error::Codimension { min: 2, got: r });
    }
    let exp = expand(r, e - 1)?;
    let e = i64::from(e);
    let term_first = exp.eval_shift(ShiftSpec::new(-1, -1));
    let term_second = exp.eval_shift(ShiftSpec::new(-(e - 3), -(e - 2)));
    Ok(BoundReport {
        codimension: r,
        socle_degree: e as u32,
        lower: term_first + term_second,
        term_first,
        term_second,
    })
}

/// `C(r + 1, 2)`, the number of quadrics in `r` variables.
pub fn quadric_count(r: u64) -> u64 {
    binomial(r + 1, 2).expect("codimension too large")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub report: BoundReport,
    /// `lower >= r`, which pins `f(r, e) = r` since `(1, r, ..., r, 1)` is
    /// always Gorenstein.
    pub meets_r: bool,
}

/// Lower bounds for `r = 2..=r_max` at fixed socle degree.
pub fn unimodality_table(e: u32, r_max: u64) -> Result<Vec<TableRow>> {
    (2..=r_max)
        .map(|r| {
            let report = lower_bound(r, e)?;
            Ok(TableRow {
                report,
                meets_r: report.lower >= r,
            })
        })
        .collect()
}

pub const TABLE_CSV_HEADER: &str = "r,e,lower,term1,term2,meets_r";

pub fn table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(TABLE_CSV_HEADER);
    out.push('\n');
    for row in rows {
        let rep = &row.report;
        writeln!(
            out,
            "{},{},{},{},{},{}",
            rep.codimension,
            rep.socle_degree,
            rep.lower,
            rep.term_first,
            rep.term_second,
            row.meets_r
        )
        .unwrap();
    }
    out
}

/// `h = b + c` with `b` the shifted h-vector of `A/(0:L)` (Gorenstein,
/// `b_0 = 0`, `b_1 = b_e = 1`) and `c` the h-vector of `A/LA` (`c_e = 0`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub b: HVector,
    pub c: HVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    /// Every necessary condition holds; carries the lexicographically
    /// largest admissible `c`. Not a proof of Gorensteinness.
    Feasible(Decomposition),
    /// No admissible decomposition exists, so the vector is not Gorenstein.
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

/// Searches for a decomposition `h = b + c` where `c` is an O-sequence
/// bounded degreewise by Green's restriction bound with `c_e = 0`, and
/// `b` is symmetric with `b_1 = b_e = 1` and (up to `max_depth` levels)
/// passes the same test in socle degree `e - 1`.
///
/// Candidates for `c` are tried lexicographically from the Green ceiling
/// downwards, so the reported witness is deterministic. The search is
/// exponential in the socle degree in the worst case.
pub fn gorenstein_necessary(h: &HVector, max_depth: u32) -> Result<Feasibility> {
    h.require_leading_one()?;
    let h = h.trimmed();
    if !h.is_symmetric() {
        return Err(Error::NotSymmetric(h.to_string()));
    }
    if !is_osequence(&h)? {
        return Err(Error::NotOSequence(h.to_string()));
    }
    if h.len() < 2 {
        return Err(Error::TooShort {
            vector: h.to_string(),
            reason: "socle degree 0 admits no linear-form decomposition",
        });
    }
    if max_depth == 0 {
        return Err(Error::ZeroDepth);
    }
    let mut search = DecompositionSearch::default();
    Ok(match search.find(h.entries(), max_depth)? {
        Some(d) => Feasibility::Feasible(d),
        None => Feasibility::Infeasible,
    })
}

#[derive(Default)]
struct DecompositionSearch {
    /// Verdicts for inner `b` vectors, keyed by vector and remaining depth.
    seen: HashMap<(Vec<u64>, u32), bool>,
}

struct Frame<'a> {
    h: &'a [u64],
    green: Vec<u64>,
    b: Vec<u64>,
    c: Vec<u64>,
    depth: u32,
}

impl DecompositionSearch {
    /// `h` is trimmed, symmetric, an O-sequence, with socle degree >= 1.
    fn find(&mut self, h: &[u64], depth: u32) -> Result<Option<Decomposition>> {
        let e = h.len() - 1;
        let green = (0..=e)
            .map(|d| {
                if d == 0 {
                    Ok(1)
                } else {
                    green_bound(h[d], d as u32)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        let mut b = vec![0; e + 1];
        let mut c = vec![0; e + 1];
        c[0] = 1;
        b[1] = 1;
        c[1] = h[1] - 1;
        b[e] = 1;
        if c[1] > green[1] {
            return Ok(None);
        }
        let mut frame = Frame {
            h,
            green,
            b,
            c,
            depth,
        };
        if self.extend(&mut frame, 2)? {
            Ok(Some(Decomposition {
                b: HVector::new(frame.b),
                c: HVector::new(frame.c),
            }))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, fr: &mut Frame<'_>, d: usize) -> Result<bool> {
        let e = fr.h.len() - 1;
        if d >= e {
            return self.accept_inner(fr);
        }
        let cap = fr.green[d]
            .min(fr.h[d] - 1)
            .min(macaulay_bound(fr.c[d - 1], (d - 1) as u32)?);
        let partner = e + 1 - d;
        if partner < d {
            let bd = fr.b[partner];
            if bd > fr.h[d] || fr.h[d] - bd > cap {
                return Ok(false);
            }
            fr.b[d] = bd;
            fr.c[d] = fr.h[d] - bd;
            return self.extend(fr, d + 1);
        }
        for cd in (0..=cap).rev() {
            fr.c[d] = cd;
            fr.b[d] = fr.h[d] - cd;
            if self.extend(fr, d + 1)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    fn accept_inner(&mut self, fr: &Frame<'_>) -> Result<bool> {
        let inner = fr.b[1..].to_vec();
        debug_assert!(inner.iter().eq(inner.iter().rev()));
        if !is_osequence(&HVector::new(inner.clone()))? {
            return Ok(false);
        }
        if inner.len() == 1 || fr.depth <= 1 {
            return Ok(true);
        }
        let key = (inner, fr.depth - 1);
        if let Some(&v) = self.seen.get(&key) {
            return Ok(v);
        }
        let ok = self.find(&key.0, fr.depth - 1)?.is_some();
        self.seen.insert(key, ok);
        Ok(ok)
    }
}
