//! Constructive upper bounds: trivial extensions of level algebras, the
//! `(m, a, b)` decomposition of the codimension, the `+1` lift, and the
//! asymptotic comparison of both bounds against `(6r)^{2/3}`.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::binomial::{binomial, expand};
use crate::bounds::lower_bound;
use crate::error::{Error, Result};
use crate::osequence::{is_osequence, HVector};

fn choose(n: u64, k: u64) -> u64 {
    binomial(n, k).expect("binomial overflow")
}

/// Gorenstein h-vector of the trivial extension of a level algebra with
/// h-vector `(1, h_1, ..., h_j)`: `H_i = h_i + h_{j+1-i}`, `H_{j+1} = 1`.
pub fn trivial_extension(h: &HVector) -> Result<HVector> {
    if h.len() < 2 {
        return Err(Error::TooShort {
            vector: h.to_string(),
            reason: "need at least (1, h_1)",
        });
    }
    let e = h.entries();
    let j = e.len() - 1;
    let mut out = Vec::with_capacity(j + 2);
    out.push(1);
    out.extend((1..=j).map(|i| e[i] + e[j + 1 - i]));
    out.push(1);
    Ok(HVector::new(out))
}

/// Adds one to every entry of degree `1..e-1`: the h-vector of `F + y^e`
/// for a new variable `y`. Requires socle degree at least 3.
pub fn lift_hvector(h: &HVector) -> Result<HVector> {
    h.require_leading_one()?;
    if !h.is_symmetric() {
        return Err(Error::NotSymmetric(h.to_string()));
    }
    let t = h.trimmed();
    if t.len() < 4 {
        return Err(Error::TooShort {
            vector: h.to_string(),
            reason: "lift needs socle degree >= 3",
        });
    }
    let e = t.len() - 1;
    let mut out = t.into_entries();
    for x in &mut out[1..e] {
        *x += 1;
    }
    Ok(HVector::new(out))
}

/// `r = m + C(m+1, 3) + C(a+1, 2) + b` with `1 <= a <= m-1`, `0 <= b <= a+2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Lemma11Triple {
    pub m: u64,
    pub a: u64,
    pub b: u64,
}

impl Lemma11Triple {
    pub fn value(&self) -> u64 {
        self.m + choose(self.m + 1, 3) + choose(self.a + 1, 2) + self.b
    }

    pub fn is_admissible(&self) -> bool {
        self.a >= 1 && self.a < self.m && self.b <= self.a + 2
    }

    /// `(1, m, C(m,2) + a, C(m+1,3) + C(a+1,2))`, the level h-vector fed
    /// to the trivial extension.
    pub fn level_hvector(&self) -> HVector {
        let Lemma11Triple { m, a, .. } = *self;
        HVector::new(vec![
            1,
            m,
            choose(m, 2) + a,
            choose(m + 1, 3) + choose(a + 1, 2),
        ])
    }
}

/// Largest `m` with `m + C(m+1, 3) <= r`.
fn largest_m(r: u64) -> u64 {
    let g = |m: u64| m + choose(m + 1, 3);
    let mut m = ((6.0 * r as f64).cbrt() as u64).max(1);
    while m > 1 && g(m) > r {
        m -= 1;
    }
    while g(m + 1) <= r {
        m += 1;
    }
    m
}

/// Writes `r >= 4` as `m + C(m+1,3) + C(a+1,2) + b`.
///
/// `m` is maximal except when `r = m + C(m+1,3)` exactly, where the
/// identity `m + C(m+1,3) = (m-1) + C(m,3) + C(m-1,2) + m` gives
/// `(m-1, m-2, m)`. A remainder of exactly `C(m+1,2)` is written as
/// `C(m,2) + m`, i.e. `a = m-1`, `b = m`.
pub fn lemma11_decompose(r: u64) -> Result<Lemma11Triple> {
    if r < 4 {
        return Err(Error::Codimension { min: 4, got: r });
    }
    let m = largest_m(r);
    let rest = r - m - choose(m + 1, 3);
    let triple = if rest == 0 {
        // r >= 4 forces m >= 3 here.
        Lemma11Triple {
            m: m - 1,
            a: m - 2,
            b: m,
        }
    } else {
        let exp = expand(rest, 2)?;
        let terms = exp.terms();
        let top = terms[0].top;
        if top == m + 1 {
            Lemma11Triple { m, a: m - 1, b: m }
        } else {
            let b = terms.get(1).map_or(0, |t| t.top);
            Lemma11Triple { m, a: top - 1, b }
        }
    };
    debug_assert!(
        triple.is_admissible() && triple.value() == r,
        "r={r} {triple:?}"
    );
    Ok(triple)
}

/// A certified upper bound on `f(r) = f(r, 4)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperBound {
    pub value: u64,
    pub triple: Lemma11Triple,
    pub level: HVector,
    /// `(1, r, value, r, 1)`.
    pub certificate: HVector,
}

/// Builds the level h-vector from [`lemma11_decompose`], takes its trivial
/// extension and lifts `b` times.
pub fn upper_bound_h2(r: u64) -> Result<UpperBound> {
    let triple = lemma11_decompose(r)?;
    let level = triple.level_hvector();
    if !is_osequence(&level)? {
        return Err(Error::NotOSequence(level.to_string()));
    }
    let mut h = trivial_extension(&level)?;
    for _ in 0..triple.b {
        h = lift_hvector(&h)?;
    }
    debug_assert_eq!(h.codimension(), r);
    Ok(UpperBound {
        value: h.get(2),
        triple,
        level,
        certificate: h,
    })
}

/// One sample of the sandwich `G(r) <= lower/(6r)^{2/3} <= f(r)/(6r)^{2/3}
/// <= upper/(6r)^{2/3} <= H(r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticRow {
    pub r: u64,
    /// Top of the leading term of `r_(3)`.
    pub k: u64,
    pub m: u64,
    pub lower: u64,
    pub upper: u64,
    pub lower_ratio: f64,
    pub upper_ratio: f64,
    pub g: f64,
    pub h: f64,
}

impl AsymptoticRow {
    /// `C(k,3) + C(k-1,2) + C(k-1,1)`, the largest codimension sharing `k`.
    fn g_base(&self) -> u64 {
        let k = self.k;
        choose(k, 3) + choose(k - 1, 2) + (k - 1)
    }

    fn h_base(&self) -> u64 {
        self.m + choose(self.m, 3)
    }

    fn g_numerator(&self) -> u64 {
        (self.k - 2) * (self.k - 2)
    }

    fn h_numerator(&self) -> u64 {
        self.m * self.m + 2 * self.m - 1
    }

    /// `G <= lower_ratio` and `upper_ratio <= H`, decided in exact integer
    /// arithmetic by cubing both sides.
    pub fn sandwich_holds(&self) -> bool {
        let big = BigUint::from;
        let pow = |x: u64, e: u32| big(x).pow(e);
        let r2 = pow(self.r, 2);
        let lower_ok =
            pow(self.g_numerator(), 3) * &r2 <= pow(self.lower, 3) * pow(self.g_base(), 2);
        let upper_ok =
            pow(self.upper, 3) * pow(self.h_base(), 2) <= pow(self.h_numerator(), 3) * r2;
        lower_ok && upper_ok && self.lower <= self.upper
    }

    /// `max(|lower_ratio - 1|, |upper_ratio - 1|)`.
    pub fn deviation(&self) -> f64 {
        (self.lower_ratio - 1.0)
            .abs()
            .max((self.upper_ratio - 1.0).abs())
    }
}

fn two_thirds(x: f64) -> f64 {
    x.powf(2.0 / 3.0)
}

pub fn asymptotic_row(r: u64) -> Result<AsymptoticRow> {
    let lower = lower_bound(r, 4)?.lower;
    let up = upper_bound_h2(r)?;
    let k = expand(r, 3)?.terms()[0].top;
    let scale = two_thirds(6.0 * r as f64);
    let six = two_thirds(6.0);
    let mut row = AsymptoticRow {
        r,
        k,
        m: up.triple.m,
        lower,
        upper: up.value,
        lower_ratio: lower as f64 / scale,
        upper_ratio: up.value as f64 / scale,
        g: 0.0,
        h: 0.0,
    };
    row.g = row.g_numerator() as f64 / (six * two_thirds(row.g_base() as f64));
    row.h = row.h_numerator() as f64 / (six * two_thirds(row.h_base() as f64));
    Ok(row)
}

/// Rows for every `r` (each `>= 4`), computed in parallel, in input order.
pub fn asymptotic_table(r_values: &[u64]) -> Result<Vec<AsymptoticRow>> {
    r_values.par_iter().map(|&r| asymptotic_row(r)).collect()
}

/// `rmin, rmin + step, ...` up to `rmax`.
pub fn linear_samples(rmin: u64, rmax: u64, step: u64) -> Vec<u64> {
    assert!(step > 0, "step must be positive");
    (rmin..=rmax).step_by(step as usize).collect()
}

/// `rmin, factor * rmin, factor^2 * rmin, ...` up to `rmax`.
pub fn geometric_samples(rmin: u64, rmax: u64, factor: u64) -> Vec<u64> {
    assert!(
        factor >= 2 && rmin >= 1,
        "geometric sweep needs factor >= 2 and rmin >= 1"
    );
    std::iter::successors(Some(rmin), |&r| r.checked_mul(factor))
        .take_while(|&r| r <= rmax)
        .collect()
}

pub const ASYMPTOTIC_CSV_HEADER: &str = "r,k,m,lower,upper,lower_ratio,upper_ratio,G,H";

/// `x` with six significant digits.
pub fn format_sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exponent = x.abs().log10().floor() as i32;
    if (-4..6).contains(&exponent) {
        let decimals = (5 - exponent).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{x:.5e}")
    }
}

pub fn asymptotic_csv(rows: &[AsymptoticRow]) -> String {
    let mut out = String::from(ASYMPTOTIC_CSV_HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{}\n",
            row.r,
            row.k,
            row.m,
            row.lower,
            row.upper,
            format_sig6(row.lower_ratio),
            format_sig6(row.upper_ratio),
            format_sig6(row.g),
            format_sig6(row.h),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hv(s: &str) -> HVector {
        s.parse().unwrap()
    }

    /// All admissible triples for `r`, by brute force.
    fn all_triples(r: u64) -> Vec<Lemma11Triple> {
        let mut out = Vec::new();
        for m in 1..=r {
            if m + choose(m + 1, 3) > r {
                break;
            }
            for a in 1..m {
                for b in 0..=a + 2 {
                    let t = Lemma11Triple { m, a, b };
                    if t.value() == r {
                        out.push(t);
                    }
                }
            }
        }
        out
    }

    #[test]
    fn trivial_extension_examples() {
        assert_eq!(
            trivial_extension(&hv("1,3,6,10")).unwrap(),
            hv("1,13,12,13,1")
        );
        assert_eq!(
            trivial_extension(&hv("1,3,5,7")).unwrap(),
            hv("1,10,10,10,1")
        );
        assert_eq!(trivial_extension(&hv("1,1")).unwrap(), hv("1,2,1"));
        assert!(trivial_extension(&hv("1")).is_err());
    }

    #[test]
    fn lift_examples() {
        assert_eq!(
            lift_hvector(&hv("1,13,12,13,1")).unwrap(),
            hv("1,14,13,14,1")
        );
        assert_eq!(lift_hvector(&hv("1,3,5,3,1")).unwrap(), hv("1,4,6,4,1"));
        assert!(matches!(
            lift_hvector(&hv("1,2,1")),
            Err(Error::TooShort { .. })
        ));
        assert!(matches!(
            lift_hvector(&hv("1,3,2,1,1")),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn lemma11_matches_brute_force() {
        assert_eq!(
            lemma11_decompose(13).unwrap(),
            Lemma11Triple { m: 3, a: 2, b: 3 }
        );
        assert_eq!(
            lemma11_decompose(4).unwrap(),
            Lemma11Triple { m: 2, a: 1, b: 0 }
        );
        assert_eq!(
            lemma11_decompose(14).unwrap(),
            Lemma11Triple { m: 3, a: 2, b: 4 }
        );
        assert_eq!(
            lemma11_decompose(3),
            Err(Error::Codimension { min: 4, got: 3 })
        );

        // 13: the unique admissible triple with the largest m.
        let all = all_triples(13);
        let best = all.iter().map(|t| t.m).max().unwrap();
        let top: Vec<_> = all.iter().filter(|t| t.m == best).collect();
        assert_eq!(top, vec![&Lemma11Triple { m: 3, a: 2, b: 3 }]);
        // 4: a single admissible triple.
        assert_eq!(all_triples(4), vec![Lemma11Triple { m: 2, a: 1, b: 0 }]);

        for r in 4..=3000 {
            let t = lemma11_decompose(r).unwrap();
            assert!(t.is_admissible() && t.value() == r, "r={r} {t:?}");
            assert!(all_triples(r).contains(&t));
        }
    }

    #[test]
    fn upper_bound_examples() {
        let u = upper_bound_h2(13).unwrap();
        assert_eq!(u.value, 13);
        assert_eq!(u.certificate, hv("1,13,13,13,1"));
        assert_eq!(u.level, hv("1,3,5,7"));
        let u = upper_bound_h2(10).unwrap();
        assert_eq!(u.value, 10);
        assert_eq!(u.certificate, hv("1,10,10,10,1"));
    }

    #[test]
    fn sandwich_and_subadditivity() {
        let mut prev = upper_bound_h2(4).unwrap().value;
        for r in 4..=100_000u64 {
            let up = upper_bound_h2(r).unwrap();
            let t = up.triple;
            assert_eq!(up.value, 2 * choose(t.m, 2) + 2 * t.a + t.b);
            assert!(lower_bound(r, 4).unwrap().lower <= up.value, "r={r}");
            if r > 4 && r <= 10_000 {
                assert!(up.value <= prev + 1, "r={r}");
            }
            prev = up.value;
        }
    }

    #[test]
    fn asymptotic_rows() {
        let row = asymptotic_row(13).unwrap();
        assert_eq!((row.lower, row.upper, row.k, row.m), (12, 13, 5, 3));
        for r in [4, 5, 13, 14, 100, 1000, 12345, 1_000_000] {
            let row = asymptotic_row(r).unwrap();
            assert!(row.sandwich_holds(), "r={r}");
            assert!(row.g <= row.lower_ratio * (1.0 + 1e-12));
            assert!(row.upper_ratio <= row.h * (1.0 + 1e-12));
        }
        let row = asymptotic_row(1_000_000).unwrap();
        assert!((0.90..=1.10).contains(&row.lower_ratio));
        assert!((0.90..=1.10).contains(&row.upper_ratio));
    }

    #[test]
    fn samples_and_csv() {
        assert_eq!(
            geometric_samples(1000, 1_000_000, 10),
            vec![1000, 10_000, 100_000, 1_000_000]
        );
        assert_eq!(linear_samples(4, 10, 3), vec![4, 7, 10]);
        assert_eq!(format_sig6(1.0), "1.00000");
        assert_eq!(format_sig6(0.9123456), "0.912346");
        assert_eq!(format_sig6(12.5), "12.5000");
        let rows = asymptotic_table(&[13, 4]).unwrap();
        assert_eq!(rows[0].r, 13);
        let csv = asymptotic_csv(&rows);
        assert!(csv.starts_with("r,k,m,lower,upper,lower_ratio,upper_ratio,G,H\n13,5,3,12,13,"));
    }
}
