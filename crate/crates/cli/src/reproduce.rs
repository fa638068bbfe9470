//! Reference values the library must reproduce exactly.

use std::io::{self, Write};

use hvector_core::apolarity::{
    hilbert_of_form, lift_form, search_form, stanley_witness, Field, DEFAULT_PRIME,
};
use hvector_core::bounds::{gorenstein_necessary, lower_bound, unimodality_table, Feasibility};
use hvector_core::constructions::{
    asymptotic_table, lemma11_decompose, lift_hvector, trivial_extension, upper_bound_h2,
};
use hvector_core::osequence::{is_osequence, is_unimodal};
use hvector_core::{HVector, Result};

fn hv(s: &str) -> HVector {
    s.parse().expect("literal h-vector")
}

type Check = (&'static str, fn() -> Result<bool>);

const CHECKS: &[Check] = &[
    ("lower(13,4) = 12 = 8 + 4", || {
        let r = lower_bound(13, 4)?;
        Ok((r.lower, r.term_first, r.term_second) == (12, 8, 4))
    }),
    ("lower(10,4) = 9 = 6 + 3", || {
        let r = lower_bound(10, 4)?;
        Ok((r.lower, r.term_first, r.term_second) == (9, 6, 3))
    }),
    ("lower(9,5) = 9 = 7 + 2", || {
        let r = lower_bound(9, 5)?;
        Ok((r.lower, r.term_first, r.term_second) == (9, 7, 2))
    }),
    ("e=4: lower(r,4) >= r exactly for r <= 9", || {
        Ok(unimodality_table(4, 13)?
            .iter()
            .all(|row| row.meets_r == (row.report.codimension <= 9)))
    }),
    ("e=5: lower(r,5) >= r for all r <= 13", || {
        Ok(unimodality_table(5, 13)?.iter().all(|row| row.meets_r))
    }),
    ("lower(13,4) < 13 <= lower(13,5)", || {
        Ok(lower_bound(13, 4)?.lower < 13 && lower_bound(13, 5)?.lower >= 13)
    }),
    ("(1,3,5,7) is an O-sequence", || {
        is_osequence(&hv("1,3,5,7"))
    }),
    ("(1,13,12,13,1) is not unimodal", || {
        Ok(!is_unimodal(&hv("1,13,12,13,1")))
    }),
    ("trivial extension of (1,3,6,10) = (1,13,12,13,1)", || {
        Ok(trivial_extension(&hv("1,3,6,10"))? == hv("1,13,12,13,1"))
    }),
    ("lift of (1,13,12,13,1) = (1,14,13,14,1)", || {
        Ok(lift_hvector(&hv("1,13,12,13,1"))? == hv("1,14,13,14,1"))
    }),
    ("filter accepts (1,13,12,13,1)", || {
        Ok(gorenstein_necessary(&hv("1,13,12,13,1"), 4)?.is_feasible())
    }),
    ("filter rejects (1,13,11,13,1)", || {
        Ok(gorenstein_necessary(&hv("1,13,11,13,1"), 4)? == Feasibility::Infeasible)
    }),
    ("r = 14 = 3 + C(4,3) + C(3,2) + 4", || {
        let t = lemma11_decompose(14)?;
        Ok(t.is_admissible() && t.value() == 14)
    }),
    ("upper(13) = 13 >= lower(13,4)", || {
        let up = upper_bound_h2(13)?;
        Ok(up.value == 13 && up.certificate == hv("1,13,13,13,1"))
    }),
    (
        "G <= lower ratio <= upper ratio <= H at r = 10^3..10^6",
        || {
            let rows = asymptotic_table(&[1_000, 10_000, 100_000, 1_000_000])?;
            Ok(rows.iter().all(|r| r.sandwich_holds()))
        },
    ),
    (
        "apolar h-vector of the 13-variable quartic over F_32003",
        || {
            Ok(
                hilbert_of_form(&stanley_witness(Field::Prime(DEFAULT_PRIME)))?
                    == hv("1,13,12,13,1"),
            )
        },
    ),
    ("apolar h-vector of the 13-variable quartic over Q", || {
        Ok(hilbert_of_form(&stanley_witness(Field::Rational))? == hv("1,13,12,13,1"))
    }),
    ("F + y^4 realizes (1,14,13,14,1)", || {
        let lifted = lift_form(&stanley_witness(Field::Prime(DEFAULT_PRIME)))?;
        Ok(hilbert_of_form(&lifted)? == hv("1,14,13,14,1"))
    }),
    ("search finds a witness for (1,13,12,13,1)", || {
        Ok(search_form(&hv("1,13,12,13,1"), 0, DEFAULT_PRIME, 0)?
            .witness
            .is_some())
    }),
    (
        "search finds no witness for (1,10,9,10,1) in 30 trials",
        || {
            Ok(search_form(&hv("1,10,9,10,1"), 30, DEFAULT_PRIME, 0)?
                .witness
                .is_none())
        },
    ),
];

/// Runs every check, writing one line each. Returns whether all passed.
pub fn run_all<W: Write>(out: &mut W) -> io::Result<bool> {
    let mut all = true;
    for (name, check) in CHECKS {
        match check() {
            Ok(true) => writeln!(out, "PASS {name}")?,
            Ok(false) => {
                all = false;
                writeln!(out, "FAIL {name}")?;
            }
            Err(e) => {
                all = false;
                writeln!(out, "FAIL {name}: {e}")?;
            }
        }
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    #[test]
    fn every_check_passes() {
        let mut buf = Vec::new();
        assert!(
            super::run_all(&mut buf).unwrap(),
            "{}",
            String::from_utf8_lossy(&buf)
        );
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), super::CHECKS.len());
    }
}
