//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use hvector_core::apolarity::{
    hilbert_of_form, lift_form, random_form, stanley_witness, Field, DEFAULT_PRIME,
};
use hvector_core::binomial::{expand, green_bound, ShiftSpec};
use hvector_core::bounds::{gorenstein_necessary, lower_bound, unimodality_table, Feasibility};
use hvector_core::constructions::{
    asymptotic_table, lemma11_decompose, lift_hvector, trivial_extension, Lemma11Triple,
};
use hvector_core::osequence::{is_osequence, oracle_osequences, HVector};
use hvector_core::Error;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn hv(s: &str) -> HVector {
    s.parse().unwrap()
}

const SECOND_PRIME: u64 = 32009;

fn ac1_example_five() -> Outcome {
    let rep = lower_bound(13, 4).map_err(|e| e.to_string())?;
    ensure(rep.lower == 12, || {
        format!("lower_bound(13,4) = {}", rep.lower)
    })?;
    let ext = trivial_extension(&hv("1,3,6,10")).map_err(|e| e.to_string())?;
    ensure(ext == hv("1,13,12,13,1"), || {
        format!("trivial extension = {ext}")
    })?;
    ensure(ext.get(2) == rep.lower, || {
        "bound and construction disagree".into()
    })?;
    Ok("f(13,4) = 12".into())
}

fn ac2_unimodality_tables() -> Outcome {
    let t4 = unimodality_table(4, 13).map_err(|e| e.to_string())?;
    for row in &t4 {
        let r = row.report.codimension;
        if r <= 9 {
            ensure(row.meets_r, || {
                format!("e=4 r={r}: lower {} < r", row.report.lower)
            })?;
        }
    }
    let first_fail = t4
        .iter()
        .find(|row| !row.meets_r)
        .map(|row| (row.report.codimension, row.report.lower));
    ensure(first_fail == Some((10, 9)), || {
        format!("first e=4 failure {first_fail:?}, want (10, 9)")
    })?;
    let t5 = unimodality_table(5, 13).map_err(|e| e.to_string())?;
    ensure(t5.iter().all(|row| row.meets_r), || {
        "e=5 table has a failure at r <= 13".into()
    })?;
    let (l4, l5) = (
        lower_bound(13, 4).unwrap().lower,
        lower_bound(13, 5).unwrap().lower,
    );
    ensure(l4 == 12 && l5 >= 13, || {
        format!("lower(13,4)={l4}, lower(13,5)={l5}")
    })?;
    Ok(format!(
        "e=4 first failure r=10 (lower 9); lower(13,5) = {l5}"
    ))
}

fn ac3_stanley_witness() -> Outcome {
    let target = hv("1,13,12,13,1");
    for field in [Field::Prime(DEFAULT_PRIME), Field::Rational] {
        let h = hilbert_of_form(&stanley_witness(field)).map_err(|e| e.to_string())?;
        ensure(h == target, || format!("over {field}: {h}"))?;
    }
    Ok("(1,13,12,13,1) over F_32003 and Q".into())
}

fn ac4_form_lift() -> Outcome {
    let mut forms = vec![stanley_witness(Field::Prime(DEFAULT_PRIME))];
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for r in 2..=6 {
        forms.push(random_form(
            r,
            4,
            Field::Prime(DEFAULT_PRIME),
            1.0,
            &mut rng,
        ));
    }
    for f in &forms {
        let h = hilbert_of_form(f).map_err(|e| e.to_string())?;
        let lifted = hilbert_of_form(&lift_form(f).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let want = lift_hvector(&h).map_err(|e| e.to_string())?;
        ensure(lifted == want, || {
            format!("{h}: lift gives {lifted}, want {want}")
        })?;
    }
    Ok(format!("{} forms", forms.len()))
}

fn ac5_asymptotics() -> Outcome {
    let rows = asymptotic_table(&[1_000, 10_000, 100_000, 1_000_000]).map_err(|e| e.to_string())?;
    let last = rows.last().unwrap();
    ensure(
        (0.90..=1.10).contains(&last.lower_ratio) && (0.90..=1.10).contains(&last.upper_ratio),
        || format!("r=1e6 ratios {} {}", last.lower_ratio, last.upper_ratio),
    )?;
    let devs: Vec<f64> = rows.iter().map(|r| r.deviation()).collect();
    ensure(devs.windows(2).all(|w| w[1] <= w[0]), || {
        format!("deviations not decreasing: {devs:?}")
    })?;
    for row in &rows {
        ensure(row.sandwich_holds(), || {
            format!("sandwich fails at r={}", row.r)
        })?;
    }
    Ok(format!(
        "deviations {:.4} {:.4} {:.4} {:.4}",
        devs[0], devs[1], devs[2], devs[3]
    ))
}

fn ac6_pascal_complement() -> Outcome {
    for n in 1..=10_000u64 {
        for i in 1..=10 {
            let g = green_bound(n, i).unwrap();
            let s = expand(n, i).unwrap().eval_shift(ShiftSpec::new(-1, -1));
            ensure(g + s == n, || format!("n={n} i={i}: {g} + {s}"))?;
        }
    }
    Ok("n <= 10^4, i <= 10".into())
}

fn ac7_oracle_equivalence() -> Outcome {
    let mut checked = 0usize;
    for num_vars in 1..=3usize {
        for max_degree in 1..=4usize {
            let oracle = oracle_osequences(num_vars, max_degree).map_err(|e| e.to_string())?;
            // Candidates: h_0 = 1, h_1 <= num_vars, entries up to one past
            // the number of monomials of that degree in three variables.
            let caps: Vec<u64> = (1..=max_degree)
                .map(|d| ((d + 1) * (d + 2) / 2 + 1) as u64)
                .collect();
            let mut stack = vec![vec![1u64]];
            while let Some(v) = stack.pop() {
                let h = HVector::new(v.clone()).trimmed();
                let claimed = is_osequence(&h).map_err(|e| e.to_string())?;
                ensure(claimed == oracle.contains(&h), || {
                    format!("{h} (n={num_vars}, D={max_degree}): is_osequence={claimed}")
                })?;
                checked += 1;
                let d = v.len();
                if d > max_degree {
                    continue;
                }
                let cap = if d == 1 { num_vars as u64 } else { caps[d - 1] };
                for x in 0..=cap {
                    let mut w = v.clone();
                    w.push(x);
                    stack.push(w);
                }
            }
            let oracle_ok = oracle
                .iter()
                .all(|h| h.codimension() <= num_vars as u64 && h.len() <= max_degree + 1);
            ensure(oracle_ok, || {
                "oracle produced an out-of-range vector".into()
            })?;
        }
    }
    Ok(format!("{checked} candidate vectors"))
}

fn ac8_lemma11_totality() -> Outcome {
    for r in 4..=1_000_000u64 {
        let t = lemma11_decompose(r).map_err(|e| e.to_string())?;
        ensure(t.is_admissible() && t.value() == r, || {
            format!("r={r}: {t:?}")
        })?;
    }
    let t = lemma11_decompose(13).unwrap();
    ensure(t == Lemma11Triple { m: 3, a: 2, b: 3 }, || {
        format!("r=13: {t:?}")
    })?;
    Ok("4 <= r <= 10^6; r=13 -> (3,2,3)".into())
}

fn ac9_filter_soundness() -> Outcome {
    let yes = gorenstein_necessary(&hv("1,13,12,13,1"), 4).map_err(|e| e.to_string())?;
    ensure(yes.is_feasible(), || "(1,13,12,13,1) rejected".into())?;
    let no = gorenstein_necessary(&hv("1,13,11,13,1"), 4).map_err(|e| e.to_string())?;
    ensure(no == Feasibility::Infeasible, || {
        "(1,13,11,13,1) accepted".into()
    })?;
    let (mut infeasible, mut non_osequence) = (0, 0);
    for r in 2..=20u64 {
        let lower = lower_bound(r, 4).unwrap().lower;
        for v in 0..lower {
            let h = HVector::new(vec![1, r, v, r, 1]);
            match gorenstein_necessary(&h, 4) {
                Ok(Feasibility::Infeasible) => infeasible += 1,
                // Not even a Hilbert function, so certainly not Gorenstein.
                Err(Error::NotOSequence(_)) => non_osequence += 1,
                other => return Err(format!("{h}: {other:?}")),
            }
        }
    }
    Ok(format!(
        "{infeasible} infeasible, {non_osequence} rejected as non-O-sequences"
    ))
}

fn ac10_apolarity_invariants() -> Outcome {
    let p1 = Field::Prime(DEFAULT_PRIME);
    let p2 = Field::prime(SECOND_PRIME).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut count = 0;
    let mut distinct = BTreeSet::new();
    for r in 1..=5usize {
        for e in 1..=5u32 {
            for k in 0..100 {
                let density = [1.0, 0.6, 0.3, 0.1][k % 4];
                let f = random_form(r, e, Field::Rational, density, &mut rng);
                let h1 = hilbert_of_form(&f.with_field(p1).unwrap()).map_err(|e| e.to_string())?;
                let h2 = hilbert_of_form(&f.with_field(p2).unwrap()).map_err(|e| e.to_string())?;
                ensure(h1 == h2, || {
                    format!("{f}: {h1} over F_{DEFAULT_PRIME}, {h2} over F_{SECOND_PRIME}")
                })?;
                ensure(h1.is_symmetric(), || format!("{f}: {h1} not symmetric"))?;
                ensure(
                    h1.get(0) == 1 && h1.get(e as usize) == 1 && h1.len() == e as usize + 1,
                    || format!("{f}: {h1} ends"),
                )?;
                ensure(is_osequence(&h1).unwrap(), || {
                    format!("{f}: {h1} not an O-sequence")
                })?;
                distinct.insert(h1);
                count += 1;
            }
        }
    }
    Ok(format!(
        "{count} forms, {} distinct h-vectors",
        distinct.len()
    ))
}

struct Criterion {
    id: &'static str,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let ms = Duration::from_millis;
    let s = Duration::from_secs;
    let criteria = [
        Criterion {
            id: "AC1",
            name: "codimension 13 extremal case",
            limit: ms(1),
            run: ac1_example_five,
        },
        Criterion {
            id: "AC2",
            name: "unimodality tables",
            limit: ms(10),
            run: ac2_unimodality_tables,
        },
        Criterion {
            id: "AC3",
            name: "apolarity certification",
            limit: s(1),
            run: ac3_stanley_witness,
        },
        Criterion {
            id: "AC4",
            name: "form-level lift",
            limit: s(5),
            run: ac4_form_lift,
        },
        Criterion {
            id: "AC5",
            name: "asymptotic sandwich",
            limit: s(10),
            run: ac5_asymptotics,
        },
        Criterion {
            id: "AC6",
            name: "Pascal complement identity",
            limit: s(5),
            run: ac6_pascal_complement,
        },
        Criterion {
            id: "AC7",
            name: "O-sequence oracle equivalence",
            limit: s(30),
            run: ac7_oracle_equivalence,
        },
        Criterion {
            id: "AC8",
            name: "(m, a, b) decomposition totality",
            limit: s(30),
            run: ac8_lemma11_totality,
        },
        Criterion {
            id: "AC9",
            name: "feasibility filter soundness",
            limit: s(60),
            run: ac9_filter_soundness,
        },
        Criterion {
            id: "AC10",
            name: "apolarity invariant suite",
            limit: s(120),
            run: ac10_apolarity_invariants,
        },
    ];
    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(detail) if elapsed <= c.limit => Ok(detail),
            Ok(detail) => Err(format!("{detail}; took {elapsed:?}, limit {:?}", c.limit)),
            Err(e) => Err(e),
        };
        match verdict {
            Ok(detail) => println!(
                "{:<5} PASS  {:<34} {:>12.3?}  {detail}",
                c.id, c.name, elapsed
            ),
            Err(why) => {
                failures += 1;
                println!("{:<5} FAIL  {:<34} {:>12.3?}  {why}", c.id, c.name, elapsed);
            }
        }
    }
    println!(
        "{} of {} acceptance criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
