//! One-sided witness search: looks for a form whose apolar algebra has a
//! prescribed h-vector. Finding one proves the h-vector is Gorenstein;
//! finding none proves nothing.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::field::Field;
use super::form::{monomials_of_degree, Form, Monomial};
use super::{lift_form, realizes, trivial_extension_form};
use crate::binomial::binomial;
use crate::error::{Error, Result};
use crate::osequence::HVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CandidateOrigin {
    /// `y_1^e + ... + y_r^e`.
    PowerSum,
    /// Trivial extension of the first `generators` monomials of degree
    /// `e - 1` in `base_vars` variables, lifted `lifts` times.
    TrivialExtension {
        base_vars: usize,
        generators: usize,
        lifts: usize,
    },
    /// Random trivial extension drawn in trial `trial`.
    RandomTrivialExtension {
        trial: u64,
        base_vars: usize,
        generators: usize,
        lifts: usize,
    },
    /// Every monomial present with a random nonzero coefficient.
    Dense { trial: u64 },
    /// Random support.
    Sparse { trial: u64 },
}

impl fmt::Display for CandidateOrigin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CandidateOrigin::PowerSum => write!(f, "power sum"),
            CandidateOrigin::TrivialExtension { base_vars, generators, lifts } => write!(
                f,
                "trivial extension of {generators} monomials in {base_vars} variables, lifted {lifts} times"
            ),
            CandidateOrigin::RandomTrivialExtension { trial, base_vars, generators, lifts } => write!(
                f,
                "random trivial extension (trial {trial}) of {generators} monomials in {base_vars} variables, lifted {lifts} times"
            ),
            CandidateOrigin::Dense { trial } => write!(f, "dense random form (trial {trial})"),
            CandidateOrigin::Sparse { trial } => write!(f, "sparse random form (trial {trial})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub form: Form,
    pub origin: CandidateOrigin,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOutcome {
    pub witness: Option<Witness>,
    /// Structured candidates examined.
    pub structured_tried: usize,
    /// Random trials examined, counting up to and including the witness.
    pub random_tried: u64,
}

fn random_coefficient<R: Rng>(field: Field, rng: &mut R) -> BigRational {
    let n = match field {
        Field::Prime(p) => rng.random_range(1..p) as i64,
        Field::Rational => {
            let v = rng.random_range(1..=1000i64);
            if rng.random_bool(0.5) {
                -v
            } else {
                v
            }
        }
    };
    BigRational::from_integer(BigInt::from(n))
}

/// Random form keeping each monomial with probability `density`, with
/// uniform nonzero coefficients (integers in `-1000..=1000` over `Q`).
/// Never returns the zero form.
pub fn random_form<R: Rng>(
    num_vars: usize,
    degree: u32,
    field: Field,
    density: f64,
    rng: &mut R,
) -> Form {
    let monomials = monomials_of_degree(num_vars, degree);
    let mut f = Form::zero(num_vars, degree, field);
    for m in &monomials {
        if density >= 1.0 || rng.random_bool(density) {
            f.insert_raw(m.clone(), random_coefficient(field, rng));
        }
    }
    if f.is_zero() {
        let pick = rng.random_range(0..monomials.len());
        f.insert_raw(monomials[pick].clone(), random_coefficient(field, rng));
    }
    f
}

fn lifted(mut f: Form, times: usize) -> Result<Form> {
    for _ in 0..times {
        f = lift_form(&f)?;
    }
    Ok(f)
}

fn generator_forms(monomials: &[Monomial], field: Field) -> Vec<Form> {
    monomials
        .iter()
        .map(|m| Form::monomial(m.exponents().to_vec(), field))
        .collect()
}

/// Deterministic catalogue: the power sum, then trivial extensions of
/// leading monomial blocks with the remaining codimension made up by lifts.
fn structured_candidates(r: usize, e: u32, field: Field) -> impl Iterator<Item = Result<Witness>> {
    let power = std::iter::once(Ok(Witness {
        form: Form::power_sum(r, e, field),
        origin: CandidateOrigin::PowerSum,
    }));
    let extensions = (1..r.max(1))
        .filter(move |_| e >= 2)
        .flat_map(move |base_vars| {
            let available = monomials_of_degree(base_vars, e - 1);
            let max_t = available.len().min(r - base_vars);
            (1..=max_t).map(move |generators| {
                let gens = generator_forms(&available[..generators], field);
                let lifts = r - base_vars - generators;
                let form = lifted(trivial_extension_form(&gens)?, lifts)?;
                Ok(Witness {
                    form,
                    origin: CandidateOrigin::TrivialExtension {
                        base_vars,
                        generators,
                        lifts,
                    },
                })
            })
        });
    power.chain(extensions)
}

fn random_candidate(r: usize, e: u32, field: Field, seed: u64, trial: u64) -> Result<Witness> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let kind = if e >= 2 && r >= 2 {
        trial % 3
    } else {
        trial % 2
    };
    match kind {
        0 => Ok(Witness {
            form: random_form(r, e, field, 1.0, &mut rng),
            origin: CandidateOrigin::Dense { trial },
        }),
        1 => Ok(Witness {
            form: random_form(r, e, field, 0.3, &mut rng),
            origin: CandidateOrigin::Sparse { trial },
        }),
        _ => {
            let base_vars = rng.random_range(1..r);
            let available = monomials_of_degree(base_vars, e - 1);
            let cap = available.len().min(r - base_vars);
            let generators = rng.random_range(1..=cap);
            let picked: Vec<Form> = sample(&mut rng, available.len(), generators)
                .into_iter()
                .map(|k| {
                    let mut g = Form::zero(base_vars, e - 1, field);
                    g.insert_raw(available[k].clone(), random_coefficient(field, &mut rng));
                    g
                })
                .collect();
            let lifts = r - base_vars - generators;
            Ok(Witness {
                form: lifted(trivial_extension_form(&picked)?, lifts)?,
                origin: CandidateOrigin::RandomTrivialExtension {
                    trial,
                    base_vars,
                    generators,
                    lifts,
                },
            })
        }
    }
}

/// Looks for a form over `F_prime` realizing `target` as the h-vector of
/// its apolar algebra. Structured candidates come first, then `trials`
/// random ones; trial `t` draws from its own ChaCha stream derived from
/// `(seed, t)`, and the lowest successful trial index wins.
pub fn search_form(target: &HVector, trials: u64, prime: u64, seed: u64) -> Result<SearchOutcome> {
    let field = Field::prime(prime)?;
    target.require_leading_one()?;
    let target = target.trimmed();
    if !target.is_symmetric() {
        return Err(Error::NotSymmetric(target.to_string()));
    }
    if target.len() < 2 {
        return Err(Error::TooShort {
            vector: target.to_string(),
            reason: "socle degree must be at least 1",
        });
    }
    let e = (target.len() - 1) as u32;
    let r = usize::try_from(target.codimension()).map_err(|_| Error::Overflow("codimension"))?;
    let monomial_count = binomial(r as u64 + u64::from(e) - 1, u64::from(e));
    if monomial_count.is_none_or(|c| c > 1 << 20) {
        return Err(Error::Overflow("form size"));
    }

    let mut structured_tried = 0;
    for cand in structured_candidates(r, e, field) {
        let cand = cand?;
        structured_tried += 1;
        if realizes(&cand.form, &target)? {
            return Ok(SearchOutcome {
                witness: Some(cand),
                structured_tried,
                random_tried: 0,
            });
        }
    }

    let hit = (0..trials).into_par_iter().find_map_first(|trial| {
        match random_candidate(r, e, field, seed, trial)
            .and_then(|w| Ok((realizes(&w.form, &target)?, w)))
        {
            Ok((true, w)) => Some(Ok((trial, w))),
            Ok((false, _)) => None,
            Err(err) => Some(Err(err)),
        }
    });
    Ok(match hit.transpose()? {
        Some((trial, w)) => SearchOutcome {
            witness: Some(w),
            structured_tried,
            random_tried: trial + 1,
        },
        None => SearchOutcome {
            witness: None,
            structured_tried,
            random_tried: trials,
        },
    })
}
