//! Inverse systems made computational.
//!
//! A degree-`e` form `F` determines the Gorenstein algebra `R/Ann(F)`,
//! whose h-vector is the sequence of catalecticant ranks of `F`. The
//! contraction pairing is used throughout, so results are valid in every
//! characteristic.

mod catalecticant;
mod field;
mod form;
mod search;

pub use catalecticant::{catalecticant, CatalecticantMatrix};
pub use field::{rank_mod_p, rank_rational, Field, DEFAULT_PRIME};
pub use form::{monomials_of_degree, Form, Monomial};
pub use search::{random_form, search_form, CandidateOrigin, SearchOutcome, Witness};

use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::osequence::HVector;
use catalecticant::RankEngine;

/// h-vector of `R/Ann(F)`: `h_i = rank Cat_i(F)` for `i = 0..=e`.
pub fn hilbert_of_form(form: &Form) -> Result<HVector> {
    let engine = RankEngine::new(form)?;
    (0..=form.degree())
        .map(|i| engine.rank(i).map(|r| r as u64))
        .collect::<Result<Vec<_>>>()
        .map(HVector::new)
}

/// Whether `hilbert_of_form(form) == target`, stopping at the first
/// mismatching degree.
pub fn realizes(form: &Form, target: &HVector) -> Result<bool> {
    let target = target.trimmed();
    if target.len() != form.degree() as usize + 1 {
        return Ok(false);
    }
    let engine = RankEngine::new(form)?;
    for (i, &want) in target.entries().iter().enumerate() {
        if engine.rank(i as u32)? as u64 != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `F = z_1 G_1 + ... + z_t G_t` with fresh variables `z_i` appended after
/// the shared `y` variables of the generators.
pub fn trivial_extension_form(generators: &[Form]) -> Result<Form> {
    let first = generators.first().ok_or_else(|| {
        Error::FormMismatch("trivial extension needs at least one generator".into())
    })?;
    let (n, j, field) = (first.num_vars(), first.degree(), first.field());
    for g in generators {
        if g.num_vars() != n || g.degree() != j || g.field() != field {
            return Err(Error::FormMismatch(format!(
                "generator in {} variables of degree {} over {} does not match {n} variables of degree {j} over {field}",
                g.num_vars(),
                g.degree(),
                g.field()
            )));
        }
    }
    let t = generators.len();
    let mut out = Form::zero(n + t, j + 1, field);
    for (idx, g) in generators.iter().enumerate() {
        for (m, c) in g.widened(t).terms() {
            let mut exps = m.exponents().to_vec();
            exps[n + idx] += 1;
            out.add_term(Monomial::new(exps), c.clone())?;
        }
    }
    Ok(out)
}

/// `F + y_{n+1}^e` in one more variable.
pub fn lift_form(form: &Form) -> Result<Form> {
    if form.degree() == 0 {
        return Err(Error::FormMismatch("cannot lift a constant".into()));
    }
    let mut out = form.widened(1);
    let mut exps = vec![0; out.num_vars()];
    exps[form.num_vars()] = form.degree();
    out.insert_raw(Monomial::new(exps), BigRational::one());
    Ok(out)
}

/// `z_1 M_1 + ... + z_10 M_10` over the ten cubic monomials `M_i` in three
/// variables: a quartic in 13 variables with h-vector `(1,13,12,13,1)`.
pub fn stanley_witness(field: Field) -> Form {
    let cubics: Vec<Form> = monomials_of_degree(3, 3)
        .into_iter()
        .map(|m| Form::monomial(m.exponents().to_vec(), field))
        .collect();
    trivial_extension_form(&cubics).expect("cubic generators share one shape")
}
