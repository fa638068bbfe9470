use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::field::{rank_mod_p, rank_rational, Field};
use super::form::{monomials_of_degree, Form, Monomial};
use crate::error::{Error, Result};

/// Flattening of a degree-`e` form pairing operator monomials `x^a` of
/// degree `i` against target monomials `y^g` of degree `e - i`. The entry
/// at `(a, g)` is the coefficient of `y^(a+g)` (contraction, no
/// multinomial factors).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalecticantMatrix {
    operator_degree: u32,
    field: Field,
    rows: Vec<Monomial>,
    cols: Vec<Monomial>,
    entries: Vec<Vec<BigRational>>,
}

impl CatalecticantMatrix {
    pub fn operator_degree(&self) -> u32 {
        self.operator_degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Operator monomials, graded lexicographic.
    pub fn rows(&self) -> &[Monomial] {
        &self.rows
    }

    /// Target monomials, graded lexicographic.
    pub fn cols(&self) -> &[Monomial] {
        &self.cols
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row][col]
    }

    pub fn nonzero_entries(&self) -> usize {
        self.entries
            .iter()
            .flatten()
            .filter(|x| !x.is_zero())
            .count()
    }

    pub fn rank(&self) -> usize {
        match self.field {
            Field::Rational => rank_rational(self.entries.clone()),
            Field::Prime(p) => rank_mod_p(
                self.entries
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|x| x.to_integer().to_u64().unwrap())
                            .collect()
                    })
                    .collect(),
                p,
            ),
        }
    }
}

fn check(form: &Form, i: u32) -> Result<()> {
    if form.is_zero() {
        return Err(Error::ZeroForm);
    }
    if i > form.degree() {
        return Err(Error::OperatorDegree {
            index: i,
            degree: form.degree(),
        });
    }
    Ok(())
}

/// The catalecticant of `form` in operator degree `i`.
pub fn catalecticant(form: &Form, i: u32) -> Result<CatalecticantMatrix> {
    check(form, i)?;
    let n = form.num_vars();
    let rows = monomials_of_degree(n, i);
    let cols = monomials_of_degree(n, form.degree() - i);
    let entries = rows
        .iter()
        .map(|a| {
            cols.iter()
                .map(|g| {
                    form.coefficient(&a.mul(g))
                        .cloned()
                        .unwrap_or_else(BigRational::zero)
                })
                .collect()
        })
        .collect();
    Ok(CatalecticantMatrix {
        operator_degree: i,
        field: form.field(),
        rows,
        cols,
        entries,
    })
}

/// Computes catalecticant ranks of one form, skipping the `BigRational`
/// matrix over prime fields.
pub(crate) struct RankEngine<'a> {
    form: &'a Form,
    residues: Option<(u64, HashMap<&'a Monomial, u64>)>,
}

impl<'a> RankEngine<'a> {
    pub(crate) fn new(form: &'a Form) -> Result<Self> {
        if form.is_zero() {
            return Err(Error::ZeroForm);
        }
        let residues = match form.field() {
            Field::Prime(p) => Some((
                p,
                form.terms()
                    .map(|(m, c)| (m, c.to_integer().to_u64().unwrap()))
                    .collect(),
            )),
            Field::Rational => None,
        };
        Ok(RankEngine { form, residues })
    }

    pub(crate) fn rank(&self, i: u32) -> Result<usize> {
        check(self.form, i)?;
        let Some((p, residues)) = &self.residues else {
            return Ok(catalecticant(self.form, i)?.rank());
        };
        let n = self.form.num_vars();
        let (small, large) = {
            let e = self.form.degree();
            (i.min(e - i), i.max(e - i))
        };
        // Rank is transpose invariant; keep the shorter side as rows.
        let rows = monomials_of_degree(n, small);
        let cols = monomials_of_degree(n, large);
        let matrix = rows
            .iter()
            .map(|a| {
                cols.iter()
                    .map(|g| residues.get(&a.mul(g)).copied().unwrap_or(0))
                    .collect()
            })
            .collect();
        Ok(rank_mod_p(matrix, *p))
    }
}
