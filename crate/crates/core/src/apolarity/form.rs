//! Sparse homogeneous forms and their text file format.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::Field;
use crate::error::{Error, Result};

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    /// Product of two monomials in the same variables.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// The same monomial in `extra` additional trailing variables.
    fn widen(&self, extra: usize) -> Monomial {
        let mut v = self.0.clone();
        v.resize(v.len() + extra, 0);
        Monomial(v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "y{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of degree `d` in `n` variables, in graded lexicographic
/// order (`y1^d` first).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn fill(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(Monomial(prefix.clone()));
            prefix.pop();
            return;
        }
        for first in (0..=d).rev() {
            prefix.push(first);
            fill(n, d - first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        fill(n, d, &mut Vec::with_capacity(n), &mut out);
    } else if d == 0 {
        out.push(Monomial(Vec::new()));
    }
    out
}

/// A homogeneous polynomial in the dual variables `y_1..y_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    num_vars: usize,
    degree: u32,
    field: Field,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Form {
    /// The zero form.
    pub fn zero(num_vars: usize, degree: u32, field: Field) -> Self {
        Form {
            num_vars,
            degree,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&BigRational> {
        self.terms.get(m)
    }

    /// Terms in graded lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter().rev()
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.num_vars {
            return Err(Error::FormMismatch(format!(
                "monomial {m} has {} exponents, form has {} variables",
                m.num_vars(),
                self.num_vars
            )));
        }
        if m.degree() != self.degree {
            return Err(Error::FormMismatch(format!(
                "monomial {m} has degree {}, form has degree {}",
                m.degree(),
                self.degree
            )));
        }
        Ok(())
    }

    /// Adds `coeff * m`, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, coeff: BigRational) -> Result<()> {
        self.check_monomial(&m)?;
        let sum = match self.terms.remove(&m) {
            Some(old) => old + coeff,
            None => coeff,
        };
        if let Some(c) = self.field.normalize(&sum)? {
            self.terms.insert(m, c);
        }
        Ok(())
    }

    /// Builds a form from `(exponents, coefficient)` pairs, summing repeats.
    pub fn from_terms<I>(num_vars: usize, degree: u32, field: Field, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, BigRational)>,
    {
        let mut f = Form::zero(num_vars, degree, field);
        for (exps, c) in terms {
            f.add_term(Monomial(exps), c)?;
        }
        Ok(f)
    }

    /// A single monomial with coefficient one.
    pub fn monomial(exponents: Vec<u32>, field: Field) -> Self {
        let m = Monomial(exponents);
        let mut f = Form::zero(m.num_vars(), m.degree(), field);
        f.terms.insert(m, BigRational::one());
        f
    }

    /// `y_1^e + ... + y_n^e`.
    pub fn power_sum(num_vars: usize, degree: u32, field: Field) -> Self {
        let mut f = Form::zero(num_vars, degree, field);
        for i in 0..num_vars {
            let mut e = vec![0; num_vars];
            e[i] = degree;
            f.terms.insert(Monomial(e), BigRational::one());
        }
        f
    }

    /// The same polynomial over another field, coefficients reduced.
    pub fn with_field(&self, field: Field) -> Result<Self> {
        let mut f = Form::zero(self.num_vars, self.degree, field);
        for (m, c) in &self.terms {
            if let Some(c) = field.normalize(c)? {
                f.terms.insert(m.clone(), c);
            }
        }
        Ok(f)
    }

    /// The same polynomial in `extra` more (unused) trailing variables.
    pub(crate) fn widened(&self, extra: usize) -> Self {
        Form {
            num_vars: self.num_vars + extra,
            degree: self.degree,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.widen(extra), c.clone()))
                .collect(),
        }
    }

    pub(crate) fn insert_raw(&mut self, m: Monomial, c: BigRational) {
        debug_assert!(self.check_monomial(&m).is_ok() && !c.is_zero());
        self.terms.insert(m, c);
    }

    /// Text representation: a `vars=<n> degree=<e> prime=<p|0>` header and
    /// one `<coefficient> <e1> ... <en>` line per term.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "vars={} degree={} prime={}\n",
            self.num_vars,
            self.degree,
            self.field.modulus()
        );
        for (m, c) in self.terms() {
            out.push_str(&c.to_string());
            for e in m.exponents() {
                out.push(' ');
                out.push_str(&e.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format. Blank lines and `#` comments are skipped;
    /// a repeated monomial is an error.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::FormSyntax {
            line: 1,
            reason: "missing header".into(),
        })?;
        let (num_vars, degree, field) =
            parse_header(header).map_err(|reason| Error::FormSyntax {
                line: hline,
                reason,
            })?;
        let mut form = Form::zero(num_vars, degree, field);
        let mut seen = std::collections::HashSet::new();
        for (line, body) in lines {
            let syntax = |reason: String| Error::FormSyntax { line, reason };
            let mut toks = body.split_whitespace();
            let coeff = parse_coefficient(toks.next().unwrap()).map_err(syntax)?;
            let exps = toks
                .map(|t| {
                    t.parse::<u32>()
                        .map_err(|e| syntax(format!("bad exponent {t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            if exps.len() != num_vars {
                return Err(syntax(format!(
                    "expected {num_vars} exponents, found {}",
                    exps.len()
                )));
            }
            let m = Monomial(exps);
            if m.degree() != degree {
                return Err(syntax(format!(
                    "exponents sum to {}, expected {degree}",
                    m.degree()
                )));
            }
            if !seen.insert(m.clone()) {
                return Err(syntax(format!("repeated monomial {m}")));
            }
            form.add_term(m, coeff).map_err(|e| syntax(e.to_string()))?;
        }
        Ok(form)
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Form::parse(s)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "({c})*{m}")?;
            }
        }
        Ok(())
    }
}

fn parse_header(line: &str) -> std::result::Result<(usize, u32, Field), String> {
    let mut vars = None;
    let mut degree = None;
    let mut prime = None;
    for tok in line.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or(format!("expected key=value, found {tok:?}"))?;
        let bad = |e: std::num::ParseIntError| format!("bad value for {key}: {e}");
        match key {
            "vars" => vars = Some(value.parse::<usize>().map_err(bad)?),
            "degree" => degree = Some(value.parse::<u32>().map_err(bad)?),
            "prime" => prime = Some(value.parse::<u64>().map_err(bad)?),
            _ => return Err(format!("unknown header key {key:?}")),
        }
    }
    let vars = vars.ok_or("header is missing vars=")?;
    let degree = degree.ok_or("header is missing degree=")?;
    let prime = prime.ok_or("header is missing prime=")?;
    if vars == 0 {
        return Err("vars must be positive".into());
    }
    let field = Field::from_modulus(prime).map_err(|e| e.to_string())?;
    Ok((vars, degree, field))
}

fn parse_coefficient(tok: &str) -> std::result::Result<BigRational, String> {
    let int = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|e| format!("bad coefficient {tok:?}: {e}"))
    };
    match tok.split_once('/') {
        None => Ok(BigRational::from_integer(int(tok)?)),
        Some((n, d)) => {
            let d = int(d)?;
            if d.is_zero() {
                return Err(format!("zero denominator in {tok:?}"));
            }
            Ok(BigRational::new(int(n)?, d))
        }
    }
}
