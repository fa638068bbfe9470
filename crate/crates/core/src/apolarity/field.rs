//! Coefficient fields and exact rank computation.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Default modulus for randomized work.
pub const DEFAULT_PRIME: u64 = 32003;

/// Coefficient field of a form: `F_p` for a prime `p < 2^32`, or `Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Prime(u64),
    Rational,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if p > u64::from(u32::MAX) || !is_prime(p) {
            return Err(Error::BadPrime(p));
        }
        Ok(Field::Prime(p))
    }

    /// `0` selects the rationals, anything else must be a prime.
    pub fn from_modulus(p: u64) -> Result<Field> {
        if p == 0 {
            Ok(Field::Rational)
        } else {
            Field::prime(p)
        }
    }

    /// The modulus, or `0` for the rationals.
    pub fn modulus(&self) -> u64 {
        match self {
            Field::Prime(p) => *p,
            Field::Rational => 0,
        }
    }

    /// Canonical representative of `c` in this field; `None` when it is zero.
    /// Over `F_p` the result is an integer in `1..p`.
    pub fn normalize(&self, c: &BigRational) -> Result<Option<BigRational>> {
        match self {
            Field::Rational => Ok((!c.is_zero()).then(|| c.clone())),
            Field::Prime(p) => {
                let r = residue(c, *p)?;
                Ok((r != 0).then(|| BigRational::from_integer(BigInt::from(r))))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "F_{p}"),
            Field::Rational => write!(f, "Q"),
        }
    }
}

fn reduce(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let mut r = x % &m;
    if r.is_negative() {
        r += &m;
    }
    r.to_u64().expect("residue below p")
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// `c mod p`; fails when the denominator vanishes mod `p`.
pub(crate) fn residue(c: &BigRational, p: u64) -> Result<u64> {
    let num = reduce(c.numer(), p);
    let den = reduce(c.denom(), p);
    if den == 0 {
        return Err(Error::FormMismatch(format!(
            "coefficient {c} is undefined modulo {p}"
        )));
    }
    Ok(num * inverse_mod(den, p) % p)
}

/// Rank of a dense matrix over `F_p`, `p < 2^32`. Entries must be reduced.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inverse_mod(rows[rank][col], p);
        for x in &mut rows[rank][col..] {
            *x = *x * inv % p;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (x, &y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = (*x + (p - factor) * y) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of a dense matrix over `Q`.
pub fn rank_rational(mut rows: Vec<Vec<BigRational>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = BigRational::one() / &rows[rank][col];
        for x in &mut rows[rank][col..] {
            *x *= &inv;
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail {
            if row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, y) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                if !y.is_zero() {
                    *x -= &factor * y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}
