//! Exact univariate Laurent polynomials with big-integer coefficients.
//!
//! The representation is a sparse exponent-to-coefficient map with no zero
//! coefficients stored. Division is defined only when exact and reports
//! [`Error::InexactDivision`] otherwise; the G2 character computations rely
//! on that exactness as a built-in consistency check.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> LaurentPoly {
        LaurentPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> LaurentPoly {
        LaurentPoly::monomial(0, BigInt::from(1))
    }

    pub fn monomial(exponent: i64, coeff: BigInt) -> LaurentPoly {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() {
            coeffs.insert(exponent, coeff);
        }
        LaurentPoly { coeffs }
    }

    /// `x^e`.
    pub fn x_pow(exponent: i64) -> LaurentPoly {
        LaurentPoly::monomial(exponent, BigInt::from(1))
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for &(e, c) in terms {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exponent: i64) -> BigInt {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    fn add_term(&mut self, exponent: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exponent).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exponent);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in other.coeffs.iter() {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (&e, c) in other.coeffs.iter() {
            out.add_term(e, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&e1, c1) in self.coeffs.iter() {
            for (&e2, c2) in other.coeffs.iter() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Exact division: long division from the top exponent, erroring out as
    /// soon as exactness fails. For an exact quotient the exponents of `q`
    /// lie in `[self.min - d.min, self.max - d.max]`, which bounds the loop.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Result<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        let d_top = divisor.max_exponent().unwrap();
        let d_top_coeff = divisor.coeff(d_top);
        let q_min = self.min_exponent().unwrap() - divisor.min_exponent().unwrap();
        let mut remainder = self.clone();
        let mut quotient = LaurentPoly::zero();
        while let Some(r_top) = remainder.max_exponent() {
            let q_exp = r_top - d_top;
            if q_exp < q_min {
                return Err(Error::InexactDivision);
            }
            let r_coeff = remainder.coeff(r_top);
            let (q_coeff, rem) = num_integer::Integer::div_rem(&r_coeff, &d_top_coeff);
            if !rem.is_zero() {
                return Err(Error::InexactDivision);
            }
            let t = LaurentPoly::monomial(q_exp, q_coeff);
            remainder = remainder.sub(&t.mul(divisor));
            quotient = quotient.add(&t);
        }
        Ok(quotient)
    }

    /// Sum of coefficients, the value at x = 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        assert!(!x.is_zero(), "Laurent polynomials cannot be evaluated at 0");
        let mut acc = BigRational::zero();
        for (&e, c) in self.coeffs.iter() {
            acc += BigRational::from_integer(c.clone()) * rational_pow(x, e);
        }
        acc
    }
}

pub(crate) fn rational_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::from_integer(BigInt::from(1));
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut result = BigRational::from_integer(BigInt::from(1));
    let mut sq = base;
    let mut n = e.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            result *= &sq;
        }
        sq = &sq * &sq;
        n >>= 1;
    }
    result
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.coeffs.iter().rev() {
            if first {
                first = false;
                if c.is_zero() {
                    continue;
                }
            } else {
                write!(
                    f,
                    " {} ",
                    if c.sign() == num_bigint::Sign::Minus {
                        "-"
                    } else {
                        "+"
                    }
                )?;
            }
            let mag = if first || c.sign() != num_bigint::Sign::Minus {
                c.clone()
            } else {
                -c.clone()
            };
            match e {
                0 => write!(f, "{}", mag)?,
                1 => {
                    if mag == BigInt::from(1) {
                        write!(f, "x")?;
                    } else {
                        write!(f, "{}*x", mag)?;
                    }
                }
                _ => {
                    if mag == BigInt::from(1) {
                        write!(f, "x^{}", e)?;
                    } else {
                        write!(f, "{}*x^{}", mag, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}
