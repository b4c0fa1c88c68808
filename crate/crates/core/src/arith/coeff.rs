//! Elements of the coefficient field F: reduced fractions of parameter
//! polynomials.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::param_poly::ParamPoly;
use crate::error::{Error, Result};

/// A canonical fraction num/den of parameter polynomials.
///
/// Invariants: den is nonzero, gcd(num, den) = 1 over Q, and den is
/// integer-primitive with positive leading rational coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct CoeffElem {
    num: ParamPoly,
    den: ParamPoly,
}

impl CoeffElem {
    pub fn new(num: ParamPoly, den: ParamPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: ParamPoly, den: ParamPoly) -> Self {
        if num.is_zero() {
            return CoeffElem {
                num: ParamPoly::zero(),
                den: ParamPoly::one(),
            };
        }
        let g = ParamPoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        // normalize: den integer-primitive with positive leading coefficient
        let (c, dp) = den.primitive();
        den = dp;
        num = num.scale(&c.recip());
        CoeffElem { num, den }
    }

    pub fn from_poly(p: ParamPoly) -> Self {
        CoeffElem {
            num: p,
            den: ParamPoly::one(),
        }
    }

    pub fn from_rational(c: BigRational) -> Self {
        CoeffElem::from_poly(ParamPoly::from_rational(c))
    }

    pub fn from_integer(n: i64) -> Self {
        CoeffElem::from_poly(ParamPoly::from_integer(n))
    }

    pub fn zero() -> Self {
        CoeffElem::from_poly(ParamPoly::zero())
    }

    pub fn one() -> Self {
        CoeffElem::from_poly(ParamPoly::one())
    }

    pub fn num(&self) -> &ParamPoly {
        &self.num
    }

    pub fn den(&self) -> &ParamPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_rational_number(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value as a rational number, when parameter-free.
    pub fn as_rational(&self) -> Option<BigRational> {
        match (self.num.as_rational(), self.den.as_rational()) {
            (Some(n), Some(d)) => Some(n / d),
            _ => None,
        }
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: i64) -> Self {
        if k == 0 {
            return CoeffElem::one();
        }
        let mut base = if k < 0 {
            self.recip().expect("nonzero base for negative power")
        } else {
            self.clone()
        };
        let mut out = CoeffElem::one();
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                out = &out * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Detect c * q^k with c a rational number; returns (c, k).
    pub fn as_q_monomial(&self, q_index: usize) -> Option<(BigRational, i64)> {
        let (nk, nrest) = self.num.strip_var_power(q_index);
        let (dk, drest) = self.den.strip_var_power(q_index);
        let c = nrest.as_rational()?;
        let d = drest.as_rational()?;
        Some((c / d, nk as i64 - dk as i64))
    }

    /// Substitute a parameter variable in both numerator and denominator.
    pub fn substitute(&self, var: usize, value: &ParamPoly) -> Result<Self> {
        let num = self.num.substitute(var, value);
        let den = self.den.substitute(var, value);
        CoeffElem::new(num, den)
    }

    /// Evaluate at rational parameter values.
    pub fn eval(&self, values: &[BigRational]) -> Result<BigRational> {
        let d = self.den.eval(values);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.num.eval(values) / d)
    }

    /// Is this a nonnegative integer? Returns it if so.
    pub fn as_nonneg_integer(&self) -> Option<u32> {
        let r = self.as_rational()?;
        if r.is_integer() && !r.is_negative() {
            let n = r.to_integer();
            if n <= BigInt::from(u32::MAX) {
                return u32::try_from(n).ok();
            }
        }
        None
    }
}

impl Add for &CoeffElem {
    type Output = CoeffElem;
    fn add(self, rhs: &CoeffElem) -> CoeffElem {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = ParamPoly::gcd(&self.den, &rhs.den);
        let da = self.den.exact_div(&g).expect("gcd divides");
        let db = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        let den = &(&self.den * &db);
        CoeffElem::reduced(num, den.clone())
    }
}

impl Sub for &CoeffElem {
    type Output = CoeffElem;
    fn sub(self, rhs: &CoeffElem) -> CoeffElem {
        self + &(-rhs)
    }
}

impl Mul for &CoeffElem {
    type Output = CoeffElem;
    fn mul(self, rhs: &CoeffElem) -> CoeffElem {
        if self.is_zero() || rhs.is_zero() {
            return CoeffElem::zero();
        }
        // cross-reduce before multiplying
        let g1 = ParamPoly::gcd(&self.num, &rhs.den);
        let g2 = ParamPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        CoeffElem::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &CoeffElem {
    type Output = CoeffElem;
    fn div(self, rhs: &CoeffElem) -> CoeffElem {
        self * &rhs.recip().expect("division by zero coefficient")
    }
}

impl Neg for &CoeffElem {
    type Output = CoeffElem;
    fn neg(self) -> CoeffElem {
        CoeffElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Debug for CoeffElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?})/({:?})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn q() -> CoeffElem {
        CoeffElem::from_poly(ParamPoly::var(0))
    }
    fn int(n: i64) -> CoeffElem {
        CoeffElem::from_integer(n)
    }

    #[test]
    fn reduction_is_canonical() {
        // (q^2 - 1)/(q - 1) reduces to q + 1
        let n = &(&q() * &q()) - &int(1);
        let d = &q() - &int(1);
        let f = CoeffElem::new(n.num().clone(), d.num().clone()).unwrap();
        assert_eq!(f, &q() + &int(1));
    }

    #[test]
    fn denominator_sign_normalization() {
        // 1/(-q) must equal (-1)/q
        let a = CoeffElem::new(ParamPoly::one(), -&ParamPoly::var(0)).unwrap();
        let b = &(-&int(1)) / &q();
        assert_eq!(a, b);
        assert!(a.den().leading_term().unwrap().1.is_positive());
    }

    #[test]
    fn field_ops() {
        let f = &int(1) / &(&q() - &int(1));
        let g = &int(1) / &(&q() + &int(1));
        let s = &f + &g;
        // 1/(q-1) + 1/(q+1) = 2q/(q^2-1)
        let expect = CoeffElem::new(
            (&(&q() + &q())).num().clone(),
            (&(&q() * &q()) - &int(1)).num().clone(),
        )
        .unwrap();
        assert_eq!(s, expect);
        assert_eq!(&s - &f, g);
    }

    #[test]
    fn q_monomial_detection() {
        let f = &q().pow(3) / &int(1);
        assert_eq!(f.as_q_monomial(0), Some((num_rational::BigRational::one(), 3)));
        let g = q().pow(-2);
        assert_eq!(g.as_q_monomial(0).unwrap().1, -2);
        let h = &q() + &int(1);
        assert!(h.as_q_monomial(0).is_none());
    }
}
