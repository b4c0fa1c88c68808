//! Reduced rational functions in y over F.

use std::fmt;

use super::coeff::CoeffElem;
use super::ypoly::YPoly;
use crate::context::{Context, ShiftCase};
use crate::error::{Error, Result};

/// A rational function num/den in F(y).
///
/// Invariants: gcd(num, den) = 1, and the denominator carries the
/// case-dependent unit normalization: monic in the usual shift case,
/// trailing coefficient 1 in the q-shift case (so q-monic whenever the
/// constant term is nonzero), and den = 1 whenever den is constant.
#[derive(Clone, PartialEq, Eq)]
pub struct YRat {
    num: YPoly,
    den: YPoly,
}

/// Unit normalization of a nonzero polynomial: the scalar u such that
/// u * p is sigma_y-monic for the session case.
pub(crate) fn sigma_monic_unit(p: &YPoly, ctx: &Context) -> CoeffElem {
    let lead = match ctx.case() {
        ShiftCase::Shift => p.leading_coeff(),
        ShiftCase::QShift => p
            .trailing_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(CoeffElem::one),
    };
    lead.recip().expect("nonzero polynomial")
}

impl YRat {
    pub fn new(num: YPoly, den: YPoly, ctx: &Context) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den, ctx))
    }

    fn reduced(num: YPoly, den: YPoly, ctx: &Context) -> Self {
        if num.is_zero() {
            return YRat::zero();
        }
        let g = YPoly::gcd(&num, &den);
        let mut num = num.exact_div(&g).expect("gcd divides");
        let mut den = den.exact_div(&g).expect("gcd divides");
        if let Some(c) = den.as_constant() {
            let inv = c.recip().expect("nonzero denominator");
            num = num.scale(&inv);
            den = YPoly::one();
        } else {
            let u = sigma_monic_unit(&den, ctx);
            den = den.scale(&u);
            num = num.scale(&u);
        }
        YRat { num, den }
    }

    pub fn zero() -> Self {
        YRat {
            num: YPoly::zero(),
            den: YPoly::one(),
        }
    }

    pub fn one() -> Self {
        YRat::from_poly(YPoly::one())
    }

    pub fn from_poly(p: YPoly) -> Self {
        YRat {
            num: p,
            den: YPoly::one(),
        }
    }

    pub fn from_coeff(c: CoeffElem) -> Self {
        YRat::from_poly(YPoly::constant(c))
    }

    pub fn num(&self) -> &YPoly {
        &self.num
    }

    pub fn den(&self) -> &YPoly {
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

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<CoeffElem> {
        if self.is_polynomial() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Proper: deg(num) < deg(den).
    pub fn is_proper(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        match (self.num.deg(), self.den.deg()) {
            (Some(a), Some(b)) => a < b,
            _ => false,
        }
    }

    pub fn add(&self, rhs: &YRat, ctx: &Context) -> YRat {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = YPoly::gcd(&self.den, &rhs.den);
        let da = self.den.exact_div(&g).expect("gcd divides");
        let db = rhs.den.exact_div(&g).expect("gcd divides");
        let num = &(&self.num * &db) + &(&rhs.num * &da);
        let den = &self.den * &db;
        YRat::reduced(num, den, ctx)
    }

    pub fn sub(&self, rhs: &YRat, ctx: &Context) -> YRat {
        self.add(&rhs.neg(), ctx)
    }

    pub fn neg(&self) -> YRat {
        YRat {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, rhs: &YRat, ctx: &Context) -> YRat {
        if self.is_zero() || rhs.is_zero() {
            return YRat::zero();
        }
        let g1 = YPoly::gcd(&self.num, &rhs.den);
        let g2 = YPoly::gcd(&rhs.num, &self.den);
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        YRat::reduced(&n1 * &n2, &d1 * &d2, ctx)
    }

    pub fn div(&self, rhs: &YRat, ctx: &Context) -> Result<YRat> {
        Ok(self.mul(&rhs.recip(ctx)?, ctx))
    }

    pub fn recip(&self, ctx: &Context) -> Result<YRat> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // renormalization of the swapped pair needs no gcd work, only units
        let num = self.den.clone();
        let den = self.num.clone();
        if let Some(c) = den.as_constant() {
            let inv = c.recip()?;
            return Ok(YRat {
                num: num.scale(&inv),
                den: YPoly::one(),
            });
        }
        let u = sigma_monic_unit(&den, ctx);
        Ok(YRat {
            num: num.scale(&u),
            den: den.scale(&u),
        })
    }

    pub fn scale(&self, c: &CoeffElem) -> YRat {
        if c.is_zero() {
            return YRat::zero();
        }
        YRat {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &YPoly, ctx: &Context) -> YRat {
        self.mul(&YRat::from_poly(p.clone()), ctx)
    }

    pub fn pow(&self, k: i64, ctx: &Context) -> Result<YRat> {
        if k == 0 {
            return Ok(YRat::one());
        }
        let base = if k < 0 { self.recip(ctx)? } else { self.clone() };
        let mut out = YRat::one();
        let mut b = base;
        let mut n = k.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                out = out.mul(&b, ctx);
            }
            n >>= 1;
            if n > 0 {
                b = b.mul(&b, ctx);
            }
        }
        Ok(out)
    }

    /// Split into polynomial part and proper part: self = poly + proper.
    pub fn split_polynomial(&self, ctx: &Context) -> (YPoly, YRat) {
        if self.is_polynomial() {
            return (self.num.clone(), YRat::zero());
        }
        let (q, r) = self.num.div_rem(&self.den).expect("nonzero denominator");
        (q, YRat::reduced(r, self.den.clone(), ctx))
    }

    pub fn eval_y(&self, v: &CoeffElem) -> Result<CoeffElem> {
        let d = self.den.eval(v);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(&self.num.eval(v) / &d)
    }

    /// Fails the canonical-form audit when the stored pair violates the
    /// type invariants; used by tests.
    pub fn audit_canonical(&self, ctx: &Context) -> bool {
        if self.num.is_zero() {
            return self.den.is_one();
        }
        if !YPoly::gcd(&self.num, &self.den).is_one() {
            return false;
        }
        if self.den.is_constant() {
            return self.den.is_one();
        }
        sigma_monic_unit(&self.den, ctx).is_one()
    }
}

impl fmt::Debug for YRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "[{:?}] / [{:?}]", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::Context;

    fn int(n: i64) -> CoeffElem {
        CoeffElem::from_integer(n)
    }
    fn poly(cs: &[i64]) -> YPoly {
        YPoly::from_coeffs(cs.iter().map(|&n| int(n)).collect())
    }

    #[test]
    fn reduction_and_shift_normalization() {
        let ctx = Context::shift(&[]);
        // (y^2 - 1)/(2y - 2) -> (y + 1)/2
        let f = YRat::new(poly(&[-1, 0, 1]), poly(&[-2, 2]), &ctx).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num().coeff(1), CoeffElem::from_rational(
            num_rational::BigRational::new(1.into(), 2.into()),
        ));
        assert!(f.audit_canonical(&ctx));
    }

    #[test]
    fn q_case_trailing_normalization() {
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        // 1/(qy - 1): canonical denominator has trailing coefficient 1,
        // i.e. -qy + 1.
        let den = YPoly::from_coeffs(vec![-&int(1), q.clone()]);
        let f = YRat::new(YPoly::one(), den, &ctx).unwrap();
        assert_eq!(f.den().constant_term(), int(1));
        assert_eq!(f.den().leading_coeff(), -&q);
        assert!(f.audit_canonical(&ctx));
    }

    #[test]
    fn field_identities() {
        let ctx = Context::shift(&[]);
        let a = YRat::new(poly(&[1]), poly(&[0, 1]), &ctx).unwrap(); // 1/y
        let b = YRat::new(poly(&[1]), poly(&[1, 1]), &ctx).unwrap(); // 1/(y+1)
        let s = a.add(&b, &ctx);
        // 1/y + 1/(y+1) = (2y+1)/(y(y+1))
        let expect = YRat::new(poly(&[1, 2]), poly(&[0, 1, 1]), &ctx).unwrap();
        assert_eq!(s, expect);
        assert_eq!(s.sub(&b, &ctx), a);
        let p = a.mul(&b, &ctx);
        assert_eq!(
            p,
            YRat::new(poly(&[1]), poly(&[0, 1, 1]), &ctx).unwrap()
        );
    }

    #[test]
    fn split_polynomial_part() {
        let ctx = Context::shift(&[]);
        let f = YRat::new(poly(&[-2, 2, 4, 1]), poly(&[2, 3, 1]), &ctx).unwrap();
        let (p, r) = f.split_polynomial(&ctx);
        assert_eq!(p, poly(&[1, 1]));
        assert!(r.is_proper());
        let back = YRat::from_poly(p).add(&r, &ctx);
        assert_eq!(back, f);
    }
}
