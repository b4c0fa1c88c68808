//! Laurent polynomials in y over F, used for the special reduction in the
//! q-shift case.

use std::collections::BTreeMap;
use std::fmt;

use super::coeff::CoeffElem;
use super::ypoly::YPoly;
use super::yrat::YRat;
use crate::context::Context;

/// A Laurent polynomial sum of c_i * y^i with i ranging over Z.
///
/// Conventions: hdeg(0) = None standing for -infinity, tdeg(0) = None
/// standing for +infinity.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, CoeffElem>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial(c: CoeffElem, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_ypoly(p: &YPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(i as i64, c.clone());
            }
        }
        LaurentPoly { terms }
    }

    /// Head degree: the largest exponent carrying a nonzero coefficient.
    pub fn hdeg(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Tail degree: the smallest exponent carrying a nonzero coefficient.
    pub fn tdeg(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn coeff(&self, k: i64) -> CoeffElem {
        self.terms.get(&k).cloned().unwrap_or_else(CoeffElem::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&i64, &CoeffElem)> {
        self.terms.iter()
    }

    pub fn add(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let v = match terms.get(k) {
                Some(prev) => prev + c,
                None => c.clone(),
            };
            if v.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(*k, v);
            }
        }
        LaurentPoly { terms }
    }

    pub fn sub(&self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn mul(&self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out = out.add(&LaurentPoly::monomial(ca * cb, ka + kb));
            }
        }
        out
    }

    pub fn mul_ypoly(&self, p: &YPoly) -> LaurentPoly {
        self.mul(&LaurentPoly::from_ypoly(p))
    }

    /// True when no negative powers occur.
    pub fn is_polynomial(&self) -> bool {
        self.tdeg().map(|t| t >= 0).unwrap_or(true)
    }

    /// Convert into a YPoly; requires no negative exponents.
    pub fn to_ypoly(&self) -> Option<YPoly> {
        if !self.is_polynomial() {
            return None;
        }
        let h = match self.hdeg() {
            None => return Some(YPoly::zero()),
            Some(h) => h,
        };
        let mut coeffs = vec![CoeffElem::zero(); (h + 1) as usize];
        for (k, c) in &self.terms {
            coeffs[*k as usize] = c.clone();
        }
        Some(YPoly::from_coeffs(coeffs))
    }

    /// The value as a rational function n(y)/y^k.
    pub fn to_yrat(&self, ctx: &Context) -> YRat {
        if self.is_zero() {
            return YRat::zero();
        }
        let t = self.tdeg().unwrap();
        let shift = if t < 0 { (-t) as usize } else { 0 };
        let mut coeffs = vec![CoeffElem::zero(); (self.hdeg().unwrap() + shift as i64 + 1) as usize];
        for (k, c) in &self.terms {
            coeffs[(k + shift as i64) as usize] = c.clone();
        }
        let num = YPoly::from_coeffs(coeffs);
        let den = YPoly::monomial(CoeffElem::one(), shift);
        YRat::new(num, den, ctx).expect("nonzero denominator")
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})*y^{}", c, k)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> CoeffElem {
        CoeffElem::from_integer(n)
    }

    #[test]
    fn degree_conventions() {
        let z = LaurentPoly::zero();
        assert_eq!(z.hdeg(), None);
        assert_eq!(z.tdeg(), None);
        let p = LaurentPoly::monomial(int(1), -2).add(&LaurentPoly::monomial(int(3), 1));
        assert_eq!(p.hdeg(), Some(1));
        assert_eq!(p.tdeg(), Some(-2));
    }

    #[test]
    fn roundtrip_yrat() {
        let ctx = Context::qshift(&[]);
        let p = LaurentPoly::monomial(int(5), -2).add(&LaurentPoly::monomial(int(1), 0));
        let r = p.to_yrat(&ctx);
        // (y^2 + 5)/y^2
        assert_eq!(r.den(), &YPoly::monomial(int(1), 2));
        assert_eq!(r.num().coeff(0), int(5));
        assert_eq!(r.num().coeff(2), int(1));
    }
}
