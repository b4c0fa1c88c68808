//! Splitting a polynomial into its sigma_y-special and sigma_y-normal parts.
//!
//! In the usual shift case the special polynomials are exactly the constants;
//! in the q-shift case they are the monomials c*y^k. Both classifications
//! admit a closed form, so no irreducible factorization is needed.

use crate::arith::{YPoly, YRat};
use crate::context::{Context, ShiftCase};
use crate::error::{Error, Result};

/// p = special * normal with special sigma_y-special, every irreducible
/// factor of normal sigma_y-normal, and normal sigma_y-monic.
pub fn splitting_factorization(p: &YPoly, ctx: &Context) -> Result<(YPoly, YPoly)> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    match ctx.case() {
        ShiftCase::Shift => {
            let lc = p.leading_coeff();
            Ok((YPoly::constant(lc), p.monic()))
        }
        ShiftCase::QShift => {
            let (k, rest) = p.strip_y_power();
            let unit = rest.constant_term();
            let normal = rest.scale(&unit.recip()?);
            let special = YPoly::monomial(unit, k);
            Ok((special, normal))
        }
    }
}

/// Unit-normalization to the sigma_y-monic representative, together with
/// the unit: p = unit * monic.
pub fn sigma_monic_with_unit(p: &YPoly, ctx: &Context) -> (crate::arith::CoeffElem, YPoly) {
    if p.is_zero() {
        return (crate::arith::CoeffElem::one(), YPoly::zero());
    }
    let u = crate::arith::yrat_sigma_monic_unit(p, ctx);
    (u.recip().expect("nonzero unit"), p.scale(&u))
}

/// Quick check that p is sigma_y-special (constant, or c*y^k in the
/// q-shift case).
pub fn is_sigma_special(p: &YPoly, ctx: &Context) -> bool {
    if p.is_constant() {
        return true;
    }
    match ctx.case() {
        ShiftCase::Shift => false,
        ShiftCase::QShift => {
            let (_, rest) = p.strip_y_power();
            rest.is_constant()
        }
    }
}

/// True when p has a special factor beyond units.
pub fn has_special_factor(p: &YPoly, ctx: &Context) -> bool {
    match ctx.case() {
        ShiftCase::Shift => false,
        ShiftCase::QShift => !p.is_zero() && p.constant_term().is_zero(),
    }
}

/// Splitting for rational functions: f = special * normal with the special
/// part a quotient of sigma_y-special polynomials.
pub fn splitting_factorization_rat(f: &YRat, ctx: &Context) -> Result<(YRat, YRat)> {
    let (ns, nn) = splitting_factorization(f.num(), ctx)?;
    let (ds, dn) = splitting_factorization(f.den(), ctx)?;
    let special = YRat::new(ns, ds, ctx)?;
    let normal = YRat::new(nn, dn, ctx)?;
    Ok((special, normal))
}

/// Detect k with f = c * y^k for constant c (the q-case invariance lemma);
/// in the shift case only constants qualify (k = 0).
pub fn special_exponent(f: &YRat, ctx: &Context) -> Option<i64> {
    if f.is_zero() {
        return None;
    }
    let (kn, rn) = f.num().strip_y_power();
    let (kd, rd) = f.den().strip_y_power();
    if rn.is_constant() && rd.is_constant() {
        let k = kn as i64 - kd as i64;
        if ctx.case() == ShiftCase::Shift && k != 0 {
            return None;
        }
        Some(k)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::CoeffElem;
    use crate::shift::shifts::shift_y_poly;

    fn int(n: i64) -> CoeffElem {
        CoeffElem::from_integer(n)
    }
    fn poly(cs: &[i64]) -> YPoly {
        YPoly::from_coeffs(cs.iter().map(|&n| int(n)).collect())
    }

    #[test]
    fn shift_case_everything_is_normal() {
        let ctx = Context::shift(&[]);
        let p = poly(&[2, 0, 4]); // 4y^2 + 2
        let (s, n) = splitting_factorization(&p, &ctx).unwrap();
        assert_eq!(s, YPoly::constant(int(4)));
        assert_eq!(n, p.monic());
        assert_eq!(&s * &n, p);
    }

    #[test]
    fn q_case_strips_y_power() {
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        // y^3 (qy - 1)
        let f = YPoly::from_coeffs(vec![-&int(1), q.clone()]);
        let p = f.shift_up(3);
        let (s, n) = splitting_factorization(&p, &ctx).unwrap();
        // special = -y^3, normal = 1 - qy (trailing coefficient 1)
        assert_eq!(s, YPoly::monomial(-&int(1), 3));
        assert_eq!(n, YPoly::from_coeffs(vec![int(1), -&q]));
        assert_eq!(&s * &n, p);
        assert!(is_sigma_special(&s, &ctx));
        assert!(!has_special_factor(&n, &ctx));
    }

    #[test]
    fn q_monomial_invariance_detector() {
        let ctx = Context::qshift(&[]);
        // f = 5 y^3: f(q^l y) = q^{3l} f(y)
        let f = YRat::new(YPoly::monomial(int(5), 3), YPoly::one(), &ctx).unwrap();
        assert_eq!(special_exponent(&f, &ctx), Some(3));
        let g = shift_y_poly(f.num(), 2, &ctx);
        let ratio = g.coeff(3).pow(1);
        assert_eq!(&ratio / &f.num().coeff(3), ctx.q_pow(6));
    }
}
