//! Partial fraction decomposition over pairwise coprime factor powers.

use super::coeff::CoeffElem;
use super::ypoly::YPoly;
use super::yrat::YRat;
use crate::context::Context;
use crate::error::{Error, Result};

/// Decompose num/prod(moduli) into numerators over each modulus:
/// num/prod = sum_i out_i/moduli_i, with deg(out_i) < deg(moduli_i).
///
/// Requires deg(num) < deg(prod) and pairwise coprime moduli. The moduli
/// are taken exactly as given; no reduction is applied to the pieces.
pub fn partial_fractions_raw(num: &YPoly, moduli: &[YPoly]) -> Result<Vec<YPoly>> {
    if moduli.iter().any(|m| m.is_zero()) {
        return Err(Error::FactorMismatch);
    }
    let total_deg: usize = moduli.iter().map(|m| m.deg().unwrap_or(0)).sum();
    if !num.is_zero() && num.deg().unwrap_or(0) >= total_deg {
        return Err(Error::FactorMismatch);
    }
    let mut out = Vec::with_capacity(moduli.len());
    let mut rest_num = num.clone();
    for i in 0..moduli.len() {
        if i + 1 == moduli.len() {
            out.push(rest_num.clone());
            break;
        }
        let m = &moduli[i];
        let rest: YPoly = moduli[i + 1..]
            .iter()
            .fold(YPoly::one(), |acc, f| &acc * f);
        if m.is_constant() {
            // constant modulus absorbs nothing
            out.push(YPoly::zero());
            rest_num = rest_num.scale(&m.as_constant().unwrap().recip()?);
            continue;
        }
        let (g, s, t) = YPoly::ext_gcd(m, &rest);
        if !g.is_one() {
            return Err(Error::FactorMismatch);
        }
        // 1/(m*rest) = t/m + s/rest, so num/(m*rest) = num*t/m + num*s/rest
        let (spill, piece) = (&rest_num * &t).div_rem(m)?;
        out.push(piece);
        rest_num = &(&rest_num * &s) + &(&spill * &rest);
        // properness of the running fraction is forced by properness of
        // the input and the pieces already emitted
        if !rest_num.is_zero() && rest_num.deg().unwrap_or(0) >= rest.deg().unwrap_or(1) {
            return Err(Error::Internal("partial fractions lost properness".into()));
        }
    }
    Ok(out)
}

/// Partial fraction decomposition of a proper rational function f with
/// respect to factor powers (factor_i, mult_i): f = sum f_i with each f_i
/// zero or proper with denominator dividing factor_i^{mult_i}.
///
/// The product of the factor powers must equal den(f) up to a unit in F.
pub fn partial_fractions(
    f: &YRat,
    factors: &[(YPoly, usize)],
    ctx: &Context,
) -> Result<Vec<YRat>> {
    if f.is_zero() {
        return Ok(vec![YRat::zero(); factors.len()]);
    }
    if !f.is_proper() {
        return Err(Error::FactorMismatch);
    }
    let moduli: Vec<YPoly> = factors
        .iter()
        .map(|(p, k)| p.pow(*k as u32))
        .collect();
    let product = moduli.iter().fold(YPoly::one(), |acc, m| &acc * m);
    // the product must match the denominator up to a unit
    let unit = match unit_quotient(&product, f.den()) {
        Some(u) => u,
        None => return Err(Error::FactorMismatch),
    };
    let num = f.num().scale(&unit);
    let pieces = partial_fractions_raw(&num, &moduli)?;
    pieces
        .into_iter()
        .zip(moduli)
        .map(|(n, m)| YRat::new(n, m, ctx))
        .collect()
}

/// The constant c with a = c * b, when it exists.
pub(crate) fn unit_quotient(a: &YPoly, b: &YPoly) -> Option<CoeffElem> {
    if a.deg() != b.deg() {
        return None;
    }
    match a.exact_div(b) {
        Ok(q) => q.as_constant(),
        Err(_) => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> CoeffElem {
        CoeffElem::from_integer(n)
    }
    fn poly(cs: &[i64]) -> YPoly {
        YPoly::from_coeffs(cs.iter().map(|&n| int(n)).collect())
    }

    #[test]
    fn paper_q_example() {
        // -q(q-1)y / ((qy-1)(q^2 y - 1)) splits into proper summands that
        // re-add to the input
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        let f1 = YPoly::from_coeffs(vec![-&int(1), q.clone()]);
        let f2 = YPoly::from_coeffs(vec![-&int(1), &q * &q]);
        let num = YPoly::monomial(-&(&q * &(&q - &int(1))), 1);
        let f = YRat::new(num, &f1 * &f2, &ctx).unwrap();
        let parts = partial_fractions(&f, &[(f1.clone(), 1), (f2.clone(), 1)], &ctx).unwrap();
        assert_eq!(parts.len(), 2);
        for (p, m) in parts.iter().zip([&f1, &f2]) {
            assert!(p.is_proper());
            assert!(p.den().divides(m));
        }
        let sum = parts[0].add(&parts[1], &ctx);
        assert_eq!(sum, f);
    }

    #[test]
    fn single_factor_is_identity() {
        let ctx = Context::shift(&[]);
        let f = YRat::new(poly(&[1]), poly(&[1, 1]), &ctx).unwrap();
        let parts = partial_fractions(&f, &[(poly(&[1, 1]), 1)], &ctx).unwrap();
        assert_eq!(parts, vec![f]);
    }

    #[test]
    fn multiplicity_split() {
        let ctx = Context::shift(&[]);
        // 1/((y+1)^2 (y+2)) = a/(y+1)^2 + b/(y+2)
        let d1 = poly(&[1, 1]);
        let d2 = poly(&[2, 1]);
        let den = &(&d1 * &d1) * &d2;
        let f = YRat::new(poly(&[1]), den, &ctx).unwrap();
        let parts = partial_fractions(&f, &[(d1.clone(), 2), (d2.clone(), 1)], &ctx).unwrap();
        let sum = parts[0].add(&parts[1], &ctx);
        assert_eq!(sum, f);
        assert!(parts[0].den().divides(&(&d1 * &d1)));
        assert!(parts[1].den().divides(&d2));
    }

    #[test]
    fn mismatch_is_reported() {
        let ctx = Context::shift(&[]);
        let f = YRat::new(poly(&[1]), poly(&[0, 1, 1]), &ctx).unwrap(); // 1/(y(y+1))
        let err = partial_fractions(&f, &[(poly(&[1, 1]), 1)], &ctx);
        assert_eq!(err, Err(Error::FactorMismatch));
    }
}
