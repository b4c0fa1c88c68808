//! sigma_y-coprime decompositions and strong sigma_y-factorizations.

use crate::arith::{YPoly, YRat};
use crate::context::Context;
use crate::error::{Error, Result};

use super::classes::{group_classes, refine_atoms, Atom};
use super::dispersion::{dispersion_set, is_sigma_normal};
use super::op_exponent::OpExponent;
use super::rnf::is_sigma_reduced;
use super::shifts::shift_y_poly;
use super::splitting::splitting_factorization;
use super::{op_power, sigma_monic};

/// A factored form f = special * prod_i base_i^{alpha_i} with the bases
/// sigma_y-monic, sigma_y-normal and pairwise sigma_y-coprime, and the
/// special part a quotient of sigma_y-special polynomials.
#[derive(Clone, Debug)]
pub struct SigmaFactorization {
    pub special: YRat,
    pub parts: Vec<(YPoly, OpExponent)>,
}

impl SigmaFactorization {
    /// Multiply the factorization back out.
    pub fn expand(&self, ctx: &Context) -> YRat {
        let mut out = self.special.clone();
        for (base, alpha) in &self.parts {
            out = out.mul(&op_power(base, alpha, ctx), ctx);
        }
        out
    }
}

/// Strong sigma_y-factorization of p with respect to a sigma_y-reduced
/// kernel K: p = special * prod base_i^{alpha_i} where additionally every
/// base is strongly coprime with K and every alpha_i lies in
/// N[sigma, sigma^{-1}] \ {0}.
pub fn strong_sigma_factorization(
    p: &YPoly,
    kernel: &YRat,
    ctx: &Context,
) -> Result<SigmaFactorization> {
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !is_sigma_reduced(kernel, ctx)? {
        return Err(Error::NotReduced);
    }
    let (special, normal) = splitting_factorization(p, ctx)?;
    if normal.is_constant() {
        let unit = normal.as_constant().unwrap();
        return Ok(SigmaFactorization {
            special: YRat::from_poly(special.scale(&unit)),
            parts: Vec::new(),
        });
    }

    let u = kernel.num();
    let v = kernel.den();
    let atoms: Vec<Atom> = normal
        .squarefree_decomposition()?
        .into_iter()
        .map(|(f, m)| Atom {
            poly: f.monic(),
            mult: m,
        })
        .collect();
    let refined = refine_atoms(atoms, &[u.clone(), v.clone()], ctx)?;
    let classes = group_classes(&refined, ctx)?;

    let mut parts = Vec::new();
    for class in classes {
        let mut alpha = OpExponent::zero();
        for (offset, mult) in &class.members {
            alpha.add_term(*offset, *mult as i64);
        }
        // sigma-exponents of the base in u and in v decide the offset that
        // makes the base strongly coprime with K
        let lambda = exponent_in(u, &class.base, ctx)?;
        let mu = exponent_in(v, &class.base, ctx)?;
        if !lambda.is_zero() && !mu.is_zero() {
            return Err(Error::NotReduced);
        }
        let offset = if lambda.is_zero() && mu.is_zero() {
            0
        } else if lambda.is_zero() {
            mu.tdeg().unwrap() - 1
        } else {
            lambda.hdeg().unwrap() + 1
        };
        let base = sigma_monic(&shift_y_poly(&class.base, offset, ctx), ctx);
        parts.push((base, alpha.shifted(-offset)));
    }

    // the bases are sigma_y-monic, so a single unit in F remains
    let mut fac = SigmaFactorization {
        special: YRat::from_poly(special),
        parts,
    };
    let expanded = fac.expand(ctx);
    let unit = YRat::from_poly(p.clone())
        .div(&expanded, ctx)?
        .as_constant()
        .ok_or_else(|| Error::Internal("factorization does not re-expand".into()))?;
    fac.special = fac.special.scale(&unit);
    Ok(fac)
}

/// The sigma_y-exponent of base in p: sum of mult * sigma^l over the shifts
/// l with sigma^l(base) dividing p. Requires the interaction to be by full
/// divisibility, which the class refinement has arranged for its callers.
fn exponent_in(p: &YPoly, base: &YPoly, ctx: &Context) -> Result<OpExponent> {
    let mut out = OpExponent::zero();
    if p.is_constant() || base.is_constant() {
        return Ok(out);
    }
    for l in dispersion_set(p, base, ctx)? {
        let shifted = shift_y_poly(base, l, ctx);
        let mult = p.multiplicity_of(&shifted);
        if mult == 0 {
            return Err(Error::Internal(
                "partial overlap with kernel after refinement".into(),
            ));
        }
        out.add_term(l, mult as i64);
    }
    Ok(out)
}

/// sigma_y-coprime decomposition of e with respect to d: a factorization
/// e = etilde * prod_i sigma^{l_i}(d_i)^{k_i} with etilde sigma_y-coprime
/// with d, the d_i sigma_y-monic factors of d, distinct (d_i, k_i, l_i)
/// triples, and l_i nonzero. The product re-expands to e exactly.
pub fn sigma_coprime_decomposition(
    e: &YPoly,
    d: &YPoly,
    ctx: &Context,
) -> Result<(YPoly, Vec<(YPoly, usize, i64)>)> {
    if e.is_zero() || d.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !is_sigma_normal(e, ctx)? || !is_sigma_normal(d, ctx)? {
        return Err(Error::SpecialFactor);
    }
    let mut etilde = e.clone();
    let mut parts: Vec<(YPoly, usize, i64)> = Vec::new();
    if e.is_constant() || d.is_constant() {
        return Ok((etilde, parts));
    }
    let rad_d = d.radical()?;
    for l in dispersion_set(e, &rad_d, ctx)? {
        if l == 0 {
            continue;
        }
        let shifted = shift_y_poly(&rad_d, l, ctx);
        let w = YPoly::gcd(&etilde, &shifted);
        if w.is_constant() {
            continue;
        }
        // stratify w by its multiplicity in etilde
        let mut s_k = w;
        let mut a_k = etilde.exact_div(&s_k)?;
        let mut k = 1usize;
        loop {
            let s_next = YPoly::gcd(&a_k, &s_k);
            let piece = s_k.exact_div(&s_next)?;
            if !piece.is_constant() {
                let d_i = sigma_monic(&shift_y_poly(&piece, -l, ctx), ctx);
                parts.push((d_i, k, l));
                etilde = etilde.exact_div(&piece.pow(k as u32))?;
            }
            if s_next.is_constant() {
                break;
            }
            a_k = a_k.exact_div(&s_next)?;
            s_k = s_next;
            k += 1;
        }
    }
    Ok((etilde, parts))
}
