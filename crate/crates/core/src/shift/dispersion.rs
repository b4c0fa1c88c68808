//! Dispersion computation: the set of integer shift distances at which two
//! polynomials share a factor.
//!
//! Candidates come from a resultant in an auxiliary variable t; every
//! candidate is verified by an exact gcd, so the candidate step may
//! overshoot but never lies.
//!
//! Usual shift case: integer roots of Res_y(a(y), b(y+t)) in t, isolated by
//! Sturm sequences after specializing the parameters at a sample point.
//! q-shift case: exponents l with q^l a root of Res_y(a(y), b(t*y)); the
//! candidate l are the integer slopes of the q-degree differences of the
//! coefficients, complete because the top q-degree terms must cancel.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{CoeffElem, ParamPoly, YPoly};
use crate::context::{Context, ShiftCase};
use crate::error::{Error, Result};

use super::shifts::shift_y_poly;
use super::splitting::has_special_factor;

/// The set {l in Z : gcd(a, sigma_y^l(b)) is nonconstant}.
///
/// Both inputs must be nonzero with no nontrivial sigma_y-special factors.
pub fn dispersion_set(a: &YPoly, b: &YPoly, ctx: &Context) -> Result<BTreeSet<i64>> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroInput);
    }
    if has_special_factor(a, ctx) || has_special_factor(b, ctx) {
        return Err(Error::SpecialFactor);
    }
    let mut out = BTreeSet::new();
    if a.is_constant() || b.is_constant() {
        return Ok(out);
    }
    for cand in candidate_shifts(a, b, ctx)? {
        if !YPoly::gcd(a, &shift_y_poly(b, cand, ctx)).is_constant() {
            out.insert(cand);
        }
    }
    Ok(out)
}

/// A polynomial is sigma_y-normal when it shares no factor with any of its
/// proper shifts.
pub fn is_sigma_normal(p: &YPoly, ctx: &Context) -> Result<bool> {
    if p.is_zero() {
        return Ok(false);
    }
    if p.is_constant() {
        return Ok(true);
    }
    if has_special_factor(p, ctx) {
        return Ok(false);
    }
    let d = dispersion_set(p, p, ctx)?;
    Ok(d.iter().all(|l| *l == 0))
}

fn candidate_shifts(a: &YPoly, b: &YPoly, ctx: &Context) -> Result<BTreeSet<i64>> {
    let tvar = ctx.num_vars(); // auxiliary variable slot past the session vars
    let shifted_b = match ctx.case() {
        ShiftCase::Shift => substitute_y_plus_t(b, tvar),
        ShiftCase::QShift => substitute_ty(b, tvar),
    };
    let locus = YPoly::resultant_scaled(a, &shifted_b);
    if locus.is_zero() {
        // a common factor across all shifts would be sigma_y-special
        return Err(Error::SpecialFactor);
    }
    let poly_t = locus.num();
    let mut cands = BTreeSet::new();
    cands.insert(0);
    match ctx.case() {
        ShiftCase::Shift => {
            for l in integer_roots_specialized(poly_t, tvar)? {
                cands.insert(l);
            }
        }
        ShiftCase::QShift => {
            let qidx = ctx.q_index().expect("q-shift case");
            for l in q_slope_candidates(poly_t, tvar, qidx) {
                cands.insert(l);
            }
        }
    }
    Ok(cands)
}

/// b(y + t) with t a fresh parameter variable.
fn substitute_y_plus_t(b: &YPoly, tvar: usize) -> YPoly {
    let t = CoeffElem::from_poly(ParamPoly::var(tvar));
    let mut out = YPoly::zero();
    for c in b.coeffs().iter().rev() {
        // out = out * (y + t) + c
        let shifted = &out.shift_up(1) + &out.scale(&t);
        out = &shifted + &YPoly::constant(c.clone());
    }
    out
}

/// b(t * y) with t a fresh parameter variable.
fn substitute_ty(b: &YPoly, tvar: usize) -> YPoly {
    let t = CoeffElem::from_poly(ParamPoly::var(tvar));
    YPoly::from_coeffs(
        b.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| c * &t.pow(i as i64))
            .collect(),
    )
}

/// Integer roots in t of a multivariate polynomial, obtained by
/// specializing the other variables at sample points and isolating the
/// integer roots of the resulting rational polynomial. Specialization can
/// only add candidates, never lose a root.
fn integer_roots_specialized(p: &ParamPoly, tvar: usize) -> Result<Vec<i64>> {
    let coeffs = p.coeffs_in(tvar);
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    for attempt in 0..64u32 {
        let values = sample_point(tvar, attempt);
        let spec: Vec<BigRational> = coeffs.iter().map(|c| c.eval(&values)).collect();
        if spec.iter().all(|c| c.is_zero()) {
            continue; // unlucky point on the zero locus
        }
        return Ok(integer_roots_rational(&spec));
    }
    Err(Error::Internal(
        "failed to specialize dispersion resultant".into(),
    ))
}

fn sample_point(nvars: usize, attempt: u32) -> Vec<BigRational> {
    // deterministic sequence of sample values avoiding small collisions
    (0..nvars)
        .map(|i| {
            let num = 3 + 2 * i as i64 + 5 * attempt as i64 + (i as i64) * (attempt as i64);
            let den = 2 + (i as i64 % 3);
            BigRational::new(BigInt::from(2 * num + 1), BigInt::from(den))
        })
        .collect()
}

/// Integer roots of a dense univariate rational polynomial via Sturm
/// sequences: isolate the real roots, then test the integers inside the
/// isolating intervals exactly.
fn integer_roots_rational(coeffs: &[BigRational]) -> Vec<i64> {
    // strip trailing/leading zeros; t = 0 is never needed by callers (the
    // zero shift is always tested directly)
    let mut c: Vec<BigRational> = coeffs.to_vec();
    while c.last().map(|x| x.is_zero()).unwrap_or(false) {
        c.pop();
    }
    if c.len() <= 1 {
        return Vec::new();
    }
    let first_nonzero = c.iter().position(|x| !x.is_zero()).unwrap();
    let c = c[first_nonzero..].to_vec();
    if c.len() <= 1 {
        return Vec::new();
    }
    // squarefree part for the Sturm chain
    let sf = squarefree_univariate(&c);
    let chain = sturm_chain(&sf);
    // Cauchy bound
    let lead = sf.last().unwrap();
    let bound = sf
        .iter()
        .map(|x| (x / lead).abs())
        .fold(BigRational::zero(), |a, b| if a > b { a } else { b })
        + BigRational::one();
    let b: BigInt = bound.to_integer() + 1;
    let lo = -b.clone() - 1;
    let mut out = Vec::new();
    isolate_integer_roots(&chain, &c, lo, b, &mut out);
    out.sort();
    out
}

fn eval_dense(c: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for k in c.iter().rev() {
        acc = acc * x + k;
    }
    acc
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut q = vec![BigRational::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let dr = r.len() - 1;
        let f = r.last().unwrap() / &lb;
        if !f.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                let idx = dr - db + j;
                let v = &r[idx] - &(&f * bc);
                r[idx] = v;
            }
            q[dr - db] = f;
        }
        r.pop();
        while r.last().map(|x| x.is_zero()).unwrap_or(false) {
            r.pop();
        }
    }
    (q, r)
}

fn derivative_dense(c: &[BigRational]) -> Vec<BigRational> {
    c.iter()
        .enumerate()
        .skip(1)
        .map(|(i, x)| x * BigRational::from_integer(BigInt::from(i)))
        .collect()
}

fn gcd_dense(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut f = a.to_vec();
    let mut g = b.to_vec();
    while !g.is_empty() {
        let (_, r) = poly_divmod(&f, &g);
        f = g;
        g = r;
    }
    f
}

fn squarefree_univariate(c: &[BigRational]) -> Vec<BigRational> {
    let d = derivative_dense(c);
    if d.is_empty() {
        return c.to_vec();
    }
    let g = gcd_dense(c, &d);
    if g.len() <= 1 {
        return c.to_vec();
    }
    let (q, _) = poly_divmod(c, &g);
    q
}

fn sturm_chain(c: &[BigRational]) -> Vec<Vec<BigRational>> {
    let mut chain = vec![c.to_vec(), derivative_dense(c)];
    loop {
        let n = chain.len();
        if chain[n - 1].is_empty() {
            chain.pop();
            break;
        }
        if chain[n - 1].len() == 1 {
            break;
        }
        let (_, r) = poly_divmod(&chain[n - 2], &chain[n - 1]);
        chain.push(r.iter().map(|x| -x).collect());
    }
    chain
}

fn sign_variations(chain: &[Vec<BigRational>], x: &BigRational) -> usize {
    let mut count = 0;
    let mut prev: Option<bool> = None;
    for p in chain {
        let v = eval_dense(p, x);
        if v.is_zero() {
            continue;
        }
        let s = v.is_positive();
        if let Some(ps) = prev {
            if ps != s {
                count += 1;
            }
        }
        prev = Some(s);
    }
    count
}

/// Collect integer roots of the original polynomial `orig` inside (lo, hi],
/// guided by the Sturm chain of its squarefree part.
fn isolate_integer_roots(
    chain: &[Vec<BigRational>],
    orig: &[BigRational],
    lo: BigInt,
    hi: BigInt,
    out: &mut Vec<i64>,
) {
    if lo >= hi {
        return;
    }
    let vlo = sign_variations(chain, &BigRational::from_integer(lo.clone()));
    let vhi = sign_variations(chain, &BigRational::from_integer(hi.clone()));
    if vlo == vhi {
        return;
    }
    if &hi - &lo == BigInt::one() {
        // only the integer hi lies in (lo, hi]
        if eval_dense(orig, &BigRational::from_integer(hi.clone())).is_zero() {
            if let Ok(v) = i64::try_from(hi) {
                out.push(v);
            }
        }
        return;
    }
    let mid = (&lo + &hi) / BigInt::from(2);
    isolate_integer_roots(chain, orig, lo, mid.clone(), out);
    isolate_integer_roots(chain, orig, mid, hi, out);
}

/// Candidate exponents l with q^l a potential root of the resultant: for
/// the top q-degrees to cancel, two coefficients must align, so l is a
/// difference quotient of head q-degrees.
fn q_slope_candidates(p: &ParamPoly, tvar: usize, qidx: usize) -> BTreeSet<i64> {
    let coeffs = p.coeffs_in(tvar);
    let present: Vec<(i64, i64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as i64, c.degree_in(qidx).unwrap_or(0) as i64))
        .collect();
    let mut out = BTreeSet::new();
    for (i, (ti, hi)) in present.iter().enumerate() {
        for (tj, hj) in present.iter().skip(i + 1) {
            let dt = tj - ti;
            let dh = hi - hj;
            if dh % dt == 0 {
                out.insert(dh / dt);
            }
        }
    }
    out
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
    fn shift_case_simple() {
        let ctx = Context::shift(&[]);
        // a = y + 2, b = y: gcd(a, y + l) nontrivial iff l = 2
        let a = poly(&[2, 1]);
        let b = poly(&[0, 1]);
        let d = dispersion_set(&a, &b, &ctx).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn shift_case_large_distance() {
        let ctx = Context::shift(&[]);
        let a = &poly(&[0, 1]) * &poly(&[-97, 1]); // y (y - 97)
        let b = poly(&[3, 1]); // y + 3
        let d = dispersion_set(&a, &b, &ctx).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![-100, -3]);
    }

    #[test]
    fn q_case_example() {
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        // a = qy - 1, b = q^2 y - 1: sigma^{-1}(b) = qy - 1 = a
        let a = YPoly::from_coeffs(vec![-&int(1), q.clone()]);
        let b = YPoly::from_coeffs(vec![-&int(1), &q * &q]);
        let d = dispersion_set(&a, &b, &ctx).unwrap();
        assert_eq!(d.into_iter().collect::<Vec<_>>(), vec![-1]);
    }

    #[test]
    fn coprime_inputs_give_empty_set() {
        let ctx = Context::shift(&[]);
        let x = ctx.x();
        // y^2 + x has no integer-shift overlap with y + 1
        let a = YPoly::from_coeffs(vec![x, int(0), int(1)]);
        let b = poly(&[1, 1]);
        let d = dispersion_set(&a, &b, &ctx).unwrap();
        assert!(d.is_empty());
    }

    #[test]
    fn normality_check() {
        let ctx = Context::shift(&[]);
        assert!(is_sigma_normal(&poly(&[1, 1]), &ctx).unwrap());
        // y(y+1) is not sigma-normal
        let p = &poly(&[0, 1]) * &poly(&[1, 1]);
        assert!(!is_sigma_normal(&p, &ctx).unwrap());
        // (y+1)^2 is sigma-normal
        let sq = &poly(&[1, 1]) * &poly(&[1, 1]);
        assert!(is_sigma_normal(&sq, &ctx).unwrap());
    }

    #[test]
    fn q_case_special_rejected() {
        let ctx = Context::qshift(&[]);
        let a = poly(&[0, 1]); // y
        let b = poly(&[1, 1]);
        assert_eq!(dispersion_set(&a, &b, &ctx), Err(Error::SpecialFactor));
    }
}
