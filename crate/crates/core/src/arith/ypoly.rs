//! Dense univariate polynomials in y over the coefficient field F.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use super::coeff::CoeffElem;
use super::param_poly::{pseudo_rem_vec, ParamPoly};
use crate::error::{Error, Result};

/// Polynomial in F\[y\], dense in y. The zero polynomial has an empty
/// coefficient list; `deg` returns None for it.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct YPoly {
    coeffs: Vec<CoeffElem>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        YPoly::constant(CoeffElem::one())
    }

    pub fn constant(c: CoeffElem) -> Self {
        if c.is_zero() {
            YPoly::zero()
        } else {
            YPoly { coeffs: vec![c] }
        }
    }

    pub fn var() -> Self {
        YPoly::from_coeffs(vec![CoeffElem::zero(), CoeffElem::one()])
    }

    pub fn from_coeffs(coeffs: Vec<CoeffElem>) -> Self {
        let mut p = YPoly { coeffs };
        p.trim();
        p
    }

    /// c * y^k
    pub fn monomial(c: CoeffElem, k: usize) -> Self {
        if c.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![CoeffElem::zero(); k + 1];
        coeffs[k] = c;
        YPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree in y; None for the zero polynomial (deg 0 = -infinity).
    pub fn deg(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> CoeffElem {
        self.coeffs.get(k).cloned().unwrap_or_else(CoeffElem::zero)
    }

    pub fn coeffs(&self) -> &[CoeffElem] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> CoeffElem {
        self.coeffs.last().cloned().unwrap_or_else(CoeffElem::zero)
    }

    /// Trailing nonzero coefficient and its index.
    pub fn trailing_term(&self) -> Option<(usize, &CoeffElem)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }

    pub fn constant_term(&self) -> CoeffElem {
        self.coeff(0)
    }

    pub fn as_constant(&self) -> Option<CoeffElem> {
        if self.is_zero() {
            return Some(CoeffElem::zero());
        }
        if self.coeffs.len() == 1 {
            return Some(self.coeffs[0].clone());
        }
        None
    }

    pub fn scale(&self, c: &CoeffElem) -> Self {
        if c.is_zero() {
            return YPoly::zero();
        }
        YPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn map_coeffs(&self, f: impl Fn(&CoeffElem) -> CoeffElem) -> Self {
        YPoly::from_coeffs(self.coeffs.iter().map(f).collect())
    }

    /// Multiply by y^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs = vec![CoeffElem::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        YPoly { coeffs }
    }

    /// Divide out the largest power of y; returns (power, quotient).
    pub fn strip_y_power(&self) -> (usize, YPoly) {
        if self.is_zero() {
            return (0, YPoly::zero());
        }
        let k = self.trailing_term().map(|(i, _)| i).unwrap_or(0);
        (k, YPoly::from_coeffs(self.coeffs[k..].to_vec()))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return YPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * &CoeffElem::from_integer(i as i64))
            .collect();
        YPoly::from_coeffs(coeffs)
    }

    pub fn eval(&self, v: &CoeffElem) -> CoeffElem {
        let mut acc = CoeffElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * v) + c;
        }
        acc
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = YPoly::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Quotient and remainder of division by a nonzero polynomial.
    pub fn div_rem(&self, d: &YPoly) -> Result<(YPoly, YPoly)> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.deg().unwrap();
        let licv = d.leading_coeff().recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![CoeffElem::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let dr = rem.len() - 1;
            let lead = rem[dr].clone();
            if !lead.is_zero() {
                let q = &lead * &licv;
                for (j, c) in d.coeffs.iter().enumerate() {
                    let t = &q * c;
                    rem[dr - dd + j] = &rem[dr - dd + j] - &t;
                }
                quot[dr - dd] = q;
            }
            rem.pop();
        }
        Ok((YPoly::from_coeffs(quot), YPoly::from_coeffs(rem)))
    }

    pub fn rem(&self, d: &YPoly) -> Result<YPoly> {
        Ok(self.div_rem(d)?.1)
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn exact_div(&self, d: &YPoly) -> Result<YPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn divides(&self, other: &YPoly) -> bool {
        match other.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Multiplicity of d as a factor of self (0 when not a factor).
    pub fn multiplicity_of(&self, d: &YPoly) -> usize {
        let mut k = 0;
        let mut cur = self.clone();
        if d.is_constant() {
            return 0;
        }
        while let Ok((q, r)) = cur.div_rem(d) {
            if !r.is_zero() {
                break;
            }
            k += 1;
            cur = q;
        }
        k
    }

    /// Clear denominators: write self = (1/c) * P with P having ParamPoly
    /// coefficients that are jointly primitive; returns (c, coeffs of P).
    pub fn clear_denominators(&self) -> (CoeffElem, Vec<ParamPoly>) {
        if self.is_zero() {
            return (CoeffElem::one(), Vec::new());
        }
        let mut den = ParamPoly::one();
        for c in &self.coeffs {
            let g = ParamPoly::gcd(&den, c.den());
            den = &den * &c.den().exact_div(&g).expect("gcd divides");
        }
        let mut polys: Vec<ParamPoly> = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let scale = den.exact_div(c.den()).expect("lcm divisible");
            polys.push(c.num() * &scale);
        }
        // extract the overall ParamPoly content
        let mut g = ParamPoly::zero();
        for p in polys.iter().filter(|p| !p.is_zero()) {
            g = ParamPoly::gcd(&g, p);
            if g.is_one() {
                break;
            }
        }
        if !g.is_one() && !g.is_zero() {
            for p in polys.iter_mut() {
                *p = p.exact_div(&g).expect("content divides");
            }
        }
        let unit = CoeffElem::new(den, g).expect("nonzero denominator");
        (unit, polys)
    }

    /// Gcd of two polynomials, returned monic (or 1 for coprime inputs).
    ///
    /// Runs a subresultant PRS over cleared-denominator coefficients; the
    /// known exact divisors keep the parameter polynomials from blowing up
    /// without any content computation inside the loop.
    pub fn gcd(a: &YPoly, b: &YPoly) -> YPoly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return YPoly::one();
        }
        let (_, mut f) = a.clear_denominators();
        let (_, mut g) = b.clear_denominators();
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        let mut lead = ParamPoly::one();
        let mut h = ParamPoly::one();
        loop {
            let delta = (f.len() - g.len()) as u32;
            let r = pseudo_rem_vec(&f, &g);
            if r.is_empty() {
                let yp = YPoly::from_coeffs(
                    g.iter().map(|p| CoeffElem::from_poly(p.clone())).collect(),
                );
                return yp.monic();
            }
            if r.len() == 1 {
                return YPoly::one();
            }
            let divisor = &lead * &h.pow(delta);
            let r: Vec<ParamPoly> = r
                .iter()
                .map(|c| c.exact_div(&divisor).expect("subresultant divisor"))
                .collect();
            lead = g[g.len() - 1].clone();
            h = match delta {
                0 => h,
                1 => lead.clone(),
                _ => lead
                    .pow(delta)
                    .exact_div(&h.pow(delta - 1))
                    .expect("subresultant psi"),
            };
            f = g;
            g = r;
        }
    }

    /// Extended gcd with monic g: s*a + t*b = g. Uses the fraction-field
    /// Euclidean algorithm; the degrees arising in the reductions are small.
    pub fn ext_gcd(a: &YPoly, b: &YPoly) -> (YPoly, YPoly, YPoly) {
        let mut r0 = a.clone();
        let mut r1 = b.clone();
        let mut s0 = YPoly::one();
        let mut s1 = YPoly::zero();
        let mut t0 = YPoly::zero();
        let mut t1 = YPoly::one();
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (YPoly::zero(), YPoly::zero(), YPoly::zero());
        }
        let lc = r0.leading_coeff().recip().expect("nonzero gcd");
        (
            r0.scale(&lc),
            s0.scale(&lc),
            t0.scale(&lc),
        )
    }

    /// Monic normalization (leading coefficient 1); zero stays zero.
    pub fn monic(&self) -> YPoly {
        if self.is_zero() {
            return YPoly::zero();
        }
        let lc = self.leading_coeff().recip().expect("nonzero leading");
        self.scale(&lc)
    }

    /// Resultant locus of a and b with respect to y: a parameter polynomial
    /// whose zero set contains the zero set of Res_y(a, b), and which is
    /// zero exactly when the resultant vanishes identically (gcd in y is
    /// nontrivial over the rational function field of the parameters).
    ///
    /// Computed by a primitive PRS over cleared denominators, accumulating
    /// every stripped content and leading coefficient so that no vanishing
    /// point is lost. Callers verify candidate roots exactly, so extra
    /// factors in the locus are harmless.
    pub fn resultant_scaled(a: &YPoly, b: &YPoly) -> CoeffElem {
        if a.is_zero() || b.is_zero() {
            return CoeffElem::zero();
        }
        if a.is_constant() || b.is_constant() {
            // nonzero constants have trivial resultant locus
            return CoeffElem::one();
        }
        let (_, f) = a.clear_denominators();
        let (_, g) = b.clear_denominators();
        match prs_resultant(f, g) {
            Some(r) => CoeffElem::from_poly(r),
            None => CoeffElem::zero(),
        }
    }

    /// Squarefree decomposition p = unit * prod f_i^{m_i} with the f_i
    /// squarefree, pairwise coprime, monic, and m_i strictly increasing.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(YPoly, usize)>> {
        if self.is_zero() {
            return Err(Error::ZeroInput);
        }
        let p = self.monic();
        if p.is_constant() {
            return Ok(Vec::new());
        }
        // Yun's algorithm
        let dp = p.derivative();
        let a = YPoly::gcd(&p, &dp);
        let mut b = p.exact_div(&a)?;
        let mut c = dp.exact_div(&a)?;
        let mut out = Vec::new();
        let mut i = 1;
        loop {
            let d = &c - &b.derivative();
            if d.is_zero() {
                if !b.is_constant() {
                    out.push((b.monic(), i));
                }
                break;
            }
            let f = YPoly::gcd(&b, &d);
            if !f.is_constant() {
                out.push((f.monic(), i));
            }
            b = b.exact_div(&f)?;
            c = d.exact_div(&f)?;
            i += 1;
        }
        Ok(out)
    }

    /// Squarefree part (the product of the distinct factors), monic.
    pub fn radical(&self) -> Result<YPoly> {
        let mut out = YPoly::one();
        for (f, _) in self.squarefree_decomposition()? {
            out = &out * &f;
        }
        Ok(out)
    }
}

/// Vanishing-locus polynomial for the resultant: the product of the last
/// subresultant constant with every leading coefficient met along the way.
/// The true resultant divides a product of powers of these factors, so its
/// roots are covered. Returns None when the resultant is identically zero
/// (nontrivial gcd in y).
fn prs_resultant(f: Vec<ParamPoly>, g: Vec<ParamPoly>) -> Option<ParamPoly> {
    let mut f = f;
    let mut g = g;
    let mut acc = ParamPoly::one();
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    let mut lead = ParamPoly::one();
    let mut h = ParamPoly::one();
    loop {
        if g.is_empty() {
            return None;
        }
        if g.len() == 1 {
            return Some((&acc * &g[0]).normalized_primitive());
        }
        let delta = (f.len() - g.len()) as u32;
        let r = pseudo_rem_vec(&f, &g);
        if r.is_empty() {
            return None;
        }
        let divisor = &lead * &h.pow(delta);
        let r: Vec<ParamPoly> = r
            .iter()
            .map(|c| c.exact_div(&divisor).expect("subresultant divisor"))
            .collect();
        lead = g[g.len() - 1].clone();
        acc = &acc * &lead;
        h = match delta {
            0 => h,
            1 => lead.clone(),
            _ => lead
                .pow(delta)
                .exact_div(&h.pow(delta - 1))
                .expect("subresultant psi"),
        };
        f = g;
        g = r;
    }
}

impl Add for &YPoly {
    type Output = YPoly;
    fn add(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl Sub for &YPoly {
    type Output = YPoly;
    fn sub(self, rhs: &YPoly) -> YPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl Mul for &YPoly {
    type Output = YPoly;
    fn mul(self, rhs: &YPoly) -> YPoly {
        if self.is_zero() || rhs.is_zero() {
            return YPoly::zero();
        }
        let mut coeffs =
            vec![CoeffElem::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        YPoly::from_coeffs(coeffs)
    }
}

impl Neg for &YPoly {
    type Output = YPoly;
    fn neg(self) -> YPoly {
        YPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({:?})*y^{}", c, i)?;
        }
        Ok(())
    }
}

/// Evaluate a YPoly at a rational point for y and rational parameter values.
pub(crate) fn eval_ypoly(
    p: &YPoly,
    y: &BigRational,
    params: &[BigRational],
) -> Result<BigRational> {
    let mut acc = BigRational::from_integer(0.into());
    for c in p.coeffs().iter().rev() {
        acc = acc * y + c.eval(params)?;
    }
    Ok(acc)
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
    fn div_rem_roundtrip() {
        let a = poly(&[-2, 2, 4, 1]); // y^3 + 4y^2 + 2y - 2
        let d = poly(&[2, 3, 1]); // (y+1)(y+2)
        let (q, r) = a.div_rem(&d).unwrap();
        assert_eq!(q, poly(&[1, 1]));
        assert_eq!(r, poly(&[-4, -3]));
        assert_eq!(&(&q * &d) + &r, a);
    }

    #[test]
    fn gcd_common_factor() {
        // gcd(y^2 - 1, y - 1) = y - 1
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[-1, 1]);
        assert_eq!(YPoly::gcd(&a, &b), b);
    }

    #[test]
    fn gcd_coprime_over_params() {
        // gcd(y - x, y + x) = 1 over Q(x)
        let x = CoeffElem::from_poly(ParamPoly::var(0));
        let a = YPoly::from_coeffs(vec![-&x, int(1)]);
        let b = YPoly::from_coeffs(vec![x, int(1)]);
        assert_eq!(YPoly::gcd(&a, &b), YPoly::one());
    }

    #[test]
    fn ext_gcd_identity() {
        let a = poly(&[-1, 0, 1]);
        let b = poly(&[-1, 1]);
        let (g, s, t) = YPoly::ext_gcd(&a, &b);
        assert_eq!(g, poly(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn squarefree_example() {
        // (y+1)^2 (y+2) -> [(y+2, 1), (y+1, 2)]
        let p = &(&poly(&[1, 1]) * &poly(&[1, 1])) * &poly(&[2, 1]);
        let sf = p.squarefree_decomposition().unwrap();
        assert_eq!(sf, vec![(poly(&[2, 1]), 1), (poly(&[1, 1]), 2)]);
    }

    #[test]
    fn squarefree_trivial() {
        let p = poly(&[3, 1, 1]);
        let sf = p.squarefree_decomposition().unwrap();
        assert_eq!(sf, vec![(p.monic(), 1)]);
    }

    #[test]
    fn resultant_vanishes_iff_common_factor() {
        let a = &poly(&[-1, 1]) * &poly(&[5, 1]);
        let b = &poly(&[-1, 1]) * &poly(&[7, 1]);
        assert!(YPoly::resultant_scaled(&a, &b).is_zero());
        let c = poly(&[2, 1]);
        assert!(!YPoly::resultant_scaled(&a, &c).is_zero());
    }

    #[test]
    fn multiplicity() {
        let d = poly(&[1, 1]);
        let p = &(&d * &d) * &poly(&[2, 1]);
        assert_eq!(p.multiplicity_of(&d), 2);
        assert_eq!(p.multiplicity_of(&poly(&[3, 1])), 0);
    }
}
