//! Sparse multivariate polynomials over Q in the session parameters.
//!
//! Monomials are exponent vectors with trailing zeros trimmed, so the same
//! polynomial compares equal regardless of how many variables a session has
//! declared. Iteration follows the BTreeMap order of exponent vectors
//! (lexicographic), which fixes a canonical term order for printing and for
//! leading-coefficient conventions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent vector; index i is the exponent of session variable i.
pub type Monomial = Vec<u32>;

fn trim(mut m: Monomial) -> Monomial {
    while m.last() == Some(&0) {
        m.pop();
    }
    m
}

fn mono_mul(a: &Monomial, b: &Monomial) -> Monomial {
    let n = a.len().max(b.len());
    let mut out = vec![0u32; n];
    for (i, e) in a.iter().enumerate() {
        out[i] += e;
    }
    for (i, e) in b.iter().enumerate() {
        out[i] += e;
    }
    trim(out)
}

fn mono_div(a: &Monomial, b: &Monomial) -> Option<Monomial> {
    if b.len() > a.len() {
        return None;
    }
    let mut out = a.clone();
    for (i, e) in b.iter().enumerate() {
        if out[i] < *e {
            return None;
        }
        out[i] -= e;
    }
    Some(trim(out))
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct ParamPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly::default()
    }

    pub fn one() -> Self {
        ParamPoly::from_rational(BigRational::one())
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        ParamPoly { terms }
    }

    pub fn from_integer(n: i64) -> Self {
        ParamPoly::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(index: usize) -> Self {
        Self::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, exp: u32) -> Self {
        if exp == 0 {
            return ParamPoly::one();
        }
        let mut m = vec![0u32; index + 1];
        m[index] = exp;
        let mut terms = BTreeMap::new();
        terms.insert(m, BigRational::one());
        ParamPoly { terms }
    }

    pub fn monomial(m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(m), c);
        }
        ParamPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Vec::new())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Vec::new()))
    }

    /// The constant value, if this polynomial is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.terms.is_empty() {
            return Some(BigRational::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Vec::new()).cloned();
        }
        None
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    /// Largest monomial in the term order, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0))
            .max()
    }

    pub fn min_degree_in(&self, var: usize) -> Option<u32> {
        self.terms
            .keys()
            .map(|m| m.get(var).copied().unwrap_or(0))
            .min()
    }

    pub fn depends_on(&self, var: usize) -> bool {
        self.degree_in(var).unwrap_or(0) > 0
    }

    /// Total degree over all variables.
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn map_coeffs(&self, f: impl Fn(&BigRational) -> BigRational) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let v = f(c);
            if !v.is_zero() {
                terms.insert(m.clone(), v);
            }
        }
        ParamPoly { terms }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigRational) -> Self {
        if c.is_zero() {
            return ParamPoly::zero();
        }
        let mut terms = BTreeMap::new();
        for (mm, cc) in &self.terms {
            terms.insert(mono_mul(mm, m), cc * c);
        }
        ParamPoly { terms }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = ParamPoly::one();
        let mut base = self.clone();
        let mut k = n;
        while k > 0 {
            if k & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        out
    }

    /// View as a dense polynomial in `var` with ParamPoly coefficients.
    pub fn coeffs_in(&self, var: usize) -> Vec<ParamPoly> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![ParamPoly::zero(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.get(var).copied().unwrap_or(0) as usize;
            let mut rest = m.clone();
            if var < rest.len() {
                rest[var] = 0;
            }
            out[e] = &out[e] + &ParamPoly::monomial(rest, c.clone());
        }
        out
    }

    /// Rebuild from dense coefficients with respect to `var`.
    pub fn from_coeffs_in(var: usize, coeffs: &[ParamPoly]) -> Self {
        let mut out = ParamPoly::zero();
        for (e, c) in coeffs.iter().enumerate() {
            let mut m = vec![0u32; var + 1];
            m[var] = e as u32;
            out = &out + &c.mul_monomial(&m, &BigRational::one());
        }
        out
    }

    /// Substitute variable `var` by `value`.
    pub fn substitute(&self, var: usize, value: &ParamPoly) -> Self {
        let coeffs = self.coeffs_in(var);
        // Horner
        let mut out = ParamPoly::zero();
        for c in coeffs.iter().rev() {
            out = &(&out * value) + c;
        }
        out
    }

    /// Substitute each variable by the given rational value.
    pub fn eval(&self, values: &[BigRational]) -> BigRational {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in m.iter().enumerate() {
                for _ in 0..*e {
                    t *= &values[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Rational content: gcd of coefficient numerators over lcm of
    /// denominators, signed so that the primitive part has a positive
    /// leading coefficient.
    pub fn content(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut content = BigRational::new(num_gcd, den_lcm);
        if self.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            content = -content;
        }
        content
    }

    /// Split into content and primitive part: `self = content * primitive`,
    /// with the primitive part having integer coefficients of gcd 1 and a
    /// positive leading coefficient.
    pub fn primitive(&self) -> (BigRational, ParamPoly) {
        if self.is_zero() {
            return (BigRational::zero(), ParamPoly::zero());
        }
        let c = self.content();
        let inv = c.recip();
        (c, self.scale(&inv))
    }

    pub fn normalized_primitive(&self) -> ParamPoly {
        self.primitive().1
    }

    /// Content with respect to one variable: gcd of the coefficients of the
    /// powers of `var` (a polynomial in the remaining variables).
    pub fn content_in(&self, var: usize) -> ParamPoly {
        let coeffs = self.coeffs_in(var);
        let mut g = ParamPoly::zero();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            g = ParamPoly::gcd(&g, c);
            if g.is_constant() && !g.is_zero() {
                return ParamPoly::one();
            }
        }
        g
    }

    /// Exact division; None when the division is not exact.
    pub fn exact_div(&self, d: &ParamPoly) -> Option<ParamPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(ParamPoly::zero());
        }
        if let Some(c) = d.as_rational() {
            return Some(self.scale(&c.recip()));
        }
        // Divide as dense polynomials in the highest variable of d.
        let var = highest_var(d).expect("nonconstant divisor has a variable");
        let dc = d.coeffs_in(var);
        let mut rc = self.coeffs_in(var);
        let dd = dc.len() - 1;
        if rc.len() < dc.len() {
            return None;
        }
        let mut quot = vec![ParamPoly::zero(); rc.len() - dd];
        for i in (dd..rc.len()).rev() {
            if rc[i].is_zero() {
                continue;
            }
            let q = rc[i].exact_div(&dc[dd])?;
            for (j, c) in dc.iter().enumerate() {
                rc[i - dd + j] = &rc[i - dd + j] - &(&q * c);
            }
            quot[i - dd] = q;
        }
        if rc.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ParamPoly::from_coeffs_in(var, &quot))
    }

    /// Multivariate gcd via primitive polynomial remainder sequences.
    ///
    /// The result is integer-primitive with positive leading coefficient;
    /// gcds of nonzero constants are 1.
    pub fn gcd(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        if a.is_zero() {
            return b.normalized_primitive();
        }
        if b.is_zero() {
            return a.normalized_primitive();
        }
        if a.is_constant() || b.is_constant() {
            return ParamPoly::one();
        }
        if a == b {
            return a.normalized_primitive();
        }
        let var = highest_var(a)
            .max(highest_var(b))
            .expect("nonconstant polynomials");
        let da = a.degree_in(var).unwrap_or(0);
        let db = b.degree_in(var).unwrap_or(0);
        if da == 0 || db == 0 {
            // var occurs in only one of them; gcd divides the coefficients
            let (with_var, other) = if da == 0 { (b, a) } else { (a, b) };
            let cont = with_var.content_in(var);
            return ParamPoly::gcd(&cont, other);
        }
        let ca = a.content_in(var);
        let cb = b.content_in(var);
        let c = ParamPoly::gcd(&ca, &cb);
        let pa = a.exact_div(&ca).expect("content divides");
        let pb = b.exact_div(&cb).expect("content divides");
        let g = Self::primitive_prs(&pa, &pb, var);
        (&c * &g).normalized_primitive()
    }

    /// Subresultant PRS for the primitive-part gcd: known exact divisors
    /// avoid content computations inside the loop.
    fn primitive_prs(a: &ParamPoly, b: &ParamPoly, var: usize) -> ParamPoly {
        let mut f = a.coeffs_in(var);
        let mut g = b.coeffs_in(var);
        if f.len() < g.len() {
            std::mem::swap(&mut f, &mut g);
        }
        let mut lead = ParamPoly::one();
        let mut h = ParamPoly::one();
        loop {
            let delta = (f.len() - g.len()) as u32;
            let r = pseudo_rem_vec(&f, &g);
            if r.is_empty() {
                break;
            }
            if r.len() == 1 {
                return ParamPoly::one();
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
        let gp = ParamPoly::from_coeffs_in(var, &g);
        let cont = gp.content_in(var);
        gp.exact_div(&cont).expect("content divides")
    }

    /// Integer-normalized form: `self = c * p` with p having integer
    /// coprime coefficients and positive leading coefficient.
    pub fn int_normalized(&self) -> (BigRational, ParamPoly) {
        self.primitive()
    }

    pub fn lcm(a: &ParamPoly, b: &ParamPoly) -> ParamPoly {
        if a.is_zero() || b.is_zero() {
            return ParamPoly::zero();
        }
        let g = ParamPoly::gcd(a, b);
        let q = a.exact_div(&g).expect("gcd divides");
        (&q * b).normalized_primitive()
    }

    /// Divide out the largest power of `var`, returning (power, quotient).
    pub fn strip_var_power(&self, var: usize) -> (u32, ParamPoly) {
        if self.is_zero() {
            return (0, ParamPoly::zero());
        }
        let k = self.min_degree_in(var).unwrap_or(0);
        if k == 0 {
            return (0, self.clone());
        }
        let mut m = vec![0u32; var + 1];
        m[var] = k;
        let q = self
            .exact_div(&ParamPoly::monomial(m, BigRational::one()))
            .expect("var power divides");
        (k, q)
    }

    /// Test whether this polynomial is `c * var^k`; returns (c, k).
    pub fn as_var_monomial(&self, var: usize) -> Option<(BigRational, u32)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        let k = m.get(var).copied().unwrap_or(0);
        let pure = m
            .iter()
            .enumerate()
            .all(|(i, e)| i == var || *e == 0);
        if pure {
            Some((c.clone(), k))
        } else {
            None
        }
    }
}

fn highest_var(p: &ParamPoly) -> Option<usize> {
    p.terms
        .keys()
        .filter_map(|m| {
            m.iter()
                .enumerate()
                .rev()
                .find(|(_, e)| **e > 0)
                .map(|(i, _)| i)
        })
        .max()
}

/// Pseudo-remainder on dense coefficient vectors: returns
/// lc(g)^{deg f - deg g + 1} * f rem g, the exact power required by the
/// subresultant bookkeeping.
pub(crate) fn pseudo_rem_vec(f: &[ParamPoly], g: &[ParamPoly]) -> Vec<ParamPoly> {
    let dg = g.len() - 1;
    let lcg = g[dg].clone();
    let delta = f.len() - 1 - dg;
    let mut scale_count = 0usize;
    let mut rc: Vec<ParamPoly> = f.to_vec();
    while rc.len() > dg {
        let dr = rc.len() - 1;
        if rc[dr].is_zero() {
            rc.pop();
            continue;
        }
        let lead = rc[dr].clone();
        for c in rc.iter_mut() {
            *c = &*c * &lcg;
        }
        scale_count += 1;
        for (j, c) in g.iter().enumerate() {
            rc[dr - dg + j] = &rc[dr - dg + j] - &(&lead * c);
        }
        rc.pop();
        while rc.last().map(|c| c.is_zero()).unwrap_or(false) {
            rc.pop();
        }
    }
    // bring the total lc factor up to delta + 1
    for _ in scale_count..(delta + 1) {
        for c in rc.iter_mut() {
            *c = &*c * &lcg;
        }
    }
    rc
}

impl ParamPoly {
    /// Exact division that reports failure as an error.
    pub fn try_exact_div(&self, d: &ParamPoly) -> Result<ParamPoly> {
        self.exact_div(d).ok_or(Error::InexactDivision)
    }
}

impl Add for &ParamPoly {
    type Output = ParamPoly;
    fn add(self, rhs: &ParamPoly) -> ParamPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v += c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        ParamPoly { terms }
    }
}

impl Sub for &ParamPoly {
    type Output = ParamPoly;
    fn sub(self, rhs: &ParamPoly) -> ParamPoly {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            match terms.get_mut(m) {
                Some(v) => {
                    *v -= c;
                    if v.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), -c.clone());
                }
            }
        }
        ParamPoly { terms }
    }
}

impl Mul for &ParamPoly {
    type Output = ParamPoly;
    fn mul(self, rhs: &ParamPoly) -> ParamPoly {
        let mut terms: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = mono_mul(ma, mb);
                let c = ca * cb;
                match terms.get_mut(&m) {
                    Some(v) => {
                        *v += c;
                        if v.is_zero() {
                            terms.remove(&m);
                        }
                    }
                    None => {
                        terms.insert(m, c);
                    }
                }
            }
        }
        ParamPoly { terms }
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        self.map_coeffs(|c| -c.clone())
    }
}

impl fmt::Debug for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParamPoly({:?})", self.terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> ParamPoly {
        ParamPoly::var(0)
    }
    fn x() -> ParamPoly {
        ParamPoly::var(1)
    }
    fn int(n: i64) -> ParamPoly {
        ParamPoly::from_integer(n)
    }

    #[test]
    fn trailing_zero_monomials_compare_equal() {
        let a = ParamPoly::monomial(vec![1, 0, 0], BigRational::one());
        let b = ParamPoly::var(0);
        assert_eq!(a, b);
    }

    #[test]
    fn arithmetic_basics() {
        let p = &(&q() * &q()) - &int(1); // q^2 - 1
        let f1 = &q() - &int(1);
        let f2 = &q() + &int(1);
        assert_eq!(p, &f1 * &f2);
        assert_eq!(p.exact_div(&f1).unwrap(), f2);
        assert!(p.exact_div(&(&q() + &int(2))).is_none());
    }

    #[test]
    fn gcd_univariate() {
        let f1 = &q() - &int(1);
        let f2 = &q() + &int(1);
        let a = &f1 * &f2;
        let b = &f1 * &(&q() + &int(3));
        assert_eq!(ParamPoly::gcd(&a, &b), f1);
        assert_eq!(ParamPoly::gcd(&f1, &f2), ParamPoly::one());
    }

    #[test]
    fn gcd_bivariate_with_content() {
        // a = (q - x) * x, b = (q - x) * (q + 1)
        let qmx = &q() - &x();
        let a = &qmx * &x();
        let b = &qmx * &(&q() + &int(1));
        let g = ParamPoly::gcd(&a, &b);
        assert_eq!(g, qmx);
    }

    #[test]
    fn content_and_primitive() {
        let p = (&q() * &int(4)).scale(&BigRational::new(BigInt::from(1), BigInt::from(6)));
        // p = (2/3) q
        let (c, pp) = p.primitive();
        assert_eq!(c, BigRational::new(BigInt::from(2), BigInt::from(3)));
        assert_eq!(pp, q());
    }

    #[test]
    fn substitution_shift() {
        // p = x^2; x -> x + 1 gives x^2 + 2x + 1
        let p = &x() * &x();
        let s = p.substitute(1, &(&x() + &int(1)));
        let expect = &(&(&x() * &x()) + &(&x() * &int(2))) + &int(1);
        assert_eq!(s, expect);
    }

    #[test]
    fn strip_var_power() {
        let p = &(&q() * &q()) * &(&q() - &x()); // q^2 * (q - x)
        let (k, rest) = p.strip_var_power(0);
        assert_eq!(k, 2);
        assert_eq!(rest, &q() - &x());
    }
}
