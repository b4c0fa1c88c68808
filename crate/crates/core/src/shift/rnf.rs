//! Rational normal forms: every nonzero f in F(y) factors as
//! K * sigma_y(S)/S with K sigma_y-reduced; standardization additionally
//! rules out the q-case relation u(0) q^l = v(0) for negative l, and
//! produces a shell whose denominator is free of special factors.

use crate::arith::{partial_fractions, CoeffElem, YPoly, YRat};
use crate::context::{Context, ShiftCase};
use crate::error::{Error, Result};

use super::dispersion::dispersion_set;
use super::shifts::{shift_y, shift_y_poly};
use super::splitting::splitting_factorization;
#[cfg(test)]
use super::splitting::has_special_factor;

/// A rational normal form: f = kernel * sigma_y(shell)/shell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rnf {
    pub kernel: YRat,
    pub shell: YRat,
}

impl Rnf {
    /// Re-expand the defining identity.
    pub fn expand(&self, ctx: &Context) -> YRat {
        let shifted = shift_y(&self.shell, 1, ctx);
        self.kernel
            .mul(&shifted.div(&self.shell, ctx).expect("nonzero shell"), ctx)
    }
}

/// Numerator and denominator share no factor at any shift distance.
pub fn is_sigma_reduced(f: &YRat, ctx: &Context) -> Result<bool> {
    if f.is_zero() {
        return Ok(false);
    }
    let (_, nu) = f.num().strip_y_power();
    let (_, nv) = f.den().strip_y_power();
    if nu.is_constant() || nv.is_constant() {
        return Ok(true);
    }
    let d = dispersion_set(&nu, &nv, ctx)?;
    Ok(d.iter().all(|l| *l == 0))
}

/// sigma_y-standard: sigma_y-reduced, and in the q-case no relation
/// u(0) = q^m v(0) with m positive.
pub fn is_sigma_standard(f: &YRat, ctx: &Context) -> Result<bool> {
    if !is_sigma_reduced(f, ctx)? {
        return Ok(false);
    }
    if ctx.case() == ShiftCase::Shift {
        return Ok(true);
    }
    let u0 = f.num().constant_term();
    let v0 = f.den().constant_term();
    if u0.is_zero() || v0.is_zero() {
        return Ok(true);
    }
    let qidx = ctx.q_index().expect("q-shift case");
    if let Some((c, m)) = (&u0 / &v0).as_q_monomial(qidx) {
        if c == num_rational::BigRational::from_integer(1.into()) && m > 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strong coprimality of p with K = u/v: gcd(u, sigma^l(p)) = 1 and
/// gcd(v, sigma^{-l}(p)) = 1 for all l >= 0.
pub fn is_strongly_coprime(p: &YPoly, kernel: &YRat, ctx: &Context) -> Result<bool> {
    if p.is_constant() {
        return Ok(true);
    }
    let (py, pn) = p.strip_y_power();
    if py > 0
        && (kernel.num().constant_term().is_zero() || kernel.den().constant_term().is_zero())
    {
        // a shared y factor survives every shift
        return Ok(false);
    }
    for (side, sign) in [(kernel.num(), 1i64), (kernel.den(), -1i64)] {
        let (_, stripped) = side.strip_y_power();
        if stripped.is_constant() || pn.is_constant() {
            continue;
        }
        for l in dispersion_set(&stripped, &pn, ctx)? {
            if l * sign >= 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Compute a sigma_y-standard kernel and corresponding shell for a nonzero
/// rational function, with the shell's denominator free of nontrivial
/// special factors.
pub fn rnf_standard(f: &YRat, ctx: &Context) -> Result<Rnf> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let mut u = f.num().clone();
    let mut v = f.den().clone();
    let mut shell = YRat::one();

    // move shifted common factors into the shell until u, v are
    // sigma_y-coprime
    let (_, nu) = u.strip_y_power();
    let (_, nv) = v.strip_y_power();
    if !nu.is_constant() && !nv.is_constant() {
        let shifts: Vec<i64> = dispersion_set(&nu, &nv, ctx)?
            .into_iter()
            .filter(|l| *l != 0)
            .collect();
        for l in shifts {
            loop {
                let g = YPoly::gcd(&u, &shift_y_poly(&v, l, ctx));
                if g.is_constant() {
                    break;
                }
                u = u.exact_div(&g)?;
                v = v.exact_div(&shift_y_poly(&g, -l, ctx))?;
                if l > 0 {
                    // g / sigma^{-l}(g) = sigma(w)/w with w = prod_{j=1..l} sigma^{-j}(g)
                    for j in 1..=l {
                        shell = shell.mul_poly(&shift_y_poly(&g, -j, ctx), ctx);
                    }
                } else {
                    // l < 0: divide by prod_{j=0..-l-1} sigma^{j}(g)
                    for j in 0..(-l) {
                        shell = shell
                            .div(&YRat::from_poly(shift_y_poly(&g, j, ctx)), ctx)?;
                    }
                }
            }
        }
    }
    let mut kernel = YRat::new(u, v, ctx)?;

    // normalize the shell to be sigma_y-monic; in the q-case stripping
    // c*y^j multiplies the kernel by q^j
    match ctx.case() {
        ShiftCase::Shift => {
            // constants in the shell do not affect the quotient
            let lead_n = shell.num().leading_coeff();
            let lead_d = shell.den().leading_coeff();
            shell = shell.scale(&(&lead_d / &lead_n));
        }
        ShiftCase::QShift => {
            let (kn, sn) = shell.num().strip_y_power();
            let (kd, sd) = shell.den().strip_y_power();
            let j = kn as i64 - kd as i64;
            let cn = sn.constant_term();
            let cd = sd.constant_term();
            let unit = &cd / &cn;
            shell = YRat::new(sn.scale(&unit), sd, ctx)?;
            if j != 0 {
                kernel = kernel.scale(&ctx.q_pow(j));
            }
            // standardization: kill u(0)/v(0) = q^m with m > 0
            let u0 = kernel.num().constant_term();
            let v0 = kernel.den().constant_term();
            if !u0.is_zero() && !v0.is_zero() {
                let qidx = ctx.q_index().expect("q-shift case");
                if let Some((c, m)) = (&u0 / &v0).as_q_monomial(qidx) {
                    if c == num_rational::BigRational::from_integer(1.into()) && m > 0 {
                        kernel = kernel.scale(&ctx.q_pow(-m));
                        shell = shell.mul_poly(&YPoly::monomial(CoeffElem::one(), m as usize), ctx);
                    }
                }
            }
        }
    }
    Ok(Rnf { kernel, shell })
}

/// The sigma_y-canonical representation f = poly + special + normal with
/// the special and normal parts proper, den(special) sigma_y-special and
/// den(normal) free of special factors.
pub fn canonical_representation(f: &YRat, ctx: &Context) -> Result<(YPoly, YRat, YRat)> {
    if f.is_zero() {
        return Ok((YPoly::zero(), YRat::zero(), YRat::zero()));
    }
    let (poly_part, proper) = f.split_polynomial(ctx);
    if proper.is_zero() {
        return Ok((poly_part, YRat::zero(), YRat::zero()));
    }
    let (d_s, d_n) = splitting_factorization(proper.den(), ctx)?;
    if d_s.is_constant() {
        return Ok((poly_part, YRat::zero(), proper));
    }
    if d_n.is_constant() {
        return Ok((poly_part, proper, YRat::zero()));
    }
    let parts = partial_fractions(&proper, &[(d_s.clone(), 1), (d_n.clone(), 1)], ctx)?;
    let special = parts[0].clone();
    let normal = parts[1].clone();
    Ok((poly_part, special, normal))
}

/// A term with sigma_y-standard kernel K is a rational term exactly when
/// K = 1 (usual shift) or K is a power of q (q-shift).
pub fn is_rational_term(kernel: &YRat, ctx: &Context) -> bool {
    match ctx.case() {
        ShiftCase::Shift => kernel.is_one(),
        ShiftCase::QShift => match kernel.as_constant() {
            Some(c) => {
                let qidx = ctx.q_index().expect("q-shift case");
                match c.as_q_monomial(qidx) {
                    Some((r, _)) => r == num_rational::BigRational::from_integer(1.into()),
                    None => false,
                }
            }
            None => false,
        },
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
    fn standardizes_paper_kernel() {
        // quotient with kernel -q(qy-1) standardizes to -qy+1, and the
        // shell picks up a factor y
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        // f = -q(qy - 1) directly (shell 1): u(0)/v(0) = q
        let k0 = YPoly::from_coeffs(vec![q.clone(), -&(&q * &q)]); // -q^2 y + q
        let f = YRat::new(k0, YPoly::one(), &ctx).unwrap();
        let rnf = rnf_standard(&f, &ctx).unwrap();
        // kernel = -qy + 1
        assert_eq!(
            rnf.kernel,
            YRat::new(YPoly::from_coeffs(vec![int(1), -&q]), YPoly::one(), &ctx).unwrap()
        );
        assert_eq!(rnf.shell, YRat::from_poly(poly(&[0, 1])));
        assert!(is_sigma_standard(&rnf.kernel, &ctx).unwrap());
        assert_eq!(rnf.expand(&ctx), f);
    }

    #[test]
    fn already_reduced_shift_case() {
        let ctx = Context::shift(&[]);
        let f = YRat::from_poly(poly(&[1, 1]));
        let rnf = rnf_standard(&f, &ctx).unwrap();
        assert_eq!(rnf.kernel, f);
        assert!(rnf.shell.is_one());
    }

    #[test]
    fn extraction_roundtrip() {
        let ctx = Context::shift(&[]);
        // f = (y+3)/(y+1) = K sigma(S)/S with K = 1, S = (y+1)(y+2)
        let f = YRat::new(poly(&[3, 1]), poly(&[1, 1]), &ctx).unwrap();
        let rnf = rnf_standard(&f, &ctx).unwrap();
        assert_eq!(rnf.expand(&ctx), f);
        assert!(is_sigma_reduced(&rnf.kernel, &ctx).unwrap());
        assert!(rnf.kernel.is_one());
    }

    #[test]
    fn canonical_representation_q_shell() {
        // S = y(q^3y^2 - q^2 y - qy - q^2 + q + 1)/((qy-1)(q^2y-1)) has
        // polynomial part y and normal part -q(q-1)y/((qy-1)(q^2y-1))
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        let num = YPoly::from_coeffs(vec![
            &(&(-&(&q * &q)) + &q) + &int(1),        // -q^2 + q + 1
            -&(&(&q * &q) + &q),                     // -(q^2 + q)
            (&q).pow(3),                             // q^3
        ]);
        let den = {
            let f1 = YPoly::from_coeffs(vec![-&int(1), q.clone()]);
            let f2 = YPoly::from_coeffs(vec![-&int(1), &q * &q]);
            &f1 * &f2
        };
        let shell = YRat::new(num, den, &ctx).unwrap().mul_poly(&poly(&[0, 1]), &ctx);
        let (fp, fs, fn_) = canonical_representation(&shell, &ctx).unwrap();
        assert_eq!(fp, poly(&[0, 1]));
        assert!(fs.is_zero());
        // f_n = -q(q-1)y/((qy-1)(q^2y-1))
        let sum = YRat::from_poly(fp).add(&fs, &ctx).add(&fn_, &ctx);
        assert_eq!(sum, shell);
        assert!(fn_.is_proper());
        let expected_num = YPoly::monomial(-&(&q * &(&q - &int(1))), 1);
        let scaled = fn_.num().monic();
        assert_eq!(scaled, expected_num.monic());
    }

    #[test]
    fn canonical_representation_mixed() {
        // q-case f = 1/(y(qy-1)): special den y, normal den qy-1
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        let den = YPoly::from_coeffs(vec![-&int(1), q.clone()]).shift_up(1);
        let f = YRat::new(YPoly::one(), den, &ctx).unwrap();
        let (fp, fs, fn_) = canonical_representation(&f, &ctx).unwrap();
        assert!(fp.is_zero());
        assert_eq!(fs.den(), &poly(&[0, 1]));
        let back = YRat::from_poly(fp).add(&fs, &ctx).add(&fn_, &ctx);
        assert_eq!(back, f);
        assert!(has_special_factor(fs.den(), &ctx));
        assert!(!has_special_factor(fn_.den(), &ctx));
    }

    #[test]
    fn rational_term_detection() {
        let sctx = Context::shift(&[]);
        assert!(is_rational_term(&YRat::one(), &sctx));
        assert!(!is_rational_term(&YRat::from_poly(poly(&[1, 1])), &sctx));

        let qctx = Context::qshift(&[]);
        let qinv2 = YRat::from_coeff(qctx.q_pow(-2));
        assert!(is_rational_term(&qinv2, &qctx));
        let x = qctx.x();
        let k = YRat::new(
            YPoly::from_coeffs(vec![x, -&int(1)]),
            YPoly::from_coeffs(vec![int(0), int(1)]),
            &qctx,
        )
        .unwrap();
        assert!(!is_rational_term(&k, &qctx));
    }
}
