//! Application of the shift automorphisms sigma_y and sigma_x.

use num_rational::BigRational;

use crate::arith::{CoeffElem, ParamPoly, YPoly, YRat};
use crate::context::{Context, ShiftCase};

/// sigma_y^steps applied to a polynomial: y -> y + steps, or y -> q^steps y.
pub fn shift_y_poly(p: &YPoly, steps: i64, ctx: &Context) -> YPoly {
    if steps == 0 || p.is_zero() {
        return p.clone();
    }
    match ctx.case() {
        ShiftCase::Shift => {
            // p(y + steps), built by Horner on (y + steps)
            let offset = CoeffElem::from_rational(BigRational::from_integer(steps.into()));
            let mut out = YPoly::zero();
            for c in p.coeffs().iter().rev() {
                // out = out * (y + offset) + c
                let shifted = &out.shift_up(1) + &out.scale(&offset);
                out = &shifted + &YPoly::constant(c.clone());
            }
            out
        }
        ShiftCase::QShift => {
            let q = ctx.q();
            YPoly::from_coeffs(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &q.pow(steps * i as i64))
                    .collect(),
            )
        }
    }
}

/// sigma_y^steps applied to a rational function.
pub fn shift_y(f: &YRat, steps: i64, ctx: &Context) -> YRat {
    if steps == 0 || f.is_zero() {
        return f.clone();
    }
    let num = shift_y_poly(f.num(), steps, ctx);
    let den = shift_y_poly(f.den(), steps, ctx);
    YRat::new(num, den, ctx).expect("shift preserves nonzero denominators")
}

/// sigma_x^steps applied to a coefficient: x -> x + steps, or x -> q^steps x.
pub fn shift_x_coeff(c: &CoeffElem, steps: i64, ctx: &Context) -> CoeffElem {
    if steps == 0 || c.is_zero() {
        return c.clone();
    }
    let x = ctx.x_index();
    match ctx.case() {
        ShiftCase::Shift => {
            let value = &ParamPoly::var(x) + &ParamPoly::from_integer(steps);
            c.substitute(x, &value).expect("nonzero denominator")
        }
        ShiftCase::QShift => {
            let q = ctx.q_index().expect("q-shift case");
            if steps >= 0 {
                let value = &ParamPoly::var(x) * &ParamPoly::var_pow(q, steps as u32);
                c.substitute(x, &value).expect("nonzero denominator")
            } else {
                // x -> x/q^{-steps}: substitute and clear the q powers by
                // the common multiplier q^{m*D} on both parts.
                let m = (-steps) as u32;
                let d = c
                    .num()
                    .degree_in(x)
                    .unwrap_or(0)
                    .max(c.den().degree_in(x).unwrap_or(0));
                let scale = |p: &ParamPoly| -> ParamPoly {
                    let coeffs = p.coeffs_in(x);
                    let mut out = ParamPoly::zero();
                    for (i, ci) in coeffs.iter().enumerate() {
                        let term = &(ci * &ParamPoly::var_pow(q, m * (d - i as u32)))
                            * &ParamPoly::var_pow(x, i as u32);
                        out = &out + &term;
                    }
                    out
                };
                CoeffElem::new(scale(c.num()), scale(c.den())).expect("nonzero denominator")
            }
        }
    }
}

/// sigma_x^steps applied coefficient-wise to a polynomial in y.
pub fn shift_x_poly(p: &YPoly, steps: i64, ctx: &Context) -> YPoly {
    if steps == 0 {
        return p.clone();
    }
    p.map_coeffs(|c| shift_x_coeff(c, steps, ctx))
}

/// sigma_x^steps applied to a rational function in y.
pub fn shift_x(f: &YRat, steps: i64, ctx: &Context) -> YRat {
    if steps == 0 || f.is_zero() {
        return f.clone();
    }
    let num = shift_x_poly(f.num(), steps, ctx);
    let den = shift_x_poly(f.den(), steps, ctx);
    YRat::new(num, den, ctx).expect("shift preserves nonzero denominators")
}

/// The bivariate shift sigma_x^m sigma_y^n.
pub fn shift_xy(f: &YRat, m: i64, n: i64, ctx: &Context) -> YRat {
    shift_y(&shift_x(f, m, ctx), n, ctx)
}

/// Delta_K(r) = K * sigma_y(r) - r.
pub fn delta_k(k: &YRat, r: &YRat, ctx: &Context) -> YRat {
    k.mul(&shift_y(r, 1, ctx), ctx).sub(r, ctx)
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
    fn usual_shift_square() {
        let ctx = Context::shift(&[]);
        // y^2 shifted by 1 -> (y+1)^2
        let p = poly(&[0, 0, 1]);
        assert_eq!(shift_y_poly(&p, 1, &ctx), poly(&[1, 2, 1]));
        // round trip
        let r = YRat::new(poly(&[1, 3]), poly(&[0, 1, 2]), &ctx).unwrap();
        let back = shift_y(&shift_y(&r, 3, &ctx), -3, &ctx);
        assert_eq!(back, r);
    }

    #[test]
    fn q_shift_of_linear() {
        let ctx = Context::qshift(&[]);
        let q = ctx.q();
        // qy - 1 -> q^2 y - 1
        let p = YPoly::from_coeffs(vec![-&int(1), q.clone()]);
        let s = shift_y_poly(&p, 1, &ctx);
        assert_eq!(s, YPoly::from_coeffs(vec![-&int(1), &q * &q]));
    }

    #[test]
    fn x_shift_both_cases() {
        let sctx = Context::shift(&[]);
        let x = sctx.x();
        let c = shift_x_coeff(&x, 2, &sctx);
        assert_eq!(c, &x + &int(2));

        let qctx = Context::qshift(&[]);
        let x = qctx.x();
        let q = qctx.q();
        assert_eq!(shift_x_coeff(&x, 1, &qctx), &q * &x);
        let back = shift_x_coeff(&shift_x_coeff(&x, 1, &qctx), -1, &qctx);
        assert_eq!(back, x);
        // negative shift on a fraction
        let f = &int(1) / &(&x + &int(1));
        let g = shift_x_coeff(&f, -1, &qctx);
        // 1/(x/q + 1) = q/(x + q)
        assert_eq!(g, &q / &(&x + &q));
    }
}
