//! The automorphism layer: shift application, splitting factorizations,
//! dispersions, sigma-coprime decompositions, strong sigma-factorizations,
//! and rational normal forms.

mod classes;
mod decomp;
mod dispersion;
mod op_exponent;
mod rnf;
mod shifts;
mod splitting;

pub use decomp::{sigma_coprime_decomposition, strong_sigma_factorization, SigmaFactorization};
pub use dispersion::{dispersion_set, is_sigma_normal};
pub use op_exponent::OpExponent;
pub use rnf::{
    canonical_representation, is_rational_term, is_sigma_reduced, is_sigma_standard,
    is_strongly_coprime, rnf_standard, Rnf,
};
pub use shifts::{delta_k, shift_x, shift_x_coeff, shift_x_poly, shift_xy, shift_y, shift_y_poly};
pub use splitting::{
    has_special_factor, is_sigma_special, special_exponent, splitting_factorization,
    splitting_factorization_rat,
};

use crate::arith::{YPoly, YRat};
use crate::context::Context;

/// sigma_y-monic normalization: monic in the usual shift case, trailing
/// coefficient 1 in the q-shift case.
pub fn sigma_monic(p: &YPoly, ctx: &Context) -> YPoly {
    if p.is_zero() {
        return YPoly::zero();
    }
    let u = crate::arith::yrat_sigma_monic_unit(p, ctx);
    p.scale(&u)
}

/// Extended gcd with the gcd normalized sigma_y-monic: s*a + t*b = g.
pub fn poly_gcd_ext(a: &YPoly, b: &YPoly, ctx: &Context) -> (YPoly, YPoly, YPoly) {
    let (g, s, t) = YPoly::ext_gcd(a, b);
    if g.is_zero() || g.is_constant() {
        return (g, s, t);
    }
    let u = crate::arith::yrat_sigma_monic_unit(&g, ctx);
    (g.scale(&u), s.scale(&u), t.scale(&u))
}

/// p^alpha = prod_i sigma_y^i(p)^{k_i} for alpha in Z[sigma, sigma^{-1}];
/// the result is rational when alpha has negative coefficients.
pub fn op_power(p: &YPoly, alpha: &OpExponent, ctx: &Context) -> YRat {
    let mut out = YRat::one();
    for (i, k) in alpha.terms() {
        let shifted = shift_y_poly(p, *i, ctx);
        let f = YRat::from_poly(shifted)
            .pow(*k, ctx)
            .expect("nonzero shifted factor");
        out = out.mul(&f, ctx);
    }
    out
}

/// Polynomial power p^alpha for alpha in N[sigma, sigma^{-1}].
pub fn op_power_poly(p: &YPoly, alpha: &OpExponent, ctx: &Context) -> YPoly {
    debug_assert!(alpha.is_nonneg());
    let mut out = YPoly::one();
    for (i, k) in alpha.terms() {
        let shifted = shift_y_poly(p, *i, ctx);
        out = &out * &shifted.pow(*k as u32);
    }
    out
}
