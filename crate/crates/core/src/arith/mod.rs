//! Exact arbitrary-precision arithmetic: sparse parameter polynomials, the
//! coefficient field F, dense univariate polynomials and reduced rational
//! functions in y, and linear solving over F.

mod coeff;
mod laurent;
pub mod linalg;
mod param_poly;
mod pfrac;
mod ypoly;
mod yrat;

pub use pfrac::{partial_fractions, partial_fractions_raw};
#[allow(unused_imports)]
pub(crate) use pfrac::unit_quotient;

pub use coeff::CoeffElem;
pub use laurent::LaurentPoly;
pub use param_poly::ParamPoly;
pub use ypoly::YPoly;
pub use yrat::YRat;

pub(crate) use yrat::sigma_monic_unit as yrat_sigma_monic_unit;

#[allow(unused_imports)]
pub(crate) use param_poly::Monomial;
