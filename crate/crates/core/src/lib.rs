//! Exact summability testing and creative telescoping for hypergeometric
//! terms and their q-analogues.
//!
//! The library works over the field F(y) where F is a rational function
//! field in the parameters (q in the q-shift case, x for the bivariate
//! layer, plus user-declared symbols). The shift operator acts on y either
//! by y -> y+1 (usual shift) or y -> q*y (q-shift); both cases run through
//! the same code paths.
//!
//! Main entry points:
//! - [`reduction::hypergeom_reduction`]: decompose a term T as
//!   `Delta_y(g*H) + r*H` and decide summability (`r = 0`).
//! - [`telescoping::hypergeom_telescoping`]: find a minimal-order
//!   telescoper `L = l_0 + l_1*Sx + ... + l_rho*Sx^rho` for a bivariate
//!   term, optionally with a certificate.
//! - [`telescoping::verify_telescoper`]: independent check of the
//!   telescoper equation as a rational-function identity.

pub mod arith;
pub mod context;
pub mod error;
pub mod linearization;
pub mod reduction;
pub mod shift;
pub mod telescoping;

pub use arith::{CoeffElem, LaurentPoly, ParamPoly, YPoly, YRat};
pub use context::{Context, ShiftCase};
pub use error::Error;
