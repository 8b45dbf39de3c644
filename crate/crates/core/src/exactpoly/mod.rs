//! Exact sparse (Laurent) polynomials over the rationals.

mod monomial;
mod poly;

pub use monomial::Monomial;
pub(crate) use poly::write_coeff_prefix;
pub use poly::{Poly, PolyContext};
