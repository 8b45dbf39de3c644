//! Exact computations in the rational Cherednik algebra `H_κ` and the
//! degenerate double affine Hecke algebra of type `GL_n`.

pub mod category_o;
pub mod dunkl;
pub mod error;
pub mod exactpoly;
pub mod linalg;
pub mod morphisms;
pub mod pbw;
pub mod scalar;
pub mod symgroup;
pub mod text;
pub mod weyl;

pub use error::{Error, Result};
pub use exactpoly::{Monomial, Poly, PolyContext};
pub use scalar::Scalar;
pub use weyl::{pi_decompose, pi_element, AffineElem, Perm};
