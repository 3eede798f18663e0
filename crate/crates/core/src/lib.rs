//! Exact algebra for multivariate polynomials over non-Archimedean valued
//! fields: Gauss norms and counting functions in log-radius coordinates,
//! Hasse derivatives, radicals and square-free parts in any characteristic,
//! generalized Wronskians, and verifiers for polynomial ABC inequalities.

pub mod abc;
pub mod coeffs;
pub mod error;
pub mod hasse;
pub mod linalg;
pub mod mvpoly;
pub mod nevanlinna;
pub mod parse;
pub mod radicals;
pub mod wronskian;

pub use coeffs::{Coeff, FieldKind, FieldSpec, LogValue, Rational};
pub use error::{Error, Result};
pub use mvpoly::{Monomial, MvPoly};
