//! Exact arithmetic for Chebyshev bases of Roger-Yang skein algebras.
//!
//! Scalars live in `Z[q^{±1/2}]`, stored as Laurent polynomials in
//! `v = q^{1/2}`.

pub mod arc_products;
pub mod chebyshev;
pub mod error;
pub mod laurent;
pub mod positivity_audit;
pub mod twist_models;

pub use error::{Result, SkeinError};
pub use laurent::{CyclotomicContext, LaurentPoly};
