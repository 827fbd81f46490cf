//! Chebyshev-type polynomial families over `Z[q^{±1/2}]`.

pub mod basis;
pub mod identities;
pub mod poly;
pub mod sequences;

pub use basis::{change_of_basis, dominates, BasisChange, TriangularBasis};
pub use identities::{identity_sides, verify_identity, IdentityTag};
pub use poly::PolyX;
pub use sequences::{cheb_s, cheb_t, cheb_tbar, eps, s_diff, seq_u, Family, NormalizedSequence};
