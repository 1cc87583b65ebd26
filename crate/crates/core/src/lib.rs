//! Exact computation of enumerative invariants.
//!
//! - [`plane_curves`]: rational plane-curve counts, generalized Severi
//!   degrees with tangency conditions along a line, and the section-class
//!   series of the rational elliptic surface.
//! - [`moduli`]: the expected dimension of stable-map moduli and genus-0
//!   descendant and kappa integrals.
//! - [`mapping_torus`]: Lefschetz zeta functions of homology actions, the
//!   Gromov series of symplectic mapping tori and of knot-surgery manifolds.
//! - [`gt`]: tables of relative invariants, the connected-to-disconnected
//!   exponential and the gluing convolution.
//!
//! Everything is computed with exact rationals; there is no floating point.

pub mod algebra;
mod error;
pub mod gt;
pub mod mapping_torus;
pub mod moduli;
pub mod plane_curves;

pub use algebra::{DensePoly, ExactScalar, IntMatrix, TruncSeries};
pub use error::Error;
