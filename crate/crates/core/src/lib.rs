//! Exact computations on the local surfaces `Z_k = Tot(O(-k))` over the
//! projective line and their deformations `Z_k(tau)`.

pub mod algebra;
pub mod bundle;
pub mod cohomology;
pub mod deformation;
pub mod surface;

pub use algebra::{BiLaurent, Chart, Monomial, PolyMatrix, Rational};
pub use surface::{LineBundleSpec, SurfaceSpec};
