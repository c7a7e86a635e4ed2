//! Deformations of `Z_k`: the tangent cohomology, integrability of candidate
//! Jacobians, the semiuniversal family with its Kodaira–Spencer map and the
//! embedding into the Hirzebruch family.

mod family;
mod hirzebruch;
mod integrability;
mod tangent;

pub use family::{deform_by_cocycle, family_and_ks, FamilySpec, KodairaSpencer};
pub use hirzebruch::{hirzebruch_embed_check, hirzebruch_relations, HirzebruchCheck, HirzebruchCoords};
pub use integrability::{
    integrability_analysis, integrate_first, jacobian_multiple, normalize_deformation, IntegrabilityReport,
    Normalization, TangentExtensionClass, Verdict,
};
pub use tangent::{ext_basis_tangent, tangent_h1, tangent_window, ExtBasis};

use crate::algebra::AlgebraError;
use crate::cohomology::CohomologyError;
use crate::surface::SurfaceError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DeformationError {
    #[error("k must be at least {min}, got {got}")]
    InvalidK { min: i64, got: i64 },
    #[error("cocycle must be a polynomial in z with degrees 1..k-1, got `{0}`")]
    BadCocycleSupport(String),
    #[error("extension class may only contain z^(k-1)*u and z^l with -1 <= l <= k-1, got `{0}`")]
    BadClassSupport(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn check_k(k: i64, min: i64) -> Result<u32, DeformationError> {
    if k < min {
        return Err(DeformationError::InvalidK { min, got: k });
    }
    Ok(k as u32)
}
