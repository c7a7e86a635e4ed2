//! Rank-2 bundles: extensions, splitting types on the zero section, explicit
//! splittings on deformed surfaces and charge bookkeeping.

mod charge;
mod extension;
mod split;
mod splitting;

pub use charge::{charge_report, moduli_dimension, raw_parameter_count, ChargeReport, ModuliDimension, QDim};
pub use extension::{extension_to_transition, restrict_to_zero_section, ExtensionClass};
pub use split::{split_certificate, split_certificate_with, SplitCertificate};
pub use splitting::{splitting_type_p1, splitting_window, SplittingType};

use crate::algebra::AlgebraError;
use crate::cohomology::CohomologyError;
use crate::surface::SurfaceError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BundleError {
    #[error("deformed surfaces have no zero section")]
    NoZeroSection,
    #[error("transition must be a function of z alone: {0}")]
    NotOnLine(String),
    #[error("no splitting type matches the h0 profile {profile:?} (window too small)")]
    ProfileInconsistent { profile: Vec<(i64, usize)> },
    #[error("no splitting certificate found up to window {0}")]
    CertificateNotFound(crate::cohomology::Window),
    #[error("2j - k - 2 = {0} is negative")]
    NotApplicable(i64),
    #[error("rank {0} is not supported (at most 3)")]
    UnsupportedRank(usize),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
