use serde::{Serialize, Serializer};

use crate::algebra::PolyMatrix;
use crate::cohomology::{h1, h1_stabilized, GrowthPolicy, Window};
use crate::surface::{LineBundleSpec, SurfaceSpec};

use super::BundleError;

/// The skyscraper part of the local charge has no algorithm here.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QDim {
    Unsupported,
}

impl Serialize for QDim {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str("unsupported")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ChargeReport {
    /// `h^0(R^1 pi_* E) = dim H^1(Z_k, E)`.
    pub r1_dim: usize,
    pub stabilized: bool,
    pub window_used: Window,
    pub q_dim: QDim,
    /// `j` is a multiple of `k`.
    pub splitting_ok: bool,
}

pub fn charge_report(s: &SurfaceSpec, t: &PolyMatrix, j: i64, w: Window) -> Result<ChargeReport, BundleError> {
    if t.size() > 3 {
        return Err(BundleError::UnsupportedRank(t.size()));
    }
    let r = h1_stabilized(s, t, w, GrowthPolicy::default())?;
    Ok(ChargeReport {
        r1_dim: r.dimension,
        stabilized: r.stabilized,
        window_used: r.window_used,
        q_dim: QDim::Unsupported,
        splitting_ok: j.rem_euclid(s.k() as i64) == 0,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuliDimension {
    Dimension(i64),
    DiscreteZeroDimensional,
}

impl Serialize for ModuliDimension {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ModuliDimension::Dimension(d) => s.serialize_i64(*d),
            ModuliDimension::DiscreteZeroDimensional => s.serialize_str("DiscreteZeroDimensional"),
        }
    }
}

/// Dimension `2j - k - 2` of the instanton moduli of splitting type `j` on
/// `Z_k`, taken as a known constant; on deformed surfaces the moduli are
/// discrete.
pub fn moduli_dimension(j: i64, k: i64, deformed: bool) -> Result<ModuliDimension, BundleError> {
    if deformed {
        return Ok(ModuliDimension::DiscreteZeroDimensional);
    }
    let d = 2 * j - k - 2;
    if d < 0 {
        return Err(BundleError::NotApplicable(d));
    }
    Ok(ModuliDimension::Dimension(d))
}

/// Number of `H^1(Z_k, O(-2j))` basis classes that vanish on the zero
/// section, counted by the cohomology engine.
pub fn raw_parameter_count(j: i64, k: i64) -> Result<usize, BundleError> {
    let s = SurfaceSpec::undeformed(k)?;
    let n = 2 * j;
    let r = h1(&s, &LineBundleSpec::new(-n).transition(), Window::for_line_bundle(s.k(), n))?;
    Ok(r.basis.iter().filter(|b| b.0[0].terms().all(|(m, _)| m.u >= 1)).count())
}
