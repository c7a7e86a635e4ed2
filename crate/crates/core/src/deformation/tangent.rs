use crate::algebra::BiLaurent;
use crate::cohomology::{h1_stabilized, CohomologyResult, GrowthPolicy, Window};
use crate::surface::SurfaceSpec;

use super::{check_k, DeformationError};

/// Starting window for the tangent bundle; the Jacobian and its inverse have
/// `z`-exponents up to `k + 2` in absolute value.
pub fn tangent_window(k: u32) -> Window {
    Window::for_bundle(k, k as i64 + 2)
}

/// `H^1(Z_k, T)` with the Jacobian as transition matrix.
pub fn tangent_h1(k: i64) -> Result<CohomologyResult, DeformationError> {
    let k = check_k(k, 1)?;
    let s = SurfaceSpec::undeformed(k as i64)?;
    let t = s.tangent_transition()?;
    Ok(h1_stabilized(&s, &t, tangent_window(k), GrowthPolicy::default())?)
}

/// Generators of `Ext^1(O(2), O(-k))` and the matching classes of
/// `H^1(O(-k-2))`, related by multiplication with `z^-k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtBasis {
    pub ext_basis: Vec<BiLaurent>,
    pub h1_basis: Vec<BiLaurent>,
}

/// `z^(k-1) u, z^-1, 1, z, ..., z^(k-1)`.
pub fn ext_basis_tangent(k: i64) -> Result<ExtBasis, DeformationError> {
    let k = check_k(k, 1)? as i64;
    let mut ext_basis = vec![BiLaurent::mono(k - 1, 1)];
    ext_basis.extend((-1..k).map(|l| BiLaurent::mono(l, 0)));
    let h1_basis = ext_basis.iter().map(|p| p.shift(-k, 0)).collect();
    Ok(ExtBasis { ext_basis, h1_basis })
}
