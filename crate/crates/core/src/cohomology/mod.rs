//! Čech cohomology of bundles on `Z_k(tau)` for the cover `{U, V}`.
//!
//! The cochain spaces are infinite dimensional, so every computation works in
//! a finite [`Window`] of monomials. Dimensions and bases are statements about
//! the window; [`stabilize_window`] grows it until the answer stops changing.

mod certificate;
mod complex;
mod formula;
mod h0;
mod stabilize;
mod window;

use std::fmt;

use serde::Serialize;

use crate::algebra::{AlgebraError, BiLaurent, PolyMatrix};
use crate::surface::{SurfaceError, SurfaceSpec};

pub use certificate::{triviality_certificate, TrivialityCertificate};
pub use complex::{CechComplex, CoboundaryMatrix, Column, Generator};
pub use formula::{h1_dimension_formula, m_row, standard_basis};
pub use h0::{h0, h0_basis};
pub use stabilize::{stabilize_window, GrowthPolicy, Stabilized};
pub use window::Window;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error("invalid window {min_z},{max_z},{max_u}: need minZ <= 0 <= maxZ")]
    InvalidWindow { min_z: i64, max_z: i64, max_u: u32 },
    #[error("cannot parse window `{0}`, expected minZ,maxZ,maxU")]
    WindowSyntax(String),
    #[error("no V-generator meets the window")]
    WindowTooSmall,
    #[error("term {0} lies outside the window")]
    SupportOutsideWindow(String),
    #[error("cocycle must be written in U coordinates")]
    WrongChart,
    #[error("cocycle has {got} components, bundle has rank {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("transition matrix does not have a unit determinant")]
    NonUnitDeterminant,
    #[error("class is not trivial: normal form {0}")]
    NotTrivial(String),
    #[error("value did not stabilize within {steps} enlargements (last value {last}, window {window})")]
    StepCapExceeded { last: i64, window: Window, steps: usize },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A cochain for a bundle of rank `r`: one function per frame component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCocycle(pub Vec<BiLaurent>);

impl VectorCocycle {
    pub fn scalar(f: BiLaurent) -> Self {
        VectorCocycle(vec![f])
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(BiLaurent::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for VectorCocycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl From<BiLaurent> for VectorCocycle {
    fn from(f: BiLaurent) -> Self {
        VectorCocycle::scalar(f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CohomologyResult {
    pub dimension: usize,
    #[serde(serialize_with = "serialize_basis")]
    pub basis: Vec<VectorCocycle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m_row: Option<i64>,
    pub window_used: Window,
    pub stabilized: bool,
}

fn serialize_basis<S: serde::Serializer>(basis: &[VectorCocycle], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(basis.iter().map(ToString::to_string))
}

/// `Some(n)` when `t` is the transition `(z^n)` of `O(-n)`.
fn line_bundle_degree(t: &PolyMatrix) -> Option<i64> {
    if t.size() != 1 {
        return None;
    }
    let (m, c) = t.get(0, 0).as_monomial()?;
    (m.u == 0 && num_traits::One::is_one(c)).then_some(m.z)
}

/// Coboundary matrix of the truncated complex.
pub fn coboundary_matrix(s: &SurfaceSpec, t: &PolyMatrix, w: Window) -> Result<CoboundaryMatrix, CohomologyError> {
    CechComplex::new(s, t, w)?.coboundary_matrix()
}

/// `H^1` of the bundle with transition `t`, computed inside `w`.
pub fn h1(s: &SurfaceSpec, t: &PolyMatrix, w: Window) -> Result<CohomologyResult, CohomologyError> {
    let cx = CechComplex::new(s, t, w)?;
    let ech = cx.echelon()?;
    let basis: Vec<VectorCocycle> = (0..cx.negative_dim())
        .filter(|i| !ech.is_pivot(*i))
        .map(|i| cx.expand(&[(i, num_traits::One::one())].into_iter().collect()))
        .collect();
    let m_row = line_bundle_degree(t).filter(|&n| n >= 2).map(|n| m_row(s.k(), n));
    Ok(CohomologyResult { dimension: basis.len(), basis, m_row, window_used: w, stabilized: false })
}

/// [`h1`] on the first window of `w0`'s growth sequence where the dimension
/// has settled. If the step cap is hit the last result is returned with
/// `stabilized = false`.
pub fn h1_stabilized(
    s: &SurfaceSpec,
    t: &PolyMatrix,
    w0: Window,
    policy: GrowthPolicy,
) -> Result<CohomologyResult, CohomologyError> {
    let dim = |w: Window| h1(s, t, w).map(|r| r.dimension as i64);
    match stabilize_window(dim, w0, policy) {
        Ok(st) => Ok(CohomologyResult { stabilized: true, ..h1(s, t, st.window)? }),
        Err(CohomologyError::StepCapExceeded { window, .. }) => h1(s, t, window),
        Err(e) => Err(e),
    }
}

/// Unique representative of `[sigma]` supported on the non-pivot coordinates.
pub fn normal_form(
    sigma: &VectorCocycle,
    s: &SurfaceSpec,
    t: &PolyMatrix,
    w: Window,
) -> Result<VectorCocycle, CohomologyError> {
    let cx = CechComplex::new(s, t, w)?;
    cx.check_cochain(sigma)?;
    let ech = cx.echelon()?;
    Ok(cx.expand(&ech.reduce(&cx.restrict(&sigma.0)).remainder))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::LineBundleSpec;

    fn p(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    fn o(n: i64) -> PolyMatrix {
        LineBundleSpec::new(n).transition()
    }

    #[test]
    fn lemma_basis_for_k2_n4() {
        let s = SurfaceSpec::undeformed(2).unwrap();
        let r = h1(&s, &o(-4), Window::for_line_bundle(2, 4)).unwrap();
        assert_eq!(r.dimension, 4);
        let got: Vec<String> = r.basis.iter().map(ToString::to_string).collect();
        assert_eq!(got, ["z^-3", "z^-2", "z^-1", "z^-1*u"]);
        assert_eq!(r.m_row, Some(1));
    }

    #[test]
    fn vanishing_cases() {
        let s = SurfaceSpec::undeformed(3).unwrap();
        assert_eq!(h1(&s, &o(-1), Window::for_line_bundle(3, 1)).unwrap().dimension, 0);
        let d = SurfaceSpec::new(2, vec![crate::algebra::int(1)]).unwrap();
        assert_eq!(h1(&d, &o(-4), Window::for_line_bundle(2, 4)).unwrap().dimension, 0);
    }

    #[test]
    fn trivial_bundle_on_tiny_window() {
        let s = SurfaceSpec::undeformed(1).unwrap();
        let w = Window::new(-1, 1, 0).unwrap();
        let m = coboundary_matrix(&s, &o(0), w).unwrap();
        assert_eq!(m.matrix.rank(), w.size());
    }

    #[test]
    fn normal_forms() {
        let s = SurfaceSpec::undeformed(2).unwrap();
        let w = Window::for_line_bundle(2, 4);
        let nf = |q: &str| normal_form(&p(q).into(), &s, &o(-4), w).unwrap().to_string();
        assert_eq!(nf("z^-5"), "0");
        let wide = normal_form(&p("3*z^-1*u + z^2*u^7").into(), &s, &o(-4), w.grow(0, 3)).unwrap();
        assert_eq!(wide.to_string(), "3*z^-1*u");
        assert_eq!(nf("z^3"), "0");
        let far = normal_form(&p("z^-40").into(), &s, &o(-4), w);
        assert!(matches!(far, Err(CohomologyError::SupportOutsideWindow(_))));
    }

    #[test]
    fn dense_and_sparse_ranks_agree() {
        let s = SurfaceSpec::undeformed(2).unwrap();
        let w = Window::for_line_bundle(2, 5);
        let m = coboundary_matrix(&s, &o(-5), w).unwrap();
        let dim = h1(&s, &o(-5), w).unwrap().dimension;
        assert_eq!(w.size() - m.matrix.rank(), dim);
        assert_eq!(dim, h1_dimension_formula(2, 5) as usize);
    }
}
