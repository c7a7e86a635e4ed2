use num_traits::Zero;

use crate::algebra::{BiLaurent, Chart, PolyMatrix};
use crate::cohomology::{triviality_certificate, CohomologyError, GrowthPolicy, TrivialityCertificate, Window};
use crate::surface::SurfaceSpec;

use super::{extension_to_transition, BundleError, ExtensionClass};

/// Frame changes `A_U`, `A_V` with `A_V T = target A_U`, i.e.
/// `A_V T A_U^-1 = diag(z^j, z^-j)`. `A_V` is written in `V` coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitCertificate {
    pub a_u: PolyMatrix,
    pub a_v: PolyMatrix,
    pub target: PolyMatrix,
    /// `A_V T - target A_U` in `U` coordinates.
    pub residual: PolyMatrix,
    pub exact: bool,
    pub window_used: Window,
}

impl SplitCertificate {
    /// Recomputes the identity for `t` and the determinant condition.
    pub fn verify(&self, s: &SurfaceSpec, t: &PolyMatrix) -> Result<bool, BundleError> {
        let a_v = to_u_matrix(s, &self.a_v)?;
        let a_u = self.a_u.map(|e| e.clone().untagged());
        let lhs = a_v.mul(&t.map(|e| e.clone().untagged()))?;
        let rhs = self.target.mul(&a_u)?;
        let identity = lhs.sub(&rhs)? == self.residual;
        let det_u = a_u.det();
        let det_v = self.a_v.det().untagged();
        let dets = det_u.as_monomial().is_some_and(|(m, c)| m.z == 0 && m.u == 0 && !c.is_zero()) && det_u == det_v;
        Ok(identity && dets && (self.exact == self.residual.is_zero()))
    }
}

/// Rewrites a matrix of `V`-chart functions in `U` coordinates.
fn to_u_matrix(s: &SurfaceSpec, m: &PolyMatrix) -> Result<PolyMatrix, BundleError> {
    let rows = m
        .rows()
        .iter()
        .map(|r| r.iter().map(|x| s.to_u_coords(x).map(BiLaurent::untagged)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PolyMatrix::from_rows(rows)?)
}

fn assemble(
    s: &SurfaceSpec,
    e: &ExtensionClass,
    c: &TrivialityCertificate,
    w: Window,
) -> Result<SplitCertificate, BundleError> {
    let j = e.j as i64;
    let one_u = BiLaurent::one().with_chart(Chart::U);
    let one_v = BiLaurent::one().with_chart(Chart::V);
    let a_u = PolyMatrix::from_rows(vec![
        vec![one_u.clone(), c.f_u.clone()],
        vec![BiLaurent::zero().with_chart(Chart::U), one_u],
    ])?;
    let a_v = PolyMatrix::from_rows(vec![
        vec![one_v.clone(), -&c.f_v],
        vec![BiLaurent::zero().with_chart(Chart::V), one_v],
    ])?;
    let target = PolyMatrix::diagonal(vec![BiLaurent::mono(j, 0), BiLaurent::mono(-j, 0)]);
    let t = extension_to_transition(e);
    let a_v_u = to_u_matrix(s, &a_v)?;
    let residual = a_v_u.mul(&t)?.sub(&target.mul(&a_u.map(|x| x.clone().untagged()))?)?;
    let exact = residual.is_zero();
    Ok(SplitCertificate { a_u, a_v, target, residual, exact, window_used: w })
}

/// [`split_certificate_with`] with the default growth policy.
pub fn split_certificate(s: &SurfaceSpec, e: &ExtensionClass, w: Window) -> Result<SplitCertificate, BundleError> {
    split_certificate_with(s, e, w, GrowthPolicy::default())
}

/// Splits the extension `e` on `s` from a triviality certificate for its
/// class. On a deformed surface the window is enlarged until the certificate
/// is exact or the step cap is reached.
pub fn split_certificate_with(
    s: &SurfaceSpec,
    e: &ExtensionClass,
    w0: Window,
    policy: GrowthPolicy,
) -> Result<SplitCertificate, BundleError> {
    let n = 2 * e.j as i64;
    let mut w = w0;
    let mut best = None;
    for step in 0..=policy.max_steps {
        if step > 0 {
            w = w.grow(policy.dz, policy.du);
        }
        match triviality_certificate(&e.sigma, s, n, w) {
            Ok(c) => {
                let cert = assemble(s, e, &c, w)?;
                if cert.exact {
                    return Ok(cert);
                }
                best = Some(cert);
            }
            Err(CohomologyError::NotTrivial(nf)) if !s.is_deformed() => {
                return Err(CohomologyError::NotTrivial(nf).into());
            }
            Err(CohomologyError::NotTrivial(_)) => {}
            Err(err) => return Err(err.into()),
        }
    }
    best.ok_or(BundleError::CertificateNotFound(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn deformed_split() {
        let s = SurfaceSpec::new(2, vec![int(1)]).unwrap();
        let e = ExtensionClass::new(1, p("z^-1"));
        let c = split_certificate(&s, &e, Window::for_line_bundle(2, 2)).unwrap();
        assert!(c.exact);
        assert_eq!(c.a_u.get(0, 1).to_string(), "-u");
        assert_eq!(c.a_v.get(0, 1).to_string(), "-v");
        assert!(c.verify(&s, &extension_to_transition(&e)).unwrap());
    }

    #[test]
    fn zero_class_gives_identity() {
        let s = SurfaceSpec::new(3, vec![int(1), int(0)]).unwrap();
        let e = ExtensionClass::new(2, BiLaurent::zero());
        let c = split_certificate(&s, &e, Window::for_line_bundle(3, 4)).unwrap();
        assert_eq!(c.a_u.map(|x| x.clone().untagged()), PolyMatrix::identity(2));
        assert_eq!(c.a_v.map(|x| x.clone().untagged()), PolyMatrix::identity(2));
    }

    #[test]
    fn undeformed_nontrivial_class() {
        let s = SurfaceSpec::undeformed(2).unwrap();
        let e = ExtensionClass::new(2, p("z^-1*u"));
        let r = split_certificate(&s, &e, Window::for_line_bundle(2, 4));
        assert!(matches!(r, Err(BundleError::Cohomology(CohomologyError::NotTrivial(_)))));
    }
}
