use serde::Serialize;

use crate::algebra::{BiLaurent, Chart, Echelon};
use crate::surface::{LineBundleSpec, SurfaceSpec};

use super::{CechComplex, CohomologyError, Generator, VectorCocycle, Window};

/// Explicit coboundary data for a trivial class of `O(-n)`:
/// `sigma = f_U + z^-n * f_V + residual` with `f_V` rewritten to `U`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityCertificate {
    #[serde(rename = "f_U", serialize_with = "as_string")]
    pub f_u: BiLaurent,
    #[serde(rename = "f_V", serialize_with = "as_string")]
    pub f_v: BiLaurent,
    #[serde(serialize_with = "as_string")]
    pub residual: BiLaurent,
    pub exact: bool,
}

fn as_string<S: serde::Serializer>(p: &BiLaurent, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

/// Rank-generic certificate: `sigma = f_U + T^-1 * f_V + residual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCertificate {
    pub f_u: Vec<BiLaurent>,
    pub f_v: Vec<BiLaurent>,
    pub residual: Vec<BiLaurent>,
    pub exact: bool,
}

impl CechComplex {
    /// Solves for coboundary data representing `sigma`. Columns whose
    /// negative part fits in the window are tried first, which yields an exact
    /// certificate whenever one exists in the window.
    pub fn certify(&self, sigma: &VectorCocycle) -> Result<VectorCertificate, CohomologyError> {
        self.check_cochain(sigma)?;
        let target = self.restrict(&sigma.0);
        let nf = self.echelon()?.reduce(&target).remainder;
        if !nf.is_empty() {
            return Err(CohomologyError::NotTrivial(self.expand(&nf).to_string()));
        }
        let mut fallback = None;
        for exact_only in [true, false] {
            let cols: Vec<_> = self.v_columns().filter(|c| !exact_only || c.exact).collect();
            let mut ech = Echelon::new(self.negative_dim(), true);
            for (i, c) in cols.iter().enumerate() {
                let v = self.restrict(&c.image);
                if !v.is_empty() {
                    ech.insert(v, i);
                }
                if ech.is_full() {
                    break;
                }
            }
            let red = ech.reduce(&target);
            if !red.remainder.is_empty() {
                continue;
            }
            let mut f_v = vec![BiLaurent::zero(); self.rank()];
            for (&i, lambda) in &red.combination {
                if let Generator::V { component, monomial } = cols[i].generator {
                    f_v[component].add_term(monomial, -lambda.clone());
                }
            }
            let cert = self.assemble(sigma, f_v)?;
            if cert.exact {
                return Ok(cert);
            }
            fallback.get_or_insert(cert);
        }
        fallback.ok_or_else(|| CohomologyError::NotTrivial("0".into()))
    }

    fn assemble(&self, sigma: &VectorCocycle, f_v: Vec<BiLaurent>) -> Result<VectorCertificate, CohomologyError> {
        let rewritten = f_v
            .iter()
            .map(|f| self.surface().to_u_coords(f).map(BiLaurent::untagged))
            .collect::<Result<Vec<_>, _>>()?;
        let g = self.inverse().apply(&rewritten)?;
        let mut f_u = Vec::new();
        let mut residual = Vec::new();
        for (s, g) in sigma.0.iter().zip(&g) {
            let d = s.clone().untagged() - g;
            f_u.push(d.filter(|m| m.z >= 0).with_chart(Chart::U));
            residual.push(d.filter(|m| m.z < 0));
        }
        let exact = residual.iter().all(BiLaurent::is_zero);
        Ok(VectorCertificate {
            f_u,
            f_v: f_v.into_iter().map(|f| f.with_chart(Chart::V)).collect(),
            residual,
            exact,
        })
    }
}

/// Certificate that `sigma` is a coboundary for `O(-n)` on `s`, or
/// [`CohomologyError::NotTrivial`] when its normal form is nonzero.
pub fn triviality_certificate(
    sigma: &BiLaurent,
    s: &SurfaceSpec,
    n: i64,
    w: Window,
) -> Result<TrivialityCertificate, CohomologyError> {
    let cx = CechComplex::new(s, &LineBundleSpec::new(-n).transition(), w)?;
    let mut c = cx.certify(&VectorCocycle::scalar(sigma.clone()))?;
    Ok(TrivialityCertificate {
        f_u: c.f_u.remove(0),
        f_v: c.f_v.remove(0),
        residual: c.residual.remove(0),
        exact: c.exact,
    })
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    fn check(sigma: &BiLaurent, s: &SurfaceSpec, n: i64, c: &TrivialityCertificate) {
        let back = s.to_u_coords(&c.f_v).unwrap().untagged() * BiLaurent::mono(-n, 0);
        let total = c.f_u.clone().untagged() + back + c.residual.clone();
        assert_eq!(&total, sigma);
        assert!(c.f_u.min_z().is_none_or(|z| z >= 0));
        assert!(c.f_v.is_polynomial_in_first());
    }

    #[test]
    fn deformed_example() {
        let s = SurfaceSpec::new(2, vec![int(1)]).unwrap();
        let sigma = p("z^-1");
        let c = triviality_certificate(&sigma, &s, 2, Window::for_line_bundle(2, 2)).unwrap();
        assert!(c.exact);
        assert_eq!(c.f_u.to_string(), "-u");
        assert_eq!(c.f_v.to_string(), "v");
        check(&sigma, &s, 2, &c);
    }

    #[test]
    fn nontrivial_and_zero() {
        let s = SurfaceSpec::undeformed(2).unwrap();
        let w = Window::for_line_bundle(2, 4);
        assert!(matches!(triviality_certificate(&p("z^-1"), &s, 4, w), Err(CohomologyError::NotTrivial(_))));
        let c = triviality_certificate(&BiLaurent::zero(), &s, 4, w).unwrap();
        assert!(c.f_u.is_zero() && c.f_v.is_zero() && c.exact);
    }

    #[test]
    fn undeformed_coboundary() {
        let s = SurfaceSpec::undeformed(2).unwrap();
        let sigma = p("2*z^-5 + z^-4*u + 7*z^2");
        let c = triviality_certificate(&sigma, &s, 4, Window::for_line_bundle(2, 4)).unwrap();
        assert!(c.exact);
        check(&sigma, &s, 4, &c);
    }
}
