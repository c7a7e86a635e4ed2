//! The surfaces `Z_k(tau)` as two glued charts.
//!
//! `U = {(z, u)}` and `V = {(xi, v)}` are identified on the overlap by
//! `(xi, v) = (z^-1, z^k u + tau)` with `tau = t_1 z + ... + t_{k-1} z^{k-1}`.
//! A bundle is given by a transition matrix `T`; a local section `s_U` on `U`
//! corresponds to `s_V = T * s_U` on `V`, and the line bundle `O(n)` has
//! transition `(z^-n)`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{
    format_rational, parse_rational, AlgebraError, BiLaurent, Chart, PolyMatrix, Rational,
    Substitution,
};
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("k must be at least 1, got {0}")]
    InvalidK(i64),
    #[error("tau must have k - 1 = {expected} coefficients, got {got}")]
    TauLength { expected: usize, got: usize },
    #[error("expected a function in the {expected:?} chart, got {got:?}")]
    WrongChart { expected: Chart, got: Chart },
    #[error("tau must only have terms z^i with 1 <= i <= k - 1, found `{0}`")]
    BadTauSupport(String),
    #[error("operation is only defined on the undeformed surface")]
    UnsupportedForDeformed,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfaceSpec {
    k: u32,
    tau: Vec<Rational>,
}

impl SurfaceSpec {
    /// `Z_k(tau)`; `tau` lists `t_1, ..., t_{k-1}`.
    pub fn new(k: i64, tau: Vec<Rational>) -> Result<Self, SurfaceError> {
        if k < 1 {
            return Err(SurfaceError::InvalidK(k));
        }
        let expected = (k - 1) as usize;
        if tau.len() != expected {
            return Err(SurfaceError::TauLength { expected, got: tau.len() });
        }
        Ok(SurfaceSpec { k: k as u32, tau })
    }

    /// The undeformed `Z_k`.
    pub fn undeformed(k: i64) -> Result<Self, SurfaceError> {
        Self::new(k, vec![Rational::zero(); (k.max(1) - 1) as usize])
    }

    /// Builds `Z_k(tau)` from `tau` written as a polynomial in `z`. Missing
    /// coefficients are zero; terms outside degrees `1..k-1` are rejected.
    pub fn from_tau_poly(k: i64, tau: &BiLaurent) -> Result<Self, SurfaceError> {
        let mut coeffs = vec![Rational::zero(); (k.max(1) - 1) as usize];
        for (m, c) in tau.terms() {
            if m.u != 0 || m.z < 1 || m.z >= k {
                return Err(SurfaceError::BadTauSupport(tau.to_string()));
            }
            coeffs[(m.z - 1) as usize] = c.clone();
        }
        Self::new(k, coeffs)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn tau(&self) -> &[Rational] {
        &self.tau
    }

    pub fn is_deformed(&self) -> bool {
        self.tau.iter().any(|t| !t.is_zero())
    }

    /// `tau = sum t_i z^i` as a function on `U`.
    pub fn tau_poly(&self) -> BiLaurent {
        let mut p = BiLaurent::zero();
        for (i, t) in self.tau.iter().enumerate() {
            p.add_term(crate::algebra::Monomial::new(i as i64 + 1, 0), t.clone());
        }
        p
    }

    /// `(xi, v)` in terms of `(z, u)`.
    pub fn glue(&self) -> Substitution {
        let k = self.k as i64;
        Substitution::new(
            BiLaurent::mono(-1, 0).with_chart(Chart::U),
            (BiLaurent::mono(k, 1) + self.tau_poly()).with_chart(Chart::U),
        )
    }

    /// `(z, u)` in terms of `(xi, v)`: `z = xi^-1`, `u = xi^k v - sum t_i xi^(k-i)`.
    pub fn inverse_glue(&self) -> Substitution {
        let k = self.k as i64;
        let mut u = BiLaurent::mono(k, 1);
        for (i, t) in self.tau.iter().enumerate() {
            u.add_term(crate::algebra::Monomial::new(k - (i as i64 + 1), 0), -t.clone());
        }
        Substitution::new(BiLaurent::mono(-1, 0).with_chart(Chart::V), u.with_chart(Chart::V))
    }

    /// Rewrites a function on `V` in the coordinates of `U`.
    pub fn to_u_coords(&self, p: &BiLaurent) -> Result<BiLaurent, SurfaceError> {
        match p.chart() {
            Some(Chart::U) => Err(SurfaceError::WrongChart { expected: Chart::V, got: Chart::U }),
            _ => Ok(p.substitute(&self.glue())?),
        }
    }

    /// Rewrites a function on `U` in the coordinates of `V`.
    pub fn to_v_coords(&self, p: &BiLaurent) -> Result<BiLaurent, SurfaceError> {
        match p.chart() {
            Some(Chart::V) => Err(SurfaceError::WrongChart { expected: Chart::U, got: Chart::V }),
            _ => Ok(p.substitute(&self.inverse_glue())?),
        }
    }

    /// Whether a function written on `U` extends holomorphically over `V`.
    pub fn is_v_holomorphic(&self, p: &BiLaurent) -> Result<bool, SurfaceError> {
        Ok(self.to_v_coords(p)?.is_polynomial_in_first())
    }

    /// Transition matrix of the tangent bundle in the frames `(d/dz, d/du)`
    /// and `(d/dxi, d/dv)`: the Jacobian `[[-z^-2, 0], [k z^(k-1) u, z^k]]`.
    pub fn tangent_transition(&self) -> Result<PolyMatrix, SurfaceError> {
        if self.is_deformed() {
            return Err(SurfaceError::UnsupportedForDeformed);
        }
        let k = self.k as i64;
        Ok(PolyMatrix::from_rows(vec![
            vec![-BiLaurent::mono(-2, 0), BiLaurent::zero()],
            vec![BiLaurent::term(Rational::from_integer(k.into()), k - 1, 1), BiLaurent::mono(k, 0)],
        ])?)
    }
}

impl std::fmt::Display for SurfaceSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_deformed() {
            write!(f, "Z_{}({})", self.k, self.tau_poly())
        } else {
            write!(f, "Z_{}", self.k)
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SurfaceRepr {
    k: i64,
    tau: Vec<String>,
}

impl Serialize for SurfaceSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SurfaceRepr { k: self.k as i64, tau: self.tau.iter().map(format_rational).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SurfaceSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = SurfaceRepr::deserialize(d)?;
        let tau = repr
            .tau
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>, _>>()
            .map_err(serde::de::Error::custom)?;
        SurfaceSpec::new(repr.k, tau).map_err(serde::de::Error::custom)
    }
}

/// The line bundle `O(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineBundleSpec {
    pub n: i64,
}

impl LineBundleSpec {
    pub fn new(n: i64) -> Self {
        LineBundleSpec { n }
    }

    /// `(z^-n)`.
    pub fn transition(&self) -> PolyMatrix {
        PolyMatrix::scalar(BiLaurent::mono(-self.n, 0))
    }
}

/// Direct sum `O(n_1) + ... + O(n_r)` as a diagonal transition matrix.
pub fn split_transition(degrees: &[i64]) -> PolyMatrix {
    PolyMatrix::diagonal(degrees.iter().map(|&n| BiLaurent::mono(-n, 0)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn p(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    fn v(s: &str) -> BiLaurent {
        BiLaurent::parse_in(s, Chart::V).unwrap()
    }

    fn deformed(k: i64, tau: &[i64]) -> SurfaceSpec {
        SurfaceSpec::new(k, tau.iter().map(|&t| int(t)).collect()).unwrap()
    }

    #[test]
    fn rewrite_to_u() {
        let z2 = SurfaceSpec::undeformed(2).unwrap();
        assert_eq!(z2.to_u_coords(&v("xi*v")).unwrap(), p("z*u").with_chart(Chart::U));
        assert_eq!(deformed(2, &[1]).to_u_coords(&v("v")).unwrap(), p("z^2*u + z").with_chart(Chart::U));
        assert_eq!(deformed(3, &[5, -2]).to_u_coords(&v("xi^2")).unwrap(), p("z^-2").with_chart(Chart::U));
    }

    #[test]
    fn rewrite_to_v() {
        let z2 = SurfaceSpec::undeformed(2).unwrap();
        assert_eq!(z2.to_v_coords(&p("z^3*u")).unwrap(), v("xi^-1*v"));
        assert_eq!(deformed(2, &[1]).to_v_coords(&p("u")).unwrap(), v("xi^2*v - xi"));
        assert_eq!(SurfaceSpec::undeformed(1).unwrap().to_v_coords(&p("z^-2")).unwrap(), v("xi^2"));
    }

    #[test]
    fn wrong_chart_rejected() {
        let z2 = SurfaceSpec::undeformed(2).unwrap();
        assert!(matches!(z2.to_v_coords(&v("xi")), Err(SurfaceError::WrongChart { .. })));
        assert!(matches!(z2.to_u_coords(&p("z").with_chart(Chart::U)), Err(SurfaceError::WrongChart { .. })));
    }

    #[test]
    fn holomorphy_on_v() {
        let z2 = SurfaceSpec::undeformed(2).unwrap();
        assert!(z2.is_v_holomorphic(&p("z^4*u^2")).unwrap());
        assert!(!z2.is_v_holomorphic(&p("z^5*u^2")).unwrap());
        let d = deformed(2, &[1]);
        assert!(!d.is_v_holomorphic(&p("z^5*u^2")).unwrap());
        // brute-force expansion of xi^-5 (xi^2 v - xi)^2
        assert_eq!(d.to_v_coords(&p("z^5*u^2")).unwrap(), v("xi^-1*v^2 - 2*xi^-2*v + xi^-3"));
    }

    #[test]
    fn tangent_jacobian() {
        let j2 = SurfaceSpec::undeformed(2).unwrap().tangent_transition().unwrap();
        assert_eq!(j2.rows(), vec![vec![p("-z^-2"), p("0")], vec![p("2*z*u"), p("z^2")]]);
        let j1 = SurfaceSpec::undeformed(1).unwrap().tangent_transition().unwrap();
        assert_eq!(j1.rows(), vec![vec![p("-z^-2"), p("0")], vec![p("u"), p("z")]]);
        for k in 1..6 {
            let j = SurfaceSpec::undeformed(k).unwrap().tangent_transition().unwrap();
            assert_eq!(j.det(), BiLaurent::term(int(-1), k - 2, 0));
        }
        assert_eq!(deformed(2, &[1]).tangent_transition(), Err(SurfaceError::UnsupportedForDeformed));
    }

    #[test]
    fn unit_determinants() {
        for n in -3..4 {
            assert_eq!(LineBundleSpec::new(n).transition().det_degree(), Some(-n));
        }
        assert_eq!(split_transition(&[2, -5]).det_degree(), Some(3));
    }

    #[test]
    fn invalid_specs() {
        assert_eq!(SurfaceSpec::new(0, vec![]), Err(SurfaceError::InvalidK(0)));
        assert_eq!(SurfaceSpec::new(3, vec![int(1)]), Err(SurfaceError::TauLength { expected: 2, got: 1 }));
        assert!(!SurfaceSpec::undeformed(1).unwrap().is_deformed());
        assert!(!deformed(3, &[0, 0]).is_deformed());
        assert!(deformed(3, &[0, 1]).is_deformed());
    }

    #[test]
    fn json_form() {
        let s = deformed(3, &[1, 0]);
        let js = serde_json::to_string(&s).unwrap();
        assert_eq!(js, r#"{"k":3,"tau":["1","0"]}"#);
        let back: SurfaceSpec = serde_json::from_str(r#"{"k": 2, "tau": ["1/2"]}"#).unwrap();
        assert_eq!(back.tau(), &[crate::algebra::frac(1, 2)]);
        assert!(serde_json::from_str::<SurfaceSpec>(r#"{"k": 2, "tau": []}"#).is_err());
    }
}
