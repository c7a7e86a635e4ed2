//! Which classes of `Ext^1(O(2), O(-k))` are the off-diagonal entry of an
//! actual coordinate change.
//!
//! For a class `sigma` the candidate Jacobian is
//! `S = [[z^k, k z^(k-1) u + sigma], [0, -z^-2]]`; it is integrable when
//! `v` with `dv/du = z^k` and `dv/dz = k z^(k-1) u + sigma` exists.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{format_rational, BiLaurent, Monomial, ParamPoly, Rational};
use crate::surface::SurfaceSpec;

use super::{check_k, DeformationError};

/// `sigma = s1 z^(k-1) u + sum_{l=-1}^{k-1} s0[l] z^l`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TangentExtensionClass {
    pub s1: Rational,
    pub s0: BTreeMap<i64, Rational>,
}

impl TangentExtensionClass {
    pub fn from_sigma(k: i64, sigma: &BiLaurent) -> Result<Self, DeformationError> {
        let mut out = TangentExtensionClass::default();
        for (m, c) in sigma.terms() {
            match (m.z, m.u) {
                (z, 1) if z == k - 1 => out.s1 = c.clone(),
                (z, 0) if (-1..k).contains(&z) => {
                    out.s0.insert(z, c.clone());
                }
                _ => return Err(DeformationError::BadClassSupport(sigma.to_string())),
            }
        }
        Ok(out)
    }

    pub fn sigma(&self, k: i64) -> BiLaurent {
        let mut p = BiLaurent::term(self.s1.clone(), k - 1, 1);
        for (l, c) in &self.s0 {
            p.add_term(Monomial::new(*l, 0), c.clone());
        }
        p
    }

    fn s0(&self, l: i64) -> Rational {
        self.s0.get(&l).cloned().unwrap_or_else(Rational::zero)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Verdict {
    NotAJacobian,
    NotIntegrable,
    TrivialFamily,
    NontrivialDeformation,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        std::fmt::Debug::fmt(self, f)
    }
}

/// Outcome of the integrability analysis. When the class integrates, the new
/// coordinate is `v = z^k (u + t_k) + tau + C` with `C = C' = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegrabilityReport {
    pub verdict: Verdict,
    /// `t_1, ..., t_(k-1)`; empty unless the class integrates.
    pub tau: Vec<Rational>,
    pub t_k: Rational,
    pub c: Rational,
    pub c_prime: Rational,
}

impl IntegrabilityReport {
    pub fn is_integrable(&self) -> bool {
        matches!(self.verdict, Verdict::TrivialFamily | Verdict::NontrivialDeformation)
    }
}

impl Serialize for IntegrabilityReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            verdict: Verdict,
            tau: Vec<String>,
            #[serde(rename = "tK")]
            t_k: String,
            #[serde(rename = "C")]
            c: String,
            #[serde(rename = "CPrime")]
            c_prime: String,
        }
        Repr {
            verdict: self.verdict,
            tau: self.tau.iter().map(format_rational).collect(),
            t_k: format_rational(&self.t_k),
            c: format_rational(&self.c),
            c_prime: format_rational(&self.c_prime),
        }
        .serialize(s)
    }
}

/// Termwise antiderivative in `z`. The coefficient of `z^-1` has no Laurent
/// antiderivative and is returned separately.
pub fn integrate_first(f: &BiLaurent) -> (BiLaurent, BiLaurent) {
    let mut out = BiLaurent::zero();
    let mut log = BiLaurent::zero();
    for (m, c) in f.terms() {
        if m.z == -1 {
            log.add_term(Monomial::new(0, m.u), c.clone());
        } else {
            out.add_term(Monomial::new(m.z + 1, m.u), c / Rational::from_integer((m.z + 1).into()));
        }
    }
    (out, log)
}

pub fn integrability_analysis(k: i64, class: &TangentExtensionClass) -> Result<IntegrabilityReport, DeformationError> {
    check_k(k, 1)?;
    let fail = |verdict| IntegrabilityReport {
        verdict,
        tau: Vec::new(),
        t_k: Rational::zero(),
        c: Rational::zero(),
        c_prime: Rational::zero(),
    };
    let s11 = BiLaurent::mono(k, 0);
    let s12 = BiLaurent::term(Rational::from_integer(k.into()), k - 1, 1) + class.sigma(k);

    // v = z^k u + g(z) from dv/du = S_11; then dg/dz must equal what is left of S_12
    let v = s11.shift(0, 1);
    let rest = &s12 - &v.d_first();
    if !rest.is_first_only() {
        return Ok(fail(Verdict::NotAJacobian));
    }
    let (g, log) = integrate_first(&rest);
    if !log.is_zero() {
        return Ok(fail(Verdict::NotIntegrable));
    }
    let tau: Vec<Rational> = (1..k).map(|i| g.coeff(Monomial::new(i, 0))).collect();
    let verdict =
        if tau.iter().all(Zero::is_zero) { Verdict::TrivialFamily } else { Verdict::NontrivialDeformation };
    debug_assert!(tau.iter().enumerate().all(|(i, t)| *t == class.s0(i as i64) / Rational::from_integer((i as i64 + 1).into())));
    Ok(IntegrabilityReport {
        verdict,
        tau,
        t_k: g.coeff(Monomial::new(k, 0)),
        c: Rational::zero(),
        c_prime: Rational::zero(),
    })
}

/// For a class supported on `z^(k-1) u` alone, the factor `s1 / k` relating it
/// to the class `k z^(k-1) u` of the Jacobian itself.
pub fn jacobian_multiple(k: i64, class: &TangentExtensionClass) -> Option<Rational> {
    if k < 1 || class.s0.values().any(|c| !c.is_zero()) {
        return None;
    }
    Some(&class.s1 / Rational::from_integer(k.into()))
}

/// The isomorphism `Z_k(tau, t_k, C, 0) -> Z_k(tau)` given by
/// `(z, u) -> (z, u + t_k)` on `U` and `(xi, v) -> (xi, v - C)` on `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub surface: SurfaceSpec,
    pub t_k: Rational,
    pub c: Rational,
    /// `T_(Z_k(tau)) o phi_U - phi_V o T_(Z_k(tau, t_k, C, 0))` over the
    /// parameters `(tK, C)`, one entry per coordinate.
    pub residual: [ParamPoly; 2],
}

impl Normalization {
    pub fn is_identity(&self) -> bool {
        self.t_k.is_zero() && self.c.is_zero()
    }
}

type Map = [ParamPoly; 2];

fn compose(outer: &Map, inner: &Map) -> Result<Map, DeformationError> {
    Ok([outer[0].substitute(&inner[0], &inner[1])?, outer[1].substitute(&inner[0], &inner[1])?])
}

pub fn normalize_deformation(
    k: i64,
    tau: &[Rational],
    t_k: &Rational,
    c: &Rational,
) -> Result<Normalization, DeformationError> {
    let surface = SurfaceSpec::new(k, tau.to_vec())?;
    let names = vec!["tK".to_string(), "C".to_string()];
    let lift = |f: BiLaurent| ParamPoly::from_bilaurent(&names, f);
    let tk = ParamPoly::param(&names, 0);
    let cc = ParamPoly::param(&names, 1);
    let z = lift(BiLaurent::mono(1, 0));
    let u = lift(BiLaurent::mono(0, 1));
    let zk = lift(BiLaurent::mono(k, 0));
    let glue = surface.glue();
    let xi = lift(glue.first.untagged());

    let t_target: Map = [xi.clone(), lift(glue.second.untagged())];
    let phi_u: Map = [z.clone(), u.add(&tk)?];
    let phi_v: Map = [z.clone(), u.sub(&cc)?];
    let t_source: Map = [xi, zk.mul(&u.add(&tk)?)?.add(&lift(surface.tau_poly()))?.add(&cc)?];

    let lhs = compose(&t_target, &phi_u)?;
    let rhs = compose(&phi_v, &t_source)?;
    let residual = [lhs[0].sub(&rhs[0])?, lhs[1].sub(&rhs[1])?];
    if residual.iter().any(|r| !r.is_zero()) {
        return Err(DeformationError::VerificationFailed(format!(
            "normalization does not intertwine the transitions: {}, {}",
            residual[0], residual[1]
        )));
    }
    Ok(Normalization { surface, t_k: t_k.clone(), c: c.clone(), residual })
}
