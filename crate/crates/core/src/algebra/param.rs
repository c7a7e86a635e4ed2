//! Polynomials in formal parameters `t_1, ..., t_p` whose coefficients are
//! [`BiLaurent`] functions.
//!
//! Used for identities that must hold for every value of the deformation
//! parameters at once.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::laurent::{merge_charts, BiLaurent, Chart};
use super::rational::Rational;
use super::AlgebraError;

/// Exponent vector over the parameters.
pub type ParamExp = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoly {
    names: Vec<String>,
    terms: BTreeMap<ParamExp, BiLaurent>,
}

impl ParamPoly {
    /// The zero polynomial over parameters with the given display names.
    pub fn zero(names: &[String]) -> Self {
        ParamPoly { names: names.to_vec(), terms: BTreeMap::new() }
    }

    /// Default names `t1, ..., tp`.
    pub fn default_names(p: usize) -> Vec<String> {
        (1..=p).map(|i| format!("t{i}")).collect()
    }

    pub fn from_bilaurent(names: &[String], f: BiLaurent) -> Self {
        let mut out = Self::zero(names);
        out.add_coeff(vec![0; names.len()], f);
        out
    }

    /// The parameter `t_i` (0-based index).
    pub fn param(names: &[String], i: usize) -> Self {
        let mut e = vec![0; names.len()];
        e[i] = 1;
        let mut out = Self::zero(names);
        out.add_coeff(e, BiLaurent::one());
        out
    }

    pub fn nparams(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamExp, &BiLaurent)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn chart(&self) -> Option<Chart> {
        self.terms.values().find_map(BiLaurent::chart)
    }

    /// Retags every coefficient.
    pub fn with_chart(self, chart: Chart) -> Self {
        ParamPoly {
            names: self.names,
            terms: self.terms.into_iter().map(|(e, c)| (e, c.with_chart(chart))).collect(),
        }
    }

    fn add_coeff(&mut self, e: ParamExp, c: BiLaurent) {
        if c.is_zero() {
            return;
        }
        let merged = match self.terms.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !merged.is_zero() {
            self.terms.insert(e, merged);
        }
    }

    fn check_compat(&self, other: &ParamPoly) -> Result<(), AlgebraError> {
        if self.names.len() != other.names.len() {
            return Err(AlgebraError::DimensionMismatch);
        }
        merge_charts(self.chart(), other.chart())?;
        Ok(())
    }

    pub fn add(&self, other: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_coeff(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> ParamPoly {
        ParamPoly {
            names: self.names.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.check_compat(other)?;
        let mut out = Self::zero(&self.names);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: ParamExp = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_coeff(e, c1.checked_mul(c2)?);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> ParamPoly {
        let mut out = Self::zero(&self.names);
        for (e, f) in &self.terms {
            out.add_coeff(e.clone(), f.scale(c));
        }
        out
    }

    /// Multiplies every coefficient by a function.
    pub fn mul_bilaurent(&self, f: &BiLaurent) -> Result<ParamPoly, AlgebraError> {
        self.mul(&Self::from_bilaurent(&self.names, f.clone()))
    }

    pub fn pow(&self, n: u32) -> Result<ParamPoly, AlgebraError> {
        let mut acc = Self::from_bilaurent(&self.names, BiLaurent::one());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Inverse of a parameter-free unit monomial `c * z^a`.
    fn unit_inverse(&self) -> Option<ParamPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        if e.iter().any(|&x| x != 0) {
            return None;
        }
        Some(Self::from_bilaurent(&self.names, c.unit_inverse()?))
    }

    /// Replaces the two chart variables by parametric images.
    pub fn substitute(&self, first: &ParamPoly, second: &ParamPoly) -> Result<ParamPoly, AlgebraError> {
        self.check_compat(first)?;
        first.check_compat(second)?;
        let coeffs = || self.terms.values().flat_map(BiLaurent::terms);
        let min_z = coeffs().map(|(m, _)| m.z).min().unwrap_or(0);
        let max_z = coeffs().map(|(m, _)| m.z).max().unwrap_or(0);
        let max_u = coeffs().map(|(m, _)| m.u).max().unwrap_or(0);

        let pos = param_powers(first, max_z.max(0) as u32)?;
        let neg = if min_z < 0 {
            let inv = first.unit_inverse().ok_or(AlgebraError::NonInvertibleSubstitution)?;
            param_powers(&inv, (-min_z) as u32)?
        } else {
            vec![]
        };
        let sec = param_powers(second, max_u)?;

        let mut out = Self::zero(&self.names);
        for (e, coeff) in &self.terms {
            let mut t = Self::zero(&self.names);
            t.add_coeff(e.clone(), BiLaurent::one());
            for (m, c) in coeff.terms() {
                let f = if m.z >= 0 { &pos[m.z as usize] } else { &neg[(-m.z) as usize] };
                let piece = f.mul(&sec[m.u as usize])?.mul(&t)?.scale(c);
                out = out.add(&piece)?;
            }
        }
        Ok(out)
    }

    /// Specializes the parameters to rational values.
    pub fn eval_params(&self, values: &[Rational]) -> Result<BiLaurent, AlgebraError> {
        if values.len() != self.names.len() {
            return Err(AlgebraError::DimensionMismatch);
        }
        let mut out = BiLaurent::zero();
        for (e, c) in &self.terms {
            let mut w = Rational::one();
            for (v, &k) in values.iter().zip(e) {
                w *= num_traits::pow(v.clone(), k as usize);
            }
            if !w.is_zero() {
                out = out.checked_add(&c.scale(&w))?;
            }
        }
        if let Some(ch) = self.chart() {
            out.set_chart(Some(ch));
        }
        Ok(out)
    }

    /// Partial derivative with respect to parameter `i`.
    pub fn d_param(&self, i: usize) -> ParamPoly {
        let mut out = Self::zero(&self.names);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_coeff(e2, c.scale(&Rational::from_integer(e[i].into())));
        }
        out
    }
}

fn param_powers(p: &ParamPoly, n: u32) -> Result<Vec<ParamPoly>, AlgebraError> {
    let mut out = vec![ParamPoly::from_bilaurent(&p.names, BiLaurent::one())];
    for i in 1..=n as usize {
        let next = out[i - 1].mul(p)?;
        out.push(next);
    }
    Ok(out)
}

impl fmt::Display for ParamPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let params: Vec<String> = e
                    .iter()
                    .zip(&self.names)
                    .filter(|(k, _)| **k > 0)
                    .map(|(k, n)| if *k == 1 { n.clone() } else { format!("{n}^{k}") })
                    .collect();
                if params.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c})*{}", params.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
