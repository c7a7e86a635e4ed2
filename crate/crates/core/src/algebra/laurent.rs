//! Bivariate Laurent polynomials over the rationals.
//!
//! A [`BiLaurent`] is a finite sum of terms `c * z^a * u^b` with `a` any integer
//! and `b >= 0`. The same type carries functions in the second chart, where the
//! two slots are read as `(xi, v)`; the optional [`Chart`] tag records which
//! coordinate system the slots refer to.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{format_rational, parse_rational, Rational};
use super::AlgebraError;

/// Coordinate chart a function is written in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    /// `(z, u)`
    U,
    /// `(xi, v)`
    V,
}

impl Chart {
    pub fn var_names(self) -> (&'static str, &'static str) {
        match self {
            Chart::U => ("z", "u"),
            Chart::V => ("xi", "v"),
        }
    }
}

/// Merges two optional chart tags; untagged values are compatible with anything.
pub fn merge_charts(a: Option<Chart>, b: Option<Chart>) -> Result<Option<Chart>, AlgebraError> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(AlgebraError::TagMismatch(x, y)),
        (Some(x), _) | (_, Some(x)) => Ok(Some(x)),
        (None, None) => Ok(None),
    }
}

/// Exponent pair `z^z * u^u` (or `xi^z * v^u` in the second chart).
///
/// Ordered by `z` first, then `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub z: i64,
    pub u: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { z: 0, u: 0 };

    pub fn new(z: i64, u: u32) -> Self {
        Monomial { z, u }
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial { z: self.z + other.z, u: self.u + other.u }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiLaurent {
    terms: BTreeMap<Monomial, Rational>,
    chart: Option<Chart>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        BiLaurent::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c * z^z * u^u`.
    pub fn term(c: Rational, z: i64, u: u32) -> Self {
        let mut p = BiLaurent::zero();
        p.add_term(Monomial { z, u }, c);
        p
    }

    /// `z^z * u^u` with coefficient one.
    pub fn mono(z: i64, u: u32) -> Self {
        Self::term(Rational::one(), z, u)
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = BiLaurent::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn with_chart(mut self, chart: Chart) -> Self {
        self.chart = Some(chart);
        self
    }

    pub fn untagged(mut self) -> Self {
        self.chart = None;
        self
    }

    pub fn chart(&self) -> Option<Chart> {
        self.chart
    }

    pub(crate) fn set_chart(&mut self, chart: Option<Chart>) {
        self.chart = chart;
    }

    /// Adds `c * m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> + '_ {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    /// `Some((m, c))` if this is a single nonzero term.
    pub fn as_monomial(&self) -> Option<(Monomial, &Rational)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn min_z(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.z).min()
    }

    pub fn max_z(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.z).max()
    }

    pub fn max_u(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.u).max()
    }

    pub fn min_u(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.u).min()
    }

    /// True if no term has a negative first exponent.
    pub fn is_polynomial_in_first(&self) -> bool {
        self.terms.keys().all(|m| m.z >= 0)
    }

    /// True if no variable of the second slot appears.
    pub fn is_first_only(&self) -> bool {
        self.terms.keys().all(|m| m.u == 0)
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> BiLaurent {
        BiLaurent {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
            chart: self.chart,
        }
    }

    /// Multiplies by `z^dz * u^du`.
    pub fn shift(&self, dz: i64, du: u32) -> BiLaurent {
        BiLaurent {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { z: m.z + dz, u: m.u + du }, c.clone()))
                .collect(),
            chart: self.chart,
        }
    }

    pub fn scale(&self, c: &Rational) -> BiLaurent {
        if c.is_zero() {
            return BiLaurent { terms: BTreeMap::new(), chart: self.chart };
        }
        BiLaurent {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
            chart: self.chart,
        }
    }

    pub fn checked_add(&self, other: &BiLaurent) -> Result<BiLaurent, AlgebraError> {
        let chart = merge_charts(self.chart, other.chart)?;
        let mut out = self.clone();
        out.chart = chart;
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &BiLaurent) -> Result<BiLaurent, AlgebraError> {
        let chart = merge_charts(self.chart, other.chart)?;
        let mut out = self.clone();
        out.chart = chart;
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &BiLaurent) -> Result<BiLaurent, AlgebraError> {
        let chart = merge_charts(self.chart, other.chart)?;
        let mut out = BiLaurent { terms: BTreeMap::new(), chart };
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(*m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> BiLaurent {
        let mut acc = BiLaurent::one();
        acc.chart = self.chart;
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Inverse of a unit monomial `c * z^a`; `None` for anything else.
    pub fn unit_inverse(&self) -> Option<BiLaurent> {
        let (m, c) = self.as_monomial()?;
        if m.u != 0 {
            return None;
        }
        let mut p = BiLaurent::term(c.recip(), -m.z, 0);
        p.chart = self.chart;
        Some(p)
    }

    /// Partial derivative in the first variable.
    pub fn d_first(&self) -> BiLaurent {
        let mut out = BiLaurent { terms: BTreeMap::new(), chart: self.chart };
        for (m, c) in &self.terms {
            out.add_term(Monomial { z: m.z - 1, u: m.u }, c * Rational::from_integer(m.z.into()));
        }
        out
    }

    /// Partial derivative in the second variable.
    pub fn d_second(&self) -> BiLaurent {
        let mut out = BiLaurent { terms: BTreeMap::new(), chart: self.chart };
        for (m, c) in self.terms.iter().filter(|(m, _)| m.u > 0) {
            out.add_term(Monomial { z: m.z, u: m.u - 1 }, c * Rational::from_integer(m.u.into()));
        }
        out
    }

    /// Sets the second variable to zero.
    pub fn at_second_zero(&self) -> BiLaurent {
        self.filter(|m| m.u == 0)
    }

    /// Evaluates at a rational point; `z` must be nonzero if negative powers occur.
    pub fn eval(&self, z: &Rational, u: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let zp = if m.z >= 0 {
                num_traits::pow(z.clone(), m.z as usize)
            } else {
                num_traits::pow(z.recip(), (-m.z) as usize)
            };
            acc += c * zp * num_traits::pow(u.clone(), m.u as usize);
        }
        acc
    }

    /// Replaces the two variables by the images in `sub`.
    ///
    /// Negative powers of the first variable are only allowed when its image is
    /// a unit monomial `c * z^a`.
    pub fn substitute(&self, sub: &Substitution) -> Result<BiLaurent, AlgebraError> {
        let chart = merge_charts(sub.first.chart, sub.second.chart)?;
        let min_z = self.min_z().unwrap_or(0);
        let max_z = self.max_z().unwrap_or(0);
        let max_u = self.max_u().unwrap_or(0);

        let first_inv = if min_z < 0 {
            Some(sub.first.unit_inverse().ok_or(AlgebraError::NonInvertibleSubstitution)?)
        } else {
            None
        };
        let first_pos = powers(&sub.first, max_z.max(0) as u32);
        let first_neg = match &first_inv {
            Some(inv) => powers(inv, (-min_z) as u32),
            None => vec![],
        };
        let second = powers(&sub.second, max_u);

        let mut out = BiLaurent { terms: BTreeMap::new(), chart };
        for (m, c) in &self.terms {
            let f = if m.z >= 0 { &first_pos[m.z as usize] } else { &first_neg[(-m.z) as usize] };
            let prod = f * &second[m.u as usize];
            for (pm, pc) in prod.terms {
                out.add_term(pm, pc * c);
            }
        }
        Ok(out)
    }

    /// Parses the text syntax, e.g. `3/2*z^-4*u^2 - z + 1`.
    ///
    /// Text in `z`, `u` yields an untagged polynomial; text in `xi`, `v` yields a
    /// polynomial tagged with the second chart.
    pub fn parse(s: &str) -> Result<BiLaurent, AlgebraError> {
        parse_poly(s)
    }

    /// Parses and tags with `chart`; the variable names must fit the chart.
    pub fn parse_in(s: &str, chart: Chart) -> Result<BiLaurent, AlgebraError> {
        let p = parse_poly(s)?;
        match (p.chart, chart) {
            (Some(Chart::V), Chart::U) => Err(AlgebraError::TagMismatch(Chart::V, Chart::U)),
            _ => Ok(p.with_chart(chart)),
        }
    }
}

/// `[p^0, p^1, ..., p^n]`.
fn powers(p: &BiLaurent, n: u32) -> Vec<BiLaurent> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut one = BiLaurent::one();
    one.chart = p.chart;
    out.push(one);
    for i in 1..=n as usize {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

/// Images of the two variables of a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    pub first: BiLaurent,
    pub second: BiLaurent,
}

impl Substitution {
    pub fn new(first: BiLaurent, second: BiLaurent) -> Self {
        Substitution { first, second }
    }

    /// The substitution that applies `self` and then `outer`.
    pub fn then(&self, outer: &Substitution) -> Result<Substitution, AlgebraError> {
        Ok(Substitution {
            first: self.first.substitute(outer)?,
            second: self.second.substitute(outer)?,
        })
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&BiLaurent> for &BiLaurent {
            type Output = BiLaurent;
            /// Panics if the operands carry different chart tags.
            fn $method(self, rhs: &BiLaurent) -> BiLaurent {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<BiLaurent> for BiLaurent {
            type Output = BiLaurent;
            fn $method(self, rhs: BiLaurent) -> BiLaurent {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BiLaurent> for BiLaurent {
            type Output = BiLaurent;
            fn $method(self, rhs: &BiLaurent) -> BiLaurent {
                (&self).$method(rhs)
            }
        }
        impl $tr<BiLaurent> for &BiLaurent {
            type Output = BiLaurent;
            fn $method(self, rhs: BiLaurent) -> BiLaurent {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
            chart: self.chart,
        }
    }
}

impl Neg for BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        -&self
    }
}

impl From<Rational> for BiLaurent {
    fn from(c: Rational) -> Self {
        BiLaurent::constant(c)
    }
}

impl fmt::Display for BiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let (x, y) = self.chart.unwrap_or(Chart::U).var_names();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || *m == Monomial::ONE {
                factors.push(format_rational(&abs));
            }
            match m.z {
                0 => {}
                1 => factors.push(x.to_string()),
                e => factors.push(format!("{x}^{e}")),
            }
            match m.u {
                0 => {}
                1 => factors.push(y.to_string()),
                e => factors.push(format!("{y}^{e}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl FromStr for BiLaurent {
    type Err = AlgebraError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_poly(s)
    }
}

fn parse_poly(src: &str) -> Result<BiLaurent, AlgebraError> {
    let s: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    let err = |msg: &str| AlgebraError::Parse(format!("{msg} in `{src}`"));
    if s.is_empty() {
        return Err(err("empty polynomial"));
    }
    let mut out = BiLaurent::zero();
    let mut chart: Option<Chart> = None;
    let mut i = 0;
    let mut first = true;
    while i < s.len() {
        let mut sign = Rational::one();
        if s[i] == '+' || s[i] == '-' {
            if s[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !first {
            return Err(err("expected `+` or `-`"));
        }
        first = false;
        // one term: factor ('*' factor)*
        let mut coeff = sign;
        let mut mono = Monomial::ONE;
        loop {
            if i >= s.len() {
                return Err(err("dangling operator"));
            }
            if s[i].is_ascii_digit() {
                let start = i;
                while i < s.len() && (s[i].is_ascii_digit() || s[i] == '/') {
                    i += 1;
                }
                let tok: String = s[start..i].iter().collect();
                coeff *= parse_rational(&tok)?;
            } else if s[i].is_ascii_alphabetic() {
                let start = i;
                while i < s.len() && s[i].is_ascii_alphabetic() {
                    i += 1;
                }
                let name: String = s[start..i].iter().collect();
                let mut exp: i64 = 1;
                if i < s.len() && s[i] == '^' {
                    i += 1;
                    let start = i;
                    if i < s.len() && s[i] == '-' {
                        i += 1;
                    }
                    while i < s.len() && s[i].is_ascii_digit() {
                        i += 1;
                    }
                    let tok: String = s[start..i].iter().collect();
                    exp = tok.parse().map_err(|_| err("bad exponent"))?;
                }
                let (this_chart, slot) = match name.as_str() {
                    "z" => (Chart::U, 0),
                    "u" => (Chart::U, 1),
                    "xi" => (Chart::V, 0),
                    "v" => (Chart::V, 1),
                    _ => return Err(err(&format!("unknown variable `{name}`"))),
                };
                match chart {
                    Some(c) if c != this_chart => return Err(err("mixed chart variables")),
                    _ => chart = Some(this_chart),
                }
                if slot == 0 {
                    mono.z += exp;
                } else {
                    if exp < 0 {
                        return Err(err("negative power of the second variable"));
                    }
                    mono.u += exp as u32;
                }
            } else {
                return Err(err(&format!("unexpected `{}`", s[i])));
            }
            if i < s.len() && s[i] == '*' {
                i += 1;
            } else {
                break;
            }
        }
        out.add_term(mono, coeff);
    }
    if chart == Some(Chart::V) {
        out.chart = Some(Chart::V);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    fn p(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn exponent_addition() {
        assert_eq!(p("z^-1*u") * p("z*u"), p("u^2"));
    }

    #[test]
    fn additive_identity() {
        assert_eq!(p("z^-2") + BiLaurent::zero(), p("z^-2"));
    }

    #[test]
    fn binomial_square() {
        let q = p("z^2*u + z");
        assert_eq!(q.pow(2), p("z^4*u^2 + 2*z^3*u + z^2"));
    }

    #[test]
    fn chart_mismatch_is_an_error() {
        let a = p("z").with_chart(Chart::U);
        let b = p("xi");
        assert_eq!(a.checked_add(&b), Err(AlgebraError::TagMismatch(Chart::U, Chart::V)));
        assert!(a.checked_mul(&p("3")).is_ok());
    }

    #[test]
    fn canonical_printing() {
        let q = p("u - z^-1 + 3/2*z^-4*u^2 + 1");
        assert_eq!(q.to_string(), "3/2*z^-4*u^2 - z^-1 + 1 + u");
        assert_eq!(p("2*xi^2*v").to_string(), "2*xi^2*v");
        assert_eq!(BiLaurent::zero().to_string(), "0");
        assert_eq!(p("-1").to_string(), "-1");
        assert_eq!(p("z - z").to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "z +", "z^x", "w", "z*xi", "u^-1", "3/0*z", "z u"] {
            assert!(BiLaurent::parse(bad).is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn substitute_chart_change() {
        // xi^2 v with xi -> z^-1, v -> z^2 u + z
        let f = p("xi^2*v");
        let sub = Substitution::new(p("z^-1"), p("z^2*u + z"));
        assert_eq!(f.substitute(&sub).unwrap(), p("u + z^-1"));
    }

    #[test]
    fn substitute_single_variable_and_constant() {
        let sub = Substitution::new(p("xi^-1"), p("xi^2*v - xi"));
        assert_eq!(p("u").substitute(&sub).unwrap(), p("xi^2*v - xi"));
        assert_eq!(p("5").substitute(&sub).unwrap(), p("5").with_chart(Chart::V));
    }

    #[test]
    fn negative_power_of_non_unit_fails() {
        let sub = Substitution::new(p("z + 1"), p("u"));
        assert_eq!(p("z^-1").substitute(&sub), Err(AlgebraError::NonInvertibleSubstitution));
        assert!(p("z^3").substitute(&sub).is_ok());
    }

    #[test]
    fn evaluation() {
        let q = p("z^-1*u + 2");
        assert_eq!(q.eval(&int(2), &int(3)), frac(7, 2));
    }
}
