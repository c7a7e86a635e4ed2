//! Grothendieck splitting type of a bundle on the line from its `h^0` profile.
//!
//! For `E = O(j_1) + ... + O(j_r)`, `h^0(E(m)) = sum max(0, j_i + m + 1)`, so
//! `h^0(E(m)) - h^0(E(m-1))` counts the `j_i >= -m`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{BiLaurent, PolyMatrix};
use crate::cohomology::{h0, Window};
use crate::surface::SurfaceSpec;

use super::BundleError;

/// Non-increasing degrees `(j_1, ..., j_r)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SplittingType(pub Vec<i64>);

impl SplittingType {
    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Largest `|exponent|` among the entries of `t` and `t^-1`; every splitting
/// degree lies in `[-b, b]`.
fn exponent_bound(t: &PolyMatrix) -> Result<i64, BundleError> {
    let inv = t.inverse()?;
    let mut b = 0;
    for m in [t, &inv] {
        if let Some((lo, hi)) = m.z_degree_range() {
            b = b.max(lo.abs()).max(hi.abs());
        }
    }
    Ok(b)
}

/// A window large enough for [`splitting_type_p1`] on `t`.
pub fn splitting_window(t: &PolyMatrix) -> Result<Window, BundleError> {
    let reach = 3 * exponent_bound(t)? + 2;
    Ok(Window { min_z: -reach, max_z: reach, max_u: 0 })
}

fn h0_twisted(t: &PolyMatrix, m: i64, w: Window) -> Result<usize, BundleError> {
    let line = SurfaceSpec::undeformed(1)?;
    let twisted = t.map(|e| e * BiLaurent::mono(-m, 0));
    Ok(h0(&line, &twisted, Window { max_u: 0, ..w })?.dimension)
}

/// Splitting type of a `u`-free transition on the line, with `O(n) <-> z^-n`.
pub fn splitting_type_p1(t: &PolyMatrix, w: Window) -> Result<SplittingType, BundleError> {
    if !t.is_first_only() {
        return Err(BundleError::NotOnLine(t.to_string()));
    }
    if t.size() > 3 {
        return Err(BundleError::UnsupportedRank(t.size()));
    }
    let r = t.size();
    let b = exponent_bound(t)?;
    let degree = -t.det_degree().ok_or(crate::algebra::AlgebraError::NonUnitDeterminant)?;

    let range: Vec<i64> = (-b - 2..=b + 1).collect();
    let profile: Vec<(i64, usize)> =
        range.iter().map(|&m| h0_twisted(t, m, w).map(|h| (m, h))).collect::<Result<_, _>>()?;
    let bad = || BundleError::ProfileInconsistent { profile: profile.clone() };

    // delta[m] = #{ j_i >= -m }
    let delta: Vec<(i64, i64)> =
        profile.windows(2).map(|p| (p[1].0, p[1].1 as i64 - p[0].1 as i64)).collect();
    if delta.first().map(|d| d.1) != Some(0) || delta.last().map(|d| d.1) != Some(r as i64) {
        return Err(bad());
    }
    let mut degrees = Vec::new();
    let mut prev = 0;
    for &(m, d) in &delta {
        if d < prev {
            return Err(bad());
        }
        for _ in prev..d {
            degrees.push(-m);
        }
        prev = d;
    }
    let ty = SplittingType(degrees);
    let predicted = |m: i64| ty.0.iter().map(|j| (j + m + 1).max(0) as usize).sum::<usize>();
    if ty.degree() != degree || profile.iter().any(|&(m, h)| h != predicted(m)) {
        return Err(bad());
    }
    Ok(ty)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[&str]]) -> PolyMatrix {
        PolyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| s.parse().unwrap()).collect()).collect())
            .unwrap()
    }

    fn ty(t: &PolyMatrix) -> Vec<i64> {
        splitting_type_p1(t, splitting_window(t).unwrap()).unwrap().0
    }

    #[test]
    fn diagonal_and_extension() {
        assert_eq!(ty(&m(&[&["z^2", "0"], &["0", "z^-1"]])), [1, -2]);
        assert_eq!(ty(&m(&[&["z", "1"], &["0", "z^-1"]])), [0, 0]);
        assert_eq!(ty(&m(&[&["z^2", "0"], &["0", "z^-2"]])), [2, -2]);
        assert_eq!(ty(&m(&[&["1"]])), [0]);
    }

    #[test]
    fn too_small_window_is_detected() {
        let t = m(&[&["z^-3", "0"], &["0", "z^3"]]);
        let tiny = Window { min_z: -1, max_z: 1, max_u: 0 };
        assert!(matches!(splitting_type_p1(&t, tiny), Err(BundleError::ProfileInconsistent { .. })));
    }

    #[test]
    fn rejects_u_dependence() {
        let t = m(&[&["z", "u"], &["0", "z^-1"]]);
        assert!(matches!(splitting_type_p1(&t, Window::new(-5, 5, 0).unwrap()), Err(BundleError::NotOnLine(_))));
    }
}
