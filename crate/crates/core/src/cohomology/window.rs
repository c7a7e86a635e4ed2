use serde::{Deserialize, Serialize};

use crate::algebra::Monomial;

use super::CohomologyError;

/// Finite box of monomials `z^l u^i` with `min_z <= l <= max_z`, `0 <= i <= max_u`
/// used to truncate the infinite cochain spaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Window {
    pub min_z: i64,
    pub max_z: i64,
    pub max_u: u32,
}

impl Window {
    pub fn new(min_z: i64, max_z: i64, max_u: u32) -> Result<Self, CohomologyError> {
        if min_z > 0 || max_z < 0 {
            return Err(CohomologyError::InvalidWindow { min_z, max_z, max_u });
        }
        Ok(Window { min_z, max_z, max_u })
    }

    /// Default window for `H^1(Z_k(tau), O(-n))`: `z` from `-(n+k+3)` to `n+k+3`
    /// and `u` up to `floor((n-2)/k) + 3`.
    pub fn for_line_bundle(k: u32, n: i64) -> Self {
        let k = k as i64;
        let reach = n.max(0) + k + 3;
        let m = if n >= 2 { (n - 2).div_euclid(k) } else { 0 };
        Window { min_z: -reach, max_z: reach, max_u: (m + 3) as u32 }
    }

    /// Default window for a bundle whose transition entries (and those of its
    /// inverse) have `z`-exponents of absolute value at most `spread`.
    pub fn for_bundle(k: u32, spread: i64) -> Self {
        let reach = spread + k as i64 + 3;
        Window { min_z: -reach, max_z: reach, max_u: 3 }
    }

    /// Default window for a bundle with transition `t` on `Z_k`, wide enough
    /// for the exponents of `t` and `t^-1`.
    pub fn for_transition(k: u32, t: &crate::algebra::PolyMatrix) -> Self {
        let mut spread = 0;
        let mut max_u = 0;
        let inv = t.inverse().ok();
        for m in std::iter::once(t).chain(inv.as_ref()) {
            if let Some((lo, hi)) = m.z_degree_range() {
                spread = spread.max(lo.abs()).max(hi.abs());
            }
            max_u = max_u.max(m.entries().filter_map(crate::algebra::BiLaurent::max_u).max().unwrap_or(0));
        }
        let mut w = Self::for_bundle(k, spread);
        w.max_u += max_u;
        w
    }

    pub fn contains(&self, m: Monomial) -> bool {
        m.z >= self.min_z && m.z <= self.max_z && m.u <= self.max_u
    }

    pub fn width(&self) -> usize {
        (self.max_z - self.min_z + 1) as usize
    }

    pub fn size(&self) -> usize {
        self.width() * (self.max_u as usize + 1)
    }

    /// Monomials in canonical order (`z` major, `u` minor).
    pub fn monomials(&self) -> impl Iterator<Item = Monomial> + '_ {
        (self.min_z..=self.max_z).flat_map(move |z| (0..=self.max_u).map(move |u| Monomial::new(z, u)))
    }

    /// Position of `m` in [`Window::monomials`].
    pub fn position(&self, m: Monomial) -> Option<usize> {
        self.contains(m)
            .then(|| (m.z - self.min_z) as usize * (self.max_u as usize + 1) + m.u as usize)
    }

    /// Number of monomials with negative `z`-exponent.
    pub fn negative_size(&self) -> usize {
        (-self.min_z) as usize * (self.max_u as usize + 1)
    }

    /// Position of `m` among the negative-`z` monomials of the window.
    pub fn negative_position(&self, m: Monomial) -> Option<usize> {
        (m.z < 0 && self.contains(m))
            .then(|| (m.z - self.min_z) as usize * (self.max_u as usize + 1) + m.u as usize)
    }

    pub fn negative_monomial(&self, idx: usize) -> Monomial {
        let row = self.max_u as usize + 1;
        Monomial::new(self.min_z + (idx / row) as i64, (idx % row) as u32)
    }

    /// Widens by `dz` on both sides in `z` and `du` in `u`.
    pub fn grow(&self, dz: i64, du: u32) -> Window {
        Window { min_z: self.min_z - dz, max_z: self.max_z + dz, max_u: self.max_u + du }
    }
}

impl std::fmt::Display for Window {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{},{},{}", self.min_z, self.max_z, self.max_u)
    }
}

impl std::str::FromStr for Window {
    type Err = CohomologyError;

    /// `minZ,maxZ,maxU`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CohomologyError::WindowSyntax(s.to_string());
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(bad());
        }
        Window::new(
            parts[0].parse().map_err(|_| bad())?,
            parts[1].parse().map_err(|_| bad())?,
            parts[2].parse().map_err(|_| bad())?,
        )
    }
}
