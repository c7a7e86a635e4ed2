//! The truncated two-term Čech complex of a bundle.
//!
//! A cochain is a vector of functions on `U ∩ V` written in the `U` frame.
//! Coboundaries are spanned by `U`-holomorphic data and by `-T^-1 * f_V` for
//! `V`-holomorphic `f_V`, so the class of `sigma` is unchanged by
//! `sigma -> sigma + f_U - T^-1 * f_V`.

use crate::algebra::{BiLaurent, Chart, Echelon, Monomial, PolyMatrix, RationalMatrix, SparseVec};
use crate::surface::SurfaceSpec;

use super::{CohomologyError, VectorCocycle, Window};

/// A generator of the coboundary space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    /// `z^a u^b e_c` on `U`.
    U { component: usize, monomial: Monomial },
    /// `xi^a v^b e_c` on `V`; the monomial stores `(a, b)`.
    V { component: usize, monomial: Monomial },
}

/// Image of one generator in the `U` frame.
#[derive(Clone, Debug)]
pub struct Column {
    pub generator: Generator,
    pub image: Vec<BiLaurent>,
    /// Some term lies outside the window.
    pub truncated: bool,
    /// Every negative-`z` term lies inside the window, so the column is an
    /// exact coboundary modulo `U`-holomorphic data.
    pub exact: bool,
}

/// Dense coboundary matrix with its column labels.
#[derive(Clone, Debug)]
pub struct CoboundaryMatrix {
    pub matrix: RationalMatrix,
    pub columns: Vec<Generator>,
    pub truncated: Vec<bool>,
}

struct VBase {
    b: u32,
    component: usize,
    image: Vec<BiLaurent>,
    /// `z` range of the terms with `u <= max_u`.
    in_range: Option<(i64, i64)>,
    min_z: i64,
    max_z: i64,
    /// Smallest `z` among terms with `u > max_u`.
    min_z_high_u: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct CechComplex {
    surface: SurfaceSpec,
    transition: PolyMatrix,
    inverse: PolyMatrix,
    window: Window,
}

impl CechComplex {
    pub fn new(surface: &SurfaceSpec, transition: &PolyMatrix, window: Window) -> Result<Self, CohomologyError> {
        let inverse = transition.inverse().map_err(|_| CohomologyError::NonUnitDeterminant)?;
        Ok(CechComplex {
            surface: surface.clone(),
            transition: transition.map(|e| e.clone().untagged()),
            inverse: inverse.map(|e| e.clone().untagged()),
            window,
        })
    }

    pub fn surface(&self) -> &SurfaceSpec {
        &self.surface
    }

    pub fn transition(&self) -> &PolyMatrix {
        &self.transition
    }

    pub fn inverse(&self) -> &PolyMatrix {
        &self.inverse
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn rank(&self) -> usize {
        self.transition.size()
    }

    /// Number of negative-`z` window coordinates, the only ones that survive
    /// modulo `U`-holomorphic data.
    pub fn negative_dim(&self) -> usize {
        self.window.negative_size() * self.rank()
    }

    fn negative_index(&self, component: usize, m: Monomial) -> Option<usize> {
        self.window.negative_position(m).map(|p| component * self.window.negative_size() + p)
    }

    fn negative_coordinate(&self, idx: usize) -> (usize, Monomial) {
        let per = self.window.negative_size();
        (idx / per, self.window.negative_monomial(idx % per))
    }

    /// Restriction of a `U`-frame vector to the negative window coordinates.
    pub fn restrict(&self, v: &[BiLaurent]) -> SparseVec {
        let mut out = SparseVec::new();
        for (c, f) in v.iter().enumerate() {
            for (m, coeff) in f.terms() {
                if let Some(i) = self.negative_index(c, *m) {
                    out.insert(i, coeff.clone());
                }
            }
        }
        out
    }

    /// Inverse of [`CechComplex::restrict`].
    pub fn expand(&self, v: &SparseVec) -> VectorCocycle {
        let mut out = vec![BiLaurent::zero(); self.rank()];
        for (&i, c) in v {
            let (comp, m) = self.negative_coordinate(i);
            out[comp].add_term(m, c.clone());
        }
        VectorCocycle(out)
    }

    /// `U`-generators with all their images.
    pub fn u_columns(&self) -> impl Iterator<Item = Column> + '_ {
        (0..self.rank()).flat_map(move |c| {
            self.window.monomials().filter(|m| m.z >= 0).map(move |m| {
                let mut image = vec![BiLaurent::zero(); self.rank()];
                image[c] = BiLaurent::mono(m.z, m.u);
                Column { generator: Generator::U { component: c, monomial: m }, image, truncated: false, exact: true }
            })
        })
    }

    fn b_cap(&self) -> u32 {
        let w = &self.window;
        if self.surface.is_deformed() {
            w.max_u + (w.max_z - w.min_z) as u32 + 1
        } else {
            w.max_u
        }
    }

    fn v_bases(&self) -> Vec<VBase> {
        let rank = self.rank();
        let max_u = self.window.max_u;
        let v_image = BiLaurent::mono(self.surface.k() as i64, 1) + self.surface.tau_poly();
        let mut power = BiLaurent::one();
        let mut out = Vec::new();
        for b in 0..=self.b_cap() {
            for c in 0..rank {
                let image: Vec<BiLaurent> =
                    (0..rank).map(|r| -(self.inverse.get(r, c) * &power)).collect();
                let terms = || image.iter().flat_map(BiLaurent::terms).map(|(m, _)| *m);
                let low: Vec<i64> = terms().filter(|m| m.u <= max_u).map(|m| m.z).collect();
                let in_range = low.iter().min().zip(low.iter().max()).map(|(a, b)| (*a, *b));
                out.push(VBase {
                    b,
                    component: c,
                    min_z: terms().map(|m| m.z).min().unwrap_or(0),
                    max_z: terms().map(|m| m.z).max().unwrap_or(0),
                    min_z_high_u: terms().filter(|m| m.u > max_u).map(|m| m.z).min(),
                    in_range,
                    image,
                });
            }
            power = &power * &v_image;
        }
        out
    }

    /// `V`-generators whose image meets the window, ordered by
    /// `(b, component, a)`.
    pub fn v_columns(&self) -> impl Iterator<Item = Column> + '_ {
        let w = self.window;
        self.v_bases().into_iter().flat_map(move |base| {
            let (first, last) = match base.in_range {
                Some((lo, hi)) => ((lo - w.max_z).max(0), hi - w.min_z),
                None => (0, -1),
            };
            (first..=last).map(move |a| {
                let image: Vec<BiLaurent> = base.image.iter().map(|f| f.shift(-a, 0)).collect();
                let truncated = base.min_z - a < w.min_z
                    || base.max_z - a > w.max_z
                    || base.min_z_high_u.is_some();
                let exact = base.min_z - a >= w.min_z && base.min_z_high_u.is_none_or(|z| z - a >= 0);
                Column {
                    generator: Generator::V {
                        component: base.component,
                        monomial: Monomial::new(a, base.b),
                    },
                    image,
                    truncated,
                    exact,
                }
            })
        })
    }

    /// Full coboundary matrix: rows are window coordinates ordered by
    /// `(component, z, u)`, columns are `U`- then `V`-generators.
    pub fn coboundary_matrix(&self) -> Result<CoboundaryMatrix, CohomologyError> {
        let size = self.window.size();
        let mut cols: Vec<Column> = self.u_columns().collect();
        let before = cols.len();
        cols.extend(self.v_columns().filter(|c| {
            c.image.iter().any(|f| f.terms().any(|(m, _)| self.window.contains(*m)))
        }));
        if cols.len() == before {
            return Err(CohomologyError::WindowTooSmall);
        }
        let mut matrix = RationalMatrix::zeros(size * self.rank(), cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (c, f) in col.image.iter().enumerate() {
                for (m, coeff) in f.terms() {
                    if let Some(p) = self.window.position(*m) {
                        matrix[(c * size + p, j)] = coeff.clone();
                    }
                }
            }
        }
        Ok(CoboundaryMatrix {
            matrix,
            columns: cols.iter().map(|c| c.generator).collect(),
            truncated: cols.iter().map(|c| c.truncated).collect(),
        })
    }

    /// Echelon basis of the coboundary span on the negative coordinates.
    pub fn echelon(&self) -> Result<Echelon, CohomologyError> {
        let mut ech = Echelon::new(self.negative_dim(), false);
        let mut met = false;
        for (i, col) in self.v_columns().enumerate() {
            let v = self.restrict(&col.image);
            if v.is_empty() {
                continue;
            }
            met = true;
            ech.insert(v, i);
            if ech.is_full() {
                break;
            }
        }
        if !met && self.negative_dim() > 0 {
            return Err(CohomologyError::WindowTooSmall);
        }
        Ok(ech)
    }

    /// Checks that `sigma` is a `U`-frame cochain of the right rank inside the
    /// window.
    pub fn check_cochain(&self, sigma: &VectorCocycle) -> Result<(), CohomologyError> {
        if sigma.0.len() != self.rank() {
            return Err(CohomologyError::DimensionMismatch { expected: self.rank(), got: sigma.0.len() });
        }
        for f in &sigma.0 {
            if f.chart() == Some(Chart::V) {
                return Err(CohomologyError::WrongChart);
            }
            if let Some((m, _)) = f.terms().find(|(m, _)| !self.window.contains(**m)) {
                return Err(CohomologyError::SupportOutsideWindow(BiLaurent::mono(m.z, m.u).to_string()));
            }
        }
        Ok(())
    }
}
