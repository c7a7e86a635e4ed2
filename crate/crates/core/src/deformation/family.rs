use num_traits::{One, Zero};

use crate::algebra::{BiLaurent, ParamPoly, Rational, RationalMatrix, Substitution};
use crate::cohomology::{normal_form, VectorCocycle};
use crate::surface::SurfaceSpec;

use super::{check_k, tangent_h1, DeformationError};

/// The family over `B = C^(k-1)` whose fibre over `t` is `Z_k(sum t_i z^i)`.
///
/// `transition` acts on the coordinate vector `(z, u, t_1, ..., t_(k-1))` and
/// returns `(xi, v, t_1, ..., t_(k-1))`:
/// `[[z^-2, 0, 0], [z^-1 tau(t), z^k, 0], [0, 0, I]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    k: u32,
    names: Vec<String>,
    transition: Vec<Vec<ParamPoly>>,
}

impl FamilySpec {
    pub fn new(k: i64) -> Result<Self, DeformationError> {
        let k = check_k(k, 2)?;
        let p = k as usize - 1;
        let names = ParamPoly::default_names(p);
        let zero = || ParamPoly::zero(&names);
        let lift = |f: BiLaurent| ParamPoly::from_bilaurent(&names, f);
        let mut tau = zero();
        for i in 0..p {
            tau = tau.add(&ParamPoly::param(&names, i).mul_bilaurent(&BiLaurent::mono(i as i64 + 1, 0))?)?;
        }
        let mut transition = vec![vec![zero(); p + 2]; p + 2];
        transition[0][0] = lift(BiLaurent::mono(-2, 0));
        transition[1][0] = tau.mul_bilaurent(&BiLaurent::mono(-1, 0))?;
        transition[1][1] = lift(BiLaurent::mono(k as i64, 0));
        for i in 0..p {
            transition[i + 2][i + 2] = lift(BiLaurent::one());
        }
        Ok(FamilySpec { k, names, transition })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn base_dim(&self) -> usize {
        self.k as usize - 1
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn transition(&self) -> &[Vec<ParamPoly>] {
        &self.transition
    }

    /// `(xi, v)` as functions of `(z, u, t)`.
    pub fn glue(&self) -> Result<(ParamPoly, ParamPoly), DeformationError> {
        let mut coords = vec![
            ParamPoly::from_bilaurent(&self.names, BiLaurent::mono(1, 0)),
            ParamPoly::from_bilaurent(&self.names, BiLaurent::mono(0, 1)),
        ];
        coords.extend((0..self.base_dim()).map(|i| ParamPoly::param(&self.names, i)));
        let row = |r: usize| -> Result<ParamPoly, DeformationError> {
            let mut acc = ParamPoly::zero(&self.names);
            for (a, x) in self.transition[r].iter().zip(&coords) {
                acc = acc.add(&a.mul(x)?)?;
            }
            Ok(acc)
        };
        Ok((row(0)?, row(1)?))
    }

    /// Gluing of the fibre over `t`.
    pub fn fiber_glue(&self, t: &[Rational]) -> Result<Substitution, DeformationError> {
        let (xi, v) = self.glue()?;
        Ok(Substitution::new(xi.eval_params(t)?, v.eval_params(t)?))
    }

    /// The fibre over `t` as a surface, after checking its gluing has the
    /// standard shape.
    pub fn fiber(&self, t: &[Rational]) -> Result<SurfaceSpec, DeformationError> {
        let g = self.fiber_glue(t)?;
        if g.first != BiLaurent::mono(-1, 0) {
            return Err(DeformationError::VerificationFailed(format!("fibre has xi = {}", g.first)));
        }
        let tau = &g.second - &BiLaurent::mono(self.k as i64, 1);
        Ok(SurfaceSpec::from_tau_poly(self.k as i64, &tau)?)
    }
}

/// Kodaira–Spencer images of `d/dt_i` and their coordinates in the basis of
/// `H^1(Z_k, T)` returned by [`tangent_h1`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KodairaSpencer {
    pub images: Vec<VectorCocycle>,
    pub basis: Vec<VectorCocycle>,
    /// Row `i` holds the coordinates of `images[i]`.
    pub matrix: RationalMatrix,
}

impl KodairaSpencer {
    pub fn is_identity(&self) -> bool {
        self.matrix == RationalMatrix::identity(self.images.len())
    }
}

pub fn family_and_ks(k: i64) -> Result<(FamilySpec, KodairaSpencer), DeformationError> {
    let fam = FamilySpec::new(k)?;
    let s = SurfaceSpec::undeformed(k)?;
    let jac = s.tangent_transition()?;
    let jinv = jac.inverse()?;
    let h1 = tangent_h1(k)?;
    let (xi, v) = fam.glue()?;
    let origin = vec![Rational::zero(); fam.base_dim()];

    let mut images = Vec::new();
    let mut matrix = RationalMatrix::zeros(fam.base_dim(), h1.basis.len());
    for i in 0..fam.base_dim() {
        let d = [xi.d_param(i).eval_params(&origin)?, v.d_param(i).eval_params(&origin)?];
        let image = VectorCocycle(jinv.apply(&d)?);
        let nf = normal_form(&image, &s, &jac, h1.window_used)?;
        for (j, b) in h1.basis.iter().enumerate() {
            matrix[(i, j)] = coordinate(&nf, b);
        }
        images.push(image);
    }
    Ok((fam, KodairaSpencer { images, basis: h1.basis, matrix }))
}

/// Coefficient of a single-monomial basis vector in a normal form.
fn coordinate(nf: &VectorCocycle, basis: &VectorCocycle) -> Rational {
    for (f, b) in nf.0.iter().zip(&basis.0) {
        if let Some((m, c)) = b.as_monomial() {
            debug_assert!(c.is_one());
            return f.coeff(m);
        }
    }
    Rational::zero()
}

/// Builds `Z_k(tau)` by adding the cocycle `(0, z^-k tau)` to the coordinates
/// `(z, u)` and applying the coordinate change of `Z_k`.
pub fn deform_by_cocycle(k: i64, tau: &BiLaurent) -> Result<SurfaceSpec, DeformationError> {
    check_k(k, 1)?;
    if tau.terms().any(|(m, _)| m.u != 0 || m.z < 1 || m.z >= k) {
        return Err(DeformationError::BadCocycleSupport(tau.to_string()));
    }
    let tau = tau.clone().untagged();
    let shifted = [BiLaurent::mono(1, 0), BiLaurent::mono(0, 1) + tau.shift(-k, 0)];
    let xi = BiLaurent::mono(-2, 0) * &shifted[0];
    let v = BiLaurent::mono(k, 0) * &shifted[1];

    let s = SurfaceSpec::from_tau_poly(k, &tau)?;
    let g = s.glue();
    if g.first.untagged() != xi || g.second.untagged() != v {
        return Err(DeformationError::VerificationFailed(format!("cocycle gives ({xi}, {v})")));
    }
    Ok(s)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    #[test]
    fn fibres() {
        let fam = FamilySpec::new(3).unwrap();
        assert_eq!(fam.fiber(&[int(0), int(0)]).unwrap(), SurfaceSpec::undeformed(3).unwrap());
        assert_eq!(fam.fiber(&[int(2), int(-1)]).unwrap(), SurfaceSpec::new(3, vec![int(2), int(-1)]).unwrap());
        assert!(FamilySpec::new(1).is_err());
    }

    #[test]
    fn ks_is_identity() {
        let (_, ks) = family_and_ks(4).unwrap();
        assert!(ks.is_identity());
        assert_eq!(ks.images[1].to_string(), "(0, z^-2)");
    }

    #[test]
    fn cocycle_recipe() {
        let s = deform_by_cocycle(2, &"z".parse().unwrap()).unwrap();
        assert_eq!(s.glue().second.untagged().to_string(), "z + z^2*u");
        assert_eq!(deform_by_cocycle(3, &BiLaurent::zero()).unwrap(), SurfaceSpec::undeformed(3).unwrap());
        let s = deform_by_cocycle(4, &"z + 2*z^3".parse().unwrap()).unwrap();
        assert_eq!(s.tau(), &[int(1), int(0), int(2)]);
        assert!(matches!(deform_by_cocycle(3, &"z^3".parse().unwrap()), Err(DeformationError::BadCocycleSupport(_))));
    }
}
