//! The embedding of the family `M` into the Hirzebruch family
//! `z_0 x_p = z_1 (x_(p+1) + t_p x_0)`, `1 <= p <= k`, `t_k = 0`.
//!
//! On `U` the fibre coordinates are
//! `x_(n+1) = z^(k-n) u + sum_{i=n+1}^{k-1} t_i z^(i-n)` and on `V`
//! `y_(n+1) = xi^n v - sum_{i=1}^{n} t_i xi^(n-i)`, with `x_0 = y_0 = 1`.

use num_traits::Zero;

use crate::algebra::{BiLaurent, ParamPoly, Rational};

use super::{check_k, DeformationError};

/// A point of `P^1 x P^(k+1)` with coordinates written in one chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirzebruchCoords {
    pub base: [ParamPoly; 2],
    pub fiber: Vec<ParamPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirzebruchCheck {
    pub k: u32,
    pub u_chart: HirzebruchCoords,
    pub v_chart: HirzebruchCoords,
    /// Left minus right side of each defining relation, on `U` and on `V`.
    pub residual_u: Vec<ParamPoly>,
    pub residual_v: Vec<ParamPoly>,
    /// The two charts give the same projective point on the overlap.
    pub overlap_consistent: bool,
    /// At `t = 0` the `U` and `V` coordinates are those of the embedding of `Z_k`.
    pub reduces_to_embedding: bool,
}

impl HirzebruchCheck {
    pub fn residuals_vanish(&self) -> bool {
        self.residual_u.iter().chain(&self.residual_v).all(ParamPoly::is_zero)
    }

    pub fn holds(&self) -> bool {
        self.residuals_vanish() && self.overlap_consistent && self.reduces_to_embedding
    }
}

/// `z_0 x_p - z_1 (x_(p+1) + t_p x_0)` for `p = 1..=k`.
pub fn hirzebruch_relations(c: &HirzebruchCoords, t: &[ParamPoly]) -> Result<Vec<ParamPoly>, DeformationError> {
    let k = c.fiber.len() - 2;
    let [z0, z1] = &c.base;
    (1..=k)
        .map(|p| {
            let mut right = c.fiber[p + 1].clone();
            if p < k {
                right = right.add(&t[p - 1].mul(&c.fiber[0])?)?;
            }
            Ok(z0.mul(&c.fiber[p])?.sub(&z1.mul(&right)?)?)
        })
        .collect()
}

fn lift(names: &[String], f: BiLaurent) -> ParamPoly {
    ParamPoly::from_bilaurent(names, f)
}

fn u_chart(k: i64, names: &[String], t: &[ParamPoly]) -> Result<HirzebruchCoords, DeformationError> {
    let mut fiber = vec![lift(names, BiLaurent::one())];
    for n in 0..=k {
        let mut x = lift(names, BiLaurent::mono(k - n, 1));
        for i in n + 1..k {
            x = x.add(&t[i as usize - 1].mul_bilaurent(&BiLaurent::mono(i - n, 0))?)?;
        }
        fiber.push(x);
    }
    Ok(HirzebruchCoords { base: [lift(names, BiLaurent::one()), lift(names, BiLaurent::mono(1, 0))], fiber })
}

fn v_chart(k: i64, names: &[String], t: &[ParamPoly]) -> Result<HirzebruchCoords, DeformationError> {
    let mut fiber = vec![lift(names, BiLaurent::one())];
    for n in 0..=k {
        let mut y = lift(names, BiLaurent::mono(n, 1));
        for i in 1..=n.min(k - 1) {
            y = y.sub(&t[i as usize - 1].mul_bilaurent(&BiLaurent::mono(n - i, 0))?)?;
        }
        fiber.push(y);
    }
    Ok(HirzebruchCoords { base: [lift(names, BiLaurent::mono(1, 0)), lift(names, BiLaurent::one())], fiber })
}

pub fn hirzebruch_embed_check(k: i64) -> Result<HirzebruchCheck, DeformationError> {
    let ku = check_k(k, 2)?;
    let names = ParamPoly::default_names(ku as usize - 1);
    let t: Vec<ParamPoly> = (0..names.len()).map(|i| ParamPoly::param(&names, i)).collect();
    let uc = u_chart(k, &names, &t)?;
    let vc = v_chart(k, &names, &t)?;
    let residual_u = hirzebruch_relations(&uc, &t)?;
    let residual_v = hirzebruch_relations(&vc, &t)?;

    // rewrite the V chart through xi = z^-1, v = z^k u + sum t_i z^i
    let xi = lift(&names, BiLaurent::mono(-1, 0));
    let mut v = lift(&names, BiLaurent::mono(k, 1));
    for (i, ti) in t.iter().enumerate() {
        v = v.add(&ti.mul_bilaurent(&BiLaurent::mono(i as i64 + 1, 0))?)?;
    }
    let pulled: Vec<ParamPoly> = vc.fiber.iter().map(|y| y.substitute(&xi, &v)).collect::<Result<_, _>>()?;
    let base_v = [vc.base[0].substitute(&xi, &v)?, vc.base[1].substitute(&xi, &v)?];
    let cross = uc.base[0].mul(&base_v[1])?.sub(&uc.base[1].mul(&base_v[0])?)?;
    let overlap_consistent = cross.is_zero() && pulled == uc.fiber;

    let origin = vec![Rational::zero(); names.len()];
    let at_zero = |c: &HirzebruchCoords| -> Result<Vec<BiLaurent>, DeformationError> {
        Ok(c.fiber.iter().map(|x| x.eval_params(&origin)).collect::<Result<_, _>>()?)
    };
    let mut expect_u = vec![BiLaurent::one()];
    expect_u.extend((0..=k).map(|n| BiLaurent::mono(k - n, 1)));
    let mut expect_v = vec![BiLaurent::one()];
    expect_v.extend((0..=k).map(|n| BiLaurent::mono(n, 1)));
    let reduces_to_embedding = at_zero(&uc)? == expect_u && at_zero(&vc)? == expect_v;

    Ok(HirzebruchCheck {
        k: ku,
        u_chart: uc,
        v_chart: vc,
        residual_u,
        residual_v,
        overlap_consistent,
        reduces_to_embedding,
    })
}
