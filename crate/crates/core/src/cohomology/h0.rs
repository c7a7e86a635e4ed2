use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{BiLaurent, Monomial, PolyMatrix, Rational, RationalMatrix};
use crate::surface::{LineBundleSpec, SurfaceSpec};

use super::{CohomologyError, CohomologyResult, VectorCocycle, Window};

/// Global sections supported in `w`: `U`-holomorphic `s_U` with `T * s_U`
/// holomorphic on `V`.
pub fn h0(s: &SurfaceSpec, t: &PolyMatrix, w: Window) -> Result<CohomologyResult, CohomologyError> {
    t.inverse().map_err(|_| CohomologyError::NonUnitDeterminant)?;
    let rank = t.size();
    let gens: Vec<(usize, Monomial)> =
        (0..rank).flat_map(|c| w.monomials().filter(|m| m.z >= 0).map(move |m| (c, m))).collect();

    // polar part on V of the image of each generator
    let mut rows: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut entries: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(gens.len());
    for &(c, m) in &gens {
        let mut col = Vec::new();
        for r in 0..rank {
            let image = t.get(r, c).clone().untagged() * BiLaurent::mono(m.z, m.u);
            for (vm, coeff) in s.to_v_coords(&image)?.terms() {
                if vm.z < 0 {
                    let next = rows.len();
                    col.push((*rows.entry((r, *vm)).or_insert(next), coeff.clone()));
                }
            }
        }
        entries.push(col);
    }
    let mut matrix = RationalMatrix::zeros(rows.len(), gens.len());
    for (j, col) in entries.into_iter().enumerate() {
        for (i, c) in col {
            matrix[(i, j)] = c;
        }
    }

    let basis: Vec<VectorCocycle> = matrix
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut out = vec![BiLaurent::zero(); rank];
            for (x, &(c, m)) in v.iter().zip(&gens) {
                if !x.is_zero() {
                    out[c].add_term(m, x.clone());
                }
            }
            VectorCocycle(out)
        })
        .collect();
    Ok(CohomologyResult { dimension: basis.len(), basis, m_row: None, window_used: w, stabilized: false })
}

/// Sections of `O(n)` supported in `w`.
pub fn h0_basis(s: &SurfaceSpec, n: i64, w: Window) -> Result<CohomologyResult, CohomologyError> {
    h0(s, &LineBundleSpec::new(n).transition(), w)
}
