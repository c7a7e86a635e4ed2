//! Closed forms for `H^1(Z_k, O(-n))` on the undeformed surface.

use crate::algebra::Monomial;

/// `m = floor((n - 2) / k)`, the largest `u`-degree in the normal form.
pub fn m_row(k: u32, n: i64) -> i64 {
    (n - 2).div_euclid(k as i64)
}

/// `dim H^1(Z_k, O(-n)) = (m + 1)(2n - km - 2) / 2` for `n >= 2`, else `0`.
pub fn h1_dimension_formula(k: u32, n: i64) -> i64 {
    if n < 2 {
        return 0;
    }
    let m = m_row(k, n);
    (m + 1) * (2 * n - k as i64 * m - 2) / 2
}

/// Normal-form monomials `z^l u^i` with `0 <= i <= m` and
/// `ik - n + 1 <= l <= -1`, in canonical order.
pub fn standard_basis(k: u32, n: i64) -> Vec<Monomial> {
    if n < 2 {
        return Vec::new();
    }
    let k = k as i64;
    let mut out: Vec<Monomial> = (0..=m_row(k as u32, n))
        .flat_map(|i| (i * k - n + 1..=-1).map(move |l| Monomial::new(l, i as u32)))
        .collect();
    out.sort();
    out
}
