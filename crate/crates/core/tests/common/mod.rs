//! Independent oracles. Nothing here goes through the cohomology engine.
#![allow(dead_code)]

use localsurf::algebra::{int, BiLaurent, Monomial, PolyMatrix, Rational};
use num_traits::{One, Zero};

/// Rank by plain Gaussian elimination.
pub fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// `h^0` of the bundle on the line with transition `t` twisted by `O(m)`,
/// counting sections whose `U` entries have degree at most `deg`.
///
/// A section is a vector of polynomials `s_c(z)`; it is global when every
/// entry of `z^-m T s` has no positive power of `z`.
pub fn brute_h0_line(t: &PolyMatrix, m: i64, deg: i64) -> usize {
    let r = t.size();
    let unknowns: Vec<(usize, i64)> = (0..r).flat_map(|c| (0..=deg).map(move |d| (c, d))).collect();
    let mut constraints: std::collections::BTreeMap<(usize, i64), Vec<Rational>> = Default::default();
    for (j, &(c, d)) in unknowns.iter().enumerate() {
        for row in 0..r {
            for (mono, coeff) in t.get(row, c).terms() {
                let e = mono.z - m + d;
                if e > 0 {
                    constraints.entry((row, e)).or_insert_with(|| vec![Rational::zero(); unknowns.len()])[j] +=
                        coeff;
                }
            }
        }
    }
    unknowns.len() - rank(constraints.into_values().collect())
}

/// Splitting type from the brute-force `h^0` profile, scanning `m` over
/// `[-b, b]` where all degrees lie in `[-b, b]`.
pub fn brute_splitting(t: &PolyMatrix, b: i64) -> Vec<i64> {
    let deg = 4 * b + 4;
    let h = |m: i64| brute_h0_line(t, m, deg) as i64;
    let mut out = Vec::new();
    let mut prev = 0;
    for m in -b - 1..=b + 1 {
        let d = h(m) - h(m - 1);
        for _ in prev..d {
            out.push(-m);
        }
        prev = d;
    }
    out
}

/// Splitting type of `[[z^a, z^e], [0, z^b]]` with `O(n) <-> z^-n`.
pub fn triangular_closed_form(a: i64, e: i64, b: i64) -> Vec<i64> {
    let mut v = if e >= a || e <= b { vec![-a, -b] } else { vec![-e, e - a - b] };
    v.sort_unstable_by(|x, y| y.cmp(x));
    v
}

/// For undeformed `Z_k` and `O(-n)`, `z^l u^i` with `l < 0` is a coboundary
/// exactly when it equals `z^-n xi^a v^b = z^(kb - a - n) u^b` for some `a >= 0`.
pub fn undeformed_h1_monomials(k: i64, n: i64, min_z: i64, max_u: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for i in 0..=max_u {
        for l in min_z..0 {
            if l > k * i as i64 - n {
                out.push(Monomial::new(l, i));
            }
        }
    }
    out.sort();
    out
}

/// Evaluates a `U`-chart function at a point with `z != 0`.
pub fn eval(p: &BiLaurent, z: &Rational, u: &Rational) -> Rational {
    p.eval(z, u)
}

/// `(xi, v)` at the point `(z, u)` of `Z_k(tau)`, computed numerically.
pub fn glue_point(k: i64, tau: &[Rational], z: &Rational, u: &Rational) -> (Rational, Rational) {
    let mut v = num_traits::pow(z.clone(), k as usize) * u;
    for (i, t) in tau.iter().enumerate() {
        v += t * num_traits::pow(z.clone(), i + 1);
    }
    (z.recip(), v)
}

/// Evaluates a `V`-chart function at `(xi, v)`.
pub fn eval_v(p: &BiLaurent, xi: &Rational, v: &Rational) -> Rational {
    let mut acc = Rational::zero();
    for (m, c) in p.terms() {
        let x = if m.z >= 0 {
            num_traits::pow(xi.clone(), m.z as usize)
        } else {
            num_traits::pow(xi.recip(), (-m.z) as usize)
        };
        acc += c * x * num_traits::pow(v.clone(), m.u as usize);
    }
    acc
}

pub fn sample_points() -> Vec<(Rational, Rational)> {
    let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
    vec![(int(2), int(3)), (q(-1, 2), q(5, 7)), (q(3, 4), int(-2)), (int(-3), Rational::one())]
}
