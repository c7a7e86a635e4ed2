mod common;

use localsurf::algebra::{frac, int, BiLaurent, Chart, Monomial, RationalMatrix, Substitution};
use localsurf::SurfaceSpec;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = localsurf::Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| frac(n, d))
}

fn poly() -> impl Strategy<Value = BiLaurent> {
    prop::collection::vec(((-4i64..=4, 0u32..=3), rational()), 0..6)
        .prop_map(|ts| BiLaurent::from_terms(ts.into_iter().map(|((z, u), c)| (Monomial::new(z, u), c))))
}

fn u_free_poly() -> impl Strategy<Value = BiLaurent> {
    prop::collection::vec((-3i64..=3, rational()), 0..4)
        .prop_map(|ts| BiLaurent::from_terms(ts.into_iter().map(|(z, c)| (Monomial::new(z, 0), c))))
}

fn surface() -> impl Strategy<Value = SurfaceSpec> {
    (1i64..=4).prop_flat_map(|k| {
        prop::collection::vec(-2i64..=2, (k - 1) as usize)
            .prop_map(move |t| SurfaceSpec::new(k, t.into_iter().map(int).collect()).unwrap())
    })
}

fn matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => Just(frac(0, 1)), 2 => rational()], c), r)
            .prop_map(RationalMatrix::from_rows)
    })
}

proptest! {
    #[test]
    fn ring_axioms(p in poly(), q in poly(), r in poly()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn products_agree_with_evaluation(p in poly(), q in poly()) {
        for (z, u) in common::sample_points() {
            prop_assert_eq!((&p * &q).eval(&z, &u), p.eval(&z, &u) * q.eval(&z, &u));
        }
    }

    #[test]
    fn print_parse_round_trip(p in poly()) {
        let back: BiLaurent = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn substitution_composes(p in u_free_poly(), a in -3i64..=3, b in -2i64..=2, c in 1i64..=3, q in u_free_poly()) {
        // z -> c z^a, u -> q, then z -> z^b.
        let inner = Substitution::new(BiLaurent::term(int(c), a, 0), q);
        let outer = Substitution::new(BiLaurent::mono(b, 0), BiLaurent::mono(0, 1));
        let lhs = p.substitute(&inner).unwrap().substitute(&outer).unwrap();
        let rhs = p.substitute(&inner.then(&outer).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chart_round_trip(s in surface(), p in poly()) {
        let v = s.to_v_coords(&p).unwrap();
        prop_assert_eq!(v.chart(), Some(Chart::V));
        prop_assert_eq!(s.to_u_coords(&v).unwrap().untagged(), p.clone());
    }

    #[test]
    fn chart_change_matches_points(s in surface(), p in poly()) {
        let v = s.to_v_coords(&p).unwrap();
        let tau: Vec<_> = s.tau().to_vec();
        for (z, u) in common::sample_points() {
            let (xi, vv) = common::glue_point(s.k() as i64, &tau, &z, &u);
            prop_assert_eq!(common::eval_v(&v, &xi, &vv), p.eval(&z, &u));
        }
    }

    #[test]
    fn holomorphy_is_multiplicative(s in surface(), a in (-2i64..=6, 0u32..=3), b in (-2i64..=6, 0u32..=3)) {
        let p = BiLaurent::mono(a.0, a.1);
        let q = BiLaurent::mono(b.0, b.1);
        if s.is_v_holomorphic(&p).unwrap() && s.is_v_holomorphic(&q).unwrap() {
            prop_assert!(s.is_v_holomorphic(&(&p * &q)).unwrap());
        }
    }

    #[test]
    fn rref_is_idempotent(m in matrix()) {
        let r = m.rref();
        prop_assert_eq!(&r.reduced.rref().reduced, &r.reduced);
        prop_assert!(r.pivots.windows(2).all(|w| w[0] < w[1]));
        prop_assert_eq!(r.rank, m.transpose().rank());
        let rows: Vec<Vec<_>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        prop_assert_eq!(r.rank, common::rank(rows));
    }

    #[test]
    fn kernel_is_annihilated(m in matrix()) {
        let ker = m.kernel_basis();
        prop_assert_eq!(ker.len(), m.cols() - m.rank());
        for v in ker {
            let col = RationalMatrix::from_fn(v.len(), 1, |i, _| v[i].clone());
            let img = m.mul(&col);
            prop_assert!((0..img.rows()).all(|i| num_traits::Zero::is_zero(&img[(i, 0)])));
        }
    }
}

#[test]
fn undeformed_holomorphy_criterion() {
    for k in 1..=4 {
        let s = SurfaceSpec::undeformed(k).unwrap();
        for m in -3..=12 {
            for n in 0..=3u32 {
                let hol = s.is_v_holomorphic(&BiLaurent::mono(m, n)).unwrap();
                assert_eq!(hol, m <= n as i64 * k, "k={k} z^{m} u^{n}");
            }
        }
    }
}
