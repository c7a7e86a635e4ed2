mod common;

use localsurf::algebra::{int, BiLaurent};
use localsurf::bundle::{
    charge_report, extension_to_transition, moduli_dimension, raw_parameter_count, restrict_to_zero_section,
    split_certificate, splitting_type_p1, splitting_window, BundleError, ExtensionClass, ModuliDimension,
};
use localsurf::cohomology::{standard_basis, Window};
use localsurf::surface::split_transition;
use localsurf::{PolyMatrix, SurfaceSpec};

fn triangular(a: i64, q: BiLaurent, b: i64) -> PolyMatrix {
    PolyMatrix::from_rows(vec![vec![BiLaurent::mono(a, 0), q], vec![BiLaurent::zero(), BiLaurent::mono(b, 0)]]).unwrap()
}

#[test]
fn triangular_matrices_match_brute_force() {
    for a in -3..=3 {
        for b in -3..=3 {
            for e in -6..=6 {
                let t = triangular(a, BiLaurent::term(int(2), e, 0), b);
                let bound = [a, b, e, e - a - b].iter().map(|x: &i64| x.abs()).max().unwrap();
                let got = splitting_type_p1(&t, splitting_window(&t).unwrap()).unwrap();
                assert_eq!(got.0, common::brute_splitting(&t, bound), "a={a} e={e} b={b}");
                assert_eq!(got.0, common::triangular_closed_form(a, e, b), "a={a} e={e} b={b}");
                assert_eq!(got.degree(), -(a + b));
            }
        }
    }
}

#[test]
fn diagonal_and_mixed_cases() {
    let t = triangular(1, BiLaurent::one(), -1);
    let ty = splitting_type_p1(&t, splitting_window(&t).unwrap()).unwrap();
    assert_eq!(ty.to_string(), "(0, 0)");

    let d = split_transition(&[-2, 3]);
    assert_eq!(splitting_type_p1(&d, splitting_window(&d).unwrap()).unwrap().0, vec![3, -2]);

    let q: BiLaurent = "z^-1 + 3*z".parse().unwrap();
    let t = triangular(2, q, -2);
    let ty = splitting_type_p1(&t, splitting_window(&t).unwrap()).unwrap();
    assert_eq!(ty.0, common::brute_splitting(&t, 5));
}

#[test]
fn rank_three_profile() {
    let mut t = split_transition(&[1, 0, -1]);
    t.set(0, 2, BiLaurent::one());
    let ty = splitting_type_p1(&t, splitting_window(&t).unwrap()).unwrap();
    assert_eq!(ty.0, common::brute_splitting(&t, 3));
    assert_eq!(ty.degree(), 0);
}

#[test]
fn narrow_window_is_detected() {
    let t = triangular(3, BiLaurent::mono(1, 0), -3);
    let err = splitting_type_p1(&t, Window::new(-1, 1, 0).unwrap()).unwrap_err();
    assert!(matches!(err, BundleError::ProfileInconsistent { .. }));
}

#[test]
fn normal_forms_restrict_to_split_type() {
    for k in 1..=3i64 {
        let s = SurfaceSpec::undeformed(k).unwrap();
        for j in 1..=4u32 {
            for m in standard_basis(s.k(), 2 * j as i64).into_iter().filter(|m| m.u >= 1) {
                let e = ExtensionClass::new(j, BiLaurent::mono(m.z, m.u));
                assert!(e.vanishes_on_zero_section());
                let t = extension_to_transition(&e);
                assert_eq!(t.det(), BiLaurent::one());
                let r = restrict_to_zero_section(&t, &s).unwrap();
                let ty = splitting_type_p1(&r, splitting_window(&r).unwrap()).unwrap();
                assert_eq!(ty.0, vec![j as i64, -(j as i64)]);
            }
        }
    }
    let d = SurfaceSpec::new(2, vec![int(1)]).unwrap();
    let t = extension_to_transition(&ExtensionClass::new(1, BiLaurent::mono(-1, 0)));
    assert_eq!(restrict_to_zero_section(&t, &d), Err(BundleError::NoZeroSection));
}

#[test]
fn extension_data_round_trip() {
    let e = ExtensionClass::from_p(2, &"z^-1*u + 3".parse().unwrap());
    assert_eq!(e.sigma.to_string(), "z^-3*u + 3*z^-2");
    assert_eq!(ExtensionClass::from_p(2, &e.p()), e);
}

#[test]
fn certificates_split_deformed_extensions() {
    for (k, tau) in [(2, vec![int(1)]), (3, vec![int(1), int(0)]), (3, vec![int(-1), int(2)])] {
        let s = SurfaceSpec::new(k, tau).unwrap();
        for j in 1..=3u32 {
            for m in standard_basis(s.k(), 2 * j as i64) {
                let e = ExtensionClass::new(j, BiLaurent::term(int(3), m.z, m.u));
                let t = extension_to_transition(&e);
                let c = split_certificate(&s, &e, Window::for_line_bundle(s.k(), 2 * j as i64)).unwrap();
                assert!(c.exact && c.residual.is_zero());
                assert!(c.verify(&s, &t).unwrap());
                assert!(c.a_u.entries().all(|x| x.terms().all(|(m, _)| m.z >= 0)));
                assert!(c.a_v.entries().all(|x| x.terms().all(|(m, _)| m.z >= 0)));
            }
        }
    }
}

#[test]
fn certificate_on_undeformed_surface_fails() {
    let s = SurfaceSpec::undeformed(2).unwrap();
    let e = ExtensionClass::new(2, "z^-1*u".parse().unwrap());
    let err = split_certificate(&s, &e, Window::for_line_bundle(2, 4)).unwrap_err();
    assert!(matches!(err, BundleError::Cohomology(localsurf::cohomology::CohomologyError::NotTrivial(_))));
}

#[test]
fn zero_class_has_identity_certificate() {
    let s = SurfaceSpec::new(2, vec![int(1)]).unwrap();
    let e = ExtensionClass::new(1, BiLaurent::zero());
    let c = split_certificate(&s, &e, Window::for_line_bundle(2, 2)).unwrap();
    assert_eq!(c.a_u.map(|x| x.clone().untagged()), PolyMatrix::identity(2));
    assert_eq!(c.a_v.map(|x| x.clone().untagged()), PolyMatrix::identity(2));
}

#[test]
fn charge_components() {
    let z1 = SurfaceSpec::undeformed(1).unwrap();
    let t = split_transition(&[-2, 2]);
    let r = charge_report(&z1, &t, 2, Window::for_transition(1, &t)).unwrap();
    assert_eq!(r.r1_dim, 1);
    assert!(r.stabilized && r.splitting_ok);

    let d = SurfaceSpec::new(2, vec![int(1)]).unwrap();
    let r = charge_report(&d, &t, 1, Window::for_transition(2, &t)).unwrap();
    assert_eq!(r.r1_dim, 0);
    assert!(!r.splitting_ok);
    let id = PolyMatrix::identity(2);
    assert_eq!(charge_report(&d, &id, 0, Window::for_transition(2, &id)).unwrap().r1_dim, 0);
}

#[test]
fn moduli_lookup() {
    assert_eq!(moduli_dimension(3, 2, false).unwrap(), ModuliDimension::Dimension(2));
    assert_eq!(moduli_dimension(2, 2, false).unwrap(), ModuliDimension::Dimension(0));
    assert_eq!(moduli_dimension(2, 2, true).unwrap(), ModuliDimension::DiscreteZeroDimensional);
    assert!(matches!(moduli_dimension(1, 2, false), Err(BundleError::NotApplicable(-2))));
    // z^-3 u, z^-2 u, z^-1 u and z^-1 u^2
    assert_eq!(raw_parameter_count(3, 2).unwrap(), 4);
}
