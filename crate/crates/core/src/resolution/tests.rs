use super::*;
use crate::algebra::{indecomposable_injectives, indecomposable_projectives, is_isomorphic, simple_modules};
use crate::samples;

const Q: Field = Field::Rationals;

fn window(n: usize) -> ResolutionWindow {
    ResolutionWindow::new(n).unwrap()
}

fn all_terms_projective(r: &Resolution) -> bool {
    r.terms.values().all(|p| p.is_projective().unwrap())
}

#[test]
fn projective_module_resolves_to_itself() {
    let p1 = indecomposable_projectives(&samples::a2(Q)).unwrap()[0].clone();
    let r = projective_resolution(&p1, window(3)).unwrap();
    assert!(r.is_finite());
    let c = r.complex();
    assert_eq!(c.support(), Some((0, 0)));
    assert!(r.augmentation().is_quasi_isomorphism());
}

#[test]
fn simple_top_of_a2_has_length_one() {
    let s1 = simple_modules(&samples::a2(Q)).unwrap()[0].clone();
    assert_eq!(s1.dim(), 1);
    let mut r = projective_resolution(&s1, window(4)).unwrap();
    assert!(r.is_finite());
    assert_eq!(r.length(4).unwrap(), Some(1));
    let c = r.complex();
    assert_eq!((c.dim(-1), c.dim(0)), (1, 2));
    assert!(all_terms_projective(&r));
    assert!(r.augmentation().is_quasi_isomorphism());
    assert_eq!(r.detect_periodicity(6).unwrap(), None);
}

#[test]
fn simple_over_dual_numbers_is_periodic() {
    let s = simple_modules(&samples::dual_numbers(Q)).unwrap()[0].clone();
    let mut r = projective_resolution(&s, window(3)).unwrap();
    assert!(!r.is_finite());
    let c = r.complex();
    assert_eq!(c.support(), Some((-3, 0)));
    assert!((-3..=0).all(|n| c.dim(n) == 2));
    assert!(r.augmentation().cone_acyclic_in(r.bottom(), 2));
    assert_eq!(r.trusted_from(), -2);
    for j in 1..=3 {
        assert!(is_isomorphic(&r.syzygy(j).unwrap().unwrap(), &s).unwrap());
    }
    let cert = r.detect_periodicity(4).unwrap().unwrap();
    assert_eq!((cert.offset, cert.period), (0, 1));
    assert!(cert.witness.is_invertible());
}

#[test]
fn injective_coresolutions() {
    let a = samples::dual_numbers(Q);
    let s = simple_modules(&a).unwrap()[0].clone();
    let cr = injective_coresolution(&s, window(3)).unwrap();
    let j = cr.complex();
    assert_eq!(j.support(), Some((0, 3)));
    assert!(j.terms().all(|(_, t)| t.left_module().is_injective().unwrap()));
    assert!(cr.coaugmentation().cone_acyclic_in(-2, cr.top() - 1));
    assert_eq!(cr.trusted_until(), 2);

    let s2 = simple_modules(&samples::a2(Q)).unwrap()[1].clone();
    let mut cr = injective_coresolution(&s2, window(3)).unwrap();
    assert!(cr.is_finite());
    assert!(cr.length(3).unwrap().unwrap() <= 1);
    assert!(cr.coaugmentation().is_quasi_isomorphism());

    let inj = indecomposable_injectives(&samples::a2(Q)).unwrap();
    for i in inj {
        let cr = injective_coresolution(&i, window(2)).unwrap();
        assert_eq!(cr.complex().support(), Some((0, 0)));
    }
}

#[test]
fn coresolution_dimension_against_injectivity() {
    let a = samples::dual_numbers(Q);
    let s = simple_modules(&a).unwrap()[0].clone();
    let inj = |m: &ModuleRep| Ok(m.is_injective()?);
    assert_eq!(coresolution_dimension(&s, inj, 3).unwrap(), CoresolutionDimension::ExceedsBound);
    let reg = ModuleRep::regular(a, Side::Left);
    assert_eq!(coresolution_dimension(&reg, inj, 3).unwrap(), CoresolutionDimension::Exactly(0));
    let s2 = simple_modules(&samples::a2(Q)).unwrap()[1].clone();
    assert_eq!(coresolution_dimension(&s2, inj, 3).unwrap(), CoresolutionDimension::Exactly(1));
}

#[test]
fn complexes_resolve_through_cones() {
    let a = samples::dual_numbers(Q);
    let reg = ModuleRep::regular(a.clone(), Side::Left);
    let x = a.right_mult(&a.basis_element(1));
    let c = BoundedComplex::from_modules(0, &[reg.clone(), reg], vec![x]).unwrap();
    let r = Resolution::with_window(&c, Structure::Left, window(3)).unwrap();
    let aug = r.augmentation();
    assert!(aug.cone_acyclic_in(r.bottom(), 3));
    assert_eq!(r.complex().homology_dims().iter().filter(|(n, _)| *n >= r.trusted_from()).count(), 2);
}

#[test]
fn bimodule_resolutions() {
    let a = samples::a2(Q);
    let reg = BoundedComplex::concentrated(BimoduleRep::regular(a.clone()), 0);
    let mut r = Resolution::with_window(&reg, Structure::Bimodule, window(3)).unwrap();
    assert_eq!(r.length(3).unwrap(), Some(1));
    assert!(r.augmentation().is_quasi_isomorphism());
    assert!(r.complex().terms().all(|(_, t)| t.env_module().is_projective().unwrap()));

    let d = samples::dual_numbers(Q);
    let reg = BoundedComplex::concentrated(BimoduleRep::regular(d), 0);
    let r = Resolution::with_window(&reg, Structure::Bimodule, window(2)).unwrap();
    assert!(!r.is_finite());
    assert!(r.augmentation().cone_acyclic_in(r.bottom(), 1));
}

#[test]
fn right_module_resolution() {
    let a = samples::a2(Q);
    let simples_right: Vec<ModuleRep> = simple_modules(&a.opposite_arc()).unwrap().iter().map(ModuleRep::flip_side).collect();
    for s in simples_right {
        assert_eq!(s.side(), Side::Right);
        let r = projective_resolution(&s, window(3)).unwrap();
        assert!(r.is_finite());
        let c = r.complex();
        assert!(c.terms().all(|(_, t)| t.right_module().is_projective().unwrap()));
        assert!(r.augmentation().is_quasi_isomorphism());
    }
}

#[test]
fn resolution_of_direct_sum() {
    let a = samples::dual_numbers(Q);
    let s = simple_modules(&a).unwrap()[0].clone();
    let reg = ModuleRep::regular(a, Side::Left);
    let sum = ModuleRep::direct_sum(&[&s, &reg]).unwrap();
    let (rs, rr, rsum) = (
        projective_resolution(&s, window(3)).unwrap().complex(),
        projective_resolution(&reg, window(3)).unwrap().complex(),
        projective_resolution(&sum, window(3)).unwrap().complex(),
    );
    for n in -3..=0 {
        assert_eq!(rsum.dim(n), rs.dim(n) + rr.dim(n));
    }
}
