use std::collections::BTreeMap;

use super::*;
use crate::algebra::{hom_basis, indecomposable_projectives, ModuleRep, Side};
use crate::linalg::Field;
use crate::samples;

const Q: Field = Field::Rationals;

fn a2_projectives() -> (ModuleRep, ModuleRep) {
    let ps = indecomposable_projectives(&samples::a2(Q)).unwrap();
    (ps[0].clone(), ps[1].clone())
}

#[test]
fn cone_of_identity_is_acyclic() {
    let (p1, _) = a2_projectives();
    let x = BoundedComplex::from_module(&p1, 0);
    let cone = ChainMap::identity(&x).cone();
    assert_eq!(cone.support(), Some((-1, 0)));
    assert!(cone.is_acyclic());
}

#[test]
fn cone_of_simple_inclusion_has_top_homology() {
    let (p1, p2) = a2_projectives();
    let f = hom_basis(&p2, &p1).unwrap();
    assert_eq!(f.len(), 1);
    let x = BoundedComplex::from_module(&p2, 0);
    let y = BoundedComplex::from_module(&p1, 0);
    let map = ChainMap::new(&x, &y, vec![(0, f[0].clone())]).unwrap();
    let cone = map.cone();
    assert_eq!(cone.homology_dims(), vec![(0, 1)]);
    assert!(!map.is_quasi_isomorphism());
}

#[test]
fn multiplication_by_x_on_dual_numbers() {
    let a = samples::dual_numbers(Q);
    let reg = ModuleRep::regular(a.clone(), Side::Left);
    let x = a.right_mult(&a.basis_element(1));
    let c = BoundedComplex::from_modules(0, &[reg.clone(), reg], vec![x]).unwrap();
    assert_eq!(c.homology_dims(), vec![(0, 1), (1, 1)]);
    assert_eq!(c.euler_characteristic(), 0);
    let h = c.homology(1);
    assert_eq!(h.module.dim(), 1);
}

#[test]
fn differentials_must_square_to_zero() {
    let a = samples::dual_numbers(Q);
    let reg = ModuleRep::regular(a.clone(), Side::Left);
    let x = a.right_mult(&a.basis_element(1));
    let one = ExactMatrix::identity(Q, 2);
    let err = BoundedComplex::from_modules(0, &[reg.clone(), reg.clone(), reg], vec![one.clone(), one]);
    assert!(matches!(err, Err(ComplexError::NotAComplex(0))));
    let ok = BoundedComplex::from_modules(0, &[ModuleRep::regular(a.clone(), Side::Left), ModuleRep::regular(a, Side::Left)], vec![x]);
    assert!(ok.is_ok());
}

#[test]
fn hom_from_regular_recovers_module() {
    let a = samples::a2(Q);
    let (p1, _) = a2_projectives();
    let reg = BoundedComplex::concentrated(BimoduleRep::regular(a.clone()), 0);
    let m = BoundedComplex::from_module(&p1, 0);
    let h = hom_complex(&reg, &m, Over::Left).unwrap();
    assert_eq!(h.complex.dim(0), p1.dim());
    assert!(crate::algebra::same_algebra(h.complex.left_algebra(), &a));
    let t = tensor_complex(&reg, &m).unwrap();
    assert_eq!(t.complex.dim(0), p1.dim());
}

#[test]
fn hom_complex_differential_squares_to_zero() {
    let a = samples::dual_numbers(Q);
    let reg = ModuleRep::regular(a.clone(), Side::Left);
    let x = a.right_mult(&a.basis_element(1));
    let c = BoundedComplex::from_modules(0, &[reg.clone(), reg.clone(), reg], vec![x.clone(), x]).unwrap();
    let h = hom_complex(&c, &c, Over::Left).unwrap();
    assert_eq!(h.complex.support(), Some((-2, 2)));
    for n in -2..2 {
        assert!(h.complex.diff(n + 1).mul(&h.complex.diff(n)).is_zero());
    }
    let from_homology: i64 = h
        .complex
        .homology_dims()
        .iter()
        .map(|&(n, d)| if n % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum();
    assert_eq!(h.complex.euler_characteristic(), from_homology);
}

#[test]
fn truncations_keep_homology() {
    let a = samples::dual_numbers(Q);
    let reg = ModuleRep::regular(a.clone(), Side::Left);
    let x = a.right_mult(&a.basis_element(1));
    let c = BoundedComplex::from_modules(0, &[reg.clone(), reg.clone(), reg], vec![x.clone(), x]).unwrap();
    assert_eq!(c.homology_dims(), vec![(0, 1), (2, 1)]);
    let (low, incl) = c.truncate_above(1);
    assert_eq!(low.homology_dims(), vec![(0, 1)]);
    assert!(incl.cone_acyclic_in(-5, 0));
    assert!(!incl.is_quasi_isomorphism());
    let (high, proj) = c.truncate_below(1);
    assert_eq!(high.homology_dims(), vec![(2, 1)]);
    assert!(proj.cone_acyclic_in(1, 5));
    assert_eq!(proj.homology_map(2).rank(), 1);
}

#[test]
fn shift_dual_and_opposite() {
    let (p1, _) = a2_projectives();
    let x = BoundedComplex::from_module(&p1, 0);
    assert_eq!(x.shift(2).support(), Some((-2, -2)));
    assert_eq!(x.shift(-1).shift(1), x);
    let d = x.dual();
    assert_eq!(d.support(), Some((0, 0)));
    assert_eq!(d.dual(), x);
    assert_eq!(x.opposite().opposite(), x);
}

#[test]
fn totalization_of_a_square() {
    let a = samples::a2(Q);
    let (p1, p2) = a2_projectives();
    let f = hom_basis(&p2, &p1).unwrap()[0].clone();
    let k = crate::algebra::ground_algebra(Q);
    let (b1, b2) = (BimoduleRep::from_module(&p1), BimoduleRep::from_module(&p2));
    let mut terms = BTreeMap::new();
    terms.insert((0, 0), b2.clone());
    terms.insert((1, 0), b1.clone());
    terms.insert((0, 1), b2);
    terms.insert((1, 1), b1);
    let mut dh = BTreeMap::new();
    dh.insert((0, 0), f.clone());
    dh.insert((0, 1), f);
    let mut dv = BTreeMap::new();
    dv.insert((0, 0), ExactMatrix::identity(Q, 1));
    dv.insert((1, 0), ExactMatrix::identity(Q, 2));
    let bi = Bicomplex::new(a, k, terms, dh, dv).unwrap();
    let tot = bi.totalize();
    assert_eq!(tot.support(), Some((0, 2)));
    assert!(tot.diff(1).mul(&tot.diff(0)).is_zero());
    assert!(tot.is_acyclic());
}
