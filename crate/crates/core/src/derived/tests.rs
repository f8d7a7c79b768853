use std::sync::Arc;

use super::*;
use crate::algebra::{indecomposable_injectives, indecomposable_projectives, simple_modules, Algebra, BimoduleRep, ModuleRep};
use crate::linalg::{ExactMatrix, Field};
use crate::samples;

const Q: Field = Field::Rationals;

fn w(n: usize) -> ResolutionWindow {
    ResolutionWindow::new(n).unwrap()
}

fn regular(a: &Arc<Algebra>) -> BoundedComplex {
    BoundedComplex::concentrated(BimoduleRep::regular(a.clone()), 0)
}

fn module(m: &ModuleRep) -> BoundedComplex {
    BoundedComplex::from_module(m, 0)
}

fn trusted_dims(r: &DerivedResult) -> Vec<(i32, usize)> {
    r.complex.homology_dims().into_iter().filter(|(n, _)| r.trust.contains(*n)).collect()
}

const BOTH: [Strategy; 2] = [Strategy::ResolveFirst, Strategy::ResolveSecond];

#[test]
fn ext_between_simples_of_a2() {
    let a = samples::a2(Q);
    let s = simple_modules(&a).unwrap();
    for st in BOTH {
        assert_eq!(ext(&module(&s[0]), &module(&s[1]), 1, w(3), st).unwrap(), 1);
        assert_eq!(ext(&module(&s[0]), &module(&s[1]), 0, w(3), st).unwrap(), 0);
        assert_eq!(ext(&module(&s[1]), &module(&s[0]), 1, w(3), st).unwrap(), 0);
        assert_eq!(ext(&module(&s[0]), &module(&s[0]), 0, w(3), st).unwrap(), 1);
    }
}

#[test]
fn ext_and_tor_over_dual_numbers() {
    let a = samples::dual_numbers(Q);
    let s = simple_modules(&a).unwrap()[0].clone();
    let s_right = simple_modules(&a.opposite_arc()).unwrap()[0].flip_side();
    for st in BOTH {
        let r = rhom(&module(&s), &module(&s), w(4), st).unwrap();
        assert!(r.trust.hi >= 2);
        for n in 0..=r.trust.hi.min(4) {
            assert_eq!(r.homology_dim(n).unwrap(), 1, "Ext^{n} via {st:?}");
        }
        assert!(matches!(r.homology_dim(100), Err(ComplexError::WindowExceeded { degree: 100, .. })));
        for k in 0..=2 {
            assert_eq!(tor(&module(&s_right), &module(&s), k, w(4), st).unwrap(), 1, "Tor_{k} via {st:?}");
        }
    }
}

#[test]
fn regular_bimodule_is_identity() {
    for a in [samples::a2(Q), samples::dual_numbers(Q), samples::upper_triangular(Q)] {
        let ctx = DerivedContext::new(regular(&a));
        for m in simple_modules(&a).unwrap() {
            for st in BOTH {
                let r = ctx.rhom(&module(&m), w(3), st).unwrap();
                assert_eq!(trusted_dims(&r), vec![(0, m.dim())]);
                assert_eq!(ctx.ext(&module(&m), 1, w(3), st).unwrap(), 0);
                let t = ctx.derived_tensor(&module(&m), w(3), st).unwrap();
                assert_eq!(trusted_dims(&t), vec![(0, m.dim())]);
            }
            let c = ctx.counit(&module(&m), 0, w(3)).unwrap();
            assert!(c.is_quasi_isomorphism_in_range() && c.covers_all_degrees);
            assert!(c.comparison.is_quasi_isomorphism() || !c.comparison.target().is_zero());
            let u = ctx.unit(&module(&m), 0, w(3)).unwrap();
            assert!(u.is_quasi_isomorphism_in_range() && u.covers_all_degrees);
        }
    }
}

#[test]
fn hom_into_injectives_vanishes_above_top() {
    let a = samples::a2(Q);
    let ctx = DerivedContext::new(regular(&a).shift(-1));
    for j in indecomposable_injectives(&a).unwrap() {
        let r = ctx.rhom(&module(&j), w(3), Strategy::ResolveSecond).unwrap();
        assert!(r.complex.homology_dims().iter().all(|&(n, _)| n <= 1));
    }
}

#[test]
fn counit_and_unit_for_dual_of_dual_numbers() {
    let a = samples::dual_numbers(Q);
    let l = BoundedComplex::concentrated(BimoduleRep::regular(a.clone()).dual(), 0);
    let ctx = DerivedContext::new(l);
    let s = simple_modules(&a).unwrap()[0].clone();
    let c = ctx.counit(&module(&s), 0, w(3)).unwrap();
    assert!(c.is_quasi_isomorphism_in_range(), "{:?}", c.failing_degree);
    let u = ctx.unit(&module(&s), 0, w(3)).unwrap();
    assert!(u.is_quasi_isomorphism_in_range(), "{:?}", u.failing_degree);
    assert!(u.covers_all_degrees);
}

#[test]
fn dg_adjunction_on_regular_and_duals() {
    for a in [samples::a2(Q), samples::dual_numbers(Q)] {
        let l = regular(&a);
        for p in indecomposable_projectives(&a).unwrap() {
            for j in indecomposable_injectives(&a).unwrap() {
                let res = dg_adjunction_check(&l, &module(&p), &module(&j)).unwrap();
                assert!(res.holds(), "{res:?}");
            }
        }
        let p = indecomposable_projectives(&a).unwrap()[0].clone();
        let pp = BoundedComplex::from_modules(-1, &[p.clone(), p.clone()], vec![ExactMatrix::zeros(Q, p.dim(), p.dim())]).unwrap();
        let j = indecomposable_injectives(&a).unwrap()[0].clone();
        let jj = BoundedComplex::from_modules(0, &[j.clone(), j.clone()], vec![ExactMatrix::identity(Q, j.dim())]).unwrap();
        let res = dg_adjunction_check(&l.shift(1), &pp, &jj).unwrap();
        assert!(res.holds(), "{res:?}");
    }
}
