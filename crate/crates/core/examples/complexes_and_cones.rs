//! Bounded complexes, mapping cones, canonical truncations and Hom/tensor complexes.

use dualcheck::algebra::{hom_basis, indecomposable_projectives, BimoduleRep};
use dualcheck::complex::{hom_complex, tensor_complex, BoundedComplex, ChainMap, Over};
use dualcheck::linalg::Field;
use dualcheck::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let a = samples::a2(Field::Rationals);
    let ps = indecomposable_projectives(&a)?;
    let (big, small) = if ps[0].dim() > ps[1].dim() { (&ps[0], &ps[1]) } else { (&ps[1], &ps[0]) };

    // the inclusion of the simple projective into the other projective
    let f = hom_basis(small, big)?.remove(0);
    let c = BoundedComplex::from_modules(-1, &[small.clone(), big.clone()], vec![f.clone()])?;
    println!("complex {:?} with homology {:?}", c.support(), c.homology_dims());

    let map = ChainMap::new(&BoundedComplex::from_module(small, 0), &BoundedComplex::from_module(big, 0), vec![(0, f)])?;
    let cone = map.cone();
    println!("cone homology {:?}; quasi-isomorphism: {}", cone.homology_dims(), map.is_quasi_isomorphism());

    let (top, incl) = c.truncate_above(-1);
    println!("truncation above -1 keeps {:?}; inclusion is quasi-iso in [-2,-1]: {}", top.homology_dims(), incl.cone_acyclic_in(-2, -1));

    let reg = BoundedComplex::concentrated(BimoduleRep::regular(a.clone()), 0);
    let h = hom_complex(&reg, &c, Over::Left)?;
    let t = tensor_complex(&reg, &c)?;
    println!("Hom(A, C) homology {:?}", h.complex.homology_dims());
    println!("A ⊗ C homology {:?}", t.complex.homology_dims());
    Ok(())
}
