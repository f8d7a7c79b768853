//! Path algebras, indecomposable projectives and injectives, Hom spaces and endomorphism rings.

use dualcheck::algebra::{
    hom_basis, indecomposable_injectives, indecomposable_projectives, simple_modules, Algebra, Arrow, ModuleRep,
};
use dualcheck::linalg::Field;
use std::sync::Arc;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let field = Field::Rationals;
    // 1 -a-> 2 -b-> 3 with ba = 0
    let arrows = [
        Arrow { source: 0, target: 1, label: "a".into() },
        Arrow { source: 1, target: 2, label: "b".into() },
    ];
    let a = Arc::new(Algebra::path_algebra(field, 3, &arrows, &[vec![(field.one(), vec![0, 1])]])?);
    println!("algebra of dimension {} with basis {:?}", a.dim(), a.labels());

    let ps = indecomposable_projectives(&a)?;
    let is = indecomposable_injectives(&a)?;
    let ss = simple_modules(&a)?;
    println!("projective dims {:?}", ps.iter().map(ModuleRep::dim).collect::<Vec<_>>());
    println!("injective dims  {:?}", is.iter().map(ModuleRep::dim).collect::<Vec<_>>());

    for (i, p) in ps.iter().enumerate() {
        let row: Vec<usize> = ps.iter().map(|q| hom_basis(p, q).map(|h| h.len()).unwrap_or(0)).collect();
        println!("dim Hom(P{i}, P_j) = {row:?}");
    }
    for s in &ss {
        println!("simple of dim {}: projective {}, injective {}", s.dim(), s.is_projective()?, s.is_injective()?);
    }

    let t = ModuleRep::direct_sum(&[&ps[0], &ss[0]])?;
    let (end, _) = t.endomorphism_algebra()?;
    println!("End(P0 + S0) has dimension {}", end.dim());
    Ok(())
}
