//! The class axioms on finite samples, and iterating the minimal class generator.

use dualcheck::algebra::{indecomposable_injectives, indecomposable_projectives};
use dualcheck::complex::BoundedComplex;
use dualcheck::linalg::Field;
use dualcheck::resolution::ResolutionWindow;
use dualcheck::samples;
use dualcheck::validate::{check_class_axioms, minimal_class_generator_step, PseudoDualizingCandidate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ResolutionWindow::default();
    let (t, _) = samples::tilting_a2(Field::Rationals)?;
    let (a, b) = (t.left_algebra().clone(), t.right_algebra().clone());
    let c = PseudoDualizingCandidate::tight(BoundedComplex::concentrated(t, 0));

    let e = indecomposable_injectives(&a)?;
    let f = indecomposable_projectives(&b)?;
    let report = check_class_axioms(&e, &f, &c, 0, 0, w)?;
    for ax in &report.axioms {
        println!("{}: {}", ax.name, serde_json::to_string(&ax.verdict)?);
    }

    let (mut e, mut f) = (e, f);
    for step in 1..=3 {
        let g = minimal_class_generator_step(&e, &f, &c, 1, w)?;
        println!(
            "step {step}: emitted F dims {:?}, E dims {:?}, stabilized {}",
            g.new_f.iter().map(|m| m.dim()).collect::<Vec<_>>(),
            g.new_e.iter().map(|m| m.dim()).collect::<Vec<_>>(),
            g.stabilized
        );
        if g.stabilized {
            break;
        }
        f.extend(g.new_f);
        e.extend(g.new_e);
    }
    Ok(())
}
