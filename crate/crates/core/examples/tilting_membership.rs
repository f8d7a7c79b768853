//! Bass class membership and bounded round trips for the APR tilting module over kA2.

use dualcheck::complex::BoundedComplex;
use dualcheck::linalg::Field;
use dualcheck::resolution::ResolutionWindow;
use dualcheck::samples;
use dualcheck::validate::{bass_membership, bounded_equivalence_roundtrip, check_dedualizing, ClassKind, PseudoDualizingCandidate};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ResolutionWindow::default();
    let (t, _) = samples::tilting_a2(Field::Rationals)?;
    let a = t.left_algebra().clone();
    let c = PseudoDualizingCandidate::tight(BoundedComplex::concentrated(t, 0));
    println!("dedualizing: {}", check_dedualizing(&c, w)?.passed());

    for m in samples::indecomposables(&a)? {
        for l1 in [0, 1] {
            let r = bass_membership(&m, &c, l1, w)?;
            println!("module of dim {} with l1 = {l1}: member {}", m.dim(), r.is_member());
        }
    }

    let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
    for _ in 0..3 {
        let x = samples::random_complex(&a, 3, 3, &mut rng)?;
        let rt = bounded_equivalence_roundtrip(&c, &x, ClassKind::Bass, 1, w)?;
        let dims: Vec<usize> = x.terms().map(|(_, t)| t.dim()).collect();
        println!("round trip on complex {dims:?}: {}", serde_json::to_string(&rt.verdict)?);
    }
    Ok(())
}
