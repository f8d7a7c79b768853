//! Projective resolutions and injective coresolutions with termination and periodicity.

use dualcheck::algebra::simple_modules;
use dualcheck::resolution::{injective_coresolution, projective_resolution, ResolutionWindow};
use dualcheck::linalg::Field;
use dualcheck::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ResolutionWindow::new(6)?;
    for (name, a) in samples::all(Field::Rationals) {
        for (i, s) in simple_modules(&a)?.iter().enumerate() {
            let mut p = projective_resolution(s, w)?;
            let len = p.length(w.depth())?;
            let period = p.detect_periodicity(w.depth())?;
            let mut j = injective_coresolution(s, w)?;
            let co = j.length(w.depth())?;
            let dims: Vec<usize> = p.complex().terms().map(|(_, t)| t.dim()).collect();
            match (len, period) {
                (Some(n), _) => println!("{name}: S{i} has projective dimension {n}, terms {dims:?}"),
                (None, Some(c)) => println!("{name}: S{i} has syzygies repeating with period {} after {} steps", c.period, c.offset),
                (None, None) => println!("{name}: S{i} undecided within {} steps", w.depth()),
            }
            if let Some(n) = co {
                println!("    injective dimension {n}");
            }
        }
    }
    Ok(())
}
