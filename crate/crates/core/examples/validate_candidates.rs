//! Homothety, dualizing and dedualizing checks on a few bimodules, including a failure.

use dualcheck::complex::BoundedComplex;
use dualcheck::linalg::Field;
use dualcheck::resolution::ResolutionWindow;
use dualcheck::samples;
use dualcheck::validate::{check_dedualizing, check_dualizing, check_homothety, PseudoDualizingCandidate, ValidationReport};

fn show(name: &str, r: &ValidationReport) {
    println!("{name} / {}: {:?}", r.check, r.verdict);
    for ax in &r.axioms {
        println!("    {}: {}", ax.name, serde_json::to_string(&ax.verdict).unwrap());
    }
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ResolutionWindow::default();
    let field = Field::Rationals;
    let d = samples::dual_numbers(field);

    let regular = PseudoDualizingCandidate::regular(samples::upper_triangular(field));
    show("upper triangular A", &check_homothety(&regular, w)?);

    let dual = PseudoDualizingCandidate::tight(BoundedComplex::concentrated(samples::dual_bimodule(&d), 0));
    show("D(k[x]/(x^2))", &check_dualizing(&dual, w)?);

    let simple = PseudoDualizingCandidate::tight(BoundedComplex::concentrated(samples::simple_bimodule(&d)?, 0));
    show("k over k[x]/(x^2)", &check_dedualizing(&simple, w)?);
    Ok(())
}
