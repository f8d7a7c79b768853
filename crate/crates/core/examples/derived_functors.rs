//! Ext and Tor through either argument, with the degrees each computation can vouch for.

use dualcheck::algebra::{simple_modules, ModuleRep};
use dualcheck::complex::BoundedComplex;
use dualcheck::derived::{ext, tor, Strategy};
use dualcheck::linalg::Field;
use dualcheck::resolution::ResolutionWindow;
use dualcheck::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w = ResolutionWindow::new(5)?;
    let a = samples::dual_numbers(Field::Rationals);
    let s = &simple_modules(&a)?[0];
    let left = BoundedComplex::from_module(s, 0);
    let right = BoundedComplex::from_module(&s.flip_side(), 0);

    for n in 0..=6 {
        let first = ext(&left, &left, n, w, Strategy::ResolveFirst);
        let second = ext(&left, &left, n, w, Strategy::ResolveSecond);
        println!("Ext^{n}(k, k): {:?} / {:?}", first.ok(), second.ok());
    }
    for n in 0..=3 {
        let d = tor(&right, &left, n, w, Strategy::ResolveSecond)?;
        println!("Tor_{n}(k, k) = {d}");
    }

    // outside the window the computation refuses instead of guessing
    match ext(&left, &left, 40, w, Strategy::ResolveSecond) {
        Err(e) => println!("degree 40: {e}"),
        Ok(d) => println!("degree 40: {d}"),
    }

    let reg = ModuleRep::regular(a.clone(), dualcheck::algebra::Side::Left);
    let free = ext(&left, &BoundedComplex::from_module(&reg, 0), 1, w, Strategy::ResolveSecond)?;
    println!("Ext^1(k, A) = {free}");
    Ok(())
}
