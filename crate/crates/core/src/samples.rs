//! Small algebras used throughout the tests and examples.

use std::sync::Arc;

use rand::Rng;

use crate::algebra::{
    hom_basis, indecomposable_injectives, indecomposable_projectives, is_isomorphic, simple_modules, Algebra, Arrow,
    BimoduleRep, ModuleRep, Side,
};
use crate::complex::BoundedComplex;
use crate::error::{AlgebraError, ComplexError};
use crate::linalg::{ExactMatrix, Field};

fn arrow(source: usize, target: usize, label: &str) -> Arrow {
    Arrow {
        source,
        target,
        label: label.into(),
    }
}

/// The ground field as a one-dimensional algebra.
pub fn ground(field: Field) -> Arc<Algebra> {
    Arc::new(Algebra::ground(field))
}

/// Path algebra of `1 -a-> 2`, basis `e1, e2, a`.
pub fn a2(field: Field) -> Arc<Algebra> {
    Arc::new(Algebra::path_algebra(field, 2, &[arrow(0, 1, "a")], &[]).expect("valid quiver"))
}

/// `k[x]/(x^2)`, basis `e1, x`.
pub fn dual_numbers(field: Field) -> Arc<Algebra> {
    Arc::new(Algebra::path_algebra(field, 1, &[arrow(0, 0, "x")], &[vec![(field.one(), vec![0, 0])]]).expect("valid quiver"))
}

/// Upper triangular 2x2 matrices, basis `E11, E12, E22`.
pub fn upper_triangular(field: Field) -> Arc<Algebra> {
    let idx = |i: usize, j: usize| match (i, j) {
        (0, 0) => Some(0),
        (0, 1) => Some(1),
        (1, 1) => Some(2),
        _ => None,
    };
    let units = [(0, 0), (0, 1), (1, 1)];
    let mut structure = vec![vec![vec![field.zero(); 3]; 3]; 3];
    for (a, &(i, j)) in units.iter().enumerate() {
        for (b, &(k, l)) in units.iter().enumerate() {
            if j == k {
                structure[a][b][idx(i, l).unwrap()] = field.one();
            }
        }
    }
    let labels = ["E11", "E12", "E22"].iter().map(|s| s.to_string()).collect();
    let unit = vec![field.one(), field.zero(), field.one()];
    Arc::new(Algebra::from_structure_constants(field, labels, &structure, &unit).expect("associative"))
}

/// The four sample algebras, in a fixed order.
pub fn all(field: Field) -> Vec<(&'static str, Arc<Algebra>)> {
    vec![
        ("k", ground(field)),
        ("kA2", a2(field)),
        ("k[x]/(x^2)", dual_numbers(field)),
        ("upper-triangular", upper_triangular(field)),
    ]
}

/// Simples, indecomposable projectives and injectives, one per isomorphism class. For the
/// sample algebras (all representation-finite with few indecomposables) this is every
/// indecomposable module.
pub fn indecomposables(a: &Arc<Algebra>) -> Result<Vec<ModuleRep>, AlgebraError> {
    let mut out: Vec<ModuleRep> = Vec::new();
    let candidates = simple_modules(a)?
        .into_iter()
        .chain(indecomposable_projectives(a)?)
        .chain(indecomposable_injectives(a)?);
    for m in candidates {
        let mut seen = false;
        for x in &out {
            if x.dim() == m.dim() && is_isomorphic(x, &m)? {
                seen = true;
                break;
            }
        }
        if !seen {
            out.push(m);
        }
    }
    out.sort_by_key(ModuleRep::dim);
    Ok(out)
}

/// Every nonzero direct sum of indecomposables of total dimension at most `max_dim`.
pub fn modules_up_to_dim(a: &Arc<Algebra>, max_dim: usize) -> Result<Vec<ModuleRep>, AlgebraError> {
    let ind = indecomposables(a)?;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(ind: &[ModuleRep], start: usize, left: usize, chosen: &mut Vec<usize>, out: &mut Vec<ModuleRep>) -> Result<(), AlgebraError> {
        if !chosen.is_empty() {
            let parts: Vec<&ModuleRep> = chosen.iter().map(|&i| &ind[i]).collect();
            out.push(ModuleRep::direct_sum(&parts)?);
        }
        for i in start..ind.len() {
            if ind[i].dim() <= left {
                chosen.push(i);
                rec(ind, i, left - ind[i].dim(), chosen, out)?;
                chosen.pop();
            }
        }
        Ok(())
    }
    rec(&ind, 0, max_dim, &mut chosen, &mut out)?;
    Ok(out)
}

fn random_invertible<R: Rng + ?Sized>(field: Field, n: usize, rng: &mut R) -> ExactMatrix {
    loop {
        let m = ExactMatrix::from_fn(field, n, n, |_, _| field.random(rng));
        if m.is_invertible() {
            return m;
        }
    }
}

/// A random direct sum of indecomposables (total dimension `1..=max_dim`) written in a
/// random basis.
pub fn random_module<R: Rng + ?Sized>(a: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> Result<ModuleRep, AlgebraError> {
    let ind: Vec<ModuleRep> = indecomposables(a)?.into_iter().filter(|m| m.dim() <= max_dim).collect();
    let mut parts = Vec::new();
    let mut left = max_dim;
    loop {
        let fits: Vec<&ModuleRep> = ind.iter().filter(|m| m.dim() <= left).collect();
        if fits.is_empty() || (!parts.is_empty() && rng.gen_bool(0.4)) {
            break;
        }
        let m = fits[rng.gen_range(0..fits.len())];
        left -= m.dim();
        parts.push(m);
    }
    let sum = ModuleRep::direct_sum(&parts)?;
    let p = random_invertible(a.field(), sum.dim(), rng);
    let pinv = p.inverse()?;
    let actions = sum.actions().iter().map(|x| pinv.mul(x).mul(&p)).collect();
    ModuleRep::new(a.clone(), Side::Left, actions)
}

/// A random element of the span of `maps` satisfying the linear constraint `f ∘ prev = 0`.
fn random_with_zero_composite<R: Rng + ?Sized>(maps: &[ExactMatrix], prev: Option<&ExactMatrix>, rows: usize, cols: usize, field: Field, rng: &mut R) -> ExactMatrix {
    let mut f = ExactMatrix::zeros(field, rows, cols);
    if maps.is_empty() {
        return f;
    }
    let coeffs = match prev {
        None => ExactMatrix::from_fn(field, maps.len(), 1, |_, _| field.random(rng)),
        Some(d) => {
            let cols: Vec<ExactMatrix> = maps.iter().map(|h| h.mul(d).vectorize()).collect();
            let refs: Vec<&ExactMatrix> = cols.iter().collect();
            let k = ExactMatrix::hstack(&refs, field, rows * d.cols()).kernel_basis();
            let v = ExactMatrix::from_fn(field, k.cols(), 1, |_, _| field.random(rng));
            k.mul(&v)
        }
    };
    for (i, h) in maps.iter().enumerate() {
        f = f.add(&h.scale(coeffs.get(i, 0)));
    }
    f
}

/// A random bounded complex of left modules with `1..=max_terms` terms, each of dimension
/// at most `max_dim`, starting in degree `-1`, `0` or `1`.
pub fn random_complex<R: Rng + ?Sized>(
    a: &Arc<Algebra>,
    max_terms: usize,
    max_dim: usize,
    rng: &mut R,
) -> Result<BoundedComplex, ComplexError> {
    let len = rng.gen_range(1..=max_terms);
    let terms = (0..len).map(|_| random_module(a, max_dim, rng)).collect::<Result<Vec<_>, _>>()?;
    random_differentials(terms, rng)
}

/// Like [`random_complex`], but each term is a direct sum of `1..=max_summands` modules
/// drawn from `pool` (for instance the indecomposable projectives).
pub fn random_complex_from<R: Rng + ?Sized>(
    pool: &[ModuleRep],
    max_terms: usize,
    max_summands: usize,
    rng: &mut R,
) -> Result<BoundedComplex, ComplexError> {
    assert!(!pool.is_empty(), "empty pool");
    let len = rng.gen_range(1..=max_terms);
    let mut terms = Vec::with_capacity(len);
    for _ in 0..len {
        let k = rng.gen_range(1..=max_summands);
        let parts: Vec<&ModuleRep> = (0..k).map(|_| &pool[rng.gen_range(0..pool.len())]).collect();
        terms.push(ModuleRep::direct_sum(&parts)?);
    }
    random_differentials(terms, rng)
}

fn random_differentials<R: Rng + ?Sized>(terms: Vec<ModuleRep>, rng: &mut R) -> Result<BoundedComplex, ComplexError> {
    let field = terms[0].field();
    let lo = rng.gen_range(-1..=1);
    let mut diffs: Vec<ExactMatrix> = Vec::new();
    for n in 0..terms.len().saturating_sub(1) {
        let maps = hom_basis(&terms[n], &terms[n + 1])?;
        let d = random_with_zero_composite(&maps, diffs.last(), terms[n + 1].dim(), terms[n].dim(), field, rng);
        diffs.push(d);
    }
    BoundedComplex::from_modules(lo, &terms, diffs)
}

/// A random short exact sequence `0 -> K -> M -> M/K -> 0` with `K` generated by one
/// random element of a random module `M`; returns `(K, M, M/K)`.
pub fn random_short_exact<R: Rng + ?Sized>(a: &Arc<Algebra>, max_dim: usize, rng: &mut R) -> Result<(ModuleRep, ModuleRep, ModuleRep), AlgebraError> {
    let field = a.field();
    let m = random_module(a, max_dim, rng)?;
    let v = ExactMatrix::from_fn(field, m.dim(), 1, |_, _| field.random(rng));
    let cols: Vec<ExactMatrix> = m.actions().iter().map(|x| x.mul(&v)).collect();
    let refs: Vec<&ExactMatrix> = cols.iter().collect();
    let span = ExactMatrix::hstack(&refs, field, m.dim());
    let (k, _) = m.submodule(&span)?;
    let (q, _) = m.quotient(&span)?;
    Ok((k, m, q))
}

/// The tilting module `T = P1 ⊕ S1` over `kA2` as an `A`-`B` bimodule with
/// `B = End_A(T)^op`, together with the endomorphism basis defining `B`.
pub fn tilting_a2(field: Field) -> Result<(BimoduleRep, Vec<ExactMatrix>), AlgebraError> {
    let a = a2(field);
    let p = indecomposable_projectives(&a)?;
    let s = simple_modules(&a)?;
    let p1 = p.iter().find(|m| m.dim() == 2).expect("P1 has dimension 2").clone();
    let s1 = s
        .iter()
        .find(|m| hom_basis(&p1, m).map(|h| !h.is_empty()).unwrap_or(false))
        .expect("P1 has simple top")
        .clone();
    let t = ModuleRep::direct_sum(&[&p1, &s1])?;
    let (end, homs) = t.endomorphism_algebra()?;
    let b = Arc::new(end.opposite());
    let bimod = BimoduleRep::new(a, b, t.actions().to_vec(), homs.clone())?;
    Ok((bimod, homs))
}

/// `A` as a bimodule over itself.
pub fn regular_bimodule(a: &Arc<Algebra>) -> BimoduleRep {
    BimoduleRep::regular(a.clone())
}

/// `D(A) = Hom_k(A, k)` with the transposed actions.
pub fn dual_bimodule(a: &Arc<Algebra>) -> BimoduleRep {
    BimoduleRep::regular(a.clone()).dual()
}

/// The one-dimensional bimodule on which the unit acts by 1 and the radical by 0.
/// Requires a local algebra whose first basis element is the unit.
pub fn simple_bimodule(a: &Arc<Algebra>) -> Result<BimoduleRep, AlgebraError> {
    let field = a.field();
    let acts: Vec<ExactMatrix> = (0..a.dim())
        .map(|i| {
            let v = if i == 0 { field.one() } else { field.zero() };
            ExactMatrix::from_fn(field, 1, 1, |_, _| v.clone())
        })
        .collect();
    BimoduleRep::new(a.clone(), a.clone(), acts.clone(), acts)
}
