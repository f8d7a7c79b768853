use super::membership::{auslander_membership, bass_membership, ext_vanishing, tor_vanishing};
use super::{AxiomResult, Certificate, MembershipReport, PseudoDualizingCandidate, ValidationReport, Verdict};
use crate::algebra::{hom_basis, indecomposable_injectives, indecomposable_projectives, is_isomorphic, ModuleRep};
use crate::complex::{hom_complex, tensor_complex, BoundedComplex, Over};
use crate::error::{AlgebraError, ComplexError};
use crate::linalg::ExactMatrix;
use crate::resolution::{Coresolution, Resolution, ResolutionWindow, Structure};

/// Whether `m` is isomorphic to a direct sum of members of `list` (the empty sum included).
pub fn in_additive_closure(list: &[ModuleRep], m: &ModuleRep) -> Result<bool, AlgebraError> {
    if m.dim() == 0 {
        return Ok(true);
    }
    let parts: Vec<&ModuleRep> = list.iter().filter(|x| x.dim() > 0 && x.dim() <= m.dim()).collect();
    let mut chosen = Vec::new();
    search(&parts, 0, m.dim(), &mut chosen, m)
}

fn search<'a>(
    parts: &[&'a ModuleRep],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<&'a ModuleRep>,
    m: &ModuleRep,
) -> Result<bool, AlgebraError> {
    if remaining == 0 {
        let sum = ModuleRep::direct_sum(chosen)?;
        return is_isomorphic(&sum, m);
    }
    for i in start..parts.len() {
        let d = parts[i].dim();
        if d > remaining {
            continue;
        }
        // each summand must at least map nontrivially into m
        if hom_basis(parts[i], m)?.is_empty() {
            continue;
        }
        chosen.push(parts[i]);
        let found = search(parts, i, remaining - d, chosen, m)?;
        chosen.pop();
        if found {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Maps tried between two sample modules: each basis homomorphism and one generic combination.
fn test_maps(x: &ModuleRep, y: &ModuleRep) -> Result<Vec<ExactMatrix>, AlgebraError> {
    let basis = hom_basis(x, y)?;
    let field = x.field();
    let mut maps = basis.clone();
    if basis.len() > 1 {
        let mut g = ExactMatrix::zeros(field, y.dim(), x.dim());
        for (k, f) in basis.iter().enumerate() {
            g = g.add(&f.scale(&field.from_i64(k as i64 + 1)));
        }
        maps.push(g);
    }
    Ok(maps)
}

/// Middle terms of the extensions of `z` by `x` obtained by pushing the syzygy sequence
/// `0 -> Ωz -> P -> z -> 0` along each basis map `Ωz -> x` (the zero map gives `x ⊕ z`).
fn extensions(x: &ModuleRep, z: &ModuleRep) -> Result<Vec<ModuleRep>, AlgebraError> {
    let (p, pi) = match z.projective_cover() {
        Ok(c) => c,
        Err(AlgebraError::NotSplit) => z.free_cover(),
        Err(e) => return Err(e),
    };
    let (k, incl) = p.submodule(&pi.kernel_basis())?;
    let sum = ModuleRep::direct_sum(&[x, &p])?;
    let field = x.field();
    let mut out = vec![ModuleRep::direct_sum(&[x, z])?];
    for g in hom_basis(&k, x)? {
        let span = ExactMatrix::vstack(&[&g, &incl.neg()], field, k.dim());
        out.push(sum.quotient(&span)?.0);
    }
    Ok(out)
}

fn not_closed(what: String) -> ComplexError {
    ComplexError::SampleNotClosed(what)
}

/// Closure of a sample under extensions and cokernels of injections (`cokernels = true`)
/// or kernels of surjections; returns the number of cases examined.
fn closure(list: &[ModuleRep], name: &str, cokernels: bool) -> Result<usize, ComplexError> {
    let mut cases = 0;
    for (i, x) in list.iter().enumerate() {
        for (j, y) in list.iter().enumerate() {
            for f in test_maps(x, y)? {
                if cokernels && f.rank() == x.dim() {
                    cases += 1;
                    let (c, _) = y.quotient(&f)?;
                    if !in_additive_closure(list, &c)? {
                        return Err(not_closed(format!(
                            "the cokernel of an injection {name}[{i}] -> {name}[{j}] (dimension {}) is missing",
                            c.dim()
                        )));
                    }
                } else if !cokernels && f.rank() == y.dim() {
                    cases += 1;
                    let (k, _) = x.submodule(&f.kernel_basis())?;
                    if !in_additive_closure(list, &k)? {
                        return Err(not_closed(format!(
                            "the kernel of a surjection {name}[{i}] -> {name}[{j}] (dimension {}) is missing",
                            k.dim()
                        )));
                    }
                }
            }
            for e in extensions(x, y)? {
                cases += 1;
                if !in_additive_closure(list, &e)? {
                    return Err(not_closed(format!(
                        "an extension of {name}[{j}] by {name}[{i}] (dimension {}) is missing",
                        e.dim()
                    )));
                }
            }
        }
    }
    Ok(cases)
}

/// `RHom_A(L, E)` realized as `τ≤ l1` of `Hom_A(L, J)`, resolved by projective left
/// `B`-modules down to degree `-l2 - 1`, together with the boundary module
/// `coker(Q^{-l2-1} -> Q^{-l2})`.
pub fn boundary_term_f(
    c: &PseudoDualizingCandidate,
    e: &ModuleRep,
    l1: i32,
    l2: i32,
    w: ResolutionWindow,
) -> Result<(BoundedComplex, ModuleRep), ComplexError> {
    let (_, l_hi) = c.support();
    let x = BoundedComplex::from_module(e, 0);
    let mut j = Coresolution::new(&x, Structure::Left)?;
    j.extend_to(l1 + l_hi + 2)?;
    let h = hom_complex(c.complex(), &j.complex(), Over::Left)?.complex;
    let (ht, _) = h.truncate_above(l1);
    let mut q = Resolution::with_window(&ht.left_part(), Structure::Left, w)?;
    q.extend_to(-l2 - 1)?;
    let qc = q.complex();
    let d = qc.diff(-l2 - 1);
    let term = qc.term_or_zero(-l2).left_module();
    let (coker, _) = term.quotient(&d.column_space())?;
    Ok((qc.brutal_above(-l2 + 1), coker))
}

/// `L ⊗^L_B F` realized as `τ≥ -l1` of `L ⊗ Q`, coresolved by injective left `A`-modules
/// up to degree `l2 + 1`, together with the boundary module `ker(J^{l2} -> J^{l2+1})`.
pub fn boundary_term_e(
    c: &PseudoDualizingCandidate,
    f: &ModuleRep,
    l1: i32,
    l2: i32,
    w: ResolutionWindow,
) -> Result<(BoundedComplex, ModuleRep), ComplexError> {
    let (_, l_hi) = c.support();
    let y = BoundedComplex::from_module(f, 0);
    let mut q = Resolution::new(&y, Structure::Left)?;
    q.extend_to(-l1 - l_hi - 2)?;
    let t = tensor_complex(c.complex(), &q.complex())?.complex;
    let (tt, _) = t.truncate_below(-l1);
    let mut j = Coresolution::with_window(&tt.left_part(), Structure::Left, w)?;
    j.extend_to(l2 + 1)?;
    let jc = j.complex();
    let term = jc.term_or_zero(l2).left_module();
    let (kernel, _) = term.submodule(&jc.diff(l2).kernel_basis())?;
    Ok((jc.brutal_below(l2 - 1), kernel))
}

fn representability(
    c: &PseudoDualizingCandidate,
    list: &[ModuleRep],
    bass_side: bool,
    l1: i32,
    l2: i32,
    w: ResolutionWindow,
) -> Result<AxiomResult, ComplexError> {
    let (name, tag) = if bass_side { ("(III)", "E") } else { ("(IV)", "F") };
    let (_, l_hi) = c.support();
    let mut verdicts = Vec::new();
    for (i, m) in list.iter().enumerate() {
        let x = BoundedComplex::from_module(m, 0);
        // Homology must vanish above l1 (resp. below -l1) ...
        let van = if bass_side {
            ext_vanishing(c, &x, l1, w)?
        } else {
            tor_vanishing(c, &x, l1, w)?
        };
        let v = van.verdict(if bass_side { "Ext_A(L, E)" } else { "Tor_B(L, F)" });
        if let Verdict::Fail { witness, certificates } = v {
            verdicts.push(Verdict::Fail {
                witness: format!("{tag}[{i}]: {witness}"),
                certificates,
            });
            break;
        }
        verdicts.push(v);
        // ... and on the other side of the interval, where the computation is exact.
        let other = if bass_side {
            let h = crate::derived::rhom(c.complex(), &x, w, crate::derived::Strategy::ResolveSecond)?;
            (-l_hi..-l2).find(|&n| h.complex.homology_dim(n) != 0)
        } else {
            let t = crate::derived::derived_tensor(c.complex(), &x, w, crate::derived::Strategy::ResolveSecond)?;
            (l2 + 1..=l_hi).find(|&n| t.complex.homology_dim(n) != 0)
        };
        if let Some(n) = other {
            verdicts.push(Verdict::fail(format!("{tag}[{i}]: homology in degree {n} lies outside the interval")));
            break;
        }
        let report: MembershipReport = if bass_side {
            let (_, b) = boundary_term_f(c, m, l1, l2, w)?;
            auslander_membership(&b, c, l1, w)?
        } else {
            let (_, b) = boundary_term_e(c, m, l1, l2, w)?;
            bass_membership(&b, c, l1, w)?
        };
        match report.verdict {
            Verdict::Fail { witness, certificates } => {
                verdicts.push(Verdict::Fail {
                    witness: format!("{tag}[{i}]: the boundary term fails the opposite class: {witness}"),
                    certificates,
                });
                break;
            }
            v => verdicts.push(v),
        }
    }
    Ok(AxiomResult::new(name, Some((-l2, l1)), Verdict::combine(&verdicts)))
}

/// Conditions (I)-(IV) for finite module samples `E` (left `A`-modules) and `F` (left
/// `B`-modules). A sample that is not closed under the tested constructions is refused.
pub fn check_class_axioms(
    candidate_e: &[ModuleRep],
    candidate_f: &[ModuleRep],
    c: &PseudoDualizingCandidate,
    l1: i32,
    l2: i32,
    w: ResolutionWindow,
) -> Result<ValidationReport, ComplexError> {
    if l1 < c.d1() || l2 < c.d2() {
        return Err(ComplexError::Precondition(format!(
            "need l1 >= {} and l2 >= {}, got {l1} and {l2}",
            c.d1(),
            c.d2()
        )));
    }
    let mut axioms = Vec::new();
    for (bass_side, list, name, tag) in [(true, candidate_e, "(I)", "E"), (false, candidate_f, "(II)", "F")] {
        let required = if bass_side {
            indecomposable_injectives(c.left_algebra())?
        } else {
            indecomposable_projectives(c.right_algebra())?
        };
        let kind = if bass_side { "injective" } else { "projective" };
        let mut missing = None;
        for (k, m) in required.iter().enumerate() {
            if !in_additive_closure(list, m)? {
                missing = Some(k);
                break;
            }
        }
        let verdict = match missing {
            Some(k) => Verdict::fail(format!("indecomposable {kind} module #{k} is not in {tag}")),
            None => {
                let cases = closure(list, tag, bass_side)?;
                Verdict::exact(vec![Certificate::FiniteSample {
                    object: format!("{tag} sample"),
                    cases,
                }])
            }
        };
        axioms.push(AxiomResult::new(name, None, verdict));
    }
    axioms.push(representability(c, candidate_e, true, l1, l2, w)?);
    axioms.push(representability(c, candidate_f, false, l1, l2, w)?);
    Ok(ValidationReport::new("class-axioms", axioms))
}

/// One round of the generation process for the minimal pair of classes.
#[derive(Clone, Debug)]
pub struct GeneratorStep {
    /// Boundary terms `F^{-l2}` emitted from the current `E` modules.
    pub new_f: Vec<ModuleRep>,
    /// Boundary terms `E^{l2}` emitted from the current `F` modules.
    pub new_e: Vec<ModuleRep>,
    /// Whether every emitted module already lies in the additive closure of the input.
    pub stabilized: bool,
}

/// Emits, for each `E`, the degree `-l2` term of a representative of `RHom_A(L, E)` in
/// degrees `[-l2, d1]` with projective terms above `-l2`, and dually for each `F`.
pub fn minimal_class_generator_step(
    current_e: &[ModuleRep],
    current_f: &[ModuleRep],
    c: &PseudoDualizingCandidate,
    l2: i32,
    w: ResolutionWindow,
) -> Result<GeneratorStep, ComplexError> {
    if l2 < c.d2() {
        return Err(ComplexError::Precondition(format!("l2 = {l2} is below d2 = {}", c.d2())));
    }
    let d1 = c.d1();
    let mut new_f = Vec::new();
    for e in current_e {
        new_f.push(boundary_term_f(c, e, d1, l2, w)?.1);
    }
    let mut new_e = Vec::new();
    for f in current_f {
        new_e.push(boundary_term_e(c, f, d1, l2, w)?.1);
    }
    let mut stabilized = true;
    for m in &new_f {
        stabilized &= in_additive_closure(current_f, m)?;
    }
    for m in &new_e {
        stabilized &= in_additive_closure(current_e, m)?;
    }
    Ok(GeneratorStep {
        new_f,
        new_e,
        stabilized,
    })
}
