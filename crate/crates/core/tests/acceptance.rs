//! Acceptance suite. Runs every criterion even when an earlier one fails, prints one
//! line per criterion, and exits nonzero if any failed.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::Path;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

use dualcheck::algebra::{indecomposable_injectives, indecomposable_projectives, Algebra, ModuleRep};
use dualcheck::complex::BoundedComplex;
use dualcheck::derived::{derived_tensor, dg_adjunction_check, rhom, DerivedResult, Strategy};
use dualcheck::io::{run_tasks, RunOptions, Workspace};
use dualcheck::linalg::{ExactMatrix, Field};
use dualcheck::resolution::ResolutionWindow;
use dualcheck::samples;
use dualcheck::validate::{
    auslander_membership, bass_membership, bounded_equivalence_roundtrip, check_dedualizing, check_dualizing,
    check_homothety, check_relative_condition_iv, membership_base_change_test, BaseChange, Certificate, ClassKind,
    MembershipReport, ModuleSide, PseudoDualizingCandidate, RoundTrip, ValidationReport, Verdict,
};

const Q: Field = Field::Rationals;

type Outcome = Result<String, String>;

/// Everything the criteria emit, kept for the cross-cutting audits.
#[derive(Default)]
struct Collected {
    memberships: Vec<MembershipReport>,
    reports: Vec<(String, Value)>,
}

impl Collected {
    fn validation(&mut self, what: &str, r: &ValidationReport) {
        self.reports.push((what.to_string(), serde_json::to_value(r).unwrap()));
    }

    fn membership(&mut self, r: MembershipReport) -> bool {
        let member = r.is_member();
        self.reports.push((format!("membership of {}", r.module), serde_json::to_value(&r).unwrap()));
        self.memberships.push(r);
        member
    }

    fn roundtrip(&mut self, what: &str, rt: &RoundTrip) {
        self.reports.push((what.to_string(), serde_json::to_value(&rt.verdict).unwrap()));
        for (_, t) in &rt.terms {
            self.membership(t.clone());
        }
    }
}

fn w() -> ResolutionWindow {
    ResolutionWindow::default()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < budget, || format!("took {t:.1?}, budget {budget:?}"))
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn module_complex(m: &ModuleRep) -> BoundedComplex {
    BoundedComplex::from_module(m, 0)
}

fn roundtrip_exact(
    col: &mut Collected,
    c: &PseudoDualizingCandidate,
    x: &BoundedComplex,
    class: ClassKind,
    l1: i32,
    what: &str,
) -> Result<(), String> {
    let rt = bounded_equivalence_roundtrip(c, x, class, l1, w()).map_err(err)?;
    col.roundtrip(what, &rt);
    ensure(rt.verdict.is_exact_pass(), || format!("{what}: {:?}", rt.verdict))
}

fn criterion_1(col: &mut Collected) -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let (mut modules, mut trips) = (0, 0);
    for (name, a) in samples::all(Q) {
        let c = PseudoDualizingCandidate::regular(a.clone());
        let r = check_homothety(&c, w()).map_err(err)?;
        col.validation(name, &r);
        ensure(r.verdict.is_exact_pass(), || format!("{name}: homothety {:?}", r.verdict))?;
        for m in samples::modules_up_to_dim(&a, 3).map_err(err)? {
            let b = bass_membership(&m, &c, c.d1(), w()).map_err(err)?;
            let f = auslander_membership(&m, &c, c.d1(), w()).map_err(err)?;
            ensure(col.membership(b) && col.membership(f), || format!("{name}: a module of dim {} is not a member", m.dim()))?;
            modules += 1;
        }
        for i in 0..50 {
            let x = samples::random_complex(&a, 3, 3, &mut rng).map_err(err)?;
            let class = if i % 2 == 0 { ClassKind::Bass } else { ClassKind::Auslander };
            roundtrip_exact(col, &c, &x, class, c.d1(), &format!("{name} random complex {i}"))?;
            trips += 1;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{modules} modules in both classes, {trips} round trips, {:.1?}", start.elapsed()))
}

fn criterion_2(col: &mut Collected) -> Outcome {
    let start = Instant::now();
    let a = samples::dual_numbers(Q);
    let c = PseudoDualizingCandidate::tight(BoundedComplex::concentrated(samples::dual_bimodule(&a), 0));
    for (what, r) in [
        ("homothety", check_homothety(&c, w())),
        ("dualizing", check_dualizing(&c, w())),
        ("dedualizing", check_dedualizing(&c, w())),
    ] {
        let r = r.map_err(err)?;
        col.validation(&format!("D(A) {what}"), &r);
        ensure(r.verdict.is_exact_pass(), || format!("{what}: {:?}", r.verdict))?;
    }
    let ind = samples::indecomposables(&a).map_err(err)?;
    for m in &ind {
        for class in [ClassKind::Bass, ClassKind::Auslander] {
            roundtrip_exact(col, &c, &module_complex(m), class, c.d1(), &format!("indecomposable of dim {}", m.dim()))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..30 {
        let x = samples::random_complex(&a, 3, 4, &mut rng).map_err(err)?;
        let class = if i % 2 == 0 { ClassKind::Bass } else { ClassKind::Auslander };
        roundtrip_exact(col, &c, &x, class, c.d1(), &format!("random complex {i}"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} indecomposables in both classes and 30 random complexes, {:.1?}", ind.len(), start.elapsed()))
}

/// Endomorphisms of a left module found by solving `f a = a f` for every basis action.
fn brute_force_endomorphisms(actions: &[ExactMatrix]) -> ExactMatrix {
    let n = actions[0].rows();
    let mut cols = Vec::new();
    for r in 0..n {
        for c in 0..n {
            let mut e = ExactMatrix::zeros(Q, n, n);
            e.set(r, c, Q.one());
            let parts: Vec<ExactMatrix> = actions.iter().map(|x| e.mul(x).sub(&x.mul(&e)).vectorize()).collect();
            let refs: Vec<&ExactMatrix> = parts.iter().collect();
            cols.push(ExactMatrix::vstack(&refs, Q, 1));
        }
    }
    let refs: Vec<&ExactMatrix> = cols.iter().collect();
    // unknown r*n + c is the entry (r, c); rebuild each solution as a matrix so it can be
    // compared in the library's own vectorization
    let k = ExactMatrix::hstack(&refs, Q, n * n * actions.len()).kernel_basis();
    let as_maps: Vec<ExactMatrix> = (0..k.cols())
        .map(|j| ExactMatrix::from_fn(Q, n, n, |r, c| k.get(r * n + c, j).clone()).vectorize())
        .collect();
    let refs: Vec<&ExactMatrix> = as_maps.iter().collect();
    ExactMatrix::hstack(&refs, Q, n * n)
}

fn criterion_3(col: &mut Collected) -> Outcome {
    let start = Instant::now();
    let (t, homs) = samples::tilting_a2(Q).map_err(err)?;
    let (a, b) = (t.left_algebra().clone(), t.right_algebra().clone());
    let c = PseudoDualizingCandidate::tight(BoundedComplex::concentrated(t.clone(), 0));
    let r = check_dedualizing(&c, w()).map_err(err)?;
    col.validation("tilting dedualizing", &r);
    ensure(r.verdict.is_exact_pass(), || format!("dedualizing: {:?}", r.verdict))?;

    let brute = brute_force_endomorphisms(t.left_actions());
    ensure(brute.cols() == homs.len() && brute.rank() == homs.len(), || {
        format!("End(T) has dimension {} by brute force, {} in the library", brute.cols(), homs.len())
    })?;
    let vh: Vec<ExactMatrix> = homs.iter().map(ExactMatrix::vectorize).collect();
    let refs: Vec<&ExactMatrix> = vh.iter().collect();
    let basis = ExactMatrix::hstack(&refs, Q, t.dim() * t.dim());
    ensure(ExactMatrix::hstack(&[&basis, &brute], Q, basis.rows()).rank() == homs.len(), || {
        "library endomorphisms do not span the brute-force solution space".into()
    })?;
    // right action: (t b_i) b_j = t (b_i b_j), so b_i b_j acts by homs[j] homs[i]
    for i in 0..homs.len() {
        for j in 0..homs.len() {
            let prod = homs[j].mul(&homs[i]).vectorize();
            let coords = basis.solve(&prod).map_err(err)?.ok_or("composition leaves End(T)")?;
            let table: Vec<_> = coords.column(0);
            let sc = b.structure_constant(i, j);
            ensure(table == sc, || format!("b_{i} b_{j}: table {table:?}, algebra {sc:?}"))?;
        }
    }

    let (ia, ib) = (samples::indecomposables(&a).map_err(err)?, samples::indecomposables(&b).map_err(err)?);
    for m in &ia {
        roundtrip_exact(col, &c, &module_complex(m), ClassKind::Bass, 1, "tilting Bass round trip")?;
    }
    for m in &ib {
        roundtrip_exact(col, &c, &module_complex(m), ClassKind::Auslander, 1, "tilting Auslander round trip")?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "End(T) of dimension {} matches, {} + {} indecomposables round trip, {:.1?}",
        homs.len(),
        ia.len(),
        ib.len(),
        start.elapsed()
    ))
}

fn candidates() -> Vec<(String, PseudoDualizingCandidate)> {
    let mut out = Vec::new();
    for (name, a) in samples::all(Q) {
        out.push((format!("{name} regular"), PseudoDualizingCandidate::regular(a.clone())));
        out.push((
            format!("{name} dual"),
            PseudoDualizingCandidate::tight(BoundedComplex::concentrated(samples::dual_bimodule(&a), 0)),
        ));
    }
    let (t, _) = samples::tilting_a2(Q).unwrap();
    out.push(("kA2 tilting".into(), PseudoDualizingCandidate::tight(BoundedComplex::concentrated(t, 0))));
    let d = samples::dual_numbers(Q);
    out.push((
        "k over k[x]/(x^2)".into(),
        PseudoDualizingCandidate::tight(BoundedComplex::concentrated(samples::simple_bimodule(&d).unwrap(), 0)),
    ));
    out
}

fn member(col: &mut Collected, m: &ModuleRep, c: &PseudoDualizingCandidate, class: ClassKind, l1: i32) -> Result<bool, String> {
    let r = match class {
        ClassKind::Bass => bass_membership(m, c, l1, w()),
        ClassKind::Auslander => auslander_membership(m, c, l1, w()),
    }
    .map_err(err)?;
    ensure(!matches!(r.verdict, Verdict::WindowExhausted { .. }), || format!("undecided membership: {:?}", r.verdict))?;
    Ok(col.membership(r))
}

fn criterion_4(col: &mut Collected) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut valid = Vec::new();
    for (name, c) in candidates() {
        let r = check_homothety(&c, w()).map_err(err)?;
        col.validation(&name, &r);
        if r.verdict.is_exact_pass() {
            valid.push((name, c));
        }
    }
    let mut checks = 0;
    for (name, c) in &valid {
        for l1 in [c.d1(), c.d1() + 1] {
            for j in indecomposable_injectives(c.left_algebra()).map_err(err)? {
                ensure(member(col, &j, c, ClassKind::Bass, l1)?, || format!("{name}: injective of dim {} not in E_{l1}", j.dim()))?;
            }
            for p in indecomposable_projectives(c.right_algebra()).map_err(err)? {
                ensure(member(col, &p, c, ClassKind::Auslander, l1)?, || format!("{name}: projective of dim {} not in F_{l1}", p.dim()))?;
            }
        }
    }
    for i in 0..100 {
        let (name, c) = &valid[i % valid.len()];
        let l1 = c.d1() + rng.gen_range(0..=1);
        for (class, alg) in [(ClassKind::Bass, c.left_algebra()), (ClassKind::Auslander, c.right_algebra())] {
            let (k, m, q) = samples::random_short_exact(alg, 4, &mut rng).map_err(err)?;
            let (ik, im, iq) = (member(col, &k, c, class, l1)?, member(col, &m, c, class, l1)?, member(col, &q, c, class, l1)?);
            let ses = format!("{name}, {class:?} class, l1 = {l1}, dims {} -> {} -> {}", k.dim(), m.dim(), q.dim());
            ensure(!(ik && iq) || im, || format!("not closed under extensions: {ses}"))?;
            match class {
                ClassKind::Bass => ensure(!(ik && im) || iq, || format!("not closed under cokernels of injections: {ses}"))?,
                ClassKind::Auslander => ensure(!(im && iq) || ik, || format!("not closed under kernels of surjections: {ses}"))?,
            }
            checks += 1;
        }
    }
    let names: Vec<&str> = valid.iter().map(|(n, _)| n.as_str()).collect();
    Ok(format!("{} valid candidates ({}), {checks} short exact sequences", valid.len(), names.join(", ")))
}

fn criterion_5(col: &Collected) -> Outcome {
    let mut vanishing = 0;
    for r in &col.memberships {
        if !r.vanishing_passed() {
            continue;
        }
        vanishing += 1;
        let adj_ok = r.adjunction.as_ref().is_some_and(|a| a.failing_degree.is_none());
        ensure(adj_ok && r.is_member(), || {
            format!("{} ({:?}, l1 = {}) passes vanishing but not the adjunction: {:?}", r.module, r.class, r.l1, r.verdict)
        })?;
    }
    ensure(vanishing > 0, || "no membership reports collected".into())?;
    Ok(format!("{vanishing} of {} reports pass vanishing, all with invertible adjunction", col.memberships.len()))
}

fn compare(a: &DerivedResult, b: &DerivedResult, what: &str) -> Result<usize, String> {
    let (lo, hi) = (a.trust.lo.max(b.trust.lo), a.trust.hi.min(b.trust.hi));
    let (lo, hi) = (lo.max(-8), hi.min(8));
    ensure(lo <= hi, || format!("{what}: no common trusted degree"))?;
    for n in lo..=hi {
        let (x, y) = (a.homology_dim(n).map_err(err)?, b.homology_dim(n).map_err(err)?);
        ensure(x == y, || format!("{what} in degree {n}: {x} by resolving the first argument, {y} by the second"))?;
    }
    Ok((hi - lo + 1) as usize)
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let algebras = samples::all(Q);
    let win = ResolutionWindow::new(4).map_err(err)?;
    let mut degrees = 0;
    for i in 0..200 {
        let (name, a) = &algebras[rng.gen_range(0..algebras.len())];
        let m = samples::random_module(a, 4, &mut rng).map_err(err)?;
        let n = samples::random_module(a, 4, &mut rng).map_err(err)?;
        let (l, x) = (module_complex(&m), module_complex(&n));
        let first = rhom(&l, &x, win, Strategy::ResolveFirst).map_err(err)?;
        let second = rhom(&l, &x, win, Strategy::ResolveSecond).map_err(err)?;
        degrees += compare(&first, &second, &format!("instance {i} over {name}: Ext"))?;

        let r = samples::random_module(&a.opposite_arc(), 4, &mut rng).map_err(err)?.flip_side();
        let l = module_complex(&r);
        let first = derived_tensor(&l, &x, win, Strategy::ResolveFirst).map_err(err)?;
        let second = derived_tensor(&l, &x, win, Strategy::ResolveSecond).map_err(err)?;
        degrees += compare(&first, &second, &format!("instance {i} over {name}: Tor"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("200 instances, {degrees} trusted Ext/Tor degrees agree, {:.1?}", start.elapsed()))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let cs: Vec<_> = candidates().into_iter().map(|(n, c)| (n, c.complex().clone())).collect();
    let mut terms = 0;
    for i in 0..100 {
        let (name, l) = &cs[i % cs.len()];
        let (a, b): (&Arc<Algebra>, &Arc<Algebra>) = (l.left_algebra(), l.right_algebra());
        let p = samples::random_complex_from(&indecomposable_projectives(b).map_err(err)?, 3, 2, &mut rng).map_err(err)?;
        let j = samples::random_complex_from(&indecomposable_injectives(a).map_err(err)?, 3, 2, &mut rng).map_err(err)?;
        let l = l.shift(rng.gen_range(-1..=1));
        let res = dg_adjunction_check(&l, &p, &j).map_err(err)?;
        ensure(res.holds(), || format!("pair {i} for {name}: {res:?}"))?;
        terms += res.dims.len();
    }
    Ok(format!("100 pairs, {terms} degrees with equal dimensions and bijective currying"))
}

fn criterion_8(col: &mut Collected) -> Outcome {
    let (k, r) = (samples::ground(Q), samples::a2(Q));
    let l = PseudoDualizingCandidate::regular(k);
    let u = PseudoDualizingCandidate::regular(r.clone());
    let unit = r.unit().clone();
    let bc = BaseChange::new(l.complex(), u.complex().clone(), unit.clone(), unit.clone(), vec![(0, unit)]).map_err(err)?;
    let iv = check_relative_condition_iv(&l, &bc, w()).map_err(err)?;
    col.validation("relative condition (iv)", &iv);
    ensure(iv.verdict.is_exact_pass(), || format!("relative condition (iv): {:?}", iv.verdict))?;
    let mut n = 0;
    for side in [ModuleSide::R, ModuleSide::S] {
        for m in samples::modules_up_to_dim(&r, 3).map_err(err)? {
            let o = membership_base_change_test(&m, side, &l, &u, &bc, 0, w()).map_err(err)?;
            col.reports.push(("base change".into(), serde_json::to_value(&o).unwrap()));
            let decided = |v: &Verdict| !matches!(v, Verdict::WindowExhausted { .. });
            ensure(decided(&o.over_extension.verdict) && decided(&o.underlying.verdict), || {
                format!("{side:?}: undecided on a module of dim {}", m.dim())
            })?;
            ensure(o.agree, || format!("{side:?}: oracles disagree on a module of dim {}", m.dim()))?;
            col.membership(o.over_extension);
            col.membership(o.underlying);
            n += 1;
        }
    }
    Ok(format!("{n} modules over both sides, zero disagreements"))
}

fn has_periodicity(v: &Verdict) -> bool {
    v.is_fail() && v.certificates().iter().any(|c| matches!(c, Certificate::Periodicity { .. }))
}

/// Paths of every `pass-exact` verdict with no certificates.
fn uncertified(v: &Value, path: &str, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            if map.get("status").and_then(Value::as_str) == Some("pass-exact") {
                let empty = map.get("certificates").and_then(Value::as_array).is_none_or(|c| c.is_empty());
                if empty {
                    out.push(path.to_string());
                }
            }
            for (k, x) in map {
                uncertified(x, &format!("{path}.{k}"), out);
            }
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                uncertified(x, &format!("{path}[{i}]"), out);
            }
        }
        _ => {}
    }
}

fn criterion_9(col: &mut Collected) -> Outcome {
    let d = samples::dual_numbers(Q);
    let c = PseudoDualizingCandidate::tight(BoundedComplex::concentrated(samples::simple_bimodule(&d).map_err(err)?, 0));
    for (what, r) in [("dedualizing", check_dedualizing(&c, w())), ("dualizing", check_dualizing(&c, w()))] {
        let r = r.map_err(err)?;
        col.validation(&format!("simple bimodule {what}"), &r);
        ensure(has_periodicity(&r.verdict), || format!("{what}: expected a failure with a periodicity certificate, got {:?}", r.verdict))?;
    }

    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("workspaces");
    let mut files: Vec<_> = std::fs::read_dir(&dir).map_err(err)?.map(|e| e.unwrap().path()).collect();
    files.sort();
    for f in &files {
        let ws = Workspace::load(f).map_err(err)?;
        let all: Vec<usize> = (0..ws.tasks.len()).collect();
        let report = run_tasks(&ws, &all, RunOptions::default()).map_err(err)?;
        let v: Value = serde_json::from_str(&report.to_json()).map_err(err)?;
        col.reports.push((f.display().to_string(), v));
    }

    let mut bad = Vec::new();
    let mut exact = 0;
    for (what, v) in &col.reports {
        uncertified(v, what, &mut bad);
        exact += v.to_string().matches("\"pass-exact\"").count();
    }
    ensure(bad.is_empty(), || format!("uncertified exact passes: {}", bad.join("; ")))?;
    Ok(format!("both checks fail with periodicity; {} reports audited, {exact} exact passes all certified", col.reports.len()))
}

fn run(n: usize, f: impl FnOnce() -> Outcome) -> (usize, bool, String) {
    let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match outcome {
        Ok(detail) => (n, true, format!("criterion {n}: PASS: {detail}")),
        Err(detail) => (n, false, format!("criterion {n}: FAIL: {detail}")),
    }
}

fn main() {
    let mut col = Collected::default();
    // 5 audits the membership reports of the other suites and 9 audits every report, so
    // both run after the rest
    let mut results = vec![
        run(1, || criterion_1(&mut col)),
        run(2, || criterion_2(&mut col)),
        run(3, || criterion_3(&mut col)),
        run(4, || criterion_4(&mut col)),
        run(6, criterion_6),
        run(7, criterion_7),
        run(8, || criterion_8(&mut col)),
    ];
    results.push(run(5, || criterion_5(&col)));
    results.push(run(9, || criterion_9(&mut col)));
    results.sort_by_key(|r| r.0);
    for (_, _, line) in &results {
        println!("{line}");
    }
    let failed = results.iter().filter(|r| !r.1).count();
    println!("acceptance: {} of {} criteria pass", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
