use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::format::{matrix_to_json, JsonMatrix};
use super::workspace::{canon_json_matrix, check_task_ref, invalid, Workspace};
use super::WorkspaceError;
use crate::algebra::ModuleRep;
use crate::complex::{BoundedComplex, ChainMap};
use crate::derived::Strategy;
use crate::error::ComplexError;
use crate::resolution::{Coresolution, Resolution, ResolutionWindow, Structure};
use crate::samples;
use crate::validate::*;

pub const OPS: &[&str] = &[
    "resolve",
    "ext",
    "tor",
    "check-pdc",
    "check-homothety",
    "check-dedualizing",
    "check-dualizing",
    "membership",
    "class-axioms",
    "generator-step",
    "relative-iv",
    "roundtrip",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum ResolveKind {
    #[default]
    Projective,
    Injective,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum StructureSpec {
    #[default]
    Left,
    Right,
    Bimodule,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum StrategySpec {
    ResolveFirst,
    #[default]
    ResolveSecond,
}

fn three() -> usize {
    3
}

fn one() -> usize {
    1
}

/// One operation of a workspace. Omitted `l1`/`l2` default to the candidate's `d1`/`d2`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Task {
    Resolve {
        object: String,
        #[serde(default)]
        kind: ResolveKind,
        #[serde(default)]
        structure: StructureSpec,
    },
    /// `dim Ext^n_A(L, X)` for `n` in `degrees`.
    Ext {
        candidate: String,
        object: String,
        degrees: (i32, i32),
        #[serde(default)]
        strategy: StrategySpec,
    },
    /// `dim Tor_n^B(L, N)` for `n` in `degrees`.
    Tor {
        candidate: String,
        object: String,
        degrees: (i32, i32),
        #[serde(default)]
        strategy: StrategySpec,
    },
    #[serde(alias = "check-homothety")]
    CheckPdc { candidate: String },
    CheckDedualizing { candidate: String },
    CheckDualizing { candidate: String },
    Membership {
        candidate: String,
        class: ClassKind,
        #[serde(default)]
        l1: Option<i32>,
        #[serde(default)]
        modules: Vec<String>,
        /// Additional random modules drawn with the run seed.
        #[serde(default)]
        random: usize,
        #[serde(default = "three")]
        max_dim: usize,
    },
    ClassAxioms {
        candidate: String,
        e: Vec<String>,
        f: Vec<String>,
        #[serde(default)]
        l1: Option<i32>,
        #[serde(default)]
        l2: Option<i32>,
    },
    GeneratorStep {
        candidate: String,
        e: Vec<String>,
        f: Vec<String>,
        #[serde(default)]
        l2: Option<i32>,
        #[serde(default = "one")]
        steps: usize,
    },
    RelativeIv {
        candidate: String,
        /// The candidate `U` over the larger pair of algebras.
        extension: String,
        a_to_r: JsonMatrix,
        b_to_s: JsonMatrix,
        /// Components of `L -> U` keyed by degree.
        structural: BTreeMap<String, JsonMatrix>,
        /// Modules for the membership transfer test, over `R` or `S` per `side`.
        #[serde(default)]
        modules: Vec<String>,
        #[serde(default)]
        side: Option<ModuleSide>,
        #[serde(default)]
        l1: Option<i32>,
    },
    Roundtrip {
        candidate: String,
        class: ClassKind,
        #[serde(default)]
        l1: Option<i32>,
        #[serde(default)]
        complexes: Vec<String>,
        #[serde(default)]
        random: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TaskSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(flatten)]
    pub task: Task,
}

impl TaskSpec {
    pub fn parse(index: usize, raw: &Value) -> Result<TaskSpec, WorkspaceError> {
        let op = raw.get("op").and_then(Value::as_str).ok_or_else(|| WorkspaceError::BadTask {
            index,
            message: "missing \"op\"".into(),
        })?;
        if !OPS.contains(&op) {
            return Err(WorkspaceError::UnknownTask(op.to_string()));
        }
        serde_json::from_value(raw.clone()).map_err(|e| WorkspaceError::BadTask {
            index,
            message: e.to_string(),
        })
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("tasks serialize")
    }

    pub fn op(&self) -> &'static str {
        self.task.op()
    }
}

impl Task {
    pub fn op(&self) -> &'static str {
        match self {
            Task::Resolve { .. } => "resolve",
            Task::Ext { .. } => "ext",
            Task::Tor { .. } => "tor",
            Task::CheckPdc { .. } => "check-pdc",
            Task::CheckDedualizing { .. } => "check-dedualizing",
            Task::CheckDualizing { .. } => "check-dualizing",
            Task::Membership { .. } => "membership",
            Task::ClassAxioms { .. } => "class-axioms",
            Task::GeneratorStep { .. } => "generator-step",
            Task::RelativeIv { .. } => "relative-iv",
            Task::Roundtrip { .. } => "roundtrip",
        }
    }

    fn candidate_name(&self) -> Option<&str> {
        match self {
            Task::Resolve { .. } => None,
            Task::Ext { candidate, .. }
            | Task::Tor { candidate, .. }
            | Task::CheckPdc { candidate }
            | Task::CheckDedualizing { candidate }
            | Task::CheckDualizing { candidate }
            | Task::Membership { candidate, .. }
            | Task::ClassAxioms { candidate, .. }
            | Task::GeneratorStep { candidate, .. }
            | Task::RelativeIv { candidate, .. }
            | Task::Roundtrip { candidate, .. } => Some(candidate),
        }
    }

    /// Resolves every reference and reduces embedded scalars.
    pub(crate) fn canonicalize(&mut self, ws: &Workspace, index: usize) -> Result<(), WorkspaceError> {
        let at = format!("tasks[{index}]");
        if let Some(c) = self.candidate_name() {
            check_task_ref(ws, "candidate", c, &at)?;
        }
        let bad = |message: String| WorkspaceError::BadTask { index, message };
        match self {
            Task::Resolve { object, .. } => check_task_ref(ws, "complex", object, &at)?,
            Task::Ext { object, degrees, .. } | Task::Tor { object, degrees, .. } => {
                check_task_ref(ws, "complex", object, &at)?;
                if degrees.0 > degrees.1 {
                    return Err(bad(format!("empty degree range {:?}", degrees)));
                }
            }
            Task::Membership { modules, .. } => {
                for m in modules.iter() {
                    check_task_ref(ws, "module", m, &at)?;
                }
            }
            Task::ClassAxioms { e, f, .. } | Task::GeneratorStep { e, f, .. } => {
                for m in e.iter().chain(f.iter()) {
                    check_task_ref(ws, "module", m, &at)?;
                }
            }
            Task::RelativeIv {
                extension,
                a_to_r,
                b_to_s,
                structural,
                modules,
                side,
                ..
            } => {
                check_task_ref(ws, "candidate", extension, &at)?;
                for m in modules.iter() {
                    check_task_ref(ws, "module", m, &at)?;
                }
                if !modules.is_empty() && side.is_none() {
                    return Err(bad("modules for the base change test need a \"side\"".into()));
                }
                *a_to_r = canon_json_matrix(ws.field, a_to_r)?;
                *b_to_s = canon_json_matrix(ws.field, b_to_s)?;
                for (n, m) in structural.iter_mut() {
                    if n.parse::<i32>().is_err() {
                        return Err(bad(format!("structural map key {n:?} is not a degree")));
                    }
                    *m = canon_json_matrix(ws.field, m)?;
                }
            }
            Task::Roundtrip { complexes, .. } => {
                for x in complexes.iter() {
                    check_task_ref(ws, "complex", x, &at)?;
                }
            }
            Task::CheckPdc { .. } | Task::CheckDedualizing { .. } | Task::CheckDualizing { .. } => {}
        }
        if let Task::RelativeIv { .. } = self {
            base_change(ws, self, &at)?;
        }
        Ok(())
    }
}

fn base_change(ws: &Workspace, task: &Task, at: &str) -> Result<BaseChange, WorkspaceError> {
    let Task::RelativeIv {
        candidate,
        extension,
        a_to_r,
        b_to_s,
        structural,
        ..
    } = task
    else {
        unreachable!("only relative-iv carries a base change")
    };
    let l = ws.candidate(candidate, at)?;
    let u = ws.candidate(extension, at)?;
    let comps = structural
        .iter()
        .map(|(n, m)| Ok((n.parse::<i32>().unwrap_or_default(), ws.parse_matrix(m, at)?)))
        .collect::<Result<Vec<_>, WorkspaceError>>()?;
    BaseChange::new(
        l.complex(),
        u.complex().clone(),
        ws.parse_matrix(a_to_r, at)?,
        ws.parse_matrix(b_to_s, at)?,
        comps,
    )
    .map_err(|e| invalid(at, e))
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RunOptions {
    pub window: ResolutionWindow,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TaskReport {
    pub index: usize,
    pub op: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    /// Absent when the task was refused.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    /// Why the computation was declined (a sample not closed, a degree outside the window).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub refusal: Option<String>,
    pub detail: Value,
}

impl TaskReport {
    /// 0 for an exact pass, 1 for a failure, 2 for a window-limited outcome, 3 for a refusal.
    pub fn exit_code(&self) -> i32 {
        match &self.verdict {
            Some(v) => v.exit_code(),
            None => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub field: String,
    pub window: usize,
    pub seed: u64,
    pub tasks: Vec<TaskReport>,
    pub exit_code: i32,
}

impl RunReport {
    pub fn new(ws: &Workspace, opts: RunOptions, tasks: Vec<TaskReport>) -> RunReport {
        let exit_code = combined_exit_code(tasks.iter().map(TaskReport::exit_code));
        RunReport {
            field: ws.field.to_string(),
            window: opts.window.depth(),
            seed: opts.seed,
            tasks,
            exit_code,
        }
    }

    pub fn to_json(&self) -> String {
        super::workspace::canonical_json(self)
    }
}

/// Any failure wins, then any refusal, then any window-limited outcome.
pub fn combined_exit_code(codes: impl IntoIterator<Item = i32>) -> i32 {
    let codes: Vec<i32> = codes.into_iter().collect();
    [1, 3, 2].into_iter().find(|c| codes.contains(c)).unwrap_or(0)
}

/// Runs task `index` of the workspace.
pub fn run_task(ws: &Workspace, index: usize, opts: RunOptions) -> Result<TaskReport, WorkspaceError> {
    let spec = ws.tasks.get(index).ok_or_else(|| WorkspaceError::UnknownTask(format!("#{index}")))?;
    run_spec(ws, spec, index, opts)
}

pub fn run_spec(ws: &Workspace, spec: &TaskSpec, index: usize, opts: RunOptions) -> Result<TaskReport, WorkspaceError> {
    let mut report = TaskReport {
        index,
        op: spec.op().to_string(),
        label: spec.label.clone(),
        verdict: None,
        refusal: None,
        detail: Value::Null,
    };
    match dispatch(ws, &spec.task, index, opts) {
        Ok((verdict, detail)) => {
            report.verdict = Some(verdict);
            report.detail = detail;
        }
        Err(Run::Refused(e)) => report.refusal = Some(e.to_string()),
        Err(Run::Input(e)) => return Err(e),
    }
    Ok(report)
}

/// Runs the selected tasks on scoped threads; reports come back in task order.
pub fn run_tasks(ws: &Workspace, indices: &[usize], opts: RunOptions) -> Result<RunReport, WorkspaceError> {
    let results: Vec<Result<TaskReport, WorkspaceError>> = std::thread::scope(|s| {
        let handles: Vec<_> = indices.iter().map(|&i| s.spawn(move || run_task(ws, i, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("task thread panicked")).collect()
    });
    let tasks = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(RunReport::new(ws, opts, tasks))
}

enum Run {
    Refused(ComplexError),
    Input(WorkspaceError),
}

impl From<ComplexError> for Run {
    fn from(e: ComplexError) -> Self {
        Run::Refused(e)
    }
}

impl From<crate::error::AlgebraError> for Run {
    fn from(e: crate::error::AlgebraError) -> Self {
        Run::Refused(e.into())
    }
}

impl From<WorkspaceError> for Run {
    fn from(e: WorkspaceError) -> Self {
        Run::Input(e)
    }
}

type Outcome = Result<(Verdict, Value), Run>;

fn strategy(s: StrategySpec) -> Strategy {
    match s {
        StrategySpec::ResolveFirst => Strategy::ResolveFirst,
        StrategySpec::ResolveSecond => Strategy::ResolveSecond,
    }
}

fn bound(v: i32) -> Value {
    if v == i32::MIN || v == i32::MAX {
        Value::Null
    } else {
        json!(v)
    }
}

fn modules(ws: &Workspace, names: &[String], at: &str) -> Result<Vec<ModuleRep>, WorkspaceError> {
    names.iter().map(|n| ws.module(n, at)).collect()
}

fn chain_map_json(f: &ChainMap) -> Value {
    let mut out = BTreeMap::new();
    if let Some((lo, hi)) = f.source().support() {
        for n in lo..=hi {
            let c = f.component(n);
            if c.rows() > 0 && c.cols() > 0 {
                out.insert(n.to_string(), json!(matrix_to_json(&c)));
            }
        }
    }
    json!(out)
}

fn dispatch(ws: &Workspace, task: &Task, index: usize, opts: RunOptions) -> Outcome {
    let at = format!("tasks[{index}]");
    let w = opts.window;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed.wrapping_add(index as u64));
    let cand = |name: &str| ws.candidate(name, &at);
    let l1_or = |l1: Option<i32>, c: &PseudoDualizingCandidate| l1.unwrap_or(c.d1());
    match task {
        Task::Resolve { object, kind, structure } => {
            let x = ws.complex(object, &at)?;
            let s = match structure {
                StructureSpec::Left => Structure::Left,
                StructureSpec::Right => Structure::Right,
                StructureSpec::Bimodule => Structure::Bimodule,
            };
            resolve(&x, *kind, s, w, object)
        }
        Task::Ext {
            candidate,
            object,
            degrees,
            strategy: st,
        } => {
            let c = cand(candidate)?;
            let x = ws.complex(object, &at)?;
            let r = c.context().rhom(&x, w, strategy(*st))?;
            derived_dims(r, *degrees, |n| n, &format!("Ext_A(L, {object})"))
        }
        Task::Tor {
            candidate,
            object,
            degrees,
            strategy: st,
        } => {
            let c = cand(candidate)?;
            let x = ws.complex(object, &at)?;
            let r = c.context().derived_tensor(&x, w, strategy(*st))?;
            derived_dims(r, *degrees, |n| -n, &format!("Tor_B(L, {object})"))
        }
        Task::CheckPdc { candidate } => report(check_homothety(cand(candidate)?, w)?),
        Task::CheckDedualizing { candidate } => report(check_dedualizing(cand(candidate)?, w)?),
        Task::CheckDualizing { candidate } => report(check_dualizing(cand(candidate)?, w)?),
        Task::Membership {
            candidate,
            class,
            l1,
            modules: names,
            random,
            max_dim,
        } => {
            let c = cand(candidate)?;
            let l1 = l1_or(*l1, c);
            let mut list: Vec<(String, ModuleRep)> = names.iter().cloned().zip(modules(ws, names, &at)?).collect();
            let ring = match class {
                ClassKind::Bass => c.left_algebra(),
                ClassKind::Auslander => c.right_algebra(),
            };
            for i in 0..*random {
                list.push((format!("random[{i}]"), samples::random_module(ring, *max_dim, &mut rng)?));
            }
            let mut reports = Vec::new();
            for (name, m) in &list {
                let r = match class {
                    ClassKind::Bass => bass_membership(m, c, l1, w)?,
                    ClassKind::Auslander => auslander_membership(m, c, l1, w)?,
                };
                reports.push(r.named(name.clone()));
            }
            let verdict = Verdict::combine(reports.iter().map(|r| &r.verdict));
            Ok((verdict, json!({ "l1": l1, "reports": reports })))
        }
        Task::ClassAxioms { candidate, e, f, l1, l2 } => {
            let c = cand(candidate)?;
            let (es, fs) = (modules(ws, e, &at)?, modules(ws, f, &at)?);
            let r = check_class_axioms(&es, &fs, c, l1_or(*l1, c), l2.unwrap_or(c.d2()), w)?;
            report(r)
        }
        Task::GeneratorStep {
            candidate,
            e,
            f,
            l2,
            steps,
        } => {
            let c = cand(candidate)?;
            generator(c, modules(ws, e, &at)?, modules(ws, f, &at)?, l2.unwrap_or(c.d2()), *steps, w)
        }
        Task::RelativeIv {
            candidate,
            extension,
            modules: names,
            side,
            l1,
            ..
        } => {
            let (c, u) = (cand(candidate)?, cand(extension)?);
            let bc = base_change(ws, task, &at)?;
            let r = check_relative_condition_iv(c, &bc, w)?;
            let mut verdicts = vec![r.verdict.clone()];
            let l1 = l1.unwrap_or(c.d1().max(u.d1()));
            let mut outcomes = Vec::new();
            for name in names {
                let m = ws.module(name, &at)?;
                let mut o = membership_base_change_test(&m, side.expect("checked on load"), c, u, &bc, l1, w)?;
                o.over_extension = o.over_extension.named(name.clone());
                o.underlying = o.underlying.named(format!("{name} restricted"));
                if !o.agree {
                    verdicts.push(Verdict::fail(format!("the membership oracles disagree on {name}")));
                }
                outcomes.push(json!({ "module": name, "outcome": o }));
            }
            Ok((Verdict::combine(&verdicts), json!({ "report": r, "base_change": outcomes })))
        }
        Task::Roundtrip {
            candidate,
            class,
            l1,
            complexes,
            random,
        } => {
            let c = cand(candidate)?;
            let l1 = l1_or(*l1, c);
            let ring = match class {
                ClassKind::Bass => c.left_algebra(),
                ClassKind::Auslander => c.right_algebra(),
            };
            let mut list = Vec::new();
            for name in complexes {
                list.push((name.clone(), ws.complex(name, &at)?));
            }
            for i in 0..*random {
                list.push((format!("random[{i}]"), samples::random_complex(ring, 3, 3, &mut rng)?));
            }
            let mut verdicts = Vec::new();
            let mut out = Vec::new();
            for (name, x) in &list {
                let rt = bounded_equivalence_roundtrip(c, x, *class, l1, w)?;
                out.push(roundtrip_json(name, &rt));
                verdicts.push(rt.verdict);
            }
            Ok((Verdict::combine(&verdicts), json!({ "l1": l1, "complexes": out })))
        }
    }
}

fn report(r: ValidationReport) -> Outcome {
    Ok((r.verdict.clone(), json!(r)))
}

fn resolve(x: &BoundedComplex, kind: ResolveKind, s: Structure, w: ResolutionWindow, name: &str) -> Outcome {
    let depth = w.depth();
    let (complex, length, periodic, trusted) = match kind {
        ResolveKind::Projective => {
            let mut r = Resolution::with_window(x, s, w)?;
            let len = r.length(depth)?;
            let p = if len.is_none() { r.detect_periodicity(depth)? } else { None };
            (r.complex(), len, p, json!({ "from": bound(r.trusted_from()) }))
        }
        ResolveKind::Injective => {
            let mut r = Coresolution::with_window(x, s, w)?;
            let len = r.length(depth)?;
            let p = if len.is_none() { r.detect_periodicity(depth)? } else { None };
            (r.complex(), len, p, json!({ "until": bound(r.trusted_until()) }))
        }
    };
    let object = match kind {
        ResolveKind::Projective => format!("projective resolution of {name}"),
        ResolveKind::Injective => format!("injective coresolution of {name}"),
    };
    let dims: BTreeMap<String, usize> = complex.terms().map(|(n, t)| (n.to_string(), t.dim())).collect();
    let verdict = match (length, &periodic) {
        (Some(length), _) => Verdict::exact(vec![match kind {
            ResolveKind::Projective => Certificate::FiniteResolution { object, length },
            ResolveKind::Injective => Certificate::FiniteCoresolution { object, length },
        }]),
        (None, Some(p)) => Verdict::exact(vec![Certificate::Periodicity {
            object,
            offset: p.offset,
            period: p.period,
        }]),
        (None, None) => {
            let (lo, hi) = complex.support().unwrap_or((0, 0));
            Verdict::PassWithinWindow { from: lo, to: hi }
        }
    };
    let periodicity = periodic.map(|p| json!({ "offset": p.offset, "period": p.period }));
    let detail = json!({
        "terms": dims,
        "length": length,
        "periodicity": periodicity,
        "trusted": trusted,
    });
    Ok((verdict, detail))
}

fn derived_dims(r: crate::derived::DerivedResult, degrees: (i32, i32), to_cohomological: impl Fn(i32) -> i32, object: &str) -> Outcome {
    let mut dims = BTreeMap::new();
    let mut refused = Vec::new();
    let mut certs = Vec::new();
    for n in degrees.0..=degrees.1 {
        match r.homology_dim(to_cohomological(n)) {
            Ok(d) => {
                dims.insert(n.to_string(), json!(d));
                certs.push(Certificate::TrustedDegree {
                    object: object.to_string(),
                    degree: n,
                });
            }
            Err(ComplexError::WindowExceeded { .. }) => {
                dims.insert(n.to_string(), Value::Null);
                refused.push(n);
            }
            Err(e) => return Err(e.into()),
        }
    }
    let verdict = if refused.is_empty() {
        Verdict::exact(certs)
    } else {
        Verdict::WindowExhausted {
            reason: format!("degrees {refused:?} lie outside the trusted range of the window"),
        }
    };
    let detail = json!({
        "dims": dims,
        "trust": { "lo": bound(r.trust.lo), "hi": bound(r.trust.hi) },
    });
    Ok((verdict, detail))
}

fn generator(
    c: &PseudoDualizingCandidate,
    mut e: Vec<ModuleRep>,
    mut f: Vec<ModuleRep>,
    l2: i32,
    steps: usize,
    w: ResolutionWindow,
) -> Outcome {
    let mut verdicts = Vec::new();
    let mut log = Vec::new();
    let mut stabilized = false;
    for _ in 0..steps {
        let g = minimal_class_generator_step(&e, &f, c, l2, w)?;
        // emitted modules must land in the opposite classes
        for m in &g.new_f {
            verdicts.push(auslander_membership(m, c, c.d1(), w)?.verdict);
        }
        for m in &g.new_e {
            verdicts.push(bass_membership(m, c, c.d1(), w)?.verdict);
        }
        log.push(json!({
            "new_f": g.new_f.iter().map(ModuleRep::dim).collect::<Vec<_>>(),
            "new_e": g.new_e.iter().map(ModuleRep::dim).collect::<Vec<_>>(),
            "stabilized": g.stabilized,
        }));
        if g.stabilized {
            stabilized = true;
            break;
        }
        for m in g.new_f {
            if !in_additive_closure(&f, &m)? {
                f.push(m);
            }
        }
        for m in g.new_e {
            if !in_additive_closure(&e, &m)? {
                e.push(m);
            }
        }
    }
    let detail = json!({
        "l2": l2,
        "steps": log,
        "stabilized": stabilized,
        "e_generators": e.len(),
        "f_generators": f.len(),
    });
    Ok((Verdict::combine(&verdicts), detail))
}

fn roundtrip_json(name: &str, rt: &RoundTrip) -> Value {
    let terms: Vec<Value> = rt.terms.iter().map(|(n, r)| json!({ "degree": n, "membership": r })).collect();
    let adjunction = rt.adjunction.as_ref().map(|a| {
        json!({
            "kind": format!("{:?}", a.kind).to_lowercase(),
            "range": a.range,
            "failing_degree": a.failing_degree,
            "covers_all_degrees": a.covers_all_degrees,
            "map": chain_map_json(&a.map),
            "comparison": chain_map_json(&a.comparison),
        })
    });
    json!({
        "complex": name,
        "verdict": rt.verdict,
        "terms": terms,
        "adjunction": adjunction,
    })
}
