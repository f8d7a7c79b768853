use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;
use std::sync::Arc;

use super::format::*;
use super::task::TaskSpec;
use super::WorkspaceError;
use crate::algebra::{
    indecomposable_injectives, indecomposable_projectives, simple_modules, Algebra, Arrow, BimoduleRep, ModuleRep, Relation,
    Side,
};
use crate::complex::BoundedComplex;
use crate::error::{AlgebraError, ComplexError};
use crate::linalg::{ExactMatrix, Field, Scalar};
use crate::samples;
use crate::validate::PseudoDualizingCandidate;

/// A fully verified workspace: every object satisfies its invariants and every name
/// referenced anywhere resolves.
#[derive(Debug)]
pub struct Workspace {
    pub field: Field,
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub modules: BTreeMap<String, ModuleRep>,
    pub bimodules: BTreeMap<String, BimoduleRep>,
    pub complexes: BTreeMap<String, BoundedComplex>,
    pub candidates: BTreeMap<String, Arc<PseudoDualizingCandidate>>,
    pub tasks: Vec<TaskSpec>,
    canonical: WorkspaceFile,
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Workspace, WorkspaceError> {
        Workspace::load_with(path, None)
    }

    /// Loads `path`, optionally reinterpreting every scalar over `field`.
    pub fn load_with(path: &Path, field: Option<Field>) -> Result<Workspace, WorkspaceError> {
        let text = std::fs::read_to_string(path).map_err(|e| WorkspaceError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Workspace::from_json(&text, field)
    }

    pub fn from_json(text: &str, field: Option<Field>) -> Result<Workspace, WorkspaceError> {
        let file: WorkspaceFile = serde_json::from_str(text).map_err(|e| WorkspaceError::Schema {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Workspace::from_file(file, field)
    }

    pub fn from_file(mut file: WorkspaceFile, field: Option<Field>) -> Result<Workspace, WorkspaceError> {
        let field = match field {
            Some(f) => f,
            None => parse_field(&file.field)?,
        };
        file.field = field_spec(field);
        let mut r = Resolver {
            field,
            file: file.clone(),
            algebras: BTreeMap::new(),
            modules: BTreeMap::new(),
            bimodules: BTreeMap::new(),
            complexes: BTreeMap::new(),
            visiting: BTreeSet::new(),
        };
        for name in file.algebras.keys() {
            r.algebra(name, "algebras")?;
        }
        for name in file.modules.keys() {
            r.module(name, "modules")?;
        }
        for name in file.bimodules.keys() {
            r.bimodule(name, "bimodules")?;
        }
        for name in file.complexes.keys() {
            r.complex(name, "complexes")?;
        }
        let mut candidates = BTreeMap::new();
        for (name, spec) in &file.candidates {
            let at = format!("candidates.{name}");
            let l = r.complex(&spec.complex, &at)?;
            let c = match (spec.d1, spec.d2) {
                (None, None) => PseudoDualizingCandidate::tight(l),
                (d1, d2) => {
                    let (lo, hi) = l.support().unwrap_or((0, 0));
                    let d1 = d1.unwrap_or(-lo.min(0));
                    let d2 = d2.unwrap_or(hi.max(0));
                    PseudoDualizingCandidate::new(l, d1, d2).map_err(|e| invalid(&at, e))?
                }
            };
            candidates.insert(name.clone(), Arc::new(c));
        }
        let mut tasks = Vec::new();
        for (i, raw) in file.tasks.iter().enumerate() {
            tasks.push(TaskSpec::parse(i, raw)?);
        }
        let mut ws = Workspace {
            field,
            algebras: r.algebras,
            modules: r.modules,
            bimodules: r.bimodules,
            complexes: r.complexes,
            candidates,
            tasks: Vec::new(),
            canonical: file,
        };
        for (i, t) in tasks.iter_mut().enumerate() {
            t.task.canonicalize(&ws, i)?;
        }
        ws.canonical.algebras = canonical_algebras(&ws.canonical.algebras, field)?;
        ws.canonical.modules = canonical_modules(&ws.canonical.modules, field)?;
        ws.canonical.bimodules = canonical_bimodules(&ws.canonical.bimodules, field)?;
        ws.canonical.complexes = canonical_complexes(&ws.canonical.complexes, field)?;
        ws.canonical.tasks = tasks.iter().map(TaskSpec::to_value).collect();
        ws.tasks = tasks;
        Ok(ws)
    }

    /// The workspace in canonical form: sorted keys, reduced scalars, defaults spelled out.
    pub fn to_canonical_json(&self) -> String {
        canonical_json(&self.canonical)
    }

    pub fn save(&self, path: &Path) -> Result<(), WorkspaceError> {
        write_text(path, &self.to_canonical_json())
    }

    pub fn file(&self) -> &WorkspaceFile {
        &self.canonical
    }

    pub fn candidate(&self, name: &str, at: &str) -> Result<&Arc<PseudoDualizingCandidate>, WorkspaceError> {
        self.candidates.get(name).ok_or_else(|| unresolved(at, "candidate", name))
    }

    /// A module by name, or the underlying one-sided module of a named bimodule.
    pub fn module(&self, name: &str, at: &str) -> Result<ModuleRep, WorkspaceError> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        Err(unresolved(at, "module", name))
    }

    /// A complex by name; a module or bimodule name denotes that object in degree zero.
    pub fn complex(&self, name: &str, at: &str) -> Result<BoundedComplex, WorkspaceError> {
        if let Some(c) = self.complexes.get(name) {
            return Ok(c.clone());
        }
        if let Some(m) = self.modules.get(name) {
            return Ok(BoundedComplex::from_module(m, 0));
        }
        if let Some(b) = self.bimodules.get(name) {
            return Ok(BoundedComplex::concentrated(b.clone(), 0));
        }
        Err(unresolved(at, "complex", name))
    }

    pub fn parse_matrix(&self, m: &JsonMatrix, at: &str) -> Result<ExactMatrix, WorkspaceError> {
        parse_matrix(self.field, m, None, at)
    }
}

/// Serializes through `serde_json::Value`, whose maps keep keys sorted.
pub fn canonical_json<T: serde::Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("workspace values serialize");
    let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
    s.push('\n');
    s
}

pub(crate) fn write_text(path: &Path, text: &str) -> Result<(), WorkspaceError> {
    std::fs::write(path, text).map_err(|e| WorkspaceError::Io {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

pub(crate) fn invalid(at: &str, e: impl Into<ComplexError>) -> WorkspaceError {
    WorkspaceError::Invalid {
        at: at.to_string(),
        source: e.into(),
    }
}

pub(crate) fn unresolved(at: &str, kind: &'static str, name: &str) -> WorkspaceError {
    WorkspaceError::Unresolved {
        at: at.to_string(),
        kind,
        name: name.to_string(),
    }
}

pub fn parse_field(spec: &FieldSpec) -> Result<Field, WorkspaceError> {
    match spec {
        FieldSpec::Named(n) if n == "rationals" || n == "Q" => Ok(Field::Rationals),
        FieldSpec::Named(n) => match n.strip_prefix("F").and_then(|p| p.parse::<u32>().ok()) {
            Some(p) => Field::prime(p).map_err(|e| invalid("field", e)),
            None => Err(WorkspaceError::Field(n.clone())),
        },
        FieldSpec::Prime { prime } => Field::prime(*prime).map_err(|e| invalid("field", e)),
    }
}

fn field_spec(f: Field) -> FieldSpec {
    match f {
        Field::Rationals => FieldSpec::Named("rationals".into()),
        Field::Prime(p) => FieldSpec::Prime { prime: p },
    }
}

fn parse_scalar(field: Field, s: &JsonScalar, at: &str) -> Result<Scalar, WorkspaceError> {
    s.parse(field).map_err(|e| invalid(at, e))
}

fn canon_scalar(field: Field, s: &JsonScalar) -> Result<JsonScalar, WorkspaceError> {
    Ok(JsonScalar::canonical(&parse_scalar(field, s, "")?))
}

fn parse_matrix(field: Field, m: &JsonMatrix, shape: Option<(usize, usize)>, at: &str) -> Result<ExactMatrix, WorkspaceError> {
    let shape_err = |message: String| WorkspaceError::Shape {
        at: at.to_string(),
        message,
    };
    // An empty array has no rows; its width comes from the context.
    let cols = m.first().map_or(shape.map_or(0, |s| s.1), Vec::len);
    if m.iter().any(|r| r.len() != cols) {
        return Err(shape_err("rows of different lengths".into()));
    }
    let mut out = ExactMatrix::zeros(field, m.len(), cols);
    for (i, row) in m.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            out.set(i, j, parse_scalar(field, v, at)?);
        }
    }
    match shape {
        Some(s) if out.shape() != s => Err(shape_err(format!(
            "expected a {}x{} matrix, found {}x{}",
            s.0,
            s.1,
            out.rows(),
            out.cols()
        ))),
        _ => Ok(out),
    }
}

fn canon_matrix(field: Field, m: &JsonMatrix) -> Result<JsonMatrix, WorkspaceError> {
    m.iter().map(|r| r.iter().map(|s| canon_scalar(field, s)).collect()).collect()
}

pub(crate) fn canon_matrices(field: Field, ms: &[JsonMatrix]) -> Result<Vec<JsonMatrix>, WorkspaceError> {
    ms.iter().map(|m| canon_matrix(field, m)).collect()
}

pub(crate) fn canon_json_matrix(field: Field, m: &JsonMatrix) -> Result<JsonMatrix, WorkspaceError> {
    canon_matrix(field, m)
}

fn canonical_algebras(
    specs: &BTreeMap<String, AlgebraSpec>,
    field: Field,
) -> Result<BTreeMap<String, AlgebraSpec>, WorkspaceError> {
    let mut out = BTreeMap::new();
    for (name, spec) in specs {
        let c = match spec {
            AlgebraSpec::Path {
                vertices,
                arrows,
                relations,
            } => AlgebraSpec::Path {
                vertices: *vertices,
                arrows: arrows.clone(),
                relations: relations
                    .iter()
                    .map(|rel| rel.iter().map(|(c, w)| Ok((canon_scalar(field, c)?, w.clone()))).collect())
                    .collect::<Result<_, WorkspaceError>>()?,
            },
            AlgebraSpec::Structure { labels, constants, unit } => AlgebraSpec::Structure {
                labels: labels.clone(),
                constants: constants.iter().map(|m| canon_matrix(field, m)).collect::<Result<_, _>>()?,
                unit: unit.iter().map(|s| canon_scalar(field, s)).collect::<Result<_, _>>()?,
            },
            other => other.clone(),
        };
        out.insert(name.clone(), c);
    }
    Ok(out)
}

fn canonical_modules(specs: &BTreeMap<String, ModuleSpec>, field: Field) -> Result<BTreeMap<String, ModuleSpec>, WorkspaceError> {
    let mut out = BTreeMap::new();
    for (name, spec) in specs {
        let c = match spec {
            ModuleSpec::Actions { algebra, side, matrices } => ModuleSpec::Actions {
                algebra: algebra.clone(),
                side: *side,
                matrices: canon_matrices(field, matrices)?,
            },
            other => other.clone(),
        };
        out.insert(name.clone(), c);
    }
    Ok(out)
}

fn canonical_bimodules(
    specs: &BTreeMap<String, BimoduleSpec>,
    field: Field,
) -> Result<BTreeMap<String, BimoduleSpec>, WorkspaceError> {
    let mut out = BTreeMap::new();
    for (name, spec) in specs {
        let c = match spec {
            BimoduleSpec::Actions {
                left,
                right,
                left_matrices,
                right_matrices,
            } => BimoduleSpec::Actions {
                left: left.clone(),
                right: right.clone(),
                left_matrices: canon_matrices(field, left_matrices)?,
                right_matrices: canon_matrices(field, right_matrices)?,
            },
            other => other.clone(),
        };
        out.insert(name.clone(), c);
    }
    Ok(out)
}

fn canonical_complexes(
    specs: &BTreeMap<String, ComplexSpec>,
    field: Field,
) -> Result<BTreeMap<String, ComplexSpec>, WorkspaceError> {
    let mut out = BTreeMap::new();
    for (name, spec) in specs {
        let mut terms = BTreeMap::new();
        for (deg, t) in &spec.terms {
            terms.insert(
                *deg,
                TermSpec {
                    module: t.module.clone(),
                    differential: t.differential.as_ref().map(|d| canon_matrix(field, d)).transpose()?,
                },
            );
        }
        out.insert(name.clone(), ComplexSpec { terms });
    }
    Ok(out)
}

struct Resolver {
    field: Field,
    file: WorkspaceFile,
    algebras: BTreeMap<String, Arc<Algebra>>,
    modules: BTreeMap<String, ModuleRep>,
    bimodules: BTreeMap<String, BimoduleRep>,
    complexes: BTreeMap<String, BoundedComplex>,
    visiting: BTreeSet<String>,
}

impl Resolver {
    fn enter(&mut self, key: String) -> Result<(), WorkspaceError> {
        if !self.visiting.insert(key.clone()) {
            return Err(WorkspaceError::Cycle { at: key });
        }
        Ok(())
    }

    fn algebra(&mut self, name: &str, at: &str) -> Result<Arc<Algebra>, WorkspaceError> {
        if let Some(a) = self.algebras.get(name) {
            return Ok(a.clone());
        }
        let Some(spec) = self.file.algebras.get(name).cloned() else {
            return Err(unresolved(at, "algebra", name));
        };
        let here = format!("algebras.{name}");
        self.enter(here.clone())?;
        let field = self.field;
        let a = match spec {
            AlgebraSpec::Sample(s) => samples::all(field)
                .into_iter()
                .find(|(n, _)| *n == s)
                .map(|(_, a)| a)
                .ok_or_else(|| unresolved(&here, "sample algebra", &s))?,
            AlgebraSpec::Path {
                vertices,
                arrows,
                relations,
            } => {
                let arrows: Vec<Arrow> = arrows
                    .iter()
                    .map(|a| Arrow {
                        source: a.source,
                        target: a.target,
                        label: a.label.clone(),
                    })
                    .collect();
                let mut rels: Vec<Relation> = Vec::new();
                for rel in &relations {
                    let mut r = Vec::new();
                    for (c, w) in rel {
                        r.push((parse_scalar(field, c, &here)?, w.clone()));
                    }
                    rels.push(r);
                }
                Arc::new(Algebra::path_algebra(field, vertices, &arrows, &rels).map_err(|e| invalid(&here, e))?)
            }
            AlgebraSpec::Structure { labels, constants, unit } => {
                let mut structure = Vec::new();
                for row in &constants {
                    let mut out = Vec::new();
                    for v in row {
                        out.push(v.iter().map(|s| parse_scalar(field, s, &here)).collect::<Result<Vec<_>, _>>()?);
                    }
                    structure.push(out);
                }
                let unit = unit.iter().map(|s| parse_scalar(field, s, &here)).collect::<Result<Vec<_>, _>>()?;
                Arc::new(Algebra::from_structure_constants(field, labels, &structure, &unit).map_err(|e| invalid(&here, e))?)
            }
            AlgebraSpec::Opposite(of) => self.algebra(&of, &here)?.opposite_arc(),
        };
        self.visiting.remove(&here);
        self.algebras.insert(name.to_string(), a.clone());
        Ok(a)
    }

    fn indexed(&mut self, spec: &IndexedSpec, here: &str, kind: &str) -> Result<ModuleRep, WorkspaceError> {
        let a = self.algebra(&spec.algebra, here)?;
        let list = match kind {
            "simple" => simple_modules(&a),
            "projective" => indecomposable_projectives(&a),
            _ => indecomposable_injectives(&a),
        }
        .map_err(|e| invalid(here, e))?;
        let n = list.len();
        list.into_iter().nth(spec.index).ok_or_else(|| WorkspaceError::Shape {
            at: here.to_string(),
            message: format!("{kind} index {} out of range ({n} available)", spec.index),
        })
    }

    fn module(&mut self, name: &str, at: &str) -> Result<ModuleRep, WorkspaceError> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        let Some(spec) = self.file.modules.get(name).cloned() else {
            return Err(unresolved(at, "module", name));
        };
        let here = format!("modules.{name}");
        self.enter(here.clone())?;
        let m = match spec {
            ModuleSpec::Actions { algebra, side, matrices } => {
                let a = self.algebra(&algebra, &here)?;
                if matrices.len() != a.dim() {
                    return Err(WorkspaceError::Shape {
                        at: here,
                        message: format!("{} action matrices for an algebra of dimension {}", matrices.len(), a.dim()),
                    });
                }
                let n = matrices.first().map_or(0, Vec::len);
                let acts = matrices
                    .iter()
                    .map(|m| parse_matrix(self.field, m, Some((n, n)), &here))
                    .collect::<Result<Vec<_>, _>>()?;
                let side = match side {
                    SideSpec::Left => Side::Left,
                    SideSpec::Right => Side::Right,
                };
                ModuleRep::new(a, side, acts).map_err(|e| invalid(&here, e))?
            }
            ModuleSpec::Regular(alg) => ModuleRep::regular(self.algebra(&alg, &here)?, Side::Left),
            ModuleSpec::Simple(s) => self.indexed(&s, &here, "simple")?,
            ModuleSpec::Projective(s) => self.indexed(&s, &here, "projective")?,
            ModuleSpec::Injective(s) => self.indexed(&s, &here, "injective")?,
            ModuleSpec::DirectSum(parts) => {
                let ms = parts.iter().map(|p| self.module(p, &here)).collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&ModuleRep> = ms.iter().collect();
                ModuleRep::direct_sum(&refs).map_err(|e| invalid(&here, e))?
            }
        };
        self.visiting.remove(&here);
        self.modules.insert(name.to_string(), m.clone());
        Ok(m)
    }

    fn bimodule(&mut self, name: &str, at: &str) -> Result<BimoduleRep, WorkspaceError> {
        if let Some(b) = self.bimodules.get(name) {
            return Ok(b.clone());
        }
        let Some(spec) = self.file.bimodules.get(name).cloned() else {
            return Err(unresolved(at, "bimodule", name));
        };
        let here = format!("bimodules.{name}");
        self.enter(here.clone())?;
        let b = match spec {
            BimoduleSpec::Actions {
                left,
                right,
                left_matrices,
                right_matrices,
            } => {
                let a = self.algebra(&left, &here)?;
                let b = self.algebra(&right, &here)?;
                let n = left_matrices.first().or(right_matrices.first()).map_or(0, Vec::len);
                let parse = |ms: &[JsonMatrix]| {
                    ms.iter()
                        .map(|m| parse_matrix(self.field, m, Some((n, n)), &here))
                        .collect::<Result<Vec<_>, _>>()
                };
                let (l, r) = (parse(&left_matrices)?, parse(&right_matrices)?);
                BimoduleRep::new(a, b, l, r).map_err(|e| invalid(&here, e))?
            }
            BimoduleSpec::Regular(alg) => BimoduleRep::regular(self.algebra(&alg, &here)?),
            BimoduleSpec::Dual(of) => self.bimodule(&of, &here)?.dual(),
            BimoduleSpec::Simple(alg) => {
                let a = self.algebra(&alg, &here)?;
                if !a.unit().column(0).iter().enumerate().all(|(i, s)| s.is_one() == (i == 0) && (i == 0 || s.is_zero())) {
                    return Err(invalid(
                        &here,
                        AlgebraError::Malformed("the simple bimodule needs the unit as first basis element".into()),
                    ));
                }
                samples::simple_bimodule(&a).map_err(|e| invalid(&here, e))?
            }
            BimoduleSpec::DirectSum(parts) => {
                let bs = parts.iter().map(|p| self.bimodule(p, &here)).collect::<Result<Vec<_>, _>>()?;
                let refs: Vec<&BimoduleRep> = bs.iter().collect();
                BimoduleRep::direct_sum(&refs).map_err(|e| invalid(&here, e))?
            }
        };
        self.visiting.remove(&here);
        self.bimodules.insert(name.to_string(), b.clone());
        Ok(b)
    }

    fn term(&mut self, name: &str, at: &str) -> Result<BimoduleRep, WorkspaceError> {
        if self.file.modules.contains_key(name) {
            return Ok(BimoduleRep::from_module(&self.module(name, at)?));
        }
        if self.file.bimodules.contains_key(name) {
            return self.bimodule(name, at);
        }
        Err(unresolved(at, "module or bimodule", name))
    }

    fn complex(&mut self, name: &str, at: &str) -> Result<BoundedComplex, WorkspaceError> {
        if let Some(c) = self.complexes.get(name) {
            return Ok(c.clone());
        }
        let spec = match self.file.complexes.get(name) {
            Some(s) => s.clone(),
            // a bare module or bimodule denotes itself in degree zero
            None => {
                let t = self.term(name, at)?;
                return Ok(BoundedComplex::concentrated(t, 0));
            }
        };
        let here = format!("complexes.{name}");
        let Some((&lo, _)) = spec.terms.iter().next() else {
            return Err(WorkspaceError::Shape {
                at: here,
                message: "a complex needs at least one term".into(),
            });
        };
        let hi = *spec.terms.keys().last().unwrap();
        let mut terms = Vec::new();
        for n in lo..=hi {
            let Some(t) = spec.terms.get(&n) else {
                return Err(WorkspaceError::Shape {
                    at: here,
                    message: format!("degree {n} is missing between {lo} and {hi}"),
                });
            };
            terms.push(self.term(&t.module, &here)?);
        }
        let mut diffs = Vec::new();
        for n in lo..hi {
            let k = (n - lo) as usize;
            let shape = (terms[k + 1].dim(), terms[k].dim());
            let d = match &spec.terms[&n].differential {
                Some(m) => parse_matrix(self.field, m, Some(shape), &format!("{here}.terms.{n}.differential"))?,
                None => ExactMatrix::zeros(self.field, shape.0, shape.1),
            };
            diffs.push(d);
        }
        if let Some(d) = &spec.terms[&hi].differential {
            let m = parse_matrix(self.field, d, None, &here)?;
            if !m.is_zero() {
                return Err(WorkspaceError::Shape {
                    at: format!("{here}.terms.{hi}.differential"),
                    message: "the top term has no target for a nonzero differential".into(),
                });
            }
        }
        let (a, b) = (terms[0].left_algebra().clone(), terms[0].right_algebra().clone());
        let c = BoundedComplex::new(a, b, lo, terms, diffs).map_err(|e| invalid(&here, e))?;
        self.complexes.insert(name.to_string(), c.clone());
        Ok(c)
    }
}

pub(crate) fn check_task_ref(ws: &Workspace, kind: &str, name: &str, at: &str) -> Result<(), WorkspaceError> {
    let ok = match kind {
        "candidate" => ws.candidates.contains_key(name),
        "module" => ws.modules.contains_key(name),
        _ => ws.complexes.contains_key(name) || ws.modules.contains_key(name) || ws.bimodules.contains_key(name),
    };
    if ok {
        Ok(())
    } else {
        Err(unresolved(at, if kind == "candidate" { "candidate" } else if kind == "module" { "module" } else { "complex" }, name))
    }
}
