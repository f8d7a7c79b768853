//! The on-disk JSON shapes. Scalars are strings (`"3/7"`) or integers; matrices are
//! row-major nested arrays; complexes map degrees to `{module, differential}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::linalg::{ExactMatrix, Field, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonScalar {
    Int(i64),
    Text(String),
}

impl JsonScalar {
    pub fn parse(&self, field: Field) -> Result<Scalar, crate::error::LinalgError> {
        match self {
            JsonScalar::Int(v) => Ok(field.from_i64(*v)),
            JsonScalar::Text(t) => field.parse(t),
        }
    }

    /// Rationals as strings, residues as integers.
    pub fn canonical(s: &Scalar) -> JsonScalar {
        match s {
            Scalar::Residue(r) => JsonScalar::Int(r.value() as i64),
            Scalar::Rational(_) => JsonScalar::Text(s.to_text()),
        }
    }
}

pub type JsonMatrix = Vec<Vec<JsonScalar>>;

pub fn matrix_to_json(m: &ExactMatrix) -> JsonMatrix {
    m.to_rows().iter().map(|r| r.iter().map(JsonScalar::canonical).collect()).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldSpec {
    /// `"rationals"`.
    Named(String),
    Prime { prime: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowSpec {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum AlgebraSpec {
    /// One of `k`, `kA2`, `k[x]/(x^2)`, `upper-triangular`.
    Sample(String),
    Path {
        vertices: usize,
        arrows: Vec<ArrowSpec>,
        /// Each relation is a list of `[coefficient, [arrow indices in traversal order]]`.
        #[serde(default)]
        relations: Vec<Vec<(JsonScalar, Vec<usize>)>>,
    },
    /// `constants[i][j]` are the coordinates of `e_i e_j`.
    Structure {
        labels: Vec<String>,
        constants: Vec<Vec<Vec<JsonScalar>>>,
        unit: Vec<JsonScalar>,
    },
    Opposite(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "kebab-case")]
pub enum SideSpec {
    #[default]
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexedSpec {
    pub algebra: String,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// `matrices[i]` is the action of the `i`-th basis element.
    Actions {
        algebra: String,
        #[serde(default)]
        side: SideSpec,
        matrices: Vec<JsonMatrix>,
    },
    Regular(String),
    Simple(IndexedSpec),
    Projective(IndexedSpec),
    Injective(IndexedSpec),
    DirectSum(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields)]
pub enum BimoduleSpec {
    Actions {
        left: String,
        right: String,
        left_matrices: Vec<JsonMatrix>,
        right_matrices: Vec<JsonMatrix>,
    },
    Regular(String),
    /// `D(M)` of another bimodule.
    Dual(String),
    /// The one-dimensional bimodule over a local algebra.
    Simple(String),
    DirectSum(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    /// A module (placed as an `A`-`k` bimodule) or a bimodule.
    pub module: String,
    /// `d^n : X^n -> X^{n+1}`; omitted for the top term.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub differential: Option<JsonMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexSpec {
    pub terms: BTreeMap<i32, TermSpec>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CandidateSpec {
    pub complex: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d1: Option<i32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d2: Option<i32>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WorkspaceFile {
    pub field: FieldSpec,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub bimodules: BTreeMap<String, BimoduleSpec>,
    #[serde(default)]
    pub complexes: BTreeMap<String, ComplexSpec>,
    #[serde(default)]
    pub candidates: BTreeMap<String, CandidateSpec>,
    #[serde(default)]
    pub tasks: Vec<serde_json::Value>,
}
