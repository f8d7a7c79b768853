//! JSON workspaces: loading with full re-verification, canonical saving, and task
//! execution with deterministic reports.

pub mod format;
mod task;
mod workspace;

pub use task::{
    combined_exit_code, run_spec, run_task, run_tasks, ResolveKind, RunOptions, RunReport, StrategySpec, StructureSpec,
    Task, TaskReport, TaskSpec, OPS,
};
pub use workspace::{canonical_json, parse_field, Workspace};

use thiserror::Error;

use crate::error::ComplexError;

#[derive(Debug, Error)]
pub enum WorkspaceError {
    #[error("cannot access {path}: {message}")]
    Io { path: String, message: String },
    #[error("schema violation at line {line}, column {column}: {message}")]
    Schema { line: usize, column: usize, message: String },
    #[error("unknown field {0:?} (expected \"rationals\" or {{\"prime\": p}})")]
    Field(String),
    #[error("{at}: {message}")]
    Shape { at: String, message: String },
    #[error("{at}: {source}")]
    Invalid {
        at: String,
        #[source]
        source: ComplexError,
    },
    #[error("{at}: unresolved reference to {kind} {name:?}")]
    Unresolved { at: String, kind: &'static str, name: String },
    #[error("{at}: reference cycle")]
    Cycle { at: String },
    #[error("unknown task {0:?}")]
    UnknownTask(String),
    #[error("task {index}: {message}")]
    BadTask { index: usize, message: String },
}

#[cfg(test)]
mod tests;
