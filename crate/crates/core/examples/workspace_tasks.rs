//! Loading a JSON workspace and running its tasks, as the command-line tool does.

use std::path::Path;

use dualcheck::io::{run_tasks, RunOptions, Workspace};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/workspaces/dual_numbers.json").to_string());
    let ws = Workspace::load(Path::new(&path))?;
    let all: Vec<usize> = (0..ws.tasks.len()).collect();
    let report = run_tasks(&ws, &all, RunOptions { seed: 1, ..RunOptions::default() })?;
    for t in &report.tasks {
        let status = t.verdict.as_ref().map(|v| serde_json::to_value(v).unwrap()["status"].clone());
        println!("{} {:?}: {:?}", t.op, t.label, status);
    }
    println!("exit code {}", report.exit_code);
    Ok(())
}
