use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use dualcheck::io::{parse_field, run_spec, RunOptions, RunReport, Task, TaskSpec, Workspace, WorkspaceError};
use dualcheck::io::format::FieldSpec;
use dualcheck::linalg::Field;
use dualcheck::resolution::ResolutionWindow;
use dualcheck::validate::Verdict;

/// Exit status: 0 all exact passes, 1 some failure, 2 window-limited outcomes only,
/// 3 invalid input or a refused computation.
#[derive(Parser)]
#[command(name = "dualcheck", version, about = "Checks for pseudo-dualizing complexes over finite-dimensional algebras")]
struct Cli {
    /// Resolution steps taken below the support of each input.
    #[arg(long, global = true, default_value_t = 8)]
    window: usize,
    /// Reinterpret the workspace over `rationals` or a prime field (`F5` or `5`).
    #[arg(long, global = true)]
    field: Option<String>,
    /// Write the JSON report here (`-` for standard output).
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    /// Seed for randomly generated modules and complexes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Target {
    workspace: PathBuf,
    /// Run only tasks with this label.
    #[arg(long)]
    label: Option<String>,
}

#[derive(Args)]
struct CandidateTarget {
    #[command(flatten)]
    target: Target,
    /// Check this candidate instead of the tasks listed in the workspace.
    #[arg(long)]
    candidate: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Load and re-verify a workspace; optionally write its canonical form.
    Validate {
        workspace: PathBuf,
        #[arg(long)]
        canonical: Option<PathBuf>,
    },
    /// Run every task of the workspace.
    Run(Target),
    Resolve(Target),
    Ext(Target),
    Tor(Target),
    /// Homothety isomorphisms and self-Ext vanishing on both sides.
    CheckPdc(CandidateTarget),
    CheckDedualizing(CandidateTarget),
    CheckDualizing(CandidateTarget),
    Membership(Target),
    ClassAxioms(Target),
    GeneratorStep(Target),
    RelativeIv(Target),
    Roundtrip(Target),
}

fn field_arg(text: &str) -> Result<Field, WorkspaceError> {
    let spec = match text.parse::<u32>() {
        Ok(p) => FieldSpec::Prime { prime: p },
        Err(_) => FieldSpec::Named(text.to_string()),
    };
    parse_field(&spec)
}

fn status(v: &Option<Verdict>, refusal: &Option<String>) -> String {
    match (v, refusal) {
        (Some(Verdict::PassExact { .. }), _) => "pass (exact)".into(),
        (Some(Verdict::PassWithinWindow { from, to }), _) => format!("pass within degrees {from}..={to}"),
        (Some(Verdict::Fail { witness, .. }), _) => format!("FAIL: {witness}"),
        (Some(Verdict::WindowExhausted { reason }), _) => format!("undecided: {reason}"),
        (None, Some(r)) => format!("refused: {r}"),
        (None, None) => "no verdict".into(),
    }
}

fn emit(report: &RunReport, path: Option<&PathBuf>) -> Result<(), WorkspaceError> {
    for t in &report.tasks {
        let label = t.label.as_deref().map(|l| format!(" {l}")).unwrap_or_default();
        let line = format!("[{}] {}{}: {}", t.index, t.op, label, status(&t.verdict, &t.refusal));
        if path.is_some_and(|p| p.as_os_str() == "-") {
            eprintln!("{line}");
        } else {
            println!("{line}");
        }
    }
    match path {
        Some(p) if p.as_os_str() == "-" => print!("{}", report.to_json()),
        Some(p) => std::fs::write(p, report.to_json()).map_err(|e| WorkspaceError::Io {
            path: p.display().to_string(),
            message: e.to_string(),
        })?,
        None => {}
    }
    Ok(())
}

fn run(cli: Cli) -> Result<i32, WorkspaceError> {
    let window = ResolutionWindow::new(cli.window).map_err(|e| WorkspaceError::Invalid {
        at: "--window".into(),
        source: e,
    })?;
    let opts = RunOptions { window, seed: cli.seed };
    let field = cli.field.as_deref().map(field_arg).transpose()?;
    let (target, op, candidate) = match &cli.command {
        Command::Validate { workspace, canonical } => {
            let ws = Workspace::load_with(workspace, field)?;
            println!(
                "{}: {} algebras, {} modules, {} bimodules, {} complexes, {} candidates, {} tasks",
                workspace.display(),
                ws.algebras.len(),
                ws.modules.len(),
                ws.bimodules.len(),
                ws.complexes.len(),
                ws.candidates.len(),
                ws.tasks.len()
            );
            if let Some(p) = canonical {
                ws.save(p)?;
            }
            return Ok(0);
        }
        Command::Run(t) => (t, None, None),
        Command::Resolve(t) => (t, Some("resolve"), None),
        Command::Ext(t) => (t, Some("ext"), None),
        Command::Tor(t) => (t, Some("tor"), None),
        Command::CheckPdc(t) => (&t.target, Some("check-pdc"), t.candidate.clone()),
        Command::CheckDedualizing(t) => (&t.target, Some("check-dedualizing"), t.candidate.clone()),
        Command::CheckDualizing(t) => (&t.target, Some("check-dualizing"), t.candidate.clone()),
        Command::Membership(t) => (t, Some("membership"), None),
        Command::ClassAxioms(t) => (t, Some("class-axioms"), None),
        Command::GeneratorStep(t) => (t, Some("generator-step"), None),
        Command::RelativeIv(t) => (t, Some("relative-iv"), None),
        Command::Roundtrip(t) => (t, Some("roundtrip"), None),
    };
    let ws = Workspace::load_with(&target.workspace, field)?;
    let mut specs: Vec<(usize, TaskSpec)> = ws
        .tasks
        .iter()
        .cloned()
        .enumerate()
        .filter(|(_, t)| op.is_none_or(|op| t.op() == op))
        .filter(|(_, t)| target.label.is_none() || t.label == target.label)
        .collect();
    if let Some(c) = candidate {
        ws.candidate(&c, "--candidate")?;
        let task = match op {
            Some("check-dedualizing") => Task::CheckDedualizing { candidate: c },
            Some("check-dualizing") => Task::CheckDualizing { candidate: c },
            _ => Task::CheckPdc { candidate: c },
        };
        specs = vec![(ws.tasks.len(), TaskSpec { label: None, task })];
    }
    if specs.is_empty() {
        return Err(WorkspaceError::UnknownTask(format!(
            "no {} task in {}",
            op.unwrap_or("matching"),
            target.workspace.display()
        )));
    }
    let results: Vec<Result<_, WorkspaceError>> = std::thread::scope(|s| {
        let handles: Vec<_> = specs.iter().map(|(i, t)| s.spawn(|| run_spec(&ws, t, *i, opts))).collect();
        handles.into_iter().map(|h| h.join().expect("task thread panicked")).collect()
    });
    let tasks = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let report = RunReport::new(&ws, opts, tasks);
    emit(&report, cli.report.as_ref())?;
    Ok(report.exit_code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
