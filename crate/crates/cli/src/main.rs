use std::fmt::Write as _;
use std::fs;
use std::io::{ErrorKind, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mckayq_core::arquiver::emit_dot;
use mckayq_core::pipeline::catalog;
use mckayq_core::pipeline::selftest;
use mckayq_core::pipeline::{analyze, JobSpec};
use mckayq_core::Error;

/// McKay and Auslander-Reiten quivers of skew group algebras.
#[derive(Parser)]
#[command(name = "mckayq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a job file, or a built-in example given as catalog:NAME.
    Analyze {
        input: String,
        /// Write the JSON report here ("-" for standard output).
        #[arg(long, value_name = "PATH")]
        json: Option<PathBuf>,
        /// Write the quiver in DOT format here ("-" for standard output).
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
        /// Print how each orbit's multiplicity was decided.
        #[arg(long)]
        explain: bool,
        /// Draw dotted nu arrows even when nu is the identity.
        #[arg(long)]
        show_nu: bool,
        /// Maximum group order before enumeration stops.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
        /// Saturation rounds for the multiplicity solver.
        #[arg(long, value_name = "N")]
        saturation: Option<usize>,
        /// Search bound for norm equations.
        #[arg(long, value_name = "B")]
        norm_search_bound: Option<u32>,
    },
    /// Browse the built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Recompute every catalog entry and run the property checks.
    Selftest {
        /// Only entries whose name starts with PREFIX.
        #[arg(long, value_name = "PREFIX")]
        only: Option<String>,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Show { name: String },
}

const AMBIGUOUS: u8 = 7;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidJob(_) | Error::UnknownEntry(_) | Error::Parse { .. } | Error::InvalidField(_) | Error::InvalidAutomorphism(_) => 2,
        Error::SmallnessViolation(_) => 3,
        Error::NotSurjectiveOntoGalois { .. } => 4,
        Error::SplitFieldTooSmall { .. } => 5,
        Error::CapExceeded(_) => 6,
        Error::Ambiguous(_) => AMBIGUOUS,
        _ => 1,
    }
}

/// Failure with a message and exit code.
struct Failure(String, u8);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string(), exit_code(&e))
    }
}

fn load(input: &str) -> Result<JobSpec, Failure> {
    match input.strip_prefix("catalog:") {
        Some(name) => Ok(catalog::find(name)?.job),
        None => {
            let text = fs::read_to_string(input).map_err(|e| Failure(format!("{input}: {e}"), 2))?;
            Ok(JobSpec::from_json(&text).map_err(|e| Failure(format!("{input}: {e}"), 2))?)
        }
    }
}

fn emit(out: &mut String, path: &PathBuf, text: &str) -> Result<(), Failure> {
    if path.as_os_str() == "-" {
        out.push_str(text);
        Ok(())
    } else {
        fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()), 1))
    }
}

/// Standard output is collected in `out` and written once by `main`.
fn run(cli: Cli, out: &mut String) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze { input, json, dot, explain, show_nu, cap, saturation, norm_search_bound } => {
            let mut job = load(&input)?;
            let o = &mut job.options;
            o.cap = cap.or(o.cap);
            o.saturation = saturation.or(o.saturation);
            o.norm_search_bound = norm_search_bound.or(o.norm_search_bound);
            let a = analyze(&job)?;
            let report = a.report();
            let to_stdout = [&json, &dot].iter().any(|p| p.as_ref().is_some_and(|p| p.as_os_str() == "-"));
            if !to_stdout {
                out.push_str(&report.render_text());
                if explain {
                    out.push_str(&report.explain());
                }
            } else if explain {
                eprint!("{}", report.explain());
            }
            if let Some(p) = &json {
                emit(out, p, &report.to_json())?;
            }
            if let Some(p) = &dot {
                match a.qg() {
                    Some(q) => emit(out, p, &emit_dot(q, show_nu))?,
                    None => eprintln!("no quiver to draw while multiplicities are ambiguous"),
                }
            }
            if report.ambiguous.is_empty() {
                Ok(0)
            } else {
                eprintln!("error: {}", Error::Ambiguous(report.ambiguous.clone()));
                Ok(AMBIGUOUS)
            }
        }
        Command::Catalog { action: CatalogAction::List } => {
            let entries = catalog::entries();
            let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
            for e in entries {
                let _ = writeln!(out, "{:<width$}  {}", e.name, e.summary);
            }
            Ok(0)
        }
        Command::Catalog { action: CatalogAction::Show { name } } => {
            let e = catalog::find(&name)?;
            let _ = writeln!(out, "{}: {}", e.name, e.summary);
            for n in &e.notes {
                let _ = writeln!(out, "  {n}");
            }
            let _ = writeln!(out, "{}", e.job.to_json());
            Ok(0)
        }
        Command::Selftest { only } => {
            let checks = selftest::run(only.as_deref());
            let failed = checks.iter().filter(|c| !c.ok()).count();
            for c in &checks {
                if c.ok() {
                    let _ = writeln!(out, "PASS {}", c.name);
                } else {
                    let _ = writeln!(out, "FAIL {}", c.name);
                    for f in &c.failures {
                        let _ = writeln!(out, "  {f}");
                    }
                }
            }
            let _ = writeln!(out, "{} passed, {failed} failed", checks.len() - failed);
            Ok(if failed == 0 { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let mut out = String::new();
    let code = match run(Cli::parse(), &mut out) {
        Ok(code) => code,
        Err(Failure(msg, code)) => {
            eprintln!("error: {msg}");
            code
        }
    };
    // a reader that stops early (e.g. `| head`) is not an error
    match std::io::stdout().write_all(out.as_bytes()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => {
            eprintln!("error: stdout: {e}");
            ExitCode::from(1)
        }
        _ => ExitCode::from(code),
    }
}
