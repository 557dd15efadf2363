use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use qgb_core::bounds::{compare_report, transfer_bound};
use qgb_core::covers::build_cover;
use qgb_core::families::generate;
use qgb_core::io::{graph_to_json, load_cover, load_graph, parse_family};
use qgb_core::linalg::set_tolerance;
use qgb_core::oracle::{fd_spectrum, spectrum, subdivision_spectrum};
use qgb_core::repro::{all_pass, run_many};
use qgb_core::{CoverStrategy, Error, EtaStrategy, Length, ReproCase, Status};

/// Spectral gap bounds for metric graphs.
#[derive(Parser)]
#[command(name = "qgb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check a graph file and print its structural summary.
    Validate { file: PathBuf },
    /// Write a graph from a family string such as `platonic:cube` or `chain:3,2,4`.
    Gen {
        family: String,
        /// Edge length used by the family (default 1).
        #[arg(long)]
        length: Option<Length>,
        /// Output file; stdout when omitted.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Lower bounds on eigenvalues from a cover.
    Bounds {
        file: PathBuf,
        /// star, faces, face_pairs, pumpkin[:order], layered, concatenated, copies:m or file:PATH.
        #[arg(long, default_value = "star")]
        cover: CoverArg,
        /// exact, cycle, nicaise, star, oracle or auto.
        #[arg(long, default_value = "auto")]
        eta: EtaStrategy,
        /// Keep indices up to this one.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Skip the reference eigenvalues in CSV output.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Reference eigenvalues λ₁ ≤ … ≤ λ_count.
    Oracle {
        file: PathBuf,
        /// Subdivision mesh width; lengths must be integer multiples of it.
        #[arg(long, conflicts_with = "ppu")]
        mesh: Option<Length>,
        /// Finite-difference points per unit length.
        #[arg(long)]
        ppu: Option<f64>,
        #[arg(long, default_value_t = 4)]
        count: usize,
    },
    /// Recompute worked examples and compare with tabulated values.
    Repro {
        /// Case name, or `all`.
        #[arg(long, default_value = "all")]
        case: CaseArg,
        #[arg(long, value_enum, default_value_t = ReproFormat::Text)]
        format: ReproFormat,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReproFormat {
    Text,
    Json,
}

#[derive(Clone, Debug)]
enum CaseArg {
    All,
    One(ReproCase),
}

impl FromStr for CaseArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(CaseArg::All),
            _ => s.parse().map(CaseArg::One),
        }
    }
}

#[derive(Clone, Debug)]
enum CoverArg {
    Strategy(CoverStrategy),
    File(PathBuf),
}

impl FromStr for CoverArg {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.strip_prefix("file:") {
            Some(path) => Ok(CoverArg::File(path.into())),
            None => s.parse().map(CoverArg::Strategy),
        }
    }
}

/// A closed stdout (e.g. piped into `head`) is not an error.
fn stdout_result(r: std::io::Result<()>) -> qgb_core::Result<()> {
    match r {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Error::Io(e.to_string())),
        _ => Ok(()),
    }
}

fn emit(out: &str) -> qgb_core::Result<()> {
    let mut stdout = std::io::stdout().lock();
    stdout_result(writeln!(stdout, "{out}"))
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report serialization cannot fail")
}

fn write_or_print(text: &str, output: Option<&Path>) -> qgb_core::Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, format!("{text}\n")).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => emit(text),
    }
}

fn bounds(
    file: &Path,
    cover: &CoverArg,
    eta: EtaStrategy,
    k: Option<usize>,
    format: Format,
    no_oracle: bool,
) -> qgb_core::Result<()> {
    let g = load_graph(file)?;
    let cover = match cover {
        CoverArg::Strategy(s) => build_cover(&g, s)?,
        CoverArg::File(path) => load_cover(&g, path)?,
    };
    let mut report = transfer_bound(&g, &cover, eta)?;
    if let Some(k) = k {
        report.truncate(k);
    }
    for w in &report.warnings {
        eprintln!("warning: {w}");
    }
    match format {
        Format::Json => emit(&to_json(&report)),
        Format::Csv => {
            let count = report.rows.iter().map(|r| r.index).max().unwrap_or(0);
            let oracle = if no_oracle || count == 0 {
                None
            } else {
                match spectrum(&g, count) {
                    Ok(s) => Some(s),
                    Err(e) => {
                        eprintln!("warning: no reference eigenvalues: {e}");
                        None
                    }
                }
            };
            let mut w = csv::Writer::from_writer(std::io::stdout().lock());
            for row in compare_report(std::slice::from_ref(&report), oracle.as_ref()) {
                if let Err(e) = w.serialize(row) {
                    return match e.into_kind() {
                        csv::ErrorKind::Io(io) => stdout_result(Err(io)),
                        other => Err(Error::Io(format!("{other:?}"))),
                    };
                }
            }
            stdout_result(w.flush())
        }
    }
}

fn oracle(file: &Path, mesh: Option<&Length>, ppu: Option<f64>, count: usize) -> qgb_core::Result<()> {
    let g = load_graph(file)?;
    let result = match (mesh, ppu) {
        (Some(h), _) => subdivision_spectrum(&g, h, count)?,
        (None, Some(p)) => fd_spectrum(&g, p, count)?,
        (None, None) => spectrum(&g, count)?,
    };
    emit(&to_json(&result))
}

/// Returns whether every row passed.
fn repro(case: &CaseArg, format: ReproFormat) -> qgb_core::Result<bool> {
    let cases = match case {
        CaseArg::All => ReproCase::all(),
        CaseArg::One(c) => vec![*c],
    };
    let mut rows = Vec::new();
    for result in run_many(&cases) {
        rows.extend(result?);
    }
    match format {
        ReproFormat::Json => emit(&to_json(&rows))?,
        ReproFormat::Text => {
            let mut text = String::new();
            for r in &rows {
                text.push_str(&format!(
                    "{:<4} {:<22} {:<40} computed {:<22.12} expected {:<22} ({:.12}) tol {:e}\n",
                    r.status, r.case, r.id, r.computed, r.expected_form, r.expected, r.tolerance
                ));
            }
            let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
            text.push_str(&format!(
                "{} rows: {} PASS, {} FAIL, {} INFO",
                rows.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Info)
            ));
            emit(&text)?;
        }
    }
    Ok(all_pass(&rows))
}

fn run(cli: Cli) -> qgb_core::Result<bool> {
    match cli.command {
        Command::Validate { file } => {
            let g = load_graph(&file)?;
            emit(&to_json(&g.validate()?))?;
        }
        Command::Gen { family, length, output } => {
            let g = generate(&parse_family(&family, length)?)?;
            write_or_print(&graph_to_json(&g), output.as_deref())?;
        }
        Command::Bounds { file, cover, eta, k, format, no_oracle } => bounds(&file, &cover, eta, k, format, no_oracle)?,
        Command::Oracle { file, mesh, ppu, count } => oracle(&file, mesh.as_ref(), ppu, count)?,
        Command::Repro { case, format } => return repro(&case, format),
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(tol) = std::env::var("QGB_TOL") {
        match tol.parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => set_tolerance(t),
            _ => {
                eprintln!("error: QGB_TOL must be a positive number, got `{tol}`");
                return ExitCode::from(2);
            }
        }
    }
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let body = serde_json::json!({ "error": e.kind(), "message": e.to_string() });
            eprintln!("{body}");
            ExitCode::from(1)
        }
    }
}
