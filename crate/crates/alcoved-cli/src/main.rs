//! Command line frontend: validate matrices, classify the polyhedra they
//! represent, list labeled vertices, export meshes, and reproduce the orbit
//! computation behind the eight-class result.
//!
//! Exit codes: 0 on success, 1 on domain failures (the matrix is not normal
//! idempotent, the body is degenerate), 2 on parse failures.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use alcoved::classify::{analyze, compute_orbits};
use alcoved::ni::{check_ni, NiMatrix};
use alcoved::polytope::DEFAULT_MESH_PRECISION;

use alcoved_cli::input::{self, ParseError};
use alcoved_cli::report::{vertex_line, Report};

#[derive(Parser)]
#[command(
    name = "alcoved",
    version,
    about = "Alcoved polyhedra from max-plus matrices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check whether a matrix is normal idempotent and visualized
    Check {
        /// Matrix file (whitespace 4x4 grid or JSON array of arrays)
        path: PathBuf,
    },
    /// Full classification report for a matrix
    Classify {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Labeled vertex table, sorted lexicographically
    Vertices {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Export the polyhedron as an OFF mesh
    Mesh {
        path: PathBuf,
        /// Output file; stdout when omitted
        #[arg(long)]
        out: Option<PathBuf>,
        /// Significant decimal digits for vertex coordinates
        #[arg(long, default_value_t = DEFAULT_MESH_PRECISION)]
        precision: usize,
    },
    /// The eight orbits of sign tuples under the symmetry action
    Orbits {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

enum CliError {
    Parse(String),
    Domain(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> CliError {
        CliError::Parse(e.to_string())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Domain(m) => write!(f, "{m}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("{e}");
            match e {
                CliError::Domain(_) => ExitCode::from(1),
                CliError::Parse(_) => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Check { path } => check(&path),
        Command::Classify { path, format } => classify(&path, format),
        Command::Vertices { path, format } => vertices(&path, format),
        Command::Mesh {
            path,
            out,
            precision,
        } => mesh(&path, out.as_deref(), precision),
        Command::Orbits { format } => orbits(format),
    }
}

fn load_ni(path: &std::path::Path) -> Result<NiMatrix, CliError> {
    let m = input::read_matrix(path)?;
    check_ni(m).map_err(|e| CliError::Domain(format!("not a normal idempotent matrix: {e}")))
}

fn check(path: &std::path::Path) -> Result<(), CliError> {
    let m = input::read_matrix(path)?;
    match check_ni(m) {
        Ok(ni) => {
            let vi = if ni.is_visualized() { "yes" } else { "no" };
            println!("NI: yes, VI: {vi}");
            Ok(())
        }
        Err(e) => {
            println!("NI: no, VI: no");
            Err(CliError::Domain(format!("violation: {e}")))
        }
    }
}

fn classify(path: &std::path::Path, format: Format) -> Result<(), CliError> {
    let ni = load_ni(path)?;
    let analysis = analyze(&ni).map_err(|e| CliError::Domain(e.to_string()))?;
    let report = Report::from_analysis(&ni, &analysis);
    match format {
        Format::Text => print!("{report}"),
        Format::Json => print!("{}", report.to_json()),
    }
    Ok(())
}

fn vertices(path: &std::path::Path, format: Format) -> Result<(), CliError> {
    let ni = load_ni(path)?;
    let analysis = analyze(&ni).map_err(|e| CliError::Domain(e.to_string()))?;
    let report = Report::from_analysis(&ni, &analysis);
    match format {
        Format::Text => {
            for v in &report.vertices {
                println!("{}", vertex_line(v));
            }
        }
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.vertices).expect("serializable");
            s.push('\n');
            print!("{s}");
        }
    }
    Ok(())
}

fn mesh(
    path: &std::path::Path,
    out: Option<&std::path::Path>,
    precision: usize,
) -> Result<(), CliError> {
    if precision == 0 {
        return Err(CliError::Parse(
            "--precision must be at least 1".to_string(),
        ));
    }
    let ni = load_ni(path)?;
    let polytope =
        alcoved::polytope::AlcovedPolytope::of(&ni).map_err(|e| CliError::Domain(e.to_string()))?;
    let off = polytope
        .export_off(precision)
        .map_err(|e| CliError::Domain(e.to_string()))?;
    match out {
        Some(file) => std::fs::write(file, off)
            .map_err(|e| CliError::Domain(format!("cannot write {}: {e}", file.display())))?,
        None => print!("{off}"),
    }
    Ok(())
}

#[derive(Serialize)]
struct OrbitRow {
    qe: u8,
    size: usize,
    representative: String,
    combinatorial_class: u8,
    orbit: Vec<String>,
}

fn orbits(format: Format) -> Result<(), CliError> {
    let classes = compute_orbits();
    match format {
        Format::Text => {
            println!("orbits of the 62 non-constant sign 6-tuples: 8");
            for c in classes {
                println!(
                    "QE{}  size {:>2}  representative {}  combinatorial class {}",
                    c.index(),
                    c.size(),
                    c.representative(),
                    c.combinatorial_class()
                );
            }
            let mut sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
            sizes.sort_unstable();
            let total: usize = sizes.iter().sum();
            let sizes: Vec<String> = sizes.iter().map(|s| s.to_string()).collect();
            println!("sizes: {} (sum {total})", sizes.join(" "));
        }
        Format::Json => {
            let rows: Vec<OrbitRow> = classes
                .iter()
                .map(|c| OrbitRow {
                    qe: c.index(),
                    size: c.size(),
                    representative: c.representative().to_string(),
                    combinatorial_class: c.combinatorial_class(),
                    orbit: c.orbit().iter().map(|t| t.to_string()).collect(),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&rows).expect("serializable");
            s.push('\n');
            print!("{s}");
        }
    }
    Ok(())
}
