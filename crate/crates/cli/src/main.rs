//! `nonrainbow`: validate triangulations, check colorings, compute χ_f and
//! build extremal examples.
//!
//! Exit codes: 0 success, 1 invalid input or bound violation, 2 parse or I/O
//! error, 3 search budget exhausted.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use rayon::prelude::*;

use nonrainbow::coloring::{is_non_rainbow, quotient_graph, rainbow_faces};
use nonrainbow::formats::{
    parse_planar_code, read_coloring, write_coloring, write_triangulation, ReportLine, TriangulationFile,
};
use nonrainbow::generators::{extremal, projective_family, stacked, Construction};
use nonrainbow::homology::is_null_coloring;
use nonrainbow::search::{verify_bound_with, BoundReport, Descent, SearchBudget, SearchError};
use nonrainbow::surface::{SurfaceKind, Triangulation};

#[derive(Parser)]
#[command(name = "nonrainbow", version, about = "Non-rainbow colorings of sphere and projective-plane triangulations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone, Copy)]
struct SearchArgs {
    /// Abort a search after this many nodes (exit code 3).
    #[arg(long)]
    budget: Option<u64>,
    /// Start the χ_f descent at n instead of at the bound, so that a
    /// coloring beating the bound would be found.
    #[arg(long)]
    defensive: bool,
}

impl SearchArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            max_nodes: self.budget,
            ..SearchBudget::default()
        }
    }

    fn descent(&self) -> Descent {
        if self.defensive {
            Descent::FromVertexCount
        } else {
            Descent::FromBound
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a triangulation file and print its surface and counts.
    Validate { path: PathBuf },
    /// Evaluate a coloring on a triangulation.
    Check { triangulation: PathBuf, coloring: PathBuf },
    /// Compute χ_f and compare it with the bound.
    Chif {
        path: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Write a triangulation (and, with --extremal, a coloring).
    #[command(group(ArgGroup::new("what").required(true).args(["extremal", "family"])))]
    Generate {
        #[arg(long)]
        surface: SurfaceKind,
        #[arg(long)]
        n: usize,
        /// Construction reaching the bound, with its coloring.
        #[arg(long)]
        extremal: bool,
        /// Stacked triangulation (sphere) or subdivided K6 (projective plane).
        #[arg(long)]
        family: bool,
        /// Output prefix; writes PREFIX.tri and PREFIX.col.
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Compute χ_f for every sphere triangulation in a planar_code file.
    Batch {
        path: PathBuf,
        #[command(flatten)]
        search: SearchArgs,
    },
}

const SEMANTIC: u8 = 1;
const PARSE: u8 = 2;
const BUDGET: u8 = 3;

/// A failed command: the message to print and the exit code.
struct Failure(u8, String);

type CmdResult = Result<(), Failure>;

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))
}

fn load_triangulation(path: &Path) -> Result<Triangulation, Failure> {
    let file = TriangulationFile::parse(&read_text(path)?)
        .map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))?;
    file.into_triangulation()
        .map_err(|e| Failure(SEMANTIC, format!("{}: invalid triangulation: {e}", path.display())))
}

fn search_failure(e: SearchError) -> Failure {
    match e {
        SearchError::BudgetExhausted { .. } => Failure(BUDGET, e.to_string()),
        other => Failure(SEMANTIC, other.to_string()),
    }
}

fn stem(path: &Path) -> String {
    path.file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

fn cmd_validate(path: &Path) -> CmdResult {
    let t = load_triangulation(path)?;
    println!(
        "{} n={} m={} F={}",
        t.kind(),
        t.vertex_count(),
        t.edge_count(),
        t.face_count()
    );
    Ok(())
}

fn cmd_check(tri: &Path, col: &Path) -> CmdResult {
    let t = load_triangulation(tri)?;
    let f = read_coloring(&read_text(col)?, t.vertex_count())
        .map_err(|e| Failure(PARSE, format!("{}: {e}", col.display())))?
        .map_err(|e| Failure(SEMANTIC, format!("{}: {e}", col.display())))?;
    let null = is_null_coloring(t.skeleton(), &f).map_err(|e| Failure(SEMANTIC, e.to_string()))?;
    let quotient = quotient_graph(t.skeleton(), &f);
    let rainbow: Vec<String> = rainbow_faces(&t, &f).iter().map(ToString::to_string).collect();
    let edges: Vec<String> = quotient.edges().iter().map(|(i, j)| format!("{i}-{j}")).collect();
    println!(
        "{}\tn={}\tk={}\tnon_rainbow={}\tnull={}\tquotient_forest={}\trainbow_faces={}\tquotient_edges={}",
        stem(tri),
        t.vertex_count(),
        f.k(),
        is_non_rainbow(&t, &f),
        null,
        quotient.is_forest(),
        rainbow.join(";"),
        edges.join(",")
    );
    Ok(())
}

/// Prints the report line; a bound violation is printed too, then fails.
fn emit(id: &str, result: Result<BoundReport, SearchError>) -> CmdResult {
    match result {
        Ok(report) => {
            println!("{}", ReportLine::from_report(id, &report).to_tsv());
            Ok(())
        }
        Err(SearchError::BoundViolation(report)) => {
            println!("{}", ReportLine::from_report(id, &report).to_tsv());
            Err(Failure(
                SEMANTIC,
                format!("{id}: COUNTEREXAMPLE chi_f = {} > bound {}", report.chi_f, report.bound),
            ))
        }
        Err(e) => Err(search_failure(e)),
    }
}

fn cmd_chif(path: &Path, search: SearchArgs) -> CmdResult {
    let t = load_triangulation(path)?;
    emit(&stem(path), verify_bound_with(&t, &search.budget(), search.descent()))
}

fn write_file(path: &Path, contents: &str) -> CmdResult {
    std::fs::write(path, contents).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut s = prefix.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn cmd_generate(surface: SurfaceKind, n: usize, extremal_mode: bool, out: &Path, search: SearchArgs) -> CmdResult {
    let fail = |e: nonrainbow::generators::GeneratorError| match e {
        nonrainbow::generators::GeneratorError::Search(s) => search_failure(s),
        other => Failure(SEMANTIC, other.to_string()),
    };
    if extremal_mode {
        let w = extremal(n, surface, &search.budget()).map_err(fail)?;
        write_file(&with_extension(out, "tri"), &write_triangulation(&w.triangulation))?;
        write_file(&with_extension(out, "col"), &write_coloring(&w.coloring))?;
        let how = match &w.construction {
            Construction::Subdivision { base_vertices, subdivided } => {
                format!("subdivision base={base_vertices} subdivided={}", subdivided.len())
            }
            Construction::Explicit => "explicit".to_string(),
            Construction::Search { tight } => format!("search tight={}", u8::from(*tight)),
        };
        println!("{surface} n={n} colors={} bound={} {how}", w.colors, w.bound);
    } else {
        let t = match surface {
            SurfaceKind::Sphere => stacked(n, &[]),
            SurfaceKind::ProjectivePlane => projective_family(n, &[]),
        }
        .map_err(fail)?;
        write_file(&with_extension(out, "tri"), &write_triangulation(&t))?;
        println!("{surface} n={} m={} F={}", t.vertex_count(), t.edge_count(), t.face_count());
    }
    Ok(())
}

fn cmd_batch(path: &Path, search: SearchArgs) -> CmdResult {
    let bytes = std::fs::read(path).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))?;
    let graphs = parse_planar_code(&bytes).map_err(|e| Failure(PARSE, format!("{}: {e}", path.display())))?;
    let budget = search.budget();
    let descent = search.descent();
    // records run in parallel; collect keeps input order
    let results: Vec<Option<Result<BoundReport, SearchError>>> = graphs
        .par_iter()
        .enumerate()
        .map(|(i, g)| match g.to_triangulation() {
            Ok(t) => Some(verify_bound_with(&t, &budget, descent)),
            Err(e) => {
                eprintln!("record {}: skipped: {e}", i + 1);
                None
            }
        })
        .collect();

    let mut worst: Option<Failure> = None;
    for (i, result) in results.into_iter().enumerate() {
        let Some(result) = result else { continue };
        if let Err(Failure(code, msg)) = emit(&(i + 1).to_string(), result) {
            eprintln!("record {}: {msg}", i + 1);
            // a violation outranks an exhausted budget
            if worst.as_ref().is_none_or(|Failure(w, _)| code == SEMANTIC && *w != SEMANTIC) {
                worst = Some(Failure(code, msg));
            }
        }
    }
    match worst {
        Some(Failure(code, _)) => Err(Failure(code, String::new())),
        None => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Check { triangulation, coloring } => cmd_check(&triangulation, &coloring),
        Command::Chif { path, search } => cmd_chif(&path, search),
        Command::Generate { surface, n, extremal, out, search, .. } => cmd_generate(surface, n, extremal, &out, search),
        Command::Batch { path, search } => cmd_batch(&path, search),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}
