//! Command-line front end: generate corpus hypergraphs, analyze one input,
//! or run the verification suite over a directory. Exit codes: 0 when every
//! evaluated check verified, 2 when any check was refuted, 3 on usage or
//! input errors, 4 when checks were skipped but none refuted.

use clap::{Args, Parser, Subcommand};
use hyperspectra::charpoly::DEFAULT_DEGREE_BUDGET;
use hyperspectra::hypergraph::{Graph, Hypergraph};
use hyperspectra::perron::DEFAULT_TOL;
use hyperspectra::report::{analyze_hypergraph, analyze_tensor, AnalyzeOptions, TensorKind};
use hyperspectra::suite::{run_suite, suite_options};
use hyperspectra::tensor::Tensor;
use hyperspectra::{Error, Result};
use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "workbench",
    about = "Exact and certified-numeric spectral workbench for uniform hypergraphs",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a hypergraph from a named family as JSON.
    Generate(GenerateArgs),
    /// Analyze one hypergraph (or tensor) file and report the checks.
    Analyze(AnalyzeArgs),
    /// Run every check over a directory of hypergraph files.
    VerifySuite(VerifySuiteArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// Family: hyperpath, hyperstar, hypercycle, complete, power,
    /// random-hypertree.
    #[arg(long)]
    family: String,
    /// Edge size of the hypergraph.
    #[arg(long)]
    k: usize,
    /// Number of edges (hyperpath, hyperstar, hypercycle, random-hypertree).
    #[arg(long)]
    m: Option<usize>,
    /// Number of vertices (complete).
    #[arg(long)]
    n: Option<usize>,
    /// Graph JSON file whose k-th power to build (power).
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Seed for random-hypertree.
    #[arg(long)]
    seed: Option<u64>,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Hypergraph JSON file (tensor JSON when --tensor custom).
    input: PathBuf,
    /// Which tensor to analyze: adjacency, laplacian, signless, custom.
    #[arg(long, default_value = "adjacency")]
    tensor: String,
    /// Compute the exact characteristic polynomial (within the budget).
    #[arg(long)]
    charpoly: bool,
    /// Enumerate eigenvarieties.
    #[arg(long)]
    variety: bool,
    /// Check every enumerated point for simplicity (implies --variety).
    #[arg(long = "local-mult")]
    local_mult: bool,
    /// Largest characteristic-polynomial degree attempted.
    #[arg(long = "budget-N")]
    budget_n: Option<u64>,
    /// Power-iteration stopping tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Output format: json, csv or md.
    #[arg(long, default_value = "json")]
    format: String,
    /// Output path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifySuiteArgs {
    /// Directory of hypergraph JSON files.
    corpus: PathBuf,
    /// Largest characteristic-polynomial degree attempted.
    #[arg(long = "budget-N")]
    budget_n: Option<u64>,
    /// Power-iteration stopping tolerance.
    #[arg(long)]
    tol: Option<f64>,
    /// Format of the file written to --out: json, csv or md.
    #[arg(long, default_value = "csv")]
    format: String,
    /// Machine-readable output path; the markdown summary always goes to
    /// stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() {
    if let Ok(v) = std::env::var("WORKBENCH_THREADS") {
        if let Ok(nt) = v.parse::<usize>() {
            if nt >= 1 {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(nt).build_global();
            }
        }
    }
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 3,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(3);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Generate(args) => generate(args),
        Command::Analyze(args) => analyze(args),
        Command::VerifySuite(args) => verify_suite(args),
    }
}

fn generate(args: GenerateArgs) -> Result<i32> {
    let need_m = |m: Option<usize>| {
        m.ok_or_else(|| Error::InvalidParameter("--m is required for this family".into()))
    };
    let h = match args.family.as_str() {
        "hyperpath" => Hypergraph::hyperpath(args.k, need_m(args.m)?)?,
        "hyperstar" => Hypergraph::hyperstar(args.k, need_m(args.m)?)?,
        "hypercycle" => Hypergraph::hypercycle(args.k, need_m(args.m)?)?,
        "complete" => {
            let n = args.n.ok_or_else(|| {
                Error::InvalidParameter("--n is required for the complete family".into())
            })?;
            Hypergraph::complete(args.k, n)?
        }
        "power" => {
            let path = args.graph.ok_or_else(|| {
                Error::InvalidParameter("--graph is required for the power family".into())
            })?;
            let g = Graph::from_json(&fs::read_to_string(path)?)?;
            Hypergraph::power_of_graph(&g, args.k)?
        }
        "random-hypertree" => {
            Hypergraph::random_hypertree(args.k, need_m(args.m)?, args.seed.unwrap_or(0))?
        }
        other => {
            return Err(Error::InvalidParameter(format!("unknown family `{other}`")));
        }
    };
    emit(args.out.as_deref(), &h.to_json())?;
    Ok(0)
}

fn analyze(args: AnalyzeArgs) -> Result<i32> {
    let kind = TensorKind::from_str(&args.tensor)?;
    let opts = AnalyzeOptions {
        charpoly: args.charpoly,
        variety: args.variety || args.local_mult,
        local_mult: args.local_mult,
        degree_budget: args.budget_n.unwrap_or(DEFAULT_DEGREE_BUDGET),
        tol: args.tol.unwrap_or(DEFAULT_TOL),
        ..AnalyzeOptions::default()
    };
    let text = fs::read_to_string(&args.input)?;
    let rep = if kind == TensorKind::Custom {
        let t = Tensor::from_json(&text)?;
        analyze_tensor(&t, &opts)?
    } else {
        let h = Hypergraph::from_json(&text)?;
        analyze_hypergraph(&h, kind, &opts)?
    };
    let rendered = match args.format.as_str() {
        "json" => rep.to_json(),
        "csv" => rep.to_csv(),
        "md" => rep.to_markdown(),
        other => {
            return Err(Error::InvalidParameter(format!(
                "unknown format `{other}` (expected json, csv or md)"
            )));
        }
    };
    emit(args.out.as_deref(), &rendered)?;
    Ok(rep.exit_code())
}

fn verify_suite(args: VerifySuiteArgs) -> Result<i32> {
    let mut opts = suite_options();
    if let Some(b) = args.budget_n {
        opts.degree_budget = b;
    }
    if let Some(t) = args.tol {
        opts.tol = t;
    }
    let rep = run_suite(&args.corpus, &opts)?;
    print!("{}", rep.to_markdown());
    if let Some(out) = &args.out {
        let rendered = match args.format.as_str() {
            "json" => rep.to_json(),
            "csv" => rep.to_csv(),
            "md" => rep.to_markdown(),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown format `{other}` (expected json, csv or md)"
                )));
            }
        };
        fs::write(out, rendered)?;
    }
    Ok(rep.exit_code())
}

fn emit(out: Option<&std::path::Path>, content: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, content)?,
        None => {
            let trailing = if content.ends_with('\n') { "" } else { "\n" };
            print!("{content}{trailing}");
        }
    }
    Ok(())
}
