//! Survey of algebraic multiplicity against eigenvariety size over small
//! hypergraphs: for each member, run the full analysis and print the
//! multiplicity rows, the closed-form family rows, and the verdict.

use hyperspectra::hypergraph::Hypergraph;
use hyperspectra::report::{analyze_hypergraph, AnalyzeOptions, TensorKind};
use hyperspectra::Result;

fn main() -> Result<()> {
    let opts = AnalyzeOptions::default();
    let members = [
        ("single 3-edge", Hypergraph::hyperpath(3, 1)?),
        ("hyperpath k=3 m=2", Hypergraph::hyperpath(3, 2)?),
        ("complete k=3 n=4", Hypergraph::complete(3, 4)?),
    ];

    for (name, h) in &members {
        println!("== {name} (adjacency) ==");
        let report = analyze_hypergraph(h, TensorKind::Adjacency, &opts)?;
        if let Some(rho) = report.spectral_radius {
            println!("  spectral radius {rho:.12}");
        }
        for row in &report.checks {
            if row.name.contains("multiplicity") || row.name.contains("variety-count") {
                println!("  {:<44} {:<20} {} vs {}", row.name, row.status, row.lhs, row.rhs);
            }
        }
        println!("  exit code {}", report.exit_code());
        println!();
    }

    // The Laplacian side of the same survey: multiplicity of the zero
    // eigenvalue against the zero-mode count.
    for (name, h) in &members[..2] {
        println!("== {name} (laplacian) ==");
        let report = analyze_hypergraph(h, TensorKind::Laplacian, &opts)?;
        for row in &report.checks {
            if row.name.contains("multiplicity") {
                println!("  {:<44} {:<20} {} vs {}", row.name, row.status, row.lhs, row.rhs);
            }
        }
        println!();
    }
    Ok(())
}
