//! Corpus runner: analyzes every hypergraph file in a directory against the
//! adjacency, Laplacian and signless Laplacian tensors, and flattens the
//! outcomes into one row per (file, tensor, check). Row order is
//! deterministic: files sorted by name, tensors in a fixed order, checks in
//! pipeline order. A file that fails to load or analyze gets a recorded row
//! and the run continues.

use crate::error::Result;
use crate::hypergraph::{Graph, Hypergraph};
use crate::report::{analyze_hypergraph, AnalyzeOptions, TensorKind};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

/// Degree ceiling for the suite's default options: admits every desk-corpus
/// characteristic polynomial except the degree-192 one, which costs on the
/// order of half an hour single-core and is opt-in via a larger budget.
pub const SUITE_DEGREE_BUDGET: u64 = 150;

/// Default options for a corpus run: everything enabled, suite degree budget.
pub fn suite_options() -> AnalyzeOptions {
    AnalyzeOptions { degree_budget: SUITE_DEGREE_BUDGET, ..AnalyzeOptions::default() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteRow {
    pub file: String,
    pub tensor_kind: String,
    pub check: String,
    pub status: String,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

impl SuiteRow {
    fn is_refuted(&self) -> bool {
        self.status == "refuted"
    }

    fn is_skipped(&self) -> bool {
        self.status.starts_with("skipped")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteReport {
    pub rows: Vec<SuiteRow>,
}

impl SuiteReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("suite serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    pub fn to_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["file", "tensor", "check", "status", "lhs", "rhs", "detail"])
            .expect("csv record");
        for r in &self.rows {
            wtr.write_record([
                &r.file,
                &r.tensor_kind,
                &r.check,
                &r.status,
                &r.lhs,
                &r.rhs,
                &r.detail,
            ])
            .expect("csv record");
        }
        String::from_utf8(wtr.into_inner().expect("csv flush")).expect("csv utf8")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Verification suite");
        let _ = writeln!(s);
        let _ = writeln!(s, "| file | tensor | check | status | lhs | rhs | detail |");
        let _ = writeln!(s, "|---|---|---|---|---|---|---|");
        for r in &self.rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} | {} | {} |",
                md_cell(&r.file),
                md_cell(&r.tensor_kind),
                md_cell(&r.check),
                md_cell(&r.status),
                md_cell(&r.lhs),
                md_cell(&r.rhs),
                md_cell(&r.detail)
            );
        }
        let _ = writeln!(s);
        let refuted = self.rows.iter().filter(|r| r.is_refuted()).count();
        let skipped = self.rows.iter().filter(|r| r.is_skipped()).count();
        let verdict = if self.rows.is_empty() {
            "empty corpus".into()
        } else if refuted > 0 {
            format!("{refuted} row(s) refuted")
        } else if skipped > 0 {
            format!("all evaluated rows verified, {skipped} skipped")
        } else {
            "all rows verified".into()
        };
        let _ = writeln!(s, "Verdict: {verdict}.");
        s
    }

    pub fn exit_code(&self) -> i32 {
        if self.rows.iter().any(SuiteRow::is_refuted) {
            2
        } else if self.rows.iter().any(SuiteRow::is_skipped) {
            4
        } else {
            0
        }
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

/// Runs the suite over every `.json` hypergraph file in `dir`.
pub fn run_suite(dir: &Path, opts: &AnalyzeOptions) -> Result<SuiteReport> {
    let mut files: Vec<(String, std::path::PathBuf)> = Vec::new();
    for entry in fs::read_dir(dir)? {
        let entry = entry?;
        let path = entry.path();
        if path.extension().is_some_and(|e| e == "json") && path.is_file() {
            files.push((entry.file_name().to_string_lossy().into_owned(), path));
        }
    }
    files.sort();
    let mut rows = Vec::new();
    for (name, path) in files {
        let h = match fs::read_to_string(&path).map_err(crate::error::Error::from).and_then(
            |text| Hypergraph::from_json(&text),
        ) {
            Ok(h) => h,
            Err(e) => {
                rows.push(SuiteRow {
                    file: name,
                    tensor_kind: "-".into(),
                    check: "load".into(),
                    status: format!("skipped: error: {e}"),
                    lhs: "-".into(),
                    rhs: "-".into(),
                    detail: "file could not be loaded; run continued".into(),
                });
                continue;
            }
        };
        for kind in [TensorKind::Adjacency, TensorKind::Laplacian, TensorKind::Signless] {
            match analyze_hypergraph(&h, kind, opts) {
                Ok(rep) => {
                    for c in rep.checks {
                        rows.push(SuiteRow {
                            file: name.clone(),
                            tensor_kind: kind.to_string(),
                            check: c.name,
                            status: c.status,
                            lhs: c.lhs,
                            rhs: c.rhs,
                            detail: c.detail,
                        });
                    }
                }
                Err(e) => rows.push(SuiteRow {
                    file: name.clone(),
                    tensor_kind: kind.to_string(),
                    check: "analyze".into(),
                    status: format!("skipped: error: {e}"),
                    lhs: "-".into(),
                    rhs: "-".into(),
                    detail: "analysis failed; run continued".into(),
                }),
            }
        }
    }
    Ok(SuiteReport { rows })
}

/// Writes the desk corpus into `dir`: every hypertree with at most two
/// edges for k in {3, 4}, the complete 3-uniform hypergraph on four
/// vertices, and the cubic power of the triangle. Returns the file names.
pub fn write_default_corpus(dir: &Path) -> Result<Vec<String>> {
    fs::create_dir_all(dir)?;
    let members: Vec<(&str, Hypergraph)> = vec![
        ("complete-3-4.json", Hypergraph::complete(3, 4)?),
        ("hyperpath-3-2.json", Hypergraph::hyperpath(3, 2)?),
        ("hyperpath-4-2.json", Hypergraph::hyperpath(4, 2)?),
        ("single-edge-3.json", Hypergraph::hyperpath(3, 1)?),
        ("single-edge-4.json", Hypergraph::hyperpath(4, 1)?),
        ("triangle-power-3.json", Hypergraph::power_of_graph(&Graph::triangle(), 3)?),
    ];
    let mut names = Vec::new();
    for (name, h) in members {
        fs::write(dir.join(name), h.to_json())?;
        names.push(name.to_string());
    }
    Ok(names)
}
