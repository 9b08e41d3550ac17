//! Analysis pipeline: runs the radius, characteristic-polynomial,
//! eigenvariety and local-multiplicity machinery over one tensor and
//! collects the outcome as a flat list of named checks. Every check row
//! carries the values on both sides of the asserted relation; statuses are
//! `verified`, `verified (instance)` for single-instance evidence toward a
//! conjecture, `refuted`, or `skipped:<reason>`. JSON is the canonical
//! serialization; CSV and markdown are projections of it.

use crate::charpoly::{self, CharPoly};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::multiplicity;
use crate::perron;
use crate::rational::format_rat;
use crate::tensor::Tensor;
use crate::variety::{self, PhaseVariety};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

/// Which tensor of a hypergraph is analyzed, or a free-standing tensor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TensorKind {
    Adjacency,
    Laplacian,
    Signless,
    Custom,
}

impl TensorKind {
    pub fn as_str(self) -> &'static str {
        match self {
            TensorKind::Adjacency => "adjacency",
            TensorKind::Laplacian => "laplacian",
            TensorKind::Signless => "signless",
            TensorKind::Custom => "custom",
        }
    }
}

impl fmt::Display for TensorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TensorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "adjacency" => Ok(TensorKind::Adjacency),
            "laplacian" => Ok(TensorKind::Laplacian),
            "signless" => Ok(TensorKind::Signless),
            "custom" => Ok(TensorKind::Custom),
            other => Err(Error::InvalidParameter(format!(
                "unknown tensor kind `{other}` (expected adjacency, laplacian, signless or custom)"
            ))),
        }
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Verified,
    /// The relation held on this instance, but it is evidence toward a
    /// conjecture, not an application of a proved theorem.
    VerifiedInstance,
    Refuted,
    Skipped(String),
}

impl CheckStatus {
    pub fn render(&self) -> String {
        match self {
            CheckStatus::Verified => "verified".into(),
            CheckStatus::VerifiedInstance => "verified (instance)".into(),
            CheckStatus::Refuted => "refuted".into(),
            CheckStatus::Skipped(reason) if reason == "budget" => "skipped:budget".into(),
            CheckStatus::Skipped(reason) => format!("skipped: {reason}"),
        }
    }
}

/// One named check with the values on both sides of its relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CheckRow {
    pub name: String,
    pub status: String,
    pub lhs: String,
    pub rhs: String,
    pub detail: String,
}

impl CheckRow {
    fn new(
        name: &str,
        status: CheckStatus,
        lhs: impl fmt::Display,
        rhs: impl fmt::Display,
        detail: &str,
    ) -> Self {
        CheckRow {
            name: name.into(),
            status: status.render(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            detail: detail.into(),
        }
    }

    pub fn is_refuted(&self) -> bool {
        self.status == "refuted"
    }

    pub fn is_skipped(&self) -> bool {
        self.status.starts_with("skipped")
    }
}

fn eq_status(equal: bool, theorem: bool) -> CheckStatus {
    match (equal, theorem) {
        (true, true) => CheckStatus::Verified,
        (true, false) => CheckStatus::VerifiedInstance,
        (false, _) => CheckStatus::Refuted,
    }
}

/// Equality check: verified exactly when both rendered values agree.
fn check_eq(name: &str, lhs: impl fmt::Display, rhs: impl fmt::Display, detail: &str) -> CheckRow {
    let l = lhs.to_string();
    let r = rhs.to_string();
    let status = eq_status(l == r, true);
    CheckRow { name: name.into(), status: status.render(), lhs: l, rhs: r, detail: detail.into() }
}

/// Upper-bound check: verified when `lhs <= rhs`.
fn check_le(name: &str, lhs: f64, rhs: f64, detail: &str) -> CheckRow {
    let status = if lhs <= rhs { CheckStatus::Verified } else { CheckStatus::Refuted };
    CheckRow::new(name, status, format!("{lhs:.3e}"), format!("{rhs:.3e}"), detail)
}

fn check_skip(name: &str, reason: &str, detail: &str) -> CheckRow {
    CheckRow::new(name, CheckStatus::Skipped(reason.into()), "-", "-", detail)
}

/// Stage toggles and resource budgets for one analysis run.
#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    /// Compute the exact characteristic polynomial (subject to the degree
    /// budget) and everything derived from it.
    pub charpoly: bool,
    /// Enumerate eigenvarieties and compare counts.
    pub variety: bool,
    /// Run the dual-space multiplicity test on every enumerated point.
    pub local_mult: bool,
    /// Largest characteristic-polynomial degree attempted.
    pub degree_budget: u64,
    /// Largest variety materialized point by point.
    pub point_cap: u64,
    /// Power-iteration stopping tolerance.
    pub tol: f64,
    pub max_iter: u64,
    /// Residual bound for enumerated eigenvector candidates.
    pub residual_tol: f64,
    /// Residual bound for certified dominant / least eigenpairs.
    pub certificate_tol: f64,
    /// Relative tolerance for matching numeric roots to exact factors.
    pub root_match_tol: f64,
    /// Differential-order ceiling of the dual-space computation.
    pub order_cap: u32,
    /// Ceiling on brute-force stabilizer enumeration (`k^(n-1)` candidates).
    pub stabilizer_cap: u64,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            charpoly: true,
            variety: true,
            local_mult: true,
            degree_budget: charpoly::DEFAULT_DEGREE_BUDGET,
            point_cap: variety::DEFAULT_POINT_CAP,
            tol: perron::DEFAULT_TOL,
            max_iter: perron::DEFAULT_MAX_ITER,
            residual_tol: 1e-8,
            certificate_tol: 1e-10,
            root_match_tol: charpoly::DEFAULT_ROOT_MATCH_TOL,
            order_cap: multiplicity::DEFAULT_ORDER_CAP,
            stabilizer_cap: 1_000_000,
        }
    }
}

/// One enumerated (or counted) phase variety in the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VarietySection {
    /// Which eigenvalue the section belongs to: `rho`, `rho*w^j` with
    /// `w = e^(2 pi i / ell)`, or `zero`.
    pub label: String,
    /// Right-hand side `c` of the phase congruence, as a residue mod k.
    pub class_shift: u64,
    pub count: String,
    pub invariants: Vec<u64>,
    /// Enumerated phase vectors (first phase 0), absent when over the cap.
    pub points: Option<Vec<Vec<u64>>>,
}

fn section(label: &str, v: &PhaseVariety) -> VarietySection {
    VarietySection {
        label: label.into(),
        class_shift: v.class_shift,
        count: v.count.to_string(),
        invariants: v.invariants.clone(),
        points: v.points.clone(),
    }
}

/// Full outcome of analyzing one tensor.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisReport {
    pub input_fingerprint: String,
    pub tensor_kind: String,
    pub k: usize,
    pub n: usize,
    pub connected: bool,
    pub spectral_radius: Option<f64>,
    pub perron_vector: Option<Vec<f64>>,
    /// Certified enclosure of the spectral radius.
    pub certificate_interval: Option<[f64; 2]>,
    pub least_h_eigenvalue: Option<f64>,
    /// `s` in the split `A = s I - B` used for the least eigenvalue.
    pub diagonal_shift: Option<String>,
    pub cyclic_index_combinatorial: Option<u64>,
    /// Cyclic index read off the characteristic polynomial; `undefined`
    /// when the spectrum is `{0}` and every rotation fixes it.
    pub cyclic_index_polynomial: Option<String>,
    /// Order of the group of unit diagonal similarities fixing the tensor
    /// (first entry 1), from brute-force enumeration.
    pub stabilizing_index: Option<String>,
    pub characteristic_polynomial: Option<serde_json::Value>,
    /// Algebraic multiplicities of the `ell` evenly spaced eigenvalues on
    /// the spectral circle.
    pub circle_multiplicities: Option<Vec<usize>>,
    pub varieties: Vec<VarietySection>,
    pub checks: Vec<CheckRow>,
}

/// Process exit code for a set of checks: refutations dominate, then
/// skips, and a fully verified run exits 0.
pub fn exit_code_for(checks: &[CheckRow]) -> i32 {
    if checks.iter().any(CheckRow::is_refuted) {
        2
    } else if checks.iter().any(CheckRow::is_skipped) {
        4
    } else {
        0
    }
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// Check rows as CSV with a header line.
    pub fn to_csv(&self) -> String {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        wtr.write_record(["name", "status", "lhs", "rhs", "detail"]).expect("csv record");
        for c in &self.checks {
            wtr.write_record([&c.name, &c.status, &c.lhs, &c.rhs, &c.detail])
                .expect("csv record");
        }
        String::from_utf8(wtr.into_inner().expect("csv flush")).expect("csv utf8")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Spectral analysis: {} tensor", self.tensor_kind);
        let _ = writeln!(s);
        let _ = writeln!(s, "- input fingerprint: `{}`", self.input_fingerprint);
        let _ = writeln!(
            s,
            "- order k = {}, dimension n = {}, connected: {}",
            self.k, self.n, self.connected
        );
        if let Some(r) = self.spectral_radius {
            let _ = writeln!(s, "- spectral radius: {r}");
        }
        if let Some([lo, hi]) = self.certificate_interval {
            let _ = writeln!(s, "- certified radius enclosure: [{lo}, {hi}]");
        }
        if let Some(l) = self.least_h_eigenvalue {
            let _ = writeln!(s, "- least H-eigenvalue: {l}");
        }
        if let Some(sh) = &self.diagonal_shift {
            let _ = writeln!(s, "- diagonal shift of the Z-split: {sh}");
        }
        match (&self.cyclic_index_combinatorial, &self.cyclic_index_polynomial) {
            (Some(c), Some(p)) => {
                let _ = writeln!(
                    s,
                    "- cyclic index: {c} (combinatorial), {p} (from the characteristic polynomial)"
                );
            }
            (Some(c), None) => {
                let _ = writeln!(s, "- cyclic index: {c} (combinatorial)");
            }
            _ => {}
        }
        if let Some(si) = &self.stabilizing_index {
            let _ = writeln!(s, "- stabilizing index (brute-force): {si}");
        }
        if let Some(ms) = &self.circle_multiplicities {
            let _ = writeln!(s, "- spectral-circle multiplicities: {ms:?}");
        }
        if !self.varieties.is_empty() {
            let _ = writeln!(s);
            let _ = writeln!(s, "## Eigenvarieties");
            let _ = writeln!(s);
            let _ = writeln!(s, "| eigenvalue | class shift | count | invariants | enumerated |");
            let _ = writeln!(s, "|---|---|---|---|---|");
            for v in &self.varieties {
                let enumerated = match &v.points {
                    Some(p) => p.len().to_string(),
                    None => "-".into(),
                };
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | {:?} | {} |",
                    md_cell(&v.label),
                    v.class_shift,
                    v.count,
                    v.invariants,
                    enumerated
                );
            }
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "## Checks");
        let _ = writeln!(s);
        let _ = writeln!(s, "| check | status | lhs | rhs | detail |");
        let _ = writeln!(s, "|---|---|---|---|---|");
        for c in &self.checks {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                md_cell(&c.name),
                md_cell(&c.status),
                md_cell(&c.lhs),
                md_cell(&c.rhs),
                md_cell(&c.detail)
            );
        }
        let _ = writeln!(s);
        let refuted = self.checks.iter().filter(|c| c.is_refuted()).count();
        let skipped = self.checks.iter().filter(|c| c.is_skipped()).count();
        let verdict = if refuted > 0 {
            format!("{refuted} check(s) refuted")
        } else if skipped > 0 {
            format!("all evaluated checks verified, {skipped} skipped")
        } else {
            "all checks verified".into()
        };
        let _ = writeln!(s, "Verdict: {verdict}.");
        s
    }

    pub fn exit_code(&self) -> i32 {
        exit_code_for(&self.checks)
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

/// Analyze one of the three spectral tensors of a hypergraph.
pub fn analyze_hypergraph(
    h: &Hypergraph,
    kind: TensorKind,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    let t = match kind {
        TensorKind::Adjacency => Tensor::adjacency(h)?,
        TensorKind::Laplacian => Tensor::laplacian(h)?,
        TensorKind::Signless => Tensor::signless_laplacian(h)?,
        TensorKind::Custom => {
            return Err(Error::InvalidParameter(
                "custom analysis takes a tensor, not a hypergraph".into(),
            ))
        }
    };
    analyze_impl(Some(h), &t, kind, opts)
}

/// Analyze a free-standing tensor: nonnegative tensors get the radius
/// pipeline, Z-tensors the least-eigenvalue pipeline.
pub fn analyze_tensor(t: &Tensor, opts: &AnalyzeOptions) -> Result<AnalysisReport> {
    analyze_impl(None, t, TensorKind::Custom, opts)
}

fn analyze_impl(
    h: Option<&Hypergraph>,
    t: &Tensor,
    kind: TensorKind,
    opts: &AnalyzeOptions,
) -> Result<AnalysisReport> {
    let connected = match h {
        Some(hg) => hg.is_connected(),
        None => t.n() == 1 || t.is_weakly_irreducible(),
    };
    let mut rep = AnalysisReport {
        input_fingerprint: t.fingerprint(),
        tensor_kind: kind.to_string(),
        k: t.k(),
        n: t.n(),
        connected,
        spectral_radius: None,
        perron_vector: None,
        certificate_interval: None,
        least_h_eigenvalue: None,
        diagonal_shift: None,
        cyclic_index_combinatorial: None,
        cyclic_index_polynomial: None,
        stabilizing_index: None,
        characteristic_polynomial: None,
        circle_multiplicities: None,
        varieties: Vec::new(),
        checks: Vec::new(),
    };
    if !connected {
        rep.checks.push(check_skip(
            "analysis",
            "disconnected",
            "spectral checks require a connected input",
        ));
        return Ok(rep);
    }
    match kind {
        TensorKind::Adjacency | TensorKind::Signless => {
            analyze_nonnegative(h, t, kind, opts, &mut rep)?;
        }
        TensorKind::Laplacian => {
            let hg = h.expect("laplacian analysis is built from a hypergraph");
            analyze_laplacian(hg, t, opts, &mut rep)?;
        }
        TensorKind::Custom => {
            if t.is_nonnegative() {
                analyze_nonnegative(None, t, kind, opts, &mut rep)?;
            } else if t.z_tensor_split().is_ok() {
                analyze_z_custom(t, opts, &mut rep)?;
            } else {
                rep.checks.push(check_skip(
                    "analysis",
                    "unsupported",
                    "tensor is neither nonnegative nor of Z type; no checks defined",
                ));
            }
        }
    }
    Ok(rep)
}

struct FamilyInfo {
    hypertree: bool,
    power_exponent: Option<usize>,
    complete: bool,
}

fn family_info(h: &Hypergraph) -> FamilyInfo {
    let power_exponent = h.as_power_of_graph().map(|g| g.n + g.edges.len() * (h.k() - 3) - 1);
    FamilyInfo { hypertree: h.is_hypertree(), power_exponent, complete: h.is_complete() }
}

/// Does a proved theorem cover `am(lambda) = |V_lambda|` on the spectral
/// circle for this input? (Hypertrees, powers of connected graphs, and
/// complete 3-uniform hypergraphs on more than 3 vertices, all for the
/// adjacency tensor.)
fn am_equality_is_theorem(kind: TensorKind, h: Option<&Hypergraph>) -> bool {
    if kind != TensorKind::Adjacency {
        return false;
    }
    match h {
        Some(hg) => {
            let fam = family_info(hg);
            fam.hypertree
                || fam.power_exponent.is_some()
                || (fam.complete && hg.k() == 3 && hg.n() > 3)
        }
        None => false,
    }
}

/// Radius pipeline for a nonnegative weakly irreducible tensor; used for
/// the adjacency and signless Laplacian tensors and nonnegative custom
/// input.
fn analyze_nonnegative(
    h: Option<&Hypergraph>,
    t: &Tensor,
    kind: TensorKind,
    opts: &AnalyzeOptions,
    rep: &mut AnalysisReport,
) -> Result<()> {
    let pr = match perron::spectral_radius(t, opts.tol, opts.max_iter) {
        Ok(pr) => pr,
        Err(e) => {
            rep.checks.push(check_skip(
                "radius-certified",
                &format!("error: {e}"),
                "power iteration failed; downstream checks skipped",
            ));
            return Ok(());
        }
    };
    rep.spectral_radius = Some(pr.rho);
    rep.perron_vector = Some(pr.vector.clone());
    rep.certificate_interval = Some([pr.lower, pr.upper]);
    let residual = perron::eigenpair_residual(t, pr.rho, &pr.vector);
    rep.checks.push(check_le(
        "radius-certified",
        residual,
        opts.certificate_tol,
        "infinity-norm residual of the certified dominant eigenpair",
    ));

    let c_comb = match variety::cyclic_index_combinatorial(t) {
        Ok(c) => {
            rep.cyclic_index_combinatorial = Some(c);
            Some(c)
        }
        Err(_) => None,
    };
    let ell = c_comb.unwrap_or(1);

    // Characteristic polynomial and everything read off it.
    let cp = compute_charpoly(t, opts, rep);
    if let Some(cpv) = &cp {
        let ell_poly = charpoly::cyclic_index_from_char_poly(cpv);
        rep.cyclic_index_polynomial =
            Some(ell_poly.map_or_else(|| "undefined".into(), |l| l.to_string()));
        match (c_comb, ell_poly) {
            (Some(c), Some(l)) => rep.checks.push(check_eq(
                "cyclic-index-agreement",
                c,
                l,
                "support congruences vs gcd of exponent offsets in the characteristic polynomial",
            )),
            (Some(_), None) => rep.checks.push(check_skip(
                "cyclic-index-agreement",
                "undefined index",
                "characteristic polynomial is a pure power of lambda",
            )),
            (None, _) => rep.checks.push(check_skip(
                "cyclic-index-agreement",
                "error: tensor support is not combinatorially symmetric",
                "",
            )),
        }
        rep.checks.push(rotation_structure_row(cpv, ell));
        match variety::circle_multiplicities(cpv, pr.rho, ell, opts.root_match_tol) {
            Ok(ms) => {
                let vals: Vec<usize> = ms.iter().map(|m| m.multiplicity).collect();
                let uniform = vec![vals[0]; vals.len()];
                rep.checks.push(check_eq(
                    "circle-multiplicity-uniform",
                    format!("{vals:?}"),
                    format!("{uniform:?}"),
                    "algebraic multiplicities of the evenly spaced eigenvalues on the spectral circle",
                ));
                rep.circle_multiplicities = Some(vals);
            }
            Err(e) => rep.checks.push(check_skip(
                "circle-multiplicity-uniform",
                &format!("error: {e}"),
                "root matching on the spectral circle failed",
            )),
        }
    }

    // Eigenvarieties: the radius class and the rest of the spectral circle.
    let mut vrho: Option<PhaseVariety> = None;
    if opts.variety {
        match variety::rho_eigenvariety(t, opts.point_cap) {
            Ok(v) => {
                rep.varieties.push(section("rho", &v));
                vrho = Some(v);
            }
            Err(e) => rep.checks.push(check_skip(
                "variety-count-vs-enumeration",
                &format!("error: {e}"),
                "radius eigenvariety could not be computed",
            )),
        }
    } else {
        rep.checks.push(check_skip(
            "eigenvariety",
            "budget",
            "variety stage disabled for this run",
        ));
    }

    if let Some(v) = &vrho {
        match &v.points {
            Some(pts) => rep.checks.push(check_eq(
                "variety-count-vs-enumeration",
                &v.count,
                pts.len(),
                "group-order formula vs direct congruence enumeration",
            )),
            None => rep.checks.push(check_skip(
                "variety-count-vs-enumeration",
                "budget",
                &format!("{} points exceed the enumeration cap", v.count),
            )),
        }
        match variety::stabilizer_order_brute(t, opts.stabilizer_cap)? {
            Some(s) => {
                rep.stabilizing_index = Some(s.to_string());
                rep.checks.push(check_eq(
                    "stabilizer-order-equals-variety-count",
                    s,
                    &v.count,
                    "diagonal similarities fixing the tensor (first entry 1) vs eigenvariety size",
                ));
            }
            None => rep.checks.push(check_skip(
                "stabilizer-order-equals-variety-count",
                "budget",
                "stabilizer enumeration exceeds the cap",
            )),
        }
        rep.checks.push(residual_row(
            "variety-points-are-eigenvectors",
            t,
            pr.rho,
            &pr.vector,
            v,
            opts.residual_tol,
            "rho",
        ));

        // Remaining classes on the spectral circle.
        let mut class_counts: Vec<BigUint> = vec![v.count.clone()];
        let mut class_varieties: Vec<(String, PhaseVariety)> = Vec::new();
        if ell > 1 {
            let step = t.k() as u64 / ell;
            for j in 1..ell {
                let label = format!("rho*w^{j}");
                match variety::eigenvariety_class(t, j * step, opts.point_cap) {
                    Ok(Some(vj)) => {
                        rep.varieties.push(section(&label, &vj));
                        rep.checks.push(residual_row(
                            "variety-points-are-eigenvectors",
                            t,
                            pr.rho,
                            &pr.vector,
                            &vj,
                            opts.residual_tol,
                            &label,
                        ));
                        class_counts.push(vj.count.clone());
                        class_varieties.push((label, vj));
                    }
                    Ok(None) => rep.checks.push(check_eq(
                        "circle-class-solvable",
                        "unsolvable",
                        "solvable",
                        &format!("phase congruence for class {label} from the cyclic index"),
                    )),
                    Err(e) => rep.checks.push(check_skip(
                        "circle-class-solvable",
                        &format!("error: {e}"),
                        &label,
                    )),
                }
            }
            let uniform = vec![class_counts[0].to_string(); class_counts.len()];
            let rendered: Vec<String> = class_counts.iter().map(BigUint::to_string).collect();
            rep.checks.push(check_eq(
                "circle-variety-counts-uniform",
                format!("{rendered:?}"),
                format!("{uniform:?}"),
                "every eigenvalue on the spectral circle has an eigenvariety of the same size",
            ));
        }

        // Local multiplicity at every enumerated point, class by class.
        if opts.local_mult {
            simple_point_rows(rep, t, pr.rho, &pr.vector, v, "rho", opts);
            for (label, vj) in &class_varieties {
                simple_point_rows(rep, t, pr.rho, &pr.vector, vj, label, opts);
            }
        } else {
            rep.checks.push(check_skip(
                "variety-points-simple",
                "budget",
                "local multiplicity stage disabled for this run",
            ));
        }

        // Algebraic multiplicity against the variety size.
        if let Some(cpv) = &cp {
            am_vs_variety_rows(rep, cpv, pr.rho, v, kind, h, opts);
        }

        // Count closed forms (adjacency only; they describe the hypergraph).
        if kind == TensorKind::Adjacency {
            if let Some(hg) = h {
                family_count_rows(rep, hg, v);
            }
        }
    }

    // Signless Laplacian: zero-eigenvalue existence and comparisons.
    if kind == TensorKind::Signless {
        if let Some(hg) = h {
            signless_zero_rows(rep, hg, t, cp.as_ref(), opts)?;
        }
    }
    Ok(())
}

fn compute_charpoly(t: &Tensor, opts: &AnalyzeOptions, rep: &mut AnalysisReport) -> Option<CharPoly> {
    if !opts.charpoly {
        rep.checks.push(check_skip(
            "characteristic-polynomial",
            "budget",
            "characteristic polynomial stage disabled for this run",
        ));
        return None;
    }
    match charpoly::char_poly(t, opts.degree_budget) {
        Ok(c) => {
            rep.characteristic_polynomial =
                Some(serde_json::from_str(&c.to_json()).expect("charpoly json"));
            Some(c)
        }
        Err(Error::DegreeBudget { degree, budget }) => {
            rep.checks.push(check_skip(
                "characteristic-polynomial",
                "budget",
                &format!("degree {degree} exceeds the budget {budget}"),
            ));
            None
        }
        Err(e) => {
            rep.checks.push(check_skip(
                "characteristic-polynomial",
                &format!("error: {e}"),
                "",
            ));
            None
        }
    }
}

/// Structural form `phi(lambda) = lambda^t f(lambda^ell)`: all exponents
/// with nonzero coefficients agree modulo `ell`.
fn rotation_structure_row(cp: &CharPoly, ell: u64) -> CheckRow {
    let mut residues: std::collections::BTreeSet<u64> = std::collections::BTreeSet::new();
    for (d, c) in cp.poly.coeffs().iter().enumerate() {
        if !c.is_zero() {
            residues.insert(d as u64 % ell);
        }
    }
    check_eq(
        "charpoly-rotation-structure",
        residues.len(),
        1,
        &format!(
            "distinct exponent residues mod ell = {ell} among nonzero terms; 1 means phi(lambda) = lambda^t f(lambda^ell)"
        ),
    )
}

fn residual_row(
    name: &str,
    t: &Tensor,
    base: f64,
    magnitudes: &[f64],
    v: &PhaseVariety,
    tol: f64,
    label: &str,
) -> CheckRow {
    if v.points.is_none() {
        return check_skip(name, "budget", &format!("class {label}: no enumerated points"));
    }
    match variety::verify_variety_points(t, base, magnitudes, v, tol) {
        Ok(Some(worst)) => check_le(
            name,
            worst,
            tol,
            &format!("class {label}: maximum eigenpair residual over enumerated points"),
        ),
        Ok(None) => check_skip(name, "budget", &format!("class {label}: no enumerated points")),
        Err(Error::ResidualTooLarge { residual, tol: t0 }) => CheckRow::new(
            name,
            CheckStatus::Refuted,
            format!("{residual:.3e}"),
            format!("{t0:.3e}"),
            &format!("class {label}: an enumerated point fails the eigenvector residual bound"),
        ),
        Err(e) => check_skip(name, &format!("error: {e}"), label),
    }
}

fn simple_point_rows(
    rep: &mut AnalysisReport,
    t: &Tensor,
    base: f64,
    magnitudes: &[f64],
    v: &PhaseVariety,
    label: &str,
    opts: &AnalyzeOptions,
) {
    if v.points.is_none() {
        rep.checks.push(check_skip(
            "variety-points-simple",
            "budget",
            &format!("class {label}: no enumerated points"),
        ));
        return;
    }
    match multiplicity::variety_point_checks(t, base, magnitudes, v, opts.residual_tol, opts.order_cap)
    {
        Ok(checks) => {
            let total = checks.len();
            let simple = checks.iter().filter(|c| c.simple).count();
            rep.checks.push(CheckRow::new(
                "variety-points-simple",
                eq_status(simple == total, true),
                simple,
                total,
                &format!("class {label}: points with full Jacobian rank and local multiplicity 1"),
            ));
        }
        Err(Error::SimplicityCriteriaDisagree { rank, vars, multiplicity }) => {
            rep.checks.push(CheckRow::new(
                "variety-points-simple",
                CheckStatus::Refuted,
                format!("jacobian rank {rank} of {vars}"),
                format!("local multiplicity {multiplicity}"),
                &format!("class {label}: rank test and dual-space multiplicity disagree"),
            ));
        }
        Err(e) => rep.checks.push(check_skip(
            "variety-points-simple",
            &format!("error: {e}"),
            label,
        )),
    }
}

fn am_vs_variety_rows(
    rep: &mut AnalysisReport,
    cp: &CharPoly,
    rho: f64,
    v: &PhaseVariety,
    kind: TensorKind,
    h: Option<&Hypergraph>,
    opts: &AnalyzeOptions,
) {
    let m = match charpoly::algebraic_multiplicity(cp, Complex64::new(rho, 0.0), opts.root_match_tol)
    {
        Ok(m) => m,
        Err(e) => {
            rep.checks.push(check_skip(
                "radius-multiplicity-equals-variety-count",
                &format!("error: {e}"),
                "the radius could not be matched to a factor of the characteristic polynomial",
            ));
            return;
        }
    };
    let am = BigUint::from(m.multiplicity);
    let ge = am >= v.count;
    rep.checks.push(CheckRow::new(
        "radius-multiplicity-at-least-variety-count",
        if ge { CheckStatus::Verified } else { CheckStatus::Refuted },
        m.multiplicity,
        &v.count,
        "for a nonnegative weakly irreducible tensor the multiplicity dominates the variety size",
    ));
    let theorem = am_equality_is_theorem(kind, h);
    rep.checks.push(CheckRow::new(
        "radius-multiplicity-equals-variety-count",
        eq_status(am == v.count, theorem),
        m.multiplicity,
        &v.count,
        if theorem {
            "equality theorem for this hypergraph family"
        } else {
            "single-instance evidence for the general equality conjecture"
        },
    ));
    if kind == TensorKind::Adjacency {
        if let Some(hg) = h {
            let fam = family_info(hg);
            let k = hg.k();
            if fam.hypertree {
                let expect = BigUint::from(k).pow((hg.edges().len() * (k - 2)) as u32);
                rep.checks.push(check_eq(
                    "hypertree-radius-multiplicity",
                    m.multiplicity,
                    &expect,
                    "closed form k^(m(k-2)) for the radius multiplicity of a hypertree",
                ));
            }
            if let Some(expo) = fam.power_exponent {
                let expect = BigUint::from(k).pow(expo as u32);
                rep.checks.push(check_eq(
                    "graph-power-radius-multiplicity",
                    m.multiplicity,
                    &expect,
                    "closed form k^(|V(G)|+|E(G)|(k-3)-1) for the power of a connected graph",
                ));
            }
            if fam.complete && k == 3 && hg.n() > 3 {
                rep.checks.push(check_eq(
                    "complete-radius-simple",
                    m.multiplicity,
                    1usize,
                    "the radius of a complete 3-uniform hypergraph on more than 3 vertices is a simple root",
                ));
            }
        }
    }
}

fn family_count_rows(rep: &mut AnalysisReport, hg: &Hypergraph, v: &PhaseVariety) {
    let fam = family_info(hg);
    let k = hg.k();
    if fam.hypertree {
        let expect = BigUint::from(k).pow((hg.edges().len() * (k - 2)) as u32);
        rep.checks.push(check_eq(
            "hypertree-variety-count",
            &v.count,
            &expect,
            "closed form k^(m(k-2)) for the radius eigenvariety of a hypertree",
        ));
    }
    if let Some(expo) = fam.power_exponent {
        let expect = BigUint::from(k).pow(expo as u32);
        rep.checks.push(check_eq(
            "graph-power-variety-count",
            &v.count,
            &expect,
            "closed form k^(|V(G)|+|E(G)|(k-3)-1) for the power of a connected graph",
        ));
    }
    if fam.complete && hg.n() > k {
        rep.checks.push(check_eq(
            "complete-variety-trivial",
            &v.count,
            1usize,
            "a complete k-uniform hypergraph on more than k vertices has a trivial radius eigenvariety",
        ));
    }
}

fn signless_zero_rows(
    rep: &mut AnalysisReport,
    hg: &Hypergraph,
    q: &Tensor,
    cp_q: Option<&CharPoly>,
    opts: &AnalyzeOptions,
) -> Result<()> {
    if !opts.variety {
        return Ok(());
    }
    let k = hg.k();
    match variety::signless_zero_variety(hg, opts.point_cap)? {
        None => {
            let detail = if k % 2 != 0 {
                "odd order rules out a zero eigenvalue with unit-magnitude eigenvector"
            } else {
                "the phase congruence with shift k/2 has no solution"
            };
            rep.checks.push(CheckRow::new(
                "signless-zero-exists",
                CheckStatus::Verified,
                "false",
                "false",
                detail,
            ));
        }
        Some(v) => {
            rep.varieties.push(section("zero", &v));
            if k % 2 != 0 {
                // A solvable class at odd k would contradict the parity theorem.
                rep.checks.push(CheckRow::new(
                    "signless-zero-exists",
                    CheckStatus::Refuted,
                    "true",
                    "false",
                    "odd order must rule out a zero eigenvalue with unit-magnitude eigenvector",
                ));
                return Ok(());
            }
            rep.checks.push(CheckRow::new(
                "signless-zero-exists",
                CheckStatus::Verified,
                "true",
                "true",
                "witness phases found for the zero eigenvalue",
            ));
            let ones = vec![1.0; q.n()];
            rep.checks.push(residual_row(
                "signless-zero-points-are-eigenvectors",
                q,
                0.0,
                &ones,
                &v,
                opts.residual_tol,
                "zero",
            ));
            if opts.local_mult {
                simple_point_rows_named(
                    rep,
                    "signless-zero-points-simple",
                    q,
                    0.0,
                    &ones,
                    &v,
                    "zero",
                    opts,
                );
            }
            // Same count as the Laplacian zero variety (diagonal similarity).
            let vl = variety::laplacian_zero_variety(hg, opts.point_cap)?;
            rep.checks.push(check_eq(
                "signless-zero-count-equals-laplacian",
                &v.count,
                &vl.count,
                "when zero is an eigenvalue the two Laplacian-type tensors are diagonally similar",
            ));
            if let Some(cpq) = cp_q {
                match charpoly::algebraic_multiplicity(cpq, Complex64::zero(), opts.root_match_tol) {
                    Ok(mq) => {
                        rep.checks.push(CheckRow::new(
                            "signless-zero-multiplicity-equals-count",
                            eq_status(BigUint::from(mq.multiplicity) == v.count, false),
                            mq.multiplicity,
                            &v.count,
                            "single-instance evidence for the zero-eigenvalue equality conjecture",
                        ));
                        // am(0) agrees between the two Laplacian-type tensors.
                        let l = Tensor::laplacian(hg)?;
                        match charpoly::char_poly(&l, opts.degree_budget) {
                            Ok(cpl) => match charpoly::algebraic_multiplicity(
                                &cpl,
                                Complex64::zero(),
                                opts.root_match_tol,
                            ) {
                                Ok(ml) => rep.checks.push(check_eq(
                                    "signless-zero-multiplicity-equals-laplacian",
                                    mq.multiplicity,
                                    ml.multiplicity,
                                    "diagonal similarity makes the two spectra coincide",
                                )),
                                Err(e) => rep.checks.push(check_skip(
                                    "signless-zero-multiplicity-equals-laplacian",
                                    &format!("error: {e}"),
                                    "",
                                )),
                            },
                            Err(Error::DegreeBudget { degree, budget }) => {
                                rep.checks.push(check_skip(
                                    "signless-zero-multiplicity-equals-laplacian",
                                    "budget",
                                    &format!("degree {degree} exceeds the budget {budget}"),
                                ));
                            }
                            Err(e) => rep.checks.push(check_skip(
                                "signless-zero-multiplicity-equals-laplacian",
                                &format!("error: {e}"),
                                "",
                            )),
                        }
                    }
                    Err(e) => rep.checks.push(check_skip(
                        "signless-zero-multiplicity-equals-count",
                        &format!("error: {e}"),
                        "zero could not be matched to a factor of the characteristic polynomial",
                    )),
                }
            }
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn simple_point_rows_named(
    rep: &mut AnalysisReport,
    name: &str,
    t: &Tensor,
    base: f64,
    magnitudes: &[f64],
    v: &PhaseVariety,
    label: &str,
    opts: &AnalyzeOptions,
) {
    let before = rep.checks.len();
    simple_point_rows(rep, t, base, magnitudes, v, label, opts);
    for row in rep.checks.iter_mut().skip(before) {
        row.name = name.into();
    }
}

/// Least-eigenvalue pipeline for the Laplacian tensor of a hypergraph.
fn analyze_laplacian(
    hg: &Hypergraph,
    t: &Tensor,
    opts: &AnalyzeOptions,
    rep: &mut AnalysisReport,
) -> Result<()> {
    let z = match perron::least_h_eigenvalue_z(t, opts.tol, opts.max_iter) {
        Ok(z) => z,
        Err(e) => {
            rep.checks.push(check_skip(
                "laplacian-least-eigenvalue-zero",
                &format!("error: {e}"),
                "least-eigenvalue computation failed; downstream checks skipped",
            ));
            return Ok(());
        }
    };
    rep.least_h_eigenvalue = Some(z.lambda_min);
    rep.diagonal_shift = Some(format_rat(&z.shift));
    rep.checks.push(check_le(
        "laplacian-least-eigenvalue-zero",
        z.lambda_min.abs(),
        opts.certificate_tol,
        "least H-eigenvalue via the diagonal shift minus the radius of the nonnegative part",
    ));
    let ones_rat = vec![BigRational::one(); t.n()];
    let image = t.apply_rational(&ones_rat);
    let exact = image.iter().all(Zero::is_zero);
    let worst = image.iter().find(|v| !v.is_zero());
    rep.checks.push(CheckRow::new(
        "laplacian-annihilates-ones",
        eq_status(exact, true),
        worst.map_or_else(|| "0".into(), format_rat),
        "0",
        "exact evaluation of the tensor at the all-ones vector",
    ));
    if let Some(x) = &z.vector {
        rep.checks.push(check_le(
            "least-eigenpair-certified",
            perron::eigenpair_residual(t, z.lambda_min, x),
            opts.certificate_tol,
            "infinity-norm residual of the certified least eigenpair",
        ));
    }

    let ones = vec![1.0; t.n()];
    let mut vzero: Option<PhaseVariety> = None;
    if opts.variety {
        match variety::laplacian_zero_variety(hg, opts.point_cap) {
            Ok(v) => {
                rep.varieties.push(section("zero", &v));
                vzero = Some(v);
            }
            Err(e) => rep.checks.push(check_skip(
                "variety-count-vs-enumeration",
                &format!("error: {e}"),
                "zero eigenvariety could not be computed",
            )),
        }
    } else {
        rep.checks.push(check_skip(
            "eigenvariety",
            "budget",
            "variety stage disabled for this run",
        ));
    }

    if let Some(v) = &vzero {
        match &v.points {
            Some(pts) => rep.checks.push(check_eq(
                "variety-count-vs-enumeration",
                &v.count,
                pts.len(),
                "group-order formula vs direct congruence enumeration",
            )),
            None => rep.checks.push(check_skip(
                "variety-count-vs-enumeration",
                "budget",
                &format!("{} points exceed the enumeration cap", v.count),
            )),
        }
        match variety::stabilizer_order_brute(t, opts.stabilizer_cap)? {
            Some(s) => {
                rep.stabilizing_index = Some(s.to_string());
                rep.checks.push(check_eq(
                    "stabilizer-order-equals-zero-count",
                    s,
                    &v.count,
                    "diagonal similarities fixing the tensor (first entry 1) vs zero-variety size",
                ));
            }
            None => rep.checks.push(check_skip(
                "stabilizer-order-equals-zero-count",
                "budget",
                "stabilizer enumeration exceeds the cap",
            )),
        }
        rep.checks.push(residual_row(
            "laplacian-zero-points-are-eigenvectors",
            t,
            0.0,
            &ones,
            v,
            opts.residual_tol,
            "zero",
        ));
        if opts.local_mult {
            simple_point_rows_named(
                rep,
                "laplacian-zero-points-simple",
                t,
                0.0,
                &ones,
                v,
                "zero",
                opts,
            );
        } else {
            rep.checks.push(check_skip(
                "laplacian-zero-points-simple",
                "budget",
                "local multiplicity stage disabled for this run",
            ));
        }

        // Zero modes of the Laplacian vs radius eigenvectors of the
        // adjacency tensor: same phase congruence, so the counts agree.
        let a = Tensor::adjacency(hg)?;
        match variety::rho_eigenvariety(&a, opts.point_cap) {
            Ok(va) => rep.checks.push(check_eq(
                "laplacian-zero-count-equals-radius-variety-count",
                &v.count,
                &va.count,
                "zero modes of the Laplacian are phase twists of the adjacency radius eigenvectors",
            )),
            Err(e) => rep.checks.push(check_skip(
                "laplacian-zero-count-equals-radius-variety-count",
                &format!("error: {e}"),
                "",
            )),
        }

        // The nonnegative part of the Z-split carries the same variety.
        match t.z_tensor_split() {
            Ok((_, b)) => match variety::rho_eigenvariety(&b, opts.point_cap) {
                Ok(vb) => rep.checks.push(check_eq(
                    "z-split-variety-match",
                    &v.count,
                    &vb.count,
                    "zero eigenvariety of the Laplacian vs radius eigenvariety of its nonnegative part",
                )),
                Err(e) => rep.checks.push(check_skip(
                    "z-split-variety-match",
                    &format!("error: {e}"),
                    "",
                )),
            },
            Err(e) => rep.checks.push(check_skip(
                "z-split-variety-match",
                &format!("error: {e}"),
                "",
            )),
        }
    }

    // Exact multiplicity of the zero eigenvalue.
    let cp = compute_charpoly(t, opts, rep);
    if let Some(cpl) = &cp {
        match charpoly::algebraic_multiplicity(cpl, Complex64::zero(), opts.root_match_tol) {
            Ok(m0) => {
                let hypertree = hg.is_hypertree();
                if let Some(v) = &vzero {
                    rep.checks.push(CheckRow::new(
                        "laplacian-zero-multiplicity-equals-count",
                        eq_status(BigUint::from(m0.multiplicity) == v.count, hypertree),
                        m0.multiplicity,
                        &v.count,
                        if hypertree {
                            "equality theorem for the zero eigenvalue of a hypertree Laplacian"
                        } else {
                            "single-instance evidence for the zero-eigenvalue equality conjecture"
                        },
                    ));
                }
                if hypertree {
                    let k = hg.k();
                    let expect = BigUint::from(k).pow((hg.edges().len() * (k - 2)) as u32);
                    rep.checks.push(check_eq(
                        "hypertree-laplacian-zero-multiplicity",
                        m0.multiplicity,
                        &expect,
                        "closed form k^(m(k-2)) for the zero multiplicity of a hypertree Laplacian",
                    ));
                }
                // am(0) of the Laplacian vs am(rho) of the adjacency tensor.
                let a = Tensor::adjacency(hg)?;
                match charpoly::char_poly(&a, opts.degree_budget) {
                    Ok(cpa) => match perron::spectral_radius(&a, opts.tol, opts.max_iter) {
                        Ok(pa) => match charpoly::algebraic_multiplicity(
                            &cpa,
                            Complex64::new(pa.rho, 0.0),
                            opts.root_match_tol,
                        ) {
                            Ok(ma) => rep.checks.push(CheckRow::new(
                                "laplacian-zero-multiplicity-equals-radius-multiplicity",
                                eq_status(m0.multiplicity == ma.multiplicity, hypertree),
                                m0.multiplicity,
                                ma.multiplicity,
                                if hypertree {
                                    "hypertree theorem: the two closed forms coincide"
                                } else {
                                    "single-instance evidence for the general conjecture"
                                },
                            )),
                            Err(e) => rep.checks.push(check_skip(
                                "laplacian-zero-multiplicity-equals-radius-multiplicity",
                                &format!("error: {e}"),
                                "",
                            )),
                        },
                        Err(e) => rep.checks.push(check_skip(
                            "laplacian-zero-multiplicity-equals-radius-multiplicity",
                            &format!("error: {e}"),
                            "",
                        )),
                    },
                    Err(Error::DegreeBudget { degree, budget }) => {
                        rep.checks.push(check_skip(
                            "laplacian-zero-multiplicity-equals-radius-multiplicity",
                            "budget",
                            &format!(
                                "adjacency characteristic polynomial degree {degree} exceeds the budget {budget}"
                            ),
                        ));
                    }
                    Err(e) => rep.checks.push(check_skip(
                        "laplacian-zero-multiplicity-equals-radius-multiplicity",
                        &format!("error: {e}"),
                        "",
                    )),
                }
            }
            Err(e) => rep.checks.push(check_skip(
                "laplacian-zero-multiplicity-equals-count",
                &format!("error: {e}"),
                "zero could not be matched to a factor of the characteristic polynomial",
            )),
        }
    }
    Ok(())
}

/// Least-eigenvalue pipeline for a free-standing Z-tensor.
fn analyze_z_custom(t: &Tensor, opts: &AnalyzeOptions, rep: &mut AnalysisReport) -> Result<()> {
    let z = match perron::least_h_eigenvalue_z(t, opts.tol, opts.max_iter) {
        Ok(z) => z,
        Err(e) => {
            rep.checks.push(check_skip(
                "least-eigenpair-certified",
                &format!("error: {e}"),
                "least-eigenvalue computation failed; downstream checks skipped",
            ));
            return Ok(());
        }
    };
    rep.least_h_eigenvalue = Some(z.lambda_min);
    rep.diagonal_shift = Some(format_rat(&z.shift));
    if let Some(x) = &z.vector {
        rep.checks.push(check_le(
            "least-eigenpair-certified",
            perron::eigenpair_residual(t, z.lambda_min, x),
            opts.certificate_tol,
            "infinity-norm residual of the certified least eigenpair",
        ));
    }
    let (_, b) = t.z_tensor_split()?;
    let mut vb: Option<PhaseVariety> = None;
    if opts.variety {
        match variety::rho_eigenvariety(&b, opts.point_cap) {
            Ok(v) => {
                rep.varieties.push(section("least", &v));
                vb = Some(v);
            }
            Err(e) => rep.checks.push(check_skip(
                "least-variety-count-vs-enumeration",
                &format!("error: {e}"),
                "eigenvariety of the nonnegative part could not be computed",
            )),
        }
    }
    if let Some(v) = &vb {
        match &v.points {
            Some(pts) => rep.checks.push(check_eq(
                "least-variety-count-vs-enumeration",
                &v.count,
                pts.len(),
                "group-order formula vs direct congruence enumeration on the nonnegative part",
            )),
            None => rep.checks.push(check_skip(
                "least-variety-count-vs-enumeration",
                "budget",
                &format!("{} points exceed the enumeration cap", v.count),
            )),
        }
        let cp = compute_charpoly(t, opts, rep);
        if let Some(cpv) = &cp {
            match charpoly::algebraic_multiplicity(
                cpv,
                Complex64::new(z.lambda_min, 0.0),
                opts.root_match_tol,
            ) {
                Ok(m) => {
                    let am = BigUint::from(m.multiplicity);
                    rep.checks.push(CheckRow::new(
                        "least-multiplicity-at-least-variety-count",
                        if am >= v.count { CheckStatus::Verified } else { CheckStatus::Refuted },
                        m.multiplicity,
                        &v.count,
                        "for a weakly irreducible Z-tensor the least multiplicity dominates the variety size",
                    ));
                    rep.checks.push(CheckRow::new(
                        "least-multiplicity-equals-variety-count",
                        eq_status(am == v.count, false),
                        m.multiplicity,
                        &v.count,
                        "single-instance evidence for the least-eigenvalue equality conjecture",
                    ));
                }
                Err(e) => rep.checks.push(check_skip(
                    "least-multiplicity-equals-variety-count",
                    &format!("error: {e}"),
                    "the least eigenvalue could not be matched to a factor",
                )),
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn single_edge() -> Hypergraph {
        Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()
    }

    fn row<'a>(rep: &'a AnalysisReport, name: &str) -> &'a CheckRow {
        rep.checks
            .iter()
            .find(|c| c.name == name)
            .unwrap_or_else(|| panic!("missing check row `{name}`"))
    }

    #[test]
    fn single_edge_adjacency_full_report() {
        let rep =
            analyze_hypergraph(&single_edge(), TensorKind::Adjacency, &AnalyzeOptions::default())
                .unwrap();
        assert!(rep.connected);
        assert!((rep.spectral_radius.unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(rep.cyclic_index_combinatorial, Some(3));
        assert_eq!(rep.cyclic_index_polynomial.as_deref(), Some("3"));
        assert_eq!(rep.stabilizing_index.as_deref(), Some("3"));
        assert_eq!(rep.circle_multiplicities.as_deref(), Some(&[3, 3, 3][..]));
        // Classes 0, 1, 2 all enumerated with three points each.
        assert_eq!(rep.varieties.len(), 3);
        for v in &rep.varieties {
            assert_eq!(v.count, "3");
            assert_eq!(v.points.as_ref().unwrap().len(), 3);
        }
        assert!(!rep.checks.iter().any(|c| c.is_refuted()), "{:#?}", rep.checks);
        assert!(!rep.checks.iter().any(|c| c.is_skipped()), "{:#?}", rep.checks);
        assert_eq!(rep.exit_code(), 0);
        // The family rows are theorem-backed on a hypertree.
        assert_eq!(row(&rep, "hypertree-radius-multiplicity").status, "verified");
        assert_eq!(row(&rep, "radius-multiplicity-equals-variety-count").status, "verified");
        assert_eq!(row(&rep, "radius-multiplicity-equals-variety-count").lhs, "3");
        assert_eq!(row(&rep, "radius-multiplicity-equals-variety-count").rhs, "3");
    }

    #[test]
    fn budget_limited_run_marks_skips() {
        let opts = AnalyzeOptions { degree_budget: 5, ..AnalyzeOptions::default() };
        let rep = analyze_hypergraph(&single_edge(), TensorKind::Adjacency, &opts).unwrap();
        assert_eq!(row(&rep, "characteristic-polynomial").status, "skipped:budget");
        assert!(rep.characteristic_polynomial.is_none());
        assert!(rep.cyclic_index_polynomial.is_none());
        assert!(!rep.checks.iter().any(|c| c.is_refuted()));
        assert_eq!(rep.exit_code(), 4);
    }

    #[test]
    fn disconnected_input_is_skipped() {
        let h = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let rep = analyze_hypergraph(&h, TensorKind::Adjacency, &AnalyzeOptions::default()).unwrap();
        assert!(!rep.connected);
        assert_eq!(rep.checks.len(), 1);
        assert_eq!(rep.checks[0].status, "skipped: disconnected");
        assert_eq!(rep.exit_code(), 4);
    }

    #[test]
    fn single_edge_laplacian_report() {
        let rep =
            analyze_hypergraph(&single_edge(), TensorKind::Laplacian, &AnalyzeOptions::default())
                .unwrap();
        assert!(rep.least_h_eigenvalue.unwrap().abs() < 1e-10);
        assert_eq!(rep.diagonal_shift.as_deref(), Some("1"));
        assert_eq!(row(&rep, "laplacian-annihilates-ones").status, "verified");
        assert_eq!(row(&rep, "hypertree-laplacian-zero-multiplicity").lhs, "3");
        assert_eq!(row(&rep, "hypertree-laplacian-zero-multiplicity").status, "verified");
        assert_eq!(
            row(&rep, "laplacian-zero-multiplicity-equals-radius-multiplicity").status,
            "verified"
        );
        assert_eq!(row(&rep, "z-split-variety-match").lhs, "3");
        assert_eq!(rep.varieties.len(), 1);
        assert_eq!(rep.varieties[0].label, "zero");
        assert_eq!(rep.varieties[0].count, "3");
        assert_eq!(rep.exit_code(), 0, "{:#?}", rep.checks);
    }

    #[test]
    fn single_edge_signless_report() {
        let rep =
            analyze_hypergraph(&single_edge(), TensorKind::Signless, &AnalyzeOptions::default())
                .unwrap();
        assert!((rep.spectral_radius.unwrap() - 2.0).abs() < 1e-9);
        // Odd order: no zero eigenvalue on the unit-magnitude variety.
        let ze = row(&rep, "signless-zero-exists");
        assert_eq!(ze.status, "verified");
        assert_eq!(ze.lhs, "false");
        // The equality row is instance evidence here, not a theorem.
        assert_eq!(
            row(&rep, "radius-multiplicity-equals-variety-count").status,
            "verified (instance)"
        );
        assert_eq!(row(&rep, "radius-multiplicity-equals-variety-count").lhs, "3");
        assert_eq!(rep.exit_code(), 0, "{:#?}", rep.checks);
    }

    #[test]
    fn report_round_trip_and_projections() {
        let rep =
            analyze_hypergraph(&single_edge(), TensorKind::Adjacency, &AnalyzeOptions::default())
                .unwrap();
        let json = rep.to_json();
        let back = AnalysisReport::from_json(&json).unwrap();
        assert_eq!(back, rep);
        // Deterministic serialization: same analysis, same bytes.
        let rep2 =
            analyze_hypergraph(&single_edge(), TensorKind::Adjacency, &AnalyzeOptions::default())
                .unwrap();
        assert_eq!(rep2.to_json(), json);
        let csv = rep.to_csv();
        assert!(csv.starts_with("name,status,lhs,rhs,detail"));
        assert!(csv.contains("radius-certified"));
        let md = rep.to_markdown();
        assert!(md.contains("| check | status | lhs | rhs | detail |"));
        assert!(md.contains("Verdict: all checks verified."));
    }

    #[test]
    fn exit_codes_from_rows() {
        let verified = CheckRow::new("a", CheckStatus::Verified, 1, 1, "");
        let instance = CheckRow::new("b", CheckStatus::VerifiedInstance, 1, 1, "");
        let refuted = CheckRow::new("c", CheckStatus::Refuted, 1, 2, "");
        let skipped = check_skip("d", "budget", "");
        assert_eq!(exit_code_for(&[verified.clone(), instance.clone()]), 0);
        assert_eq!(exit_code_for(&[verified.clone(), skipped.clone()]), 4);
        assert_eq!(exit_code_for(&[verified, skipped, refuted]), 2);
        assert_eq!(exit_code_for(&[]), 0);
    }
}
