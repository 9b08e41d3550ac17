use thiserror::Error;

/// Crate-wide error type.
///
/// Every fallible operation in the workbench reports one of these variants;
/// the CLI maps them onto exit codes (usage problems vs. refuted checks vs.
/// budget skips) without further downcasting.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge {edge:?} has {got} vertices, expected k = {k}")]
    EdgeSize { edge: Vec<usize>, got: usize, k: usize },

    #[error("edge {edge:?} repeats a vertex")]
    EdgeRepeatsVertex { edge: Vec<usize> },

    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("hypergraph is not connected")]
    Disconnected,

    #[error("tensor index {idx:?} invalid for order {k}, dimension {n}")]
    TensorIndex { idx: Vec<usize>, k: usize, n: usize },

    #[error("symmetric-mode entry {idx:?} must be sorted ascending")]
    UnsortedSymmetricIndex { idx: Vec<usize> },

    #[error("duplicate tensor entry at {idx:?}")]
    DuplicateTensorEntry { idx: Vec<usize> },

    #[error("tensor has a negative entry at {idx:?}; operation requires a nonnegative tensor")]
    NegativeEntry { idx: Vec<usize> },

    #[error("tensor is not combinatorially symmetric (entries at {a:?} and {b:?} differ)")]
    NotCombinatorialSymmetric { a: Vec<usize>, b: Vec<usize> },

    #[error("tensor is not weakly irreducible")]
    NotWeaklyIrreducible,

    #[error("tensor has a positive off-diagonal entry at {idx:?}, so it is not a Z-tensor")]
    NotZTensor { idx: Vec<usize> },

    #[error("diagonal similarity has a zero entry at position {pos}")]
    ZeroDiagonalEntry { pos: usize },

    #[error("diagonal similarity produced a non-real entry at {idx:?}; phases do not cancel")]
    NonRealSimilarityResult { idx: Vec<usize> },

    #[error("matrix row {row} sums to {sum}; expected {k} — not an incidence of a {k}-uniform structure")]
    RowSumNotUniform { row: usize, sum: String, k: u64 },

    #[error("linear system has no solution modulo {k}")]
    UnsolvableModK { k: u64 },

    #[error("solution count {count} exceeds enumeration cap {cap}")]
    EnumerationCap { count: String, cap: u64 },

    #[error("power iteration did not reach tolerance {tol} within {max_iter} iterations (gap {gap})")]
    PowerIterationStalled { tol: f64, max_iter: u64, gap: f64 },

    #[error("characteristic polynomial degree {degree} exceeds budget {budget}")]
    DegreeBudget { degree: u64, budget: u64 },

    #[error("resultant needs at least 2 variables, got n = {n}")]
    ResultantDimension { n: usize },

    #[error("too many degenerate evaluation nodes ({skipped} skipped for {wanted} samples)")]
    DegenerateNodes { skipped: u64, wanted: u64 },

    #[error("interpolation nodes contain a duplicate at {node}")]
    DuplicateNode { node: String },

    #[error("samples are inconsistent with a degree-{degree_bound} polynomial (node {node} off by {diff})")]
    InconsistentSamples { degree_bound: usize, node: String, diff: String },

    #[error("value {value} does not match any root of the square-free factors (best scaled distance {best})")]
    NoMatchingFactor { value: String, best: String },

    #[error("value {value} matches {count} square-free factors within tolerance; cannot attribute a multiplicity")]
    AmbiguousFactorMatch { value: String, count: usize },

    #[error("system has {polys} polynomials in {vars} variables; the dual-space method needs at least as many polynomials as variables")]
    TooFewPolynomials { polys: usize, vars: usize },

    #[error("dual-space dimension still growing at order {cap}; point is not isolated at this cap")]
    MultiplicityCapExceeded { cap: u32 },

    #[error("simplicity criteria disagree at a point: Jacobian rank {rank} of {vars}, local multiplicity {multiplicity}")]
    SimplicityCriteriaDisagree { rank: usize, vars: usize, multiplicity: u64 },

    #[error("point fails the residual check: {residual} > {tol}")]
    ResidualTooLarge { residual: f64, tol: f64 },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
