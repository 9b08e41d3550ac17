//! Exact-plus-numeric workbench for the spectral theory of tensors and
//! uniform hypergraphs.
//!
//! The crate computes, at desk scale and with controlled tolerances:
//!
//! * spectral radii and Perron vectors of nonnegative weakly irreducible
//!   tensors (power iteration with Collatz–Wielandt bounds),
//! * exact characteristic polynomials via Macaulay resultants
//!   (evaluation–interpolation over `Q` with a fraction-free Bareiss kernel),
//! * algebraic multiplicities, cyclic indices and spectral-symmetry structure
//!   from the exact polynomial,
//! * projective eigenvarieties on the spectral circle by solving phase
//!   systems over `Z_k` (Smith normal form, counting, enumeration),
//! * local (intersection) multiplicities of eigenvariety points by the
//!   dual-space / multiplicity-matrix method, and
//! * cross-checks tying all of the above together on hypergraph families
//!   (hypertrees, power hypergraphs, complete hypergraphs).
//!
//! Entry points are the module-level functions; the `examples/` directory
//! exercises one capability per program, and the thin `workbench` binary
//! drives the same library code behind `generate`, `analyze` and
//! `verify-suite` subcommands.

pub mod charpoly;
pub mod error;
pub mod hypergraph;
pub mod macaulay;
pub mod multiplicity;
pub mod perron;
pub mod poly;
pub mod rational;
pub mod report;
pub mod suite;
pub mod tensor;
pub mod variety;
pub mod zklinear;

pub use error::{Error, Result};
