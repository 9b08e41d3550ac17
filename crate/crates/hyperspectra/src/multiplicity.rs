//! Local (intersection) multiplicity of isolated solutions of polynomial
//! systems, by the truncated dual-space construction: the nullities of a
//! family of derivative matrices give the Hilbert function of the local
//! quotient ring, and their stabilized sum is the multiplicity. Includes the
//! Jacobian simplicity criterion, a consistency check between the two, and
//! the bridge from projective eigenvariety points to affine systems.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::macaulay::monomials_of_degree;
use crate::rational::rat_to_f64;
use crate::tensor::Tensor;
use crate::variety::PhaseVariety;

/// Relative singular-value cutoff for numeric rank: singular values below
/// `RANK_TOL_FACTOR * sigma_max` count as zero.
pub const RANK_TOL_FACTOR: f64 = 1e-8;

/// Highest dual-space order tried before giving up on stabilization.
pub const DEFAULT_ORDER_CAP: u32 = 8;

/// A polynomial system in `vars` complex variables: each polynomial maps an
/// exponent vector (length `vars`) to its coefficient.
#[derive(Clone, Debug)]
pub struct AffineSystem {
    vars: usize,
    polys: Vec<BTreeMap<Vec<u32>, Complex64>>,
}

impl AffineSystem {
    /// An isolated common zero needs at least as many equations as
    /// variables; fewer is rejected up front.
    pub fn new(vars: usize, polys: Vec<BTreeMap<Vec<u32>, Complex64>>) -> Result<Self> {
        if polys.len() < vars {
            return Err(Error::TooFewPolynomials { polys: polys.len(), vars });
        }
        for p in &polys {
            if p.keys().any(|e| e.len() != vars) {
                return Err(Error::InvalidParameter(
                    "exponent vector length disagrees with variable count".into(),
                ));
            }
        }
        Ok(AffineSystem { vars, polys })
    }

    /// The eigenvector equations `lambda x_i^{k-1} - (A x^{k-1})_i` with the
    /// chart coordinate set to 1: `n` polynomials in `n - 1` variables. The
    /// remaining variables keep their order, skipping the chart coordinate.
    pub fn from_eigen_pair(t: &Tensor, lambda: Complex64, chart: usize) -> Result<Self> {
        let n = t.n();
        if n < 2 {
            return Err(Error::ResultantDimension { n });
        }
        if chart >= n {
            return Err(Error::InvalidParameter(format!(
                "chart coordinate {chart} out of range for dimension {n}"
            )));
        }
        let system = crate::macaulay::EigenSystem::from_tensor(t);
        let keep: Vec<usize> = (0..n).filter(|&v| v != chart).collect();
        let mut polys = Vec::with_capacity(n);
        for i in 0..n {
            let mut poly: BTreeMap<Vec<u32>, Complex64> = BTreeMap::new();
            for (exp, c) in system.contraction_part(i) {
                let truncated: Vec<u32> = keep.iter().map(|&v| exp[v]).collect();
                let slot = poly.entry(truncated).or_insert_with(|| Complex64::new(0.0, 0.0));
                *slot -= Complex64::new(rat_to_f64(c), 0.0);
            }
            let mut diag = vec![0u32; n];
            diag[i] = (t.k() - 1) as u32;
            let truncated: Vec<u32> = keep.iter().map(|&v| diag[v]).collect();
            let slot = poly.entry(truncated).or_insert_with(|| Complex64::new(0.0, 0.0));
            *slot += lambda;
            poly.retain(|_, c| c.norm() != 0.0);
            polys.push(poly);
        }
        AffineSystem::new(n - 1, polys)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn poly_count(&self) -> usize {
        self.polys.len()
    }

    pub fn eval(&self, i: usize, p: &[Complex64]) -> Complex64 {
        self.polys[i]
            .iter()
            .map(|(e, c)| c * monomial_value(e, p))
            .sum()
    }

    /// Largest `|f_i(p)|` over the system.
    pub fn residual(&self, p: &[Complex64]) -> f64 {
        (0..self.polys.len())
            .map(|i| self.eval(i, p).norm())
            .fold(0.0, f64::max)
    }

    /// Normalized (divided) derivative of `f_i` of multi-order `m`,
    /// evaluated at `p`: each term `c x^e` contributes
    /// `c * prod binom(e_s, m_s) * p^(e-m)`.
    pub fn derivative_at(&self, i: usize, m: &[u32], p: &[Complex64]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        'terms: for (e, c) in &self.polys[i] {
            let mut factor = 1.0f64;
            for (es, ms) in e.iter().zip(m) {
                if es < ms {
                    continue 'terms;
                }
                factor *= binomial_f64(*es, *ms);
            }
            let shifted: Vec<u32> = e.iter().zip(m).map(|(es, ms)| es - ms).collect();
            acc += c * factor * monomial_value(&shifted, p);
        }
        acc
    }
}

fn monomial_value(e: &[u32], p: &[Complex64]) -> Complex64 {
    e.iter()
        .zip(p)
        .fold(Complex64::new(1.0, 0.0), |acc, (&es, pi)| acc * pi.powu(es))
}

fn binomial_f64(n: u32, k: u32) -> f64 {
    let mut v = 1.0;
    for i in 0..k {
        v = v * (n - i) as f64 / (i + 1) as f64;
    }
    v
}

/// All multi-indices in `vars` variables of total degree `<= d`, degree by
/// degree.
fn monomials_up_to(vars: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|deg| monomials_of_degree(vars, deg)).collect()
}

/// Numeric rank: singular values above `RANK_TOL_FACTOR * sigma_max`.
fn numeric_rank(m: DMatrix<Complex64>) -> usize {
    if m.is_empty() {
        return 0;
    }
    let sv = m.svd(false, false).singular_values;
    let sigma_max = sv.iter().cloned().fold(0.0, f64::max);
    if sigma_max == 0.0 {
        return 0;
    }
    sv.iter().filter(|&&s| s > RANK_TOL_FACTOR * sigma_max).count()
}

/// Jacobian of the system at `p` and its numeric rank. A common zero is
/// simple exactly when the rank equals the number of variables.
pub fn jacobian_rank(sys: &AffineSystem, p: &[Complex64]) -> usize {
    let rows = sys.poly_count();
    let cols = sys.vars();
    let j = DMatrix::from_fn(rows, cols, |i, v| {
        let mut m = vec![0u32; cols];
        m[v] = 1;
        sys.derivative_at(i, &m, p)
    });
    numeric_rank(j)
}

/// Local multiplicity data at an isolated zero: the nullity ladder, the
/// Hilbert function it induces, and their stabilized sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalMultiplicity {
    pub multiplicity: usize,
    /// `H(0), H(1), ...` up to (excluding) the first zero value.
    pub hilbert: Vec<usize>,
    /// `nu_0, nu_1, ...` — dual-space dimensions per truncation order.
    pub nullities: Vec<usize>,
}

/// Multiplicity of the system's zero at `p` through truncated dual spaces:
/// for each order `a` the matrix `S_a` has one row per (multi-index `kappa`
/// with `|kappa| < a`, equation `i`) and one column per multi-index `j` with
/// `|j| <= a`; its entry is the normalized derivative `d_(j-kappa) f_i (p)`
/// when `kappa <= j`, else zero. The nullity of `S_a` is the dual-space
/// dimension `nu_a`; the multiplicity is `nu_a` once it stabilizes.
pub fn local_multiplicity(sys: &AffineSystem, p: &[Complex64], order_cap: u32) -> Result<LocalMultiplicity> {
    if p.len() != sys.vars() {
        return Err(Error::InvalidParameter(format!(
            "point has {} coordinates for {} variables",
            p.len(),
            sys.vars()
        )));
    }
    let mut nullities = vec![1usize]; // nu_0: the evaluation functional alone
    let mut hilbert = vec![1usize];
    for a in 1..=order_cap {
        let cols = monomials_up_to(sys.vars(), a);
        let kappas = monomials_up_to(sys.vars(), a - 1);
        let rows = kappas.len() * sys.poly_count();
        let s = DMatrix::from_fn(rows, cols.len(), |r, c| {
            let kappa = &kappas[r / sys.poly_count()];
            let i = r % sys.poly_count();
            let j = &cols[c];
            if kappa.iter().zip(j).all(|(ka, ja)| ka <= ja) {
                let m: Vec<u32> = j.iter().zip(kappa).map(|(ja, ka)| ja - ka).collect();
                sys.derivative_at(i, &m, p)
            } else {
                Complex64::new(0.0, 0.0)
            }
        });
        let nu = cols.len() - numeric_rank(s);
        let prev = *nullities.last().unwrap();
        if nu < prev {
            return Err(Error::Other(format!(
                "dual-space dimension dropped from {prev} to {nu} at order {a}; numeric rank is unreliable here"
            )));
        }
        nullities.push(nu);
        if nu == prev {
            return Ok(LocalMultiplicity { multiplicity: nu, hilbert, nullities });
        }
        hilbert.push(nu - prev);
    }
    Err(Error::MultiplicityCapExceeded { cap: order_cap })
}

/// Jacobian simplicity and dual-space multiplicity for one point, checked
/// against each other: the point is simple (full Jacobian rank) exactly when
/// the multiplicity is 1, and any disagreement is an error, not a guess.
#[derive(Clone, Debug)]
pub struct SimplicityCheck {
    pub jacobian_rank: usize,
    pub vars: usize,
    pub local: LocalMultiplicity,
    pub simple: bool,
}

pub fn check_point(
    sys: &AffineSystem,
    p: &[Complex64],
    residual_tol: f64,
    order_cap: u32,
) -> Result<SimplicityCheck> {
    let residual = sys.residual(p);
    if residual > residual_tol {
        return Err(Error::ResidualTooLarge { residual, tol: residual_tol });
    }
    let rank = jacobian_rank(sys, p);
    let local = local_multiplicity(sys, p, order_cap)?;
    let by_rank = rank == sys.vars();
    let by_mult = local.multiplicity == 1;
    if by_rank != by_mult {
        return Err(Error::SimplicityCriteriaDisagree {
            rank,
            vars: sys.vars(),
            multiplicity: local.multiplicity as u64,
        });
    }
    Ok(SimplicityCheck { jacobian_rank: rank, vars: sys.vars(), local, simple: by_rank })
}

/// Multiplicity bookkeeping for every enumerated point of a phase variety:
/// each point is turned into an affine zero in the chart of the last
/// coordinate and checked; the per-point multiplicities are returned in the
/// variety's point order. Their sum is the quantity the characteristic
/// polynomial's algebraic multiplicity is compared against.
pub fn variety_point_checks(
    t: &Tensor,
    base_eigenvalue: f64,
    magnitudes: &[f64],
    variety: &PhaseVariety,
    residual_tol: f64,
    order_cap: u32,
) -> Result<Vec<SimplicityCheck>> {
    let points = variety.points.as_ref().ok_or_else(|| {
        Error::InvalidParameter("variety has no enumerated points to check".into())
    })?;
    let k = variety.k as f64;
    let lambda = Complex64::from_polar(
        1.0,
        2.0 * std::f64::consts::PI * variety.class_shift as f64 / k,
    ) * base_eigenvalue;
    let chart = t.n() - 1;
    let sys = AffineSystem::from_eigen_pair(t, lambda, chart)?;
    let mut out = Vec::with_capacity(points.len());
    for phases in points {
        let x: Vec<Complex64> = magnitudes
            .iter()
            .zip(phases)
            .map(|(&m, &ph)| Complex64::from_polar(m, 2.0 * std::f64::consts::PI * ph as f64 / k))
            .collect();
        let last = x[chart];
        let p: Vec<Complex64> = (0..t.n()).filter(|&v| v != chart).map(|v| x[v] / last).collect();
        out.push(check_point(&sys, &p, residual_tol, order_cap)?);
    }
    Ok(out)
}
