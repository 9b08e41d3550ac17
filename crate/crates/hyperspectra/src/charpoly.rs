//! Exact characteristic polynomials of tensors by evaluation and
//! interpolation: the Macaulay resultant quotient is sampled at integer
//! values of `lambda`, degenerate nodes are skipped, and the unique
//! degree-`N` polynomial through the good samples is reconstructed and
//! cross-checked on extra nodes. On top of the polynomial sit algebraic
//! multiplicities (through square-free factorization), the cyclic index of
//! the spectrum, and power sums of the eigenvalues via Newton's identities.

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::macaulay::MacaulaySystem;
use crate::poly::{interpolate, square_free_decompose, RationalPoly};
use crate::rational::{format_rat, parse_rat, rat_int};
use crate::tensor::Tensor;

/// Default ceiling on the polynomial degree `n (k-1)^(n-1)` a single call is
/// willing to compute.
pub const DEFAULT_DEGREE_BUDGET: u64 = 200;

/// Relative tolerance for matching a numeric eigenvalue to a square-free
/// factor: `|g(value)| / onenorm(g)` must fall below this.
pub const DEFAULT_ROOT_MATCH_TOL: f64 = 1e-6;

/// Characteristic polynomial of a tensor: monic of degree `n (k-1)^(n-1)`,
/// tagged with the fingerprint of the tensor it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct CharPoly {
    pub poly: RationalPoly,
    pub k: usize,
    pub n: usize,
    pub tensor_fingerprint: String,
    /// Unit the raw resultant was divided by to make the stored polynomial
    /// monic. `None` when it came out monic on its own — every verified case.
    pub normalized_by: Option<BigRational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharPolyJson {
    k: usize,
    n: usize,
    degree: usize,
    /// Coefficients from the constant term upward, as exact rationals.
    coefficients: Vec<String>,
    tensor_fingerprint: String,
    normalized_by: Option<String>,
}

/// Degree of the characteristic polynomial: `n (k-1)^(n-1)`.
pub fn char_poly_degree(k: usize, n: usize) -> u64 {
    (n as u64) * ((k - 1) as u64).pow((n - 1) as u32)
}

/// Compute the characteristic polynomial exactly. Refuses degrees above
/// `budget` rather than starting a computation that cannot finish at desk
/// scale.
pub fn char_poly(t: &Tensor, budget: u64) -> Result<CharPoly> {
    let degree = char_poly_degree(t.k(), t.n());
    if degree > budget {
        return Err(Error::DegreeBudget { degree, budget });
    }
    if t.n() == 1 {
        // Single equation lambda x^{k-1} = a x^{k-1}: one eigenvalue.
        let a = t.get(&vec![0; t.k()])?;
        let poly = RationalPoly::from_coeffs(vec![-a, BigRational::one()]);
        return Ok(CharPoly {
            poly,
            k: t.k(),
            n: 1,
            tensor_fingerprint: t.fingerprint(),
            normalized_by: None,
        });
    }
    let system = MacaulaySystem::new(t)?;
    let wanted = degree as usize + 2; // degree + 1 determine, the rest check
    let mut samples: Vec<(BigRational, BigRational)> = Vec::with_capacity(wanted);
    let mut skipped = 0u64;
    let mut next_node = 0i64;
    const CHUNK: usize = 8;
    while samples.len() < wanted {
        if skipped > 10 * degree {
            return Err(Error::DegenerateNodes { skipped, wanted: degree + 2 });
        }
        let nodes: Vec<BigRational> = (0..CHUNK as i64)
            .map(|j| rat_int(node_sequence(next_node + j)))
            .collect();
        next_node += CHUNK as i64;
        let values: Vec<Option<BigRational>> =
            nodes.par_iter().map(|l| system.resultant_at(l)).collect();
        for (node, value) in nodes.into_iter().zip(values) {
            match value {
                Some(v) => {
                    if samples.len() < wanted {
                        samples.push((node, v));
                    }
                }
                None => skipped += 1,
            }
        }
    }
    let poly = interpolate(&samples, degree as usize)?;
    let (poly, normalized_by) = match poly.degree() {
        Some(d) if d == degree as usize => {
            if poly.is_monic() {
                (poly, None)
            } else {
                let (monic, unit) = poly.monic();
                (monic, Some(unit))
            }
        }
        other => {
            return Err(Error::Other(format!(
                "characteristic polynomial came out with degree {other:?}, expected {degree}"
            )))
        }
    };
    Ok(CharPoly {
        poly,
        k: t.k(),
        n: t.n(),
        tensor_fingerprint: t.fingerprint(),
        normalized_by,
    })
}

/// Sample nodes in the order 0, 1, -1, 2, -2, ...
fn node_sequence(i: i64) -> i64 {
    if i == 0 {
        0
    } else if i % 2 == 1 {
        (i + 1) / 2
    } else {
        -(i / 2)
    }
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("characteristic polynomial is never zero")
    }

    pub fn to_json(&self) -> String {
        let raw = CharPolyJson {
            k: self.k,
            n: self.n,
            degree: self.degree(),
            coefficients: self.poly.coeffs().iter().map(format_rat).collect(),
            tensor_fingerprint: self.tensor_fingerprint.clone(),
            normalized_by: self.normalized_by.as_ref().map(format_rat),
        };
        serde_json::to_string_pretty(&raw).expect("charpoly serialization")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: CharPolyJson = serde_json::from_str(s)?;
        let coeffs = raw
            .coefficients
            .iter()
            .map(|c| parse_rat(c))
            .collect::<Result<Vec<_>>>()?;
        let poly = RationalPoly::from_coeffs(coeffs);
        if poly.degree() != Some(raw.degree) {
            return Err(Error::Other(format!(
                "stored degree {} disagrees with coefficients (degree {:?})",
                raw.degree,
                poly.degree()
            )));
        }
        let normalized_by = match raw.normalized_by {
            Some(u) => Some(parse_rat(&u)?),
            None => None,
        };
        Ok(CharPoly {
            poly,
            k: raw.k,
            n: raw.n,
            tensor_fingerprint: raw.tensor_fingerprint,
            normalized_by,
        })
    }
}

/// A numeric eigenvalue matched to one square-free factor of the
/// characteristic polynomial.
#[derive(Clone, Debug)]
pub struct MultiplicityMatch {
    /// Algebraic multiplicity: the factor's exponent in the factorization.
    pub multiplicity: usize,
    /// The square-free factor the value matched (monic, exact).
    pub factor: RationalPoly,
    /// `|factor(value)| / onenorm(factor)` for the matched factor.
    pub scaled_residual: f64,
}

/// Algebraic multiplicity of a numeric (possibly complex) eigenvalue:
/// square-free factorization splits the polynomial into factors of equal
/// multiplicity, and the value must match exactly one of them within
/// `rel_tol`. Refuses to answer when no factor or several factors match.
pub fn algebraic_multiplicity(
    cp: &CharPoly,
    value: Complex64,
    rel_tol: f64,
) -> Result<MultiplicityMatch> {
    let (_, factors) = square_free_decompose(&cp.poly)?;
    let mut matches: Vec<(usize, f64)> = Vec::new();
    let mut best = f64::INFINITY;
    for (fi, (g, _)) in factors.iter().enumerate() {
        let norm = g.coeff_one_norm();
        let scaled = g.eval_complex(value).norm() / norm;
        best = best.min(scaled);
        if scaled < rel_tol {
            matches.push((fi, scaled));
        }
    }
    match matches.len() {
        0 => Err(Error::NoMatchingFactor {
            value: format!("{value}"),
            best: format!("{best:.3e}"),
        }),
        1 => {
            let (fi, scaled_residual) = matches[0];
            Ok(MultiplicityMatch {
                multiplicity: factors[fi].1 as usize,
                factor: factors[fi].0.clone(),
                scaled_residual,
            })
        }
        m => Err(Error::AmbiguousFactorMatch { value: format!("{value}"), count: m }),
    }
}

/// Largest `ell` such that the spectrum (as a multiset) is invariant under
/// multiplication by `e^(2 pi i / ell)`: the gcd of the offsets of the
/// nonzero coefficients below the leading term. `None` for `lambda^N`, whose
/// spectrum `{0}` is invariant under every rotation.
pub fn cyclic_index_from_char_poly(cp: &CharPoly) -> Option<u64> {
    let n = cp.degree();
    let mut g: u64 = 0;
    for (d, c) in cp.poly.coeffs().iter().enumerate() {
        if d < n && !c.is_zero() {
            g = num_integer::gcd(g, (n - d) as u64);
        }
    }
    if g == 0 {
        None
    } else {
        Some(g)
    }
}

/// Power sums `p_d = sum lambda_i^d` of the roots for `d = 1..=count`, by
/// Newton's identities on the coefficients — no root finding involved.
pub fn power_sums(cp: &CharPoly, count: usize) -> Vec<BigRational> {
    let deg = cp.degree();
    // c[j] is the coefficient of lambda^(N-j); c[0] = 1 since monic.
    let c: Vec<BigRational> =
        (0..=deg).map(|j| cp.poly.coeff(deg - j)).collect();
    let mut p: Vec<BigRational> = Vec::with_capacity(count + 1);
    p.push(rat_int(deg as i64)); // p_0 = number of roots
    for d in 1..=count {
        let mut s = BigRational::zero();
        for j in 1..d.min(deg + 1) {
            s += &c[j] * &p[d - j];
        }
        if d <= deg {
            s += BigRational::from_integer((d as i64).into()) * &c[d];
        }
        p.push(-s);
    }
    p.remove(0);
    p
}

/// Whether the spectrum is invariant under rotation by `e^(2 pi i / ell)`:
/// every nonzero coefficient must sit at an offset divisible by `ell`.
pub fn is_rotation_invariant(cp: &CharPoly, ell: u64) -> bool {
    match cyclic_index_from_char_poly(cp) {
        None => true,
        Some(g) => g % ell == 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::rational::rat;

    fn single_edge_tensor() -> Tensor {
        Tensor::adjacency(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()).unwrap()
    }

    #[test]
    fn node_sequence_alternates() {
        let got: Vec<i64> = (0..7).map(node_sequence).collect();
        assert_eq!(got, vec![0, 1, -1, 2, -2, 3, -3]);
    }

    #[test]
    fn single_edge_polynomial_is_exact() {
        let cp = char_poly(&single_edge_tensor(), DEFAULT_DEGREE_BUDGET).unwrap();
        let want = RationalPoly::from_ints(&[0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1]);
        assert_eq!(cp.poly, want);
        assert_eq!(cp.degree(), 12);
        assert!(cp.normalized_by.is_none());
        assert_eq!(cp.tensor_fingerprint, single_edge_tensor().fingerprint());
    }

    #[test]
    fn diagonal_tensors_match_closed_form() {
        // prod_i (lambda - a_i)^((k-1)^(n-1)) for diagonal tensors.
        let t = Tensor::diagonal(3, &[rat_int(1), rat_int(4)]).unwrap();
        let cp = char_poly(&t, DEFAULT_DEGREE_BUDGET).unwrap();
        let lin1 = RationalPoly::from_ints(&[-1, 1]);
        let lin4 = RationalPoly::from_ints(&[-4, 1]);
        let want = lin1.mul(&lin1).mul(&lin4).mul(&lin4);
        assert_eq!(cp.poly, want);
        assert!(cp.normalized_by.is_none());

        // Rational diagonal entries work the same.
        let t = Tensor::diagonal(3, &[rat(1, 2), rat(-3, 4)]).unwrap();
        let cp = char_poly(&t, DEFAULT_DEGREE_BUDGET).unwrap();
        let l1 = RationalPoly::from_coeffs(vec![rat(-1, 2), BigRational::one()]);
        let l2 = RationalPoly::from_coeffs(vec![rat(3, 4), BigRational::one()]);
        assert_eq!(cp.poly, l1.mul(&l1).mul(&l2).mul(&l2));
    }

    #[test]
    fn order_two_matches_cofactor_determinant() {
        // Triangle graph: det(lambda I - A) = lambda^3 - 3 lambda - 2.
        let tri = Hypergraph::new(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let cp = char_poly(&Tensor::adjacency(&tri).unwrap(), DEFAULT_DEGREE_BUDGET).unwrap();
        assert_eq!(cp.poly, RationalPoly::from_ints(&[-2, -3, 0, 1]));
    }

    #[test]
    fn zero_tensor_gives_pure_power() {
        let t = Tensor::new(3, 2, crate::tensor::TensorMode::Symmetric).unwrap();
        let cp = char_poly(&t, DEFAULT_DEGREE_BUDGET).unwrap();
        assert_eq!(cp.poly, RationalPoly::from_ints(&[0, 0, 0, 0, 1]));
        assert_eq!(cyclic_index_from_char_poly(&cp), None);
    }

    #[test]
    fn dimension_one_short_circuit() {
        let t = Tensor::diagonal(4, &[rat(7, 2)]).unwrap();
        let cp = char_poly(&t, DEFAULT_DEGREE_BUDGET).unwrap();
        assert_eq!(cp.poly, RationalPoly::from_coeffs(vec![rat(-7, 2), BigRational::one()]));
    }

    #[test]
    fn budget_is_enforced_up_front() {
        let t = single_edge_tensor();
        match char_poly(&t, 10) {
            Err(Error::DegreeBudget { degree: 12, budget: 10 }) => {}
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn multiplicities_from_square_free_factors() {
        let cp = char_poly(&single_edge_tensor(), DEFAULT_DEGREE_BUDGET).unwrap();
        // Spectrum: 0 and the three cube roots of unity, each with
        // multiplicity 3; the square-free content is lambda^4 - lambda.
        let m = algebraic_multiplicity(&cp, Complex64::new(1.0, 0.0), DEFAULT_ROOT_MATCH_TOL)
            .unwrap();
        assert_eq!(m.multiplicity, 3);
        assert_eq!(m.factor, RationalPoly::from_ints(&[0, -1, 0, 0, 1]));
        assert!(m.scaled_residual < 1e-12);
        // Complex eigenvalue on the unit circle: same factor, same
        // multiplicity.
        let omega = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        let m = algebraic_multiplicity(&cp, omega, DEFAULT_ROOT_MATCH_TOL).unwrap();
        assert_eq!(m.multiplicity, 3);
        // A non-eigenvalue reports the best miss instead of matching.
        match algebraic_multiplicity(&cp, Complex64::new(2.0, 0.0), DEFAULT_ROOT_MATCH_TOL) {
            Err(Error::NoMatchingFactor { .. }) => {}
            other => panic!("expected no match, got {other:?}"),
        }
    }

    #[test]
    fn ambiguous_matches_are_refused() {
        // (lambda - 1)(lambda - 1 - e)^2 with e = 1e-8: the value 1 sits
        // within tolerance of both square-free factors.
        let e = rat(1, 100_000_000);
        let f1 = RationalPoly::from_ints(&[-1, 1]);
        let shifted = -(BigRational::one() + e);
        let f2 = RationalPoly::from_coeffs(vec![shifted, BigRational::one()]);
        let poly = f1.mul(&f2).mul(&f2);
        let cp = CharPoly {
            poly,
            k: 2,
            n: 3,
            tensor_fingerprint: String::new(),
            normalized_by: None,
        };
        match algebraic_multiplicity(&cp, Complex64::new(1.0, 0.0), DEFAULT_ROOT_MATCH_TOL) {
            Err(Error::AmbiguousFactorMatch { count: 2, .. }) => {}
            other => panic!("expected ambiguity refusal, got {other:?}"),
        }
    }

    #[test]
    fn cyclic_index_reads_coefficient_offsets() {
        let cp = char_poly(&single_edge_tensor(), DEFAULT_DEGREE_BUDGET).unwrap();
        assert_eq!(cyclic_index_from_char_poly(&cp), Some(3));
        assert!(is_rotation_invariant(&cp, 3));
        assert!(is_rotation_invariant(&cp, 1));
        assert!(!is_rotation_invariant(&cp, 2));

        let tri = Hypergraph::new(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let cp = char_poly(&Tensor::adjacency(&tri).unwrap(), DEFAULT_DEGREE_BUDGET).unwrap();
        assert_eq!(cyclic_index_from_char_poly(&cp), Some(1));

        let t = Tensor::diagonal(3, &[rat_int(1), rat_int(4)]).unwrap();
        let cp = char_poly(&t, DEFAULT_DEGREE_BUDGET).unwrap();
        assert_eq!(cyclic_index_from_char_poly(&cp), Some(1));
    }

    #[test]
    fn power_sums_by_newton_match_roots() {
        // Single edge: roots are 0 (x3) and each cube root of unity (x3):
        // p_d = 9 when 3 | d, else 0.
        let cp = char_poly(&single_edge_tensor(), DEFAULT_DEGREE_BUDGET).unwrap();
        let p = power_sums(&cp, 13);
        for (i, v) in p.iter().enumerate() {
            let d = i + 1;
            if d % 3 == 0 {
                assert_eq!(*v, rat_int(9), "p_{d}");
            } else {
                assert!(v.is_zero(), "p_{d} = {v}");
            }
        }
        // Triangle graph: eigenvalues 2, -1, -1.
        let tri = Hypergraph::new(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let cp = char_poly(&Tensor::adjacency(&tri).unwrap(), DEFAULT_DEGREE_BUDGET).unwrap();
        let p = power_sums(&cp, 4);
        assert_eq!(p, vec![rat_int(0), rat_int(6), rat_int(6), rat_int(18)]);
    }

    #[test]
    fn json_round_trip() {
        let cp = char_poly(&single_edge_tensor(), DEFAULT_DEGREE_BUDGET).unwrap();
        let s = cp.to_json();
        let back = CharPoly::from_json(&s).unwrap();
        assert_eq!(back, cp);
        // Tampered degree field is caught.
        let bad = s.replace("\"degree\": 12", "\"degree\": 11");
        assert!(CharPoly::from_json(&bad).is_err());
        // Unknown fields rejected.
        let bad = s.trim_end().trim_end_matches('}').to_string() + ",\"extra\":1}";
        assert!(CharPoly::from_json(&bad).is_err());
    }
}
