//! Projective eigenvarieties on the spectral circle. For a combinatorially
//! symmetric tensor the eigenvectors of the largest-magnitude eigenvalues
//! have fixed magnitudes and free phases: writing `x_v = m_v w^(phi_v)` with
//! `w = e^(2 pi i / k)`, the eigenvector equations collapse to the linear
//! congruence `B phi = c 1 (mod k)` over the support incidence matrix `B`.
//! This module enumerates those phase varieties, computes their group
//! structure, the combinatorial cyclic index, the zero-eigenvector varieties
//! of Laplacian and signless Laplacian tensors, and the diagonal-similarity
//! stabilizer certificates.

use num_bigint::BigUint;
use num_complex::Complex64;

use crate::charpoly::{algebraic_multiplicity, CharPoly, MultiplicityMatch};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::tensor::{DiagonalSimilarity, Tensor};
use crate::zklinear::{count_projective_solutions, enumerate_solutions, solve_mod_k, IntMatrix};

/// Default ceiling on how many variety points are materialized.
pub const DEFAULT_POINT_CAP: u64 = 512;

/// The solution set of `B phi = c 1 (mod k)`, projectivized by fixing the
/// first phase to zero.
#[derive(Clone, Debug)]
pub struct PhaseVariety {
    pub k: u64,
    /// The constant `c` on the right-hand side; the associated eigenvalue is
    /// `lambda = rho w^c`.
    pub class_shift: u64,
    /// Exact number of projective points.
    pub count: BigUint,
    /// Invariant factors (> 1, ascending) of the projective solution group
    /// for `c = 0`; for `c != 0` the variety is a coset of that group.
    pub invariants: Vec<u64>,
    /// The points themselves (first phase fixed to 0, sorted), when the
    /// count is within the cap; `None` when enumeration was skipped.
    pub points: Option<Vec<Vec<u64>>>,
}

fn variety_from_incidence(
    b: &IntMatrix,
    k: u64,
    class_shift: u64,
    cap: u64,
) -> Result<Option<PhaseVariety>> {
    let rhs = vec![class_shift as i64; b.rows()];
    match solve_mod_k(b, &rhs, k) {
        Err(Error::UnsolvableModK { .. }) => return Ok(None),
        Err(e) => return Err(e),
        Ok(_) => {}
    }
    let count = count_projective_solutions(b, k)?;
    // Group structure of the normalized (first phase zero) solutions of the
    // homogeneous system: the kernel of B with the row `e_1` appended.
    let mut aug = IntMatrix::zeros(b.rows() + 1, b.cols());
    for r in 0..b.rows() {
        for c in 0..b.cols() {
            aug.set(r, c, b.get(r, c).clone());
        }
    }
    aug.set(b.rows(), 0, 1i64.into());
    let hom = solve_mod_k(&aug, &vec![0i64; aug.rows()], k)?;
    let invariants = hom.kernel.group_invariants();
    debug_assert_eq!(hom.kernel.size(), count, "projective group size vs count");
    let points = match enumerate_solutions(b, &rhs, k, cap, true) {
        Ok(points) => Some(points),
        Err(Error::EnumerationCap { .. }) => None,
        Err(e) => return Err(e),
    };
    if let Some(p) = &points {
        debug_assert_eq!(BigUint::from(p.len()), count);
    }
    Ok(Some(PhaseVariety { k, class_shift, count, invariants, points }))
}

/// Phase variety of the eigenvalue class `c` on a tensor's support
/// incidence: `None` when the congruence has no solution (the class carries
/// no eigenvalue on the spectral circle).
pub fn eigenvariety_class(t: &Tensor, class_shift: u64, cap: u64) -> Result<Option<PhaseVariety>> {
    let b = t.incidence_matrix()?;
    variety_from_incidence(&b, t.k() as u64, class_shift, cap)
}

/// The eigenvariety of the spectral radius itself (`c = 0`) for a
/// nonnegative weakly irreducible tensor. Always nonempty: the Perron vector
/// is the all-zero phase point.
pub fn rho_eigenvariety(t: &Tensor, cap: u64) -> Result<PhaseVariety> {
    t.check_nonnegative()?;
    if !t.is_weakly_irreducible() {
        return Err(Error::NotWeaklyIrreducible);
    }
    Ok(eigenvariety_class(t, 0, cap)?.expect("homogeneous congruence always has the zero solution"))
}

/// Combinatorial cyclic index: the largest divisor `m` of `k` for which
/// `B phi = (k/m) 1 (mod k)` is solvable. Equivalently, the number of
/// evenly spaced eigenvalue classes on the spectral circle.
pub fn cyclic_index_combinatorial(t: &Tensor) -> Result<u64> {
    let b = t.incidence_matrix()?;
    let k = t.k() as u64;
    let mut divisors: Vec<u64> = (1..=k).filter(|d| k % d == 0).collect();
    divisors.reverse();
    for m in divisors {
        let rhs = vec![(k / m) as i64; b.rows()];
        match solve_mod_k(&b, &rhs, k) {
            Ok(_) => return Ok(m),
            Err(Error::UnsolvableModK { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    unreachable!("m = 1 gives the zero right-hand side, which is always solvable")
}

/// Zero-eigenvector variety of the Laplacian tensor of a hypergraph: unit
/// magnitudes with phases satisfying `B phi = 0 (mod k)` over the vertex–edge
/// incidence. Nonempty for every hypergraph (the all-ones vector).
pub fn laplacian_zero_variety(h: &Hypergraph, cap: u64) -> Result<PhaseVariety> {
    let b = h.incidence_matrix();
    Ok(variety_from_incidence(&b, h.k() as u64, 0, cap)?
        .expect("homogeneous congruence always has the zero solution"))
}

/// Zero-eigenvector variety of the signless Laplacian: phases must satisfy
/// `B phi = (k/2) 1 (mod k)`, which needs `k` even; `None` when `k` is odd
/// or the congruence is unsolvable (then 0 is not an eigenvalue of `Q` with
/// a unit-magnitude eigenvector).
pub fn signless_zero_variety(h: &Hypergraph, cap: u64) -> Result<Option<PhaseVariety>> {
    let k = h.k() as u64;
    if k % 2 != 0 {
        return Ok(None);
    }
    let b = h.incidence_matrix();
    variety_from_incidence(&b, k, k / 2, cap)
}

/// Exact stabilizer certificate: does the unit diagonal built from the
/// phases fix the tensor under `D^{-(k-1)} A D`? True for every point of the
/// `c = 0` variety of a combinatorially symmetric tensor — the phase sums
/// cancel entry by entry — and false otherwise.
pub fn phase_point_stabilizes(t: &Tensor, phases: &[u64]) -> Result<bool> {
    let d = DiagonalSimilarity::from_unit_phases(t.k() as u64, phases);
    match t.diag_similarity(&d) {
        Ok(res) => Ok(res.equal_entrywise(t)),
        Err(Error::NonRealSimilarityResult { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// Order of the stabilizer group by direct enumeration: all `k^(n-1)` unit
/// diagonals with first phase zero are tried against the exact similarity
/// test. Independent of the congruence-system route, so the two counts
/// cross-check each other. `None` when the enumeration would exceed `cap`.
pub fn stabilizer_order_brute(t: &Tensor, cap: u64) -> Result<Option<u64>> {
    let k = t.k() as u64;
    let n = t.n();
    let mut total: u64 = 1;
    for _ in 1..n {
        total = match total.checked_mul(k) {
            Some(v) if v <= cap => v,
            _ => return Ok(None),
        };
    }
    let mut phases = vec![0u64; n];
    let mut count = 0u64;
    loop {
        if phase_point_stabilizes(t, &phases)? {
            count += 1;
        }
        let mut pos = 1;
        loop {
            if pos >= n {
                return Ok(Some(count));
            }
            phases[pos] += 1;
            if phases[pos] < k {
                break;
            }
            phases[pos] = 0;
            pos += 1;
        }
    }
}

/// Numeric cross-check of enumerated variety points: each point, combined
/// with the magnitude profile, must satisfy the eigenvector equation for
/// `lambda = base_eigenvalue * w^class_shift` within `tol` (infinity norm).
/// Returns the largest residual seen, or `None` when the variety carries no
/// enumerated points.
pub fn verify_variety_points(
    t: &Tensor,
    base_eigenvalue: f64,
    magnitudes: &[f64],
    variety: &PhaseVariety,
    tol: f64,
) -> Result<Option<f64>> {
    let points = match &variety.points {
        Some(p) => p,
        None => return Ok(None),
    };
    let k = variety.k as f64;
    let lambda = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * variety.class_shift as f64 / k)
        * base_eigenvalue;
    let mut worst: f64 = 0.0;
    for phases in points {
        let x: Vec<Complex64> = magnitudes
            .iter()
            .zip(phases)
            .map(|(&m, &p)| Complex64::from_polar(m, 2.0 * std::f64::consts::PI * p as f64 / k))
            .collect();
        let y = t.apply(&x);
        let k1 = (t.k() - 1) as u32;
        for (yi, xi) in y.iter().zip(&x) {
            let res = (yi - lambda * xi.powu(k1)).norm();
            worst = worst.max(res);
            if res > tol {
                return Err(Error::ResidualTooLarge { residual: res, tol });
            }
        }
    }
    Ok(Some(worst))
}

/// Algebraic multiplicities of the `ell` evenly spaced eigenvalues
/// `rho w^j` on the spectral circle, one match per class. The equal-spacing
/// theorem predicts they all agree with the multiplicity of `rho` itself.
pub fn circle_multiplicities(
    cp: &CharPoly,
    rho: f64,
    ell: u64,
    rel_tol: f64,
) -> Result<Vec<MultiplicityMatch>> {
    (0..ell)
        .map(|j| {
            let lambda =
                Complex64::from_polar(rho, 2.0 * std::f64::consts::PI * j as f64 / ell as f64);
            algebraic_multiplicity(cp, lambda, rel_tol)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{char_poly, DEFAULT_DEGREE_BUDGET, DEFAULT_ROOT_MATCH_TOL};
    use crate::perron::{spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL};
    use num_traits::One;

    fn single_edge() -> Hypergraph {
        Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()
    }

    fn triangle_graph() -> Hypergraph {
        Hypergraph::new(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap()
    }

    fn path_graph() -> Hypergraph {
        Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 2]]).unwrap()
    }

    #[test]
    fn brute_stabilizer_order_matches_variety_count() {
        // Single edge: 9 brute candidates, 3 stabilize.
        let a = Tensor::adjacency(&single_edge()).unwrap();
        assert_eq!(stabilizer_order_brute(&a, 1_000).unwrap(), Some(3));
        // Hyperpath with two edges: 3^4 candidates, 9 stabilize.
        let a = Tensor::adjacency(&Hypergraph::hyperpath(3, 2).unwrap()).unwrap();
        assert_eq!(stabilizer_order_brute(&a, 1_000).unwrap(), Some(9));
        // Complete 3-uniform on four vertices: only the identity.
        let a = Tensor::adjacency(&Hypergraph::complete(3, 4).unwrap()).unwrap();
        assert_eq!(stabilizer_order_brute(&a, 1_000).unwrap(), Some(1));
        // Cap exceeded: declines instead of grinding.
        assert_eq!(stabilizer_order_brute(&a, 10).unwrap(), None);
    }

    #[test]
    fn combinatorial_cyclic_index_known_values() {
        let a = Tensor::adjacency(&single_edge()).unwrap();
        assert_eq!(cyclic_index_combinatorial(&a).unwrap(), 3);
        let a = Tensor::adjacency(&Hypergraph::hyperpath(3, 2).unwrap()).unwrap();
        assert_eq!(cyclic_index_combinatorial(&a).unwrap(), 3);
        let a = Tensor::adjacency(&Hypergraph::complete(3, 4).unwrap()).unwrap();
        assert_eq!(cyclic_index_combinatorial(&a).unwrap(), 1);
        // Graphs: bipartite path has index 2, the odd triangle 1.
        let a = Tensor::adjacency(&path_graph()).unwrap();
        assert_eq!(cyclic_index_combinatorial(&a).unwrap(), 2);
        let a = Tensor::adjacency(&triangle_graph()).unwrap();
        assert_eq!(cyclic_index_combinatorial(&a).unwrap(), 1);
        // The diagonal rows of Laplacian-type tensors pin the index to 1.
        let q = Tensor::signless_laplacian(&single_edge()).unwrap();
        assert_eq!(cyclic_index_combinatorial(&q).unwrap(), 1);
        let l = Tensor::laplacian(&single_edge()).unwrap();
        assert_eq!(cyclic_index_combinatorial(&l).unwrap(), 1);
    }

    #[test]
    fn combinatorial_index_matches_polynomial_index() {
        use crate::charpoly::cyclic_index_from_char_poly;
        for h in [single_edge(), triangle_graph(), path_graph(), Hypergraph::complete(3, 4).unwrap()] {
            let a = Tensor::adjacency(&h).unwrap();
            let comb = cyclic_index_combinatorial(&a).unwrap();
            let cp = char_poly(&a, DEFAULT_DEGREE_BUDGET).unwrap();
            assert_eq!(
                cyclic_index_from_char_poly(&cp),
                Some(comb),
                "hypergraph with {} vertices",
                h.n()
            );
        }
    }

    #[test]
    fn single_edge_variety_points_and_group() {
        let a = Tensor::adjacency(&single_edge()).unwrap();
        let v = rho_eigenvariety(&a, DEFAULT_POINT_CAP).unwrap();
        assert_eq!(v.count, BigUint::from(3u32));
        assert_eq!(v.invariants, vec![3]);
        let points = v.points.clone().unwrap();
        assert_eq!(points, vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]]);
        // Every point is an exact stabilizer of the tensor; a non-point is
        // not.
        for p in &points {
            assert!(phase_point_stabilizes(&a, p).unwrap());
        }
        assert!(!phase_point_stabilizes(&a, &[0, 1, 0]).unwrap());
        // And each point really is an eigenvector for rho = 1.
        let worst = verify_variety_points(&a, 1.0, &[1.0, 1.0, 1.0], &v, 1e-8)
            .unwrap()
            .unwrap();
        assert!(worst < 1e-12);
    }

    #[test]
    fn hyperpath_variety_is_three_by_three() {
        let a = Tensor::adjacency(&Hypergraph::hyperpath(3, 2).unwrap()).unwrap();
        let v = rho_eigenvariety(&a, DEFAULT_POINT_CAP).unwrap();
        assert_eq!(v.count, BigUint::from(9u32));
        assert_eq!(v.invariants, vec![3, 3]);
        let points = v.points.clone().unwrap();
        assert_eq!(points.len(), 9);
        // Closure under pointwise addition mod k: the variety is a group.
        for p in &points {
            for q in &points {
                let sum: Vec<u64> = p.iter().zip(q).map(|(a, b)| (a + b) % 3).collect();
                assert!(points.contains(&sum), "{p:?} + {q:?} = {sum:?} escaped");
            }
        }
        for p in &points {
            assert!(phase_point_stabilizes(&a, p).unwrap());
        }
        // Numeric check against the true Perron vector.
        let perron = spectral_radius(&a, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        let worst = verify_variety_points(&a, perron.rho, &perron.vector, &v, 1e-8)
            .unwrap()
            .unwrap();
        assert!(worst < 1e-9, "worst residual {worst}");
    }

    #[test]
    fn complete_graph_variety_is_trivial() {
        let a = Tensor::adjacency(&Hypergraph::complete(3, 4).unwrap()).unwrap();
        let v = rho_eigenvariety(&a, DEFAULT_POINT_CAP).unwrap();
        assert_eq!(v.count, BigUint::one());
        assert!(v.invariants.is_empty());
        assert_eq!(v.points.unwrap(), vec![vec![0, 0, 0, 0]]);
    }

    #[test]
    fn cap_skips_enumeration_but_keeps_count() {
        let a = Tensor::adjacency(&Hypergraph::hyperpath(3, 2).unwrap()).unwrap();
        let v = rho_eigenvariety(&a, 4).unwrap();
        assert_eq!(v.count, BigUint::from(9u32));
        assert!(v.points.is_none());
    }

    #[test]
    fn nonzero_classes_exist_iff_index_divides() {
        let a = Tensor::adjacency(&single_edge()).unwrap();
        // Index 3: every class c = 0, 1, 2 is realized, as a coset of the
        // c = 0 group.
        for c in 0..3 {
            let v = eigenvariety_class(&a, c, DEFAULT_POINT_CAP).unwrap().unwrap();
            assert_eq!(v.count, BigUint::from(3u32));
            assert_eq!(v.class_shift, c);
        }
        // K4 has index 1: the nonzero classes are empty.
        let a = Tensor::adjacency(&Hypergraph::complete(3, 4).unwrap()).unwrap();
        assert!(eigenvariety_class(&a, 1, DEFAULT_POINT_CAP).unwrap().is_none());
        assert!(eigenvariety_class(&a, 2, DEFAULT_POINT_CAP).unwrap().is_none());
    }

    #[test]
    fn laplacian_zero_varieties() {
        // Single 3-edge: 3 projective zero modes, the same phase group as
        // the adjacency variety.
        let v = laplacian_zero_variety(&single_edge(), DEFAULT_POINT_CAP).unwrap();
        assert_eq!(v.count, BigUint::from(3u32));
        let l = Tensor::laplacian(&single_edge()).unwrap();
        let worst = verify_variety_points(&l, 0.0, &[1.0; 3], &v, 1e-8).unwrap().unwrap();
        assert!(worst < 1e-12);
        // Hyperpath: 9 zero modes.
        let h = Hypergraph::hyperpath(3, 2).unwrap();
        let v = laplacian_zero_variety(&h, DEFAULT_POINT_CAP).unwrap();
        assert_eq!(v.count, BigUint::from(9u32));
        let l = Tensor::laplacian(&h).unwrap();
        let worst = verify_variety_points(&l, 0.0, &[1.0; 5], &v, 1e-8).unwrap().unwrap();
        assert!(worst < 1e-12);
        // Connected graphs (k = 2) have exactly one zero mode.
        for g in [triangle_graph(), path_graph()] {
            let v = laplacian_zero_variety(&g, DEFAULT_POINT_CAP).unwrap();
            assert_eq!(v.count, BigUint::one(), "{} edges", g.edges().len());
        }
    }

    #[test]
    fn signless_zero_varieties() {
        // Odd k: no unit-magnitude zero mode, by parity.
        assert!(signless_zero_variety(&single_edge(), DEFAULT_POINT_CAP).unwrap().is_none());
        // Bipartite graph: the two-coloring is the zero mode.
        let v = signless_zero_variety(&path_graph(), DEFAULT_POINT_CAP).unwrap().unwrap();
        assert_eq!(v.count, BigUint::one());
        assert_eq!(v.points.unwrap(), vec![vec![0, 1, 0]]);
        // Odd cycle: unsolvable.
        assert!(signless_zero_variety(&triangle_graph(), DEFAULT_POINT_CAP).unwrap().is_none());
        // Complete 4-uniform hypergraph on 5 vertices: every vertex lies in
        // 4 of the 5 edges, so summing the congruences forces 0 = 2 (mod 4):
        // unsolvable, honestly reported as no variety.
        let k5 = Hypergraph::complete(4, 5).unwrap();
        assert!(signless_zero_variety(&k5, DEFAULT_POINT_CAP).unwrap().is_none());
        // A single 4-edge: solvable, 16 projective points.
        let e4 = Hypergraph::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        let v = signless_zero_variety(&e4, DEFAULT_POINT_CAP).unwrap().unwrap();
        assert_eq!(v.count, BigUint::from(16u32));
        let q = Tensor::signless_laplacian(&e4).unwrap();
        let worst = verify_variety_points(&q, 0.0, &[1.0; 4], &v, 1e-8).unwrap().unwrap();
        assert!(worst < 1e-12);
    }

    #[test]
    fn circle_multiplicities_are_equal_for_single_edge() {
        let a = Tensor::adjacency(&single_edge()).unwrap();
        let cp = char_poly(&a, DEFAULT_DEGREE_BUDGET).unwrap();
        let ms = circle_multiplicities(&cp, 1.0, 3, DEFAULT_ROOT_MATCH_TOL).unwrap();
        assert_eq!(ms.len(), 3);
        assert!(ms.iter().all(|m| m.multiplicity == 3));
    }

    #[test]
    fn residual_breach_is_an_error() {
        let a = Tensor::adjacency(&single_edge()).unwrap();
        let v = rho_eigenvariety(&a, DEFAULT_POINT_CAP).unwrap();
        // Claiming the wrong eigenvalue must fail the check loudly.
        match verify_variety_points(&a, 2.0, &[1.0; 3], &v, 1e-8) {
            Err(Error::ResidualTooLarge { .. }) => {}
            other => panic!("expected residual failure, got {other:?}"),
        }
    }
}
