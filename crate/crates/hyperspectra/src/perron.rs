//! Numeric Perron theory for nonnegative tensors: shifted power iteration
//! with Collatz–Wielandt certificates, spectral radius of reducible tensors
//! through strongly connected components, and the least H-eigenvalue of a
//! Z-tensor via its nonnegative part.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::rat_to_f64;
use crate::tensor::Tensor;

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_MAX_ITER: u64 = 1_000_000;

/// Converged power iteration: the radius estimate, a positive eigenvector
/// normalized to unit maximum, a certified Collatz–Wielandt interval
/// `[lower, upper]` containing the true radius, and the iteration count.
#[derive(Clone, Debug)]
pub struct PerronResult {
    pub rho: f64,
    pub vector: Vec<f64>,
    pub lower: f64,
    pub upper: f64,
    pub iterations: u64,
}

/// Spectral radius of a nonnegative weakly irreducible tensor by shifted
/// power iteration: `z = A x^{k-1} + x^{[k-1]}`, `x <- z^{[1/(k-1)]}`
/// max-normalized. The diagonal shift makes the iteration converge for every
/// nonnegative weakly irreducible input; it is subtracted back out at the
/// end. Stops when the Collatz–Wielandt gap drops below `tol`.
pub fn spectral_radius(t: &Tensor, tol: f64, max_iter: u64) -> Result<PerronResult> {
    t.check_nonnegative()?;
    let n = t.n();
    if n == 1 {
        let rho = rat_to_f64(&t.get(&vec![0; t.k()])?);
        return Ok(PerronResult { rho, vector: vec![1.0], lower: rho, upper: rho, iterations: 0 });
    }
    if !t.is_weakly_irreducible() {
        return Err(Error::NotWeaklyIrreducible);
    }
    let k1 = (t.k() - 1) as i32;
    let root = 1.0 / k1 as f64;
    let mut x = vec![1.0; n];
    let mut gap = f64::INFINITY;
    for it in 1..=max_iter {
        let mut z = t.apply_f64(&x);
        for (zi, xi) in z.iter_mut().zip(&x) {
            *zi += xi.powi(k1);
        }
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for (zi, xi) in z.iter().zip(&x) {
            let r = zi / xi.powi(k1);
            lo = lo.min(r);
            hi = hi.max(r);
        }
        gap = hi - lo;
        if gap < tol {
            // Certify with the unshifted tensor; the shift cancels exactly in
            // the ratios, but recomputing avoids relying on that.
            let y = t.apply_f64(&x);
            let mut lower = f64::INFINITY;
            let mut upper = f64::NEG_INFINITY;
            for (yi, xi) in y.iter().zip(&x) {
                let r = yi / xi.powi(k1);
                lower = lower.min(r);
                upper = upper.max(r);
            }
            return Ok(PerronResult {
                rho: 0.5 * (lower + upper),
                vector: x,
                lower,
                upper,
                iterations: it,
            });
        }
        let mut max = 0.0f64;
        for (xi, zi) in x.iter_mut().zip(&z) {
            *xi = zi.powf(root);
            max = max.max(*xi);
        }
        for xi in &mut x {
            *xi /= max;
        }
    }
    Err(Error::PowerIterationStalled { tol, max_iter, gap })
}

/// Spectral radius of an arbitrary nonnegative tensor. Weakly irreducible
/// tensors go straight to power iteration; otherwise the radius is the
/// maximum over the strongly connected components of the representing
/// digraph, each handled recursively on its principal subtensor (an isolated
/// index contributes its diagonal entry).
pub fn spectral_radius_general(t: &Tensor, tol: f64, max_iter: u64) -> Result<f64> {
    t.check_nonnegative()?;
    if t.n() == 1 || t.is_weakly_irreducible() {
        return Ok(spectral_radius(t, tol, max_iter)?.rho);
    }
    let mut best = 0.0f64;
    for comp in strongly_connected_components(t) {
        let rho = if comp.len() == 1 {
            rat_to_f64(&t.get(&vec![comp[0]; t.k()])?)
        } else {
            spectral_radius_general(&t.principal_subtensor(&comp)?, tol, max_iter)?
        };
        best = best.max(rho);
    }
    Ok(best)
}

/// Least H-eigenvalue of a Z-tensor, through the split `A = s I - B` with
/// `B` nonnegative: the least eigenvalue is `s - rho(B)`.
#[derive(Clone, Debug)]
pub struct ZLeastResult {
    pub lambda_min: f64,
    pub shift: BigRational,
    pub rho_b: f64,
    /// Perron vector of `B` when it is weakly irreducible — then also an
    /// eigenvector of the least eigenvalue.
    pub vector: Option<Vec<f64>>,
}

pub fn least_h_eigenvalue_z(t: &Tensor, tol: f64, max_iter: u64) -> Result<ZLeastResult> {
    let (s, b) = t.z_tensor_split()?;
    let sf = rat_to_f64(&s);
    if b.n() > 1 && !b.is_weakly_irreducible() {
        let rho_b = spectral_radius_general(&b, tol, max_iter)?;
        return Ok(ZLeastResult { lambda_min: sf - rho_b, shift: s, rho_b, vector: None });
    }
    let perron = spectral_radius(&b, tol, max_iter)?;
    Ok(ZLeastResult {
        lambda_min: sf - perron.rho,
        shift: s,
        rho_b: perron.rho,
        vector: Some(perron.vector),
    })
}

/// Largest componentwise residual `|A x^{k-1} - lambda x^{[k-1]}|` of a real
/// candidate eigenpair.
pub fn eigenpair_residual(t: &Tensor, lambda: f64, x: &[f64]) -> f64 {
    let y = t.apply_f64(x);
    let k1 = (t.k() - 1) as i32;
    y.iter()
        .zip(x)
        .map(|(yi, xi)| (yi - lambda * xi.powi(k1)).abs())
        .fold(0.0, f64::max)
}

/// Strongly connected components of the representing digraph (arc `i -> j`
/// when an entry with first index `i` has `j` among its lower indices), as
/// sorted index sets.
pub fn strongly_connected_components(t: &Tensor) -> Vec<Vec<usize>> {
    let n = t.n();
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    let general = t.to_general();
    let mut seen = std::collections::BTreeSet::new();
    for (idx, v) in general.entries() {
        if v.is_zero() {
            continue;
        }
        for &j in &idx[1..] {
            if j != idx[0] && seen.insert((idx[0], j)) {
                fwd[idx[0]].push(j);
                bwd[j].push(idx[0]);
            }
        }
    }
    // Kosaraju: finish order on the forward graph, then sweep the transpose.
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    for start in 0..n {
        if visited[start] {
            continue;
        }
        // Iterative DFS recording finish times.
        let mut stack = vec![(start, 0usize)];
        visited[start] = true;
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if *next < fwd[v].len() {
                let w = fwd[v][*next];
                *next += 1;
                if !visited[w] {
                    visited[w] = true;
                    stack.push((w, 0));
                }
            } else {
                order.push(v);
                stack.pop();
            }
        }
    }
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for &start in order.iter().rev() {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &bwd[v] {
                if comp[w] == usize::MAX {
                    comp[w] = id;
                    members.push(w);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    comps
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::rational::rat_int;
    use crate::tensor::TensorMode;
    use num_traits::One;

    fn radius(t: &Tensor) -> PerronResult {
        spectral_radius(t, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap()
    }

    #[test]
    fn regular_hypergraphs_have_degree_radius() {
        // d-regular: the all-ones vector is the Perron vector and rho = d.
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let r = radius(&Tensor::adjacency(&single).unwrap());
        assert!((r.rho - 1.0).abs() < 1e-10, "rho = {}", r.rho);
        assert!(r.lower <= 1.0 + 1e-12 && 1.0 - 1e-12 <= r.upper);

        let k4 = Hypergraph::complete(3, 4).unwrap();
        let r = radius(&Tensor::adjacency(&k4).unwrap());
        assert!((r.rho - 3.0).abs() < 1e-9, "rho = {}", r.rho);
        // Signless Laplacian of a d-regular hypergraph has radius 2d.
        let r = radius(&Tensor::signless_laplacian(&k4).unwrap());
        assert!((r.rho - 6.0).abs() < 1e-9, "rho = {}", r.rho);
    }

    #[test]
    fn certified_interval_is_tight_and_residual_small() {
        let h = Hypergraph::hyperpath(3, 2).unwrap();
        let a = Tensor::adjacency(&h).unwrap();
        let r = radius(&a);
        assert!(r.upper - r.lower < 1e-11);
        assert!(r.lower <= r.rho && r.rho <= r.upper);
        assert!(eigenpair_residual(&a, r.rho, &r.vector) < 1e-10);
        assert!(r.vector.iter().all(|&v| v > 0.0));
        assert!((r.vector.iter().cloned().fold(0.0, f64::max) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn hyperstar_radius_matches_closed_form() {
        // Star with m edges through a common center: rho^k = m, by symmetry
        // reduction to a two-variable system.
        for m in [1u64, 2, 3, 5] {
            let h = Hypergraph::hyperstar(3, m as usize).unwrap();
            let r = radius(&Tensor::adjacency(&h).unwrap());
            assert!(
                (r.rho - (m as f64).powf(1.0 / 3.0)).abs() < 1e-9,
                "m = {m}: rho = {}",
                r.rho
            );
        }
    }

    #[test]
    fn dimension_one_and_reducible_paths() {
        let t = Tensor::diagonal(3, &[rat_int(5)]).unwrap();
        let r = radius(&t);
        assert_eq!(r.rho, 5.0);
        assert_eq!(r.iterations, 0);

        // Diagonal tensors are reducible for n >= 2: direct call errors,
        // component recursion takes the diagonal maximum.
        let d = Tensor::diagonal(3, &[rat_int(2), rat_int(7), rat_int(3)]).unwrap();
        assert!(matches!(
            spectral_radius(&d, DEFAULT_TOL, DEFAULT_MAX_ITER),
            Err(Error::NotWeaklyIrreducible)
        ));
        let rho = spectral_radius_general(&d, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(rho, 7.0);

        // Disjoint union of two single edges: both components have radius 1.
        let h = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        let rho = spectral_radius_general(
            &Tensor::adjacency(&h).unwrap(),
            DEFAULT_TOL,
            DEFAULT_MAX_ITER,
        )
        .unwrap();
        assert!((rho - 1.0).abs() < 1e-10);

        // Negative entries are rejected up front.
        let l = Tensor::laplacian(&h).unwrap();
        assert!(matches!(
            spectral_radius_general(&l, DEFAULT_TOL, DEFAULT_MAX_ITER),
            Err(Error::NegativeEntry { .. })
        ));
    }

    #[test]
    fn scc_decomposition_handles_one_way_coupling() {
        // a_{011} couples 0 -> 1 only; diagonal at both: components {0}, {1}.
        let mut t = Tensor::new(3, 2, TensorMode::General).unwrap();
        t.insert(vec![0, 1, 1], rat_int(4)).unwrap();
        t.insert(vec![0, 0, 0], rat_int(1)).unwrap();
        t.insert(vec![1, 1, 1], rat_int(3)).unwrap();
        let comps = strongly_connected_components(&t);
        assert_eq!(comps.len(), 2);
        assert!(comps.contains(&vec![0]) && comps.contains(&vec![1]));
        let rho = spectral_radius_general(&t, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(rho, 3.0);

        // A connected adjacency tensor is a single component.
        let h = Hypergraph::hyperpath(3, 2).unwrap();
        let comps = strongly_connected_components(&Tensor::adjacency(&h).unwrap());
        assert_eq!(comps, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn stalling_is_reported_not_fudged() {
        let h = Hypergraph::hyperpath(3, 2).unwrap();
        let a = Tensor::adjacency(&h).unwrap();
        match spectral_radius(&a, 1e-12, 3) {
            Err(Error::PowerIterationStalled { max_iter: 3, gap, .. }) => {
                assert!(gap > 0.0);
            }
            other => panic!("expected stall, got {other:?}"),
        }
    }

    #[test]
    fn laplacian_least_eigenvalue_is_zero_for_connected() {
        for h in [
            Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap(),
            Hypergraph::hyperpath(3, 2).unwrap(),
            Hypergraph::complete(3, 4).unwrap(),
        ] {
            let l = Tensor::laplacian(&h).unwrap();
            let z = least_h_eigenvalue_z(&l, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
            assert!(z.lambda_min.abs() < 1e-9, "lambda_min = {}", z.lambda_min);
            // The certificate behind the numeric zero: B's Perron vector is
            // all-ones exactly, because L 1^{k-1} = 0 exactly.
            let ones = vec![BigRational::one(); h.n()];
            assert!(l.apply_rational(&ones).iter().all(num_traits::Zero::is_zero));
        }
    }

    #[test]
    fn shifted_diagonal_dominance_gives_positive_least_eigenvalue() {
        // 2I - A on the single edge: least H-eigenvalue 2 - rho(A) = 1.
        let h = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let a = Tensor::adjacency(&h).unwrap();
        let t = Tensor::identity(3, 3)
            .unwrap()
            .scale(&rat_int(2))
            .add(&a.scale(&rat_int(-1)))
            .unwrap();
        let z = least_h_eigenvalue_z(&t, DEFAULT_TOL, DEFAULT_MAX_ITER).unwrap();
        assert_eq!(z.shift, rat_int(2));
        assert!((z.lambda_min - 1.0).abs() < 1e-10);
        assert!(z.vector.is_some());
    }
}
