//! Simplicity of eigenvariety points, certified two ways at once: full
//! Jacobian rank and dual-space local multiplicity 1. The two criteria must
//! agree point by point; a deliberately degenerate system shows what the
//! dual space sees at a genuinely multiple zero.

use hyperspectra::hypergraph::Hypergraph;
use hyperspectra::multiplicity::{local_multiplicity, variety_point_checks, AffineSystem};
use hyperspectra::perron::{spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL};
use hyperspectra::tensor::Tensor;
use hyperspectra::variety::{rho_eigenvariety, DEFAULT_POINT_CAP};
use hyperspectra::Result;
use num_complex::Complex64;
use std::collections::BTreeMap;

fn main() -> Result<()> {
    for (name, h) in [
        ("single 3-edge", Hypergraph::hyperpath(3, 1)?),
        ("hyperpath k=3 m=2", Hypergraph::hyperpath(3, 2)?),
        ("complete k=3 n=4", Hypergraph::complete(3, 4)?),
    ] {
        let a = Tensor::adjacency(&h)?;
        let p = spectral_radius(&a, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
        let v = rho_eigenvariety(&a, DEFAULT_POINT_CAP)?;
        let checks = variety_point_checks(&a, p.rho, &p.vector, &v, 1e-8, 8)?;
        let simple = checks.iter().filter(|c| c.simple).count();
        println!(
            "{name}: {} of {} radius eigenvectors are simple zeros (Jacobian rank {} of {})",
            simple,
            checks.len(),
            checks[0].jacobian_rank,
            checks[0].vars
        );
    }
    println!();

    // Contrast: the system {x^2, y^2} has an isolated zero of multiplicity
    // 4 at the origin; the Hilbert function counts dual functionals level
    // by level until it stabilizes.
    let x2: BTreeMap<Vec<u32>, Complex64> =
        BTreeMap::from([(vec![2, 0], Complex64::new(1.0, 0.0))]);
    let y2: BTreeMap<Vec<u32>, Complex64> =
        BTreeMap::from([(vec![0, 2], Complex64::new(1.0, 0.0))]);
    let sys = AffineSystem::new(2, vec![x2, y2])?;
    let origin = [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)];
    let lm = local_multiplicity(&sys, &origin, 8)?;
    println!("system {{x^2, y^2}} at the origin:");
    println!("  nullities by order: {:?}", lm.nullities);
    println!("  Hilbert function:   {:?}", lm.hilbert);
    println!("  local multiplicity: {}", lm.multiplicity);
    Ok(())
}
