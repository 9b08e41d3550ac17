//! Zero eigenvalue of the Laplacian tensor: its eigenvariety matches the
//! adjacency radius eigenvariety edge for edge, and on hypertrees its exact
//! algebraic multiplicity follows the closed form k^(m(k-2)).

use hyperspectra::charpoly::{algebraic_multiplicity, char_poly, DEFAULT_ROOT_MATCH_TOL};
use hyperspectra::hypergraph::Hypergraph;
use hyperspectra::perron::{spectral_radius, DEFAULT_MAX_ITER, DEFAULT_TOL};
use hyperspectra::tensor::Tensor;
use hyperspectra::variety::{laplacian_zero_variety, rho_eigenvariety, DEFAULT_POINT_CAP};
use hyperspectra::Result;
use num_complex::Complex64;

fn main() -> Result<()> {
    for (name, h) in [
        ("single 3-edge", Hypergraph::hyperpath(3, 1)?),
        ("hyperpath k=3 m=2", Hypergraph::hyperpath(3, 2)?),
        ("hypercycle k=3 m=3", Hypergraph::hypercycle(3, 3)?),
    ] {
        let a = Tensor::adjacency(&h)?;
        let va = rho_eigenvariety(&a, DEFAULT_POINT_CAP)?;
        let vz = laplacian_zero_variety(&h, DEFAULT_POINT_CAP)?;
        println!("{name}: |V_0(L)| = {}  |V_rho(A)| = {}", vz.count, va.count);
    }
    println!();

    // Exact multiplicity of zero for the two smallest cubic hypertrees.
    for (name, m) in [("single 3-edge", 1usize), ("hyperpath k=3 m=2", 2)] {
        let h = Hypergraph::hyperpath(3, m)?;
        let l = Tensor::laplacian(&h)?;
        println!("{name}: computing the exact characteristic polynomial of L ...");
        let cp = char_poly(&l, 200)?;
        let m0 = algebraic_multiplicity(&cp, Complex64::new(0.0, 0.0), DEFAULT_ROOT_MATCH_TOL)?;
        let a = Tensor::adjacency(&h)?;
        let rho = spectral_radius(&a, DEFAULT_TOL, DEFAULT_MAX_ITER)?.rho;
        let cpa = char_poly(&a, 200)?;
        let mr = algebraic_multiplicity(&cpa, Complex64::new(rho, 0.0), DEFAULT_ROOT_MATCH_TOL)?;
        let expected = 3usize.pow(m as u32);
        println!(
            "  am(0, L) = {}  am(rho, A) = {}  closed form k^(m(k-2)) = {expected}",
            m0.multiplicity, mr.multiplicity
        );
    }
    Ok(())
}
