//! Least H-eigenvalues of Z-tensors through the split A = s I - B: the
//! least eigenvalue is s - rho(B), its eigenvectors are the radius
//! eigenvectors of B, and for a connected Laplacian it is exactly zero.

use hyperspectra::hypergraph::Hypergraph;
use hyperspectra::perron::{eigenpair_residual, least_h_eigenvalue_z, DEFAULT_MAX_ITER, DEFAULT_TOL};
use hyperspectra::rational::{format_rat, rat_int};
use hyperspectra::tensor::Tensor;
use hyperspectra::variety::{rho_eigenvariety, DEFAULT_POINT_CAP};
use hyperspectra::Result;

fn main() -> Result<()> {
    for (name, h) in [
        ("single 3-edge", Hypergraph::hyperpath(3, 1)?),
        ("hyperpath k=3 m=2", Hypergraph::hyperpath(3, 2)?),
        ("complete k=3 n=4", Hypergraph::complete(3, 4)?),
    ] {
        let l = Tensor::laplacian(&h)?;
        let z = least_h_eigenvalue_z(&l, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
        println!("{name}: Laplacian split s = {}, rho(B) = {:.12}", format_rat(&z.shift), z.rho_b);
        println!("  least H-eigenvalue: {:.3e} (exactly zero for a connected hypergraph)", z.lambda_min);
        if let Some(x) = &z.vector {
            println!("  certified eigenpair residual: {:.3e}", eigenpair_residual(&l, z.lambda_min, x));
        }
        let (_, b) = l.z_tensor_split()?;
        let vb = rho_eigenvariety(&b, DEFAULT_POINT_CAP)?;
        println!("  eigenvariety of the least eigenvalue: {} points", vb.count);
        println!();
    }

    // A hand-built Z-tensor that is not a Laplacian: 2 I - A(single edge)
    // has least H-eigenvalue 2 - 1 = 1.
    let h = Hypergraph::hyperpath(3, 1)?;
    let a = Tensor::adjacency(&h)?;
    let t = a.scale(&rat_int(-1)).add(&Tensor::diagonal(3, &[rat_int(2), rat_int(2), rat_int(2)])?)?;
    let z = least_h_eigenvalue_z(&t, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
    println!(
        "2 I - A(single 3-edge): least H-eigenvalue = {:.12} (exact value 1)",
        z.lambda_min
    );
    Ok(())
}
