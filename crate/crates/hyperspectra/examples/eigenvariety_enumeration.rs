//! Projective eigenvarieties as solution sets of phase congruences: counts
//! from the Smith normal form, explicit point enumeration, group
//! invariants, and the brute-force stabilizer cross-check.

use hyperspectra::hypergraph::{Graph, Hypergraph};
use hyperspectra::tensor::Tensor;
use hyperspectra::variety::{
    cyclic_index_combinatorial, eigenvariety_class, rho_eigenvariety, stabilizer_order_brute,
    DEFAULT_POINT_CAP,
};
use hyperspectra::Result;

fn survey(name: &str, h: &Hypergraph) -> Result<()> {
    let a = Tensor::adjacency(h)?;
    let v = rho_eigenvariety(&a, DEFAULT_POINT_CAP)?;
    let ell = cyclic_index_combinatorial(&a)?;
    println!("{name}: k={} n={} m={}", h.k(), h.n(), h.edges().len());
    println!("  radius eigenvariety: {} points, invariant factors {:?}", v.count, v.invariants);
    if let Some(s) = stabilizer_order_brute(&a, 1_000_000)? {
        println!("  stabilizer order by brute force: {s}");
    }
    println!("  cyclic index: {ell}");
    let k = h.k() as u64;
    for j in 1..ell {
        let c = j * (k / ell);
        match eigenvariety_class(&a, c, DEFAULT_POINT_CAP)? {
            Some(vc) => println!("  class shift {c}: {} points", vc.count),
            None => println!("  class shift {c}: unsolvable"),
        }
    }
    if let Some(points) = &v.points {
        if points.len() <= 9 {
            for p in points {
                println!("  point phases {p:?}");
            }
        }
    }
    println!();
    Ok(())
}

fn main() -> Result<()> {
    survey("single 3-edge", &Hypergraph::hyperpath(3, 1)?)?;
    survey("hyperpath k=3 m=2", &Hypergraph::hyperpath(3, 2)?)?;
    survey("complete k=3 n=4", &Hypergraph::complete(3, 4)?)?;
    // The cubic power of the triangle: 3^(3+0-1) = 9 points, all classes
    // equally full.
    survey("triangle power k=3", &Hypergraph::power_of_graph(&Graph::triangle(), 3)?)?;
    Ok(())
}
