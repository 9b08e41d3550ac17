//! Exact characteristic polynomials through the quotient-of-determinants
//! resultant, recovered by evaluation and interpolation over the rationals,
//! with closed-form and matrix cross-checks.

use hyperspectra::charpoly::{char_poly, char_poly_degree, DEFAULT_DEGREE_BUDGET};
use hyperspectra::hypergraph::{Graph, Hypergraph};
use hyperspectra::poly::square_free_decompose;
use hyperspectra::rational::rat_int;
use hyperspectra::tensor::Tensor;
use hyperspectra::Result;

fn main() -> Result<()> {
    // Single 3-uniform edge: degree 12, factors lambda^3 (lambda^3 - 1)^3.
    let h = Hypergraph::hyperpath(3, 1)?;
    let a = Tensor::adjacency(&h)?;
    let cp = char_poly(&a, DEFAULT_DEGREE_BUDGET)?;
    println!("single 3-edge: phi(lambda) = {}", cp.poly);
    let (_, factors) = square_free_decompose(&cp.poly)?;
    for (f, m) in &factors {
        println!("  square-free factor ({f})^{m}");
    }
    println!();

    // Diagonal tensors: phi is the product of (lambda - a_i)^((k-1)^(n-1)).
    let d = Tensor::diagonal(3, &[rat_int(1), rat_int(2), rat_int(5)])?;
    let cp = char_poly(&d, DEFAULT_DEGREE_BUDGET)?;
    println!("diagonal entries (1, 2, 5), k=3: phi = {}", cp.poly);
    println!("  expected ((l-1)(l-2)(l-5))^4, degree {}", char_poly_degree(3, 3));
    println!();

    // Order two recovers the matrix characteristic polynomial: the triangle
    // graph gives lambda^3 - 3 lambda - 2.
    let g = Graph::triangle();
    let h = Hypergraph::new(2, g.n, g.edges.iter().map(|&(a, b)| vec![a, b]).collect())?;
    let a = Tensor::adjacency(&h)?;
    let cp = char_poly(&a, DEFAULT_DEGREE_BUDGET)?;
    println!("triangle graph (k=2): phi = {}", cp.poly);
    println!();

    // The degree grows as n (k-1)^(n-1): the desk-scale frontier.
    for (k, n) in [(3usize, 3usize), (3, 5), (4, 4), (3, 6)] {
        println!("k={k} n={n}: characteristic polynomial degree {}", char_poly_degree(k, n));
    }
    Ok(())
}
