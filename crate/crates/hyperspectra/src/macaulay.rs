//! The eigenvalue polynomial system of a tensor and its Macaulay resultant
//! matrix at the critical degree. The characteristic polynomial is the
//! resultant of the system `lambda x_i^{k-1} - (A x^{k-1})_i`; Macaulay's
//! construction expresses it as a quotient `det(M) / det(M')` of two integer
//! determinants once a value is substituted for `lambda`, which is how the
//! interpolation layer above samples it exactly.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::RationalPoly;
use crate::tensor::{symmetric_contractions, Tensor, TensorMode};
use crate::zklinear::IntMatrix;

/// The system `F_i = lambda x_i^{k-1} - (A x^{k-1})_i`, stored as the
/// monomial expansion of each contraction component. Exponent vectors have
/// length `n` and total degree `k - 1`.
#[derive(Clone, Debug)]
pub struct EigenSystem {
    k: usize,
    n: usize,
    contraction: Vec<BTreeMap<Vec<u32>, BigRational>>,
}

impl EigenSystem {
    pub fn from_tensor(t: &Tensor) -> Self {
        let n = t.n();
        let k = t.k();
        let mut contraction: Vec<BTreeMap<Vec<u32>, BigRational>> = vec![BTreeMap::new(); n];
        match t.mode() {
            TensorMode::General => {
                for (idx, v) in t.entries() {
                    let mut exp = vec![0u32; n];
                    for &j in &idx[1..] {
                        exp[j] += 1;
                    }
                    add_term(&mut contraction[idx[0]], exp, v.clone());
                }
            }
            TensorMode::Symmetric => {
                for (idx, v) in t.entries() {
                    for (first, arrangements, rest) in symmetric_contractions(idx) {
                        let mut exp = vec![0u32; n];
                        for &j in &rest {
                            exp[j] += 1;
                        }
                        let c = v * BigRational::from_integer(arrangements.into());
                        add_term(&mut contraction[first], exp, c);
                    }
                }
            }
        }
        EigenSystem { k, n, contraction }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Monomial expansion of `(A x^{k-1})_i`.
    pub fn contraction_part(&self, i: usize) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.contraction[i]
    }

    /// The equation `F_i` with a fixed value substituted for `lambda`:
    /// exponent vector -> coefficient.
    pub fn equation_at(&self, i: usize, lambda: &BigRational) -> BTreeMap<Vec<u32>, BigRational> {
        let mut eq: BTreeMap<Vec<u32>, BigRational> =
            self.contraction[i].iter().map(|(e, c)| (e.clone(), -c)).collect();
        let mut diag = vec![0u32; self.n];
        diag[i] = (self.k - 1) as u32;
        add_term(&mut eq, diag, lambda.clone());
        eq
    }
}

fn add_term(map: &mut BTreeMap<Vec<u32>, BigRational>, exp: Vec<u32>, c: BigRational) {
    let slot = map.entry(exp).or_insert_with(BigRational::zero);
    *slot += c;
    if slot.is_zero() {
        let key = map.iter().find(|(_, v)| v.is_zero()).map(|(k, _)| k.clone());
        if let Some(key) = key {
            map.remove(&key);
        }
    }
}

/// Macaulay matrix of the eigenvalue system at the critical degree
/// `n(k-2) + 1`, with everything precomputed that does not depend on the
/// value substituted for `lambda`: the column monomials, the equation and
/// multiplier behind each row, the reduced/non-reduced split, and an integer
/// version of the `lambda`-free part with per-row denominators cleared.
pub struct MacaulaySystem {
    k: usize,
    n: usize,
    critical_degree: usize,
    monomials: Vec<Vec<u32>>,
    row_equation: Vec<usize>,
    reduced: Vec<bool>,
    nonreduced_idx: Vec<usize>,
    const_int: IntMatrix,
    row_clear: Vec<BigInt>,
    system: EigenSystem,
}

impl MacaulaySystem {
    pub fn new(t: &Tensor) -> Result<Self> {
        let n = t.n();
        let k = t.k();
        if n < 2 {
            return Err(Error::ResultantDimension { n });
        }
        let system = EigenSystem::from_tensor(t);
        let critical_degree = n * (k - 2) + 1;
        let monomials = monomials_of_degree(n, critical_degree as u32);
        let col_index: BTreeMap<&[u32], usize> =
            monomials.iter().enumerate().map(|(c, m)| (m.as_slice(), c)).collect();
        let deg = (k - 1) as u32;

        let mut row_equation = Vec::with_capacity(monomials.len());
        let mut reduced = Vec::with_capacity(monomials.len());
        for alpha in &monomials {
            let i = alpha
                .iter()
                .position(|&a| a >= deg)
                .expect("critical degree guarantees some exponent reaches k-1");
            row_equation.push(i);
            reduced.push(alpha.iter().filter(|&&a| a >= deg).count() == 1);
        }
        let nonreduced_idx: Vec<usize> =
            (0..monomials.len()).filter(|&r| !reduced[r]).collect();

        // Lambda-free part: row for alpha in S_i holds the expansion of
        // -(x^alpha / x_i^{k-1}) * (A x^{k-1})_i; the lambda term lands on
        // the row's own column and is added at evaluation time.
        let dim = monomials.len();
        let mut const_rat: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); dim]; dim];
        for (r, alpha) in monomials.iter().enumerate() {
            let i = row_equation[r];
            for (exp, c) in system.contraction_part(i) {
                let mut target = alpha.clone();
                target[i] -= deg;
                for (t, e) in target.iter_mut().zip(exp) {
                    *t += e;
                }
                let col = col_index[target.as_slice()];
                const_rat[r][col] -= c;
            }
        }
        let mut row_clear = Vec::with_capacity(dim);
        let mut const_int = IntMatrix::zeros(dim, dim);
        for (r, row) in const_rat.iter().enumerate() {
            let mut d = BigInt::one();
            for v in row {
                d = d.lcm(v.denom());
            }
            for (c, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    let cleared = (v * BigRational::from_integer(d.clone())).to_integer();
                    const_int.set(r, c, cleared);
                }
            }
            row_clear.push(d);
        }

        Ok(MacaulaySystem {
            k,
            n,
            critical_degree,
            monomials,
            row_equation,
            reduced,
            nonreduced_idx,
            const_int,
            row_clear,
            system,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of rows = columns = degree-`d*` monomials in `n` variables.
    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    /// Which equation each row multiplies: the first index whose exponent in
    /// the row's monomial reaches `k - 1`.
    pub fn row_equations(&self) -> &[usize] {
        &self.row_equation
    }

    pub fn critical_degree(&self) -> usize {
        self.critical_degree
    }

    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    pub fn reduced_flags(&self) -> &[bool] {
        &self.reduced
    }

    pub fn system(&self) -> &EigenSystem {
        &self.system
    }

    /// The full matrix with `lambda0` substituted, rows cleared to integers.
    /// Row `r` is scaled by `row_clear[r] * denom(lambda0)`.
    pub fn integer_matrix_at(&self, lambda0: &BigRational) -> IntMatrix {
        let dim = self.dimension();
        let mut m = self.const_int.clone();
        let q = lambda0.denom();
        if !q.is_one() {
            for r in 0..dim {
                for c in 0..dim {
                    let v = m.get(r, c).clone();
                    if !v.is_zero() {
                        m.set(r, c, v * q);
                    }
                }
            }
        }
        for r in 0..dim {
            // lambda * (x^alpha / x_i^{k-1}) * x_i^{k-1} = lambda * x^alpha:
            // the row's own column.
            let add = lambda0.numer() * &self.row_clear[r];
            let v = m.get(r, r).clone();
            m.set(r, r, v + add);
        }
        m
    }

    /// Resultant of the system at `lambda = lambda0`, as the Macaulay
    /// quotient `det(M) / det(M')`. Returns `None` when the denominator
    /// determinant vanishes at this value (the caller picks another sample
    /// node); the characteristic polynomial evaluation is exact otherwise.
    pub fn resultant_at(&self, lambda0: &BigRational) -> Option<BigRational> {
        let m = self.integer_matrix_at(lambda0);
        let minor = m.submatrix(&self.nonreduced_idx, &self.nonreduced_idx);
        let det_minor = minor.det_bareiss();
        if det_minor.is_zero() {
            return None;
        }
        let det_full = m.det_bareiss();
        // Clearing scaled every row by row_clear[r] * denom; the quotient
        // keeps only the factors from reduced rows.
        let mut scale = BigInt::one();
        let q = lambda0.denom();
        for r in 0..self.dimension() {
            if self.reduced[r] {
                scale *= &self.row_clear[r] * q;
            }
        }
        Some(BigRational::new(det_full, det_minor * scale))
    }

    /// The pair `(M(lambda), M'(lambda))` as polynomial matrices — small
    /// cases only; the route the interpolation layer avoids, kept for
    /// independent cross-checks.
    pub fn polynomial_matrices(&self) -> (Vec<Vec<RationalPoly>>, Vec<Vec<RationalPoly>>) {
        let dim = self.dimension();
        let mut full = vec![vec![RationalPoly::zero(); dim]; dim];
        for r in 0..dim {
            for c in 0..dim {
                let v = self.const_int.get(r, c);
                if !v.is_zero() {
                    let rat = BigRational::new(v.clone(), self.row_clear[r].clone());
                    full[r][c] = RationalPoly::constant(rat);
                }
            }
            let lin = RationalPoly::monomial(1);
            full[r][r] = full[r][r].add(&lin);
        }
        let minor: Vec<Vec<RationalPoly>> = self
            .nonreduced_idx
            .iter()
            .map(|&r| self.nonreduced_idx.iter().map(|&c| full[r][c].clone()).collect())
            .collect();
        (full, minor)
    }
}

/// All exponent vectors of length `n` with total degree `d`, ordered with the
/// leading variable's exponent descending (lexicographic from the left).
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill_monomials(&mut cur, 0, d, &mut out);
    out
}

fn fill_monomials(cur: &mut Vec<u32>, pos: usize, remaining: u32, out: &mut Vec<Vec<u32>>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(cur.clone());
        return;
    }
    for e in (0..=remaining).rev() {
        cur[pos] = e;
        fill_monomials(cur, pos + 1, remaining - e, out);
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::Hypergraph;
    use crate::rational::{rat, rat_int};

    fn rr(v: i64) -> BigRational {
        rat_int(v)
    }

    /// Determinant over Q[lambda] by Bareiss elimination (exact division
    /// holds over any integral domain). Row swaps flip the sign.
    fn det_poly(mut m: Vec<Vec<RationalPoly>>) -> RationalPoly {
        let n = m.len();
        if n == 0 {
            return RationalPoly::one();
        }
        let mut sign = 1i64;
        let mut prev = RationalPoly::one();
        for p in 0..n {
            let pivot_row = (p..n).find(|&r| !m[r][p].is_zero());
            let pr = match pivot_row {
                Some(pr) => pr,
                None => return RationalPoly::zero(),
            };
            if pr != p {
                m.swap(pr, p);
                sign = -sign;
            }
            for r in p + 1..n {
                for c in p + 1..n {
                    let num = m[p][p].mul(&m[r][c]).sub(&m[r][p].mul(&m[p][c]));
                    m[r][c] = num.div_exact(&prev);
                }
                m[r][p] = RationalPoly::zero();
            }
            prev = m[p][p].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if sign < 0 {
            det.neg()
        } else {
            det
        }
    }

    #[test]
    fn structure_sizes_match_combinatorics() {
        let single = Tensor::adjacency(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()).unwrap();
        let m = MacaulaySystem::new(&single).unwrap();
        assert_eq!(m.critical_degree(), 4);
        assert_eq!(m.dimension(), 15); // C(6, 2)

        let p2 = Tensor::adjacency(&Hypergraph::hyperpath(3, 2).unwrap()).unwrap();
        let m = MacaulaySystem::new(&p2).unwrap();
        assert_eq!(m.critical_degree(), 6);
        assert_eq!(m.dimension(), 210); // C(10, 4)

        let k4 = Tensor::adjacency(&Hypergraph::complete(3, 4).unwrap()).unwrap();
        let m = MacaulaySystem::new(&k4).unwrap();
        assert_eq!(m.critical_degree(), 5);
        assert_eq!(m.dimension(), 56); // C(8, 3)

        // Dimension 1 has no Macaulay construction.
        let t = Tensor::diagonal(3, &[rr(2)]).unwrap();
        assert!(matches!(MacaulaySystem::new(&t), Err(Error::ResultantDimension { n: 1 })));
    }

    #[test]
    fn order_two_reduces_to_ordinary_determinant() {
        // k = 2: critical degree 1, every monomial reduced, M = lambda I - A.
        let tri = Hypergraph::new(2, 3, vec![vec![0, 1], vec![0, 2], vec![1, 2]]).unwrap();
        let a = Tensor::adjacency(&tri).unwrap();
        let m = MacaulaySystem::new(&a).unwrap();
        assert_eq!(m.critical_degree(), 1);
        assert_eq!(m.dimension(), 3);
        assert!(m.reduced_flags().iter().all(|&r| r));
        // det(lambda I - A) = lambda^3 - 3 lambda - 2 for the triangle graph.
        for l in [-2i64, -1, 0, 1, 2, 3, 5] {
            let want = rr(l * l * l - 3 * l - 2);
            assert_eq!(m.resultant_at(&rr(l)).unwrap(), want, "lambda = {l}");
        }
    }

    #[test]
    fn diagonal_tensor_closed_form() {
        let t = Tensor::diagonal(3, &[rr(1), rr(4)]).unwrap();
        let m = MacaulaySystem::new(&t).unwrap();
        // Res = (lambda - 1)^2 (lambda - 4)^2 at every sample value.
        for l in [-1i64, 0, 2, 3, 7] {
            let lam = rr(l);
            let want = (&lam - rr(1)).pow(2) * (&lam - rr(4)).pow(2);
            assert_eq!(m.resultant_at(&lam).unwrap(), want, "lambda = {l}");
        }
        // Rational sample value.
        let lam = rat(1, 2);
        let want = (&lam - rr(1)).pow(2) * (&lam - rr(4)).pow(2);
        assert_eq!(m.resultant_at(&lam).unwrap(), want);
    }

    #[test]
    fn single_edge_matches_golden_values() {
        // phi(lambda) = lambda^3 (lambda^3 - 1)^3 for one 3-uniform edge.
        let a = Tensor::adjacency(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()).unwrap();
        let m = MacaulaySystem::new(&a).unwrap();
        let phi = |l: BigRational| {
            let c = l.pow(3);
            let c1 = &c - BigRational::one();
            c * c1.pow(3)
        };
        for l in [rr(1), rr(2), rr(-1), rr(3), rat(1, 2), rat(-3, 2)] {
            match m.resultant_at(&l) {
                Some(v) => assert_eq!(v, phi(l.clone()), "lambda = {l}"),
                None => panic!("unexpected degenerate minor at lambda = {l}"),
            }
        }
        // lambda = 0 is a degenerate sample for this tensor: the minor
        // determinant vanishes, the quotient is 0/0, and the evaluator
        // reports the node as unusable instead of guessing.
        assert_eq!(m.resultant_at(&rr(0)), None);
    }

    #[test]
    fn polynomial_elimination_confirms_quotient() {
        // Independent route: Bareiss over Q[lambda] on the same matrix pair,
        // then exact division — no interpolation, no integer specialization.
        let a = Tensor::adjacency(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()).unwrap();
        let m = MacaulaySystem::new(&a).unwrap();
        let (full, minor) = m.polynomial_matrices();
        let det_full = det_poly(full);
        let det_minor = det_poly(minor);
        assert!(!det_minor.is_zero());
        // The minor determinant vanishes at 0 — the degenerate sample the
        // evaluation path skips — but at no other small integer.
        assert!(det_minor.eval_rat(&BigRational::zero()).is_zero());
        assert!(!det_minor.eval_rat(&rr(1)).is_zero());
        let res = det_full.div_exact(&det_minor);
        // lambda^12 - 3 lambda^9 + 3 lambda^6 - lambda^3.
        let want = RationalPoly::from_ints(&[
            0, 0, 0, -1, 0, 0, 3, 0, 0, -3, 0, 0, 1,
        ]);
        assert_eq!(res, want);
        assert_eq!(
            res.degree(),
            Some(12),
            "degree must be n (k-1)^(n-1) = 3 * 4"
        );
    }

    #[test]
    fn row_equation_uses_first_high_exponent() {
        let a = Tensor::adjacency(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()).unwrap();
        let m = MacaulaySystem::new(&a).unwrap();
        for (r, alpha) in m.monomials().iter().enumerate() {
            let i = m.row_equation[r];
            assert!(alpha[i] >= 2);
            assert!(alpha[..i].iter().all(|&e| e < 2));
        }
        // Monomial count of each degree block sanity: first monomial is
        // x0^4, last is x2^4 in the descending-lex order.
        assert_eq!(m.monomials()[0], vec![4, 0, 0]);
        assert_eq!(m.monomials()[14], vec![0, 0, 4]);
    }

    #[test]
    fn equation_at_has_unit_lambda_coefficient() {
        let a = Tensor::adjacency(&Hypergraph::hyperpath(3, 2).unwrap()).unwrap();
        let sys = EigenSystem::from_tensor(&a);
        let lam = rr(5);
        for i in 0..5 {
            let eq = sys.equation_at(i, &lam);
            let mut diag = vec![0u32; 5];
            diag[i] = 2;
            assert_eq!(eq[&diag], rr(5));
            // Lambda-free terms are the negated contraction.
            for (exp, c) in sys.contraction_part(i) {
                if *exp != diag {
                    assert_eq!(eq[exp], -c.clone());
                }
            }
        }
    }
}

#[cfg(test)]
mod timing_probe {
    use super::*;
    use crate::hypergraph::{Graph, Hypergraph};
    use crate::tensor::Tensor;

    // One-node cost probe for the degree-192 resultant; run explicitly with
    // `cargo test -- --ignored timing` when calibrating budgets.
    #[test]
    #[ignore]
    fn triangle_power_single_node_cost() {
        let h = Hypergraph::power_of_graph(&Graph::triangle(), 3).unwrap();
        let t = Tensor::adjacency(&h).unwrap();
        let sys = MacaulaySystem::new(&t).unwrap();
        eprintln!("dimension: {}", sys.dimension());
        let start = std::time::Instant::now();
        let r = sys.resultant_at(&BigRational::from_integer(2.into()));
        eprintln!("one node: {:?}, some: {}", start.elapsed(), r.is_some());
    }
}
