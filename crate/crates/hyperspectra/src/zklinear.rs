//! Exact integer linear algebra: dense `BigInt` matrices, fraction-free
//! Bareiss determinants, Smith normal form with recorded unimodular
//! transforms, and structure-preserving solvers for linear systems over `Z_k`.
//!
//! The Smith form is computed over `Z` (where the elimination theory is
//! clean); everything mod `k` is derived from it afterwards, so composite `k`
//! needs no special casing.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Dense integer matrix, row major, arbitrary-precision entries.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_rows(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: BigInt) {
        self.data[r * self.cols + c] = v;
    }

    /// Submatrix on the given row and column index sets, kept in order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                m.set(ri, ci, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row_a += q * row_b`
    pub fn add_row_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        for j in 0..self.cols {
            let delta = self.get(b, j) * q;
            self.data[a * self.cols + j] += delta;
        }
    }

    /// `col_a += q * col_b`
    pub fn add_col_multiple(&mut self, a: usize, b: usize, q: &BigInt) {
        for i in 0..self.rows {
            let delta = self.get(i, b) * q;
            self.data[i * self.cols + a] += delta;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j).clone();
            self.set(r, j, v);
        }
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(l, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix-vector product reduced mod `k`, entries in `[0, k)`.
    pub fn mul_vec_mod(&self, v: &[BigInt], k: u64) -> Vec<u64> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        let km = BigInt::from(k);
        (0..self.rows)
            .map(|i| {
                let mut acc = BigInt::zero();
                for j in 0..self.cols {
                    acc += self.get(i, j) * &v[j];
                }
                acc.mod_floor(&km).to_u64().unwrap()
            })
            .collect()
    }

    /// Exact determinant by fraction-free Bareiss elimination with full
    /// pivoting (pivot = smallest nonzero absolute value, ties broken by
    /// lowest row then column). Every division in the schedule is exact.
    pub fn det_bareiss(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut m = self.clone();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for t in 0..n {
            // Select the pivot in the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..n {
                for j in t..n {
                    let v = m.get(i, j);
                    if v.is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if v.abs() < m.get(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return BigInt::zero();
            };
            if pi != t {
                m.swap_rows(pi, t);
                sign = -sign;
            }
            if pj != t {
                m.swap_cols(pj, t);
                sign = -sign;
            }
            let p = m.get(t, t).clone();
            for i in t + 1..n {
                let head = m.get(i, t).clone();
                for j in t + 1..n {
                    let v = (m.get(i, j) * &p - &head * m.get(t, j)) / &prev;
                    m.set(i, j, v);
                }
                m.set(i, t, BigInt::zero());
            }
            prev = p;
        }
        let d = m.get(n - 1, n - 1).clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }
}

impl std::fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `U * B * V = diag(d_1, ..., d_r, 0, ...)` with
/// `d_1 | d_2 | ... | d_r` positive and `U`, `V` unimodular.
pub struct SnfResult {
    pub invariants: Vec<BigInt>,
    pub rank: usize,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

/// Compute the Smith normal form over `Z`.
///
/// Pivoting is deterministic: the entry of smallest nonzero absolute value in
/// the trailing submatrix, ties broken by lowest row then lowest column.
pub fn smith_normal_form(b: &IntMatrix) -> SnfResult {
    let (rows, cols) = (b.rows(), b.cols());
    let mut t = b.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    let steps = rows.min(cols);
    let mut rank = 0;
    'outer: for s in 0..steps {
        loop {
            // Pivot selection over the trailing submatrix.
            let mut pivot: Option<(usize, usize)> = None;
            for i in s..rows {
                for j in s..cols {
                    let val = t.get(i, j);
                    if val.is_zero() {
                        continue;
                    }
                    match pivot {
                        None => pivot = Some((i, j)),
                        Some((pi, pj)) => {
                            if val.abs() < t.get(pi, pj).abs() {
                                pivot = Some((i, j));
                            }
                        }
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                break 'outer; // trailing submatrix is zero
            };
            if pi != s {
                t.swap_rows(pi, s);
                u.swap_rows(pi, s);
            }
            if pj != s {
                t.swap_cols(pj, s);
                v.swap_cols(pj, s);
            }

            // Clear the pivot column with row operations.
            let mut dirty = false;
            for i in s + 1..rows {
                if t.get(i, s).is_zero() {
                    continue;
                }
                let q = -(t.get(i, s) / t.get(s, s));
                t.add_row_multiple(i, s, &q);
                u.add_row_multiple(i, s, &q);
                if !t.get(i, s).is_zero() {
                    dirty = true; // remainder left; a smaller pivot now exists
                }
            }
            // Clear the pivot row with column operations.
            for j in s + 1..cols {
                if t.get(s, j).is_zero() {
                    continue;
                }
                let q = -(t.get(s, j) / t.get(s, s));
                t.add_col_multiple(j, s, &q);
                v.add_col_multiple(j, s, &q);
                if !t.get(s, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }

            // Pivot row and column are clear. Fold in any trailing entry the
            // pivot does not divide yet, so the divisibility chain holds.
            let p = t.get(s, s).clone();
            let mut fixed = true;
            'divisibility: for i in s + 1..rows {
                for j in s + 1..cols {
                    if !t.get(i, j).mod_floor(&p).is_zero() {
                        let one = BigInt::one();
                        t.add_row_multiple(s, i, &one);
                        u.add_row_multiple(s, i, &one);
                        fixed = false;
                        break 'divisibility;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if t.get(s, s).is_negative() {
            t.negate_row(s);
            u.negate_row(s);
        }
        rank = s + 1;
    }

    let invariants = (0..rank).map(|i| t.get(i, i).clone()).collect();
    SnfResult { invariants, rank, u, v }
}

/// Solution of `B x = c` over `Z_k`: one particular solution plus a basis of
/// the kernel as independent cyclic generators.
pub struct ModKSolution {
    pub k: u64,
    pub particular: Vec<u64>,
    pub kernel: KernelBasis,
}

/// Kernel of `B` over `Z_k` as a direct sum of cyclic groups: `generators[i]`
/// has order `orders[i] > 1`, and every kernel element is a unique combination
/// `sum t_i * generators[i]` with `0 <= t_i < orders[i]`.
pub struct KernelBasis {
    pub k: u64,
    pub generators: Vec<Vec<u64>>,
    pub orders: Vec<u64>,
}

impl KernelBasis {
    pub fn size(&self) -> BigUint {
        self.orders
            .iter()
            .fold(BigUint::one(), |acc, &o| acc * BigUint::from(o))
    }

    /// Nontrivial cyclic orders sorted ascending — the invariant-factor style
    /// summary reported for eigenvariety groups.
    pub fn group_invariants(&self) -> Vec<u64> {
        let mut inv: Vec<u64> = self.orders.iter().copied().filter(|&o| o > 1).collect();
        inv.sort_unstable();
        inv
    }
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (g, x, _) = ext_gcd(a as i128, m as i128);
    assert_eq!(g, 1, "inverse of non-unit");
    (x.rem_euclid(m as i128)) as u64
}

/// Solve `B x = c (mod k)`. Wants `k >= 2`; `c` must have one entry per row.
///
/// Goes through the integer Smith form: with `U B V = diag(d_i)` the system
/// becomes independent congruences `d_i y_i = (U c)_i (mod k)`, each solvable
/// iff `gcd(d_i, k)` divides the right-hand side. The kernel is assembled from
/// the columns of `V`: order-`gcd(d_i, k)` generators on ranked coordinates
/// and order-`k` generators on the coordinates beyond the rank.
pub fn solve_mod_k(b: &IntMatrix, c: &[i64], k: u64) -> Result<ModKSolution> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("modulus k = {k}, need k >= 2")));
    }
    if c.len() != b.rows() {
        return Err(Error::InvalidParameter(format!(
            "right-hand side has {} entries for {} rows",
            c.len(),
            b.rows()
        )));
    }
    let snf = smith_normal_form(b);
    let n = b.cols();
    let km = BigInt::from(k);

    // u = U * c mod k
    let c_big: Vec<BigInt> = c.iter().map(|&x| BigInt::from(x)).collect();
    let rhs = snf.u.mul_vec_mod(&c_big, k);

    // Rows beyond the rank demand a zero right-hand side.
    for (i, &r) in rhs.iter().enumerate().skip(snf.rank) {
        let _ = i;
        if r != 0 {
            return Err(Error::UnsolvableModK { k });
        }
    }

    let mut y = vec![0u64; n];
    let mut gcds = Vec::with_capacity(snf.rank);
    for i in 0..snf.rank.min(n) {
        let d = snf.invariants[i].mod_floor(&km).to_u64().unwrap();
        let g = if d == 0 { k } else { d.gcd(&k) };
        gcds.push(g);
        let u_i = rhs[i];
        if u_i % g != 0 {
            return Err(Error::UnsolvableModK { k });
        }
        if d == 0 {
            // 0 * y = 0 (mod k): y_i free, take 0.
            y[i] = 0;
        } else {
            let dk = d / g;
            let kk = k / g;
            if kk == 1 {
                y[i] = 0;
            } else {
                y[i] = ((u_i / g) % kk * mod_inverse(dk % kk, kk)) % kk;
            }
        }
    }

    // particular x = V y mod k
    let y_big: Vec<BigInt> = y.iter().map(|&t| BigInt::from(t)).collect();
    let particular = snf.v.mul_vec_mod(&y_big, k);

    // Kernel generators from the columns of V.
    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let v_col = |j: usize| -> Vec<BigInt> {
        (0..n).map(|i| snf.v.get(i, j).clone()).collect()
    };
    for (i, &g) in gcds.iter().enumerate() {
        if g > 1 {
            let col = v_col(i);
            let scaled: Vec<BigInt> = col.iter().map(|x| x * BigInt::from(k / g)).collect();
            generators.push(
                scaled
                    .iter()
                    .map(|x| x.mod_floor(&km).to_u64().unwrap())
                    .collect(),
            );
            orders.push(g);
        }
    }
    for j in snf.rank..n {
        let col = v_col(j);
        generators.push(
            col.iter()
                .map(|x| x.mod_floor(&km).to_u64().unwrap())
                .collect(),
        );
        orders.push(k);
    }

    Ok(ModKSolution {
        k,
        particular,
        kernel: KernelBasis { k, generators, orders },
    })
}

fn check_uniform_row_sums(b: &IntMatrix, k: u64) -> Result<()> {
    let kb = BigInt::from(k);
    for i in 0..b.rows() {
        let mut sum = BigInt::zero();
        for j in 0..b.cols() {
            sum += b.get(i, j);
        }
        if sum != kb {
            return Err(Error::RowSumNotUniform {
                row: i,
                sum: sum.to_string(),
                k,
            });
        }
    }
    Ok(())
}

/// Number of solutions of `B x = 0 (mod k)` with the first coordinate pinned
/// to zero, for `B` with every row summing to exactly `k` (an incidence
/// matrix of a `k`-uniform structure).
///
/// With `r` the integer rank and `d_i` the invariant factors this is
/// `k^(n-r) * prod gcd(d_i, k) / k`; the division is exact because the
/// all-ones vector lies in the kernel and generates a subgroup of order `k`.
pub fn count_projective_solutions(b: &IntMatrix, k: u64) -> Result<BigUint> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("modulus k = {k}, need k >= 2")));
    }
    check_uniform_row_sums(b, k)?;
    let snf = smith_normal_form(b);
    let n = b.cols();
    let km = BigInt::from(k);
    let mut total = BigUint::from(k).pow((n - snf.rank) as u32);
    for d in &snf.invariants {
        let dm = d.mod_floor(&km).to_u64().unwrap();
        let g = if dm == 0 { k } else { dm.gcd(&k) };
        total *= BigUint::from(g);
    }
    let (q, rem) = total.div_rem(&BigUint::from(k));
    debug_assert!(rem.is_zero(), "kernel size not divisible by k");
    Ok(q)
}

/// All solutions of `B x = c (mod k)`, optionally restricted to `x_1 = 0`,
/// sorted lexicographically. Errors when the predicted solution count exceeds
/// `cap` (the count is named in the error) or when the system is unsolvable.
pub fn enumerate_solutions(
    b: &IntMatrix,
    c: &[i64],
    k: u64,
    cap: u64,
    normalize_first_coordinate: bool,
) -> Result<Vec<Vec<u64>>> {
    let sol = solve_mod_k(b, c, k)?;
    let total = sol.kernel.size();
    let uniform = check_uniform_row_sums(b, k).is_ok();
    let expected = if normalize_first_coordinate && uniform {
        // The all-ones shift acts freely; each x_1 = 0 representative stands
        // for k solutions.
        &total / BigUint::from(k)
    } else {
        total.clone()
    };
    if expected > BigUint::from(cap) {
        return Err(Error::EnumerationCap {
            count: expected.to_string(),
            cap,
        });
    }

    let mut out = Vec::new();
    let gens = &sol.kernel.generators;
    let orders = &sol.kernel.orders;
    let mut counters = vec![0u64; orders.len()];
    loop {
        let mut x = sol.particular.clone();
        for (g, (&t, gen)) in counters.iter().zip(gens).enumerate().map(|(i, p)| (i, p)) {
            let _ = g;
            if t == 0 {
                continue;
            }
            for (xi, &gi) in x.iter_mut().zip(gen) {
                *xi = (*xi + t * gi) % k;
            }
        }
        if !normalize_first_coordinate || x.first().map_or(true, |&x0| x0 == 0) {
            out.push(x);
        }
        // Odometer step over the generator orders.
        let mut pos = 0;
        loop {
            if pos == counters.len() {
                out.sort();
                debug_assert!(out.windows(2).all(|w| w[0] != w[1]), "duplicate solutions");
                return Ok(out);
            }
            counters[pos] += 1;
            if counters[pos] < orders[pos] {
                break;
            }
            counters[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Oracle: product of the first `t` invariant factors equals the gcd of
    /// all `t x t` minors.
    fn minor_gcd(b: &IntMatrix, t: usize) -> BigInt {
        fn combos(n: usize, t: usize) -> Vec<Vec<usize>> {
            if t == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for first in 0..n {
                for mut rest in combos(n, t - 1) {
                    if rest.iter().all(|&x| x > first) {
                        let mut c = vec![first];
                        c.append(&mut rest);
                        out.push(c);
                    }
                }
            }
            out
        }
        let mut g = BigInt::zero();
        for rsel in combos(b.rows(), t) {
            for csel in combos(b.cols(), t) {
                let mut sub = IntMatrix::zeros(t, t);
                for (i, &r) in rsel.iter().enumerate() {
                    for (j, &c) in csel.iter().enumerate() {
                        sub.set(i, j, b.get(r, c).clone());
                    }
                }
                g = g.gcd(&sub.det_bareiss());
            }
        }
        g
    }

    fn brute_force_solutions(b: &IntMatrix, c: &[i64], k: u64, first_zero: bool) -> Vec<Vec<u64>> {
        let n = b.cols();
        let mut out = Vec::new();
        let total = (k as u128).pow(n as u32);
        for code in 0..total {
            let mut x = Vec::with_capacity(n);
            let mut rem = code;
            for _ in 0..n {
                x.push((rem % k as u128) as u64);
                rem /= k as u128;
            }
            if first_zero && x[0] != 0 {
                continue;
            }
            let ok = (0..b.rows()).all(|i| {
                let mut acc: i128 = -(c[i] as i128);
                for j in 0..n {
                    acc += b.get(i, j).to_i128().unwrap() * x[j] as i128;
                }
                acc.rem_euclid(k as i128) == 0
            });
            if ok {
                out.push(x);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn determinant_small_cases() {
        let m = IntMatrix::from_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(m.det_bareiss(), BigInt::from(-2));
        let m = IntMatrix::from_rows(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]]);
        assert_eq!(m.det_bareiss(), BigInt::from(5));
        let m = IntMatrix::from_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.det_bareiss(), BigInt::zero());
        assert_eq!(IntMatrix::identity(4).det_bareiss(), BigInt::one());
        assert_eq!(IntMatrix::zeros(0, 0).det_bareiss(), BigInt::one());
    }

    #[test]
    fn snf_known_forms() {
        let cases: Vec<(IntMatrix, Vec<i64>)> = vec![
            (IntMatrix::from_rows(&[&[1, 1, 1]]), vec![1]),
            (IntMatrix::from_rows(&[&[2, 0], &[0, 2]]), vec![2, 2]),
            (
                IntMatrix::from_rows(&[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 1]]),
                vec![1, 1],
            ),
            (IntMatrix::from_rows(&[&[2, 4], &[6, 8]]), vec![2, 4]),
            (IntMatrix::from_rows(&[&[4, 6], &[6, 9]]), vec![1]),
            (IntMatrix::zeros(2, 3), vec![]),
        ];
        for (m, want) in cases {
            let snf = smith_normal_form(&m);
            let got: Vec<BigInt> = snf.invariants.clone();
            let want: Vec<BigInt> = want.into_iter().map(BigInt::from).collect();
            assert_eq!(got, want, "for {m:?}");
            check_snf(&m, &snf);
        }
    }

    fn check_snf(b: &IntMatrix, snf: &SnfResult) {
        // U * B * V is the stated diagonal.
        let prod = snf.u.mul(b).mul(&snf.v);
        for i in 0..prod.rows() {
            for j in 0..prod.cols() {
                let want = if i == j && i < snf.rank {
                    snf.invariants[i].clone()
                } else {
                    BigInt::zero()
                };
                assert_eq!(*prod.get(i, j), want, "diag mismatch at ({i},{j})");
            }
        }
        // Transforms are unimodular.
        assert_eq!(snf.u.det_bareiss().abs(), BigInt::one());
        assert_eq!(snf.v.det_bareiss().abs(), BigInt::one());
        // Divisibility chain, positive entries.
        for w in snf.invariants.windows(2) {
            assert!(w[1].mod_floor(&w[0]).is_zero(), "chain broken");
        }
        assert!(snf.invariants.iter().all(|d| d.is_positive()));
    }

    #[test]
    fn snf_invariants_match_minor_gcds() {
        let m = IntMatrix::from_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let snf = smith_normal_form(&m);
        check_snf(&m, &snf);
        let mut prod = BigInt::one();
        for t in 1..=snf.rank {
            prod *= &snf.invariants[t - 1];
            assert_eq!(prod, minor_gcd(&m, t), "t = {t}");
        }
    }

    #[test]
    fn solve_single_edge_row() {
        // x1 + x2 + x3 = 0 (mod 3): kernel of size 9.
        let b = IntMatrix::from_rows(&[&[1, 1, 1]]);
        let sol = solve_mod_k(&b, &[0], 3).unwrap();
        assert_eq!(sol.kernel.size(), BigUint::from(9u32));
        assert_eq!(sol.particular, vec![0, 0, 0]);

        // Nonzero right-hand sides stay solvable here.
        let sol = solve_mod_k(&b, &[1], 3).unwrap();
        let x = &sol.particular;
        assert_eq!((x[0] + x[1] + x[2]) % 3, 1);

        let b4 = IntMatrix::from_rows(&[&[1, 1, 1, 1]]);
        let sol = solve_mod_k(&b4, &[2], 4).unwrap();
        assert_eq!(sol.particular.iter().sum::<u64>() % 4, 2);
    }

    #[test]
    fn unsolvable_reported() {
        // 3(x+y+z) = 1 (mod 3) has no solution.
        let b = IntMatrix::from_rows(&[&[3, 3, 3]]);
        assert!(matches!(
            solve_mod_k(&b, &[1], 3),
            Err(Error::UnsolvableModK { k: 3 })
        ));
    }

    #[test]
    fn projective_counts_match_brute_force() {
        let cases: Vec<(IntMatrix, u64, u64)> = vec![
            // Single 3-edge: 3 projective solutions.
            (IntMatrix::from_rows(&[&[1, 1, 1]]), 3, 3),
            // Two 3-edges sharing one vertex: 9.
            (
                IntMatrix::from_rows(&[&[1, 1, 1, 0, 0], &[0, 0, 1, 1, 1]]),
                3,
                9,
            ),
            // Complete 3-uniform on 4 vertices: trivial variety. This hits
            // the full-rank case where one invariant factor is divisible by
            // k itself.
            (
                IntMatrix::from_rows(&[
                    &[0, 1, 1, 1],
                    &[1, 0, 1, 1],
                    &[1, 1, 0, 1],
                    &[1, 1, 1, 0],
                ]),
                3,
                1,
            ),
            // Single 4-edge.
            (IntMatrix::from_rows(&[&[1, 1, 1, 1]]), 4, 16),
        ];
        for (b, k, want) in cases {
            let got = count_projective_solutions(&b, k).unwrap();
            assert_eq!(got, BigUint::from(want), "formula count for {b:?}");
            let brute = brute_force_solutions(&b, &vec![0; b.rows()], k, true);
            assert_eq!(brute.len() as u64, want, "brute count for {b:?}");
        }
    }

    #[test]
    fn row_sum_precondition_enforced() {
        let b = IntMatrix::from_rows(&[&[1, 1]]);
        assert!(matches!(
            count_projective_solutions(&b, 3),
            Err(Error::RowSumNotUniform { .. })
        ));
    }

    #[test]
    fn enumerate_single_edge_phases() {
        let b = IntMatrix::from_rows(&[&[1, 1, 1]]);
        let got = enumerate_solutions(&b, &[0], 3, 1000, true).unwrap();
        assert_eq!(got, vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 1]]);
        let all = enumerate_solutions(&b, &[0], 3, 1000, false).unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(all, brute_force_solutions(&b, &[0], 3, false));
    }

    #[test]
    fn enumerate_respects_cap() {
        let b = IntMatrix::from_rows(&[&[1, 1, 1, 1]]);
        let err = enumerate_solutions(&b, &[0], 4, 3, true).unwrap_err();
        match err {
            Error::EnumerationCap { count, cap } => {
                assert_eq!(count, "16");
                assert_eq!(cap, 3);
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn enumerate_matches_brute_force_on_mixed_moduli() {
        for k in [2u64, 3, 4, 6] {
            let b = IntMatrix::from_rows(&[&[1, 2, 1, 0], &[0, 1, 1, 2]]);
            for c0 in 0..k as i64 {
                let want = brute_force_solutions(&b, &[c0, 1], k, false);
                match enumerate_solutions(&b, &[c0, 1], k, 100_000, false) {
                    Ok(got) => assert_eq!(got, want, "k={k} c0={c0}"),
                    Err(Error::UnsolvableModK { .. }) => {
                        assert!(want.is_empty(), "k={k} c0={c0} should be solvable")
                    }
                    Err(e) => panic!("unexpected error {e}"),
                }
            }
        }
    }

    #[test]
    fn kernel_generators_have_stated_orders() {
        let b = IntMatrix::from_rows(&[&[2, 0, 0], &[0, 3, 0]]);
        let sol = solve_mod_k(&b, &[0, 0], 6).unwrap();
        // Orders multiply to the brute-force kernel size.
        let brute = brute_force_solutions(&b, &[0, 0], 6, false);
        assert_eq!(sol.kernel.size(), BigUint::from(brute.len()));
        for (gen, &ord) in sol.kernel.generators.iter().zip(&sol.kernel.orders) {
            // ord * gen = 0 mod k, and no smaller positive multiple is zero.
            for t in 1..=ord {
                let zero = gen.iter().all(|&g| (t * g) % 6 == 0);
                assert_eq!(zero, t == ord, "t = {t}");
            }
        }
    }

    proptest::proptest! {
        #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

        #[test]
        fn snf_random_matrices_are_consistent(
            rows in 1usize..5,
            cols in 1usize..6,
            seed in proptest::collection::vec(-4i64..=4, 30),
        ) {
            let mut m = IntMatrix::zeros(rows, cols);
            for i in 0..rows {
                for j in 0..cols {
                    m.set(i, j, BigInt::from(seed[i * cols + j]));
                }
            }
            let snf = smith_normal_form(&m);
            check_snf(&m, &snf);
            let mut prod = BigInt::one();
            for t in 1..=snf.rank.min(3) {
                prod *= &snf.invariants[t - 1];
                proptest::prop_assert_eq!(prod.clone(), minor_gcd(&m, t));
            }
        }

        #[test]
        fn kernel_enumeration_is_a_group(
            entries in proptest::collection::vec(0i64..=3, 8),
            k in 2u64..=4,
        ) {
            let b = IntMatrix::from_rows(&[&entries[..4], &entries[4..]]);
            if let Ok(sols) = enumerate_solutions(&b, &[0, 0], k, 4096, false) {
                let set: std::collections::BTreeSet<_> = sols.iter().cloned().collect();
                // Closure under addition, identity, inverses.
                proptest::prop_assert!(set.contains(&vec![0u64; 4]));
                for a in sols.iter().take(12) {
                    for bb in sols.iter().take(12) {
                        let sum: Vec<u64> =
                            a.iter().zip(bb).map(|(x, y)| (x + y) % k).collect();
                        proptest::prop_assert!(set.contains(&sum));
                    }
                    let inv: Vec<u64> = a.iter().map(|&x| (k - x % k) % k).collect();
                    proptest::prop_assert!(set.contains(&inv));
                }
            }
        }
    }
}
