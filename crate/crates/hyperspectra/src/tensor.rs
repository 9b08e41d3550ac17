//! Sparse order-`k` tensors with exact rational entries, in two storage
//! modes: `Symmetric` (one sorted tuple stands for its whole permutation
//! class) and `General` (every index tuple stored explicitly). Includes the
//! adjacency, Laplacian and signless Laplacian tensors of a uniform
//! hypergraph, contraction against complex or rational vectors, weak
//! irreducibility, combinatorial symmetry, the incidence matrix of the
//! support, diagonal similarity transforms, and the Z-tensor split.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rational::{format_rat, parse_rat, rat_int, rat_to_f64};
use crate::zklinear::IntMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TensorMode {
    Symmetric,
    General,
}

/// Sparse exact tensor of order `k`, dimension `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor {
    k: usize,
    n: usize,
    mode: TensorMode,
    entries: BTreeMap<Vec<usize>, BigRational>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorEntryJson {
    idx: Vec<usize>,
    val: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TensorJson {
    k: usize,
    n: usize,
    mode: TensorMode,
    entries: Vec<TensorEntryJson>,
}

impl Tensor {
    pub fn new(k: usize, n: usize, mode: TensorMode) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("tensor order k = {k}, need k >= 2")));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("tensor dimension n = 0".into()));
        }
        Ok(Tensor { k, n, mode, entries: BTreeMap::new() })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> TensorMode {
        self.mode
    }

    /// Stored entries in canonical (sorted-key) order.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &BigRational)> {
        self.entries.iter()
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    fn validate_idx(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.k {
            return Err(Error::TensorIndex { idx: idx.to_vec(), k: self.k, n: self.n });
        }
        if idx.iter().any(|&v| v >= self.n) {
            return Err(Error::TensorIndex { idx: idx.to_vec(), k: self.k, n: self.n });
        }
        Ok(())
    }

    /// Insert one entry. In symmetric mode the tuple must already be sorted
    /// ascending (it names the whole permutation class). Duplicate tuples are
    /// rejected; explicit zeros are dropped.
    pub fn insert(&mut self, idx: Vec<usize>, val: BigRational) -> Result<()> {
        self.validate_idx(&idx)?;
        if self.mode == TensorMode::Symmetric && idx.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedSymmetricIndex { idx });
        }
        if val.is_zero() {
            return Ok(());
        }
        if self.entries.contains_key(&idx) {
            return Err(Error::DuplicateTensorEntry { idx });
        }
        self.entries.insert(idx, val);
        Ok(())
    }

    /// The value of `a_{i_1 ... i_k}` as a mathematical tensor entry: in
    /// symmetric mode any permutation of a stored tuple resolves to its value.
    pub fn get(&self, idx: &[usize]) -> Result<BigRational> {
        self.validate_idx(idx)?;
        let key: Vec<usize> = match self.mode {
            TensorMode::Symmetric => {
                let mut s = idx.to_vec();
                s.sort_unstable();
                s
            }
            TensorMode::General => idx.to_vec(),
        };
        Ok(self.entries.get(&key).cloned().unwrap_or_else(BigRational::zero))
    }

    // ----- constructions -----------------------------------------------------

    /// Identity tensor: ones on the diagonal, so `I x^{k-1} = x^{[k-1]}`.
    pub fn identity(k: usize, n: usize) -> Result<Self> {
        Self::diagonal(k, &(0..n).map(|_| BigRational::one()).collect::<Vec<_>>())
    }

    /// Diagonal tensor from the given diagonal values.
    pub fn diagonal(k: usize, diag: &[BigRational]) -> Result<Self> {
        let mut t = Tensor::new(k, diag.len(), TensorMode::Symmetric)?;
        for (v, d) in diag.iter().enumerate() {
            t.insert(vec![v; k], d.clone())?;
        }
        Ok(t)
    }

    /// Adjacency tensor of a uniform hypergraph: `1/(k-1)!` on every
    /// permutation of every edge, represented by one symmetric entry per edge.
    pub fn adjacency(h: &Hypergraph) -> Result<Self> {
        let k = h.k();
        let mut t = Tensor::new(k, h.n(), TensorMode::Symmetric)?;
        let w = BigRational::one() / BigRational::from_integer(factorial(k - 1));
        for e in h.edges() {
            t.insert(e.clone(), w.clone())?;
        }
        Ok(t)
    }

    /// Laplacian `L = D - A` with vertex degrees on the diagonal.
    pub fn laplacian(h: &Hypergraph) -> Result<Self> {
        let k = h.k();
        let mut t = Tensor::new(k, h.n(), TensorMode::Symmetric)?;
        let w = -BigRational::one() / BigRational::from_integer(factorial(k - 1));
        for e in h.edges() {
            t.insert(e.clone(), w.clone())?;
        }
        for (v, d) in h.degrees().into_iter().enumerate() {
            if d > 0 {
                t.insert(vec![v; k], rat_int(d as i64))?;
            }
        }
        Ok(t)
    }

    /// Signless Laplacian `Q = D + A`.
    pub fn signless_laplacian(h: &Hypergraph) -> Result<Self> {
        let k = h.k();
        let mut t = Tensor::new(k, h.n(), TensorMode::Symmetric)?;
        let w = BigRational::one() / BigRational::from_integer(factorial(k - 1));
        for e in h.edges() {
            t.insert(e.clone(), w.clone())?;
        }
        for (v, d) in h.degrees().into_iter().enumerate() {
            if d > 0 {
                t.insert(vec![v; k], rat_int(d as i64))?;
            }
        }
        Ok(t)
    }

    /// Entry-wise scaling.
    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Tensor { k: self.k, n: self.n, mode: self.mode, entries: BTreeMap::new() };
        }
        Tensor {
            k: self.k,
            n: self.n,
            mode: self.mode,
            entries: self.entries.iter().map(|(i, v)| (i.clone(), v * c)).collect(),
        }
    }

    /// Entry-wise sum of two tensors of matching order, dimension and mode.
    pub fn add(&self, other: &Tensor) -> Result<Self> {
        if self.k != other.k || self.n != other.n || self.mode != other.mode {
            return Err(Error::InvalidParameter(
                "tensor sum needs matching order, dimension and mode".into(),
            ));
        }
        let mut entries = self.entries.clone();
        for (idx, v) in &other.entries {
            let slot = entries.entry(idx.clone()).or_insert_with(BigRational::zero);
            *slot += v;
            if slot.is_zero() {
                entries.remove(idx);
            }
        }
        Ok(Tensor { k: self.k, n: self.n, mode: self.mode, entries })
    }

    /// Expand symmetric storage into explicit general-mode entries (one per
    /// distinct permutation). General-mode tensors are returned unchanged.
    pub fn to_general(&self) -> Self {
        match self.mode {
            TensorMode::General => self.clone(),
            TensorMode::Symmetric => {
                let mut entries = BTreeMap::new();
                for (idx, v) in &self.entries {
                    for perm in distinct_permutations(idx) {
                        entries.insert(perm, v.clone());
                    }
                }
                Tensor { k: self.k, n: self.n, mode: TensorMode::General, entries }
            }
        }
    }

    /// Principal subtensor on a sorted subset of indices: keeps the entries
    /// whose index tuples lie entirely inside the subset, relabelled by
    /// position within it.
    pub fn principal_subtensor(&self, subset: &[usize]) -> Result<Tensor> {
        if subset.is_empty() || subset.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidParameter(
                "subset must be nonempty, sorted and duplicate-free".into(),
            ));
        }
        if *subset.last().unwrap() >= self.n {
            return Err(Error::InvalidParameter("subset index out of range".into()));
        }
        let mut pos = BTreeMap::new();
        for (p, &v) in subset.iter().enumerate() {
            pos.insert(v, p);
        }
        let mut t = Tensor::new(self.k, subset.len(), self.mode)?;
        for (idx, v) in &self.entries {
            if let Some(relabelled) = idx
                .iter()
                .map(|i| pos.get(i).copied())
                .collect::<Option<Vec<usize>>>()
            {
                t.insert(relabelled, v.clone())?;
            }
        }
        Ok(t)
    }

    /// Entry-wise equality as mathematical tensors, across storage modes.
    pub fn equal_entrywise(&self, other: &Tensor) -> bool {
        self.k == other.k
            && self.n == other.n
            && self.to_general().entries == other.to_general().entries
    }

    // ----- contraction -------------------------------------------------------

    /// `A x^{k-1}`: component `i` is `sum a_{i i_2 ... i_k} x_{i_2} ... x_{i_k}`.
    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        let mut out = vec![Complex64::new(0.0, 0.0); self.n];
        match self.mode {
            TensorMode::General => {
                for (idx, v) in &self.entries {
                    let mut prod = Complex64::new(rat_to_f64(v), 0.0);
                    for &i in &idx[1..] {
                        prod *= x[i];
                    }
                    out[idx[0]] += prod;
                }
            }
            TensorMode::Symmetric => {
                for (idx, v) in &self.entries {
                    let vf = rat_to_f64(v);
                    for (first, arrangements, rest) in symmetric_contractions(idx) {
                        let mut prod = Complex64::new(vf * arrangements as f64, 0.0);
                        for &i in &rest {
                            prod *= x[i];
                        }
                        out[first] += prod;
                    }
                }
            }
        }
        out
    }

    /// Real-vector contraction, for iterative numeric work.
    pub fn apply_f64(&self, x: &[f64]) -> Vec<f64> {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        let mut out = vec![0.0; self.n];
        match self.mode {
            TensorMode::General => {
                for (idx, v) in &self.entries {
                    let mut prod = rat_to_f64(v);
                    for &i in &idx[1..] {
                        prod *= x[i];
                    }
                    out[idx[0]] += prod;
                }
            }
            TensorMode::Symmetric => {
                for (idx, v) in &self.entries {
                    let vf = rat_to_f64(v);
                    for (first, arrangements, rest) in symmetric_contractions(idx) {
                        let mut prod = vf * arrangements as f64;
                        for &i in &rest {
                            prod *= x[i];
                        }
                        out[first] += prod;
                    }
                }
            }
        }
        out
    }

    /// Exact contraction against a rational vector.
    pub fn apply_rational(&self, x: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(x.len(), self.n, "vector length mismatch");
        let mut out = vec![BigRational::zero(); self.n];
        match self.mode {
            TensorMode::General => {
                for (idx, v) in &self.entries {
                    let mut prod = v.clone();
                    for &i in &idx[1..] {
                        prod *= &x[i];
                    }
                    out[idx[0]] += prod;
                }
            }
            TensorMode::Symmetric => {
                for (idx, v) in &self.entries {
                    for (first, arrangements, rest) in symmetric_contractions(idx) {
                        let mut prod = v * BigRational::from_integer(arrangements.into());
                        for &i in &rest {
                            prod *= &x[i];
                        }
                        out[first] += prod;
                    }
                }
            }
        }
        out
    }

    // ----- structure predicates ----------------------------------------------

    /// First negative entry, if any.
    pub fn check_nonnegative(&self) -> Result<()> {
        for (idx, v) in &self.entries {
            if v.is_negative() {
                return Err(Error::NegativeEntry { idx: idx.clone() });
            }
        }
        Ok(())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.check_nonnegative().is_ok()
    }

    /// Weak irreducibility: the digraph with an arc `i -> j` whenever some
    /// entry `a_{i i_2 ... i_k} != 0` has `j` among its lower indices is
    /// strongly connected. Dimension 1 is irreducible by convention.
    pub fn is_weakly_irreducible(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut fwd = vec![BTreeSet::new(); self.n];
        let mut bwd = vec![BTreeSet::new(); self.n];
        for idx in self.entries.keys() {
            match self.mode {
                TensorMode::General => {
                    for &j in &idx[1..] {
                        if j != idx[0] {
                            fwd[idx[0]].insert(j);
                            bwd[j].insert(idx[0]);
                        }
                    }
                }
                TensorMode::Symmetric => {
                    // Every permutation is an entry, so all ordered pairs of
                    // distinct indices in the tuple give arcs.
                    for &a in idx.iter() {
                        for &b in idx.iter() {
                            if a != b {
                                fwd[a].insert(b);
                                bwd[b].insert(a);
                            }
                        }
                    }
                }
            }
        }
        reaches_all(&fwd, self.n) && reaches_all(&bwd, self.n)
    }

    /// Combinatorial symmetry: the support (zero pattern) is invariant under
    /// index permutations. Symmetric-mode storage satisfies this by
    /// construction.
    pub fn is_combinatorial_symmetric(&self) -> bool {
        self.check_combinatorial_symmetric().is_ok()
    }

    pub fn check_combinatorial_symmetric(&self) -> Result<()> {
        if self.mode == TensorMode::Symmetric {
            return Ok(());
        }
        for idx in self.entries.keys() {
            for perm in distinct_permutations(idx) {
                if !self.entries.contains_key(&perm) {
                    return Err(Error::NotCombinatorialSymmetric {
                        a: idx.clone(),
                        b: perm,
                    });
                }
            }
        }
        Ok(())
    }

    /// Distinct support classes as sorted tuples, in lexicographic order.
    pub fn support_tuples(&self) -> Vec<Vec<usize>> {
        let mut set = BTreeSet::new();
        for idx in self.entries.keys() {
            let mut s = idx.clone();
            s.sort_unstable();
            set.insert(s);
        }
        set.into_iter().collect()
    }

    /// Incidence matrix of the support: one row per distinct support class
    /// (sorted tuples, lexicographic), entry `(e, j)` the multiplicity of
    /// index `j` in the tuple. Requires combinatorial symmetry, so the row is
    /// well defined. For an adjacency tensor this is the hypergraph's own
    /// vertex–edge incidence; every row sums to `k`.
    pub fn incidence_matrix(&self) -> Result<IntMatrix> {
        self.check_combinatorial_symmetric()?;
        let tuples = self.support_tuples();
        let mut m = IntMatrix::zeros(tuples.len(), self.n);
        for (r, t) in tuples.iter().enumerate() {
            for &j in t {
                let cur = m.get(r, j).clone();
                m.set(r, j, cur + BigInt::one());
            }
        }
        Ok(m)
    }

    // ----- transforms --------------------------------------------------------

    /// Diagonal similarity `D^{-(k-1)} A D`: entry `a_{i_1 ... i_k}` is
    /// multiplied by `d_{i_1}^{-(k-1)} d_{i_2} ... d_{i_k}`. The result keeps
    /// the first index special, so it is returned in general mode. Errors if
    /// a transformed entry fails to be real (phases that do not cancel).
    pub fn diag_similarity(&self, d: &DiagonalSimilarity) -> Result<Tensor> {
        if d.entries.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "diagonal has {} entries for dimension {}",
                d.entries.len(),
                self.n
            )));
        }
        let general = self.to_general();
        let mut out = Tensor::new(self.k, self.n, TensorMode::General)?;
        for (idx, v) in &general.entries {
            let mut acc = PhasedScalar::from_rational(v.clone())?;
            acc = acc.mul(&d.entries[idx[0]].pow(-((self.k as i64) - 1)));
            for &i in &idx[1..] {
                acc = acc.mul(&d.entries[i]);
            }
            let real = acc
                .to_rational()
                .ok_or_else(|| Error::NonRealSimilarityResult { idx: idx.clone() })?;
            out.insert(idx.clone(), real)?;
        }
        Ok(out)
    }

    /// Split a Z-tensor (nonpositive off-diagonal entries) as `A = s I - B`
    /// with `B` nonnegative: `s` is the largest diagonal entry, or 1 when
    /// that maximum is not positive.
    pub fn z_tensor_split(&self) -> Result<(BigRational, Tensor)> {
        for (idx, v) in &self.entries {
            let diagonal = idx.iter().all(|&i| i == idx[0]);
            if !diagonal && v.is_positive() {
                return Err(Error::NotZTensor { idx: idx.clone() });
            }
        }
        let mut s = BigRational::zero();
        for v in 0..self.n {
            let d = self.get(&vec![v; self.k])?;
            if d > s {
                s = d;
            }
        }
        if !s.is_positive() {
            s = BigRational::one();
        }
        let shifted = Tensor::diagonal_in_mode(self.k, self.n, self.mode, &s)?;
        let b = shifted.add(&self.scale(&-BigRational::one()))?;
        Ok((s, b))
    }

    fn diagonal_in_mode(k: usize, n: usize, mode: TensorMode, s: &BigRational) -> Result<Tensor> {
        let mut t = Tensor::new(k, n, mode)?;
        for v in 0..n {
            t.insert(vec![v; k], s.clone())?;
        }
        Ok(t)
    }

    // ----- serialization -----------------------------------------------------

    pub fn to_json(&self) -> String {
        let raw = TensorJson {
            k: self.k,
            n: self.n,
            mode: self.mode,
            entries: self
                .entries
                .iter()
                .map(|(idx, v)| TensorEntryJson { idx: idx.clone(), val: format_rat(v) })
                .collect(),
        };
        serde_json::to_string_pretty(&raw).expect("tensor serialization")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: TensorJson = serde_json::from_str(s)?;
        let mut t = Tensor::new(raw.k, raw.n, raw.mode)?;
        for e in raw.entries {
            t.insert(e.idx, parse_rat(&e.val)?)?;
        }
        Ok(t)
    }

    /// SHA-256 of the canonical JSON form; stable across runs and platforms.
    pub fn fingerprint(&self) -> String {
        let digest = Sha256::digest(self.to_json().as_bytes());
        digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for Tensor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor(k={}, n={}, {:?}, {} entries)", self.k, self.n, self.mode, self.entries.len())
    }
}

/// One diagonal scalar, kept exact as `magnitude * e^(2 pi i num/den)` with a
/// positive rational magnitude. Covers every use the workbench needs: real
/// rational diagonals and roots of unity from eigenvariety phases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhasedScalar {
    magnitude: BigRational,
    num: i64,
    den: i64,
}

impl PhasedScalar {
    pub fn from_rational(v: BigRational) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::InvalidParameter("zero scalar has no phase form".into()));
        }
        if v.is_negative() {
            Ok(PhasedScalar { magnitude: -v, num: 1, den: 2 })
        } else {
            Ok(PhasedScalar { magnitude: v, num: 0, den: 1 })
        }
    }

    /// `e^(2 pi i p/m)` — a unit-magnitude `m`-th root of unity.
    pub fn root_of_unity(p: u64, m: u64) -> Self {
        let den = m as i64;
        PhasedScalar { magnitude: BigRational::one(), num: (p % m) as i64, den }
    }

    fn normalized(mut self) -> Self {
        let g = num_integer::gcd(self.num.rem_euclid(self.den), self.den);
        self.num = self.num.rem_euclid(self.den);
        if g > 1 {
            self.num /= g;
            self.den /= g;
        }
        self
    }

    pub fn mul(&self, other: &Self) -> Self {
        let den = num_integer::lcm(self.den, other.den);
        let num = self.num * (den / self.den) + other.num * (den / other.den);
        PhasedScalar {
            magnitude: &self.magnitude * &other.magnitude,
            num: num.rem_euclid(den),
            den,
        }
        .normalized()
    }

    pub fn pow(&self, e: i64) -> Self {
        let mag = if e >= 0 {
            self.magnitude.pow(e as i32)
        } else {
            BigRational::one() / self.magnitude.pow((-e) as i32)
        };
        PhasedScalar {
            magnitude: mag,
            num: (self.num * e).rem_euclid(self.den),
            den: self.den,
        }
        .normalized()
    }

    /// Real value when the phase is 0 or 1/2; `None` otherwise.
    pub fn to_rational(&self) -> Option<BigRational> {
        let s = self.clone().normalized();
        match (s.num, s.den) {
            (0, _) => Some(s.magnitude),
            (1, 2) => Some(-s.magnitude),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        let angle = 2.0 * std::f64::consts::PI * self.num as f64 / self.den as f64;
        Complex64::from_polar(rat_to_f64(&self.magnitude), angle)
    }
}

/// Diagonal similarity transform: one nonzero scalar per coordinate.
#[derive(Clone, Debug)]
pub struct DiagonalSimilarity {
    pub entries: Vec<PhasedScalar>,
}

impl DiagonalSimilarity {
    /// Real rational diagonal; every entry must be nonzero.
    pub fn from_rationals(diag: &[BigRational]) -> Result<Self> {
        let mut entries = Vec::with_capacity(diag.len());
        for (pos, v) in diag.iter().enumerate() {
            if v.is_zero() {
                return Err(Error::ZeroDiagonalEntry { pos });
            }
            entries.push(PhasedScalar::from_rational(v.clone())?);
        }
        Ok(DiagonalSimilarity { entries })
    }

    /// Unit-magnitude diagonal `diag(e^(2 pi i phases_j / k))` — the form
    /// eigenvariety points produce.
    pub fn from_unit_phases(k: u64, phases: &[u64]) -> Self {
        DiagonalSimilarity {
            entries: phases.iter().map(|&p| PhasedScalar::root_of_unity(p, k)).collect(),
        }
    }
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// For a sorted tuple: every choice of first index (one per distinct value)
/// with the number of ordered arrangements of the remaining multiset and the
/// remaining indices themselves.
pub(crate) fn symmetric_contractions(idx: &[usize]) -> Vec<(usize, u64, Vec<usize>)> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (pos, &first) in idx.iter().enumerate() {
        if !seen.insert(first) {
            continue;
        }
        let mut rest: Vec<usize> = idx.to_vec();
        rest.remove(pos);
        out.push((first, arrangements(&rest), rest));
    }
    out
}

/// Number of distinct orderings of a multiset: `len! / prod(mult!)`.
fn arrangements(sorted: &[usize]) -> u64 {
    let mut total: u64 = (1..=sorted.len() as u64).product();
    let mut i = 0;
    while i < sorted.len() {
        let mut j = i;
        while j < sorted.len() && sorted[j] == sorted[i] {
            j += 1;
        }
        total /= (1..=(j - i) as u64).product::<u64>();
        i = j;
    }
    total
}

/// All distinct permutations of a tuple, each sorted into existence once.
fn distinct_permutations(idx: &[usize]) -> Vec<Vec<usize>> {
    let mut sorted = idx.to_vec();
    sorted.sort_unstable();
    let mut out = Vec::new();
    permute_distinct(&mut sorted, 0, &mut out);
    out
}

fn permute_distinct(cur: &mut Vec<usize>, pos: usize, out: &mut Vec<Vec<usize>>) {
    if pos == cur.len() {
        out.push(cur.clone());
        return;
    }
    let mut used = BTreeSet::new();
    for i in pos..cur.len() {
        if !used.insert(cur[i]) {
            continue;
        }
        cur.swap(pos, i);
        permute_distinct(cur, pos + 1, out);
        cur.swap(pos, i);
    }
}

fn reaches_all(adj: &[BTreeSet<usize>], n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == n
}
