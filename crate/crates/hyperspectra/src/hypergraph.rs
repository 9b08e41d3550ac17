//! Uniform hypergraphs: validated construction, JSON (de)serialization with a
//! strict schema, vertex–edge incidence, connectivity, and the generator
//! families the test corpus is built from (hyperpaths, hyperstars,
//! hypercycles, complete hypergraphs, powers of graphs, random hypertrees).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zklinear::IntMatrix;
use num_bigint::BigInt;

/// A `k`-uniform hypergraph on vertices `0..n`. Edges are stored sorted, each
/// edge a strictly increasing `k`-set; both orders are canonical so identical
/// hypergraphs serialize identically.
#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Raw JSON shape; unknown fields are rejected, validation happens in
/// [`Hypergraph::new`].
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphJson {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    pub fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k = {k}, need k >= 2")));
        }
        if n == 0 {
            return Err(Error::InvalidParameter("n = 0, need at least one vertex".into()));
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for edge in edges {
            if edge.len() != k {
                return Err(Error::EdgeSize { got: edge.len(), edge, k });
            }
            let mut e = edge.clone();
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::EdgeRepeatsVertex { edge });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            canonical.push(e);
        }
        canonical.sort();
        if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { edge: w[0].clone() });
        }
        Ok(Hypergraph { k, n, edges: canonical })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Vertex–edge incidence: one row per edge (in the canonical edge order),
    /// entry `(e, v)` is 1 when `v` lies in `e`. Every row sums to `k`.
    pub fn incidence_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.edges.len(), self.n);
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                m.set(i, v, BigInt::from(1));
            }
        }
        m
    }

    /// Breadth-first search over the vertex–edge bipartite structure. A
    /// single vertex with no edges counts as connected; an isolated vertex in
    /// a larger hypergraph does not.
    pub fn is_connected(&self) -> bool {
        if self.n == 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut seen_edge = vec![false; self.edges.len()];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for (ei, e) in self.edges.iter().enumerate() {
                if seen_edge[ei] || e.binary_search(&v).is_err() {
                    continue;
                }
                seen_edge[ei] = true;
                for &w in e {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Connected with `n = m(k-1) + 1`: the defining count for hypertrees
    /// (edges overlap in at most one vertex, no cycles).
    pub fn is_hypertree(&self) -> bool {
        !self.edges.is_empty()
            && self.is_connected()
            && self.n == self.edges.len() * (self.k - 1) + 1
    }

    /// Complete `k`-uniform hypergraph detection: all `C(n, k)` edges present.
    pub fn is_complete(&self) -> bool {
        self.edges.len() == binomial(self.n, self.k)
    }

    /// If this hypergraph is the `k`-th power of a simple graph (every edge a
    /// graph edge padded with `k - 2` fresh degree-one vertices), return that
    /// graph. Only meaningful for `k >= 3`.
    pub fn as_power_of_graph(&self) -> Option<Graph> {
        if self.k < 3 || self.edges.is_empty() {
            return None;
        }
        let deg = self.degrees();
        let mut next_fresh = self.n;
        let mut graph_edges = Vec::new();
        for e in &self.edges {
            let core: Vec<usize> = e.iter().copied().filter(|&v| deg[v] >= 2).collect();
            if core.len() > 2 {
                return None;
            }
            // Degree-one endpoints of the underlying graph edge look like
            // pads; give each one a fresh graph vertex.
            let (u, v) = match core.len() {
                2 => (core[0], core[1]),
                1 => {
                    let f = next_fresh;
                    next_fresh += 1;
                    (core[0], f)
                }
                _ => {
                    let a = next_fresh;
                    next_fresh += 2;
                    (a, a + 1)
                }
            };
            graph_edges.push((u.min(v), u.max(v)));
        }
        let fresh = next_fresh - self.n;
        let core_count = deg.iter().filter(|&&d| d >= 2).count();
        let gn = core_count + fresh;
        // Counts the isolated vertices out: a power has none.
        if self.n != gn + self.edges.len() * (self.k - 2) {
            return None;
        }
        // Relabel core vertices densely.
        let mut label = vec![usize::MAX; next_fresh];
        let mut next = 0usize;
        for (v, &d) in deg.iter().enumerate() {
            if d >= 2 {
                label[v] = next;
                next += 1;
            }
        }
        for f in self.n..next_fresh {
            label[f] = next;
            next += 1;
        }
        let edges: Vec<(usize, usize)> = graph_edges
            .iter()
            .map(|&(u, v)| (label[u].min(label[v]), label[u].max(label[v])))
            .collect();
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != edges.len() {
            return None; // two hyperedges over the same graph edge
        }
        Graph::new(gn, edges).ok()
    }

    pub fn to_json(&self) -> String {
        let raw = HypergraphJson {
            k: self.k,
            n: self.n,
            edges: self.edges.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("hypergraph serialization")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: HypergraphJson = serde_json::from_str(s)?;
        Hypergraph::new(raw.k, raw.n, raw.edges)
    }

    // ----- generator families ------------------------------------------------

    /// `m` edges in a row, consecutive edges sharing exactly one vertex.
    pub fn hyperpath(k: usize, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("hyperpath needs m >= 1".into()));
        }
        let n = m * (k - 1) + 1;
        let edges = (0..m)
            .map(|j| (j * (k - 1)..j * (k - 1) + k).collect())
            .collect();
        Self::new(k, n, edges)
    }

    /// `m` edges all sharing vertex 0.
    pub fn hyperstar(k: usize, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("hyperstar needs m >= 1".into()));
        }
        let n = m * (k - 1) + 1;
        let edges = (0..m)
            .map(|j| {
                let mut e = vec![0usize];
                e.extend(1 + j * (k - 1)..1 + (j + 1) * (k - 1));
                e
            })
            .collect();
        Self::new(k, n, edges)
    }

    /// Loose cycle: the `k`-th power of the cycle graph `C_m`, `m >= 3`.
    pub fn hypercycle(k: usize, m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidParameter("hypercycle needs m >= 3".into()));
        }
        let cycle = Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)).collect())?;
        Self::power_of_graph(&cycle, k)
    }

    /// All `k`-subsets of `0..n`.
    pub fn complete(k: usize, n: usize) -> Result<Self> {
        if n < k {
            return Err(Error::InvalidParameter(format!(
                "complete hypergraph needs n >= k, got n = {n}, k = {k}"
            )));
        }
        let mut edges = Vec::new();
        let mut cur: Vec<usize> = (0..k).collect();
        loop {
            edges.push(cur.clone());
            // next k-combination of 0..n
            let mut i = k;
            loop {
                if i == 0 {
                    return Self::new(k, n, edges);
                }
                i -= 1;
                if cur[i] != i + n - k {
                    break;
                }
                if i == 0 {
                    return Self::new(k, n, edges);
                }
            }
            cur[i] += 1;
            for j in i + 1..k {
                cur[j] = cur[j - 1] + 1;
            }
        }
    }

    /// The `k`-th power `G^(k)`: every graph edge padded with `k - 2` fresh
    /// vertices. Graph vertices keep their labels; pads are appended in edge
    /// order.
    pub fn power_of_graph(g: &Graph, k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!(
                "power construction needs k >= 3, got k = {k}"
            )));
        }
        let n = g.n + g.edges.len() * (k - 2);
        let edges = g
            .edges
            .iter()
            .enumerate()
            .map(|(j, &(u, v))| {
                let mut e = vec![u, v];
                e.extend(g.n + j * (k - 2)..g.n + (j + 1) * (k - 2));
                e
            })
            .collect();
        Self::new(k, n, edges)
    }

    /// Random hypertree grown edge by edge: each new edge attaches at a
    /// vertex drawn uniformly from the vertices present so far, then brings
    /// `k - 1` fresh ones. Reproducible from the seed.
    pub fn random_hypertree(k: usize, m: usize, seed: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidParameter("random hypertree needs m >= 1".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut edges: Vec<Vec<usize>> = vec![(0..k).collect()];
        let mut n = k;
        for _ in 1..m {
            let attach = rng.random_range(0..n);
            let mut e = vec![attach];
            e.extend(n..n + k - 1);
            n += k - 1;
            edges.push(e);
        }
        Self::new(k, n, edges)
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(k={}, n={}, edges={:?})", self.k, self.n, self.edges)
    }
}

/// Simple graph used as the base of the power construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut canonical = Vec::with_capacity(edges.len());
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidParameter(format!("graph loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            canonical.push((u.min(v), u.max(v)));
        }
        canonical.sort_unstable();
        if canonical.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate graph edge".into()));
        }
        Ok(Graph { n, edges: canonical })
    }

    pub fn triangle() -> Self {
        Graph::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(s)?;
        Graph::new(raw.n, raw.edges)
    }

    pub fn to_json(&self) -> String {
        let raw = GraphJson { n: self.n, edges: self.edges.clone() };
        serde_json::to_string_pretty(&raw).expect("graph serialization")
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_have_documented_shapes() {
        let p = Hypergraph::hyperpath(3, 2).unwrap();
        assert_eq!((p.k(), p.n()), (3, 5));
        assert_eq!(p.edges(), &[vec![0, 1, 2], vec![2, 3, 4]]);

        let s = Hypergraph::hyperstar(3, 2).unwrap();
        assert_eq!(s.edges(), &[vec![0, 1, 2], vec![0, 3, 4]]);
        // For m = 2 the hyperstar and hyperpath are isomorphic.
        assert_eq!(s.n(), p.n());

        let k4 = Hypergraph::complete(3, 4).unwrap();
        assert_eq!(k4.edge_count(), 4);
        assert_eq!(
            k4.edges(),
            &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 2, 3], vec![1, 2, 3]]
        );

        // Pads are handed out in canonical (sorted) graph-edge order.
        let tri = Hypergraph::power_of_graph(&Graph::triangle(), 3).unwrap();
        assert_eq!(tri.n(), 6);
        assert_eq!(tri.edges(), &[vec![0, 1, 3], vec![0, 2, 4], vec![1, 2, 5]]);

        let c4 = Hypergraph::hypercycle(3, 4).unwrap();
        assert_eq!((c4.n(), c4.edge_count()), (8, 4));
    }

    #[test]
    fn hypertree_vertex_count_invariant() {
        for k in 2..=4 {
            for m in 1..=4 {
                for h in [
                    Hypergraph::hyperpath(k, m).unwrap(),
                    Hypergraph::hyperstar(k, m).unwrap(),
                    Hypergraph::random_hypertree(k, m, 7).unwrap(),
                ] {
                    assert_eq!(h.n(), m * (k - 1) + 1);
                    assert_eq!(h.edge_count(), m);
                    assert!(h.is_connected());
                    assert!(h.is_hypertree());
                }
            }
        }
    }

    #[test]
    fn random_hypertree_reproducible() {
        let a = Hypergraph::random_hypertree(3, 5, 42).unwrap();
        let b = Hypergraph::random_hypertree(3, 5, 42).unwrap();
        assert_eq!(a, b);
        let c = Hypergraph::random_hypertree(3, 5, 43).unwrap();
        // Different seeds may coincide in principle; these two do not.
        assert_ne!(a, c);
    }

    #[test]
    fn degrees_and_incidence() {
        let p = Hypergraph::hyperpath(3, 2).unwrap();
        assert_eq!(p.degrees(), vec![1, 1, 2, 1, 1]);
        assert_eq!(p.degree(2).unwrap(), 2);
        assert!(p.degree(9).is_err());
        let b = p.incidence_matrix();
        assert_eq!((b.rows(), b.cols()), (2, 5));
        for i in 0..2 {
            let sum: i64 = (0..5).map(|j| i64::try_from(b.get(i, j).clone()).unwrap()).sum();
            assert_eq!(sum, 3);
        }
    }

    #[test]
    fn connectivity_detection() {
        let h = Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(!h.is_connected());
        let h = Hypergraph::new(3, 4, vec![vec![0, 1, 2]]).unwrap(); // isolated vertex 3
        assert!(!h.is_connected());
        let h = Hypergraph::new(3, 1, vec![]).unwrap();
        assert!(h.is_connected());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert!(matches!(
            Hypergraph::new(3, 5, vec![vec![0, 1]]),
            Err(Error::EdgeSize { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 5, vec![vec![0, 1, 1]]),
            Err(Error::EdgeRepeatsVertex { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, 3, vec![vec![0, 1, 3]]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Hypergraph::new(3, 4, vec![vec![0, 1, 2], vec![2, 1, 0]]),
            Err(Error::DuplicateEdge { .. })
        ));
        assert!(Hypergraph::new(1, 3, vec![]).is_err());
    }

    #[test]
    fn json_round_trip_and_schema() {
        let h = Hypergraph::hyperpath(3, 2).unwrap();
        let s = h.to_json();
        assert_eq!(Hypergraph::from_json(&s).unwrap(), h);
        // Unknown fields are rejected, not ignored.
        let bad = r#"{"k": 3, "n": 3, "edges": [[0,1,2]], "weight": 1}"#;
        assert!(Hypergraph::from_json(bad).is_err());
        // Malformed edges are rejected through the same validator.
        let bad = r#"{"k": 3, "n": 3, "edges": [[0,1]]}"#;
        assert!(Hypergraph::from_json(bad).is_err());
    }

    #[test]
    fn power_detection_round_trips() {
        let tri = Graph::triangle();
        for k in 3..=4 {
            let h = Hypergraph::power_of_graph(&tri, k).unwrap();
            let g = h.as_power_of_graph().expect("power not recognized");
            assert_eq!(g.n, 3);
            assert_eq!(g.edges.len(), 3);
        }
        // A single edge is the power of K2.
        let single = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        let g = single.as_power_of_graph().unwrap();
        assert_eq!((g.n, g.edges.len()), (2, 1));
        // K4 is not a power: every vertex has degree 3.
        assert!(Hypergraph::complete(3, 4).unwrap().as_power_of_graph().is_none());
    }

    #[test]
    fn hyperpath_is_power_of_path_graph() {
        // P2 with k = 3 is the cube of a two-edge path; the recovered graph
        // labels the shared vertex 0 and the fresh endpoints 1, 2.
        let p = Hypergraph::hyperpath(3, 2).unwrap();
        let g = p.as_power_of_graph().unwrap();
        assert_eq!(g.n, 3);
        assert_eq!(g.edges, vec![(0, 1), (0, 2)]);
    }
}
