//! Immutable simple undirected graphs, standard-family generators, and the
//! edge-list text format.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Which Laplacian-type matrix to build: `L = D - A` or `Q = D + A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Laplacian,
    SignlessLaplacian,
}

impl MatrixKind {
    pub fn short_name(self) -> &'static str {
        match self {
            MatrixKind::Laplacian => "L",
            MatrixKind::SignlessLaplacian => "Q",
        }
    }
}

impl FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" | "l" | "laplacian" => Ok(MatrixKind::Laplacian),
            "Q" | "q" | "signless" | "signless-laplacian" => Ok(MatrixKind::SignlessLaplacian),
            other => Err(Error::InvalidParameter(format!(
                "unknown matrix kind '{other}' (expected L or Q)"
            ))),
        }
    }
}

/// A simple undirected graph: a vertex count and a canonically ordered,
/// deduplicated edge set with 0-based endpoints.
///
/// Immutable after construction; every operation on it is a pure function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from a vertex count and an edge list.
    ///
    /// Edges are normalized to `u < v`, sorted, and deduplicated. Rejects
    /// `n = 0`, out-of-range endpoints, and self-loops.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidCount);
        }
        let mut canon = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::IndexOutOfRange(u, n));
            }
            if v >= n {
                return Err(Error::IndexOutOfRange(v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Graph { n, edges: canon })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Degree sum `d = 2m`, the trace of both `L` and `Q`.
    pub fn degree_sum(&self) -> usize {
        2 * self.edges.len()
    }

    /// Edges in canonical order (`u < v`, lexicographically sorted).
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Returns `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let d = self.degrees();
        let k = d[0];
        d.iter().all(|&x| x == k).then_some(k)
    }

    /// Adjacency lists indexed by vertex, neighbors sorted ascending.
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    /// BFS 2-coloring. Returns the color classes as a vector of 0/1 when the
    /// graph is bipartite, `None` otherwise. Isolated vertices get color 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency_lists();
        let mut color = vec![u8::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components() == 1
    }

    /// Number of connected components (isolated vertices count).
    pub fn connected_components(&self) -> usize {
        let mut uf = UnionFind::new(self.n);
        for &(u, v) in &self.edges {
            uf.union(u, v);
        }
        uf.component_count()
    }

    /// Serializes to the edge-list text format: a header line `n <N>`
    /// followed by one `<u> <v>` line per edge in canonical order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("n {}\n", self.n));
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Parses the edge-list text format. Lines starting with `#` and blank
    /// lines are ignored; the first significant line must be `n <N>`.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            match n {
                None => {
                    if parts.next() != Some("n") {
                        return Err(Error::ParseError(format!(
                            "line {}: expected header 'n <N>', got '{line}'",
                            lineno + 1
                        )));
                    }
                    let count = parts
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| {
                            Error::ParseError(format!("line {}: bad vertex count", lineno + 1))
                        })?;
                    if parts.next().is_some() {
                        return Err(Error::ParseError(format!(
                            "line {}: trailing tokens after header",
                            lineno + 1
                        )));
                    }
                    n = Some(count);
                }
                Some(_) => {
                    let u = parts.next().and_then(|t| t.parse::<usize>().ok());
                    let v = parts.next().and_then(|t| t.parse::<usize>().ok());
                    match (u, v, parts.next()) {
                        (Some(u), Some(v), None) => edges.push((u, v)),
                        _ => {
                            return Err(Error::ParseError(format!(
                                "line {}: expected '<u> <v>', got '{line}'",
                                lineno + 1
                            )))
                        }
                    }
                }
            }
        }
        let n = n.ok_or_else(|| Error::ParseError("missing 'n <N>' header".into()))?;
        if n == 0 {
            return Err(Error::ParseError("vertex count must be at least 1".into()));
        }
        Graph::new(n, &edges)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "graph(n={}, m={})", self.n, self.edges.len())
    }
}

/// Standard graph families recognized by the generator and the closed-form
/// spectrum formulas.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphFamily {
    /// Cycle `C_n`, `n >= 3`.
    Cycle(usize),
    /// Path `P_n`, `n >= 2`.
    Path(usize),
    /// Complete graph `K_n`, `n >= 2`.
    Complete(usize),
    /// Complete bipartite `K_{p,q}`, `p, q >= 1`.
    Bipartite(usize, usize),
    /// Erdos-Renyi `G(n, p)` with a seeded splitmix64 stream.
    ErdosRenyi { n: usize, p: f64, seed: u64 },
}

impl FromStr for GraphFamily {
    type Err = Error;

    /// Parses generator specs: `cycle:N`, `path:N`, `complete:N`,
    /// `bipartite:P,Q`, `er:N,P,SEED`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidParameter(format!("generator spec '{s}': {msg}"));
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| bad("expected '<family>:<params>'"))?;
        let family = match name {
            "cycle" | "path" | "complete" => {
                let n: usize = args.parse().map_err(|_| bad("bad vertex count"))?;
                match name {
                    "cycle" => GraphFamily::Cycle(n),
                    "path" => GraphFamily::Path(n),
                    _ => GraphFamily::Complete(n),
                }
            }
            "bipartite" => {
                let (p, q) = args.split_once(',').ok_or_else(|| bad("expected 'P,Q'"))?;
                GraphFamily::Bipartite(
                    p.parse().map_err(|_| bad("bad part size"))?,
                    q.parse().map_err(|_| bad("bad part size"))?,
                )
            }
            "er" => {
                let mut it = args.split(',');
                let n = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("bad vertex count"))?;
                let p = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("bad edge probability"))?;
                let seed = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad("bad seed"))?;
                if it.next().is_some() {
                    return Err(bad("expected 'N,P,SEED'"));
                }
                GraphFamily::ErdosRenyi { n, p, seed }
            }
            other => return Err(bad(&format!("unknown family '{other}'"))),
        };
        Ok(family)
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Cycle(n) => write!(f, "cycle:{n}"),
            GraphFamily::Path(n) => write!(f, "path:{n}"),
            GraphFamily::Complete(n) => write!(f, "complete:{n}"),
            GraphFamily::Bipartite(p, q) => write!(f, "bipartite:{p},{q}"),
            GraphFamily::ErdosRenyi { n, p, seed } => write!(f, "er:{n},{p},{seed}"),
        }
    }
}

/// Builds the named graph. Vertex layouts are fixed: cycles and paths are
/// numbered along the walk, `K_{p,q}` puts part one at `0..p`, and the
/// Erdos-Renyi generator scans vertex pairs in lexicographic order, keeping
/// pair `(u, v)` when the next splitmix64 draw is below `p`.
pub fn generate(family: &GraphFamily) -> Result<Graph> {
    match *family {
        GraphFamily::Cycle(n) => {
            if n < 3 {
                return Err(Error::InvalidParameter(format!(
                    "cycle needs n >= 3 (got {n})"
                )));
            }
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::new(n, &edges)
        }
        GraphFamily::Path(n) => {
            if n < 2 {
                return Err(Error::InvalidParameter(format!(
                    "path needs n >= 2 (got {n})"
                )));
            }
            let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
            Graph::new(n, &edges)
        }
        GraphFamily::Complete(n) => {
            // K_1 is allowed: a single vertex with no edges
            if n < 1 {
                return Err(Error::InvalidParameter(format!(
                    "complete needs n >= 1 (got {n})"
                )));
            }
            let mut edges = Vec::with_capacity(n * (n - 1) / 2);
            for u in 0..n {
                for v in u + 1..n {
                    edges.push((u, v));
                }
            }
            Graph::new(n, &edges)
        }
        GraphFamily::Bipartite(p, q) => {
            if p < 1 || q < 1 {
                return Err(Error::InvalidParameter(format!(
                    "bipartite needs p, q >= 1 (got {p},{q})"
                )));
            }
            let mut edges = Vec::with_capacity(p * q);
            for u in 0..p {
                for v in 0..q {
                    edges.push((u, p + v));
                }
            }
            Graph::new(p + q, &edges)
        }
        GraphFamily::ErdosRenyi { n, p, seed } => {
            if n < 1 {
                return Err(Error::InvalidParameter("er needs n >= 1".into()));
            }
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::InvalidParameter(format!(
                    "er edge probability must be in [0,1] (got {p})"
                )));
            }
            let mut rng = SplitMix64::new(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.next_f64() < p {
                        edges.push((u, v));
                    }
                }
            }
            Graph::new(n, &edges)
        }
    }
}

/// SplitMix64 PRNG (Steele, Lea, Flood 2014). One 64-bit state word; each
/// draw adds the golden-gamma constant and applies the murmur-style finalizer.
/// Chosen so random corpora are reproducible across implementations from the
/// seed alone.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Union-find with path halving, used for component counting.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    pub fn component_count(&self) -> usize {
        self.components
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_k2() {
        let g = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn builds_cospectral_g1() {
        let g = Graph::new(8, &[(0, 1), (1, 2), (4, 5), (5, 6), (5, 3), (4, 6)]).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree_sum(), 12);
    }

    #[test]
    fn rejects_self_loop() {
        assert_eq!(Graph::new(3, &[(0, 0)]), Err(Error::SelfLoop(0)));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(Graph::new(0, &[]), Err(Error::InvalidCount));
        assert_eq!(Graph::new(2, &[(0, 2)]), Err(Error::IndexOutOfRange(2, 2)));
    }

    #[test]
    fn dedups_and_orders_edges() {
        let g = Graph::new(3, &[(2, 1), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn generates_named_families() {
        let c4 = generate(&GraphFamily::Cycle(4)).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));
        assert_eq!(c4.regularity(), Some(2));
        assert!(c4.is_bipartite());

        let k3 = generate(&GraphFamily::Complete(3)).unwrap();
        assert_eq!((k3.vertex_count(), k3.edge_count()), (3, 3));
        assert_eq!(k3.regularity(), Some(2));
        assert!(!k3.is_bipartite());

        let p3 = generate(&GraphFamily::Path(3)).unwrap();
        assert_eq!(p3.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(p3.degrees(), vec![1, 2, 1]);
        assert_eq!(p3.regularity(), None);
        assert!(p3.is_bipartite());
    }

    #[test]
    fn rejects_degenerate_families() {
        assert!(generate(&GraphFamily::Cycle(2)).is_err());
        assert!(generate(&GraphFamily::Path(1)).is_err());
        assert!(generate(&GraphFamily::Bipartite(0, 3)).is_err());
        assert!(generate(&GraphFamily::Complete(0)).is_err());
        // K_1 is a single vertex
        let k1 = generate(&GraphFamily::Complete(1)).unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
    }

    #[test]
    fn parses_generator_specs() {
        assert_eq!("cycle:4".parse::<GraphFamily>().unwrap(), GraphFamily::Cycle(4));
        assert_eq!(
            "bipartite:2,3".parse::<GraphFamily>().unwrap(),
            GraphFamily::Bipartite(2, 3)
        );
        assert_eq!(
            "er:10,0.5,42".parse::<GraphFamily>().unwrap(),
            GraphFamily::ErdosRenyi { n: 10, p: 0.5, seed: 42 }
        );
        assert!("cycle".parse::<GraphFamily>().is_err());
        assert!("frob:3".parse::<GraphFamily>().is_err());
    }

    #[test]
    fn er_is_deterministic_per_seed() {
        let spec = GraphFamily::ErdosRenyi { n: 12, p: 0.4, seed: 7 };
        let a = generate(&spec).unwrap();
        let b = generate(&spec).unwrap();
        assert_eq!(a, b);
        let c = generate(&GraphFamily::ErdosRenyi { n: 12, p: 0.4, seed: 8 }).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = generate(&GraphFamily::ErdosRenyi { n: 9, p: 0.6, seed: 3 }).unwrap();
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn bipartition_classes() {
        let c4 = generate(&GraphFamily::Cycle(4)).unwrap();
        let colors = c4.bipartition().unwrap();
        assert_eq!(colors, vec![0, 1, 0, 1]);
        assert!(generate(&GraphFamily::Cycle(5)).unwrap().bipartition().is_none());
    }

    #[test]
    fn connectivity() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        assert_eq!(g.connected_components(), 2);
        assert!(generate(&GraphFamily::Path(5)).unwrap().is_connected());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = generate(&GraphFamily::ErdosRenyi { n: 8, p: 0.5, seed: 11 }).unwrap();
        let text = g.to_edge_list();
        assert_eq!(Graph::from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_parses_comments_and_errors() {
        let g = Graph::from_edge_list("# a triangle\nn 3\n0 1\n1 2\n\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(Graph::from_edge_list("0 1\n").is_err());
        assert!(Graph::from_edge_list("n 3\n0\n").is_err());
        assert!(Graph::from_edge_list("n 3\n0 3\n").is_err());
    }
}
