//! Immutable simple undirected graphs, structural predicates, bicyclic
//! classification, minimal-cycle extraction, and canonical labeling.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt;
use thiserror::Error;

/// Errors raised by graph construction and structural operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("graph is not connected bicyclic (need connected with |E| = |V| + 1)")]
    NotBicyclic,
    #[error("canonical labeling limited to 12 vertices, got {0}")]
    TooLarge(usize),
    #[error("edge-list parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(min, max)` pairs in lexicographic order, so edge
/// iteration, equality, and hashing are all deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Validates and builds a graph from an edge list. Vertices with no
    /// incident edge are allowed; edges may be given in any order and
    /// orientation.
    pub fn from_edge_list(n: usize, pairs: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            for idx in [a, b] {
                if idx >= n {
                    return Err(GraphError::IndexOutOfRange { index: idx, n });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph { n, edges })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(min, max)` pairs in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    /// Neighbors of `v` in ascending order.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    /// Adjacency lists for all vertices (each list ascending).
    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        adj
    }

    /// Connected components as ascending vertex lists, ordered by smallest
    /// member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut queue = VecDeque::from([s]);
            seen[s] = true;
            let mut comp = vec![s];
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Proper 2-coloring (0/1 per vertex) if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let adj = self.adjacency_lists();
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        queue.push_back(w);
                    } else if color[w] == color[u] {
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

    /// Cyclomatic number |E| - |V| + (number of components).
    pub fn cyclomatic_number(&self) -> usize {
        self.m() + self.components().len() - self.n
    }

    /// Returns a relabeled copy where vertex `v` becomes `perm[v]`.
    /// `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let pairs: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Graph::from_edge_list(self.n, &pairs)
    }

    /// Structural summary: connectivity, bipartiteness, cyclomatic number,
    /// and a per-component classification.
    pub fn structural_profile(&self) -> StructuralProfile {
        let comps = self.components();
        let bipartite = self.is_bipartite();
        let mut profiles = Vec::with_capacity(comps.len());
        for comp in &comps {
            let in_comp = |v: usize| comp.binary_search(&v).is_ok();
            let edge_count = self
                .edges
                .iter()
                .filter(|&&(a, b)| in_comp(a) && in_comp(b))
                .count();
            // Within one connected component: e - v + 1 independent cycles.
            let cyc = edge_count + 1 - comp.len();
            let kind = match cyc {
                0 => ComponentKind::Tree,
                1 => {
                    let sub = self.induced_subgraph(comp);
                    if sub.is_bipartite() {
                        ComponentKind::EvenUnicyclic
                    } else {
                        ComponentKind::OddUnicyclic
                    }
                }
                _ => ComponentKind::Other,
            };
            profiles.push(ComponentProfile {
                vertices: comp.clone(),
                kind,
            });
        }
        StructuralProfile {
            connected: comps.len() <= 1,
            bipartite,
            cyclomatic: self.m() + comps.len() - self.n,
            components: profiles,
        }
    }

    /// Induced subgraph on `verts` (ascending vertex list), relabeled to
    /// `0..verts.len()` in that order.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in verts.iter().enumerate() {
            index[v] = i;
        }
        let pairs: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(a, b)| index[a] != usize::MAX && index[b] != usize::MAX)
            .map(|&(a, b)| (index[a], index[b]))
            .collect();
        Graph::from_edge_list(verts.len(), &pairs).expect("induced subgraph of a valid graph")
    }

    /// All simple cycles, each as a vertex sequence starting at its smallest
    /// vertex with the smaller second endpoint first; sorted by
    /// (length, sequence).
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency_lists();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut path: Vec<usize> = Vec::new();
        let mut on_path = vec![false; self.n];

        fn dfs(
            s: usize,
            u: usize,
            adj: &[Vec<usize>],
            path: &mut Vec<usize>,
            on_path: &mut [bool],
            cycles: &mut Vec<Vec<usize>>,
        ) {
            for &w in &adj[u] {
                if w == s {
                    if path.len() >= 3 && path[1] < *path.last().unwrap() {
                        cycles.push(path.clone());
                    }
                } else if w > s && !on_path[w] {
                    path.push(w);
                    on_path[w] = true;
                    dfs(s, w, adj, path, on_path, cycles);
                    on_path[w] = false;
                    path.pop();
                }
            }
        }

        for s in 0..self.n {
            path.clear();
            path.push(s);
            on_path[s] = true;
            dfs(s, s, &adj, &mut path, &mut on_path, &mut cycles);
            on_path[s] = false;
        }
        cycles.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        cycles
    }

    /// The two shortest cycles of a connected bicyclic graph, with their
    /// shared edges and shared vertex count. Ties between equal-length cycles
    /// break on the lexicographically smaller vertex sequence.
    pub fn minimal_cycle_pair(&self) -> Result<CyclePair, GraphError> {
        if !(self.is_connected() && self.m() == self.n + 1) {
            return Err(GraphError::NotBicyclic);
        }
        let cycles = self.all_cycles();
        debug_assert!(cycles.len() == 2 || cycles.len() == 3);
        let c1 = cycles[0].clone();
        let c2 = cycles[1].clone();
        let e1 = cycle_edges(&c1);
        let e2 = cycle_edges(&c2);
        let mut shared_edges: Vec<(usize, usize)> =
            e1.iter().filter(|e| e2.contains(e)).copied().collect();
        shared_edges.sort_unstable();
        let shared_vertices = c1.iter().filter(|v| c2.contains(v)).count();
        Ok(CyclePair {
            c1,
            c2,
            shared_edges,
            shared_vertices,
        })
    }

    /// Classifies a connected bicyclic graph: strips pendant vertices to the
    /// base (the unique subgraph of minimum degree >= 2), identifies the base
    /// shape, and records the two minimal cycle lengths and the parity class.
    pub fn classify_bicyclic(&self) -> Result<BicyclicClass, GraphError> {
        if !(self.is_connected() && self.m() == self.n + 1) {
            return Err(GraphError::NotBicyclic);
        }
        // Strip degree-1 vertices repeatedly.
        let mut alive = vec![true; self.n];
        loop {
            let mut deg = vec![0usize; self.n];
            for &(a, b) in &self.edges {
                if alive[a] && alive[b] {
                    deg[a] += 1;
                    deg[b] += 1;
                }
            }
            let mut changed = false;
            for v in 0..self.n {
                if alive[v] && deg[v] <= 1 {
                    alive[v] = false;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        let core_vertices: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        let base = self.induced_subgraph(&core_vertices);
        debug_assert!(base.degrees().iter().all(|&d| d >= 2));
        debug_assert_eq!(base.m(), base.n() + 1);

        let cycles = base.all_cycles();
        let kind = match cycles.len() {
            3 => {
                // Theta: two branch vertices joined by three internally
                // disjoint paths; record path edge-lengths k >= l >= m.
                let degs = base.degrees();
                let branches: Vec<usize> = (0..base.n()).filter(|&v| degs[v] == 3).collect();
                debug_assert_eq!(branches.len(), 2);
                let (x, y) = (branches[0], branches[1]);
                let adj = base.adjacency_lists();
                let mut lens = Vec::new();
                for &start in &adj[x] {
                    let mut prev = x;
                    let mut cur = start;
                    let mut len = 1usize;
                    while cur != y {
                        let next = *adj[cur].iter().find(|&&t| t != prev).unwrap();
                        prev = cur;
                        cur = next;
                        len += 1;
                    }
                    lens.push(len);
                }
                debug_assert_eq!(lens.len(), 3);
                lens.sort_unstable_by(|a, b| b.cmp(a));
                BicyclicKind::Theta {
                    k: lens[0],
                    l: lens[1],
                    m: lens[2],
                }
            }
            2 => {
                let shared = cycles[0].iter().filter(|v| cycles[1].contains(v)).count();
                let (mut p, mut q) = (cycles[0].len(), cycles[1].len());
                if p > q {
                    std::mem::swap(&mut p, &mut q);
                }
                if shared == 1 {
                    BicyclicKind::VertexShared { p, q }
                } else {
                    debug_assert_eq!(shared, 0);
                    // Connecting path runs between the two degree-3 vertices.
                    let degs = base.degrees();
                    let joints: Vec<usize> = (0..base.n()).filter(|&v| degs[v] == 3).collect();
                    debug_assert_eq!(joints.len(), 2);
                    let l = base.bfs_distance(joints[0], joints[1]);
                    BicyclicKind::PathJoined { p, l, q }
                }
            }
            _ => unreachable!("connected bicyclic graph has 2 or 3 simple cycles"),
        };

        let (g1, g2) = (cycles[0].len(), cycles[1].len());
        let parity_class = if g1 % 2 == 1 || g2 % 2 == 1 {
            ParityClass::OddClass
        } else {
            ParityClass::EvenClass
        };
        // A bicyclic graph is bipartite exactly when every cycle is even,
        // which for the parity classes means EvenClass <=> bipartite.
        debug_assert_eq!(
            self.is_bipartite(),
            cycles.iter().all(|c| c.len() % 2 == 0)
        );
        debug_assert_eq!(
            self.is_bipartite(),
            parity_class == ParityClass::EvenClass
        );
        Ok(BicyclicClass {
            base,
            core_vertices,
            kind,
            g1,
            g2,
            parity_class,
        })
    }

    fn bfs_distance(&self, s: usize, t: usize) -> usize {
        let adj = self.adjacency_lists();
        let mut dist = vec![usize::MAX; self.n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                return dist[u];
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        usize::MAX
    }

    /// Canonical labeling for isomorphism testing, limited to n <= 12.
    ///
    /// The code is the minimum adjacency bit-string over all vertex
    /// placements compatible with an iterated neighborhood-color refinement,
    /// found by branch-and-bound with prefix pruning. Equal codes hold
    /// exactly for isomorphic graphs.
    pub fn canonical_form(&self) -> Result<CanonicalCode, GraphError> {
        if self.n > 12 {
            return Err(GraphError::TooLarge(self.n));
        }
        let n = self.n;
        if n == 0 {
            return Ok(CanonicalCode { n: 0, bits: 0 });
        }
        // Adjacency bitmasks.
        let mut adj = vec![0u16; n];
        for &(a, b) in &self.edges {
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        // Iterated color refinement: start from degrees, refine by sorted
        // neighbor colors until the partition stabilizes. Color ranks are
        // assigned by sorted signature, so they are isomorphism-invariant.
        let mut colors: Vec<usize> = (0..n).map(|v| adj[v].count_ones() as usize).collect();
        loop {
            let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
                .map(|v| {
                    let mut nc: Vec<usize> = (0..n)
                        .filter(|&w| adj[v] >> w & 1 == 1)
                        .map(|w| colors[w])
                        .collect();
                    nc.sort_unstable();
                    (colors[v], nc)
                })
                .collect();
            let mut distinct = sigs.clone();
            distinct.sort();
            distinct.dedup();
            let new: Vec<usize> = sigs
                .drain(..)
                .map(|s| distinct.binary_search(&s).unwrap())
                .collect();
            if new == colors {
                break;
            }
            colors = new;
        }
        // Position r must receive a vertex of the r-th smallest color.
        let mut slot_colors = colors.clone();
        slot_colors.sort_unstable();

        let total_bits = n * (n - 1) / 2;
        let mut best: Option<u128> = None;
        let mut perm: Vec<usize> = Vec::with_capacity(n);
        let mut used = vec![false; n];

        // Depth r has C(r+1, 2) assigned bits; prefix-compare against best.
        fn assign(
            r: usize,
            n: usize,
            bits: u128,
            adj: &[u16],
            colors: &[usize],
            slot_colors: &[usize],
            perm: &mut Vec<usize>,
            used: &mut [bool],
            best: &mut Option<u128>,
            total_bits: usize,
        ) {
            if r == n {
                if best.map_or(true, |b| bits < b) {
                    *best = Some(bits);
                }
                return;
            }
            for v in 0..n {
                if used[v] || colors[v] != slot_colors[r] {
                    continue;
                }
                let mut chunk: u128 = 0;
                for &p in perm.iter() {
                    chunk = chunk << 1 | u128::from(adj[v] >> p & 1);
                }
                let next_bits = bits << r | chunk;
                let depth_bits = (r + 1) * r / 2;
                if let Some(b) = *best {
                    if next_bits > b >> (total_bits - depth_bits) {
                        continue;
                    }
                }
                used[v] = true;
                perm.push(v);
                assign(
                    r + 1,
                    n,
                    next_bits,
                    adj,
                    colors,
                    slot_colors,
                    perm,
                    used,
                    best,
                    total_bits,
                );
                perm.pop();
                used[v] = false;
            }
        }
        assign(
            0,
            n,
            0,
            &adj,
            &colors,
            &slot_colors,
            &mut perm,
            &mut used,
            &mut best,
            total_bits,
        );
        Ok(CanonicalCode {
            n: n as u8,
            bits: best.expect("at least one placement exists"),
        })
    }

    /// Serializes to the edge-list text format:
    /// `p <n> <m>` followed by one `<u> <v>` line per edge in sorted order.
    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.m());
        for &(a, b) in &self.edges {
            out.push_str(&format!("{} {}\n", a, b));
        }
        out
    }

    /// Parses the edge-list text format. Lines starting with `#` and blank
    /// lines are ignored; the first payload line must be `p <n> <m>`.
    pub fn from_text(s: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in s.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut tok = line.split_whitespace();
            if header.is_none() {
                if tok.next() != Some("p") {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "expected header line `p <n> <m>`".into(),
                    });
                }
                let n = parse_count(tok.next(), line_no, "vertex count")?;
                let m = parse_count(tok.next(), line_no, "edge count")?;
                if tok.next().is_some() {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "trailing tokens after header".into(),
                    });
                }
                header = Some((n, m));
            } else {
                let u = parse_count(tok.next(), line_no, "edge endpoint")?;
                let v = parse_count(tok.next(), line_no, "edge endpoint")?;
                if tok.next().is_some() {
                    return Err(GraphError::Parse {
                        line: line_no,
                        msg: "trailing tokens after edge".into(),
                    });
                }
                pairs.push((u, v));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse {
            line: 0,
            msg: "missing header line `p <n> <m>`".into(),
        })?;
        if pairs.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header declares {} edges, found {}", m, pairs.len()),
            });
        }
        Graph::from_edge_list(n, &pairs)
    }
}

fn parse_count(tok: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let t = tok.ok_or_else(|| GraphError::Parse {
        line,
        msg: format!("missing {}", what),
    })?;
    t.parse::<usize>().map_err(|_| GraphError::Parse {
        line,
        msg: format!("invalid {}: {:?}", what, t),
    })
}

/// The edges of a cycle given as a closed vertex sequence.
pub fn cycle_edges(cycle: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = cycle
        .iter()
        .zip(cycle.iter().cycle().skip(1))
        .map(|(&a, &b)| (a.min(b), a.max(b)))
        .collect();
    out.sort_unstable();
    out
}

/// Classification of one connected component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Tree,
    OddUnicyclic,
    EvenUnicyclic,
    Other,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentProfile {
    pub vertices: Vec<usize>,
    pub kind: ComponentKind,
}

#[derive(Debug, Clone, Serialize)]
pub struct StructuralProfile {
    pub connected: bool,
    pub bipartite: bool,
    pub cyclomatic: usize,
    pub components: Vec<ComponentProfile>,
}

/// Shape of a bicyclic base: two cycles sharing one vertex, two cycles
/// joined by a path of `l >= 1` edges, or a theta graph of three internally
/// disjoint paths with edge-lengths `k >= l >= m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BicyclicKind {
    VertexShared { p: usize, q: usize },
    PathJoined { p: usize, l: usize, q: usize },
    Theta { k: usize, l: usize, m: usize },
}

/// Parity class of a bicyclic graph: `OddClass` when at least one of the two
/// minimal cycle lengths is odd, `EvenClass` when both are even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ParityClass {
    OddClass,
    EvenClass,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParityClass::OddClass => write!(f, "odd"),
            ParityClass::EvenClass => write!(f, "even"),
        }
    }
}

/// Full classification of a connected bicyclic graph.
#[derive(Debug, Clone, Serialize)]
pub struct BicyclicClass {
    /// Pendant-stripped core (minimum degree >= 2), relabeled to 0..k.
    pub base: Graph,
    /// Original labels of the base vertices; `base` vertex `i` is
    /// `core_vertices[i]` in the host graph.
    pub core_vertices: Vec<usize>,
    pub kind: BicyclicKind,
    /// Length of the shortest cycle.
    pub g1: usize,
    /// Length of the second-shortest cycle.
    pub g2: usize,
    pub parity_class: ParityClass,
}

/// The two minimal cycles of a bicyclic graph.
#[derive(Debug, Clone, Serialize)]
pub struct CyclePair {
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
    pub shared_edges: Vec<(usize, usize)>,
    pub shared_vertices: usize,
}

/// Isomorphism-invariant code: two graphs (n <= 12) get equal codes exactly
/// when they are isomorphic. Codes order first by vertex count, then by the
/// canonical adjacency bits, so sorting by code is deterministic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode {
    n: u8,
    bits: u128,
}

impl CanonicalCode {
    pub fn vertex_count(&self) -> usize {
        self.n as usize
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 12 vertices need at most 66 bits = 17 hex digits; fixed width keeps
        // string order identical to structural order.
        write!(f, "{:02}-{:017x}", self.n, self.bits)
    }
}

impl Serialize for CanonicalCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_minus_e() -> Graph {
        Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap()
    }

    #[test]
    fn construction_validates() {
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 0)]),
            Err(GraphError::LoopEdge(0))
        );
        assert_eq!(
            Graph::from_edge_list(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::IndexOutOfRange { index: 2, n: 2 })
        );
        let g = Graph::from_edge_list(2, &[(1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn profile_examples() {
        let tri = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let p = tri.structural_profile();
        assert!(p.connected && !p.bipartite && p.cyclomatic == 1);
        assert_eq!(p.components[0].kind, ComponentKind::OddUnicyclic);

        let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let p = k23.structural_profile();
        assert!(p.connected && p.bipartite && p.cyclomatic == 2);
        assert_eq!(p.components[0].kind, ComponentKind::Other);

        let mix = Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let p = mix.structural_profile();
        assert_eq!(p.components.len(), 2);
        assert_eq!(p.components[0].kind, ComponentKind::OddUnicyclic);
        assert_eq!(p.components[1].kind, ComponentKind::Tree);
    }

    #[test]
    fn classify_bowtie_and_theta() {
        let bowtie =
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let c = bowtie.classify_bicyclic().unwrap();
        assert_eq!(c.kind, BicyclicKind::VertexShared { p: 3, q: 3 });
        assert_eq!((c.g1, c.g2), (3, 3));
        assert_eq!(c.parity_class, ParityClass::OddClass);

        let k23 = Graph::from_edge_list(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let c = k23.classify_bicyclic().unwrap();
        assert_eq!(c.kind, BicyclicKind::Theta { k: 2, l: 2, m: 2 });
        assert_eq!((c.g1, c.g2), (4, 4));
        assert_eq!(c.parity_class, ParityClass::EvenClass);

        let mut edges = k4_minus_e().edges().to_vec();
        edges.push((0, 4));
        let g = Graph::from_edge_list(5, &edges).unwrap();
        let c = g.classify_bicyclic().unwrap();
        assert_eq!(c.kind, BicyclicKind::Theta { k: 2, l: 2, m: 1 });
        assert_eq!((c.g1, c.g2), (3, 3));
        assert_eq!(c.parity_class, ParityClass::OddClass);
        assert_eq!(c.core_vertices, vec![0, 1, 2, 3]);
    }

    #[test]
    fn minimal_cycles_theta123() {
        // Paths of edge-lengths 1, 2, 3 between vertices 0 and 1.
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (2, 1), (0, 3), (3, 4), (4, 1)]).unwrap();
        let pair = g.minimal_cycle_pair().unwrap();
        assert_eq!(pair.c1.len(), 3);
        assert_eq!(pair.c2.len(), 4);
        assert_eq!(pair.shared_edges, vec![(0, 1)]);
        assert_eq!(pair.shared_vertices, 2);
    }

    #[test]
    fn minimal_cycles_disjoint_bases() {
        let bowtie =
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let pair = bowtie.minimal_cycle_pair().unwrap();
        assert!(pair.shared_edges.is_empty());
        assert_eq!(pair.shared_vertices, 1);

        // Two triangles joined by a 2-edge path: 7 vertices.
        let b323 = Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (5, 6), (4, 6)],
        )
        .unwrap();
        let pair = b323.minimal_cycle_pair().unwrap();
        assert!(pair.shared_edges.is_empty());
        assert_eq!(pair.shared_vertices, 0);
        let c = b323.classify_bicyclic().unwrap();
        assert_eq!(c.kind, BicyclicKind::PathJoined { p: 3, l: 2, q: 3 });
    }

    #[test]
    fn canonical_form_relabeling_invariant() {
        let bowtie =
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let perm = [3, 0, 4, 2, 1];
        let relabeled = bowtie.relabel(&perm).unwrap();
        assert_eq!(
            bowtie.canonical_form().unwrap(),
            relabeled.canonical_form().unwrap()
        );
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let s4 = Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(p4.canonical_form().unwrap(), s4.canonical_form().unwrap());
    }

    #[test]
    fn canonical_form_size_limit() {
        let g = Graph::from_edge_list(13, &[(0, 1)]).unwrap();
        assert_eq!(g.canonical_form(), Err(GraphError::TooLarge(13)));
    }

    #[test]
    fn text_round_trip() {
        let g = k4_minus_e();
        let text = g.to_text();
        assert_eq!(text, "p 4 5\n0 1\n0 2\n0 3\n1 2\n2 3\n");
        let back = Graph::from_text(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(back.to_text(), text);
        let commented = "# a comment\np 2 1\n# another\n0 1\n";
        assert_eq!(
            Graph::from_text(commented).unwrap(),
            Graph::from_edge_list(2, &[(0, 1)]).unwrap()
        );
        assert!(matches!(
            Graph::from_text("p 2 2\n0 1\n"),
            Err(GraphError::Parse { .. })
        ));
    }
}
