//! Coefficient-decreasing graph rewrites and the reduction pipeline that
//! drives a connected bicyclic graph onto one of the eight terminal
//! families.
//!
//! Every rewrite preserves the vertex count, and on bicyclic hosts it also
//! preserves the parity class (asserted at runtime). Each application is
//! wrapped in a [`TransformRecord`] carrying the exact before/after
//! signless-Laplacian coefficient comparison as a machine-checkable
//! dominance certificate.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::families::{extremal_graph, Family};
use crate::graph::{cycle_edges, Graph, GraphError, ParityClass};
use crate::poly::{coeffs_via_charpoly, compare_dominance, Dominance, MatrixKind};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransformError {
    /// The vertex does not have exactly one non-pendant neighbor plus at
    /// least one pendant neighbor.
    #[error("vertex {0} is not a pendant-cluster support with a unique non-pendant neighbor")]
    NotApplicable(usize),
    #[error("no edge between vertices {0} and {1}")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) lies on a cycle, so it cannot be contracted")]
    NotABridge(usize, usize),
    #[error("edge ({0}, {1}) is a pendant edge")]
    PendantEdge(usize, usize),
    /// No cycle of length >= 5 passes through the triple; `length` is the
    /// longest cycle that does (0 when none does).
    #[error("longest cycle through the triple has length {length}, need at least 5")]
    CycleTooShort { length: usize },
    #[error("the triple's outside neighborhoods are not pairwise disjoint")]
    NeighborhoodsOverlap,
    #[error("the triple violates the positional conditions relative to the other cycles")]
    PositionConditionViolated,
    #[error("none of the source vertices carries a pendant")]
    NoPendantsToMove,
    #[error("invalid arguments: {0}")]
    BadArguments(String),
    /// The reduction pipeline reached a graph where no rewrite applies and
    /// whose base is not one of the eight terminal families. This is a
    /// reportable finding, not a panic; the offending graph is attached.
    #[error("reduction stuck at a graph ({} vertices, {} edges) outside the terminal families", .0.n(), .0.m())]
    StuckNoApplicableTransform(Box<Graph>),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which rewrite produced a record.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TransformName {
    Sigma,
    ContractToPendant,
    ShortenCycle,
    RelocatePendants,
}

impl std::fmt::Display for TransformName {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            TransformName::Sigma => "sigma",
            TransformName::ContractToPendant => "contract-to-pendant",
            TransformName::ShortenCycle => "shorten-cycle",
            TransformName::RelocatePendants => "relocate-pendants",
        };
        f.write_str(s)
    }
}

/// One rewrite application together with its exact dominance certificate
/// (input coefficient vector vs output coefficient vector, signless kind).
#[derive(Debug, Clone, Serialize)]
pub struct TransformRecord {
    pub name: TransformName,
    pub input: Graph,
    pub output: Graph,
    pub dominance: Dominance,
}

/// How the positional conditions were evaluated for one host cycle.
///
/// The three conditions constrain, for every other cycle `D`, the overlap
/// `t = |V(host) ∩ V(D)|` against `s = |{u,v,w} ∩ V(D)|`:
/// `t <= 2` forces `s <= 1`, `t = 3` forces `s ∈ {0,3}`, and `t >= 4`
/// forces `s = 3`. The source text's last two conditions name the fixed
/// second minimal cycle instead of the quantified one; both readings are
/// evaluated and reported, and `hypothesis_reading_ok` (conclusion measured
/// against the quantified cycle itself) is the one that gates application.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShortenReport {
    pub host_cycle: Vec<usize>,
    pub hypothesis_reading_ok: bool,
    pub literal_reading_ok: bool,
}

fn ord(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

fn check_vertex(g: &Graph, v: usize) -> Result<(), TransformError> {
    if v >= g.n() {
        return Err(GraphError::IndexOutOfRange { index: v, n: g.n() }.into());
    }
    Ok(())
}

/// Runtime guard: every rewrite keeps a connected bicyclic host in its
/// parity class.
fn assert_parity_preserved(input: &Graph, output: &Graph) {
    if let (Ok(a), Ok(b)) = (input.classify_bicyclic(), output.classify_bicyclic()) {
        assert_eq!(
            a.parity_class, b.parity_class,
            "rewrite changed the parity class of a bicyclic host"
        );
    }
}

/// Moves every pendant of `v` onto `v`'s unique non-pendant neighbor.
///
/// Requires `v` to have exactly one non-pendant neighbor and at least one
/// pendant neighbor (so the graph cannot be a star). The output never gains
/// a coefficient: the input's vector dominates the output's.
pub fn sigma(g: &Graph, v: usize) -> Result<Graph, TransformError> {
    check_vertex(g, v)?;
    let mut pendants = Vec::new();
    let mut supports = Vec::new();
    for x in g.neighbors(v) {
        if g.degree(x) == 1 {
            pendants.push(x);
        } else {
            supports.push(x);
        }
    }
    if supports.len() != 1 || pendants.is_empty() {
        return Err(TransformError::NotApplicable(v));
    }
    let u = supports[0];
    let mut edges = Vec::with_capacity(g.m());
    for &(a, b) in g.edges() {
        let p = if a == v && pendants.contains(&b) {
            Some(b)
        } else if b == v && pendants.contains(&a) {
            Some(a)
        } else {
            None
        };
        match p {
            // A pendant's only neighbor is v, so (u, p) cannot already exist.
            Some(p) => edges.push(ord(u, p)),
            None => edges.push((a, b)),
        }
    }
    let out = Graph::from_edge_list(g.n(), &edges)?;
    assert_parity_preserved(g, &out);
    Ok(out)
}

/// True when removing `(u, v)` disconnects `u` from `v`.
fn is_bridge(g: &Graph, u: usize, v: usize) -> Result<bool, TransformError> {
    let rest: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|&e| e != ord(u, v))
        .collect();
    let h = Graph::from_edge_list(g.n(), &rest)?;
    let comps = h.components();
    let cu = comps.iter().position(|c| c.contains(&u));
    let cv = comps.iter().position(|c| c.contains(&v));
    Ok(cu != cv)
}

/// Contracts the bridge `(u, v)`: `v`'s other neighbors move onto `u` and
/// `v` stays behind as a new pendant of `u`, keeping the vertex count.
///
/// The edge must exist, must not be a pendant edge, and must lie on no
/// cycle. A bridge has no common endpoint neighbor, so the rebuilt edge
/// list is duplicate-free.
pub fn contract_to_pendant(g: &Graph, u: usize, v: usize) -> Result<Graph, TransformError> {
    check_vertex(g, u)?;
    check_vertex(g, v)?;
    if u == v {
        return Err(TransformError::BadArguments("u and v must differ".into()));
    }
    if !g.has_edge(u, v) {
        return Err(TransformError::MissingEdge(u, v));
    }
    if g.degree(u) == 1 || g.degree(v) == 1 {
        return Err(TransformError::PendantEdge(u, v));
    }
    if !is_bridge(g, u, v)? {
        return Err(TransformError::NotABridge(u, v));
    }
    let mut edges = Vec::with_capacity(g.m());
    for &(a, b) in g.edges() {
        if (a, b) == ord(u, v) {
            continue;
        }
        let a2 = if a == v { u } else { a };
        let b2 = if b == v { u } else { b };
        edges.push(ord(a2, b2));
    }
    edges.push(ord(u, v));
    let out = Graph::from_edge_list(g.n(), &edges)?;
    assert_parity_preserved(g, &out);
    Ok(out)
}

/// Evaluates the positional conditions of the triple `(u, v, w)` against
/// every cycle other than `host`, under both readings described on
/// [`ShortenReport`].
fn position_conditions(
    g: &Graph,
    cycles: &[Vec<usize>],
    host: &[usize],
    u: usize,
    v: usize,
    w: usize,
) -> ShortenReport {
    let host_set: BTreeSet<usize> = host.iter().copied().collect();
    let s_of = |c: &[usize]| -> usize {
        [u, v, w].iter().filter(|x| c.contains(x)).count()
    };
    // The fixed cycle the literal reading measures against: the minimal
    // cycle different from the host (cycles come sorted by length).
    let s_literal = cycles.iter().find(|c| c.as_slice() != host).map(|c| s_of(c));
    let mut hypothesis_ok = true;
    let mut literal_ok = true;
    for d in cycles {
        if d.as_slice() == host {
            continue;
        }
        let t = d.iter().filter(|x| host_set.contains(x)).count();
        let s = s_of(d);
        match t {
            0..=2 => {
                // Both readings agree here: the conclusion names the
                // quantified cycle itself.
                if s > 1 {
                    hypothesis_ok = false;
                    literal_ok = false;
                }
            }
            3 => {
                if !(s == 0 || s == 3) {
                    hypothesis_ok = false;
                }
                if let Some(sl) = s_literal {
                    if !(sl == 0 || sl == 3) {
                        literal_ok = false;
                    }
                }
            }
            _ => {
                if s != 3 {
                    hypothesis_ok = false;
                }
                if let Some(sl) = s_literal {
                    if sl != 3 {
                        literal_ok = false;
                    }
                }
            }
        }
    }
    let _ = g;
    ShortenReport {
        host_cycle: host.to_vec(),
        hypothesis_reading_ok: hypothesis_ok,
        literal_reading_ok: literal_ok,
    }
}

/// Validates a shorten triple and picks its host cycle. On success returns
/// the report for the first (shortest, then lexicographically first) host
/// cycle of length >= 5 whose positional conditions hold.
fn shorten_checks(
    g: &Graph,
    u: usize,
    v: usize,
    w: usize,
) -> Result<ShortenReport, TransformError> {
    for &x in &[u, v, w] {
        check_vertex(g, x)?;
    }
    if u == v || v == w || u == w {
        return Err(TransformError::BadArguments(
            "the triple's vertices must be distinct".into(),
        ));
    }
    if !g.has_edge(u, v) {
        return Err(TransformError::MissingEdge(u, v));
    }
    if !g.has_edge(v, w) {
        return Err(TransformError::MissingEdge(v, w));
    }
    let cycles = g.all_cycles();
    let hosts: Vec<&Vec<usize>> = cycles
        .iter()
        .filter(|c| {
            let ce = cycle_edges(c);
            ce.binary_search(&ord(u, v)).is_ok() && ce.binary_search(&ord(v, w)).is_ok()
        })
        .collect();
    let longest = hosts.iter().map(|c| c.len()).max().unwrap_or(0);
    if longest < 5 {
        return Err(TransformError::CycleTooShort { length: longest });
    }
    // Outside neighborhoods must be pairwise disjoint and u,w non-adjacent;
    // this is exactly what keeps the rebuilt edge list duplicate-free.
    if g.has_edge(u, w) {
        return Err(TransformError::NeighborhoodsOverlap);
    }
    let set_a: BTreeSet<usize> = g.neighbors(u).into_iter().filter(|&x| x != v).collect();
    let set_b: BTreeSet<usize> = g
        .neighbors(v)
        .into_iter()
        .filter(|&x| x != u && x != w)
        .collect();
    let set_c: BTreeSet<usize> = g.neighbors(w).into_iter().filter(|&x| x != v).collect();
    if set_a.intersection(&set_b).next().is_some()
        || set_a.intersection(&set_c).next().is_some()
        || set_b.intersection(&set_c).next().is_some()
    {
        return Err(TransformError::NeighborhoodsOverlap);
    }
    for host in hosts {
        if host.len() < 5 {
            continue;
        }
        let report = position_conditions(g, &cycles, host, u, v, w);
        if report.hypothesis_reading_ok {
            return Ok(report);
        }
    }
    Err(TransformError::PositionConditionViolated)
}

/// Shortens a cycle through the consecutive triple `(u, v, w)` by two:
/// the edge `(v, w)` is removed, every other neighbor of `v` and of `w`
/// moves onto `u`, and the edge `(u, w)` is added. Both `v` and `w` end up
/// as pendants of `u`; the vertex count is preserved and the host cycle's
/// length drops by exactly 2.
pub fn shorten_cycle(
    g: &Graph,
    u: usize,
    v: usize,
    w: usize,
) -> Result<(Graph, ShortenReport), TransformError> {
    let report = shorten_checks(g, u, v, w)?;
    let mut edges = Vec::with_capacity(g.m());
    for &(a, b) in g.edges() {
        if (a, b) == ord(v, w) {
            continue;
        }
        if (a == v || b == v) && (a, b) != ord(u, v) {
            let x = if a == v { b } else { a };
            edges.push(ord(u, x));
        } else if a == w || b == w {
            let x = if a == w { b } else { a };
            edges.push(ord(u, x));
        } else {
            edges.push((a, b));
        }
    }
    edges.push(ord(u, w));
    let out = Graph::from_edge_list(g.n(), &edges)?;
    assert_parity_preserved(g, &out);
    Ok((out, report))
}

/// Re-attaches every pendant of every source vertex onto `target`.
pub fn relocate_pendants(
    g: &Graph,
    sources: &[usize],
    target: usize,
) -> Result<Graph, TransformError> {
    check_vertex(g, target)?;
    for &s in sources {
        check_vertex(g, s)?;
        if s == target {
            return Err(TransformError::BadArguments(
                "target must not be one of the sources".into(),
            ));
        }
    }
    let mut moved: BTreeSet<usize> = BTreeSet::new();
    for &s in sources {
        for x in g.neighbors(s) {
            if g.degree(x) == 1 && x != target {
                moved.insert(x);
            }
        }
    }
    if moved.is_empty() {
        return Err(TransformError::NoPendantsToMove);
    }
    let mut edges = Vec::with_capacity(g.m());
    for &(a, b) in g.edges() {
        if moved.contains(&a) {
            // A moved pendant's only edge goes to its source; retargeting
            // cannot duplicate because the pendant has no other edge.
            edges.push(ord(target, a));
        } else if moved.contains(&b) {
            edges.push(ord(target, b));
        } else {
            edges.push((a, b));
        }
    }
    let out = Graph::from_edge_list(g.n(), &edges)?;
    assert_parity_preserved(g, &out);
    Ok(out)
}

/// Wraps one rewrite application in its dominance certificate.
fn make_record(name: TransformName, input: &Graph, output: &Graph) -> TransformRecord {
    let a = coeffs_via_charpoly(input, MatrixKind::SignlessLaplacian);
    let b = coeffs_via_charpoly(output, MatrixKind::SignlessLaplacian);
    let dominance = compare_dominance(&a, &b).expect("vertex count is preserved");
    TransformRecord {
        name,
        input: input.clone(),
        output: output.clone(),
        dominance,
    }
}

/// Lexicographically first bridge whose endpoints both have degree >= 2.
fn first_non_pendant_bridge(g: &Graph) -> Result<Option<(usize, usize)>, TransformError> {
    for &(a, b) in g.edges() {
        if g.degree(a) >= 2 && g.degree(b) >= 2 && is_bridge(g, a, b)? {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// Finds the applicable shorten triple with the smallest key
/// `(|{u,v,w} ∩ V(C₂)|, u, v, w)`, where `C₂` is the minimal cycle other
/// than the candidate's host. Returns `None` when no triple on any cycle of
/// length >= 5 passes the checks.
fn best_shorten_triple(g: &Graph) -> Option<(usize, usize, usize)> {
    let cycles = g.all_cycles();
    let pair = g.minimal_cycle_pair().ok()?;
    let mut best: Option<((usize, usize, usize, usize), (usize, usize, usize))> = None;
    for host in &cycles {
        if host.len() < 5 {
            continue;
        }
        let other: &Vec<usize> = if *host == pair.c2 { &pair.c1 } else { &pair.c2 };
        let len = host.len();
        for i in 0..len {
            let a = host[i];
            let b = host[(i + 1) % len];
            let c = host[(i + 2) % len];
            for &(u, v, w) in &[(a, b, c), (c, b, a)] {
                if shorten_checks(g, u, v, w).is_err() {
                    continue;
                }
                let overlap = [u, v, w].iter().filter(|x| other.contains(x)).count();
                let key = (overlap, u, v, w);
                if best.as_ref().map_or(true, |(k, _)| key < *k) {
                    best = Some((key, (u, v, w)));
                }
            }
        }
    }
    best.map(|(_, t)| t)
}

/// The family whose base is isomorphic to `base`, if any.
pub fn classify_family(base: &Graph) -> Option<Family> {
    let code = base.canonical_form().ok()?;
    Family::ALL
        .into_iter()
        .find(|f| f.base_graph().canonical_form().expect("family bases are small") == code)
}

/// Backtracking isomorphism test pinning `anchor_a -> anchor_b`.
fn iso_with_anchor(a: &Graph, b: &Graph, anchor_a: usize, anchor_b: usize) -> bool {
    if a.n() != b.n() || a.m() != b.m() || a.degree(anchor_a) != b.degree(anchor_b) {
        return false;
    }
    let n = a.n();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[anchor_a] = anchor_b;
    used[anchor_b] = true;
    let order: Vec<usize> = std::iter::once(anchor_a)
        .chain((0..n).filter(|&x| x != anchor_a))
        .collect();
    fn extend(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        depth: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let x = order[depth];
        for y in 0..b.n() {
            if used[y] || a.degree(x) != b.degree(y) {
                continue;
            }
            let consistent = order[..depth].iter().all(|&x2| {
                let y2 = map[x2];
                a.has_edge(x, x2) == b.has_edge(y, y2)
            });
            if !consistent {
                continue;
            }
            map[x] = y;
            used[y] = true;
            if extend(a, b, order, depth + 1, map, used) {
                return true;
            }
            map[x] = usize::MAX;
            used[y] = false;
        }
        false
    }
    extend(a, b, &order, 1, &mut map, &mut used)
}

/// The vertex of `base` that plays the role of the family's hub (vertex 0
/// of the fixed family labeling); smallest such vertex when the base has
/// symmetries.
fn hub_image(family: Family, base: &Graph) -> Option<usize> {
    let fb = family.base_graph();
    (0..base.n()).find(|&b| iso_with_anchor(&fb, base, 0, b))
}

/// Outcome of the full reduction pipeline on one connected bicyclic graph.
#[derive(Debug, Clone, Serialize)]
pub struct ReductionOutcome {
    pub records: Vec<TransformRecord>,
    pub final_graph: Graph,
    pub parity: ParityClass,
    /// Terminal family whose base the final graph landed on; `None` means
    /// the pipeline got stuck outside the eight families.
    pub landed_family: Option<Family>,
    /// Whether the final graph is the parity class's verified minimizer.
    pub reached_extremal: bool,
    /// Exact comparison of the final graph's coefficient vector against the
    /// class minimizer's: expected to dominate (or equal) it.
    pub final_vs_extremal: Dominance,
}

impl ReductionOutcome {
    pub fn stuck(&self) -> bool {
        self.landed_family.is_none()
    }
}

/// Runs the reduction pipeline: contract every non-pendant bridge, shorten
/// cycles while any valid triple remains, then relocate all pendants onto
/// the landed family's hub. Stuck pipelines (no applicable rewrite, base
/// outside the eight families) are reported in the outcome rather than as
/// an error.
pub fn reduce_with_report(g: &Graph) -> Result<ReductionOutcome, TransformError> {
    let class = g.classify_bicyclic()?;
    let parity = class.parity_class;
    let mut cur = g.clone();
    let mut records = Vec::new();

    while let Some((a, b)) = first_non_pendant_bridge(&cur)? {
        let out = contract_to_pendant(&cur, a, b)?;
        records.push(make_record(TransformName::ContractToPendant, &cur, &out));
        cur = out;
    }

    while let Some((u, v, w)) = best_shorten_triple(&cur) {
        let (out, _) = shorten_cycle(&cur, u, v, w)?;
        records.push(make_record(TransformName::ShortenCycle, &cur, &out));
        cur = out;
    }

    let cls = cur.classify_bicyclic()?;
    debug_assert_eq!(cls.parity_class, parity);
    let landed_family = classify_family(&cls.base);
    if let Some(family) = landed_family {
        let hub_base = hub_image(family, &cls.base).expect("base is isomorphic to the family base");
        let hub = cls.core_vertices[hub_base];
        let sources: Vec<usize> = cls
            .core_vertices
            .iter()
            .copied()
            .filter(|&s| s != hub && cur.neighbors(s).iter().any(|&x| cur.degree(x) == 1))
            .collect();
        if !sources.is_empty() {
            let out = relocate_pendants(&cur, &sources, hub)?;
            records.push(make_record(TransformName::RelocatePendants, &cur, &out));
            cur = out;
        }
    }

    let extremal = extremal_graph(g.n(), parity)
        .expect("every connected bicyclic graph meets the class minimum order");
    let final_vs_extremal = compare_dominance(
        &coeffs_via_charpoly(&cur, MatrixKind::SignlessLaplacian),
        &coeffs_via_charpoly(&extremal, MatrixKind::SignlessLaplacian),
    )
    .expect("same vertex count");
    let reached_extremal = matches!(
        (landed_family, parity),
        (Some(Family::B3), ParityClass::OddClass) | (Some(Family::B7), ParityClass::EvenClass)
    );
    if reached_extremal && g.n() <= 12 {
        debug_assert_eq!(
            cur.canonical_form().unwrap(),
            extremal.canonical_form().unwrap()
        );
    }
    Ok(ReductionOutcome {
        records,
        final_graph: cur,
        parity,
        landed_family,
        reached_extremal,
        final_vs_extremal,
    })
}

/// Flat entry point: the record list of the reduction pipeline, with a
/// stuck pipeline surfaced as [`TransformError::StuckNoApplicableTransform`]
/// carrying the offending graph.
pub fn reduce_to_extremal(g: &Graph) -> Result<Vec<TransformRecord>, TransformError> {
    let outcome = reduce_with_report(g)?;
    if outcome.stuck() {
        return Err(TransformError::StuckNoApplicableTransform(Box::new(
            outcome.final_graph,
        )));
    }
    Ok(outcome.records)
}

/// Every consecutive cycle triple `(u, v, w)` whose shorten checks pass.
fn applicable_shorten_triples(g: &Graph) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for host in g.all_cycles() {
        if host.len() < 5 {
            continue;
        }
        let len = host.len();
        for i in 0..len {
            let a = host[i];
            let b = host[(i + 1) % len];
            let c = host[(i + 2) % len];
            for &(u, v, w) in &[(a, b, c), (c, b, a)] {
                if shorten_checks(g, u, v, w).is_ok() {
                    out.push((u, v, w));
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Draws a random connected bicyclic graph with 4..=8 vertices: a random
/// valid base (shared-vertex, path-joined, or theta) small enough for the
/// chosen order, with pendant trees attached one vertex at a time.
fn random_bicyclic<R: rand::Rng>(rng: &mut R) -> Graph {
    use crate::families::{build_base, BaseSpec};
    use crate::graph::BicyclicKind;
    loop {
        let n = rng.gen_range(4..=8);
        let kind = match rng.gen_range(0..3) {
            0 => BicyclicKind::VertexShared {
                p: rng.gen_range(3..=6),
                q: rng.gen_range(3..=6),
            },
            1 => BicyclicKind::PathJoined {
                p: rng.gen_range(3..=5),
                l: rng.gen_range(1..=3),
                q: rng.gen_range(3..=5),
            },
            _ => {
                let k = rng.gen_range(2..=4);
                let l = rng.gen_range(2..=k);
                let m = rng.gen_range(1..=l);
                BicyclicKind::Theta { k, l, m }
            }
        };
        let Ok(base) = build_base(&BaseSpec { kind }) else {
            continue;
        };
        if base.n() > n {
            continue;
        }
        let mut edges = base.edges().to_vec();
        for next in base.n()..n {
            edges.push((rng.gen_range(0..next), next));
        }
        return Graph::from_edge_list(n, &edges).expect("pendant growth keeps a simple graph");
    }
}

/// Seeded randomized application suite over random bicyclic hosts with at
/// most 8 vertices: at every draw, each rewrite whose preconditions hold is
/// applied at randomly chosen arguments and recorded with its exact
/// dominance certificate. Applications whose output is isomorphic to the
/// input (possible when relocating pendants between automorphically
/// equivalent vertices) are skipped: the monotonicity claims concern
/// genuine changes. Runs until at least `min_records` records exist.
pub fn seeded_suite(seed: u64, min_records: usize) -> Result<Vec<TransformRecord>, TransformError> {
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut records = Vec::new();
    while records.len() < min_records {
        let g = random_bicyclic(&mut rng);

        let sigma_candidates: Vec<usize> = (0..g.n())
            .filter(|&v| sigma(&g, v).is_ok())
            .collect();
        if let Some(&v) = sigma_candidates.choose(&mut rng) {
            let out = sigma(&g, v)?;
            records.push(make_record(TransformName::Sigma, &g, &out));
        }

        let mut bridge_candidates = Vec::new();
        for &(a, b) in g.edges() {
            for &(u, v) in &[(a, b), (b, a)] {
                if contract_to_pendant(&g, u, v).is_ok() {
                    bridge_candidates.push((u, v));
                }
            }
        }
        if let Some(&(u, v)) = bridge_candidates.choose(&mut rng) {
            let out = contract_to_pendant(&g, u, v)?;
            records.push(make_record(TransformName::ContractToPendant, &g, &out));
        }

        if let Some(&(u, v, w)) = applicable_shorten_triples(&g).choose(&mut rng) {
            let (out, _) = shorten_cycle(&g, u, v, w)?;
            records.push(make_record(TransformName::ShortenCycle, &g, &out));
        }

        // Pendant relocation is sampled from family-shaped hosts (pendant
        // stars on a terminal base), the only configuration with a
        // dominance guarantee: all non-hub pendants move onto the hub
        // (base vertex 0). An arbitrary relocation target can increase
        // coefficients. Relocations between automorphically equivalent
        // vertices leave the graph unchanged and are skipped.
        let eligible: Vec<Family> = Family::ALL
            .iter()
            .copied()
            .filter(|f| f.base_size() < 8)
            .collect();
        let family = *eligible.choose(&mut rng).expect("several bases fit under 8 vertices");
        let base_size = family.base_size();
        let n = rng.gen_range(base_size + 1..=8);
        let mut pendants = vec![0usize; base_size];
        for _ in 0..(n - base_size) {
            pendants[rng.gen_range(0..base_size)] += 1;
        }
        let sources: Vec<usize> = (1..base_size).filter(|&i| pendants[i] > 0).collect();
        if !sources.is_empty() {
            let host = crate::families::build_family(&crate::families::FamilySpec {
                family,
                pendants,
            })
            .expect("pendant distribution fits the base");
            let out = relocate_pendants(&host, &sources, 0)?;
            let changed = host.canonical_form().map(|c| c.to_string())
                != out.canonical_form().map(|c| c.to_string());
            if changed {
                records.push(make_record(TransformName::RelocatePendants, &host, &out));
            }
        }
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_base, build_family, BaseSpec, FamilySpec};
    use crate::graph::BicyclicKind;
    use crate::poly::DominanceRelation;

    fn family(f: Family, pendants: &[usize]) -> Graph {
        build_family(&FamilySpec {
            family: f,
            pendants: pendants.to_vec(),
        })
        .unwrap()
    }

    fn dominance(a: &Graph, b: &Graph) -> Dominance {
        compare_dominance(
            &coeffs_via_charpoly(a, MatrixKind::SignlessLaplacian),
            &coeffs_via_charpoly(b, MatrixKind::SignlessLaplacian),
        )
        .unwrap()
    }

    fn assert_isomorphic(a: &Graph, b: &Graph) {
        assert_eq!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
    }

    #[test]
    fn sigma_moves_pendants_to_the_unique_support() {
        // Triangle {0,1,2} with tail 0-3-4-5 and pendant 6 at 5.
        let g = Graph::from_edge_list(
            7,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5), (5, 6)],
        )
        .unwrap();
        let out = sigma(&g, 5).unwrap();
        let expected = Graph::from_edge_list(
            7,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (4, 5), (4, 6)],
        )
        .unwrap();
        assert_eq!(out, expected);
        let d = dominance(&g, &out);
        assert_eq!(d.relation, DominanceRelation::Dominates);
        assert!(d.equal_indices.contains(&0) && d.equal_indices.contains(&1));
    }

    #[test]
    fn sigma_rejects_stars_and_multi_support_vertices() {
        let star = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(sigma(&star, 0), Err(TransformError::NotApplicable(0)));
        // A cycle vertex with a pendant has two non-pendant neighbors, so
        // the rewrite does not apply there (its job is done by
        // relocate_pendants instead).
        let g = family(Family::B1, &[0, 1, 0, 0, 0]);
        assert_eq!(sigma(&g, 1), Err(TransformError::NotApplicable(1)));
    }

    #[test]
    fn contract_bridge_between_two_triangles() {
        // Two triangles joined by a bridge (0,3); contraction merges the
        // bridge and leaves a pendant at the merge vertex: the bowtie with
        // one pendant at its shared vertex.
        let g = Graph::from_edge_list(
            6,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        let out = contract_to_pendant(&g, 0, 3).unwrap();
        assert_eq!(out.n(), 6);
        assert_isomorphic(&out, &family(Family::B1, &[1, 0, 0, 0, 0]));
        let d = dominance(&g, &out);
        assert_eq!(d.relation, DominanceRelation::Dominates);
        for &i in &d.equal_indices {
            assert!(i == 0 || i == 1 || i == 6, "equality only at 0, 1, n");
        }
    }

    #[test]
    fn contract_path_interior_edge_gives_star() {
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let out = contract_to_pendant(&p4, 1, 2).unwrap();
        let star = Graph::from_edge_list(4, &[(1, 0), (1, 2), (1, 3)]).unwrap();
        assert_eq!(out, star);
    }

    #[test]
    fn contract_rejects_cycle_edges_and_pendant_edges() {
        let triangle = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(
            contract_to_pendant(&triangle, 0, 1),
            Err(TransformError::NotABridge(0, 1))
        );
        let p4 = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            contract_to_pendant(&p4, 0, 1),
            Err(TransformError::PendantEdge(0, 1))
        );
        assert_eq!(
            contract_to_pendant(&p4, 0, 2),
            Err(TransformError::MissingEdge(0, 2))
        );
    }

    #[test]
    fn shorten_pentagon_to_triangle_with_two_pendants() {
        let c5 =
            Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let (out, report) = shorten_cycle(&c5, 0, 1, 2).unwrap();
        let expected =
            Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(out, expected);
        assert!(report.hypothesis_reading_ok && report.literal_reading_ok);
        assert_eq!(report.host_cycle, vec![0, 1, 2, 3, 4]);
        let d = dominance(&c5, &out);
        assert_eq!(d.relation, DominanceRelation::Dominates);
        assert!(d.equal_indices.contains(&0) && d.equal_indices.contains(&1));
    }

    #[test]
    fn shorten_rejects_short_cycles() {
        // Two squares sharing a vertex: every cycle has length 4.
        let g = Graph::from_edge_list(
            7,
            &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (4, 5), (5, 6), (0, 6)],
        )
        .unwrap();
        assert_eq!(
            shorten_cycle(&g, 1, 2, 3),
            Err(TransformError::CycleTooShort { length: 4 })
        );
    }

    #[test]
    fn shorten_rejects_overlapping_neighborhoods() {
        // Pentagon with the chord (0,2): the triple (0,1,2) has adjacent
        // endpoints.
        let g = Graph::from_edge_list(
            5,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (0, 2)],
        )
        .unwrap();
        assert_eq!(
            shorten_cycle(&g, 0, 1, 2),
            Err(TransformError::NeighborhoodsOverlap)
        );
    }

    #[test]
    fn shorten_rejects_triples_violating_position_conditions() {
        // Theta base of B5: the 5-cycle triple (2,1,5) meets the 4-cycle in
        // two vertices (overlap 3 demands 0 or 3) and the other 5-cycle in
        // two (overlap 4 demands 3).
        let g = Family::B5.base_graph();
        assert_eq!(
            shorten_cycle(&g, 2, 1, 5),
            Err(TransformError::PositionConditionViolated)
        );
    }

    #[test]
    fn relocate_consolidates_pendants_at_the_hub() {
        let cases: [(Family, &[usize], &[usize], &[usize]); 3] = [
            (Family::B1, &[1, 1, 0, 0, 0], &[1], &[2, 0, 0, 0, 0]),
            (Family::B6, &[0, 0, 1, 1, 0, 0], &[2, 3], &[2, 0, 0, 0, 0, 0]),
            (
                Family::B8,
                &[0, 1, 1, 1, 0, 0, 0],
                &[1, 2, 3],
                &[3, 0, 0, 0, 0, 0, 0],
            ),
        ];
        for (f, before, sources, after) in cases {
            let g = family(f, before);
            let out = relocate_pendants(&g, sources, 0).unwrap();
            assert_isomorphic(&out, &family(f, after));
            let d = dominance(&g, &out);
            assert_eq!(d.relation, DominanceRelation::Dominates, "{f}");
        }
    }

    #[test]
    fn relocate_b1_equality_exactly_at_0_1_n() {
        // Equality lands exactly at {0, 1, n}: vertex count, edge count and
        // the determinant survive the move, everything in between drops.
        // (Index n-1 is strict: 151 vs 143.)
        let g = family(Family::B1, &[1, 1, 0, 0, 0]);
        let out = relocate_pendants(&g, &[1], 0).unwrap();
        let d = dominance(&g, &out);
        assert_eq!(d.relation, DominanceRelation::Dominates);
        assert_eq!(d.equal_indices, vec![0, 1, 7]);
    }

    #[test]
    fn relocate_requires_a_pendant_to_move() {
        let k23 = Family::B7.base_graph();
        assert_eq!(
            relocate_pendants(&k23, &[2], 0),
            Err(TransformError::NoPendantsToMove)
        );
        assert!(matches!(
            relocate_pendants(&k23, &[0], 0),
            Err(TransformError::BadArguments(_))
        ));
    }

    #[test]
    fn reduction_fixpoint_on_the_class_minimizers() {
        for (n, class) in [(7, ParityClass::OddClass), (7, ParityClass::EvenClass)] {
            let g = extremal_graph(n, class).unwrap();
            let outcome = reduce_with_report(&g).unwrap();
            assert!(outcome.records.is_empty());
            assert!(outcome.reached_extremal);
            assert_eq!(outcome.final_graph, g);
            assert_eq!(
                outcome.final_vs_extremal.relation,
                DominanceRelation::Equal
            );
        }
    }

    #[test]
    fn reduction_relocates_a_stray_pendant() {
        // Complete bipartite base with one pendant at a degree-2 vertex:
        // one relocation lands the even-class minimizer.
        let g = family(Family::B7, &[0, 0, 1, 0, 0]);
        let outcome = reduce_with_report(&g).unwrap();
        assert_eq!(outcome.records.len(), 1);
        assert_eq!(outcome.records[0].name, TransformName::RelocatePendants);
        assert!(outcome.reached_extremal);
        assert_isomorphic(
            &outcome.final_graph,
            &extremal_graph(6, ParityClass::EvenClass).unwrap(),
        );
    }

    #[test]
    fn reduction_contracts_and_lands_a_terminal_family() {
        // Two triangles joined by a bridge: one contraction lands the
        // bowtie family's hub member; that family is terminal but not the
        // class minimizer, whose vector it still dominates.
        let g = Graph::from_edge_list(
            6,
            &[(0, 1), (0, 2), (1, 2), (0, 3), (3, 4), (3, 5), (4, 5)],
        )
        .unwrap();
        let outcome = reduce_with_report(&g).unwrap();
        assert_eq!(outcome.records.len(), 1);
        assert_eq!(outcome.records[0].name, TransformName::ContractToPendant);
        assert_eq!(outcome.landed_family, Some(Family::B1));
        assert!(!outcome.reached_extremal);
        assert_isomorphic(&outcome.final_graph, &family(Family::B1, &[1, 0, 0, 0, 0]));
        assert_eq!(
            outcome.final_vs_extremal.relation,
            DominanceRelation::Dominates
        );
    }

    #[test]
    fn reduction_shortens_then_relocates() {
        // Pentagon and triangle sharing vertex 0: shorten the pentagon,
        // then move the two new pendants to the bowtie hub.
        let g = Graph::from_edge_list(
            7,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (5, 6),
                (0, 6),
            ],
        )
        .unwrap();
        let outcome = reduce_with_report(&g).unwrap();
        let names: Vec<TransformName> = outcome.records.iter().map(|r| r.name).collect();
        assert_eq!(
            names,
            vec![TransformName::ShortenCycle, TransformName::RelocatePendants]
        );
        assert_eq!(outcome.landed_family, Some(Family::B1));
        assert_isomorphic(&outcome.final_graph, &family(Family::B1, &[2, 0, 0, 0, 0]));
        for r in &outcome.records {
            assert_eq!(r.dominance.relation, DominanceRelation::Dominates);
        }
        assert_eq!(
            outcome.final_vs_extremal.relation,
            DominanceRelation::Dominates
        );
    }

    #[test]
    fn reduction_reports_stuck_graphs() {
        // No triple on theta(3,3,2) passes the positional conditions and
        // its base is not one of the eight families.
        let g = build_base(&BaseSpec {
            kind: BicyclicKind::Theta { k: 3, l: 3, m: 2 },
        })
        .unwrap();
        let outcome = reduce_with_report(&g).unwrap();
        assert!(outcome.stuck());
        assert!(outcome.records.is_empty());
        assert_eq!(
            outcome.final_vs_extremal.relation,
            DominanceRelation::Dominates
        );
        match reduce_to_extremal(&g) {
            Err(TransformError::StuckNoApplicableTransform(stuck)) => {
                assert_eq!(*stuck, g);
            }
            other => panic!("expected a stuck report, got {:?}", other),
        }
    }

    #[test]
    fn seeded_suite_is_monotone_and_reproducible() {
        let records = seeded_suite(11, 60).unwrap();
        assert!(records.len() >= 60);
        let mut names = BTreeSet::new();
        for r in &records {
            assert_eq!(
                r.dominance.relation,
                DominanceRelation::Dominates,
                "{} on {:?}",
                r.name,
                r.input
            );
            names.insert(r.name.to_string());
        }
        assert_eq!(names.len(), 4, "all four rewrites appear: {names:?}");
        let again = seeded_suite(11, 60).unwrap();
        assert_eq!(records.len(), again.len());
        for (a, b) in records.iter().zip(again.iter()) {
            assert_eq!(a.input, b.input);
            assert_eq!(a.output, b.output);
        }
    }
}
