//! A-state graphs and the Balanced/Burdened taxonomy of positive diagrams.
//!
//! The *A-state graph* of a diagram `D` has one vertex per A-state circle
//! and one edge per crossing, joining the two circles the crossing's
//! smoothed strands lie on.  For a positive diagram the A-state is the
//! Seifert state, so this is the Seifert graph.  The *reduced* A-state
//! graph collapses parallel edges, remembering their multiplicity; its
//! edges split into *cut* edges (bridges) and *cycle* edges, and its first
//! Betti number `E − V + 1` counts holes.
//!
//! A positive diagram is **Balanced of type 0/1/2** when its reduced graph
//! has 0/1/2 holes, every cut edge carries exactly two crossings, and every
//! cycle edge exactly one; **Burdened** relaxes "exactly" to "at least".
//! With two holes, an odd number of cycle edges instead gives the **Oddly**
//! variants.  The *burdening number* `m` is the surplus
//! `Σ_cut (mult − 2) + Σ_cycle (mult − 1)`: the number of crossings that
//! must be smoothed away to reach a Balanced diagram of the same type.
//!
//! These graph shapes drive exact predictions: the signed second Jones
//! coefficient via `(−1)^(n−1) V₁ = s − 1 − #adjacent circle pairs`, the
//! leading Conway coefficient (`k/2` for one hole of boundary length `k`,
//! `(k₁k₂ − x²)/4` resp. `(k₁k₂ − x² + 1)/4` for two holes sharing `x`
//! boundary edges), upper bounds on the B-circle count (`n + 2m`, or
//! `n + 2(m+1)` in the Oddly case), and closed forms for `m` in terms of
//! `min deg V`.  Clasp moves kill holes two boundary edges at a time while
//! preserving the component and B-circle counts.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_rational::Ratio;
use thiserror::Error;

use crate::diagram::{dart, DiagramStats, Dart, Diagram};
use crate::unionfind::UnionFind;

/// Errors from state-graph analysis.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateGraphError {
    /// The operation is only defined for positive diagrams.
    #[error("requires a positive diagram: {negative} negative crossing(s) present")]
    NonPositive { negative: usize },
    /// The operation is only defined for non-split diagrams.
    #[error("requires a connected (non-split) diagram")]
    Split,
    /// A connected graph was required.
    #[error("graph is disconnected")]
    Disconnected,
    /// The diagram falls outside the Balanced/Burdened taxonomy.
    #[error("diagram is unclassified: {reason}")]
    Unclassified { reason: String },
    /// A formula was applied to the wrong diagram type.
    #[error("formula applies to diagram type {expected}, got type {got:?}")]
    WrongType { expected: &'static str, got: Option<u8> },
    /// A clasp witness failed validation.
    #[error("invalid clasp witness: {reason}")]
    InvalidWitness { reason: String },
}

/// The A-state graph: one vertex per A-circle, one edge per crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateGraph {
    vertices: usize,
    /// Edge of crossing `x` joins `edges[x].0` and `edges[x].1`.
    edges: Vec<(usize, usize)>,
    /// A-circle id of every dart.
    circle_of_dart: Vec<usize>,
    positive: bool,
}

impl StateGraph {
    /// Number of vertices (A-state circles, free loops included).
    pub fn vertices(&self) -> usize {
        self.vertices
    }

    /// Edges indexed by crossing.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// A-circle id of a dart.
    pub fn circle_of(&self, d: Dart) -> usize {
        self.circle_of_dart[d]
    }

    /// Whether the source diagram was positive (A-circles = Seifert circles).
    pub fn is_positive_diagram(&self) -> bool {
        self.positive
    }
}

/// Role of a reduced edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRole {
    /// A bridge of the reduced graph.
    Cut,
    /// An edge lying on a cycle.
    Cycle,
}

/// An edge of the reduced A-state graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReducedEdge {
    /// Smaller endpoint.
    pub u: usize,
    /// Larger endpoint.
    pub v: usize,
    /// Number of parallel crossings collapsed into this edge.
    pub multiplicity: usize,
    /// Cut (bridge) or cycle edge.
    pub role: EdgeRole,
}

/// The reduced A-state graph: parallel edges collapsed with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedGraph {
    /// Vertex count (same circles as the unreduced graph).
    pub vertices: usize,
    /// Distinct edges, sorted by endpoints.
    pub edges: Vec<ReducedEdge>,
}

/// Build the A-state graph of a diagram.  Non-positive diagrams are
/// permitted; the result is flagged via [`StateGraph::is_positive_diagram`].
pub fn build_a_state_graph(d: &Diagram) -> StateGraph {
    let c = d.crossings();
    let mut uf = UnionFind::new(4 * c);
    for x in 0..c {
        uf.union(dart(x, 0), dart(x, 3));
        uf.union(dart(x, 1), dart(x, 2));
    }
    for t in 0..4 * c {
        uf.union(t, d.mate(t));
    }
    // Circle ids in order of first dart appearance, free loops appended.
    let mut id_of_root: BTreeMap<usize, usize> = BTreeMap::new();
    let mut circle_of_dart = vec![0usize; 4 * c];
    for t in 0..4 * c {
        let r = uf.find(t);
        let next = id_of_root.len();
        circle_of_dart[t] = *id_of_root.entry(r).or_insert(next);
    }
    let vertices = id_of_root.len() + d.free_loops();
    let edges =
        (0..c).map(|x| (circle_of_dart[dart(x, 0)], circle_of_dart[dart(x, 1)])).collect();
    StateGraph {
        vertices,
        edges,
        circle_of_dart,
        positive: d.negative_crossings() == 0,
    }
}

/// Bridges of a simple graph given as an adjacency list of
/// `(neighbor, edge id)`; loops are never bridges.
fn find_bridges(vertices: usize, adj: &[Vec<(usize, usize)>], n_edges: usize) -> Vec<bool> {
    let mut is_bridge = vec![false; n_edges];
    let mut disc = vec![usize::MAX; vertices];
    let mut low = vec![0usize; vertices];
    let mut timer = 0usize;
    // Frames: (vertex, edge used to enter, next adjacency index).
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for root in 0..vertices {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        stack.push((root, usize::MAX, 0));
        while let Some(&(u, pe, idx)) = stack.last() {
            if idx < adj[u].len() {
                stack.last_mut().expect("frame exists").2 += 1;
                let (v, e) = adj[u][idx];
                if e == pe || v == u {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, e, 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] > disc[p] {
                        is_bridge[pe] = true;
                    }
                }
            }
        }
    }
    is_bridge
}

/// Collapse parallel edges and mark each surviving edge cut or cycle.
pub fn reduce_graph(g: &StateGraph) -> ReducedGraph {
    let mut mult: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &(a, b) in &g.edges {
        let key = (a.min(b), a.max(b));
        *mult.entry(key).or_insert(0) += 1;
    }
    let keys: Vec<(usize, usize)> = mult.keys().copied().collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); g.vertices];
    for (e, &(u, v)) in keys.iter().enumerate() {
        adj[u].push((v, e));
        if u != v {
            adj[v].push((u, e));
        }
    }
    let bridge = find_bridges(g.vertices, &adj, keys.len());
    let edges = keys
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| ReducedEdge {
            u,
            v,
            multiplicity: mult[&(u, v)],
            role: if bridge[e] { EdgeRole::Cut } else { EdgeRole::Cycle },
        })
        .collect();
    ReducedGraph { vertices: g.vertices, edges }
}

impl ReducedGraph {
    /// Whether the graph is connected (isolated vertices count).
    pub fn is_connected(&self) -> bool {
        if self.vertices <= 1 {
            return true;
        }
        let mut uf = UnionFind::new(self.vertices);
        for e in &self.edges {
            uf.union(e.u, e.v);
        }
        uf.class_count() == 1
    }

    /// First Betti number `E − V + 1` (the number of holes).
    pub fn betti(&self) -> Result<usize, StateGraphError> {
        if !self.is_connected() {
            return Err(StateGraphError::Disconnected);
        }
        Ok(self.edges.len() + 1 - self.vertices)
    }

    /// Number of edges lying on cycles.
    pub fn cycle_edge_count(&self) -> usize {
        self.edges.iter().filter(|e| e.role == EdgeRole::Cycle).count()
    }

    /// Surplus multiplicity `Σ_cut (mult − 2) + Σ_cycle (mult − 1)`, counting
    /// only non-negative contributions (deficient cut edges are a taxonomy
    /// violation reported by [`classify`], not a negative surplus).
    pub fn surplus(&self) -> u64 {
        self.edges
            .iter()
            .map(|e| {
                let floor = match e.role {
                    EdgeRole::Cut => 2,
                    EdgeRole::Cycle => 1,
                };
                e.multiplicity.saturating_sub(floor) as u64
            })
            .sum()
    }

    /// DOT text for documentation figures.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph reduced_a_state {\n");
        for v in 0..self.vertices {
            let _ = writeln!(s, "  v{v};");
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  v{} -- v{} [label=\"x{}\", style={}];",
                e.u,
                e.v,
                e.multiplicity,
                if e.role == EdgeRole::Cut { "dashed" } else { "solid" },
            );
        }
        s.push_str("}\n");
        s
    }

    /// JSON form: vertex count plus edges with multiplicity and role.
    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<serde_json::Value> = self
            .edges
            .iter()
            .map(|e| {
                serde_json::json!({
                    "u": e.u,
                    "v": e.v,
                    "multiplicity": e.multiplicity,
                    "role": match e.role {
                        EdgeRole::Cut => "cut",
                        EdgeRole::Cycle => "cycle",
                    },
                })
            })
            .collect();
        serde_json::json!({ "vertices": self.vertices, "edges": edges })
    }
}

/// Taxonomy family of a positive diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// Exact multiplicities (cut = 2, cycle = 1); even cycle edges if 2 holes.
    Balanced,
    /// Exact multiplicities with an odd number of cycle edges (2 holes).
    OddlyBalanced,
    /// Surplus multiplicities allowed; even cycle edges if 2 holes.
    Burdened,
    /// Surplus multiplicities with an odd number of cycle edges (2 holes).
    OddlyBurdened,
    /// Outside the taxonomy (see the diagnostic).
    Unclassified,
}

impl Family {
    /// Stable string form used in JSON reports.
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Balanced => "Balanced",
            Family::OddlyBalanced => "OddlyBalanced",
            Family::Burdened => "Burdened",
            Family::OddlyBurdened => "OddlyBurdened",
            Family::Unclassified => "Unclassified",
        }
    }
}

/// Parity of the cycle-edge count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Even number of cycle edges.
    Even,
    /// Odd number of cycle edges.
    Odd,
}

/// Result of classifying a positive diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// Taxonomy family.
    pub family: Family,
    /// Number of holes (0, 1 or 2); `None` when unclassified.
    pub diagram_type: Option<u8>,
    /// Burdening number: surplus crossings over the Balanced pattern.
    pub m: u64,
    /// Hole boundary length (type 1 only).
    pub k: Option<u64>,
    /// Larger hole boundary length (type 2 only).
    pub k1: Option<u64>,
    /// Smaller hole boundary length (type 2 only).
    pub k2: Option<u64>,
    /// Boundary edges shared by the two holes (type 2 only).
    pub x: Option<u64>,
    /// Number of cycle edges in the reduced graph.
    pub cycle_edges: usize,
    /// Parity of the cycle-edge count.
    pub cycle_edge_parity: Parity,
    /// Reason the diagram fell outside the taxonomy.
    pub diagnostic: Option<String>,
}

impl Classification {
    /// JSON form of the classification.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "family": self.family.as_str(),
            "type": self.diagram_type,
            "m": self.m,
            "k": self.k,
            "k1": self.k1,
            "k2": self.k2,
            "x": self.x,
            "cycle_edges": self.cycle_edges,
            "cycle_edge_parity": match self.cycle_edge_parity {
                Parity::Even => "even",
                Parity::Odd => "odd",
            },
            "diagnostic": self.diagnostic,
        })
    }
}

fn require_positive_connected(d: &Diagram) -> Result<(), StateGraphError> {
    let negative = d.negative_crossings();
    if negative > 0 {
        return Err(StateGraphError::NonPositive { negative });
    }
    if d.is_split() {
        return Err(StateGraphError::Split);
    }
    Ok(())
}

/// Walk along degree-2 vertices of the contracted cycle-edge graph from
/// `start` along edge `first`, consuming edges, until a branch vertex (or a
/// dead end) is reached.  Returns (end vertex, path length in edges).
fn walk_path(
    adj: &[Vec<(usize, usize)>],
    degree: &[usize],
    used: &mut [bool],
    start: usize,
    first: usize,
) -> (usize, usize) {
    let mut len = 0usize;
    let mut at = start;
    let mut edge = first;
    loop {
        used[edge] = true;
        len += 1;
        let &(next, _) = adj[at]
            .iter()
            .find(|&&(_, e)| e == edge)
            .expect("edge incident to current vertex");
        at = next;
        if degree[at] != 2 {
            return (at, len);
        }
        match adj[at].iter().find(|&&(_, e)| !used[e]) {
            Some(&(_, e)) => edge = e,
            None => return (at, len),
        }
    }
}

/// Classify a positive non-split diagram into the Balanced/Burdened
/// taxonomy.  Taxonomy violations (a hole count above two, deficient cut
/// edges, loop edges from nugatory crossings) yield
/// [`Family::Unclassified`] with a diagnostic rather than an error.
pub fn classify(d: &Diagram) -> Result<Classification, StateGraphError> {
    require_positive_connected(d)?;
    let g = build_a_state_graph(d);
    let r = reduce_graph(&g);
    let cycle_edges = r.cycle_edge_count();
    let parity = if cycle_edges % 2 == 0 { Parity::Even } else { Parity::Odd };
    let m = r.surplus();
    let unclassified = |reason: String| Classification {
        family: Family::Unclassified,
        diagram_type: None,
        m,
        k: None,
        k1: None,
        k2: None,
        x: None,
        cycle_edges,
        cycle_edge_parity: parity,
        diagnostic: Some(reason),
    };

    if let Some(e) = r.edges.iter().find(|e| e.u == e.v) {
        return Ok(unclassified(format!(
            "loop edge at circle {} (nugatory crossing)",
            e.u
        )));
    }
    if let Some(e) = r.edges.iter().find(|e| e.role == EdgeRole::Cut && e.multiplicity < 2) {
        return Ok(unclassified(format!(
            "cut edge ({}, {}) carries only {} crossing(s); at least 2 required",
            e.u, e.v, e.multiplicity
        )));
    }
    let betti = r.betti()?;
    if betti > 2 {
        return Ok(unclassified(format!("{betti} holes exceed the taxonomy (max 2)")));
    }

    let exact = r.edges.iter().all(|e| {
        e.multiplicity
            == match e.role {
                EdgeRole::Cut => 2,
                EdgeRole::Cycle => 1,
            }
    });
    let family = match (exact, betti, parity) {
        (true, 2, Parity::Odd) => Family::OddlyBalanced,
        (false, 2, Parity::Odd) => Family::OddlyBurdened,
        (true, _, _) => Family::Balanced,
        (false, _, _) => Family::Burdened,
    };

    // Contract cut edges; the remaining cycle edges form a single cycle
    // (one hole) or a theta / wedge of two cycles (two holes).
    let mut uf = UnionFind::new(r.vertices);
    for e in &r.edges {
        if e.role == EdgeRole::Cut {
            uf.union(e.u, e.v);
        }
    }
    let cycle: Vec<&ReducedEdge> =
        r.edges.iter().filter(|e| e.role == EdgeRole::Cycle).collect();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); r.vertices];
    for (i, e) in cycle.iter().enumerate() {
        let (a, b) = (uf.find(e.u), uf.find(e.v));
        debug_assert_ne!(a, b, "a cycle edge cannot close over a bridge path");
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    let degree: Vec<usize> = adj.iter().map(Vec::len).collect();

    let (k, k1, k2, x) = match betti {
        0 => (None, None, None, None),
        1 => {
            if degree.iter().any(|&deg| deg != 0 && deg != 2) {
                return Ok(unclassified("one hole but branching cycle edges".into()));
            }
            (Some(cycle.len() as u64), None, None, None)
        }
        2 => {
            let branches: Vec<usize> =
                (0..r.vertices).filter(|&v| degree[v] > 2).collect();
            let mut used = vec![false; cycle.len()];
            match branches.as_slice() {
                // Theta: two degree-3 vertices joined by three paths.
                &[bu, bw] if degree[bu] == 3 && degree[bw] == 3 => {
                    let mut lens = Vec::new();
                    for &(_, e) in &adj[bu] {
                        if used[e] {
                            continue;
                        }
                        let (end, len) = walk_path(&adj, &degree, &mut used, bu, e);
                        if end != bw {
                            return Ok(unclassified(
                                "two holes but no theta/wedge decomposition".into(),
                            ));
                        }
                        lens.push(len as u64);
                    }
                    lens.sort_unstable();
                    let (r3, q, p) = (lens[0], lens[1], lens[2]);
                    (None, Some(p + r3), Some(q + r3), Some(r3))
                }
                // Wedge of two cycles at one degree-4 vertex.
                &[bv] if degree[bv] == 4 => {
                    let mut lens = Vec::new();
                    for &(_, e) in &adj[bv] {
                        if used[e] {
                            continue;
                        }
                        let (end, len) = walk_path(&adj, &degree, &mut used, bv, e);
                        if end != bv {
                            return Ok(unclassified(
                                "two holes but no theta/wedge decomposition".into(),
                            ));
                        }
                        lens.push(len as u64);
                    }
                    lens.sort_unstable();
                    (None, Some(lens[1]), Some(lens[0]), Some(0))
                }
                _ => {
                    return Ok(unclassified(
                        "two holes but no theta/wedge decomposition".into(),
                    ))
                }
            }
        }
        _ => unreachable!("betti > 2 handled above"),
    };

    Ok(Classification {
        family,
        diagram_type: Some(betti as u8),
        m,
        k,
        k1,
        k2,
        x,
        cycle_edges,
        cycle_edge_parity: parity,
        diagnostic: None,
    })
}

/// Predicted signed second Jones coefficient of a positive non-split
/// diagram: `(−1)^(n−1) · (s − 1 − #pairs of Seifert circles sharing a
/// crossing)`.
pub fn second_coeff_predicted(d: &Diagram) -> Result<i64, StateGraphError> {
    require_positive_connected(d)?;
    let g = build_a_state_graph(d);
    let r = reduce_graph(&g);
    let pairs = r.edges.iter().filter(|e| e.u != e.v).count() as i64;
    let s = d.seifert_circles() as i64;
    let sign = if d.components() % 2 == 1 { 1 } else { -1 };
    Ok(sign * (s - 1 - pairs))
}

/// Burdening number from degree data: `4 min deg V − c + k − 2` for one
/// hole, `4 min deg V − c + (k₁ + k₂ − x − 4)` for two.  Cross-validates
/// the surplus count in [`Classification::m`].
pub fn burdening_number_formula(
    cls: &Classification,
    st: &DiagramStats,
    min_v: Ratio<i64>,
) -> Result<i64, StateGraphError> {
    let four_min = min_v * Ratio::from_integer(4);
    if !four_min.is_integer() {
        return Err(StateGraphError::Unclassified {
            reason: format!("4·min deg V = {four_min} is not an integer"),
        });
    }
    let c = st.crossings as i64;
    match cls.diagram_type {
        Some(1) => {
            let k = cls.k.expect("type 1 carries k") as i64;
            Ok(four_min.to_integer() - c + k - 2)
        }
        Some(2) => {
            let k1 = cls.k1.expect("type 2 carries k1") as i64;
            let k2 = cls.k2.expect("type 2 carries k2") as i64;
            let x = cls.x.expect("type 2 carries x") as i64;
            Ok(four_min.to_integer() - c + (k1 + k2 - x - 4))
        }
        got => Err(StateGraphError::WrongType { expected: "1 or 2", got }),
    }
}

/// Predicted leading Conway coefficient: `k/2` for one hole;
/// `(k₁k₂ − x²)/4` for two holes, `+1/4` more in the Oddly case.
pub fn predicted_lead_conway(cls: &Classification) -> Result<Ratio<i64>, StateGraphError> {
    match cls.diagram_type {
        Some(1) => {
            let k = cls.k.expect("type 1 carries k") as i64;
            Ok(Ratio::new(k, 2))
        }
        Some(2) => {
            let k1 = cls.k1.expect("type 2 carries k1") as i64;
            let k2 = cls.k2.expect("type 2 carries k2") as i64;
            let x = cls.x.expect("type 2 carries x") as i64;
            let odd = matches!(cls.family, Family::OddlyBalanced | Family::OddlyBurdened);
            Ok(Ratio::new(k1 * k2 - x * x + i64::from(odd), 4))
        }
        got => Err(StateGraphError::WrongType { expected: "1 or 2", got }),
    }
}

/// Upper bound on the number of B-circles: `n + 2m`, or `n + 2(m + 1)` for
/// the Oddly families.  For Balanced diagrams (m = 0) the bound is attained
/// with equality, `B = n`.
pub fn b_circle_bound(cls: &Classification, n: usize) -> Result<usize, StateGraphError> {
    let m = cls.m as usize;
    match cls.family {
        Family::Balanced | Family::Burdened => Ok(n + 2 * m),
        Family::OddlyBalanced | Family::OddlyBurdened => Ok(n + 2 * (m + 1)),
        Family::Unclassified => Err(StateGraphError::Unclassified {
            reason: cls.diagnostic.clone().unwrap_or_else(|| "no classification".into()),
        }),
    }
}

/// Witness data for a clasp move: a path segment `(v₁, v₂, v₃)` of a cycle
/// in the reduced graph such that cutting edges `(v₁,v₂)` and `(v₂,v₃)`
/// disconnects it with the `v₂`-side component a tree.
pub type ClaspWitness = (usize, usize, usize);

struct ClaspContext {
    graph: StateGraph,
    reduced: ReducedGraph,
}

/// Claspable preconditions shared by the witness search and the move:
/// reduced positive non-split diagram with exact Balanced multiplicities.
fn clasp_context(d: &Diagram) -> Option<ClaspContext> {
    if d.negative_crossings() > 0 || d.is_split() {
        return None;
    }
    if (0..d.crossings()).any(|x| d.is_nugatory(x)) {
        return None;
    }
    let graph = build_a_state_graph(d);
    let reduced = reduce_graph(&graph);
    let exact = reduced.edges.iter().all(|e| {
        e.multiplicity
            == match e.role {
                EdgeRole::Cut => 2,
                EdgeRole::Cycle => 1,
            }
    });
    if !exact {
        return None;
    }
    Some(ClaspContext { graph, reduced })
}

/// Whether `(v1, v2, v3)` satisfies the witness clause in `r`: both edges
/// are cycle edges, removing them disconnects the graph, and the component
/// containing `v2` is a tree.
fn witness_valid(r: &ReducedGraph, (v1, v2, v3): ClaspWitness) -> bool {
    if v1 == v2 || v2 == v3 || v1 == v3 {
        return false;
    }
    let edge = |a: usize, b: usize| {
        r.edges
            .iter()
            .position(|e| (e.u, e.v) == (a.min(b), a.max(b)))
    };
    let (Some(e1), Some(e2)) = (edge(v1, v2), edge(v2, v3)) else {
        return false;
    };
    if r.edges[e1].role != EdgeRole::Cycle || r.edges[e2].role != EdgeRole::Cycle {
        return false;
    }
    let mut uf = UnionFind::new(r.vertices);
    for (i, e) in r.edges.iter().enumerate() {
        if i != e1 && i != e2 {
            uf.union(e.u, e.v);
        }
    }
    if uf.class_count() < 2 {
        return false;
    }
    let side = uf.find(v2);
    let side_vertices = (0..r.vertices).filter(|&v| uf.find(v) == side).count();
    let side_edges = r
        .edges
        .iter()
        .enumerate()
        .filter(|&(i, e)| i != e1 && i != e2 && uf.find(e.u) == side)
        .count();
    side_edges + 1 == side_vertices
}

/// Search for the lexicographically smallest clasp witness, or `None` when
/// the diagram is not claspable.
pub fn claspable(d: &Diagram) -> Option<ClaspWitness> {
    let ctx = clasp_context(d)?;
    let r = &ctx.reduced;
    for v1 in 0..r.vertices {
        for v2 in 0..r.vertices {
            for v3 in 0..r.vertices {
                if witness_valid(r, (v1, v2, v3)) {
                    return Some((v1, v2, v3));
                }
            }
        }
    }
    None
}

/// Perform a clasp move at the given witness: interlock an arc of circle
/// `v₁` with an arc of circle `v₃` by two positive crossings.  In the
/// A-state graph all edges at `v₃` transfer to the merged circle and a
/// doubled `(v₁, v₃)` edge appears; the component count, A-circle count and
/// B-circle count are preserved.
pub fn clasp_move(d: &Diagram, witness: ClaspWitness) -> Result<Diagram, StateGraphError> {
    let ctx = clasp_context(d).ok_or_else(|| StateGraphError::InvalidWitness {
        reason: "diagram is not claspable (must be reduced, positive, non-split, \
                 with exact Balanced multiplicities)"
            .into(),
    })?;
    if !witness_valid(&ctx.reduced, witness) {
        return Err(StateGraphError::InvalidWitness {
            reason: format!("({}, {}, {}) is not a valid witness", witness.0, witness.1, witness.2),
        });
    }
    let (v1, _, v3) = witness;
    let (a, b, n) = (d.a_state_circles(), d.b_state_circles(), d.components());
    let arcs_on = |circle: usize| -> Vec<Dart> {
        (0..d.darts())
            .filter(|&t| d.is_out(t) && ctx.graph.circle_of(t) == circle)
            .collect()
    };
    for &du in &arcs_on(v1) {
        for &dw in &arcs_on(v3) {
            for (first, second) in [(du, dw), (dw, du)] {
                let Ok(cand) = d.insert_clasp(first, second) else {
                    continue;
                };
                if cand.a_state_circles() == a
                    && cand.b_state_circles() == b
                    && cand.components() == n
                {
                    return Ok(cand);
                }
            }
        }
    }
    Err(StateGraphError::InvalidWitness {
        reason: format!(
            "no arcs of circles {} and {} cobound a face; the witness cannot be clasped \
             in this embedding",
            v1, v3
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::generate::{closed_braid, pretzel, torus_2_2p};
    use crate::diagram::testutil::trefoil;
    use crate::statesum::jones;
    use num_bigint::BigInt;

    #[test]
    fn trefoil_graph_and_classification() {
        let t = trefoil();
        let g = build_a_state_graph(&t);
        assert_eq!(g.vertices(), 2);
        assert_eq!(g.edges(), &[(0, 1), (0, 1), (0, 1)]);
        assert!(g.is_positive_diagram());
        let r = reduce_graph(&g);
        assert_eq!(r.edges.len(), 1);
        assert_eq!(r.edges[0].multiplicity, 3);
        assert_eq!(r.edges[0].role, EdgeRole::Cut);
        assert_eq!(r.betti(), Ok(0));
        let cls = classify(&t).unwrap();
        assert_eq!(cls.family, Family::Burdened);
        assert_eq!(cls.diagram_type, Some(0));
        assert_eq!(cls.m, 1);
        assert_eq!(cls.cycle_edge_parity, Parity::Even);
        assert_eq!(b_circle_bound(&cls, 1), Ok(3));
        assert_eq!(t.b_state_circles(), 3);
    }

    #[test]
    fn unknot_is_balanced_type_0() {
        let cls = classify(&Diagram::unknot()).unwrap();
        assert_eq!(cls.family, Family::Balanced);
        assert_eq!(cls.diagram_type, Some(0));
        assert_eq!(cls.m, 0);
    }

    #[test]
    fn chain_links_are_balanced_type_1() {
        // p = 1 is the Hopf link: one doubled edge, hence a tree.
        let hopf = classify(&torus_2_2p(1)).unwrap();
        assert_eq!(hopf.family, Family::Balanced);
        assert_eq!(hopf.diagram_type, Some(0));
        for p in 2..=5 {
            let d = torus_2_2p(p);
            let cls = classify(&d).unwrap();
            assert_eq!(cls.family, Family::Balanced, "p={p}");
            assert_eq!(cls.diagram_type, Some(1), "p={p}");
            assert_eq!(cls.k, Some(2 * p as u64), "p={p}");
            assert_eq!(cls.m, 0);
            assert_eq!(cls.cycle_edge_parity, Parity::Even);
            assert_eq!(predicted_lead_conway(&cls).unwrap(), Ratio::from_integer(p as i64));
            // B = n for Balanced diagrams.
            assert_eq!(d.b_state_circles(), d.components(), "p={p}");
            assert_eq!(b_circle_bound(&cls, d.components()), Ok(d.components()));
        }
    }

    #[test]
    fn even_pretzel_is_balanced_type_2_theta() {
        let d = pretzel(-2, -2, -2).unwrap();
        let cls = classify(&d).unwrap();
        assert_eq!(cls.family, Family::Balanced);
        assert_eq!(cls.diagram_type, Some(2));
        assert_eq!((cls.k1, cls.k2, cls.x), (Some(4), Some(4), Some(2)));
        assert_eq!(cls.m, 0);
        assert_eq!(cls.cycle_edges, 6);
        assert_eq!(predicted_lead_conway(&cls).unwrap(), Ratio::from_integer(3));
        assert_eq!(d.b_state_circles(), d.components());
        let r = reduce_graph(&build_a_state_graph(&d));
        assert_eq!(r.betti(), Ok(2));
    }

    #[test]
    fn odd_pretzel_is_oddly_balanced_type_2() {
        let d = pretzel(-1, -3, -3).unwrap();
        let cls = classify(&d).unwrap();
        assert_eq!(cls.family, Family::OddlyBalanced);
        assert_eq!(cls.diagram_type, Some(2));
        assert_eq!((cls.k1, cls.k2, cls.x), (Some(4), Some(4), Some(1)));
        assert_eq!(cls.cycle_edges, 7);
        assert_eq!(cls.cycle_edge_parity, Parity::Odd);
        assert_eq!(predicted_lead_conway(&cls).unwrap(), Ratio::from_integer(4));
        // B = n ± 2 or B = n for Oddly Balanced; here n = 1 and B = 3.
        assert_eq!(d.components(), 1);
        assert_eq!(d.b_state_circles(), 3);
        assert_eq!(b_circle_bound(&cls, 1), Ok(3));
    }

    #[test]
    fn stoimenow_prediction_matches_jones() {
        for (d, n) in [
            (trefoil(), 1usize),
            (torus_2_2p(2), 2),
            (torus_2_2p(3), 2),
            (pretzel(-2, -2, -2).unwrap(), 3),
            (pretzel(-1, -3, -3).unwrap(), 1),
            (closed_braid(2, &[1, 1, 1, 1, 1]).unwrap(), 1),
        ] {
            assert_eq!(d.components(), n);
            let predicted = second_coeff_predicted(&d).unwrap();
            let v = jones(&d, None).unwrap();
            let info = v.degree_info().expect("nonzero Jones polynomial");
            assert_eq!(
                BigInt::from(predicted),
                info.second_coeff,
                "second coefficient mismatch"
            );
        }
    }

    #[test]
    fn doubled_chain_crossing_is_burdened_type_1() {
        let base = torus_2_2p(2);
        let d = base.double_crossing(0).unwrap();
        assert_eq!(d.crossings(), 5);
        assert_eq!(d.a_state_circles(), 4);
        let cls = classify(&d).unwrap();
        assert_eq!(cls.family, Family::Burdened);
        assert_eq!(cls.diagram_type, Some(1));
        assert_eq!(cls.k, Some(4));
        assert_eq!(cls.m, 1);
        // Cross-check m against the closed form in min deg V.
        let v = jones(&d, None).unwrap();
        let min_v = v.degree_info().unwrap().min_deg;
        let st = d.stats();
        assert_eq!(min_v, Ratio::from_integer(1));
        assert_eq!(burdening_number_formula(&cls, &st, min_v), Ok(1));
    }

    #[test]
    fn doubled_pretzel_crossing_is_burdened_type_2() {
        let base = pretzel(-2, -2, -2).unwrap();
        let d = base.double_crossing(0).unwrap();
        assert_eq!(d.crossings(), 7);
        assert_eq!(d.a_state_circles(), 5);
        let cls = classify(&d).unwrap();
        assert_eq!(cls.family, Family::Burdened);
        assert_eq!(cls.diagram_type, Some(2));
        assert_eq!((cls.k1, cls.k2, cls.x), (Some(4), Some(4), Some(2)));
        assert_eq!(cls.m, 1);
        let v = jones(&d, None).unwrap();
        let min_v = v.degree_info().unwrap().min_deg;
        assert_eq!(min_v, Ratio::new(3, 2));
        assert_eq!(burdening_number_formula(&cls, &d.stats(), min_v), Ok(1));
    }

    #[test]
    fn claspable_witnesses() {
        // Type 0: no cycle, no witness.
        assert_eq!(claspable(&trefoil()), None);
        // Balanced type 1 chains have witnesses; so does the type 2 pretzel.
        assert!(claspable(&torus_2_2p(2)).is_some());
        assert!(claspable(&torus_2_2p(3)).is_some());
        assert!(claspable(&pretzel(-2, -2, -2).unwrap()).is_some());
        // Burdened (m > 0) diagrams violate clause (b).
        let burdened = torus_2_2p(2).double_crossing(0).unwrap();
        assert_eq!(claspable(&burdened), None);
    }

    #[test]
    fn clasp_move_on_4_balanced_gives_type_0() {
        let d = torus_2_2p(2);
        let w = claspable(&d).expect("4-Balanced diagrams are claspable");
        let d2 = clasp_move(&d, w).unwrap();
        assert_eq!(d2.crossings(), d.crossings() + 2);
        assert_eq!(d2.a_state_circles(), d.a_state_circles());
        assert_eq!(d2.b_state_circles(), d.b_state_circles());
        assert_eq!(d2.components(), d.components());
        let cls = classify(&d2).unwrap();
        assert_eq!(cls.family, Family::Balanced);
        assert_eq!(cls.diagram_type, Some(0));
    }

    #[test]
    fn clasp_move_on_6_balanced_gives_4_balanced() {
        let d = torus_2_2p(3);
        let w = claspable(&d).expect("6-Balanced diagrams are claspable");
        let d2 = clasp_move(&d, w).unwrap();
        let cls = classify(&d2).unwrap();
        assert_eq!(cls.family, Family::Balanced);
        assert_eq!(cls.diagram_type, Some(1));
        assert_eq!(cls.k, Some(4));
        assert_eq!(d2.b_state_circles(), d.b_state_circles());
        assert_eq!(d2.components(), d.components());
        // Leaves stay leaves and a second clasp finishes the job.
        let w2 = claspable(&d2).expect("4-Balanced diagrams are claspable");
        let d3 = clasp_move(&d2, w2).unwrap();
        let cls3 = classify(&d3).unwrap();
        assert_eq!(cls3.diagram_type, Some(0));
        assert_eq!(d3.b_state_circles(), d.b_state_circles());
    }

    #[test]
    fn clasp_move_rejects_bad_witness() {
        let d = torus_2_2p(2);
        let err = clasp_move(&d, (0, 0, 0)).unwrap_err();
        assert!(matches!(err, StateGraphError::InvalidWitness { .. }));
        let err = clasp_move(&trefoil(), (0, 1, 0)).unwrap_err();
        assert!(matches!(err, StateGraphError::InvalidWitness { .. }));
    }

    #[test]
    fn formula_errors_on_type_0() {
        let cls = classify(&trefoil()).unwrap();
        assert!(matches!(
            predicted_lead_conway(&cls),
            Err(StateGraphError::WrongType { .. })
        ));
        let st = trefoil().stats();
        assert!(matches!(
            burdening_number_formula(&cls, &st, Ratio::from_integer(1)),
            Err(StateGraphError::WrongType { .. })
        ));
    }

    #[test]
    fn disconnected_betti_errors() {
        let mut d = torus_2_2p(2);
        d.add_free_loop();
        let r = reduce_graph(&build_a_state_graph(&d));
        assert_eq!(r.vertices, 5);
        assert_eq!(r.betti(), Err(StateGraphError::Disconnected));
        assert!(matches!(classify(&d), Err(StateGraphError::Split)));
    }

    #[test]
    fn kink_is_unclassified() {
        // A positive kink: 1 crossing joining 2 A-circles, so its reduced
        // graph has a multiplicity-1 cut edge — a taxonomy violation.
        let d = crate::diagram::testutil::kink(crate::diagram::Sign::Positive);
        let cls = classify(&d).unwrap();
        assert_eq!(cls.family, Family::Unclassified);
        assert!(cls.diagnostic.unwrap().contains("cut edge"));
    }

    #[test]
    fn exports_are_stable() {
        let r = reduce_graph(&build_a_state_graph(&trefoil()));
        assert_eq!(
            r.to_dot(),
            "graph reduced_a_state {\n  v0;\n  v1;\n  v0 -- v1 [label=\"x3\", style=dashed];\n}\n"
        );
        assert_eq!(
            r.to_json().to_string(),
            r#"{"edges":[{"multiplicity":3,"role":"cut","u":0,"v":1}],"vertices":2}"#
        );
    }
}
