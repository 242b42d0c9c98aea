//! Skein-tree computation of the HOMFLY and Conway polynomials.
//!
//! Both computations resolve a diagram toward *descending* diagrams.  Fix a
//! basepoint (the smallest outgoing dart) on every strand component and
//! traverse the components in basepoint order; a crossing is *descending*
//! when its first passage in this traversal runs over.  A fully descending
//! diagram is an unlink of its components.  Otherwise the first
//! non-descending crossing (lowest traversal position) is the pivot, and
//! the skein relation
//!
//! ```text
//!     α·P(D₊) − α⁻¹·P(D₋) = z·P(D₀),        P(unknot) = 1
//! ```
//!
//! rewrites the diagram in terms of the crossing switch (which moves the
//! traversal closer to descending) and the oriented smoothing (which drops
//! a crossing): `P₊ = α⁻²P₋ + α⁻¹z·P₀` at a positive pivot and
//! `P₋ = α²P₊ − αz·P₀` at a negative one.  A descending diagram with `k`
//! components evaluates to `((α − α⁻¹)/z)^(k−1)`.
//!
//! The Conway polynomial is computed by the *same tree shape* but directly
//! from its own relation `∇₊ − ∇₋ = z·∇₀` with `∇(unknot) = 1` and
//! `∇ = 0` for every split diagram — deliberately not by specializing the
//! HOMFLY result, so the two routes stay independent checks of each other
//! (`α ↦ 1` in the HOMFLY must reproduce the direct value).
//!
//! There is no memoization; a node budget guards against blowup and a
//! crossing-count limit keeps inputs sane.

use num_bigint::BigInt;
use thiserror::Error;

use crate::diagram::{crossing_of, dart, slot_of, Dart, Diagram, Sign, SmoothMode};
use crate::poly::{LaurentPoly1, LaurentPoly2, Var};

/// Default maximum crossing count for skein computations.
pub const DEFAULT_SKEIN_LIMIT: usize = 20;

/// Default budget of skein-tree nodes.
pub const DEFAULT_NODE_LIMIT: usize = 1 << 22;

/// Resource limits for the skein recursion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkeinOptions {
    /// Reject diagrams with more crossings than this.
    pub crossing_limit: usize,
    /// Abort after expanding this many tree nodes.
    pub node_limit: usize,
}

impl Default for SkeinOptions {
    fn default() -> Self {
        SkeinOptions { crossing_limit: DEFAULT_SKEIN_LIMIT, node_limit: DEFAULT_NODE_LIMIT }
    }
}

/// Errors from skein computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum SkeinError {
    /// The diagram exceeds the configured crossing limit.
    #[error("diagram has {crossings} crossings, above the skein limit {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },
    /// The skein tree exceeded its node budget.
    #[error("skein tree exceeded the node budget of {limit} nodes")]
    NodeBudget { limit: usize },
    /// A leading term was requested of an identically zero polynomial.
    #[error("the Conway polynomial is identically zero (split link)")]
    ZeroPolynomial,
}

/// How a node was reached from its parent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BranchKind {
    /// The input diagram.
    Root,
    /// Pivot crossing switched.
    Switch,
    /// Pivot crossing smoothed (oriented).
    Smooth,
}

impl BranchKind {
    fn as_str(self) -> &'static str {
        match self {
            BranchKind::Root => "root",
            BranchKind::Switch => "switch",
            BranchKind::Smooth => "smooth",
        }
    }
}

/// One node of the skein tree, for tracing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeinTraceNode {
    /// Node id in processing order (root is 0).
    pub id: usize,
    /// Parent node id.
    pub parent: Option<usize>,
    /// Branch that produced this node.
    pub branch: BranchKind,
    /// Tree depth (root is 0).
    pub depth: usize,
    /// Crossings in this node's diagram.
    pub crossings: usize,
    /// Pivot crossing, or `None` at leaves.
    pub pivot: Option<usize>,
}

impl SkeinTraceNode {
    /// JSON form of the trace node.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "parent": self.parent,
            "branch": self.branch.as_str(),
            "depth": self.depth,
            "crossings": self.crossings,
            "pivot": self.pivot,
        })
    }
}

/// First non-descending crossing along the basepoint traversal, if any.
fn find_pivot(d: &Diagram, basepoints: &[Dart]) -> Option<usize> {
    let mut seen = vec![false; d.crossings()];
    for &bp in basepoints {
        let mut cur = bp;
        loop {
            let arrival = d.mate(cur);
            let y = crossing_of(arrival);
            if !seen[y] {
                seen[y] = true;
                if !d.is_over(arrival) {
                    return Some(y);
                }
            }
            cur = d.strand_next(cur);
            if cur == bp {
                break;
            }
        }
    }
    None
}

/// Carry basepoints across a crossing switch: darts of the switched
/// crossing are relabeled by the same slot rotation the switch applies.
fn remap_basepoints(before: &Diagram, x: usize, basepoints: &[Dart]) -> Vec<Dart> {
    let shift = match before.sign(x) {
        Sign::Positive => 3,
        Sign::Negative => 1,
    };
    basepoints
        .iter()
        .map(|&t| if crossing_of(t) == x { dart(x, (slot_of(t) + shift) % 4) } else { t })
        .collect()
}

fn check_size(d: &Diagram, opts: &SkeinOptions) -> Result<(), SkeinError> {
    if d.crossings() > opts.crossing_limit {
        return Err(SkeinError::TooManyCrossings {
            crossings: d.crossings(),
            limit: opts.crossing_limit,
        });
    }
    Ok(())
}

/// `((α − α⁻¹)/z)^n` expanded by the binomial theorem:
/// `Σ_i (−1)^i C(n,i) α^(n−2i) z^(−n)`.
fn delta_power(n: usize) -> LaurentPoly2 {
    let mut p = LaurentPoly2::zero();
    let mut binom = BigInt::from(1);
    for i in 0..=n {
        let coeff = if i % 2 == 0 { binom.clone() } else { -binom.clone() };
        p.add_term(n as i64 - 2 * i as i64, -(n as i64), &coeff);
        binom = binom * (n - i) / (i + 1);
    }
    p
}

struct Node {
    d: Diagram,
    basepoints: Vec<Dart>,
    /// Accumulated scalar monomial: `sign · α^a_shift · z^z_shift`.
    a_shift: i64,
    z_shift: i64,
    negate: bool,
    parent: Option<usize>,
    branch: BranchKind,
    depth: usize,
}

fn root_node(d: &Diagram) -> Node {
    Node {
        basepoints: d.component_reps(),
        d: d.clone(),
        a_shift: 0,
        z_shift: 0,
        negate: false,
        parent: None,
        branch: BranchKind::Root,
        depth: 0,
    }
}

fn run_homfly(
    d: &Diagram,
    opts: &SkeinOptions,
    mut trace: Option<&mut Vec<SkeinTraceNode>>,
) -> Result<LaurentPoly2, SkeinError> {
    check_size(d, opts)?;
    let mut acc = LaurentPoly2::zero();
    let mut stack = vec![root_node(d)];
    let mut expanded = 0usize;
    let mut next_id = 0usize;
    while let Some(node) = stack.pop() {
        expanded += 1;
        if expanded > opts.node_limit {
            return Err(SkeinError::NodeBudget { limit: opts.node_limit });
        }
        let id = next_id;
        next_id += 1;
        let pivot = find_pivot(&node.d, &node.basepoints);
        if let Some(t) = trace.as_deref_mut() {
            t.push(SkeinTraceNode {
                id,
                parent: node.parent,
                branch: node.branch,
                depth: node.depth,
                crossings: node.d.crossings(),
                pivot,
            });
        }
        let Some(x) = pivot else {
            let mut leaf = delta_power(node.d.components() - 1);
            let sign = if node.negate { BigInt::from(-1) } else { BigInt::from(1) };
            leaf.mul_monomial(node.a_shift, node.z_shift, &sign);
            acc = acc.add(&leaf);
            continue;
        };
        let switched = node.d.switch_crossing(x).expect("pivot index is valid");
        let smoothed = node
            .d
            .smooth_crossing(x, SmoothMode::Oriented)
            .expect("oriented smoothing of a valid crossing");
        // Positive pivot: P = α⁻²·P(switch) + α⁻¹z·P(smooth);
        // negative pivot: P = α²·P(switch) − αz·P(smooth).
        let (a_sw, a_sm, negate_sm) = match node.d.sign(x) {
            Sign::Positive => (-2, -1, false),
            Sign::Negative => (2, 1, true),
        };
        stack.push(Node {
            basepoints: smoothed.component_reps(),
            d: smoothed,
            a_shift: node.a_shift + a_sm,
            z_shift: node.z_shift + 1,
            negate: node.negate ^ negate_sm,
            parent: Some(id),
            branch: BranchKind::Smooth,
            depth: node.depth + 1,
        });
        stack.push(Node {
            basepoints: remap_basepoints(&node.d, x, &node.basepoints),
            d: switched,
            a_shift: node.a_shift + a_sw,
            z_shift: node.z_shift,
            negate: node.negate,
            parent: Some(id),
            branch: BranchKind::Switch,
            depth: node.depth + 1,
        });
    }
    Ok(acc)
}

fn run_conway(
    d: &Diagram,
    opts: &SkeinOptions,
    mut trace: Option<&mut Vec<SkeinTraceNode>>,
) -> Result<LaurentPoly1, SkeinError> {
    check_size(d, opts)?;
    let mut acc = LaurentPoly1::zero(Var::Z);
    let mut stack = vec![root_node(d)];
    let mut expanded = 0usize;
    let mut next_id = 0usize;
    while let Some(node) = stack.pop() {
        expanded += 1;
        if expanded > opts.node_limit {
            return Err(SkeinError::NodeBudget { limit: opts.node_limit });
        }
        let id = next_id;
        next_id += 1;
        // Split diagrams contribute nothing: ∇ of a split link is 0.
        if node.d.is_split() {
            if let Some(t) = trace.as_deref_mut() {
                t.push(SkeinTraceNode {
                    id,
                    parent: node.parent,
                    branch: node.branch,
                    depth: node.depth,
                    crossings: node.d.crossings(),
                    pivot: None,
                });
            }
            continue;
        }
        let pivot = find_pivot(&node.d, &node.basepoints);
        if let Some(t) = trace.as_deref_mut() {
            t.push(SkeinTraceNode {
                id,
                parent: node.parent,
                branch: node.branch,
                depth: node.depth,
                crossings: node.d.crossings(),
                pivot,
            });
        }
        let Some(x) = pivot else {
            // Descending: an unlink, so only a single component survives.
            if node.d.components() == 1 {
                let one = if node.negate { BigInt::from(-1) } else { BigInt::from(1) };
                acc.add_term_units(4 * node.z_shift, &one);
            }
            continue;
        };
        let switched = node.d.switch_crossing(x).expect("pivot index is valid");
        let smoothed = node
            .d
            .smooth_crossing(x, SmoothMode::Oriented)
            .expect("oriented smoothing of a valid crossing");
        // ∇₊ = ∇₋ + z∇₀ at a positive pivot; ∇₋ = ∇₊ − z∇₀ at a negative.
        let negate_sm = node.d.sign(x) == Sign::Negative;
        stack.push(Node {
            basepoints: smoothed.component_reps(),
            d: smoothed,
            a_shift: 0,
            z_shift: node.z_shift + 1,
            negate: node.negate ^ negate_sm,
            parent: Some(id),
            branch: BranchKind::Smooth,
            depth: node.depth + 1,
        });
        stack.push(Node {
            basepoints: remap_basepoints(&node.d, x, &node.basepoints),
            d: switched,
            a_shift: 0,
            z_shift: node.z_shift,
            negate: node.negate,
            parent: Some(id),
            branch: BranchKind::Switch,
            depth: node.depth + 1,
        });
    }
    Ok(acc)
}

/// HOMFLY polynomial under `α·P₊ − α⁻¹·P₋ = z·P₀`, `P(unknot) = 1`.
pub fn homfly(d: &Diagram, opts: Option<&SkeinOptions>) -> Result<LaurentPoly2, SkeinError> {
    run_homfly(d, opts.unwrap_or(&SkeinOptions::default()), None)
}

/// [`homfly`] with a skein-tree trace appended to `trace`.
pub fn homfly_traced(
    d: &Diagram,
    opts: Option<&SkeinOptions>,
    trace: &mut Vec<SkeinTraceNode>,
) -> Result<LaurentPoly2, SkeinError> {
    run_homfly(d, opts.unwrap_or(&SkeinOptions::default()), Some(trace))
}

/// Conway polynomial by direct skein recursion in `z`.
pub fn conway(d: &Diagram, opts: Option<&SkeinOptions>) -> Result<LaurentPoly1, SkeinError> {
    run_conway(d, opts.unwrap_or(&SkeinOptions::default()), None)
}

/// [`conway`] with a skein-tree trace appended to `trace`.
pub fn conway_traced(
    d: &Diagram,
    opts: Option<&SkeinOptions>,
    trace: &mut Vec<SkeinTraceNode>,
) -> Result<LaurentPoly1, SkeinError> {
    run_conway(d, opts.unwrap_or(&SkeinOptions::default()), Some(trace))
}

/// Leading term `(degree, coefficient)` of the Conway polynomial.
pub fn lead_conway(d: &Diagram, opts: Option<&SkeinOptions>) -> Result<(i64, BigInt), SkeinError> {
    let nabla = conway(d, opts)?;
    let info = nabla.degree_info().ok_or(SkeinError::ZeroPolynomial)?;
    debug_assert!(info.max_deg.is_integer(), "Conway degrees are integral");
    Ok((info.max_deg.to_integer(), info.lead_coeff))
}
