//! Oriented link diagrams as planar combinatorial maps.
//!
//! A diagram with `c` crossings is stored as `4c` *darts* (half-edges), four
//! per crossing, plus a count of crossingless unknot components ("free
//! loops").  Dart `4x + s` is the dart of crossing `x` in *slot* `s`, where
//! slots run **counterclockwise** around the crossing and encode strand roles:
//!
//! * slot 0 — over-strand outgoing, slot 2 — over-strand incoming;
//! * positive crossing: slot 1 — under outgoing, slot 3 — under incoming;
//! * negative crossing: slot 1 — under incoming, slot 3 — under outgoing.
//!
//! Equivalently, a crossing is positive exactly when the under-out dart is
//! the counterclockwise successor of the over-out dart (the under-strand
//! crosses right-to-left as seen along the over-strand).  `mate` pairs each
//! outgoing dart with the incoming dart at the far end of its arc, so the
//! diagram is a 4-valent map with rotation system given by slot order;
//! embeddability in the sphere (`faces = crossings + 2` per connected
//! component) is part of validation.
//!
//! Smoothings are slot pairings independent of sign: the A-smoothing joins
//! slots `(0,3)` and `(1,2)`, the B-smoothing joins `(0,1)` and `(2,3)`; the
//! orientation-preserving smoothing is A at positive and B at negative
//! crossings.
//!
//! Submodules add codecs and surgery: [`pd`] and [`dt`] parse/serialize PD
//! and DT codes, [`ops`] implements smoothing/switching/connected
//! sum/loop-insertion surgery, [`generate`] builds standard families, and
//! [`iso`] provides canonical forms and isomorphism testing.

pub mod dt;
pub mod generate;
pub mod iso;
pub mod ops;
pub mod pd;

use crate::unionfind::UnionFind;
use thiserror::Error;

/// Index of a half-edge: `4 * crossing + slot`.
pub type Dart = usize;

/// Errors for diagram construction, codecs and surgery.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    /// The mate array is not a fixed-point-free involution of the darts.
    #[error("mate array is not a fixed-point-free involution at dart {dart}")]
    BadMate { dart: Dart },
    /// An arc connects two outgoing or two incoming darts.
    #[error("arc at dart {dart} joins two darts of the same direction")]
    OrientationClash { dart: Dart },
    /// The rotation system does not embed in the sphere.
    #[error("diagram component is not planar: {faces} faces for {crossings} crossings (expected {})", crossings + 2)]
    NonPlanar { crossings: usize, faces: usize },
    /// Free loops may only accompany an otherwise empty diagram here.
    #[error("input diagram is split (disconnected shadow)")]
    SplitInput,
    /// Empty input where a diagram was required.
    #[error("empty input: no crossings or loops")]
    EmptyInput,
    /// Malformed PD text.
    #[error("PD syntax error: {0}")]
    PdSyntax(String),
    /// A PD arc label must appear exactly twice.
    #[error("PD label {label} appears {count} times (expected 2)")]
    PdLabelCount { label: i64, count: usize },
    /// PD orientation constraints are unsatisfiable.
    #[error("PD code admits no consistent strand orientation")]
    PdInconsistent,
    /// Malformed DT text.
    #[error("DT syntax error: {0}")]
    DtSyntax(String),
    /// No planar realization of the DT code exists.
    #[error("DT code has no planar realization")]
    DtUnrealizable,
    /// Crossing count exceeds a configured cap.
    #[error("{what} supports at most {cap} crossings, got {count} (raise the limit to override)")]
    TooLarge { what: &'static str, count: usize, cap: usize },
    /// DT codes only describe knots.
    #[error("diagram has {components} components; DT codes require a knot")]
    NotAKnot { components: usize },
    /// Crossing index out of range.
    #[error("crossing {crossing} out of range (diagram has {crossings})")]
    CrossingOutOfRange { crossing: usize, crossings: usize },
    /// Arc (dart) index invalid for this diagram.
    #[error("dart {dart} is not an outgoing dart of this diagram")]
    BadArc { dart: Dart },
    /// A clasp/loop surgery witness does not satisfy its contract.
    #[error("invalid surgery witness: {0}")]
    InvalidWitness(String),
    /// The diagram cannot be expressed in the requested format.
    #[error("diagram not representable in {format}: {reason}")]
    Unrepresentable { format: &'static str, reason: &'static str },
    /// A precondition on the diagram's structure failed.
    #[error("{0}")]
    Precondition(String),
}

/// Crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    /// Under-strand crosses right-to-left seen along the over-strand.
    Positive,
    /// Mirror of positive.
    Negative,
}

impl Sign {
    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    /// The opposite sign.
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// How a crossing is smoothed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothMode {
    /// Kauffman A-smoothing: join slot pairs `(0,3)` and `(1,2)`.
    A,
    /// Kauffman B-smoothing: join slot pairs `(0,1)` and `(2,3)`.
    B,
    /// The orientation-preserving smoothing (A at positive, B at negative).
    Oriented,
}

/// Summary counts for a diagram, as reported by [`Diagram::stats`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramStats {
    /// Number of crossings `c`.
    pub crossings: usize,
    /// Number of negative crossings `q`.
    pub negative_crossings: usize,
    /// Writhe (signed crossing sum).
    pub writhe: i64,
    /// Number of link components `n` (including free loops).
    pub components: usize,
    /// Seifert circle count `s` (oriented smoothing everywhere).
    pub seifert_circles: usize,
    /// A-state circle count (A-smoothing everywhere).
    pub a_state_circles: usize,
    /// B-state circle count (B-smoothing everywhere).
    pub b_state_circles: usize,
    /// Face count of the underlying planar map.
    pub faces: usize,
    /// Euler characteristic `s - c` of the Seifert surface from this diagram.
    pub chi: i64,
    /// Whether the shadow is connected (free loops count as components).
    pub connected: bool,
}

impl DiagramStats {
    /// JSON form of the summary counts.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "crossings": self.crossings,
            "negative_crossings": self.negative_crossings,
            "writhe": self.writhe,
            "components": self.components,
            "seifert_circles": self.seifert_circles,
            "a_state_circles": self.a_state_circles,
            "b_state_circles": self.b_state_circles,
            "faces": self.faces,
            "chi": self.chi,
            "connected": self.connected,
        })
    }
}

/// An oriented link diagram as a signed planar 4-valent map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    pub(crate) signs: Vec<Sign>,
    pub(crate) mate: Vec<Dart>,
    pub(crate) free_loops: usize,
}

/// Dart of crossing `x` in slot `s`.
pub fn dart(x: usize, s: usize) -> Dart {
    4 * x + s
}

/// Crossing of a dart.
pub fn crossing_of(d: Dart) -> usize {
    d / 4
}

/// Slot of a dart (0..4, counterclockwise).
pub fn slot_of(d: Dart) -> usize {
    d % 4
}

/// Counterclockwise-next dart at the same crossing.
pub fn rot_ccw(d: Dart) -> Dart {
    4 * (d / 4) + (d % 4 + 1) % 4
}

/// The dart across the crossing on the same strand (slot `s <-> s+2`).
pub fn opposite(d: Dart) -> Dart {
    d ^ 2
}

impl Diagram {
    /// Build a diagram from parts and validate it.
    pub fn from_parts(signs: Vec<Sign>, mate: Vec<Dart>, free_loops: usize) -> Result<Self, DiagramError> {
        let d = Diagram { signs, mate, free_loops };
        d.validate()?;
        Ok(d)
    }

    /// Build without validation (internal surgeries validate afterwards).
    pub(crate) fn from_parts_unchecked(signs: Vec<Sign>, mate: Vec<Dart>, free_loops: usize) -> Self {
        Diagram { signs, mate, free_loops }
    }

    /// The crossingless unknot.
    pub fn unknot() -> Self {
        Diagram { signs: Vec::new(), mate: Vec::new(), free_loops: 1 }
    }

    /// Number of crossings.
    pub fn crossings(&self) -> usize {
        self.signs.len()
    }

    /// Number of darts (`4 * crossings`).
    pub fn darts(&self) -> usize {
        self.mate.len()
    }

    /// Crossingless unknot components.
    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    /// Add a crossing-free circle component (makes the diagram split).
    pub fn add_free_loop(&mut self) {
        self.free_loops += 1;
    }

    /// Sign of crossing `x`.
    pub fn sign(&self, x: usize) -> Sign {
        self.signs[x]
    }

    /// All crossing signs.
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Mate of a dart (the far end of its arc).
    pub fn mate(&self, d: Dart) -> Dart {
        self.mate[d]
    }

    /// Whether dart `d` points out of its crossing.
    pub fn is_out(&self, d: Dart) -> bool {
        match slot_of(d) {
            0 => true,
            2 => false,
            1 => self.signs[crossing_of(d)] == Sign::Positive,
            3 => self.signs[crossing_of(d)] == Sign::Negative,
            _ => unreachable!(),
        }
    }

    /// Whether dart `d` lies on the over-strand of its crossing.
    pub fn is_over(&self, d: Dart) -> bool {
        slot_of(d) % 2 == 0
    }

    /// The under-out slot of a crossing with the given sign.
    pub fn under_out_slot(sign: Sign) -> usize {
        match sign {
            Sign::Positive => 1,
            Sign::Negative => 3,
        }
    }

    /// Outgoing dart that continues the strand after incoming dart `d` passes
    /// through its crossing.
    pub fn strand_out_after(&self, d: Dart) -> Dart {
        debug_assert!(!self.is_out(d));
        opposite(d)
    }

    /// Next outgoing dart along the strand: cross the arc, pass the crossing.
    pub fn strand_next(&self, out_dart: Dart) -> Dart {
        debug_assert!(self.is_out(out_dart));
        opposite(self.mate[out_dart])
    }

    /// Previous outgoing dart along the strand.
    pub fn strand_prev(&self, out_dart: Dart) -> Dart {
        debug_assert!(self.is_out(out_dart));
        self.mate[opposite(out_dart)]
    }

    /// Validate structural invariants: mate involution, arc orientation,
    /// sphericality of every shadow component.
    pub fn validate(&self) -> Result<(), DiagramError> {
        let nd = self.darts();
        if nd != 4 * self.crossings() {
            return Err(DiagramError::BadMate { dart: nd });
        }
        for d in 0..nd {
            let m = self.mate[d];
            if m >= nd || m == d || self.mate[m] != d {
                return Err(DiagramError::BadMate { dart: d });
            }
            if self.is_out(d) == self.is_out(m) {
                return Err(DiagramError::OrientationClash { dart: d });
            }
        }
        // Genus check per shadow component: faces = crossings + 2.
        let comp = self.shadow_components();
        let mut faces_per = vec![0usize; comp.count];
        for (face_rep, f_darts) in self.face_orbits() {
            let _ = f_darts;
            faces_per[comp.of[face_rep]] += 1;
        }
        let mut crossings_per = vec![0usize; comp.count];
        for x in 0..self.crossings() {
            crossings_per[comp.of[dart(x, 0)]] += 1;
        }
        for i in 0..comp.count {
            if faces_per[i] != crossings_per[i] + 2 {
                return Err(DiagramError::NonPlanar {
                    crossings: crossings_per[i],
                    faces: faces_per[i],
                });
            }
        }
        Ok(())
    }

    /// Face orbits of the map: each orbit is `(smallest dart, darts in orbit
    /// order)` under `d -> rot_ccw(mate(d))`.
    pub fn face_orbits(&self) -> Vec<(Dart, Vec<Dart>)> {
        let nd = self.darts();
        let mut seen = vec![false; nd];
        let mut orbits = Vec::new();
        for d0 in 0..nd {
            if seen[d0] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut d = d0;
            loop {
                seen[d] = true;
                orbit.push(d);
                d = rot_ccw(self.mate[d]);
                if d == d0 {
                    break;
                }
            }
            orbits.push((d0, orbit));
        }
        orbits
    }

    /// Number of faces of the map (free loops each bound two faces but are
    /// not counted here; this is the 4-valent map's face count).
    pub fn face_count(&self) -> usize {
        self.face_orbits().len()
    }

    pub(crate) fn shadow_components(&self) -> ShadowComponents {
        let nd = self.darts();
        let mut uf = UnionFind::new(nd.max(1));
        for x in 0..self.crossings() {
            for s in 1..4 {
                uf.union(dart(x, 0), dart(x, s));
            }
        }
        for d in 0..nd {
            uf.union(d, self.mate[d]);
        }
        let mut of = vec![usize::MAX; nd.max(1)];
        let mut count = 0;
        for d in 0..nd {
            let r = uf.find(d);
            if of[r] == usize::MAX {
                of[r] = count;
                count += 1;
            }
            of[d] = of[r];
        }
        ShadowComponents { of, count }
    }

    /// Whether the shadow is connected (a single component, counting free
    /// loops as components).
    pub fn is_connected(&self) -> bool {
        self.shadow_components().count + self.free_loops <= 1
    }

    /// Whether the diagram is split: more than one piece in the sphere.
    pub fn is_split(&self) -> bool {
        self.shadow_components().count + self.free_loops > 1
    }

    /// Outgoing darts, ascending.
    pub fn out_darts(&self) -> Vec<Dart> {
        (0..self.darts()).filter(|&d| self.is_out(d)).collect()
    }

    /// Strand cycle through `start` (an outgoing dart): the sequence of
    /// outgoing darts along the component.
    pub fn strand_cycle(&self, start: Dart) -> Vec<Dart> {
        debug_assert!(self.is_out(start));
        let mut cycle = vec![start];
        let mut d = self.strand_next(start);
        while d != start {
            cycle.push(d);
            d = self.strand_next(d);
        }
        cycle
    }

    /// One representative outgoing dart per strand component, each the
    /// smallest dart of its cycle, in ascending order.  Free loops have no
    /// darts and are not represented.
    pub fn component_reps(&self) -> Vec<Dart> {
        let mut seen = vec![false; self.darts()];
        let mut reps = Vec::new();
        for d in 0..self.darts() {
            if seen[d] || !self.is_out(d) {
                continue;
            }
            reps.push(d);
            for e in self.strand_cycle(d) {
                seen[e] = true;
            }
        }
        reps
    }

    /// Number of link components, including free loops.
    pub fn components(&self) -> usize {
        self.component_reps().len() + self.free_loops
    }

    /// Number of negative crossings `q`.
    pub fn negative_crossings(&self) -> usize {
        self.signs.iter().filter(|s| **s == Sign::Negative).count()
    }

    /// Writhe: signed sum over crossings.
    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.value()).sum()
    }

    /// Whether every crossing is positive.
    pub fn is_positive_diagram(&self) -> bool {
        self.signs.iter().all(|s| *s == Sign::Positive)
    }

    /// The two slot pairs joined by a smoothing of crossing `x` in `mode`.
    pub fn smoothing_pairs(&self, x: usize, mode: SmoothMode) -> [(usize, usize); 2] {
        match mode {
            SmoothMode::A => [(0, 3), (1, 2)],
            SmoothMode::B => [(0, 1), (2, 3)],
            SmoothMode::Oriented => match self.signs[x] {
                Sign::Positive => [(0, 3), (1, 2)],
                Sign::Negative => [(0, 1), (2, 3)],
            },
        }
    }

    fn circle_count(&self, mode: SmoothMode) -> usize {
        if self.darts() == 0 {
            return self.free_loops;
        }
        let mut uf = UnionFind::new(self.darts());
        for x in 0..self.crossings() {
            for (a, b) in self.smoothing_pairs(x, mode) {
                uf.union(dart(x, a), dart(x, b));
            }
        }
        for d in 0..self.darts() {
            uf.union(d, self.mate[d]);
        }
        uf.class_count() + self.free_loops
    }

    /// Seifert circle count `s`.
    pub fn seifert_circles(&self) -> usize {
        self.circle_count(SmoothMode::Oriented)
    }

    /// Circle count of the all-A state.
    pub fn a_state_circles(&self) -> usize {
        self.circle_count(SmoothMode::A)
    }

    /// Circle count of the all-B state.
    pub fn b_state_circles(&self) -> usize {
        self.circle_count(SmoothMode::B)
    }

    /// Summary counts.
    pub fn stats(&self) -> DiagramStats {
        DiagramStats {
            crossings: self.crossings(),
            negative_crossings: self.negative_crossings(),
            writhe: self.writhe(),
            components: self.components(),
            seifert_circles: self.seifert_circles(),
            a_state_circles: self.a_state_circles(),
            b_state_circles: self.b_state_circles(),
            faces: self.face_count(),
            chi: self.seifert_circles() as i64 - self.crossings() as i64,
            connected: !self.is_split(),
        }
    }

    /// Whether crossing `x` is nugatory: some circle in the plane meets the
    /// diagram exactly at `x`.  Combinatorially: `x` carries a self-arc, or
    /// removing `x` disconnects the shadow.
    pub fn is_nugatory(&self, x: usize) -> bool {
        for s in 0..4 {
            if crossing_of(self.mate[dart(x, s)]) == x {
                return true;
            }
        }
        let c = self.crossings();
        if c <= 1 {
            return false;
        }
        // Connectivity of the shadow with crossing x deleted.
        let mut uf = UnionFind::new(4 * c);
        for y in 0..c {
            if y == x {
                continue;
            }
            for s in 1..4 {
                uf.union(dart(y, 0), dart(y, s));
            }
        }
        for d in 0..4 * c {
            if crossing_of(d) == x || crossing_of(self.mate[d]) == x {
                continue;
            }
            uf.union(d, self.mate[d]);
        }
        let mut root = None;
        for y in 0..c {
            if y == x {
                continue;
            }
            let r = uf.find(dart(y, 0));
            match root {
                None => root = Some(r),
                Some(r0) => {
                    if r0 != r {
                        return true;
                    }
                }
            }
        }
        false
    }

    /// Whether the diagram is reduced: connected and free of nugatory
    /// crossings.
    pub fn is_reduced(&self) -> bool {
        if self.is_split() {
            return false;
        }
        (0..self.crossings()).all(|x| !self.is_nugatory(x))
    }

    /// JSON form of the raw combinatorial data.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "crossings": self.crossings(),
            "free_loops": self.free_loops,
            "signs": self.signs.iter().map(|s| s.value()).collect::<Vec<_>>(),
            "mate": self.mate,
        })
    }
}

pub(crate) struct ShadowComponents {
    /// Component id per dart.
    pub of: Vec<usize>,
    /// Number of shadow components (not counting free loops).
    pub count: usize,
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::*;

    /// Positive Hopf link as the closure of the 2-braid with 2 positive
    /// crossings: mate pattern verified by hand.
    pub fn hopf_positive() -> Diagram {
        Diagram::from_parts(
            vec![Sign::Positive; 2],
            vec![7, 6, 5, 4, 3, 2, 1, 0],
            0,
        )
        .expect("hopf wiring is planar")
    }

    /// One-crossing unknot diagram with a kink of the given sign.
    pub fn kink(sign: Sign) -> Diagram {
        let mate = match sign {
            Sign::Positive => vec![3, 2, 1, 0],
            Sign::Negative => vec![1, 0, 3, 2],
        };
        Diagram::from_parts(vec![sign], mate, 0).expect("kink wiring is planar")
    }

    /// Standard positive trefoil diagram: a positive loop move applied to
    /// the zero-crossing unknot.
    pub fn trefoil() -> Diagram {
        Diagram::unknot().insert_positive_loop(0).expect("loop move on the unknot is planar")
    }
}
