//! Kauffman bracket state sums.
//!
//! A state assigns every crossing an A- or B-smoothing.  Writing `a(s)` and
//! `b(s)` for the smoothing counts and `|s|` for the number of circles after
//! smoothing, the bracket of a diagram `D` with `c` crossings is
//!
//! ```text
//! <D> = sum over all 2^c states of  A^(a(s)-b(s)) * d^(|s|-1),
//! d = -A^2 - A^(-2).
//! ```
//!
//! The normalized bracket `f(D) = (-A)^(-3w) <D>` (with `w` the writhe) is
//! invariant under Reidemeister moves, and the Jones polynomial is its
//! specialization `V(D) = f(D)` at `A = t^(-1/4)`.
//!
//! The enumeration buckets states by `(a(s), |s|)` with plain `u64` counts
//! and expands the bucket table into a Laurent polynomial once at the end,
//! keeping big-integer arithmetic out of the hot loop.  With the `parallel`
//! feature (default) blocks of states are distributed over a rayon pool;
//! bucket tables merge by addition, so the result is identical to the
//! sequential fallback bit for bit.
//!
//! Also provided: single-state circle counts, A/B-adequacy, and the
//! adequacy-based degree window for the Jones polynomial
//! (`degree_bounds`), which is exact on the side where the diagram is
//! adequate.

use num_bigint::BigInt;
use num_rational::Ratio;
use thiserror::Error;

use crate::diagram::{dart, Diagram, SmoothMode};
use crate::poly::{LaurentPoly1, Var};
use crate::unionfind::UnionFind;

/// Default cap on crossing count for full state enumeration (2^24 states).
pub const DEFAULT_STATE_LIMIT: usize = 24;

/// Errors from the state-sum routines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum StateSumError {
    /// Too many crossings for full enumeration under the given cap.
    #[error("state sum over {count} crossings exceeds the limit of {cap} (2^{cap} states); raise the limit to proceed")]
    TooLarge { count: usize, cap: usize },
    /// State vector length does not match the diagram.
    #[error("state has {got} entries for a diagram with {want} crossings")]
    BadStateLength { got: usize, want: usize },
    /// A single-state query requires every entry to be A or B.
    #[error("state entries must be A or B smoothings")]
    OrientedStateEntry,
}

/// A- and B-adequacy of a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Adequacy {
    /// No crossing joins an all-A-state circle to itself.
    pub a_adequate: bool,
    /// No crossing joins an all-B-state circle to itself.
    pub b_adequate: bool,
}

/// Degree window for the Jones polynomial from the extreme states.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeBounds {
    /// Lower bound for the minimum degree; exact if the diagram is A-adequate.
    pub min_bound: Ratio<i64>,
    /// Upper bound for the maximum degree; exact if the diagram is B-adequate.
    pub max_bound: Ratio<i64>,
    /// Whether each bound is certified exact.
    pub adequacy: Adequacy,
}

/// Bucketed state-sum table: `counts[a][k]` is the number of states with
/// `a` A-smoothings whose smoothed diagram has `k` circles.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Buckets {
    crossings: usize,
    /// Dense `(c+1) x (max circles + 1)` table.
    counts: Vec<u64>,
    width: usize,
}

impl Buckets {
    fn new(crossings: usize, max_circles: usize) -> Buckets {
        let width = max_circles + 1;
        Buckets { crossings, counts: vec![0; (crossings + 1) * width], width }
    }

    fn bump(&mut self, a_count: usize, circles: usize) {
        self.counts[a_count * self.width + circles] += 1;
    }

    fn merge(mut self, other: Buckets) -> Buckets {
        debug_assert_eq!(self.width, other.width);
        for (lhs, rhs) in self.counts.iter_mut().zip(other.counts) {
            *lhs += rhs;
        }
        self
    }

    /// Expand into the bracket polynomial in `A`.
    fn expand(&self) -> LaurentPoly1 {
        let c = self.crossings as i64;
        // Powers of d = -A^2 - A^(-2).
        let mut delta = LaurentPoly1::zero(Var::A);
        delta.add_term_units(8, &BigInt::from(-1));
        delta.add_term_units(-8, &BigInt::from(-1));
        let mut delta_pow = LaurentPoly1::one(Var::A);
        let mut by_circles: Vec<LaurentPoly1> = Vec::new();
        for _ in 0..self.width {
            by_circles.push(delta_pow.clone());
            delta_pow = delta_pow.mul(&delta);
        }
        let mut total = LaurentPoly1::zero(Var::A);
        for a_count in 0..=self.crossings {
            let exponent = 2 * a_count as i64 - c; // a - b
            for circles in 1..self.width {
                let n = self.counts[a_count * self.width + circles];
                if n == 0 {
                    continue;
                }
                let mut term = by_circles[circles - 1].clone();
                term.mul_monomial_units(4 * exponent, &BigInt::from(n));
                total = total.add(&term);
            }
        }
        total
    }
}

/// Union the darts of one smoothing; `b_smooth(x)` selects the B-pairs.
fn smooth_into(d: &Diagram, uf: &mut UnionFind, b_smooth: impl Fn(usize) -> bool) {
    uf.reset(d.darts());
    for x in 0..d.crossings() {
        let pairs: [(usize, usize); 2] =
            if b_smooth(x) { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
        for (s, t) in pairs {
            uf.union(dart(x, s), dart(x, t));
        }
    }
    for dd in 0..d.darts() {
        let m = d.mate(dd);
        if dd < m {
            uf.union(dd, m);
        }
    }
}

/// Count the circles of one smoothing via union-find on darts.
fn circles_of_state(d: &Diagram, state_bits: u64, uf: &mut UnionFind) -> usize {
    smooth_into(d, uf, |x| state_bits >> x & 1 == 1);
    uf.class_count() + d.free_loops()
}

/// Circles can reach `c + pieces` on split shadows.
fn max_circles(d: &Diagram) -> usize {
    d.crossings() + d.components() + 1
}

fn enumerate_block(d: &Diagram, start: u64, end: u64) -> Buckets {
    let c = d.crossings();
    let mut buckets = Buckets::new(c, max_circles(d));
    let mut uf = UnionFind::new(d.darts());
    for state in start..end {
        let circles = circles_of_state(d, state, &mut uf);
        let a_count = c - state.count_ones() as usize;
        buckets.bump(a_count, circles);
    }
    buckets
}

fn compute_buckets_sequential(d: &Diagram) -> Buckets {
    enumerate_block(d, 0, 1u64 << d.crossings())
}

#[cfg(feature = "parallel")]
fn compute_buckets_parallel(d: &Diagram) -> Buckets {
    use rayon::prelude::*;
    let c = d.crossings();
    // Blocks of 2^14 states keep per-task overhead negligible.
    const BLOCK_BITS: usize = 14;
    if c <= BLOCK_BITS {
        return compute_buckets_sequential(d);
    }
    let blocks = 1u64 << (c - BLOCK_BITS);
    let block_len = 1u64 << BLOCK_BITS;
    (0..blocks)
        .into_par_iter()
        .map(|b| enumerate_block(d, b * block_len, (b + 1) * block_len))
        .reduce(|| Buckets::new(c, max_circles(d)), Buckets::merge)
}

fn compute_buckets(d: &Diagram) -> Buckets {
    #[cfg(feature = "parallel")]
    {
        compute_buckets_parallel(d)
    }
    #[cfg(not(feature = "parallel"))]
    {
        compute_buckets_sequential(d)
    }
}

fn check_limit(d: &Diagram, limit: Option<usize>) -> Result<(), StateSumError> {
    let cap = limit.unwrap_or(DEFAULT_STATE_LIMIT).min(63);
    if d.crossings() > cap {
        return Err(StateSumError::TooLarge { count: d.crossings(), cap });
    }
    Ok(())
}

/// The Kauffman bracket `<D>` as a Laurent polynomial in `A`.
///
/// `limit` caps the crossing count (default [`DEFAULT_STATE_LIMIT`]).
pub fn kauffman_bracket(d: &Diagram, limit: Option<usize>) -> Result<LaurentPoly1, StateSumError> {
    check_limit(d, limit)?;
    Ok(compute_buckets(d).expand())
}

/// The normalized bracket `f(D) = (-A)^(-3w) <D>`, a link invariant.
pub fn normalized_bracket(
    d: &Diagram,
    limit: Option<usize>,
) -> Result<LaurentPoly1, StateSumError> {
    let mut bracket = kauffman_bracket(d, limit)?;
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    bracket.mul_monomial_units(-12 * w, &BigInt::from(sign));
    Ok(bracket)
}

/// The Jones polynomial `V(D)` in `t`, via `A = t^(-1/4)`.
pub fn jones(d: &Diagram, limit: Option<usize>) -> Result<LaurentPoly1, StateSumError> {
    let f = normalized_bracket(d, limit)?;
    Ok(f.subst_a_to_t().expect("bracket exponents are whole powers of A"))
}

/// Circle count of a single smoothing state (entries must be A or B).
pub fn state_circles(d: &Diagram, state: &[SmoothMode]) -> Result<usize, StateSumError> {
    if state.len() != d.crossings() {
        return Err(StateSumError::BadStateLength { got: state.len(), want: d.crossings() });
    }
    if state.contains(&SmoothMode::Oriented) {
        return Err(StateSumError::OrientedStateEntry);
    }
    let mut uf = UnionFind::new(d.darts());
    smooth_into(d, &mut uf, |x| state[x] == SmoothMode::B);
    Ok(uf.class_count() + d.free_loops())
}

/// A- and B-adequacy.
///
/// A diagram is A-adequate when no crossing's two A-smoothing arcs lie on
/// the same all-A-state circle (equivalently, its A-state graph has no
/// loop edge); B-adequacy is the mirror statement.
pub fn adequacy(d: &Diagram) -> Adequacy {
    let mut uf = UnionFind::new(d.darts());
    smooth_into(d, &mut uf, |_| false);
    let a_adequate = (0..d.crossings()).all(|x| uf.find(dart(x, 0)) != uf.find(dart(x, 1)));
    smooth_into(d, &mut uf, |_| true);
    let b_adequate = (0..d.crossings()).all(|x| uf.find(dart(x, 0)) != uf.find(dart(x, 2)));
    Adequacy { a_adequate, b_adequate }
}

/// Degree window for the Jones polynomial from the extreme states.
///
/// For a diagram with `c` crossings, writhe `w`, `A` circles in the all-A
/// state and `B` circles in the all-B state:
///
/// ```text
/// min deg V >= -(c + 2A - 2 - 3w)/4      (equality if A-adequate)
/// max deg V <=  (c + 2B - 2 + 3w)/4      (equality if B-adequate)
/// ```
///
/// For a positive diagram these reduce to `(c - A + 1)/2` and
/// `c + (B - 1)/2`.
pub fn degree_bounds(d: &Diagram) -> DegreeBounds {
    let c = d.crossings() as i64;
    let w = d.writhe();
    let a = d.a_state_circles() as i64;
    let b = d.b_state_circles() as i64;
    DegreeBounds {
        min_bound: Ratio::new(-(c + 2 * a - 2 - 3 * w), 4),
        max_bound: Ratio::new(c + 2 * b - 2 + 3 * w, 4),
        adequacy: adequacy(d),
    }
}

/// Per-state contribution table in CSV form, for small diagrams.
///
/// Columns: state bits (A=0/B=1, crossing 0 first), number of
/// A-smoothings, circle count, and the monomial-times-delta-power term.
pub fn bracket_trace_csv(d: &Diagram, limit: Option<usize>) -> Result<String, StateSumError> {
    let cap = limit.unwrap_or(16).min(20);
    if d.crossings() > cap {
        return Err(StateSumError::TooLarge { count: d.crossings(), cap });
    }
    let c = d.crossings();
    let mut uf = UnionFind::new(d.darts());
    let mut out = String::from("state,a_smoothings,circles,term\n");
    for state in 0..1u64 << c {
        let circles = circles_of_state(d, state, &mut uf);
        let a_count = c - state.count_ones() as usize;
        let bits: String =
            (0..c).map(|x| if state >> x & 1 == 0 { 'A' } else { 'B' }).collect();
        let e = 2 * a_count as i64 - c as i64;
        let term = match (e, circles) {
            (0, 1) => "1".to_string(),
            (_, 1) => format!("A^{e}"),
            (0, _) => format!("d^{}", circles - 1),
            _ => format!("A^{e}*d^{}", circles - 1),
        };
        out.push_str(&format!("{bits},{a_count},{circles},{term}\n"));
    }
    Ok(out)
}

/// Expose both execution paths for benchmarking (identical results).
#[doc(hidden)]
pub fn bracket_sequential(d: &Diagram, limit: Option<usize>) -> Result<LaurentPoly1, StateSumError> {
    check_limit(d, limit)?;
    Ok(compute_buckets_sequential(d).expand())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::generate::{closed_braid, pretzel, torus_2_2p};
    use crate::diagram::testutil::{hopf_positive, kink, trefoil};
    use crate::diagram::Sign;

    #[test]
    fn bracket_of_unknot_and_kinks() {
        assert_eq!(kauffman_bracket(&Diagram::unknot(), None).unwrap().to_text(), "1");
        // <positive kink> = -A^3.
        assert_eq!(
            kauffman_bracket(&kink(Sign::Positive), None).unwrap().to_text(),
            "-1*A^(3)"
        );
        assert_eq!(
            kauffman_bracket(&kink(Sign::Negative), None).unwrap().to_text(),
            "-1*A^(-3)"
        );
        // f removes the kink: both are unknot diagrams.
        for s in [Sign::Positive, Sign::Negative] {
            assert_eq!(normalized_bracket(&kink(s), None).unwrap().to_text(), "1");
            assert_eq!(jones(&kink(s), None).unwrap().to_text(), "1");
        }
    }

    #[test]
    fn jones_of_trefoil() {
        // Right-handed trefoil: V = t + t^3 - t^4.
        let v = jones(&trefoil(), None).unwrap();
        assert_eq!(v.to_text(), "1*t^(1) + 1*t^(3) - 1*t^(4)");
        // Braid-closure diagram of the same knot agrees.
        let v2 = jones(&closed_braid(2, &[1, 1, 1]).unwrap(), None).unwrap();
        assert_eq!(v, v2);
    }

    #[test]
    fn jones_of_hopf_link() {
        // Positive Hopf link: V = -t^(1/2) - t^(5/2).
        let v = jones(&hopf_positive(), None).unwrap();
        assert_eq!(v.to_text(), "-1*t^(1/2) - 1*t^(5/2)");
        assert_eq!(v, jones(&torus_2_2p(1), None).unwrap());
    }

    #[test]
    fn jones_of_t2_4_diagrams() {
        // The parallel braid closure is the right-handed (2,4) torus link:
        // V = -t^(3/2) - t^(7/2) + t^(9/2) - t^(11/2) (skein recursion from
        // the Hopf link and trefoil).
        let braid = jones(&closed_braid(2, &[1, 1, 1, 1]).unwrap(), None).unwrap();
        assert_eq!(
            braid.to_text(),
            "-1*t^(3/2) - 1*t^(7/2) + 1*t^(9/2) - 1*t^(11/2)"
        );
        // The positive antiparallel clasp chain is a different oriented
        // link: the mirror torus link with one component reversed.  By the
        // component-reversal formula V' = t^(-3*lk) V applied to the
        // mirrored value: V = -t^(1/2) + t^(3/2) - t^(5/2) - t^(9/2).
        let chain = jones(&torus_2_2p(2), None).unwrap();
        assert_eq!(
            chain.to_text(),
            "-1*t^(1/2) + 1*t^(3/2) - 1*t^(5/2) - 1*t^(9/2)"
        );
        // Both diagrams are adequate, so the degree windows are sharp.
        for d in [closed_braid(2, &[1, 1, 1, 1]).unwrap(), torus_2_2p(2)] {
            let b = degree_bounds(&d);
            let v = jones(&d, None).unwrap().degree_info().unwrap();
            assert_eq!(v.min_deg, b.min_bound);
            assert_eq!(v.max_deg, b.max_bound);
        }
    }

    #[test]
    fn pretzel_trefoil_matches() {
        let v = jones(&pretzel(-1, -1, -1).unwrap(), None).unwrap();
        assert_eq!(v.to_text(), "1*t^(1) + 1*t^(3) - 1*t^(4)");
    }

    #[test]
    fn state_circle_queries() {
        let t = trefoil();
        assert_eq!(state_circles(&t, &[SmoothMode::A; 3]).unwrap(), 2);
        assert_eq!(state_circles(&t, &[SmoothMode::B; 3]).unwrap(), 3);
        assert!(matches!(
            state_circles(&t, &[SmoothMode::A; 2]),
            Err(StateSumError::BadStateLength { got: 2, want: 3 })
        ));
        assert!(matches!(
            state_circles(&t, &[SmoothMode::A, SmoothMode::Oriented, SmoothMode::A]),
            Err(StateSumError::OrientedStateEntry)
        ));
    }

    #[test]
    fn adequacy_checks() {
        // Reduced alternating-type positive diagrams here are adequate both
        // ways except where a state has a self-touching circle.
        let t = trefoil();
        let adq = adequacy(&t);
        assert!(adq.a_adequate);
        assert!(adq.b_adequate);
        // A kink is never adequate on the kinked side.
        let kp = kink(Sign::Positive);
        let adq = adequacy(&kp);
        assert!(!adq.b_adequate, "positive kink B-state has a self-abutting circle");
        assert!(adq.a_adequate);
    }

    #[test]
    fn degree_bounds_on_trefoil_are_sharp() {
        let t = trefoil();
        let b = degree_bounds(&t);
        assert_eq!(b.min_bound, Ratio::from_integer(1));
        assert_eq!(b.max_bound, Ratio::from_integer(4));
        let v = jones(&t, None).unwrap().degree_info().unwrap();
        assert_eq!(v.min_deg, b.min_bound);
        assert_eq!(v.max_deg, b.max_bound);
    }

    #[test]
    fn sequential_and_default_paths_agree() {
        for d in [trefoil(), torus_2_2p(3), pretzel(-2, -2, -2).unwrap()] {
            assert_eq!(
                kauffman_bracket(&d, None).unwrap(),
                bracket_sequential(&d, None).unwrap()
            );
        }
    }

    #[test]
    fn limit_is_enforced() {
        let d = torus_2_2p(3);
        assert!(matches!(
            kauffman_bracket(&d, Some(5)),
            Err(StateSumError::TooLarge { count: 6, cap: 5 })
        ));
        assert!(kauffman_bracket(&d, Some(6)).is_ok());
    }

    #[test]
    fn trace_lists_all_states() {
        let csv = bracket_trace_csv(&trefoil(), None).unwrap();
        let lines: Vec<&str> = csv.trim_end().lines().collect();
        assert_eq!(lines.len(), 9, "header plus 8 states");
        assert_eq!(lines[0], "state,a_smoothings,circles,term");
        assert!(lines[1].starts_with("AAA,3,2,"));
    }

    #[test]
    fn split_diagram_bracket_picks_up_delta_factor() {
        // Trefoil plus a distant unknot multiplies V by (-t^(1/2)-t^(-1/2)).
        let mut split = trefoil();
        split.add_free_loop();
        let v = jones(&split, None).unwrap();
        let mut factor = LaurentPoly1::zero(Var::T);
        factor.add_term_units(2, &BigInt::from(-1));
        factor.add_term_units(-2, &BigInt::from(-1));
        let expected = jones(&trefoil(), None).unwrap().mul(&factor);
        assert_eq!(v, expected);
    }
}
