//! Degree obstructions to positivity.
//!
//! A positive link with `n` components, Jones polynomial `V`, second Jones
//! coefficient `v1` (the coefficient one whole power above `min deg V`) and
//! Conway leading coefficient `ℓ` must satisfy
//!
//! * `|v1| = 0`:  `max deg V ≤ 4 min deg V + (n−1)/2`,
//! * `|v1| = 1`:  `max deg V ≤ 4 min deg V + (n−1)/2 + 2ℓ − 2`,
//! * `|v1| = 2`:  `max deg V ≤ 4 min deg V + (n−1)/2 + ℓ`.
//!
//! Every quantity here is a link invariant, so a violation refutes the
//! existence of *any* positive diagram.  [`positivity_test`] applies the
//! inequalities to precomputed polynomials; [`analyze`] is the full diagram
//! pipeline (state-sum Jones, skein Conway, A-state classification with
//! predicted-versus-actual agreement flags); [`verify_family_claims`]
//! recomputes the invariants of the loop-insertion family `D_w` and checks
//! the four degree/coefficient laws together with the Conway recursion
//! `∇(w) = (1+z²)∇(w−1) + z∇(D₀₀)(1+z²)^(w−1)`, where `D₀₀` is the oriented
//! smoothing of the negative crossing.
//!
//! Verdicts are three-valued: `NotPositive` (bound violated), `Inconclusive`
//! (bound met — positivity is not decided), and `NotApplicable` (second
//! coefficient outside the covered range `|v1| ≤ 2`).  All bound arithmetic
//! is exact rational arithmetic; the only denominators that occur are
//! halves, from the `(n−1)/2` term.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive};
use thiserror::Error;

use crate::diagram::{dart, Dart, Diagram, DiagramError, DiagramStats, Sign, SmoothMode};
use crate::poly::{LaurentPoly1, Var};
use crate::skein::{self, SkeinError, SkeinOptions};
use crate::stategraph::{self, Classification};
use crate::statesum::{self, StateSumError};
use crate::unionfind::UnionFind;

/// Errors from assembling an obstruction report.
#[derive(Debug, Error)]
pub enum ObstructError {
    /// A degree was requested of an identically zero polynomial.
    #[error("the {which} polynomial is identically zero")]
    ZeroPolynomial { which: &'static str },
    /// A polynomial arrived in the wrong variable.
    #[error("expected the {which} polynomial in {expected:?}, found {found:?}")]
    WrongVariable { which: &'static str, expected: Var, found: Var },
    /// A coefficient fell outside the 64-bit range of the report.
    #[error("coefficient {value} does not fit in the report's integer range")]
    CoefficientOverflow { value: BigInt },
    /// The operation needs an almost-positive diagram.
    #[error("expected exactly one negative crossing, found {negative}")]
    NotAlmostPositive { negative: usize },
}

/// Outcome of a positivity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// The applicable bound is violated: the link has no positive diagram.
    NotPositive,
    /// The bound holds; positivity is neither refuted nor certified.
    Inconclusive,
    /// The second Jones coefficient lies outside the covered range.
    NotApplicable,
}

impl Verdict {
    /// Stable string form used in JSON reports.
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotPositive => "NotPositive",
            Verdict::Inconclusive => "Inconclusive",
            Verdict::NotApplicable => "NotApplicable",
        }
    }
}

/// Degree data and verdict of one positivity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ObstructionReport {
    /// Minimal degree of the Jones polynomial.
    pub min_v: Ratio<i64>,
    /// Maximal degree of the Jones polynomial.
    pub max_v: Ratio<i64>,
    /// Second Jones coefficient (one whole power above the minimum).
    pub second_coeff: i64,
    /// Leading Conway coefficient.
    pub lead_conway: i64,
    /// Number of link components.
    pub n: usize,
    /// The applicable bound; `None` when no case applies.
    pub bound_value: Option<Ratio<i64>>,
    /// Three-valued outcome.
    pub verdict: Verdict,
}

fn ratio_json(r: Ratio<i64>) -> serde_json::Value {
    serde_json::json!([*r.numer(), *r.denom()])
}

impl ObstructionReport {
    /// JSON form; rationals appear as `[numerator, denominator]` pairs.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "min_deg_v": ratio_json(self.min_v),
            "max_deg_v": ratio_json(self.max_v),
            "second_coeff": self.second_coeff,
            "lead_conway": self.lead_conway,
            "components": self.n,
            "bound": self.bound_value.map(ratio_json),
            "verdict": self.verdict.as_str(),
        })
    }

    /// One-line account of the comparison.
    pub fn summary(&self) -> String {
        match (self.verdict, self.bound_value) {
            (Verdict::NotApplicable, _) | (_, None) => format!(
                "second Jones coefficient {} lies outside [-2, 2]; no bound applies",
                self.second_coeff
            ),
            (Verdict::NotPositive, Some(b)) => format!(
                "max deg V = {} exceeds the positivity bound {}: not a positive link",
                self.max_v, b
            ),
            (Verdict::Inconclusive, Some(b)) => {
                format!("max deg V = {} meets the positivity bound {}: inconclusive", self.max_v, b)
            }
        }
    }
}

fn small(value: &BigInt) -> Result<i64, ObstructError> {
    value.to_i64().ok_or_else(|| ObstructError::CoefficientOverflow { value: value.clone() })
}

/// Apply the degree test to precomputed invariants: Jones polynomial `v`,
/// Conway polynomial `nabla`, and component count `n`.
///
/// The dispatch is on the absolute value of the second Jones coefficient;
/// see the module docs for the three bounds.  Both polynomials must be
/// nonzero (a split link has `∇ = 0` and carries no leading coefficient).
pub fn positivity_test(
    v: &LaurentPoly1,
    nabla: &LaurentPoly1,
    n: usize,
) -> Result<ObstructionReport, ObstructError> {
    if v.var() != Var::T {
        return Err(ObstructError::WrongVariable {
            which: "Jones",
            expected: Var::T,
            found: v.var(),
        });
    }
    if nabla.var() != Var::Z {
        return Err(ObstructError::WrongVariable {
            which: "Conway",
            expected: Var::Z,
            found: nabla.var(),
        });
    }
    let dv = v.degree_info().ok_or(ObstructError::ZeroPolynomial { which: "Jones" })?;
    let dn = nabla.degree_info().ok_or(ObstructError::ZeroPolynomial { which: "Conway" })?;
    let second_coeff = small(&dv.second_coeff)?;
    let lead_conway = small(&dn.lead_coeff)?;
    let base = dv.min_deg * 4 + Ratio::new(n as i64 - 1, 2);
    let bound_value = match second_coeff.unsigned_abs() {
        0 => Some(base),
        1 => Some(base + Ratio::from_integer(2 * lead_conway - 2)),
        2 => Some(base + Ratio::from_integer(lead_conway)),
        _ => None,
    };
    let verdict = match bound_value {
        None => Verdict::NotApplicable,
        Some(b) if dv.max_deg > b => Verdict::NotPositive,
        Some(_) => Verdict::Inconclusive,
    };
    Ok(ObstructionReport {
        min_v: dv.min_deg,
        max_v: dv.max_deg,
        second_coeff,
        lead_conway,
        n,
        bound_value,
        verdict,
    })
}

/// Errors from the diagram-level pipeline.
#[derive(Debug, Error)]
pub enum AnalyzeError {
    /// State-sum resource or input error.
    #[error(transparent)]
    StateSum(#[from] StateSumError),
    /// Skein recursion resource error.
    #[error(transparent)]
    Skein(#[from] SkeinError),
    /// Report assembly error.
    #[error(transparent)]
    Obstruct(#[from] ObstructError),
    /// Diagram surgery error.
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// Resource limits for [`analyze`].
#[derive(Debug, Clone, Default)]
pub struct AnalyzeOptions {
    /// Crossing cap for the `2^c` state enumeration; `None` uses the
    /// state-sum default.
    pub state_limit: Option<usize>,
    /// Limits for the Conway skein recursion; `None` uses the skein
    /// defaults.
    pub skein: Option<SkeinOptions>,
}

/// Everything [`analyze`] learns about one diagram.
#[derive(Debug, Clone)]
pub struct AnalysisReport {
    /// Diagram summary counts.
    pub stats: DiagramStats,
    /// Jones polynomial (state-sum route).
    pub jones: LaurentPoly1,
    /// Conway polynomial (skein route).
    pub conway: LaurentPoly1,
    /// Degree test over the two polynomials.
    pub obstruction: ObstructionReport,
    /// Taxonomy classification; present for positive connected diagrams.
    pub classification: Option<Classification>,
    /// Second coefficient predicted from the A-state graph.
    pub predicted_second_coeff: Option<i64>,
    /// Whether prediction and computed second coefficient agree.
    pub second_coeff_agrees: Option<bool>,
    /// Leading Conway coefficient predicted from the hole structure.
    pub predicted_lead_conway: Option<Ratio<i64>>,
    /// Whether prediction and computed leading coefficient agree.
    pub lead_conway_agrees: Option<bool>,
}

impl AnalysisReport {
    /// JSON form of the full report.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "stats": self.stats.to_json(),
            "jones": self.jones.to_json(),
            "jones_text": self.jones.to_text(),
            "conway": self.conway.to_json(),
            "conway_text": self.conway.to_text(),
            "obstruction": self.obstruction.to_json(),
            "classification": self.classification.as_ref().map(Classification::to_json),
            "predicted_second_coeff": self.predicted_second_coeff,
            "second_coeff_agrees": self.second_coeff_agrees,
            "predicted_lead_conway": self.predicted_lead_conway.map(ratio_json),
            "lead_conway_agrees": self.lead_conway_agrees,
        })
    }
}

/// Run the full pipeline on one diagram: invariants, degree test, and (for
/// positive connected inputs) the A-state classification with
/// predicted-versus-actual agreement flags.
pub fn analyze(d: &Diagram, opts: &AnalyzeOptions) -> Result<AnalysisReport, AnalyzeError> {
    let stats = d.stats();
    let jones = statesum::jones(d, opts.state_limit)?;
    let conway = skein::conway(d, opts.skein.as_ref())?;
    let obstruction = positivity_test(&jones, &conway, stats.components)?;
    let (classification, predicted_second_coeff, predicted_lead_conway) =
        if stats.negative_crossings == 0 && stats.connected {
            let cls = stategraph::classify(d).ok();
            let predicted_second = stategraph::second_coeff_predicted(d).ok();
            // Hole-structure lead prediction exists only for types 1 and 2.
            let predicted_lead =
                cls.as_ref().and_then(|c| stategraph::predicted_lead_conway(c).ok());
            (cls, predicted_second, predicted_lead)
        } else {
            (None, None, None)
        };
    let second_coeff_agrees = predicted_second_coeff.map(|p| p == obstruction.second_coeff);
    let lead_conway_agrees =
        predicted_lead_conway.map(|p| p == Ratio::from_integer(obstruction.lead_conway));
    Ok(AnalysisReport {
        stats,
        jones,
        conway,
        obstruction,
        classification,
        predicted_second_coeff,
        second_coeff_agrees,
        predicted_lead_conway,
        lead_conway_agrees,
    })
}

/// The unordered pair of Seifert circles meeting at each crossing, as
/// union-find class representatives.
fn seifert_pairs(d: &Diagram) -> Vec<(usize, usize)> {
    let mut uf = UnionFind::new(d.darts());
    for x in 0..d.crossings() {
        for (a, b) in d.smoothing_pairs(x, SmoothMode::Oriented) {
            uf.union(dart(x, a), dart(x, b));
        }
    }
    for t in 0..d.darts() {
        let m = d.mate(t);
        uf.union(t, m);
    }
    (0..d.crossings())
        .map(|x| {
            let classes: BTreeSet<usize> = (0..4).map(|s| uf.find(dart(x, s))).collect();
            let mut it = classes.into_iter();
            let lo = it.next().expect("crossing has darts");
            let hi = it.next().unwrap_or(lo);
            (lo, hi)
        })
        .collect()
}

/// Whether the unique negative crossing is the only crossing connecting its
/// pair of Seifert circles.  This is the hypothesis under which the minimal
/// Jones degree of an almost-positive diagram is determined by its Euler
/// characteristic, and it is required of every member of the loop-insertion
/// family.
pub fn type_i_condition(d: &Diagram) -> Result<bool, ObstructError> {
    let negatives: Vec<usize> =
        (0..d.crossings()).filter(|&x| d.sign(x) == Sign::Negative).collect();
    if negatives.len() != 1 {
        return Err(ObstructError::NotAlmostPositive { negative: negatives.len() });
    }
    let e = negatives[0];
    let pairs = seifert_pairs(d);
    Ok(pairs.iter().enumerate().all(|(x, p)| x == e || *p != pairs[e]))
}

/// Where the three-crossing loops of the family construction are inserted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LoopSite {
    /// At the unique negative crossing: the threaded arc enters its
    /// over-strand, the passive arc leaves its under-strand.
    AtNegative,
    /// Explicit arcs: `x_arc` is threaded through the new self-crossing,
    /// `y_arc` passes over/under the loop.  Equal arcs yield the
    /// single-strand loop.
    Arcs {
        /// Out-dart of the threaded arc.
        x_arc: Dart,
        /// Out-dart of the passive arc.
        y_arc: Dart,
    },
}

/// Resource limits for [`verify_family_claims`].
#[derive(Debug, Clone, Default)]
pub struct FamilyOptions {
    /// Crossing cap for the per-`w` Jones state sums; `None` grows the cap
    /// to exactly fit the largest member.
    pub state_limit: Option<usize>,
    /// Limits for the Conway skein recursions; `None` grows the crossing
    /// cap to fit and keeps the default node budget.
    pub skein: Option<SkeinOptions>,
}

/// Invariants and claim checks of one family member `D_w`.
#[derive(Debug, Clone)]
pub struct FamilyRow {
    /// Number of inserted loops.
    pub w: usize,
    /// Crossing count (base + 3w).
    pub crossings: usize,
    /// Seifert circle count.
    pub seifert_circles: usize,
    /// Minimal Jones degree.
    pub min_v: Ratio<i64>,
    /// Maximal Jones degree.
    pub max_v: Ratio<i64>,
    /// Second Jones coefficient.
    pub second_coeff: i64,
    /// Leading Conway coefficient.
    pub lead_conway: i64,
    /// Verdict of the degree test on this member.
    pub verdict: Verdict,
    /// The negative crossing's Seifert-circle pair is unique.
    pub type_i: bool,
    /// `min deg V(w) = min deg V(0) + w`.
    pub min_shift_ok: bool,
    /// `max deg V(w) = max deg V(0) + 4w`.
    pub max_shift_ok: bool,
    /// Second Jones coefficient equals the base value.
    pub second_constant_ok: bool,
    /// Leading Conway coefficient equals the base value.
    pub lead_constant_ok: bool,
    /// `∇(w) = (1+z²)∇(w−1) + z∇(D₀₀)(1+z²)^(w−1)`.
    pub recursion_ok: bool,
}

impl FamilyRow {
    /// Whether every check of this row passed.
    pub fn ok(&self) -> bool {
        self.type_i
            && self.min_shift_ok
            && self.max_shift_ok
            && self.second_constant_ok
            && self.lead_constant_ok
            && self.recursion_ok
    }

    /// JSON form of the row.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "w": self.w,
            "crossings": self.crossings,
            "seifert_circles": self.seifert_circles,
            "min_deg_v": ratio_json(self.min_v),
            "max_deg_v": ratio_json(self.max_v),
            "second_coeff": self.second_coeff,
            "lead_conway": self.lead_conway,
            "verdict": self.verdict.as_str(),
            "type_i": self.type_i,
            "min_shift_ok": self.min_shift_ok,
            "max_shift_ok": self.max_shift_ok,
            "second_constant_ok": self.second_constant_ok,
            "lead_constant_ok": self.lead_constant_ok,
            "recursion_ok": self.recursion_ok,
        })
    }
}

/// Full per-`w` check table of a loop-insertion family.
#[derive(Debug, Clone)]
pub struct FamilyReport {
    /// Crossing count of the smoothed diagram `D₀₀`.
    pub d00_crossings: usize,
    /// Seifert circle count of `D₀₀`.
    pub d00_seifert_circles: usize,
    /// Conway polynomial of `D₀₀` (drives the recursion check).
    pub d00_conway: LaurentPoly1,
    /// One row per `w = 0..=w_max`.
    pub rows: Vec<FamilyRow>,
}

impl FamilyReport {
    /// Whether every row passed every check.
    pub fn all_ok(&self) -> bool {
        self.rows.iter().all(FamilyRow::ok)
    }

    /// JSON form of the table.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d00": {
                "crossings": self.d00_crossings,
                "seifert_circles": self.d00_seifert_circles,
                "conway": self.d00_conway.to_json(),
                "conway_text": self.d00_conway.to_text(),
            },
            "rows": self.rows.iter().map(FamilyRow::to_json).collect::<Vec<_>>(),
            "all_ok": self.all_ok(),
        })
    }

    /// Plain-text table for terminal output.
    pub fn to_table(&self) -> String {
        let mut out = String::from(
            "  w   c   s  minV  maxV  v1  lead  verdict       checks\n",
        );
        for r in &self.rows {
            let checks = if r.ok() {
                "all ok".to_string()
            } else {
                let mut bad = Vec::new();
                if !r.type_i {
                    bad.push("type-i");
                }
                if !r.min_shift_ok {
                    bad.push("min-shift");
                }
                if !r.max_shift_ok {
                    bad.push("max-shift");
                }
                if !r.second_constant_ok {
                    bad.push("second");
                }
                if !r.lead_constant_ok {
                    bad.push("lead");
                }
                if !r.recursion_ok {
                    bad.push("recursion");
                }
                format!("FAILED: {}", bad.join(", "))
            };
            out.push_str(&format!(
                "{:>3} {:>3} {:>3} {:>5} {:>5} {:>3} {:>5}  {:<13} {}\n",
                r.w,
                r.crossings,
                r.seifert_circles,
                r.min_v.to_string(),
                r.max_v.to_string(),
                r.second_coeff,
                r.lead_conway,
                r.verdict.as_str(),
                checks
            ));
        }
        out
    }
}

fn one_plus_z2() -> LaurentPoly1 {
    let mut p = LaurentPoly1::one(Var::Z);
    p.add_term_units(8, &BigInt::one());
    p
}

/// Build `D_{w+1}` from `D_w` by inserting one loop at `site`.
fn insert_family_loop(d: &Diagram, site: LoopSite) -> Result<Diagram, DiagramError> {
    match site {
        LoopSite::AtNegative => d.insert_positive_loop_at_negative(),
        LoopSite::Arcs { x_arc, y_arc } if x_arc == y_arc => d.insert_positive_loop(x_arc),
        LoopSite::Arcs { x_arc, y_arc } => d.insert_positive_loop_pair(x_arc, y_arc),
    }
}

/// Recompute the invariants of the family `D_0, …, D_{w_max}` obtained by
/// repeatedly inserting the positive three-crossing loop at `site`, and
/// check each member against the expected laws: minimal Jones degree shifts
/// by `w`, maximal degree by `4w`, second Jones coefficient and leading
/// Conway coefficient stay constant, and the Conway polynomials satisfy the
/// two-layer skein recursion through `∇(D₀₀)`.
///
/// Failed checks are recorded in the table, not raised as errors — the
/// caller decides what a failure means.  The base must be almost-positive
/// (exactly one negative crossing), since the recursion smooths it.
pub fn verify_family_claims(
    base: &Diagram,
    site: LoopSite,
    w_max: usize,
    opts: &FamilyOptions,
) -> Result<FamilyReport, AnalyzeError> {
    let negatives: Vec<usize> =
        (0..base.crossings()).filter(|&x| base.sign(x) == Sign::Negative).collect();
    if negatives.len() != 1 {
        return Err(ObstructError::NotAlmostPositive { negative: negatives.len() }.into());
    }
    let top = base.crossings() + 3 * w_max;
    let state_limit = Some(opts.state_limit.unwrap_or(top));
    let skein_opts = opts.skein.clone().unwrap_or_else(|| {
        let defaults = SkeinOptions::default();
        SkeinOptions { crossing_limit: defaults.crossing_limit.max(top), ..defaults }
    });

    let d00 = base.smooth_crossing(negatives[0], SmoothMode::Oriented)?;
    let d00_conway = skein::conway(&d00, Some(&skein_opts))?;
    let mut z_d00 = d00_conway.clone();
    z_d00.mul_monomial_units(4, &BigInt::one());

    let growth = one_plus_z2();
    let mut rows = Vec::with_capacity(w_max + 1);
    let mut d = base.clone();
    let mut base_info: Option<(Ratio<i64>, Ratio<i64>, i64, i64)> = None;
    let mut prev_conway: Option<LaurentPoly1> = None;
    for w in 0..=w_max {
        if w > 0 {
            d = insert_family_loop(&d, site)?;
        }
        let stats = d.stats();
        let jones = statesum::jones(&d, state_limit)?;
        let conway = skein::conway(&d, Some(&skein_opts))?;
        let report = positivity_test(&jones, &conway, stats.components)?;
        let (base_min, base_max, base_second, base_lead) = *base_info.get_or_insert((
            report.min_v,
            report.max_v,
            report.second_coeff,
            report.lead_conway,
        ));
        let shift = Ratio::from_integer(w as i64);
        let recursion_ok = match &prev_conway {
            None => true,
            Some(prev) => {
                let tail = z_d00.mul(&growth.pow(w as u32 - 1));
                conway == growth.mul(prev).add(&tail)
            }
        };
        rows.push(FamilyRow {
            w,
            crossings: stats.crossings,
            seifert_circles: stats.seifert_circles,
            min_v: report.min_v,
            max_v: report.max_v,
            second_coeff: report.second_coeff,
            lead_conway: report.lead_conway,
            verdict: report.verdict,
            type_i: type_i_condition(&d)?,
            min_shift_ok: report.min_v == base_min + shift,
            max_shift_ok: report.max_v == base_max + shift * 4,
            second_constant_ok: report.second_coeff == base_second,
            lead_constant_ok: report.lead_conway == base_lead,
            recursion_ok,
        });
        prev_conway = Some(conway);
    }
    Ok(FamilyReport {
        d00_crossings: d00.crossings(),
        d00_seifert_circles: d00.seifert_circles(),
        d00_conway,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testutil::trefoil;
    use crate::diagram::generate::pretzel;
    use crate::knots::CatalogKnot;
    use crate::stategraph::Family;

    fn poly(var: Var, terms: &[(i64, i64)]) -> LaurentPoly1 {
        let mut p = LaurentPoly1::zero(var);
        for &(e, c) in terms {
            p.add_term_units(4 * e, &BigInt::from(c));
        }
        p
    }

    #[test]
    fn trefoil_invariants_pass_the_test() {
        let v = poly(Var::T, &[(1, 1), (3, 1), (4, -1)]);
        let nabla = poly(Var::Z, &[(0, 1), (2, 1)]);
        let r = positivity_test(&v, &nabla, 1).unwrap();
        assert_eq!(r.verdict, Verdict::Inconclusive);
        assert_eq!(r.second_coeff, 0);
        assert_eq!(r.bound_value, Some(Ratio::from_integer(4)));
        assert_eq!(r.max_v, Ratio::from_integer(4));
        assert!(r.summary().contains("meets"));
    }

    #[test]
    fn half_integer_bound_for_even_component_count() {
        // A two-component positive link gets the extra (n-1)/2 = 1/2.
        let v = poly(Var::T, &[(1, 1), (2, 2), (3, 1)]);
        let nabla = poly(Var::Z, &[(1, 2)]);
        let r = positivity_test(&v, &nabla, 2).unwrap();
        assert_eq!(r.second_coeff, 2);
        assert_eq!(r.bound_value, Some(Ratio::new(13, 2)));
        assert_eq!(r.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn second_coefficient_three_is_not_applicable() {
        let v = poly(Var::T, &[(0, 1), (1, 3), (9, 1)]);
        let nabla = poly(Var::Z, &[(0, 1)]);
        let r = positivity_test(&v, &nabla, 1).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        assert_eq!(r.bound_value, None);
        assert!(r.summary().contains("outside"));
    }

    #[test]
    fn zero_and_mismatched_polynomials_are_rejected() {
        let v = poly(Var::T, &[(0, 1)]);
        let nabla = poly(Var::Z, &[(0, 1)]);
        assert!(matches!(
            positivity_test(&LaurentPoly1::zero(Var::T), &nabla, 1),
            Err(ObstructError::ZeroPolynomial { which: "Jones" })
        ));
        assert!(matches!(
            positivity_test(&v, &LaurentPoly1::zero(Var::Z), 1),
            Err(ObstructError::ZeroPolynomial { which: "Conway" })
        ));
        assert!(matches!(
            positivity_test(&nabla, &nabla, 1),
            Err(ObstructError::WrongVariable { which: "Jones", .. })
        ));
    }

    #[test]
    fn catalog_knots_fail_with_their_exact_bounds() {
        let expected = [
            (CatalogKnot::K16V0, 0, 16, 18),
            (CatalogKnot::K15V1, -1, 14, 16),
            (CatalogKnot::K15V2, -2, 15, 16),
        ];
        for (k, second, bound, max_v) in expected {
            let d = k.diagram().unwrap();
            let report = analyze(&d, &AnalyzeOptions::default()).unwrap();
            let o = &report.obstruction;
            assert_eq!(o.verdict, Verdict::NotPositive, "{}", k.id());
            assert_eq!(o.second_coeff, second, "{}", k.id());
            assert_eq!(o.bound_value, Some(Ratio::from_integer(bound)), "{}", k.id());
            assert_eq!(o.max_v, Ratio::from_integer(max_v), "{}", k.id());
            // Almost-positive inputs carry no positive-diagram predictions.
            assert!(report.classification.is_none());
            assert_eq!(report.to_json()["obstruction"]["verdict"], "NotPositive");
        }
    }

    #[test]
    fn unknot_analysis_is_inconclusive() {
        let report = analyze(&Diagram::unknot(), &AnalyzeOptions::default()).unwrap();
        assert_eq!(report.obstruction.verdict, Verdict::Inconclusive);
        assert_eq!(report.obstruction.bound_value, Some(Ratio::from_integer(0)));
        assert_eq!(report.obstruction.max_v, Ratio::from_integer(0));
        assert_eq!(report.jones.to_text(), "1");
    }

    #[test]
    fn pretzel_analysis_agrees_with_predictions() {
        let d = pretzel(-2, -2, -2).unwrap();
        let report = analyze(&d, &AnalyzeOptions::default()).unwrap();
        assert_eq!(report.obstruction.verdict, Verdict::Inconclusive);
        let cls = report.classification.as_ref().unwrap();
        assert_eq!(cls.family, Family::Balanced);
        assert_eq!(cls.diagram_type, Some(2));
        assert_eq!(report.second_coeff_agrees, Some(true));
        assert_eq!(report.lead_conway_agrees, Some(true));
        assert_eq!(report.obstruction.second_coeff, -2);
        assert_eq!(report.obstruction.lead_conway, 3);
    }

    #[test]
    fn type_i_condition_catalog_versus_overloaded_pair() {
        for k in CatalogKnot::ALL {
            assert!(type_i_condition(&k.diagram().unwrap()).unwrap(), "{}", k.id());
        }
        // All three trefoil crossings connect the same two Seifert circles,
        // so switching one leaves two positive crossings on the same pair.
        let almost = trefoil().switch_crossing(0).unwrap();
        assert!(!type_i_condition(&almost).unwrap());
        assert!(matches!(
            type_i_condition(&trefoil()),
            Err(ObstructError::NotAlmostPositive { negative: 0 })
        ));
    }

    #[test]
    fn family_table_identity_row() {
        let base = CatalogKnot::K15V1.diagram().unwrap();
        let report =
            verify_family_claims(&base, LoopSite::AtNegative, 0, &FamilyOptions::default())
                .unwrap();
        assert_eq!(report.rows.len(), 1);
        let row = &report.rows[0];
        assert!(row.ok());
        assert_eq!(row.w, 0);
        assert_eq!(row.crossings, 15);
        assert_eq!(row.min_v, Ratio::from_integer(3));
        assert_eq!(row.max_v, Ratio::from_integer(16));
        // The smoothed diagram keeps the Seifert circles of the base.
        assert_eq!(report.d00_crossings, 14);
        assert_eq!(report.d00_seifert_circles, 10);
        let dn = report.d00_conway.degree_info().unwrap();
        assert_eq!(dn.max_deg, Ratio::from_integer(5));
    }

    #[test]
    fn family_first_member_checks_out() {
        let base = CatalogKnot::K15V1.diagram().unwrap();
        let report =
            verify_family_claims(&base, LoopSite::AtNegative, 1, &FamilyOptions::default())
                .unwrap();
        assert!(report.all_ok(), "{}", report.to_table());
        let row = &report.rows[1];
        assert_eq!(row.crossings, 18);
        assert_eq!(row.min_v, Ratio::from_integer(4));
        assert_eq!(row.max_v, Ratio::from_integer(20));
        assert_eq!(row.second_coeff, -1);
        assert_eq!(row.lead_conway, 2);
        assert_eq!(row.verdict, Verdict::NotPositive);
    }

    #[test]
    fn family_requires_an_almost_positive_base() {
        let err =
            verify_family_claims(&trefoil(), LoopSite::AtNegative, 1, &FamilyOptions::default())
                .unwrap_err();
        assert!(matches!(
            err,
            AnalyzeError::Obstruct(ObstructError::NotAlmostPositive { negative: 0 })
        ));
    }
}
