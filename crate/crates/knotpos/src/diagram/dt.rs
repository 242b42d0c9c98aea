//! Dowker–Thistlethwaite (DT) codes for knot diagrams.
//!
//! Walking a knot diagram and numbering the `2c` crossing passages
//! `1..=2c`, every crossing receives one odd and one even number.  The DT
//! code lists, for odd numbers `1, 3, 5, ...` in order, the even number at
//! the same crossing, negated when the *even* passage goes over the
//! crossing.  (For alternating diagrams all entries share one sign.)
//!
//! A DT code determines the diagram only up to mirror image, and not every
//! pairing is realizable in the plane.  [`realize_dt`] recovers a diagram by
//! searching crossing-sign assignments (the first crossing fixed positive,
//! `2^(c-1)` candidates) for one whose rotation system embeds in the
//! sphere, then chooses between the found diagram and its mirror according
//! to a [`MirrorPolicy`].  [`to_dt`] extracts the lexicographically least
//! code over all `2c` basepoints and both orientations, so extraction is a
//! diagram invariant of the walk structure.

use super::{dart, Dart, Diagram, DiagramError, Sign};

/// Default cap on crossings for the realization search (2^20 candidates).
pub const DEFAULT_DT_LIMIT: usize = 21;

/// Which of the two mirror realizations to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MirrorPolicy {
    /// Prefer the realization with fewer negative crossings (ties keep the
    /// search result).  Positive diagrams realize as positive diagrams.
    #[default]
    FewestNegative,
    /// Prefer the realization with fewer positive crossings.
    FewestPositive,
}

/// Parse DT notation into its entry list.
///
/// Accepts comma- or whitespace-separated signed integers, optionally
/// wrapped as `DT[...]` or `[...]`.  Entries must be nonzero even numbers
/// whose absolute values are exactly `2, 4, ..., 2c`.
pub fn parse_dt(text: &str) -> Result<Vec<i64>, DiagramError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix("DT[") {
        s = rest
            .strip_suffix(']')
            .ok_or_else(|| DiagramError::DtSyntax("unclosed DT[".into()))?;
    } else if let Some(rest) = s.strip_prefix('[') {
        s = rest
            .strip_suffix(']')
            .ok_or_else(|| DiagramError::DtSyntax("unclosed [".into()))?;
    }
    let entries: Vec<i64> = s
        .split(|ch: char| ch == ',' || ch.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .map(|tok| tok.parse::<i64>())
        .collect::<Result<_, _>>()
        .map_err(|e| DiagramError::DtSyntax(format!("bad entry: {e}")))?;
    if entries.is_empty() {
        return Err(DiagramError::EmptyInput);
    }
    let c = entries.len();
    let mut seen = vec![false; c];
    for &e in &entries {
        let a = e.unsigned_abs();
        if e == 0 || a % 2 != 0 || a > 2 * c as u64 {
            return Err(DiagramError::DtSyntax(format!(
                "entry {e} is not an even number with magnitude at most {}",
                2 * c
            )));
        }
        let idx = (a / 2 - 1) as usize;
        if seen[idx] {
            return Err(DiagramError::DtSyntax(format!("magnitude {a} repeated")));
        }
        seen[idx] = true;
    }
    Ok(entries)
}

/// Realize a DT code as a knot diagram.
///
/// Returns [`DiagramError::DtUnrealizable`] when no crossing-sign
/// assignment embeds in the sphere.  `limit` caps the crossing count
/// (default [`DEFAULT_DT_LIMIT`]).
pub fn realize_dt(
    entries: &[i64],
    policy: MirrorPolicy,
    limit: Option<usize>,
) -> Result<Diagram, DiagramError> {
    let c = entries.len();
    if c == 0 {
        return Err(DiagramError::EmptyInput);
    }
    let cap = limit.unwrap_or(DEFAULT_DT_LIMIT).min(62);
    if c > cap {
        return Err(DiagramError::TooLarge { what: "DT realization", count: c, cap });
    }
    // Passage table: numbers 1..=2c, each knowing its crossing and role.
    let mut passage_crossing = vec![usize::MAX; 2 * c + 1];
    let mut passage_over = vec![false; 2 * c + 1];
    for (i, &e) in entries.iter().enumerate() {
        let odd = 2 * i + 1;
        let even = e.unsigned_abs() as usize;
        let even_over = e < 0;
        passage_crossing[odd] = i;
        passage_crossing[even] = i;
        passage_over[odd] = !even_over;
        passage_over[even] = even_over;
    }
    let mut mate = vec![0usize; 4 * c];
    let mut visited = vec![false; 4 * c];
    let mut found: Option<Diagram> = None;
    for assignment in 0u64..1 << (c - 1) {
        let sign_of = |x: usize| {
            if x > 0 && assignment >> (x - 1) & 1 == 1 {
                Sign::Negative
            } else {
                Sign::Positive
            }
        };
        // Out-dart of passage p and in-dart of passage p+1 share an arc.
        for p in 1..=2 * c {
            let q = p % (2 * c) + 1;
            let (x, over_p) = (passage_crossing[p], passage_over[p]);
            let (y, over_q) = (passage_crossing[q], passage_over[q]);
            let out = out_slot(over_p, sign_of(x));
            let inc = in_slot(over_q, sign_of(y));
            mate[dart(x, out)] = dart(y, inc);
            mate[dart(y, inc)] = dart(x, out);
        }
        if face_count(&mate, &mut visited) == c + 2 {
            let signs: Vec<Sign> = (0..c).map(sign_of).collect();
            let d = Diagram::from_parts(signs, mate.clone(), 0)?;
            found = Some(d);
            break;
        }
    }
    let d = found.ok_or(DiagramError::DtUnrealizable)?;
    let mirror = d.mirror();
    let keep_d = match policy {
        MirrorPolicy::FewestNegative => {
            d.negative_crossings() <= mirror.negative_crossings()
        }
        MirrorPolicy::FewestPositive => {
            d.negative_crossings() >= mirror.negative_crossings()
        }
    };
    Ok(if keep_d { d } else { mirror })
}

/// Parse and realize in one step.
pub fn from_dt_text(
    text: &str,
    policy: MirrorPolicy,
    limit: Option<usize>,
) -> Result<Diagram, DiagramError> {
    realize_dt(&parse_dt(text)?, policy, limit)
}

/// Extract the canonical DT code of a knot diagram.
///
/// The code is minimized lexicographically over all basepoints and both
/// orientations, comparing entries by magnitude with positive preferred.
/// Errors with [`DiagramError::NotAKnot`] on links.
pub fn to_dt(d: &Diagram) -> Result<Vec<i64>, DiagramError> {
    if d.components() != 1 || d.free_loops() != 0 {
        return Err(DiagramError::NotAKnot { components: d.components() });
    }
    let mut best: Option<Vec<i64>> = None;
    for oriented in [d.clone(), d.reverse_orientation()] {
        for base in oriented.out_darts() {
            let code = code_from(&oriented, base);
            if best.as_ref().is_none_or(|b| dt_key(&code) < dt_key(b)) {
                best = Some(code);
            }
        }
    }
    Ok(best.expect("knots have at least one crossing"))
}

/// Canonical DT code as text.
pub fn to_dt_text(d: &Diagram) -> Result<String, DiagramError> {
    let code = to_dt(d)?;
    let body: Vec<String> = code.iter().map(|e| e.to_string()).collect();
    Ok(format!("DT[{}]", body.join(",")))
}

/// The DT code read off by walking from the given starting arc.
fn code_from(d: &Diagram, base: Dart) -> Vec<i64> {
    let c = d.crossings();
    // (number, is_over) per crossing, in passage order.
    let mut numbers: Vec<Vec<(usize, bool)>> = vec![Vec::with_capacity(2); c];
    for (idx, out) in d.strand_cycle(base).into_iter().enumerate() {
        let entering = d.mate(out);
        numbers[super::crossing_of(entering)].push((idx + 1, super::slot_of(entering) == 2));
    }
    let mut code = vec![0i64; c];
    for pair in &numbers {
        debug_assert_eq!(pair.len(), 2, "each crossing is passed exactly twice");
        let (p, q) = (pair[0], pair[1]);
        // One passage number is odd, the other even.
        let (odd, (even, even_over)) = if p.0 % 2 == 1 { (p.0, q) } else { (q.0, p) };
        debug_assert_eq!((odd + even) % 2, 1, "passage numbers at a crossing differ in parity");
        code[(odd - 1) / 2] = if even_over { -(even as i64) } else { even as i64 };
    }
    code
}

fn dt_key(code: &[i64]) -> Vec<(u64, bool)> {
    code.iter().map(|&e| (e.unsigned_abs(), e < 0)).collect()
}

/// Slot of the outgoing dart of a passage with the given role.
fn out_slot(over: bool, sign: Sign) -> usize {
    match (over, sign) {
        (true, _) => 0,
        (false, Sign::Positive) => 1,
        (false, Sign::Negative) => 3,
    }
}

/// Slot of the incoming dart of a passage with the given role.
fn in_slot(over: bool, sign: Sign) -> usize {
    match (over, sign) {
        (true, _) => 2,
        (false, Sign::Positive) => 3,
        (false, Sign::Negative) => 1,
    }
}

/// Count faces of the rotation system given by `mate` (cycles of
/// rotate-after-mate), reusing a scratch visited buffer.
fn face_count(mate: &[Dart], visited: &mut [bool]) -> usize {
    visited.fill(false);
    let mut faces = 0;
    for start in 0..mate.len() {
        if visited[start] {
            continue;
        }
        faces += 1;
        let mut dd = start;
        while !visited[dd] {
            visited[dd] = true;
            dd = super::rot_ccw(mate[dd]);
        }
    }
    faces
}
