//! Planar-diagram (PD) notation.
//!
//! A crossing is written `X[a,b,c,d]`: the four arc labels counterclockwise
//! around the crossing starting from the *incoming under-strand* arc `a`, so
//! the under-strand runs `a -> c`.  At a positive crossing the over-strand
//! runs `d -> b` (labels sit at slots `3,0,1,2`), at a negative one `b -> d`
//! (slots `1,2,3,0`).
//!
//! Parsing must recover crossing signs from the labels alone.  Under-strand
//! positions have fixed directions (`a` in, `c` out); each arc joins one
//! outgoing and one incoming end, which turns the over-strand positions into
//! parity constraints on the signs.  These are propagated breadth-first;
//! contradictions are reported as [`DiagramError::PdInconsistent`].  A
//! constraint component that never passes under any crossing (e.g. a strand
//! lying entirely on top of the rest of the link) is unconstrained; such
//! components deterministically take the sign assignment that makes their
//! lowest-numbered crossing positive.
//!
//! Serialization labels arcs `1..=2c` in strand order, starting each link
//! component at its lowest outgoing dart.  Diagrams with free loops (e.g.
//! the zero-crossing unknot) have no PD representation.

use super::{dart, Dart, Diagram, DiagramError, Sign};

/// One `X[a,b,c,d]` entry, as labels in PD order.
type PdEntry = [i64; 4];

/// Parse PD notation into a diagram.
///
/// Accepts an optional `PD[...]` wrapper around a comma- or
/// whitespace-separated list of `X[a,b,c,d]` entries.  Rejects split
/// diagrams and label multisets that are not perfect pairings.
pub fn parse_pd(text: &str) -> Result<Diagram, DiagramError> {
    let entries = tokenize(text)?;
    if entries.is_empty() {
        return Err(DiagramError::EmptyInput);
    }
    let c = entries.len();
    // Occurrences of each label as (crossing, position 0..4 for a..d).
    let mut occ: std::collections::BTreeMap<i64, Vec<(usize, usize)>> = Default::default();
    for (x, entry) in entries.iter().enumerate() {
        for (pos, &label) in entry.iter().enumerate() {
            occ.entry(label).or_default().push((x, pos));
        }
    }
    for (&label, ends) in &occ {
        if ends.len() != 2 {
            return Err(DiagramError::PdLabelCount { label, count: ends.len() });
        }
    }

    let signs = resolve_signs(c, &occ)?;

    // With signs fixed, each occurrence maps to a dart.
    let mut mate = vec![usize::MAX; 4 * c];
    for ends in occ.values() {
        let (d0, out0) = occurrence_dart(ends[0], signs[ends[0].0]);
        let (d1, out1) = occurrence_dart(ends[1], signs[ends[1].0]);
        if out0 == out1 {
            // Two outgoing or two incoming ends: the sign resolution would
            // only allow this for an inconsistent code.
            return Err(DiagramError::PdInconsistent);
        }
        mate[d0] = d1;
        mate[d1] = d0;
    }
    let d = Diagram::from_parts(signs, mate, 0)?;
    if d.is_split() {
        return Err(DiagramError::SplitInput);
    }
    Ok(d)
}

/// Serialize a diagram to PD notation.
///
/// Errors if the diagram has free loops (PD entries exist per crossing
/// only).  Split diagrams without free loops serialize fine.
pub fn to_pd_text(d: &Diagram) -> Result<String, DiagramError> {
    if d.free_loops() > 0 {
        return Err(DiagramError::Unrepresentable {
            format: "PD",
            reason: "free loops have no crossings to carry labels",
        });
    }
    if d.crossings() == 0 {
        return Err(DiagramError::EmptyInput);
    }
    // Arc labels keyed by outgoing dart, assigned along each strand.
    let mut label = vec![0i64; d.darts()];
    let mut next = 1i64;
    for rep in d.component_reps() {
        for out in d.strand_cycle(rep) {
            label[out] = next;
            next += 1;
        }
    }
    let label_at = |dd: Dart| {
        if d.is_out(dd) {
            label[dd]
        } else {
            label[d.mate(dd)]
        }
    };
    let mut parts = Vec::with_capacity(d.crossings());
    for x in 0..d.crossings() {
        let slots: [usize; 4] = match d.sign(x) {
            Sign::Positive => [3, 0, 1, 2],
            Sign::Negative => [1, 2, 3, 0],
        };
        let vals: Vec<String> =
            slots.iter().map(|&s| label_at(dart(x, s)).to_string()).collect();
        parts.push(format!("X[{}]", vals.join(",")));
    }
    Ok(format!("PD[{}]", parts.join(", ")))
}

/// Split the text into `X[..]` entries.
fn tokenize(text: &str) -> Result<Vec<PdEntry>, DiagramError> {
    let mut s = text.trim();
    if let Some(rest) = s.strip_prefix("PD[").or_else(|| s.strip_prefix("PD [")) {
        s = rest
            .strip_suffix(']')
            .ok_or_else(|| DiagramError::PdSyntax("unclosed PD[".into()))?;
    }
    let mut entries = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let rest2 = rest
            .strip_prefix('X')
            .or_else(|| rest.strip_prefix('x'))
            .ok_or_else(|| DiagramError::PdSyntax(format!("expected X[..], found {rest:.20}")))?;
        let rest3 = rest2
            .trim_start()
            .strip_prefix('[')
            .ok_or_else(|| DiagramError::PdSyntax("expected [ after X".into()))?;
        let close = rest3
            .find(']')
            .ok_or_else(|| DiagramError::PdSyntax("unclosed X[".into()))?;
        let body = &rest3[..close];
        let labels: Vec<i64> = body
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<Result<_, _>>()
            .map_err(|e| DiagramError::PdSyntax(format!("bad label in X[{body}]: {e}")))?;
        let entry: PdEntry = labels
            .try_into()
            .map_err(|_| DiagramError::PdSyntax(format!("X[{body}] needs 4 labels")))?;
        if entry.iter().any(|&l| l <= 0) {
            return Err(DiagramError::PdSyntax("labels must be positive".into()));
        }
        entries.push(entry);
        rest = rest3[close + 1..].trim_start().trim_start_matches(',').trim_start();
    }
    Ok(entries)
}

/// Direction of a PD position: `Some(true)` = always outgoing, `Some(false)`
/// = always incoming, `None` = depends on the crossing sign.
fn fixed_direction(pos: usize) -> Option<bool> {
    match pos {
        0 => Some(false), // a: under in
        2 => Some(true),  // c: under out
        _ => None,        // b, d: over strand
    }
}

/// Whether the position is outgoing under the given sign.
fn is_out_at(pos: usize, sign: Sign) -> bool {
    match (pos, sign) {
        (0, _) => false,
        (2, _) => true,
        (1, s) => s == Sign::Positive, // b: over out iff positive
        (3, s) => s == Sign::Negative, // d: over out iff negative
        _ => unreachable!("PD positions are 0..4"),
    }
}

/// The dart at a PD occurrence, plus whether it is outgoing.
fn occurrence_dart((x, pos): (usize, usize), sign: Sign) -> (Dart, bool) {
    let slot = match sign {
        Sign::Positive => [3, 0, 1, 2][pos],
        Sign::Negative => [1, 2, 3, 0][pos],
    };
    (dart(x, slot), is_out_at(pos, sign))
}

/// Determine crossing signs by propagating arc-direction constraints.
fn resolve_signs(
    c: usize,
    occ: &std::collections::BTreeMap<i64, Vec<(usize, usize)>>,
) -> Result<Vec<Sign>, DiagramError> {
    // For crossing x, `forced[x]` is Some(sign) once known; `xor[x]` lists
    // (other, parity) meaning sign(other) = sign(x) flipped iff parity.
    let mut forced: Vec<Option<Sign>> = vec![None; c];
    let mut xor: Vec<Vec<(usize, bool)>> = vec![Vec::new(); c];
    let force = |forced: &mut Vec<Option<Sign>>, x: usize, s: Sign| -> Result<(), DiagramError> {
        match forced[x] {
            None => {
                forced[x] = Some(s);
                Ok(())
            }
            Some(prev) if prev == s => Ok(()),
            Some(_) => Err(DiagramError::PdInconsistent),
        }
    };
    for ends in occ.values() {
        let (&(x, p), &(y, q)) = (&ends[0], &ends[1]);
        match (fixed_direction(p), fixed_direction(q)) {
            (Some(dp), Some(dq)) => {
                if dp == dq {
                    return Err(DiagramError::PdInconsistent);
                }
            }
            (Some(dp), None) => {
                // Position q must take the opposite direction of dp.
                let want_out = !dp;
                let s = sign_making(q, want_out);
                force(&mut forced, y, s)?;
            }
            (None, Some(dq)) => {
                let s = sign_making(p, !dq);
                force(&mut forced, x, s)?;
            }
            (None, None) => {
                // Exactly one of the two over-ends is outgoing.  Positions
                // b/b and d/d are outgoing at opposite signs; b/d at equal
                // signs.
                let flip = p == q;
                xor[x].push((y, !flip));
                xor[y].push((x, !flip));
            }
        }
    }
    // Propagate XOR constraints from forced seeds; unconstrained components
    // default their lowest crossing to positive.
    let mut queue = std::collections::VecDeque::new();
    for x in 0..c {
        if forced[x].is_some() {
            queue.push_back(x);
        }
    }
    loop {
        while let Some(x) = queue.pop_front() {
            let sx = forced[x].expect("queued crossings are forced");
            for &(y, same) in &xor[x] {
                let want = if same { sx } else { sx.flip() };
                match forced[y] {
                    None => {
                        forced[y] = Some(want);
                        queue.push_back(y);
                    }
                    Some(prev) if prev == want => {}
                    Some(_) => return Err(DiagramError::PdInconsistent),
                }
            }
        }
        match forced.iter().position(|f| f.is_none()) {
            Some(x) => {
                forced[x] = Some(Sign::Positive);
                queue.push_back(x);
            }
            None => break,
        }
    }
    Ok(forced.into_iter().map(|f| f.expect("all crossings resolved")).collect())
}

/// The crossing sign that makes over-position `pos` outgoing (or not).
fn sign_making(pos: usize, want_out: bool) -> Sign {
    match (pos, want_out) {
        (1, true) | (3, false) => Sign::Positive,
        (1, false) | (3, true) => Sign::Negative,
        _ => unreachable!("only over positions are sign-dependent"),
    }
}

#[cfg(test)]
mod tests {
    use super::super::generate::{closed_braid, torus_2_2p};
    use super::super::testutil::trefoil;
    use super::*;

    /// The Knot Atlas PD code of the (left-handed) trefoil.
    const LEFT_TREFOIL: &str = "PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]";

    #[test]
    fn parses_left_trefoil() {
        let d = parse_pd(LEFT_TREFOIL).unwrap();
        let st = d.stats();
        assert_eq!(st.crossings, 3);
        assert_eq!(st.negative_crossings, 3);
        assert_eq!(st.writhe, -3);
        assert_eq!(st.components, 1);
        assert_eq!(st.a_state_circles, 3);
        assert_eq!(st.b_state_circles, 2);
        assert!(d.is_reduced());
    }

    #[test]
    fn round_trips_standard_diagrams() {
        for d in [trefoil(), torus_2_2p(2), closed_braid(2, &[1, 1, 1, 1]).unwrap()] {
            let text = to_pd_text(&d).unwrap();
            let back = parse_pd(&text).unwrap();
            assert_eq!(back, d, "round-trip changed the diagram for {text}");
        }
        let left = parse_pd(LEFT_TREFOIL).unwrap();
        assert_eq!(parse_pd(&to_pd_text(&left).unwrap()).unwrap(), left);
    }

    #[test]
    fn serializer_output_is_stable() {
        // The braid-closure trefoil: strand labels 1..6 along the knot.
        let d = closed_braid(2, &[1, 1, 1]).unwrap();
        let text = to_pd_text(&d).unwrap();
        let back = parse_pd(&text).unwrap();
        assert_eq!(back, d);
        assert!(text.starts_with("PD[X["));
        assert_eq!(text.matches("X[").count(), 3);
    }

    #[test]
    fn rejects_bad_labels() {
        assert!(matches!(
            parse_pd("X[1,2,3,5] X[2,3,4,4]"),
            Err(DiagramError::PdLabelCount { label: 1, count: 1 })
        ));
        assert!(matches!(parse_pd(""), Err(DiagramError::EmptyInput)));
        assert!(matches!(parse_pd("X[1,2,3]"), Err(DiagramError::PdSyntax(_))));
        assert!(matches!(parse_pd("Y[1,2,3,4]"), Err(DiagramError::PdSyntax(_))));
    }

    #[test]
    fn rejects_inconsistent_orientation() {
        // Label 1 joins two under-in positions: no orientation works.
        assert!(matches!(
            parse_pd("X[1,2,3,4] X[1,4,2,3]"),
            Err(DiagramError::PdInconsistent) | Err(DiagramError::PdLabelCount { .. })
        ));
    }

    #[test]
    fn rejects_split_pd() {
        // Two disjoint one-crossing kinks.
        let kink_pair = "X[1,1,2,2] X[3,3,4,4]";
        assert!(matches!(parse_pd(kink_pair), Err(DiagramError::SplitInput)));
    }

    #[test]
    fn unknot_has_no_pd() {
        assert!(matches!(
            to_pd_text(&Diagram::unknot()),
            Err(DiagramError::Unrepresentable { .. })
        ));
    }
}
