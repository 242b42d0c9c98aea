//! Generators for standard diagram families.
//!
//! * [`torus_2_2p`] — the positive *antiparallel clasp chain* diagram of the
//!   `(2,2p)` torus link: `2p` positive crossings, two antiparallel strands,
//!   `2p` Seifert/A-circles arranged in a cycle.  This is the diagram whose
//!   A-state graph is the `2p`-cycle (Balanced of type 1).
//! * [`closed_braid`] — closures of positive braid words; `sigma_1^k` on two
//!   strands gives the *parallel* diagrams of `(2,k)` torus links (the
//!   positive trefoil for `k = 3`), whose A-state graphs are multi-edges.
//! * [`pretzel`] — positive pretzel diagrams `P(p,q,r)` with non-positive
//!   parameters (negative entries are counterclockwise twist columns); a
//!   single zero parameter degenerates to a connected sum of two torus
//!   diagrams.
//!
//! All generators produce only positive crossings and validate planarity.

use super::{dart, Dart, Diagram, DiagramError, Sign};

/// The positive clasp-chain diagram of the torus link `T(2, 2p)`.
///
/// Crossings `0..2p` form a cycle; one strand visits them in increasing
/// order (over at even indices), the other in decreasing order.  For `p = 1`
/// this is the standard positive Hopf link diagram.
pub fn torus_2_2p(p: usize) -> Diagram {
    assert!(p >= 1, "torus_2_2p requires p >= 1");
    let c = 2 * p;
    let mut mate = vec![usize::MAX; 4 * c];
    let join = |mate: &mut Vec<Dart>, a: Dart, b: Dart| {
        debug_assert_eq!(mate[a], usize::MAX);
        debug_assert_eq!(mate[b], usize::MAX);
        mate[a] = b;
        mate[b] = a;
    };
    for i in 0..c {
        let next = (i + 1) % c;
        let prev = (i + c - 1) % c;
        if i % 2 == 0 {
            // First strand: over here, under at the next crossing.
            join(&mut mate, dart(i, 0), dart(next, 3));
            // Second strand: under here, over at the previous crossing.
            join(&mut mate, dart(i, 1), dart(prev, 2));
        } else {
            join(&mut mate, dart(i, 1), dart(next, 2));
            join(&mut mate, dart(i, 0), dart(prev, 3));
        }
    }
    let d = Diagram::from_parts_unchecked(vec![Sign::Positive; c], mate, 0);
    debug_assert!(d.validate().is_ok());
    d
}

/// Closure of a positive braid word on `strands` strands.
///
/// Letters are 1-based: letter `j` is the positive generator crossing lanes
/// `j-1` and `j` (the right strand passes over).  Lanes never visited by a
/// letter close into free loops, making the result split.
pub fn closed_braid(strands: usize, word: &[usize]) -> Result<Diagram, DiagramError> {
    if strands < 2 {
        return Err(DiagramError::Precondition("braid closure needs at least 2 strands".into()));
    }
    for &letter in word {
        if letter == 0 || letter >= strands {
            return Err(DiagramError::Precondition(format!(
                "braid letter {letter} out of range 1..{}",
                strands - 1
            )));
        }
    }
    let c = word.len();
    let mut mate = vec![usize::MAX; 4 * c];
    let join = |mate: &mut Vec<Dart>, a: Dart, b: Dart| {
        mate[a] = b;
        mate[b] = a;
    };
    // Per lane: the outgoing dart hanging below, and the first incoming dart
    // awaiting the closure arc.
    let mut hang: Vec<Option<Dart>> = vec![None; strands];
    let mut pending: Vec<Option<Dart>> = vec![None; strands];
    for (x, &letter) in word.iter().enumerate() {
        let (left, right) = (letter - 1, letter);
        // Left lane enters under (slot 3), right lane enters over (slot 2);
        // the over strand exits left (slot 0), under exits right (slot 1).
        let under_in = dart(x, 3);
        let over_in = dart(x, 2);
        match hang[left] {
            Some(d) => join(&mut mate, d, under_in),
            None => pending[left] = Some(under_in),
        }
        match hang[right] {
            Some(d) => join(&mut mate, d, over_in),
            None => pending[right] = Some(over_in),
        }
        hang[left] = Some(dart(x, 0));
        hang[right] = Some(dart(x, 1));
    }
    let mut free_loops = 0;
    for lane in 0..strands {
        match (hang[lane], pending[lane]) {
            (Some(out), Some(inc)) => join(&mut mate, out, inc),
            (None, None) => free_loops += 1,
            _ => unreachable!("hang and pending are set together"),
        }
    }
    let d = Diagram::from_parts_unchecked(vec![Sign::Positive; c], mate, free_loops);
    d.validate()?;
    Ok(d)
}

/// Positive pretzel diagram `P(p, q, r)` for non-positive parameters.
///
/// Negative parameters are vertical twist columns of positive crossings with
/// antiparallel strands; the three columns hang between two hub strands.  A
/// single zero parameter degenerates to the connected sum of the two torus
/// diagrams `T(2, |q|) # T(2, |r|)` (even parameters as clasp chains, odd as
/// braid closures); two or more zeros are rejected.
pub fn pretzel(p: i64, q: i64, r: i64) -> Result<Diagram, DiagramError> {
    let params = [p, q, r];
    if params.iter().any(|&v| v > 0) {
        return Err(DiagramError::Precondition(
            "pretzel parameters must be non-positive for a positive diagram".into(),
        ));
    }
    let zeros = params.iter().filter(|&&v| v == 0).count();
    if zeros >= 2 {
        return Err(DiagramError::Precondition(
            "pretzel with two zero parameters is a split link".into(),
        ));
    }
    if zeros == 1 {
        let mut nz = params.iter().filter(|&&v| v != 0).map(|&v| (-v) as usize);
        let (a, b) = (nz.next().expect("two nonzero"), nz.next().expect("two nonzero"));
        let da = torus_twist(a);
        let db = torus_twist(b);
        return da.connected_sum(da.out_darts()[0], &db, db.out_darts()[0]);
    }
    let lens = [(-p) as usize, (-q) as usize, (-r) as usize];
    let offsets = [0usize, lens[0], lens[0] + lens[1]];
    let c: usize = lens.iter().sum();
    // Try the eight ways of matching column ends to the closure arcs; the
    // unique planar one wins.
    for flips in 0..8u32 {
        let mut mate = vec![usize::MAX; 4 * c];
        let mut ok = true;
        let join = |mate: &mut Vec<Dart>, a: Dart, b: Dart, ok: &mut bool| {
            if mate[a] != usize::MAX || mate[b] != usize::MAX || a == b {
                *ok = false;
                return;
            }
            mate[a] = b;
            mate[b] = a;
        };
        // Column-internal arcs.
        for col in 0..3 {
            let base = offsets[col];
            for j in 0..lens[col].saturating_sub(1) {
                let (x, y) = (base + j, base + j + 1);
                if j % 2 == 0 {
                    join(&mut mate, dart(x, 0), dart(y, 3), &mut ok); // first strand down
                    join(&mut mate, dart(y, 0), dart(x, 3), &mut ok); // second strand up
                } else {
                    join(&mut mate, dart(x, 1), dart(y, 2), &mut ok);
                    join(&mut mate, dart(y, 1), dart(x, 2), &mut ok);
                }
            }
        }
        // Exposed ends per column.  The first strand enters at the top, the
        // second exits there; each crossing swaps the two sides, so whether
        // the first strand leaves bottom-left or bottom-right depends on the
        // column length's parity.  The flip bit mirrors the whole column.
        let ends: Vec<[Dart; 4]> = (0..3)
            .map(|col| {
                let base = offsets[col];
                let len = lens[col];
                let last = base + len - 1;
                let a_in = dart(base, 2);
                let b_out = dart(base, 1);
                let (a_out, b_in) = if (len - 1) % 2 == 0 {
                    (dart(last, 0), dart(last, 3))
                } else {
                    (dart(last, 1), dart(last, 2))
                };
                let (mut top, mut bottom) = ((a_in, b_out), (a_out, b_in));
                if len % 2 == 1 {
                    bottom = (bottom.1, bottom.0);
                }
                if flips & (1 << col) != 0 {
                    top = (top.1, top.0);
                    bottom = (bottom.1, bottom.0);
                }
                // [top-left, top-right, bottom-left, bottom-right]
                [top.0, top.1, bottom.0, bottom.1]
            })
            .collect();
        // Closure arcs: adjacent tops/bottoms, and outer arcs joining the
        // outside ends of columns 0 and 2.
        for i in 0..2 {
            join(&mut mate, ends[i][1], ends[i + 1][0], &mut ok); // top
            join(&mut mate, ends[i][3], ends[i + 1][2], &mut ok); // bottom
        }
        join(&mut mate, ends[0][0], ends[2][1], &mut ok);
        join(&mut mate, ends[0][2], ends[2][3], &mut ok);
        if !ok || mate.iter().any(|&m| m == usize::MAX) {
            continue;
        }
        let d = Diagram::from_parts_unchecked(vec![Sign::Positive; c], mate, 0);
        if d.validate().is_ok() && !d.is_split() {
            return Ok(d);
        }
    }
    Err(DiagramError::Precondition(format!(
        "no planar positive pretzel embedding found for ({p}, {q}, {r})"
    )))
}

/// Positive diagram of the two-strand torus link/knot `T(2, k)`: the clasp
/// chain for even `k`, the braid closure for odd `k`.
fn torus_twist(k: usize) -> Diagram {
    assert!(k >= 1);
    if k % 2 == 0 {
        torus_2_2p(k / 2)
    } else {
        closed_braid(2, &vec![1; k]).expect("2-strand braid closure is planar")
    }
}
