//! Combinatorial-map isomorphism of diagrams.
//!
//! Two diagrams are isomorphic when a sign-preserving bijection of crossings
//! carries one dart structure onto the other.  Because slot labels encode
//! orientation and over/under roles (slot 0 is always the outgoing over
//! dart), any isomorphism of oriented signed diagrams is *slot-rigid*: dart
//! `4x + s` must map to `4φ(x) + s`.  Isomorphism therefore reduces to a
//! search over the choice of image for a single base crossing per connected
//! component, and a canonical form is obtained by minimizing a breadth-first
//! relabeling over all base choices.
//!
//! Used by tests as the notion of diagram equality: codec round trips
//! reproduce the diagram only up to crossing relabeling.

use super::{crossing_of, dart, slot_of, Diagram, Sign};

/// Breadth-first signature of the component containing `root`, with local
/// ids assigned in discovery order.  Deterministic given the root.
fn bfs_signature(d: &Diagram, root: usize, scratch: &mut [Option<u32>]) -> Vec<u32> {
    for v in scratch.iter_mut() {
        *v = None;
    }
    let mut order: Vec<usize> = vec![root];
    scratch[root] = Some(0);
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for s in 0..4 {
            let y = crossing_of(d.mate(dart(x, s)));
            if scratch[y].is_none() {
                scratch[y] = Some(order.len() as u32);
                order.push(y);
            }
        }
    }
    let mut sig = Vec::with_capacity(order.len() * 5);
    for &x in &order {
        for s in 0..4 {
            let m = d.mate(dart(x, s));
            let local = scratch[crossing_of(m)].expect("mate stays in component");
            sig.push(local * 4 + slot_of(m) as u32);
        }
        sig.push(match d.sign(x) {
            Sign::Positive => u32::MAX,
            Sign::Negative => u32::MAX - 1,
        });
    }
    sig
}

/// Canonical form: per shadow component the minimum breadth-first signature
/// over all base crossings, components sorted, plus the free-loop count.
/// Two diagrams are isomorphic iff their canonical forms are equal.
pub fn canonical_form(d: &Diagram) -> Vec<Vec<u32>> {
    let c = d.crossings();
    let mut scratch = vec![None; c];
    let mut component = vec![usize::MAX; c];
    let mut n_comp = 0;
    for start in 0..c {
        if component[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        component[start] = n_comp;
        while let Some(x) = stack.pop() {
            for s in 0..4 {
                let y = crossing_of(d.mate(dart(x, s)));
                if component[y] == usize::MAX {
                    component[y] = n_comp;
                    stack.push(y);
                }
            }
        }
        n_comp += 1;
    }
    let mut best: Vec<Option<Vec<u32>>> = vec![None; n_comp];
    for x in 0..c {
        let sig = bfs_signature(d, x, &mut scratch);
        let slot = &mut best[component[x]];
        if slot.as_ref().is_none_or(|b| sig < *b) {
            *slot = Some(sig);
        }
    }
    let mut parts: Vec<Vec<u32>> = best.into_iter().map(|b| b.unwrap()).collect();
    parts.sort();
    parts.push(vec![d.free_loops() as u32]);
    parts
}

/// Whether two diagrams differ only by a relabeling of crossings.
pub fn isomorphic(a: &Diagram, b: &Diagram) -> bool {
    a.crossings() == b.crossings()
        && a.free_loops() == b.free_loops()
        && canonical_form(a) == canonical_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::testutil::{hopf_positive, kink, trefoil};
    use crate::diagram::{generate, Sign};

    /// Relabel crossings of `d` by the permutation `perm` (new index of old
    /// crossing `x` is `perm[x]`).
    fn permute(d: &Diagram, perm: &[usize]) -> Diagram {
        let c = d.crossings();
        let mut signs = vec![Sign::Positive; c];
        let mut mate = vec![0usize; 4 * c];
        for x in 0..c {
            signs[perm[x]] = d.sign(x);
            for s in 0..4 {
                let m = d.mate(dart(x, s));
                mate[dart(perm[x], s)] = dart(perm[crossing_of(m)], slot_of(m));
            }
        }
        Diagram::from_parts(signs, mate, d.free_loops()).unwrap()
    }

    #[test]
    fn relabeling_is_isomorphic() {
        let t = trefoil();
        // The cyclic shift is an automorphism of this 3-symmetric diagram;
        // a transposition is not, so it changes the representation.
        assert_eq!(t, permute(&t, &[2, 0, 1]));
        let p = permute(&t, &[1, 0, 2]);
        assert_ne!(t, p);
        assert!(isomorphic(&t, &p));
        assert!(isomorphic(&t, &t));
    }

    #[test]
    fn mirror_is_not_isomorphic() {
        let t = trefoil();
        assert!(!isomorphic(&t, &t.mirror()));
        let k = kink(Sign::Positive);
        assert!(!isomorphic(&k, &kink(Sign::Negative)));
    }

    #[test]
    fn different_diagrams_of_equal_size_differ() {
        let chain = generate::torus_2_2p(2);
        let braid = generate::closed_braid(2, &[1, 1, 1, 1]).unwrap();
        assert_eq!(chain.crossings(), braid.crossings());
        assert!(!isomorphic(&chain, &braid));
    }

    #[test]
    fn hopf_relabeled() {
        let h = hopf_positive();
        let p = permute(&h, &[1, 0]);
        assert!(isomorphic(&h, &p));
    }

    #[test]
    fn crossing_free_diagrams() {
        assert!(isomorphic(&Diagram::unknot(), &Diagram::unknot()));
        let mut two = Diagram::unknot();
        two.add_free_loop();
        assert!(!isomorphic(&Diagram::unknot(), &two));
    }
}
