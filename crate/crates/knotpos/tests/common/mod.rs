//! Shared diagram corpora for the integration suites.
//!
//! Every random choice flows from a caller-supplied ChaCha8 seed, so a
//! failing case reproduces bit-for-bit from the test output alone.

#![allow(dead_code)]

use knotpos::diagram::generate::{closed_braid, pretzel, torus_2_2p};
use knotpos::Diagram;
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Closure of a random positive braid word in which every generator occurs
/// at least twice.  The result is connected, reduced, positive, and
/// A-adequate, with `word length == crossings <= max_crossings`.
pub fn random_positive_braid<R: Rng>(rng: &mut R, max_crossings: usize) -> Diagram {
    assert!(max_crossings >= 4, "need room for two letters per generator");
    let strands = rng.gen_range(2..=4.min(max_crossings / 2));
    let mut word: Vec<usize> = Vec::new();
    for letter in 1..strands {
        word.push(letter);
        word.push(letter);
    }
    let target = rng.gen_range(word.len()..=max_crossings);
    while word.len() < target {
        word.push(rng.gen_range(1..strands));
    }
    word.shuffle(rng);
    closed_braid(strands, &word).expect("random positive braid closure is valid")
}

/// `count` seeded random positive braid closures with at most
/// `max_crossings` crossings each.
pub fn random_corpus(seed: u64, count: usize, max_crossings: usize) -> Vec<Diagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_positive_braid(&mut rng, max_crossings)).collect()
}

/// Named generated fixtures: clasp chains, parallel braids, pretzels, and
/// doubled-crossing (Burdened) variants.  All positive, connected, reduced,
/// and at most 14 crossings.
pub fn generated_corpus() -> Vec<(String, Diagram)> {
    let mut v: Vec<(String, Diagram)> = Vec::new();
    for p in 1..=5 {
        v.push((format!("torus_2_{}", 2 * p), torus_2_2p(p)));
    }
    for k in 2..=7 {
        let word = vec![1; k];
        v.push((format!("braid2_1x{k}"), closed_braid(2, &word).unwrap()));
    }
    for (p, q, r) in [
        (-2, -2, -2),
        (-2, -2, -4),
        (-2, -4, -4),
        (-4, -4, -4),
        (-1, -1, -1),
        (-1, -1, -3),
        (-1, -3, -3),
        (-3, -3, -3),
        (-1, -3, -5),
        (-1, -1, -5),
        (-2, -2, -6),
        (0, -2, -2),
        (0, -3, -3),
    ] {
        v.push((format!("pretzel_{p}_{q}_{r}"), pretzel(p, q, r).unwrap()));
    }
    for (name, d) in [
        ("chain4_doubled", torus_2_2p(2).double_crossing(0).unwrap()),
        ("chain6_doubled", torus_2_2p(3).double_crossing(0).unwrap()),
        ("chain4_doubled_twice", torus_2_2p(2).double_crossing(0).unwrap().double_crossing(0).unwrap()),
        ("theta_doubled", pretzel(-2, -2, -2).unwrap().double_crossing(0).unwrap()),
        (
            "theta_doubled_twice",
            pretzel(-2, -2, -2).unwrap().double_crossing(0).unwrap().double_crossing(0).unwrap(),
        ),
        ("trefoil_doubled", closed_braid(2, &[1, 1, 1]).unwrap().double_crossing(0).unwrap()),
    ] {
        v.push((name.to_string(), d));
    }
    for (strands, word) in [
        (3usize, vec![1usize, 1, 2, 2]),
        (3, vec![1, 1, 2, 2, 1, 1]),
        (3, vec![1, 2, 1, 2, 1, 2]),
        (3, vec![1, 1, 1, 2, 2, 2]),
        (4, vec![1, 1, 2, 2, 3, 3]),
    ] {
        let tag: String = word.iter().map(|l| l.to_string()).collect();
        v.push((format!("braid{strands}_{tag}"), closed_braid(strands, &word).unwrap()));
    }
    v
}

/// The generated fixtures plus `extra` seeded random braid closures, all
/// with at most `max_crossings` crossings.
pub fn mixed_corpus(seed: u64, extra: usize, max_crossings: usize) -> Vec<(String, Diagram)> {
    let mut v = generated_corpus();
    v.retain(|(_, d)| d.crossings() <= max_crossings);
    for (i, d) in random_corpus(seed, extra, max_crossings).into_iter().enumerate() {
        v.push((format!("random_{seed:x}_{i}"), d));
    }
    v
}
