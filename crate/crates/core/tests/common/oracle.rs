//! Slow reference computations used to cross-check the library.

use std::collections::BTreeSet;

use legch::algebra::Differential;
use legch::front::{FrontDiagram, Gen, GradedAlphabet};
use legch::poly::LaurentPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every subset of degree-0 crossings on which each `d x` has an even
/// number of words with all factors in the subset.
pub fn brute_force_augmentations(d: &Differential, a: &GradedAlphabet) -> Vec<BTreeSet<Gen>> {
    let vars = a.degree0();
    assert!(vars.len() <= 24, "brute force over {} crossings", vars.len());
    let mut out = Vec::new();
    for mask in 0u32..1 << vars.len() {
        let set: BTreeSet<Gen> = (0..vars.len()).filter(|i| mask >> i & 1 == 1).map(|i| vars[i]).collect();
        let ok = a.gens().all(|g| {
            let hits = d.of(g).words().filter(|w| w.factors().iter().all(|x| set.contains(x))).count();
            hits % 2 == 0
        });
        if ok {
            out.push(set);
        }
    }
    out
}

/// GF(2) rank by row reduction on byte rows.
pub fn rank(mut rows: Vec<Vec<u8>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] == 1) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] == 1 {
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Linear part of `d` after the substitution `x -> x + eps(x)`: the
/// coefficient of the `i`-th factor of a word is the product of `eps` over
/// the other factors.
pub fn linearized_matrix(d: &Differential, a: &GradedAlphabet, eps: &BTreeSet<Gen>) -> Vec<Vec<u8>> {
    let n = a.len();
    let mut m = vec![vec![0u8; n]; n];
    for c in a.gens() {
        for w in d.of(c).words() {
            let f = w.factors();
            for i in 0..f.len() {
                if (0..f.len()).all(|j| j == i || eps.contains(&f[j])) {
                    m[f[i].index()][c.index()] ^= 1;
                }
            }
        }
    }
    m
}

/// Poincare polynomial of the linearized homology, from ranks of the
/// degree blocks of [`linearized_matrix`].
pub fn poincare(d: &Differential, a: &GradedAlphabet, eps: &BTreeSet<Gen>) -> LaurentPoly {
    let m = linearized_matrix(d, a, eps);
    let degrees: BTreeSet<i32> = a.gens().map(|g| a.degree(g)).collect();
    let block_rank = |k: i32| {
        let cols: Vec<Gen> = a.of_degree(k);
        let rows: Vec<Gen> = a.of_degree(k - 1);
        let block: Vec<Vec<u8>> = rows.iter().map(|r| cols.iter().map(|c| m[r.index()][c.index()]).collect()).collect();
        rank(block) as i64
    };
    LaurentPoly::from_coeffs(degrees.iter().map(|&k| (k, a.of_degree(k).len() as i64 - block_rank(k) - block_rank(k + 1))))
}

/// `count` random plat fronts with at most `max_crossings` crossings that
/// close up to a single component.
pub fn random_plats(seed: u64, count: usize, max_crossings: usize) -> Vec<FrontDiagram> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let strands = 2 * rng.gen_range(1..=4);
        let len = if strands == 2 { 0 } else { rng.gen_range(0..=max_crossings) };
        let word: Vec<usize> = (0..len).map(|_| rng.gen_range(1..strands)).collect();
        if let Ok(f) = FrontDiagram::plat(strands, &word) {
            out.push(f);
        }
    }
    out
}

/// Augmentation counts of `K_n` from the level rule: every level is one of
/// two ample or three sparse subsets, and no two sparse levels are adjacent.
pub fn level_rule_count(n: usize) -> u64 {
    let (mut ample, mut sparse) = (2u64, 3u64);
    for _ in 1..n {
        (ample, sparse) = (2 * (ample + sparse), 3 * ample);
    }
    ample + sparse
}
