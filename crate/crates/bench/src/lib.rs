//! Fixtures for the criterion benchmarks.

use hornlearn::{random_formula, GenConfig, HornFormula, VarSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A seeded target of the standard shape.
pub fn target(n: usize, m: usize) -> HornFormula {
    random_formula(&GenConfig::standard(n, m, (n * 1000 + m) as u64)).expect("valid config")
}

/// `count` seeded start sets over `n` variables, each variable present with
/// probability one quarter.
pub fn start_sets(n: usize, count: usize) -> Vec<VarSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    (0..count)
        .map(|_| {
            let mut s = VarSet::empty(n);
            for i in 0..n {
                if rng.gen_bool(0.25) {
                    s.insert(i);
                }
            }
            s
        })
        .collect()
}

/// `x(i) -> x(i+1)` for every `i`, listed last link first, so each pass
/// of round-based chaining fires a single implication.
pub fn reversed_chain(n: usize) -> HornFormula {
    HornFormula::from_pairs(n, (0..n - 1).rev().map(|i| (vec![i], vec![i + 1])))
        .expect("valid chain")
}
