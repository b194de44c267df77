//! Fixtures shared by the integration tests.

#![allow(dead_code)]

use hornlearn::horn::models;
use hornlearn::{
    random_formula, Assignment, GenConfig, HornFormula, Implication, Strategy, VarSet,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const STRATEGIES: [Strategy; 3] = [Strategy::First, Strategy::Random(17), Strategy::Minimal];

/// The seeded learner corpus: every `(n, m)` with `n` in 3..=16 and `m` in
/// 1..=12, three seeds each, 504 targets.
pub fn learner_corpus() -> Vec<HornFormula> {
    let mut out = Vec::new();
    for rep in 0..3u64 {
        for n in 3..=16usize {
            for m in 1..=12usize {
                let seed = rep * 10_000 + (n as u64) * 100 + m as u64;
                out.push(random_formula(&GenConfig::standard(n, m, seed)).unwrap());
            }
        }
    }
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_set(rng: &mut ChaCha8Rng, n: usize) -> VarSet {
    VarSet::from_mask(n, rng.gen::<u64>())
}

/// A random formula with empty antecedents allowed and wider consequents
/// than the standard shape.
pub fn random_wide_formula(rng: &mut ChaCha8Rng, n: usize, m: usize) -> HornFormula {
    let cfg = GenConfig {
        arity: n,
        implications: m,
        antecedent_size: 0..=(n / 2).max(1).min(n),
        consequent_size: 1..=3.min(n),
        seed: rng.gen(),
    };
    random_formula(&cfg).unwrap()
}

/// An equivalent formula with a different shape: the list is shuffled,
/// consequents are split into single variables, and entailed implications
/// are added.
pub fn redundant_variant(rng: &mut ChaCha8Rng, h: &HornFormula, extra: usize) -> HornFormula {
    let n = h.arity();
    let mut imps = Vec::new();
    for imp in h.implications() {
        if rng.gen_bool(0.5) {
            for v in imp.consequent().iter() {
                imps.push(
                    Implication::new(
                        imp.antecedent().clone(),
                        VarSet::from_indices(n, [v]).unwrap(),
                    )
                    .unwrap(),
                );
            }
        } else {
            imps.push(imp.clone());
        }
    }
    for _ in 0..extra {
        let a = random_set(rng, n);
        let closed = hornlearn::horn::closure(&a, h).unwrap();
        let pick: Vec<usize> = closed.iter().collect();
        if pick.is_empty() {
            continue;
        }
        let k = rng.gen_range(1..=pick.len());
        let c = VarSet::from_indices(n, pick.choose_multiple(rng, k).copied()).unwrap();
        imps.push(Implication::new(a, c).unwrap());
    }
    if let Some(dup) = h.implications().choose(rng) {
        imps.push(dup.clone());
    }
    imps.shuffle(rng);
    HornFormula::new(n, imps).unwrap()
}

/// Every model, by enumeration.
pub fn model_set(h: &HornFormula) -> Vec<Assignment> {
    models(h).unwrap()
}

pub fn all_assignments(n: usize) -> impl Iterator<Item = Assignment> {
    (0..1u64 << n).map(move |k| Assignment::nth_lex(n, k))
}
