//! Seeded random targets and the named corpus of worked examples.

use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::horn::{HornFormula, Implication, VarSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenConfig {
    pub arity: usize,
    pub implications: usize,
    pub antecedent_size: RangeInclusive<usize>,
    pub consequent_size: RangeInclusive<usize>,
    pub seed: u64,
}

impl GenConfig {
    /// Antecedents of 1 to `max(1, n/2)` variables and consequents of 1 or 2,
    /// the shape used by the benchmarks and the test corpus.
    pub fn standard(arity: usize, implications: usize, seed: u64) -> Self {
        Self {
            arity,
            implications,
            antecedent_size: 1.min(arity)..=(arity / 2).max(1).min(arity),
            consequent_size: 1..=2.min(arity.max(1)),
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let (alo, ahi) = (*self.antecedent_size.start(), *self.antecedent_size.end());
        let (clo, chi) = (*self.consequent_size.start(), *self.consequent_size.end());
        if alo > ahi || ahi > self.arity {
            return Err(Error::InvalidConfig(format!(
                "antecedent size range {alo}..={ahi} is infeasible for arity {}",
                self.arity
            )));
        }
        if self.implications > 0 && (clo == 0 || clo > chi || chi > self.arity) {
            return Err(Error::InvalidConfig(format!(
                "consequent size range {clo}..={chi} is infeasible for arity {}",
                self.arity
            )));
        }
        Ok(())
    }
}

fn random_set(rng: &mut ChaCha8Rng, arity: usize, size: &RangeInclusive<usize>) -> VarSet {
    let k = rng.gen_range(size.clone());
    let mut set = VarSet::empty(arity);
    for v in sample(rng, arity, k) {
        set.insert(v);
    }
    set
}

/// `implications` implications whose antecedent and consequent sizes are
/// uniform in the configured ranges, with members drawn uniformly. Neither
/// duplicates nor redundancy are filtered out.
pub fn random_formula(config: &GenConfig) -> Result<HornFormula> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let implications = (0..config.implications)
        .map(|_| {
            let antecedent = random_set(&mut rng, config.arity, &config.antecedent_size);
            let consequent = random_set(&mut rng, config.arity, &config.consequent_size);
            Implication::new(antecedent, consequent)
        })
        .collect::<Result<Vec<_>>>()?;
    HornFormula::new(config.arity, implications)
}

pub mod corpus {
    //! Named worked examples.

    use crate::error::{Error, Result};
    use crate::horn::HornFormula;

    pub use crate::oracle::family_member;

    pub const NAMES: [&str; 2] = ["gd-example", "bullet-example"];

    /// `{e->d, bc->d, bd->c, cd->b, ad->bce, ce->ab}` over `a..e`.
    pub fn gd_example() -> HornFormula {
        HornFormula::from_pairs(
            5,
            [
                (vec![4], vec![3]),
                (vec![1, 2], vec![3]),
                (vec![1, 3], vec![2]),
                (vec![2, 3], vec![1]),
                (vec![0, 3], vec![1, 2, 4]),
                (vec![2, 4], vec![0, 1]),
            ],
        )
        .expect("well-formed")
    }

    /// `{a->b, a->c, c->d}` over `a..d`.
    pub fn bullet_example() -> HornFormula {
        HornFormula::from_pairs(
            4,
            [(vec![0], vec![1]), (vec![0], vec![2]), (vec![2], vec![3])],
        )
        .expect("well-formed")
    }

    pub fn get(name: &str) -> Result<HornFormula> {
        match name {
            "gd-example" => Ok(gd_example()),
            "bullet-example" => Ok(bullet_example()),
            _ => Err(Error::UnknownCorpusEntry(name.to_owned())),
        }
    }
}
