use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::horn::{Assignment, ClosureEngine, EntailmentClause, HornFormula, VarSet};
use crate::oracle::{
    ClosureOracle, EeqAnswer, EntailmentEquivalenceOracle, EntailmentMembershipOracle,
    EquivalenceOracle, MembershipOracle, Oracle, QueryStats, SeqAnswer,
};

/// How a teacher picks among the available counterexamples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// Deterministic scan in implication-list order.
    #[default]
    First,
    /// Uniform choice among the candidates, from a seeded generator.
    Random(u64),
    /// A bitwise-minimal counterexample (least weight, then lexicographic).
    /// For equivalence queries over clauses: the shortest antecedent.
    Minimal,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::First => "first",
            Strategy::Random(_) => "random",
            Strategy::Minimal => "minimal",
        }
    }
}

impl FromStr for Strategy {
    type Err = String;

    /// `first`, `minimal`, `random` (seed 0) or `random:<seed>`.
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "first" => Ok(Strategy::First),
            "minimal" => Ok(Strategy::Minimal),
            "random" => Ok(Strategy::Random(0)),
            _ => s
                .strip_prefix("random:")
                .and_then(|seed| seed.parse().ok())
                .map(Strategy::Random)
                .ok_or_else(|| format!("unknown strategy `{s}`")),
        }
    }
}

/// A teacher for a fixed definite Horn target, answering all five query
/// kinds and counting each answered query.
///
/// Equivalence counterexamples favour the negative side: an assignment that
/// satisfies the hypothesis but not the target is returned whenever one
/// exists. Every such counterexample has the form `closure_H(a)` for the
/// antecedent `a` of a target implication that `H` fails to entail, and the
/// bitwise-minimal ones are among those candidates; symmetrically for
/// positive counterexamples with the roles swapped.
#[derive(Debug, Clone)]
pub struct Teacher {
    target: HornFormula,
    engine: ClosureEngine,
    stats: QueryStats,
    strategy: Strategy,
    rng: ChaCha8Rng,
}

impl Teacher {
    pub fn new(target: HornFormula) -> Self {
        Self::with_strategy(target, Strategy::First)
    }

    pub fn with_strategy(target: HornFormula, strategy: Strategy) -> Self {
        let seed = match strategy {
            Strategy::Random(seed) => seed,
            _ => 0,
        };
        Self {
            engine: ClosureEngine::new(&target),
            target,
            stats: QueryStats::default(),
            strategy,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn target(&self) -> &HornFormula {
        &self.target
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    fn check(&self, arity: usize) -> Result<()> {
        if arity == self.target.arity() {
            Ok(())
        } else {
            Err(Error::ArityMismatch {
                expected: self.target.arity(),
                found: arity,
            })
        }
    }

    fn pick_assignment(&mut self, mut candidates: Vec<VarSet>) -> Option<Assignment> {
        let chosen = match self.strategy {
            Strategy::First => candidates.into_iter().next(),
            Strategy::Random(_) => {
                let len = candidates.len();
                if len == 0 {
                    None
                } else {
                    let i = rand::Rng::gen_range(&mut self.rng, 0..len);
                    Some(candidates.swap_remove(i))
                }
            }
            Strategy::Minimal => candidates
                .into_iter()
                .min_by_key(|w| (w.len(), w.bits().to_string())),
        };
        chosen.map(Assignment::from)
    }

    /// `(antecedent, closure of the antecedent, consequent)` for every
    /// implication of `from` whose consequent escapes the closure.
    fn failures(
        from: &HornFormula,
        under: &ClosureEngine,
        stop_at_first: bool,
    ) -> Vec<(VarSet, VarSet, VarSet)> {
        let mut out = Vec::new();
        for imp in from.implications() {
            let closed = under.closure(imp.antecedent());
            if !imp.consequent().is_subset(&closed) {
                out.push((imp.antecedent().clone(), closed, imp.consequent().clone()));
                if stop_at_first {
                    break;
                }
            }
        }
        out
    }

    fn separate(&self, hypothesis: &HornFormula) -> (bool, Vec<(VarSet, VarSet, VarSet)>) {
        let first_only = self.strategy == Strategy::First;
        let hyp_engine = ClosureEngine::new(hypothesis);
        let negative = Self::failures(&self.target, &hyp_engine, first_only);
        if !negative.is_empty() {
            return (true, negative);
        }
        (false, Self::failures(hypothesis, &self.engine, first_only))
    }
}

impl Oracle for Teacher {
    fn arity(&self) -> usize {
        self.target.arity()
    }

    fn stats(&self) -> QueryStats {
        self.stats
    }
}

impl MembershipOracle for Teacher {
    fn smq(&mut self, x: &Assignment) -> Result<bool> {
        self.check(x.arity())?;
        self.stats.smq += 1;
        Ok(self.engine.closure(x.as_set()) == *x.as_set())
    }
}

impl ClosureOracle for Teacher {
    fn cq(&mut self, y: &Assignment) -> Result<Assignment> {
        self.check(y.arity())?;
        self.stats.cq += 1;
        Ok(self.engine.closure(y.as_set()).bits())
    }
}

impl EquivalenceOracle for Teacher {
    fn seq(&mut self, hypothesis: &HornFormula) -> Result<SeqAnswer> {
        self.check(hypothesis.arity())?;
        self.stats.seq += 1;
        let (_, failures) = self.separate(hypothesis);
        // Negative side: the closure under the hypothesis. Positive side:
        // the closure under the target. Both are the middle component.
        let candidates = failures.into_iter().map(|(_, closed, _)| closed).collect();
        Ok(match self.pick_assignment(candidates) {
            Some(x) => SeqAnswer::Counterexample(x),
            None => SeqAnswer::Yes,
        })
    }
}

impl EntailmentMembershipOracle for Teacher {
    fn emq(&mut self, clause: &EntailmentClause) -> Result<bool> {
        self.check(clause.arity())?;
        self.stats.emq += 1;
        Ok(clause.is_trivial()
            || self
                .engine
                .closure(&clause.antecedent)
                .contains(clause.head))
    }
}

impl EntailmentEquivalenceOracle for Teacher {
    fn eeq(&mut self, hypothesis: &HornFormula) -> Result<EeqAnswer> {
        self.check(hypothesis.arity())?;
        self.stats.eeq += 1;
        let (_, mut failures) = self.separate(hypothesis);
        if failures.is_empty() {
            return Ok(EeqAnswer::Yes);
        }
        let (antecedent, closed, consequent) = match self.strategy {
            Strategy::First => failures.swap_remove(0),
            Strategy::Random(_) => {
                let i = rand::Rng::gen_range(&mut self.rng, 0..failures.len());
                failures.swap_remove(i)
            }
            Strategy::Minimal => {
                let i = (0..failures.len())
                    .min_by_key(|&i| failures[i].0.len())
                    .expect("nonempty");
                failures.swap_remove(i)
            }
        };
        let gap: Vec<usize> = consequent.difference(&closed).iter().collect();
        let head = match self.strategy {
            Strategy::Random(_) => *gap.choose(&mut self.rng).expect("gap is nonempty"),
            _ => gap[0],
        };
        Ok(EeqAnswer::Counterexample(EntailmentClause {
            antecedent,
            head,
        }))
    }
}
