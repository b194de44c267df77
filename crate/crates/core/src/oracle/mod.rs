//! Query protocols and the teachers that answer them.
//!
//! Each query kind is its own trait so that learners state exactly which
//! protocol they need, and adapters in [`crate::reduce`] can stand in for a
//! teacher of a different protocol.

mod adversary;
mod recorder;
mod stats;
mod teacher;

pub use adversary::{family_member, AdversarialSmqTeacher};
pub use recorder::{Recorder, SeqExchange};
pub use stats::QueryStats;
pub use teacher::{Strategy, Teacher};

use crate::error::Result;
use crate::horn::{Assignment, EntailmentClause, HornFormula};

/// Answer to a standard equivalence query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeqAnswer {
    Yes,
    Counterexample(Assignment),
}

/// Answer to an entailment equivalence query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EeqAnswer {
    Yes,
    Counterexample(EntailmentClause),
}

/// Anything that answers queries about a hidden target over a fixed arity.
pub trait Oracle {
    fn arity(&self) -> usize;

    /// Counters of the queries answered by the underlying teacher.
    fn stats(&self) -> QueryStats;
}

/// Standard membership: does `x` satisfy the target?
pub trait MembershipOracle: Oracle {
    fn smq(&mut self, x: &Assignment) -> Result<bool>;
}

/// Closure query: the closure of `y` under the target.
pub trait ClosureOracle: Oracle {
    fn cq(&mut self, y: &Assignment) -> Result<Assignment>;
}

/// Standard equivalence: YES, or an assignment on which the hypothesis and
/// the target disagree.
pub trait EquivalenceOracle: Oracle {
    fn seq(&mut self, hypothesis: &HornFormula) -> Result<SeqAnswer>;
}

/// Entailment membership: does the target entail the clause?
pub trait EntailmentMembershipOracle: Oracle {
    fn emq(&mut self, clause: &EntailmentClause) -> Result<bool>;
}

/// Entailment equivalence: YES, or a clause entailed by exactly one of the
/// hypothesis and the target.
pub trait EntailmentEquivalenceOracle: Oracle {
    fn eeq(&mut self, hypothesis: &HornFormula) -> Result<EeqAnswer>;
}

impl<T: Oracle + ?Sized> Oracle for &mut T {
    fn arity(&self) -> usize {
        (**self).arity()
    }

    fn stats(&self) -> QueryStats {
        (**self).stats()
    }
}

impl<T: MembershipOracle + ?Sized> MembershipOracle for &mut T {
    fn smq(&mut self, x: &Assignment) -> Result<bool> {
        (**self).smq(x)
    }
}

impl<T: ClosureOracle + ?Sized> ClosureOracle for &mut T {
    fn cq(&mut self, y: &Assignment) -> Result<Assignment> {
        (**self).cq(y)
    }
}

impl<T: EquivalenceOracle + ?Sized> EquivalenceOracle for &mut T {
    fn seq(&mut self, hypothesis: &HornFormula) -> Result<SeqAnswer> {
        (**self).seq(hypothesis)
    }
}

impl<T: EntailmentMembershipOracle + ?Sized> EntailmentMembershipOracle for &mut T {
    fn emq(&mut self, clause: &EntailmentClause) -> Result<bool> {
        (**self).emq(clause)
    }
}

impl<T: EntailmentEquivalenceOracle + ?Sized> EntailmentEquivalenceOracle for &mut T {
    fn eeq(&mut self, hypothesis: &HornFormula) -> Result<EeqAnswer> {
        (**self).eeq(hypothesis)
    }
}
