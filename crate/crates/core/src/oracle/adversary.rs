use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::horn::{Assignment, HornFormula, Implication, VarSet};
use crate::oracle::{MembershipOracle, Oracle, QueryStats};

/// The family member indexed by `x < 1^n`: every variable of `x` holds
/// unconditionally, and any variable outside `x` forces all variables.
/// Its only models are `x` and `1^n`.
pub fn family_member(x: &Assignment) -> Result<HornFormula> {
    if x.is_top() {
        return Err(Error::TopAssignment);
    }
    let n = x.arity();
    let mut implications = Vec::with_capacity(n);
    for v in x.ones().iter() {
        implications.push(Implication::new(
            VarSet::empty(n),
            VarSet::from_indices(n, [v])?,
        )?);
    }
    for w in x.ones().complement().iter() {
        implications.push(Implication::new(
            VarSet::from_indices(n, [w])?,
            VarSet::full(n),
        )?);
    }
    HornFormula::new(n, implications)
}

/// A membership teacher that commits to no target: it answers NO to every
/// assignment except `1^n`.
///
/// Each target candidate is a [`family_member`], one per `x < 1^n`. A NO on
/// `x` rules out exactly the candidate indexed by `x`; `1^n` satisfies all
/// of them and rules out none. Unlike [`crate::oracle::Teacher`] it is
/// stateful, since it tracks which candidates are still consistent.
#[derive(Debug, Clone)]
pub struct AdversarialSmqTeacher {
    arity: usize,
    ruled_out: HashSet<Assignment>,
    stats: QueryStats,
}

impl AdversarialSmqTeacher {
    /// Arity must be between 1 and 63 so the candidate count fits a `u64`.
    pub fn new(arity: usize) -> Result<Self> {
        if arity == 0 || arity >= 64 {
            return Err(Error::InvalidConfig(format!(
                "adversary arity must be in 1..=63, got {arity}"
            )));
        }
        Ok(Self {
            arity,
            ruled_out: HashSet::new(),
            stats: QueryStats::default(),
        })
    }

    /// `2^n - 1` minus the candidates ruled out so far.
    pub fn remaining(&self) -> u64 {
        ((1u64 << self.arity) - 1) - self.ruled_out.len() as u64
    }

    pub fn ruled_out(&self) -> u64 {
        self.ruled_out.len() as u64
    }

    pub fn is_consistent(&self, x: &Assignment) -> bool {
        !x.is_top() && !self.ruled_out.contains(x)
    }

    /// The closure of `0^n` once the answers single out one candidate, whose
    /// index is that closure.
    pub fn determined_bottom_closure(&self) -> Option<Assignment> {
        if self.remaining() != 1 {
            return None;
        }
        (0..1u64 << self.arity)
            .map(|k| Assignment::nth_lex(self.arity, k))
            .find(|x| self.is_consistent(x))
    }
}

impl Oracle for AdversarialSmqTeacher {
    fn arity(&self) -> usize {
        self.arity
    }

    fn stats(&self) -> QueryStats {
        self.stats
    }
}

impl MembershipOracle for AdversarialSmqTeacher {
    fn smq(&mut self, x: &Assignment) -> Result<bool> {
        if x.arity() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: x.arity(),
            });
        }
        self.stats.smq += 1;
        if x.is_top() {
            return Ok(true);
        }
        self.ruled_out.insert(x.clone());
        Ok(false)
    }
}
