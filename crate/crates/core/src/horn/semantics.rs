use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::horn::closure::{forward_chain, ClosureEngine};
use crate::horn::{Assignment, EntailmentClause, HornFormula, Implication};

/// Default ceiling on the arity accepted by exhaustive enumeration.
pub const BRUTE_FORCE_LIMIT: usize = 20;

pub(crate) fn satisfies_implication(x: &Assignment, imp: &Implication) -> bool {
    !imp.antecedent().is_subset(x.as_set()) || imp.consequent().is_subset(x.as_set())
}

pub fn satisfies(x: &Assignment, h: &HornFormula) -> Result<bool> {
    x.as_set().check_arity(h.arity())?;
    Ok(h.implications()
        .iter()
        .all(|imp| satisfies_implication(x, imp)))
}

pub fn entails(h: &HornFormula, clause: &EntailmentClause) -> Result<bool> {
    clause.antecedent.check_arity(h.arity())?;
    if clause.is_trivial() {
        return Ok(true);
    }
    Ok(forward_chain(&clause.antecedent, h.implications(), |_| false).contains(clause.head))
}

/// Whether every model of `h` satisfies `imp`.
pub fn entails_implication(h: &HornFormula, imp: &Implication) -> Result<bool> {
    imp.antecedent().check_arity(h.arity())?;
    Ok(imp
        .consequent()
        .is_subset(&forward_chain(imp.antecedent(), h.implications(), |_| {
            false
        })))
}

pub fn equivalent(h1: &HornFormula, h2: &HornFormula) -> Result<bool> {
    h1.check_arity(h2.arity())?;
    Ok(separating_assignment(h1, h2)?.is_none())
}

/// An assignment satisfying exactly one of the two formulas, or `None` when
/// they are equivalent.
///
/// The witness is the closure, under one formula, of the antecedent of an
/// implication of the other formula that it fails to entail.
pub fn separating_assignment(h1: &HornFormula, h2: &HornFormula) -> Result<Option<Assignment>> {
    h1.check_arity(h2.arity())?;
    for (from, under) in [(h1, h2), (h2, h1)] {
        let engine = ClosureEngine::new(under);
        for imp in from.implications() {
            let closed = engine.closure(imp.antecedent());
            if !imp.consequent().is_subset(&closed) {
                return Ok(Some(closed.bits()));
            }
        }
    }
    Ok(None)
}

/// Every model of `h` in lexicographic order, refusing arities above
/// [`BRUTE_FORCE_LIMIT`].
pub fn models(h: &HornFormula) -> Result<Vec<Assignment>> {
    models_with_limit(h, BRUTE_FORCE_LIMIT)
}

pub fn models_with_limit(h: &HornFormula, limit: usize) -> Result<Vec<Assignment>> {
    let n = h.arity();
    if n > limit || n >= 64 {
        return Err(Error::BruteForceLimit { arity: n, limit });
    }
    Ok((0..1u64 << n)
        .map(|k| Assignment::nth_lex(n, k))
        .filter(|x| {
            h.implications()
                .iter()
                .all(|imp| satisfies_implication(x, imp))
        })
        .collect())
}

/// Whether the pairwise meet of any two members is again a member.
pub fn is_intersection_closed(assignments: &[Assignment]) -> Result<bool> {
    if let Some(first) = assignments.first() {
        for x in assignments {
            x.as_set().check_arity(first.arity())?;
        }
    }
    let members: HashSet<&Assignment> = assignments.iter().collect();
    for (i, x) in assignments.iter().enumerate() {
        for y in &assignments[i + 1..] {
            if !members.contains(&x.meet(y)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
