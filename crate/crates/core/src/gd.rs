//! Saturation and the Guigues-Duquenne basis.
//!
//! The basis is computed by right-saturating every implication, then
//! left-saturating every antecedent, then dropping redundant implications.
//! Every intermediate formula keeps the input list order.

use crate::error::{Error, Result};
use crate::horn::{closure, forward_chain, quasi_closure, ClosureEngine, HornFormula, Implication};

/// Replaces every `a -> b` by `a -> closure(a)`.
pub fn right_saturate(h: &HornFormula) -> HornFormula {
    let engine = ClosureEngine::new(h);
    let implications = h
        .implications()
        .iter()
        .map(|imp| {
            let closed = engine.closure(imp.antecedent());
            Implication::new(imp.antecedent().clone(), closed)
                .expect("closure contains the nonempty consequent")
        })
        .collect();
    HornFormula::from_parts(h.arity(), implications).with_names_of(h)
}

pub fn is_right_saturated(h: &HornFormula) -> bool {
    let engine = ClosureEngine::new(h);
    h.implications()
        .iter()
        .all(|imp| *imp.consequent() == engine.closure(imp.antecedent()))
}

/// Whether every antecedent equals its own quasi-closure under `h`.
pub fn is_left_saturated(h: &HornFormula) -> bool {
    h.implications()
        .iter()
        .all(|imp| quasi_closure(imp.antecedent(), h).expect("same arity") == *imp.antecedent())
}

pub fn is_saturated(h: &HornFormula) -> bool {
    is_right_saturated(h) && is_left_saturated(h)
}

/// Rewrites each antecedent to its quasi-closure under the current formula,
/// one implication at a time, until no antecedent changes.
///
/// Requires a right-saturated input. Each rewrite keeps the formula
/// equivalent: the quasi-closure is derived from the old antecedent using
/// only implications of other classes, which stay untouched by the rewrite.
pub fn left_saturate(h: &HornFormula) -> Result<HornFormula> {
    let engine = ClosureEngine::new(h);
    if let Some(index) = h
        .implications()
        .iter()
        .position(|imp| *imp.consequent() != engine.closure(imp.antecedent()))
    {
        return Err(Error::NotRightSaturated { index });
    }

    let mut current = h.clone();
    loop {
        let mut changed = false;
        for i in 0..current.len() {
            let antecedent = current.implications()[i].antecedent().clone();
            let saturated = quasi_closure(&antecedent, &current)?;
            if saturated != antecedent {
                let consequent = closure(&saturated, &current)?;
                let mut implications = current.implications().to_vec();
                implications[i] = Implication::new(saturated, consequent)?;
                current = HornFormula::from_parts(h.arity(), implications).with_names_of(h);
                changed = true;
            }
        }
        if !changed {
            return Ok(current);
        }
    }
}

/// Scans in list order and drops every implication entailed by the
/// implications still kept.
pub fn remove_redundant(h: &HornFormula) -> HornFormula {
    let implications = h.implications();
    let mut kept = vec![true; implications.len()];
    for (i, imp) in implications.iter().enumerate() {
        let derived = forward_chain(imp.antecedent(), implications, |j| j == i || !kept[j]);
        if imp.consequent().is_subset(&derived) {
            kept[i] = false;
        }
    }
    let survivors = implications
        .iter()
        .zip(&kept)
        .filter(|(_, &k)| k)
        .map(|(imp, _)| imp.clone())
        .collect();
    HornFormula::from_parts(h.arity(), survivors).with_names_of(h)
}

/// The unique saturated basis equivalent to `h`.
pub fn gd_basis(h: &HornFormula) -> HornFormula {
    let right = right_saturate(h);
    let left = left_saturate(&right).expect("right-saturated by construction");
    remove_redundant(&left)
}
