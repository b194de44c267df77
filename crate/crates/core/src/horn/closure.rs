//! Forward chaining: the closure operator and the quasi-closure operator.

use crate::error::Result;
use crate::horn::{HornFormula, Implication, VarSet};

/// Round-based forward chaining from `start` over the implications whose
/// index is not rejected by `skip`. Each implication fires at most once.
pub(crate) fn forward_chain(
    start: &VarSet,
    implications: &[Implication],
    skip: impl Fn(usize) -> bool,
) -> VarSet {
    let mut current = start.clone();
    let mut pending: Vec<&Implication> = implications
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip(*i))
        .map(|(_, imp)| imp)
        .collect();
    loop {
        let before = pending.len();
        pending.retain(|imp| {
            if imp.antecedent().is_subset(&current) {
                current.union_with(imp.consequent());
                false
            } else {
                true
            }
        });
        if pending.len() == before {
            return current;
        }
    }
}

/// The closure of `start` under `h`: the least superset of `start` that
/// satisfies every implication of `h`.
pub fn closure(start: &VarSet, h: &HornFormula) -> Result<VarSet> {
    start.check_arity(h.arity())?;
    Ok(forward_chain(start, h.implications(), |_| false))
}

/// Indices of the implications of `h` whose antecedent has the same closure
/// as `alpha`, closures taken under `h`.
pub(crate) fn same_class_indices(alpha: &VarSet, h: &HornFormula) -> Vec<bool> {
    let engine = ClosureEngine::new(h);
    let target = engine.closure(alpha);
    h.implications()
        .iter()
        .map(|imp| engine.closure(imp.antecedent()) == target)
        .collect()
}

/// The implications of `h` in the same equivalence class as `alpha`, in
/// their original order.
pub fn subformula_same_class(alpha: &VarSet, h: &HornFormula) -> Result<HornFormula> {
    alpha.check_arity(h.arity())?;
    let in_class = same_class_indices(alpha, h);
    let implications = h
        .implications()
        .iter()
        .zip(&in_class)
        .filter(|(_, &keep)| keep)
        .map(|(imp, _)| imp.clone())
        .collect();
    Ok(HornFormula::from_parts(h.arity(), implications).with_names_of(h))
}

/// Forward chaining from `alpha` without the implications of `alpha`'s own
/// equivalence class.
pub fn quasi_closure(alpha: &VarSet, h: &HornFormula) -> Result<VarSet> {
    alpha.check_arity(h.arity())?;
    let in_class = same_class_indices(alpha, h);
    Ok(forward_chain(alpha, h.implications(), |i| in_class[i]))
}

/// Counter-based linear-time forward chaining over a fixed formula.
///
/// Construction indexes every implication by its antecedent variables; each
/// closure then touches every implication at most once per antecedent
/// variable.
#[derive(Debug, Clone)]
pub struct ClosureEngine {
    arity: usize,
    antecedent_sizes: Vec<usize>,
    consequents: Vec<VarSet>,
    watchers: Vec<Vec<usize>>,
    unconditional: VarSet,
}

impl ClosureEngine {
    pub fn new(h: &HornFormula) -> Self {
        let arity = h.arity();
        let mut watchers = vec![Vec::new(); arity];
        let mut unconditional = VarSet::empty(arity);
        let mut antecedent_sizes = Vec::with_capacity(h.len());
        let mut consequents = Vec::with_capacity(h.len());
        for (i, imp) in h.implications().iter().enumerate() {
            let size = imp.antecedent().len();
            if size == 0 {
                unconditional.union_with(imp.consequent());
            }
            for v in imp.antecedent().iter() {
                watchers[v].push(i);
            }
            antecedent_sizes.push(size);
            consequents.push(imp.consequent().clone());
        }
        Self {
            arity,
            antecedent_sizes,
            consequents,
            watchers,
            unconditional,
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Panics if `start` has a different arity; see [`closure`] for the
    /// checked entry point.
    pub fn closure(&self, start: &VarSet) -> VarSet {
        assert_eq!(start.arity(), self.arity, "arity mismatch");
        let mut missing = self.antecedent_sizes.clone();
        let mut result = start.union(&self.unconditional);
        let mut queue: Vec<usize> = result.iter().collect();
        while let Some(v) = queue.pop() {
            for &i in &self.watchers[v] {
                missing[i] -= 1;
                if missing[i] == 0 {
                    for w in self.consequents[i].iter() {
                        if !result.contains(w) {
                            result.insert(w);
                            queue.push(w);
                        }
                    }
                }
            }
        }
        result
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn set(h: &HornFormula, names: &str) -> VarSet {
        VarSet::from_indices(h.arity(), names.bytes().map(|b| (b - b'a') as usize)).unwrap()
    }

    #[test]
    fn gd_example_classes() {
        let h = corpus::gd_example();
        let expected = ["de", "bcd", "bcd", "bcd", "abcde", "abcde"];
        for (imp, want) in h.implications().iter().zip(expected) {
            assert_eq!(closure(imp.antecedent(), &h).unwrap(), set(&h, want));
        }
        assert_eq!(closure(&set(&h, "e"), &h).unwrap(), set(&h, "de"));
        assert_eq!(closure(&set(&h, "ad"), &h).unwrap(), set(&h, "abcde"));
        assert_eq!(closure(&VarSet::full(5), &h).unwrap(), VarSet::full(5));
    }

    #[test]
    fn bullet_example() {
        let h = corpus::bullet_example();
        let ac = set(&h, "ac");
        assert_eq!(closure(&ac, &h).unwrap(), set(&h, "abcd"));
        assert_eq!(quasi_closure(&ac, &h).unwrap(), set(&h, "acd"));
        let sub = subformula_same_class(&ac, &h).unwrap();
        assert_eq!(
            sub,
            HornFormula::from_pairs(4, [(vec![0], vec![1]), (vec![0], vec![2])]).unwrap()
        );
    }

    #[test]
    fn quasi_closure_of_a_in_bullet_example() {
        // H(a) = {a->b, a->c}; c->d never becomes applicable.
        let h = corpus::bullet_example();
        assert_eq!(quasi_closure(&set(&h, "a"), &h).unwrap(), set(&h, "a"));
    }

    #[test]
    fn closed_sets_are_their_own_quasi_closure() {
        let h = corpus::bullet_example();
        let abcd = set(&h, "abcd");
        assert_eq!(quasi_closure(&abcd, &h).unwrap(), abcd);
    }

    #[test]
    fn same_class_of_e_in_gd_example() {
        let h = corpus::gd_example();
        let sub = subformula_same_class(&set(&h, "e"), &h).unwrap();
        assert_eq!(sub.implications(), &h.implications()[..1]);
    }

    #[test]
    fn lonely_class_is_empty() {
        let h = corpus::bullet_example();
        // {b} is closed and no antecedent closes to it.
        assert!(subformula_same_class(&set(&h, "b"), &h).unwrap().is_empty());
    }

    #[test]
    fn empty_antecedent_fires_unconditionally() {
        let h = HornFormula::from_pairs(3, [(vec![], vec![0]), (vec![0], vec![2])]).unwrap();
        let expected = VarSet::from_indices(3, [0, 2]).unwrap();
        assert_eq!(closure(&VarSet::empty(3), &h).unwrap(), expected);
        assert_eq!(ClosureEngine::new(&h).closure(&VarSet::empty(3)), expected);
    }

    #[test]
    fn arity_mismatch_is_an_error() {
        let h = corpus::bullet_example();
        assert!(closure(&VarSet::empty(3), &h).is_err());
        assert!(quasi_closure(&VarSet::empty(5), &h).is_err());
        assert!(subformula_same_class(&VarSet::empty(5), &h).is_err());
    }
}
