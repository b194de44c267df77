//! Assignments, implications and formulas, with the closure machinery and
//! semantic checks built on forward chaining.

mod closure;
mod formula;
mod semantics;
mod varset;

pub use closure::{closure, quasi_closure, subformula_same_class, ClosureEngine};
pub use formula::{EntailmentClause, HornFormula, Implication};
pub use semantics::{
    entails, entails_implication, equivalent, is_intersection_closed, models, models_with_limit,
    satisfies, separating_assignment, BRUTE_FORCE_LIMIT,
};
pub use varset::{Assignment, VarSet};

pub(crate) use closure::forward_chain;
