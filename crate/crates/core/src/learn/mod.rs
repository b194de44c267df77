//! Exact learners for definite Horn targets.
//!
//! [`clh`] learns from closure and equivalence queries and outputs the GD
//! basis of the target. [`afp`] learns from membership and equivalence
//! queries and outputs some equivalent formula.

mod afp;
mod clh;

pub use afp::afp;
pub use clh::{clh, clh_with, hyp, ClhOptions, NegativeList, RefineMode};

use crate::horn::{Assignment, HornFormula};
use crate::oracle::QueryStats;

/// What a learner did with one counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// The counterexample became a new last entry.
    Append { counterexample: Assignment },
    /// Entry `index` was replaced by its meet with the counterexample.
    Refine {
        index: usize,
        counterexample: Assignment,
    },
    /// A positive counterexample shrank the consequents above it.
    Positive { counterexample: Assignment },
}

#[derive(Debug, Clone)]
pub struct LearnerReport {
    pub output: HornFormula,
    /// The teacher's counters when the learner stopped.
    pub stats: QueryStats,
    pub trace: Vec<TraceEvent>,
}
