use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::gd::is_left_saturated;
use crate::horn::{satisfies, Assignment, HornFormula, Implication};
use crate::learn::{LearnerReport, TraceEvent};
use crate::oracle::{ClosureOracle, EquivalenceOracle, SeqAnswer};

/// How many entries a single counterexample may refine.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RefineMode {
    /// Refine the first refinable entry and stop scanning.
    #[default]
    First,
    /// Keep scanning and refine every refinable entry. Experimental; the
    /// correctness guarantees are stated for [`RefineMode::First`].
    All,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ClhOptions {
    pub refine: RefineMode,
    /// Verify before every equivalence query that the hypothesis is
    /// left-saturated with respect to itself.
    pub check_invariants: bool,
}

/// The ordered list of negative examples, with the closure answer stored
/// for each entry so the hypothesis can be rebuilt without new queries.
#[derive(Debug, Clone, Default)]
pub struct NegativeList {
    entries: Vec<Assignment>,
    closures: HashMap<Assignment, Assignment>,
}

impl NegativeList {
    pub fn entries(&self) -> &[Assignment] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn closure_of(&self, y: &Assignment) -> Option<&Assignment> {
        self.closures.get(y)
    }

    fn push(&mut self, y: Assignment, closed: Assignment) {
        self.closures.insert(y.clone(), closed);
        self.entries.push(y);
    }

    fn replace(&mut self, index: usize, y: Assignment, closed: Assignment) {
        self.closures.insert(y.clone(), closed);
        self.entries[index] = y;
    }

    pub fn hypothesis(&self, arity: usize) -> Result<HornFormula> {
        hyp(arity, &self.entries, &self.closures)
    }
}

/// One implication `ones(y) -> ones(closure(y))` per entry, in list order.
pub fn hyp(
    arity: usize,
    entries: &[Assignment],
    closures: &HashMap<Assignment, Assignment>,
) -> Result<HornFormula> {
    let implications = entries
        .iter()
        .map(|y| {
            let closed = closures
                .get(y)
                .ok_or_else(|| Error::MissingClosure(y.to_string()))?;
            Implication::new(y.ones(), closed.ones())
        })
        .collect::<Result<Vec<_>>>()?;
    HornFormula::new(arity, implications)
}

/// Learns the GD basis of the target from closure and equivalence queries.
pub fn clh<T>(teacher: &mut T) -> Result<LearnerReport>
where
    T: ClosureOracle + EquivalenceOracle + ?Sized,
{
    clh_with(teacher, ClhOptions::default())
}

pub fn clh_with<T>(teacher: &mut T, options: ClhOptions) -> Result<LearnerReport>
where
    T: ClosureOracle + EquivalenceOracle + ?Sized,
{
    let n = teacher.arity();
    let mut list = NegativeList::default();
    let mut trace = Vec::new();

    loop {
        let hypothesis = list.hypothesis(n)?;
        if options.check_invariants && !is_left_saturated(&hypothesis) {
            return Err(Error::Invariant(format!(
                "hypothesis {hypothesis} is not left-saturated"
            )));
        }
        let x = match teacher.seq(&hypothesis)? {
            SeqAnswer::Yes => {
                return Ok(LearnerReport {
                    output: hypothesis,
                    stats: teacher.stats(),
                    trace,
                })
            }
            SeqAnswer::Counterexample(x) => x,
        };
        // The target entails every hypothesis, so a counterexample must
        // satisfy the hypothesis.
        if !satisfies(&x, &hypothesis)? {
            return Err(Error::PositiveCounterexample(x.to_string()));
        }

        let mut changed = false;
        for i in 0..list.len() {
            let current = &list.entries()[i];
            let y = x.meet(current);
            if !y.lt(current) {
                continue;
            }
            let closed = teacher.cq(&y)?;
            if y.lt(&closed) {
                list.replace(i, y, closed);
                trace.push(TraceEvent::Refine {
                    index: i,
                    counterexample: x.clone(),
                });
                changed = true;
                if options.refine == RefineMode::First {
                    break;
                }
            }
        }
        if !changed {
            let closed = teacher.cq(&x)?;
            list.push(x.clone(), closed);
            trace.push(TraceEvent::Append { counterexample: x });
        }
    }
}
