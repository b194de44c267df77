use crate::error::{Error, Result};
use crate::horn::{satisfies, Assignment, HornFormula, Implication, VarSet};
use crate::learn::{LearnerReport, TraceEvent};
use crate::oracle::{EquivalenceOracle, MembershipOracle, SeqAnswer};

struct Entry {
    antecedent: Assignment,
    consequent: VarSet,
}

impl Entry {
    /// The strongest consequent compatible with every positive example
    /// seen so far.
    fn new(antecedent: Assignment, positives: &[Assignment]) -> Self {
        let mut consequent = antecedent.ones().complement();
        for x in positives {
            if antecedent.le(x) {
                consequent.intersect_with(x.as_set());
            }
        }
        Self {
            antecedent,
            consequent,
        }
    }
}

fn hypothesis(n: usize, entries: &[Entry]) -> Result<HornFormula> {
    let implications = entries
        .iter()
        .map(|e| {
            Implication::new(e.antecedent.ones(), e.consequent.clone()).map_err(|_| {
                Error::Invariant(format!("entry {} lost its whole consequent", e.antecedent))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    HornFormula::new(n, implications)
}

/// Learns a formula equivalent to the target from membership and
/// equivalence queries.
///
/// Each negative entry `y` carries the consequent `vars \ y`, shrunk by
/// every positive example above `y`. The sign of a counterexample is read
/// off the hypothesis itself: a counterexample the hypothesis accepts is
/// negative for the target.
pub fn afp<T>(teacher: &mut T) -> Result<LearnerReport>
where
    T: MembershipOracle + EquivalenceOracle + ?Sized,
{
    let n = teacher.arity();
    let mut entries: Vec<Entry> = Vec::new();
    let mut positives: Vec<Assignment> = Vec::new();
    let mut trace = Vec::new();

    loop {
        let h = hypothesis(n, &entries)?;
        let x = match teacher.seq(&h)? {
            SeqAnswer::Yes => {
                return Ok(LearnerReport {
                    output: h,
                    stats: teacher.stats(),
                    trace,
                })
            }
            SeqAnswer::Counterexample(x) => x,
        };

        if satisfies(&x, &h)? {
            let mut refined = None;
            for (i, entry) in entries.iter().enumerate() {
                let y = x.meet(&entry.antecedent);
                if y.lt(&entry.antecedent) && !teacher.smq(&y)? {
                    refined = Some((i, y));
                    break;
                }
            }
            match refined {
                Some((index, y)) => {
                    entries[index] = Entry::new(y, &positives);
                    trace.push(TraceEvent::Refine {
                        index,
                        counterexample: x,
                    });
                }
                None => {
                    entries.push(Entry::new(x.clone(), &positives));
                    trace.push(TraceEvent::Append { counterexample: x });
                }
            }
        } else {
            for entry in entries.iter_mut().filter(|e| e.antecedent.le(&x)) {
                entry.consequent.intersect_with(x.as_set());
            }
            positives.push(x.clone());
            trace.push(TraceEvent::Positive { counterexample: x });
        }
    }
}
