//! Query simulation: answering one protocol's queries with another's.
//!
//! The free functions perform a single simulated query. The adapter types
//! wrap a teacher and expose the simulated protocol through the ordinary
//! oracle traits, so any learner runs unchanged on top of them. Adapters
//! record how many inner queries each simulated query cost.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::horn::{
    closure, entails, satisfies, Assignment, ClosureEngine, EntailmentClause, HornFormula,
};
use crate::learn::afp;
use crate::oracle::{
    AdversarialSmqTeacher, ClosureOracle, EeqAnswer, EntailmentEquivalenceOracle,
    EntailmentMembershipOracle, EquivalenceOracle, MembershipOracle, Oracle, QueryStats, SeqAnswer,
};

/// Closure by asking, for every variable outside `y`, whether `y` entails it.
pub fn cq_from_emq<T>(teacher: &mut T, y: &Assignment) -> Result<Assignment>
where
    T: EntailmentMembershipOracle + ?Sized,
{
    let mut closed = y.ones();
    for b in y.ones().complement().iter() {
        if teacher.emq(&EntailmentClause::new(y.ones(), b)?)? {
            closed.insert(b);
        }
    }
    Ok(closed.bits())
}

/// `x` is a model iff no variable outside it is entailed by it.
pub fn smq_from_emq<T>(teacher: &mut T, x: &Assignment) -> Result<bool>
where
    T: EntailmentMembershipOracle + ?Sized,
{
    for b in x.ones().complement().iter() {
        if teacher.emq(&EntailmentClause::new(x.ones(), b)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// One entailment equivalence query, turned into an assignment.
///
/// A clause `a -> b` entailed by the target but not the hypothesis becomes
/// the closure of `a` under the hypothesis, a negative counterexample, at
/// no extra cost. A clause entailed only by the hypothesis becomes the
/// closure of `a` under the target, obtained through membership queries.
pub fn seq_from_eeq_emq<T>(teacher: &mut T, hypothesis: &HornFormula) -> Result<SeqAnswer>
where
    T: EntailmentMembershipOracle + EntailmentEquivalenceOracle + ?Sized,
{
    let clause = match teacher.eeq(hypothesis)? {
        EeqAnswer::Yes => return Ok(SeqAnswer::Yes),
        EeqAnswer::Counterexample(clause) => clause,
    };
    let x = if entails(hypothesis, &clause)? {
        cq_from_emq(teacher, &clause.antecedent.bits())?
    } else {
        closure(&clause.antecedent, hypothesis)?.bits()
    };
    Ok(SeqAnswer::Counterexample(x))
}

/// One closure query: the clause holds iff its head is in the closure of
/// its antecedent.
pub fn emq_from_cq<T>(teacher: &mut T, clause: &EntailmentClause) -> Result<bool>
where
    T: ClosureOracle + ?Sized,
{
    Ok(teacher.cq(&clause.antecedent.bits())?.get(clause.head))
}

/// One closure query: models are exactly the closed assignments.
pub fn smq_from_cq<T>(teacher: &mut T, x: &Assignment) -> Result<bool>
where
    T: ClosureOracle + ?Sized,
{
    Ok(teacher.cq(x)? == *x)
}

/// One standard equivalence query, turned into a clause, plus at most one
/// closure query.
///
/// A counterexample `x` the hypothesis accepts is negative: the closure
/// query yields a variable `v` the target derives from `x`, and
/// `ones(x) -> v` is the answer. Otherwise `x` is positive and `v` is
/// derived from `x` by chaining over the hypothesis. `v` is always the
/// lowest eligible index.
pub fn eeq_from_seq_cq<T>(teacher: &mut T, hypothesis: &HornFormula) -> Result<EeqAnswer>
where
    T: EquivalenceOracle + ClosureOracle + ?Sized,
{
    let x = match teacher.seq(hypothesis)? {
        SeqAnswer::Yes => return Ok(EeqAnswer::Yes),
        SeqAnswer::Counterexample(x) => x,
    };
    let derived = if satisfies(&x, hypothesis)? {
        teacher.cq(&x)?.ones()
    } else {
        closure(x.as_set(), hypothesis)?
    };
    let head = derived.difference(x.as_set()).first().ok_or_else(|| {
        Error::Invariant(format!("counterexample {x} has no separating variable"))
    })?;
    Ok(EeqAnswer::Counterexample(EntailmentClause::new(
        x.ones(),
        head,
    )?))
}

/// Inner-query accounting for one kind of simulated query.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CallRecord {
    pub calls: u64,
    pub total: QueryStats,
    /// Componentwise maximum over single calls.
    pub max_per_call: QueryStats,
}

impl CallRecord {
    fn record(&mut self, cost: QueryStats) {
        self.calls += 1;
        self.total = self.total + cost;
        self.max_per_call = self.max_per_call.max(cost);
    }
}

/// Inner-query costs of the simulated queries an adapter has answered.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AdapterStats {
    pub smq: CallRecord,
    pub seq: CallRecord,
    pub cq: CallRecord,
    pub emq: CallRecord,
    pub eeq: CallRecord,
}

impl AdapterStats {
    /// Number of simulated queries per kind.
    pub fn simulated(&self) -> QueryStats {
        QueryStats {
            smq: self.smq.calls,
            seq: self.seq.calls,
            cq: self.cq.calls,
            emq: self.emq.calls,
            eeq: self.eeq.calls,
        }
    }
}

fn metered<T, R>(
    inner: &mut T,
    record: &mut CallRecord,
    query: impl FnOnce(&mut T) -> Result<R>,
) -> Result<R>
where
    T: Oracle,
{
    let before = inner.stats();
    let answer = query(inner)?;
    record.record(inner.stats() - before);
    Ok(answer)
}

macro_rules! adapter_common {
    ($name:ident) => {
        impl<T> $name<T> {
            pub fn new(inner: T) -> Self {
                Self {
                    inner,
                    stats: AdapterStats::default(),
                }
            }

            pub fn adapter_stats(&self) -> &AdapterStats {
                &self.stats
            }

            pub fn inner(&self) -> &T {
                &self.inner
            }

            pub fn into_inner(self) -> T {
                self.inner
            }
        }

        impl<T: Oracle> Oracle for $name<T> {
            fn arity(&self) -> usize {
                self.inner.arity()
            }

            /// The wrapped teacher's own counters.
            fn stats(&self) -> QueryStats {
                self.inner.stats()
            }
        }
    };
}

/// Closure, membership and standard equivalence on top of entailment
/// queries.
#[derive(Debug)]
pub struct EntailmentAdapter<T> {
    inner: T,
    stats: AdapterStats,
}

adapter_common!(EntailmentAdapter);

impl<T: EntailmentMembershipOracle> ClosureOracle for EntailmentAdapter<T> {
    fn cq(&mut self, y: &Assignment) -> Result<Assignment> {
        metered(&mut self.inner, &mut self.stats.cq, |t| cq_from_emq(t, y))
    }
}

impl<T: EntailmentMembershipOracle> MembershipOracle for EntailmentAdapter<T> {
    fn smq(&mut self, x: &Assignment) -> Result<bool> {
        metered(&mut self.inner, &mut self.stats.smq, |t| smq_from_emq(t, x))
    }
}

impl<T> EquivalenceOracle for EntailmentAdapter<T>
where
    T: EntailmentMembershipOracle + EntailmentEquivalenceOracle,
{
    fn seq(&mut self, hypothesis: &HornFormula) -> Result<SeqAnswer> {
        metered(&mut self.inner, &mut self.stats.seq, |t| {
            seq_from_eeq_emq(t, hypothesis)
        })
    }
}

/// Entailment and membership queries on top of closure queries, with
/// standard equivalence passed through unchanged.
#[derive(Debug)]
pub struct ClosureAdapter<T> {
    inner: T,
    stats: AdapterStats,
}

adapter_common!(ClosureAdapter);

impl<T: ClosureOracle> EntailmentMembershipOracle for ClosureAdapter<T> {
    fn emq(&mut self, clause: &EntailmentClause) -> Result<bool> {
        metered(&mut self.inner, &mut self.stats.emq, |t| {
            emq_from_cq(t, clause)
        })
    }
}

impl<T: ClosureOracle> MembershipOracle for ClosureAdapter<T> {
    fn smq(&mut self, x: &Assignment) -> Result<bool> {
        metered(&mut self.inner, &mut self.stats.smq, |t| smq_from_cq(t, x))
    }
}

impl<T: ClosureOracle + EquivalenceOracle> EntailmentEquivalenceOracle for ClosureAdapter<T> {
    fn eeq(&mut self, hypothesis: &HornFormula) -> Result<EeqAnswer> {
        metered(&mut self.inner, &mut self.stats.eeq, |t| {
            eeq_from_seq_cq(t, hypothesis)
        })
    }
}

impl<T: EquivalenceOracle> EquivalenceOracle for ClosureAdapter<T> {
    fn seq(&mut self, hypothesis: &HornFormula) -> Result<SeqAnswer> {
        self.inner.seq(hypothesis)
    }
}

/// Closure queries on top of the standard protocol: the first closure
/// query runs the membership/equivalence learner to completion, and every
/// closure query is then answered by chaining over the learned formula.
#[derive(Debug)]
pub struct StandardAdapter<T> {
    inner: T,
    stats: AdapterStats,
    learned: Option<(HornFormula, ClosureEngine)>,
}

impl<T> StandardAdapter<T> {
    pub fn new(inner: T) -> Self {
        Self {
            inner,
            stats: AdapterStats::default(),
            learned: None,
        }
    }

    pub fn adapter_stats(&self) -> &AdapterStats {
        &self.stats
    }

    pub fn learned(&self) -> Option<&HornFormula> {
        self.learned.as_ref().map(|(h, _)| h)
    }

    pub fn into_inner(self) -> T {
        self.inner
    }
}

impl<T: Oracle> Oracle for StandardAdapter<T> {
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    fn stats(&self) -> QueryStats {
        self.inner.stats()
    }
}

/// `cq_from_smq_seq`.
impl<T: MembershipOracle + EquivalenceOracle> ClosureOracle for StandardAdapter<T> {
    fn cq(&mut self, y: &Assignment) -> Result<Assignment> {
        if y.arity() != self.inner.arity() {
            return Err(Error::ArityMismatch {
                expected: self.inner.arity(),
                found: y.arity(),
            });
        }
        let learned = &mut self.learned;
        metered(&mut self.inner, &mut self.stats.cq, |t| {
            if learned.is_none() {
                let report = afp(t)?;
                let engine = ClosureEngine::new(&report.output);
                *learned = Some((report.output, engine));
            }
            let (_, engine) = learned.as_ref().expect("learned above");
            Ok(engine.closure(y.as_set()).bits())
        })
    }
}

impl<T: MembershipOracle> MembershipOracle for StandardAdapter<T> {
    fn smq(&mut self, x: &Assignment) -> Result<bool> {
        self.inner.smq(x)
    }
}

impl<T: EquivalenceOracle> EquivalenceOracle for StandardAdapter<T> {
    fn seq(&mut self, hypothesis: &HornFormula) -> Result<SeqAnswer> {
        self.inner.seq(hypothesis)
    }
}

/// Order in which the lower-bound demonstration asks membership queries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmqPolicy {
    /// Every assignment in lexicographic order, `0^n` first.
    Exhaustive,
    /// `1^n` first, then lexicographic order.
    TopFirst,
    /// A seeded random permutation of all assignments.
    Shuffled(u64),
}

#[derive(Debug, Clone)]
pub struct LowerBoundReport {
    pub arity: usize,
    pub initial_candidates: u64,
    /// `(queries asked, candidates remaining)` after each query.
    pub steps: Vec<(u64, u64)>,
    /// Queries asked when a single candidate remained, if that happened.
    pub determined_after: Option<u64>,
    /// The closure of `0^n` once determined.
    pub closure: Option<Assignment>,
    /// Whether `remaining >= 2^n - 1 - queries` held after every query.
    pub invariant_held: bool,
}

impl LowerBoundReport {
    pub fn queries(&self) -> u64 {
        self.steps.last().map_or(0, |s| s.0)
    }

    pub fn remaining(&self) -> u64 {
        self.steps.last().map_or(self.initial_candidates, |s| s.1)
    }
}

/// Tries to pin down the closure of `0^n` with membership queries alone,
/// against the adversary that answers NO to everything but `1^n`.
pub fn lower_bound_demo(arity: usize, policy: SmqPolicy) -> Result<LowerBoundReport> {
    if !(2..=16).contains(&arity) {
        return Err(Error::InvalidConfig(format!(
            "lower-bound arity must be in 2..=16, got {arity}"
        )));
    }
    let mut teacher = AdversarialSmqTeacher::new(arity)?;
    let all = 1u64 << arity;
    let mut order: Vec<Assignment> = (0..all).map(|k| Assignment::nth_lex(arity, k)).collect();
    match policy {
        SmqPolicy::Exhaustive => {}
        SmqPolicy::TopFirst => order.rotate_right(1),
        SmqPolicy::Shuffled(seed) => order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed)),
    }

    let initial = teacher.remaining();
    let mut steps = Vec::with_capacity(order.len());
    let mut invariant_held = true;
    let mut determined_after = None;
    for (asked, x) in (1u64..).zip(&order) {
        teacher.smq(x)?;
        let remaining = teacher.remaining();
        invariant_held &= remaining + asked >= all - 1;
        steps.push((asked, remaining));
        if remaining == 1 {
            determined_after = Some(asked);
            break;
        }
    }
    Ok(LowerBoundReport {
        arity,
        initial_candidates: initial,
        steps,
        determined_after,
        closure: teacher.determined_bottom_closure(),
        invariant_held,
    })
}
