use crate::error::Result;
use crate::horn::{Assignment, EntailmentClause, HornFormula};
use crate::oracle::{
    ClosureOracle, EeqAnswer, EntailmentEquivalenceOracle, EntailmentMembershipOracle,
    EquivalenceOracle, MembershipOracle, Oracle, QueryStats, SeqAnswer,
};

/// One standard equivalence query and its answer.
#[derive(Debug, Clone)]
pub struct SeqExchange {
    pub hypothesis: HornFormula,
    pub answer: SeqAnswer,
}

/// Passes every query through to the wrapped oracle and keeps a log of the
/// standard equivalence traffic.
#[derive(Debug)]
pub struct Recorder<T> {
    inner: T,
    exchanges: Vec<SeqExchange>,
}

impl<T> Recorder<T> {
    pub fn new(inner: T) -> Self {
        Self {
            inner,
            exchanges: Vec::new(),
        }
    }

    pub fn exchanges(&self) -> &[SeqExchange] {
        &self.exchanges
    }

    pub fn inner(&self) -> &T {
        &self.inner
    }

    pub fn into_inner(self) -> T {
        self.inner
    }
}

impl<T: Oracle> Oracle for Recorder<T> {
    fn arity(&self) -> usize {
        self.inner.arity()
    }

    fn stats(&self) -> QueryStats {
        self.inner.stats()
    }
}

impl<T: EquivalenceOracle> EquivalenceOracle for Recorder<T> {
    fn seq(&mut self, hypothesis: &HornFormula) -> Result<SeqAnswer> {
        let answer = self.inner.seq(hypothesis)?;
        self.exchanges.push(SeqExchange {
            hypothesis: hypothesis.clone(),
            answer: answer.clone(),
        });
        Ok(answer)
    }
}

impl<T: MembershipOracle> MembershipOracle for Recorder<T> {
    fn smq(&mut self, x: &Assignment) -> Result<bool> {
        self.inner.smq(x)
    }
}

impl<T: ClosureOracle> ClosureOracle for Recorder<T> {
    fn cq(&mut self, y: &Assignment) -> Result<Assignment> {
        self.inner.cq(y)
    }
}

impl<T: EntailmentMembershipOracle> EntailmentMembershipOracle for Recorder<T> {
    fn emq(&mut self, clause: &EntailmentClause) -> Result<bool> {
        self.inner.emq(clause)
    }
}

impl<T: EntailmentEquivalenceOracle> EntailmentEquivalenceOracle for Recorder<T> {
    fn eeq(&mut self, hypothesis: &HornFormula) -> Result<EeqAnswer> {
        self.inner.eeq(hypothesis)
    }
}
