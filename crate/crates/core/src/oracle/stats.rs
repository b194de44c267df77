use std::fmt;
use std::ops::{Add, Sub};

/// Per-kind query counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct QueryStats {
    pub smq: u64,
    pub seq: u64,
    pub cq: u64,
    pub emq: u64,
    pub eeq: u64,
}

impl QueryStats {
    pub fn total(&self) -> u64 {
        self.smq + self.seq + self.cq + self.emq + self.eeq
    }

    /// Componentwise maximum.
    pub fn max(self, other: QueryStats) -> QueryStats {
        QueryStats {
            smq: self.smq.max(other.smq),
            seq: self.seq.max(other.seq),
            cq: self.cq.max(other.cq),
            emq: self.emq.max(other.emq),
            eeq: self.eeq.max(other.eeq),
        }
    }
}

impl Add for QueryStats {
    type Output = QueryStats;

    fn add(self, rhs: QueryStats) -> QueryStats {
        QueryStats {
            smq: self.smq + rhs.smq,
            seq: self.seq + rhs.seq,
            cq: self.cq + rhs.cq,
            emq: self.emq + rhs.emq,
            eeq: self.eeq + rhs.eeq,
        }
    }
}

/// Saturating, so deltas of monotone counters never underflow.
impl Sub for QueryStats {
    type Output = QueryStats;

    fn sub(self, rhs: QueryStats) -> QueryStats {
        QueryStats {
            smq: self.smq.saturating_sub(rhs.smq),
            seq: self.seq.saturating_sub(rhs.seq),
            cq: self.cq.saturating_sub(rhs.cq),
            emq: self.emq.saturating_sub(rhs.emq),
            eeq: self.eeq.saturating_sub(rhs.eeq),
        }
    }
}

/// The frozen stats line: `seq=.. cq=.. smq=.. emq=.. eeq=..`.
impl fmt::Display for QueryStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "seq={} cq={} smq={} emq={} eeq={}",
            self.seq, self.cq, self.smq, self.emq, self.eeq
        )
    }
}
