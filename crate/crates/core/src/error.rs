use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for arity {arity}")]
    IndexOutOfRange { index: usize, arity: usize },

    #[error("implication consequent must be nonempty")]
    EmptyConsequent,

    #[error("arity {arity} exceeds the brute-force limit of {limit}")]
    BruteForceLimit { arity: usize, limit: usize },

    #[error("formula is not right-saturated (implication {index})")]
    NotRightSaturated { index: usize },

    #[error("no stored closure for hypothesis entry {0}")]
    MissingClosure(String),

    #[error(
        "teacher returned a positive counterexample {0} to a hypothesis entailed by the target"
    )]
    PositiveCounterexample(String),

    #[error("the top assignment does not index a family member")]
    TopAssignment,

    #[error("invalid generator configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown corpus entry `{0}`")]
    UnknownCorpusEntry(String),

    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("learner invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `vars:` header")]
    MissingHeader,
    #[error("unknown token `{0}`")]
    UnknownToken(String),
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("duplicate variable `{0}` in header")]
    DuplicateVariable(String),
    #[error("expected exactly one `->`")]
    MissingArrow,
    #[error("empty consequent")]
    EmptyConsequent,
}
