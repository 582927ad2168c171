use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {kind}")]
    Parse { line: usize, kind: ParseErrorKind },

    #[error("assignment does not cover variable {0}")]
    MissingVariable(u32),

    #[error("{what} exceeds the configured cap ({size} > {cap})")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("clause {clause} has a single literal and can never be NAE-satisfied")]
    UnitClause { clause: usize },

    #[error("clause {clause} has width {width}, expected {expected}")]
    WidthViolation { clause: usize, width: usize, expected: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("coloring covers {got} vertices but the graph has {expected}")]
    PartialColoring { got: usize, expected: usize },

    #[error("contradictory assumptions on vertex {0}")]
    ContradictoryAssumptions(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Distinct DIMACS failure modes; each is reported with the offending line.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing or malformed `p cnf <vars> <clauses>` header")]
    MalformedHeader,
    #[error("duplicate header")]
    DuplicateHeader,
    #[error("clause data before header")]
    DataBeforeHeader,
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("literal {literal} out of range for {num_vars} variables")]
    LiteralOutOfRange { literal: i64, num_vars: u32 },
    #[error("header declares {declared} clauses but {found} were found")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("last clause is not terminated by 0")]
    MissingTerminator,
    #[error("empty clause")]
    EmptyClause,
}
