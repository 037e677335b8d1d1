use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has a pole at q = 0 and is not in the crystal lattice ring")]
    PoleAtZero(String),
    #[error("negative argument {0} to q-integer")]
    NegativeQInt(i64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("letter {letter} outside alphabet 1..={n}")]
    LetterOutOfRange { letter: u32, n: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("singular system in graded component {0}")]
    Singular(String),
    #[error("rewriting step budget exhausted after {0} steps")]
    StepBudget(usize),
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}
