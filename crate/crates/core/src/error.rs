use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("event {index}: position {pos} out of range for {strands} strands")]
    PositionOutOfRange { index: usize, pos: usize, strands: usize },

    #[error("terminal strand count {0} is odd or zero")]
    OddStrandCount(usize),

    #[error("closure has {0} components; only knots are supported")]
    MultiComponent(usize),

    #[error("rotation number is {0}; no integer Maslov potential exists")]
    RotationNonzero(u32),

    #[error("degree-0 search space of {size} crossings exceeds cap {cap}")]
    SearchTooLarge { size: usize, cap: usize },

    #[error("front is not in special form: {0}")]
    NotSpecialForm(String),

    #[error("Maslov number is zero; fertility is undefined")]
    MaslovZero,

    #[error("not an augmentation: {0}")]
    NotAnAugmentation(String),

    #[error("polynomial {0} does not have the duality shape t + p(t) + p(1/t)")]
    DualityViolation(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by malformed user input rather than by a
    /// failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. }
                | Error::PositionOutOfRange { .. }
                | Error::OddStrandCount(_)
                | Error::MultiComponent(_)
                | Error::InvalidArgument(_)
        )
    }
}
