use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation of 0..{n}: {image:?}")]
    NotAPermutation { n: usize, image: Vec<usize> },

    #[error("size {n} exceeds the enumeration cap of {cap}")]
    SizeTooLarge { n: usize, cap: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("matching {0:?} is not a row of the situation table")]
    MatchingNotInTable(Vec<usize>),

    #[error("malformed strategy profile: {0}")]
    MalformedProfile(String),

    #[error("maximin is only implemented for 2x2 games, got {rows}x{cols}")]
    NotTwoByTwo { rows: usize, cols: usize },

    #[error("disagreement point ({0}, {1}) lies outside the feasible region")]
    DisagreementOutsideHull(crate::Rational, crate::Rational),

    #[error("no Pareto-optimal point weakly dominates the disagreement point")]
    EmptyIndividuallyRationalRegion,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code for the CLI: 2 for size-cap refusals, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::SizeTooLarge { .. } => 2,
            _ => 1,
        }
    }
}
