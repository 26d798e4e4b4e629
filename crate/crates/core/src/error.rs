use thiserror::Error;

/// Errors produced while building or analysing posets.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element {element} is out of range 1..={n}")]
    OutOfRange { element: usize, n: usize },

    #[error("cover relations contain a cycle: {}", fmt_cycle(.0))]
    Cycle(Vec<usize>),

    #[error("poset has {n} elements; at most {max} are supported")]
    TooLarge { n: usize, max: usize },

    #[error("{what} requires n <= {max}, got {n}")]
    Guard {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("x and y must be distinct (got {0} twice)")]
    SamePair(usize),

    #[error("alpha must lie in [0, 1/2], got {0}")]
    AlphaOutOfRange(String),

    #[error("q = {0} is not a prime")]
    NotPrime(u64),

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("the poset is a chain")]
    Chain,

    #[error("no case of the shape analysis applies to {0}")]
    NoCaseApplies(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

fn fmt_cycle(c: &[usize]) -> String {
    c.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" -> ")
}

pub type Result<T> = std::result::Result<T, Error>;
