use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("value {value} exceeds ambient size n={n}")]
    AmbientSize { value: usize, n: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("ground set of size {0} is too large")]
    TooLarge(usize),
    #[error("point {0} is not in the lattice-point set")]
    NotInSet(String),
    #[error("exact division by x_{i} - x_{j} left a nonzero remainder", j = .0 + 1, i = .0)]
    DivisionRemainder(usize),
    #[error("Ehrhart interpolation disagrees with the direct count at t={t}: interpolated {interpolated}, counted {counted}")]
    EhrhartMismatch {
        t: u64,
        interpolated: String,
        counted: u64,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
