use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("bond label {label} between s{} and s{} is not crystallographic (rank {rank} needs labels in {{2,3,4,6}})", .pair.0 + 1, .pair.1 + 1)]
    UnsupportedBond {
        label: u32,
        pair: (usize, usize),
        rank: usize,
    },
    #[error("group enumeration exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("element is not in the left ideal generated by the parabolic KL element")]
    NotInIdeal,
    #[error("{0} is not a minimal coset representative for the chosen subset")]
    NotMinimalCosetRep(String),
    #[error("unknown generator label {0:?}")]
    UnknownGenerator(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
    #[error("subset mismatch: operands live over different parabolic subsets")]
    SubsetMismatch,
}
