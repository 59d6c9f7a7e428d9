use thiserror::Error;

use crate::partitions::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable mismatch: `{0}` vs `{1}`")]
    VariableMismatch(char, char),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("cannot evaluate a polynomial with negative valuation at zero")]
    ZeroEvaluation,

    #[error("size mismatch: partitions of {0} and {1}")]
    SizeMismatch(usize, usize),

    #[error("{what}: n = {n} exceeds the cap {cap}")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
    },

    #[error("not a partition: {0:?}")]
    InvalidPartition(Vec<usize>),

    #[error("inexact polynomial division while computing {0}")]
    NonExactDivision(String),

    #[error("sum over unipotent classes is not divisible by |G| for mu = {0}")]
    NonzeroRemainder(Partition),

    #[error("expected an integer, found {0}")]
    NonInteger(String),

    #[error("{0} is not a supported prime power")]
    NotPrimePower(u64),

    #[error("group too large to enumerate: {0} candidate matrices")]
    GroupTooLarge(u64),
}
