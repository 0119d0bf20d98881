use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("valuation of zero")]
    ValuationOfZero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("mismatched orders: mu_{0} vs mu_{1}")]
    OrderMismatch(u64, u64),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("not a member of {group}: {reason}")]
    NotInGroup { group: String, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no {r}-th roots of unity in the residue field of {p}")]
    NoRootsOfUnity { p: u64, r: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("ambiguous sign for e'_({0},{1}): both signs are symplectic")]
    AmbiguousSign(usize, usize),
}

pub type Result<T> = std::result::Result<T, Error>;
