use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("classes live on distinct spaces")]
    DistinctSpaces,
    #[error("coefficient vector has length {got}, ring has {expected} basis elements")]
    LengthMismatch { expected: usize, got: usize },
    #[error("malformed ring: {0}")]
    MalformedRing(String),
    #[error("Poincaré pairing is degenerate (singular Gram matrix)")]
    DegenerateRing,
    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange { what: &'static str, value: i64, range: &'static str },
    #[error("owner ring is not a tensor product")]
    NotATensor,
    #[error("factor mismatch: {0}")]
    FactorMismatch(String),
    #[error("Chern root is not homogeneous of bidegree (1,1)")]
    NonDivisorRoot,
    #[error("inconsistent rank: declared {declared}, found {found}")]
    InconsistentRank { declared: i64, found: String },
    #[error("class has non-invertible constant term")]
    NotInvertible,
    #[error("kernel class has nonzero components outside total Hochschild degree 0")]
    KernelDegree,
    #[error("input outside the supported catalog: {0}")]
    OutsideCatalog(String),
    #[error("quiver has an oriented cycle")]
    NotDirected,
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),
    #[error("cannot parse rational `{0}`")]
    BadRational(String),
    #[error("malformed record: {0}")]
    Record(String),
}
