use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic polynomial index must be positive")]
    ZeroCyclotomicIndex,

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),

    #[error("{value} is not coprime to {modulus}")]
    NotCoprime { value: i64, modulus: u64 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("invalid Lie parameters: {0}")]
    InvalidParams(String),

    #[error("polynomial division by the zero polynomial")]
    DivisionByZero,

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("generic degree does not evaluate to an integer at {0}")]
    InexactDegree(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("beta-set length {length} is smaller than the number of parts {parts}")]
    BetaSetTooShort { length: usize, parts: usize },

    #[error("enumeration bound exceeded: requested {requested}, bound {bound}")]
    BoundExceeded { requested: usize, bound: usize },

    #[error("(n, e_q) = ({n}, {e_q}) is excluded: no partition of n has an e_q-core of rank other than m")]
    ExcludedPair { n: usize, e_q: usize },

    #[error("witness parameters out of range: {0}")]
    WitnessPrecondition(String),

    #[error("no candidate construction verified for {0}")]
    ConstructionFailed(String),

    #[error("invalid symbol: {0}")]
    InvalidSymbol(String),

    #[error("symbol defect {defect} does not fit series {series}")]
    DefectMismatch { defect: usize, series: String },

    #[error("symbol is not a {e}-core")]
    NotACore { e: usize },

    #[error("symbol does not have the trivial {e}-core")]
    NontrivialCore { e: usize },

    #[error("parameters outside the table row conditions: {0}")]
    OutsideTable(String),

    #[error("rank mismatch: expected {expected}, got {actual}")]
    RankMismatch { expected: usize, actual: usize },

    #[error("labels belong to different series or ranks")]
    SeriesMismatch,

    #[error("character table rejected: {0}")]
    TableInvariant(String),

    #[error("character table schema violation: {0}")]
    Schema(String),

    #[error("central character is not integral for character {chi} on class {class}")]
    NonIntegral { chi: usize, class: usize },

    #[error("prime {p} does not divide the group order")]
    PrimeNotDividing { p: u64 },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
