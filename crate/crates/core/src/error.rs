use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    TableShape(String),
    #[error("table is not closed: entry ({row}, {col}) = {value} is out of range")]
    NotClosed { row: usize, col: usize, value: usize },
    #[error("table has no identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("table is not associative: ({a} * {b}) * {c} != {a} * ({b} * {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("group order {order} exceeds the configured cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },
    #[error("{0} is not a subgroup")]
    NotASubgroup(String),

    #[error("map is not a homomorphism: f({x} * {y}) != f({x}) * f({y})")]
    NotAHomomorphism { x: usize, y: usize },
    #[error("expected {expected} generator images, got {got}")]
    WrongImageCount { expected: usize, got: usize },
    #[error("search budget of {budget} candidate nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),
    #[error("images do not commute: {a} * {b} != {b} * {a}")]
    ImagesDoNotCommute { a: usize, b: usize },
    #[error("homomorphism is not an automorphism")]
    NotAutomorphism,

    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not invariant under the endomorphism")]
    NotInvariant,

    #[error("commuting condition violated in row {row}: images of columns {k} and {l} do not commute")]
    CommutingConditionViolated { row: usize, k: usize, l: usize },
    #[error("factor mismatch: {0}")]
    FactorMismatch(String),
    #[error("factors {0} and {1} are not identical")]
    FactorsNotIdentical(usize, usize),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid endomorphism spec: {0}")]
    InvalidSpec(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
