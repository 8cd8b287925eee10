use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussIntError {
    #[error("invalid Gaussian integer {token:?}")]
    Parse { token: String },
    #[error("zero has no canonical associate")]
    ZeroHasNoAssociate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolutionError {
    #[error("quadruple does not satisfy w^e + x^e = y^e + z^e")]
    NotASolution,
    #[error("({a}, {b}, {c}) is not a Pythagorean triple")]
    NotPythagorean { a: u64, b: u64, c: u64 },
    #[error("exponent must be positive")]
    ZeroExponent,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search bound must be at least 1")]
    ZeroBound,
    #[error("shard count must be at least 1")]
    ZeroShards,
    #[error("exponent must be positive")]
    ZeroExponent,
    #[error("bound {0} is too large for the search box")]
    BoundTooLarge(u64),
}
