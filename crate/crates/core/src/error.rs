use thiserror::Error;

/// Errors raised by the engine.
///
/// Variants that name a convention failure (`NotWellDefined`, `ZigZagFailure`,
/// `RestrictionFailed`) indicate corrupted input or a broken structure map, never
/// a legitimate mathematical outcome. Check failures are reported through
/// [`crate::CheckReport`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("subspace is not contained in the numerator")]
    NotContained,
    #[error("induced map is not well defined: {0}")]
    NotWellDefined(String),
    #[error("objects live over different coalgebras")]
    MixedCoalgebras,
    #[error("not a complex: d∘d ≠ 0 at degree {0}")]
    NotAComplex(i64),
    #[error("not a bicomplex: {0}")]
    NotABicomplex(String),
    #[error("bifunctor cannot consume these objects: {0}")]
    CatalogMismatch(String),
    #[error("coaction does not restrict to the cotensor kernel")]
    RestrictionFailed,
    #[error("zig-zag failed: {0}")]
    ZigZagFailure(String),
    #[error("pivot verification failed: {0}")]
    PivotFailure(String),
    #[error("singular matrix")]
    Singular,
}

pub type Result<T> = std::result::Result<T, Error>;
