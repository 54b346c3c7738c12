use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabets are incompatible: {0}")]
    AlphabetMismatch(String),
    #[error("unsupported alphabet: {0}")]
    UnsupportedAlphabet(String),
    #[error("element is not weight-homogeneous: {0}")]
    Inhomogeneous(String),
    #[error("character is not that of a completely reducible sl2-module (negative multiplicity at weight {weight})")]
    NotCompletelyReducible { weight: i64 },
    #[error("degree {degree} is beyond the certified bound {bound}")]
    UncertifiedDegree { degree: usize, bound: usize },
    #[error("degree {degree} exceeds the model cap {cap}")]
    CappedDegree { degree: usize, cap: usize },
    #[error("presentation is not quadratic: {0}")]
    NotQuadratic(String),
    #[error("leading monomials do not form an antichain: {0}")]
    NotAntichain(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("integrity failure: {0}")]
    Integrity(String),
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
