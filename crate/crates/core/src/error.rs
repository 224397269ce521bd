use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
  #[error("domain error: {0}")]
  Domain(String),
  #[error("parse error: {0}")]
  Parse(String),
  #[error("dimension mismatch: expected {expected}, got {got}")]
  DimensionMismatch { expected: usize, got: usize },
  #[error("invalid input: {0}")]
  Invalid(String),
  /// An operator image left the span it was required to stay in.
  #[error("image escapes codomain span: {0}")]
  Structural(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
