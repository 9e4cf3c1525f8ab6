use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed group label `{0}`")]
    Parse(String),
    #[error("unsupported group: {0}")]
    Unsupported(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("guard exceeded: {what} needs {needed}, limit is {limit}")]
    Guard { what: &'static str, needed: String, limit: String },
    #[error("wrong group type: {0}")]
    WrongType(String),
    #[error("not a cover relation")]
    NotACover,
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("Coxeter diagram not recognised: {0}")]
    Diagram(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
