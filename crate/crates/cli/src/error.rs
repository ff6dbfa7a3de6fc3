use std::fmt;

use packhopf::AlgebraError;
use thiserror::Error;

/// A syntax error with the byte offset where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub input: String,
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(input: &str, position: usize, message: impl Into<String>) -> Self {
        ParseError {
            input: input.to_string(),
            position,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let col = self.input[..self.position.min(self.input.len())].chars().count();
        writeln!(f, "parse error at position {}: {}", self.position, self.message)?;
        writeln!(f, "  {}", self.input)?;
        write!(f, "  {}^", " ".repeat(col))
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Algebra(#[from] AlgebraError),
    #[error("{0}")]
    Usage(String),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}
