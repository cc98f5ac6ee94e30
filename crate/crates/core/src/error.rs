use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("brute-force oracle refuses graphs with {n} vertices (limit {limit})")]
    OracleTooLarge { n: usize, limit: usize },

    #[error("invalid generator spec `{spec}`: {reason}")]
    GeneratorSpec { spec: String, reason: String },

    #[error("invalid configuration: {0}")]
    Config(String),

    /// An input file could not be opened or parsed.
    #[error("reading {}", path.display())]
    Input { path: PathBuf, source: Box<Error> },

    #[error(transparent)]
    Io(#[from] io::Error),
}
