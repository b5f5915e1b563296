use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("line {line}: expected `key = value`, found `{text}`")]
    Syntax { line: usize, text: String },

    #[error("line {line}: unknown key `{key}`")]
    UnknownKey { key: String, line: usize },

    #[error("key `{key}` does not apply to material `{material}`")]
    NotApplicable { key: String, material: String },

    #[error("line {line}: key `{key}` given twice")]
    Duplicate { key: String, line: usize },

    #[error("missing required keys: {}", keys.join(", "))]
    MissingKeys { keys: Vec<String> },

    #[error("invalid value `{value}` for `{key}`: expected {expected}")]
    InvalidValue {
        key: String,
        value: String,
        expected: String,
    },

    #[error("{0}")]
    Constraint(String),

    #[error("unknown preset `{name}` (available: {})", crate::presets::NAMES.join(", "), name = .0)]
    UnknownPreset(String),
}

impl ConfigError {
    pub(crate) fn invalid(key: &str, value: &str, expected: impl Into<String>) -> Self {
        ConfigError::InvalidValue {
            key: key.to_string(),
            value: value.to_string(),
            expected: expected.into(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(#[from] ConfigError),

    #[error("solver error: {0}")]
    Solver(#[from] spinflip_core::Error),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("nothing to plot: the result has no rows")]
    EmptyResult,
}

impl CliError {
    /// 0 success, 1 I/O, 2 configuration, 3 solver or quadrature failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } => 1,
            CliError::Config(_) | CliError::EmptyResult => 2,
            CliError::Solver(_) => 3,
        }
    }
}
