//! Model-validity diagnostics.
//!
//! Regime checks never block a computation. They are attached to results so
//! that sweeps can run through the edges of a model's validity and still show
//! where those edges are.

use std::fmt;

#[derive(Debug, Clone, PartialEq)]
pub struct Diagnostic {
    /// Short machine-readable tag, stable across releases (used in CSV flags).
    pub code: &'static str,
    pub message: String,
}

impl Diagnostic {
    pub fn new(code: &'static str, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.code, self.message)
    }
}

/// Joins diagnostic codes with `|`, or `-` when there are none.
pub fn flags(diagnostics: &[Diagnostic]) -> String {
    if diagnostics.is_empty() {
        return "-".to_string();
    }
    let mut codes: Vec<&str> = diagnostics.iter().map(|d| d.code).collect();
    codes.dedup();
    codes.join("|")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flags_joins_codes() {
        assert_eq!(flags(&[]), "-");
        let d = vec![
            Diagnostic::new("a", "x"),
            Diagnostic::new("a", "y"),
            Diagnostic::new("b", "z"),
        ];
        assert_eq!(flags(&d), "a|b");
    }
}
