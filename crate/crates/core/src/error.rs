use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("chain scale must satisfy 1 <= n <= {max}, got {n}")]
    InvalidScale { n: usize, max: usize },

    #[error("index {index} is outside the chain 0..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("not a uninorm:\n{0}")]
    NotAUninorm(CheckReport),

    #[error("restriction to {which} is empty (neutral element {e})")]
    EmptyRestriction { which: &'static str, e: usize },

    #[error("restriction to [{lo}, {hi}] is not closed: U({x}, {y}) = {value}")]
    RestrictionNotClosed { lo: usize, hi: usize, x: usize, y: usize, value: usize },

    #[error("uninorm with neutral element {e} on L_{n} is not proper")]
    NotProper { e: usize, n: usize },

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("scale mismatch: L_{left} vs L_{right}")]
    ScaleMismatch { left: usize, right: usize },

    #[error("wrong case: {0}")]
    WrongCase(String),

    #[error("inconsistent family spec: {0}")]
    InconsistentSpec(String),

    #[error("{0}")]
    Parse(#[from] ParseError),

    #[error("pair is not distributive, refusing to decompose:\n{0}")]
    NotDistributive(CheckReport),

    #[error("composition rejected:\n{0}")]
    CompositionRejected(CheckReport),

    #[error("composition produced invalid candidates:\n{0}")]
    CompositionInvalid(CheckReport),

    #[error("malformed decomposition: {0}")]
    MalformedDecomposition(String),

    #[error("L_{n} exceeds the configured limit {limit}; the search space grows super-exponentially, raise --max-n deliberately")]
    ScaleLimit { n: usize, limit: usize },
}

/// A parse failure with a 1-based position in the source text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{column}: {message}{}", caret_suffix(.source_line, *.column))]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub source_line: Option<String>,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into(), source_line: None }
    }

    pub fn with_source(mut self, source_line: impl Into<String>) -> Self {
        self.source_line = Some(source_line.into());
        self
    }
}

fn caret_suffix(source: &Option<String>, column: usize) -> String {
    match source {
        Some(s) => format!("\n  {}\n  {}^", s, " ".repeat(column.saturating_sub(1))),
        None => String::new(),
    }
}
