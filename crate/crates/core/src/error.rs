use std::fmt;

use thiserror::Error;

/// The three name sorts of a vocabulary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sort {
    Individual,
    Concept,
    Role,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sort::Individual => "individual",
            Sort::Concept => "concept",
            Sort::Role => "role",
        })
    }
}

/// Position of a token in parser input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SourceSpan {
    /// 1-based line.
    pub line: usize,
    /// 1-based column, counted in characters.
    pub column: usize,
    /// Byte offset into the input.
    pub offset: usize,
}

impl fmt::Display for SourceSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{span}: lexical error: {message}")]
    Lexical { span: SourceSpan, message: String },

    #[error("{span}: syntax error: {message}")]
    Syntax { span: SourceSpan, message: String },

    #[error("{}sort clash: `{name}` is used both as {first} and as {second}", .span.map(|s| format!("{s}: ")).unwrap_or_default())]
    SortClash {
        name: String,
        first: Sort,
        second: Sort,
        span: Option<SourceSpan>,
    },

    #[error("unknown {sort} name `{name}`")]
    UnknownName { name: String, sort: Sort },

    #[error("brute-force enumeration needs {bits} candidate bits, cap is {cap}")]
    CapExceeded { bits: usize, cap: usize },

    #[error("unsupported construct in `{axiom}`: {construct} (use the semantics oracle for this knowledge base)")]
    Unsupported { construct: String, axiom: String },

    #[error("not a normalized knowledge base: {0}")]
    NotNormalized(String),

    #[error("unsafe rule: {0}")]
    UnsafeRule(String),

    #[error("program outside solver contract: {0}")]
    SolverContract(String),

    #[error("knowledge base has no individuals")]
    NoIndividuals,

    #[error("model verification failed: {0}")]
    Verification(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
