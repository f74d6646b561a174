use thiserror::Error;

/// Errors raised by library operations.
///
/// Verification outcomes (violated morphism conditions, failed recognition
/// checks) are not errors; they are returned as report content.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input error: {0}")]
    Input(String),

    #[error("regex parse error at position {position}: {message}")]
    Regex { position: usize, message: String },

    #[error("spec file syntax error on line {line}: {message}")]
    SpecSyntax { line: usize, message: String },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("depth exhausted: cannot act on a depth-0 point")]
    DepthExhausted,

    #[error("resource limit: monoid exceeds {cap} elements")]
    MonoidCap { cap: usize },

    #[error("unsupported presentation: {0}")]
    UnsupportedPresentation(String),

    #[error("automaton is not trim: state {state} is unreachable from the initial state")]
    NotTrim { state: usize },

    #[error("recognition mismatch on word {witness:?}")]
    RecognitionMismatch { witness: String },

    #[error("map is not well defined: words {left:?} and {right:?} have equal source images but distinct target images")]
    IllDefined { left: String, right: String },
}

pub type Result<T> = std::result::Result<T, Error>;
