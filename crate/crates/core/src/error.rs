use thiserror::Error;

/// Errors raised by the algebra, synthesis and I/O layers.
///
/// Semantic verification failures are not errors; they are reported as
/// verdicts inside [`crate::verify::StepReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} qubits, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("qubit index {qubit} out of range for {n} qubits")]
    QubitOutOfRange { qubit: usize, n: usize },

    #[error("gate acts twice on qubit {0}")]
    RepeatedQubit(usize),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(
        "logical dimension mismatch: source encodes {source_k} qubits, target encodes {target_k}"
    )]
    KMismatch { source_k: usize, target_k: usize },

    #[error("augmented qubit counts differ: {source_total} vs {target_total}")]
    QubitCountMismatch {
        source_total: usize,
        target_total: usize,
    },

    #[error("invalid stabilizer code: {0}")]
    InvalidCode(String),

    #[error("IABC layout failure: {0}")]
    Layout(String),

    #[error("no fault-tolerant ordering found within {budget} verifier calls (best prefix {best_prefix} gates)")]
    Exhausted {
        budget: usize,
        best_prefix: usize,
        failing_gate: Option<String>,
    },

    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("unknown builtin code '{0}'")]
    UnknownBuiltin(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
