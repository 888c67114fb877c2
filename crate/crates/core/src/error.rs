use thiserror::Error;

use crate::stateset::StateSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("state {state} out of range for an automaton with {n} states")]
    StateOutOfRange { state: usize, n: usize },

    #[error("letter {letter} out of range for an alphabet of size {sigma}")]
    LetterOutOfRange { letter: usize, sigma: usize },

    #[error("state set over {got} states used with an automaton of {expected} states")]
    UniverseMismatch { expected: usize, got: usize },

    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    Input(String),

    #[error("automaton is not synchronizing")]
    NotSynchronizing,

    #[error("automaton is not strongly connected")]
    NotStronglyConnected,

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("unsupported parameters: {0}")]
    Unsupported(String),

    #[error("search budget exceeded: {0}")]
    Budget(String),

    /// The expansion loop found no word growing `stuck`.
    #[error(
        "expansion failed at {stuck} (synchronizing: {synchronizing}, strongly connected: {strongly_connected})"
    )]
    ExpansionFailure {
        stuck: StateSet,
        synchronizing: bool,
        strongly_connected: bool,
    },

    /// A step of the independent-collection expansion needed a word longer
    /// than `n + L - 1`; this contradicts a known theorem and signals a bug.
    #[error("no extension word of length <= {cap} for {stuck}")]
    Anomaly { stuck: StateSet, cap: usize },
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}
