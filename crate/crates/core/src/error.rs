use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid probability {0}: must lie in [0, 1]")]
    InvalidProbability(f64),

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge #{index} ({u}, {v}) breaks canonical order (need u < v, strictly increasing, no duplicates)")]
    NotCanonical { index: usize, u: usize, v: usize },

    #[error("graph too large: {0}")]
    TooLarge(String),

    #[error("graph is not connected")]
    NotConnected,

    #[error("graph on {n} vertices too large for exact chromatic number (cap {cap})")]
    ChromaticCapExceeded { n: usize, cap: usize },

    #[error("graph with {m} edges too large for exact mc search (cap {cap})")]
    ExactCapExceeded { m: usize, cap: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("coloring has {found} labels but graph has {expected} edges")]
    ColoringMismatch { expected: usize, found: usize },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("n = {0} below formula domain (threshold formulas need n >= 16)")]
    FormulaDomain(usize),

    #[error("invalid threshold spec: {0}")]
    InvalidSpec(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("config field `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("bracket does not straddle 1/2: frac_yes {low_frac} at low end, {high_frac} at high end")]
    NonStraddlingBracket { low_frac: f64, high_frac: f64 },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
