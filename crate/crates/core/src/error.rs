use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex count must be at least 2, got {0}")]
    TooFewVertices(usize),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("register has {available} lines, layout needs at least {required}")]
    LayoutTooSmall { required: usize, available: usize },

    #[error("rank {rank} out of range, there are {count} initializations")]
    RankOutOfRange { rank: u64, count: u64 },

    #[error("not a fixed-start permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),

    #[error("arithmetic overflow evaluating {0}")]
    Overflow(&'static str),

    #[error("multi-controlled NOT with {controls} controls needs {required} scratch lines, {available} supplied")]
    InsufficientScratch { controls: usize, required: usize, available: usize },

    #[error("invalid layout: {0}")]
    InvalidLayout(String),

    #[error("invalid gate: {0}")]
    InvalidGate(String),

    #[error("circuit contains irreversible gates and cannot be inverted")]
    Irreversible,

    #[error("gate operand {line} out of range for register width {width}")]
    OperandOutOfRange { line: usize, width: usize },

    #[error("register width {got} does not match circuit width {expected}")]
    WidthMismatch { expected: usize, got: usize },

    #[error("code space of 2^{bits} is too large, the exhaustive run is limited to {max} workspace bits")]
    CodeSpaceTooLarge { bits: usize, max: usize },

    #[error("unknown mode `{0}`, expected reversible-full, cmos-oneshot or cmos-reduced")]
    UnknownMode(String),

    #[error("operation requires mode {expected}, circuit is {got}")]
    WrongMode { expected: &'static str, got: &'static str },
}
