use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} is out of range: {reason}")]
    InvalidDegree { degree: usize, reason: &'static str },

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid redex: {0}")]
    InvalidRedex(String),

    #[error("integer overflow computing T({0})")]
    Overflow(usize),

    #[error("association type is not in the table of degree {0}")]
    UnknownType(usize),

    #[error("walk is broken at step {step}: edge does not start where the previous one ended")]
    NotIncident { step: usize },

    #[error("walk is not closed at its base vertex")]
    NotClosed,

    #[error("group closure exceeded {cap} elements")]
    GroupTooLarge { cap: usize },

    #[error("component {0} has trivial monodromy")]
    TrivialComponent(usize),

    #[error("vertex {vertex} is not in component {component}")]
    VertexNotInComponent { vertex: u32, component: usize },

    #[error("no component with id {0}")]
    UnknownComponent(usize),

    #[error("variable collision: {0}")]
    VariableCollision(String),

    #[error("transcript step {step}: {message}")]
    Transcript { step: usize, message: String },

    #[error("cache: {0}")]
    Cache(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
