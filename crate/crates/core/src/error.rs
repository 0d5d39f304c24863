use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0:?} declared twice")]
    DuplicateVertex(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("loop at vertex {0:?}")]
    Loop(String),
    #[error("edge {{{0}, {1}}} listed more than once")]
    MultipleEdge(String, String),
    #[error("orientation arc ({0}, {1}) is not an edge")]
    OrientationNotAnEdge(String, String),
    #[error("edge {{{0}, {1}}} oriented twice")]
    OrientationRepeated(String, String),
    #[error("orientation covers {oriented} of {edges} edges")]
    OrientationIncomplete { oriented: usize, edges: usize },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("non-positive parameter: {0}")]
    NonPositiveParameter(String),
    #[error("bad parameters for {family}: {detail}")]
    BadParameters { family: String, detail: String },
    #[error("vertex map has no image for {0:?}")]
    MorphismIncomplete(String),
    #[error("malformed JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
    #[error("{dim}-cube #{cube}: {detail}")]
    BadFace {
        dim: usize,
        cube: usize,
        detail: String,
    },
    #[error("duplicate {dim}-cube label {label}")]
    DuplicateLabel { dim: usize, label: String },
    #[error("surface recognition needs dimension at most 2, complex has dimension {0}")]
    DimensionTooHigh(usize),
    #[error("complex is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("enumeration exceeded the budget of {0} cubes")]
    BudgetExceeded(usize),
    #[error("malformed complex JSON: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RaagError {
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("cannot parse letter {0:?}")]
    BadLetter(String),
    #[error("search space of {needed} candidates exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("certificate does not replay: step {step}: {detail}")]
    Replay { step: usize, detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapsError {
    #[error("map is not cubical: {0}")]
    NotCubical(String),
    #[error("cover is not valid: {0}")]
    InvalidCover(String),
    #[error("cover target does not match the opposite of the defining graph")]
    TargetMismatch,
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Raag(#[from] RaagError),
}
