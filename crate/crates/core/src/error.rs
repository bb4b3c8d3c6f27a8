use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("index {index} out of range (bound {bound})")]
    IndexOutOfRange { index: i64, bound: i64 },

    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),

    #[error("unknown solid `{0}`")]
    UnknownSolid(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("budget exceeded: {what} is {size}, limit {limit}")]
    BudgetExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("map is not 3-regular")]
    NotThreeRegular,

    #[error("map is not 4-regular")]
    NotFourRegular,

    #[error("edge set is not a single edge orbit forming a perfect matching")]
    NotPerfectMatchingOrbit,

    #[error("map is edge-transitive; no transitive crossing assignment is attempted")]
    EdgeTransitiveInput,

    #[error("no symmetric crossing assignment extends the seed crossing")]
    InconsistentPropagation,

    #[error("map is not connected")]
    NotConnected,

    #[error("map is not spherical: {0}")]
    NotSpherical(String),

    #[error("invalid map: {0}")]
    InvalidMap(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("invalid braid word: {0}")]
    InvalidBraid(String),

    #[error("layout degenerate: {0}")]
    LayoutDegenerate(String),

    #[error("i/o failure: {0}")]
    IoFailure(#[from] std::io::Error),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Variant name, as reported on stderr by the command-line driver.
    pub fn name(&self) -> &'static str {
        match self {
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::CompositeModulus(_) => "CompositeModulus",
            Error::UnknownSolid(_) => "UnknownSolid",
            Error::BadParameter(_) => "BadParameter",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::NotThreeRegular => "NotThreeRegular",
            Error::NotFourRegular => "NotFourRegular",
            Error::NotPerfectMatchingOrbit => "NotPerfectMatchingOrbit",
            Error::EdgeTransitiveInput => "EdgeTransitiveInput",
            Error::InconsistentPropagation => "InconsistentPropagation",
            Error::NotConnected => "NotConnected",
            Error::NotSpherical(_) => "NotSpherical",
            Error::InvalidMap(_) => "InvalidMap",
            Error::InvalidDiagram(_) => "InvalidDiagram",
            Error::InvalidBraid(_) => "InvalidBraid",
            Error::LayoutDegenerate(_) => "LayoutDegenerate",
            Error::IoFailure(_) => "IOFailure",
            Error::Json(_) => "Json",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
