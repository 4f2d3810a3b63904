use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("{what} = {value} is outside the supported range {range}")]
    OutOfRange {
        what: &'static str,
        value: u64,
        range: &'static str,
    },

    #[error("vertex index {index} does not fit in dimension {dim}")]
    VertexOutOfRange { index: u64, dim: u32 },

    #[error("duplicate element {0}")]
    Duplicate(String),

    #[error("coordinate index {index} out of range for dimension {dim}")]
    CoordinateOutOfRange { index: usize, dim: usize },

    #[error("operation needs dimension at least {min}, got {dim}")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("point {0} has the wrong number of coordinates")]
    PointArity(String),

    #[error("point set is not normalized (negative coordinate present)")]
    NotNormalized,

    #[error("compression needs M >= 2 on coordinate {coordinate}, found M_j = {coordinate_max}, M = {max}")]
    CompressionPrecondition {
        coordinate: usize,
        coordinate_max: i64,
        max: i64,
    },

    #[error("compressed set needs more than {max} cube dimensions")]
    CubeTooLarge { max: u32 },

    #[error("invalid direction set: {0}")]
    InvalidDirections(String),

    #[error("direction set is not good up to bound {bound}: witness {witness:?}")]
    NotGood { bound: u32, witness: Vec<i64> },

    #[error("enumeration of {needed} items exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("no good direction set found after {0} attempts")]
    SamplingFailed(usize),

    #[error("direction count {got} does not match the {expected} needed for n = {n}")]
    DimensionMismatch {
        n: usize,
        expected: usize,
        got: usize,
    },

    #[error("points {0} and {1} coincide within tolerance")]
    CoincidentPoints(usize, usize),

    #[error("pair ({i}, {j}) at distance {distance} is within ten tolerances of 1 but outside the unit band")]
    ToleranceAmbiguity { i: usize, j: usize, distance: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
