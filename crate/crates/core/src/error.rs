use thiserror::Error;

/// Domain errors raised by the curve kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("weight {index} is {value}, weights must be strictly positive")]
    NonPositiveWeight { index: usize, value: f64 },

    #[error("parameter t = {0} lies outside [0, 1]")]
    ParameterOutOfRange(f64),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length mismatch: expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("derivative order {order} exceeds curve degree {degree}")]
    OrderExceedsDegree { order: usize, degree: usize },

    #[error("order {order} is not supported by this method (maximum {max})")]
    UnsupportedOrder { order: usize, max: usize },

    #[error("a curve needs at least one control point")]
    EmptyCurve,

    #[error("control points must have at least one coordinate")]
    ZeroDimension,

    #[error("non-finite coordinate {value} at index {index}")]
    NonFinite { index: usize, value: f64 },

    #[error("degenerate basis: all basis values are zero")]
    DegenerateBasis,

    #[error("basis value {index} is negative ({value})")]
    NegativeBasis { index: usize, value: f64 },

    #[error("batch curves must share degree and dimension")]
    HeterogeneousBatch,

    #[error("binomial coefficient overflow at row {row}")]
    BinomialOverflow { row: usize },

    #[error("denominator vanishes at the requested parameter")]
    ZeroDenominator,

    #[error("method {method} needs a polynomial curve (all weights equal)")]
    RequiresPolynomial { method: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
