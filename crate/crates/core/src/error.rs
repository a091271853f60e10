use thiserror::Error;

/// Errors raised by the library. Every variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotAPartition(Vec<u32>),

    #[error("partition {partition:?} does not fit in the {rows}x{cols} box")]
    OutsideBox {
        partition: Vec<u32>,
        rows: usize,
        cols: usize,
    },

    #[error("Grassmannian G({k},{n}) requires 1 <= k <= n-1")]
    InvalidGrassmannian { k: usize, n: usize },

    #[error("{what} = {value} outside the allowed range {range}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: String,
    },

    #[error("degrees {lhs} + {rhs} do not add up to dim G(k,n) = {dim}")]
    DimensionMismatch { lhs: usize, rhs: usize, dim: usize },

    #[error("expansion is not homogeneous")]
    NotHomogeneous,

    #[error("vector of length {got} does not match ambient dimension {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("ambient dimension {0} exceeds the supported maximum of 6")]
    DimensionTooLarge(usize),

    #[error("cone generators must be nonzero")]
    ZeroGenerator,

    #[error("pairing matrix is singular; the curves do not span the dual space")]
    SingularPairing,

    #[error("malformed pairing matrix: {0}")]
    MalformedPairing(String),

    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
