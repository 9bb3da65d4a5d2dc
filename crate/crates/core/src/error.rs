use thiserror::Error;

use crate::lattice::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus l = {0} is unsupported (l >= 3 required)")]
    InvalidModulus(i64),

    #[error("position {x} lies left of the wall at {wall}")]
    LeftOfWall { x: i64, wall: i64 },

    #[error("({x}, {n}) is not a lattice point: level must be >= 0 and x + n even")]
    Parity { x: i64, n: i64 },

    #[error("position {0} must be non-negative")]
    NegativePosition(i64),

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("unsupported case: {0}")]
    Unsupported(&'static str),

    #[error("position {m} is outside strip {strip} for l = {l}")]
    StripMismatch { l: i64, strip: i64, m: i64 },

    #[error("exhaustive enumeration refused: N = {n} exceeds guard {guard}")]
    EnumerationGuard { n: i64, guard: i64 },

    #[error("no boundary value supplied for boundary point {0}")]
    IncompleteSeed(LatticePoint),

    #[error("seed supplied for {0}, which is not a boundary point of the region")]
    UnexpectedSeed(LatticePoint),

    #[error("decomposition is malformed: {0}")]
    MalformedDecomposition(String),

    #[error("certificate has a pole: factor `{factor}` vanishes")]
    Pole { factor: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
