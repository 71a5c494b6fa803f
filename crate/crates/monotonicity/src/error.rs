use thiserror::Error;

/// Errors produced by grid construction, sampling, and the index
/// computations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("grid needs at least one sample")]
    EmptyGrid,
    #[error("sample at index {index} is not finite")]
    NonFiniteSample { index: usize },
    #[error("domain length must be a positive finite number, got {value}")]
    InvalidDomainLength { value: f64 },
    #[error("{name} must be {requirement}, got {value}")]
    InvalidParameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },
    #[error("piecewise-linear knots must be finite, strictly increasing in t, and span [0, 1]")]
    InvalidKnots,
    #[error("argument t = {value} lies outside [0, 1]")]
    OutOfDomain { value: f64 },
    #[error("quantile level must lie in (0, 1], got {value}")]
    InvalidQuantileLevel { value: f64 },
    #[error("grids must share the same sample count and domain length")]
    GridMismatch,
    #[error("brute-force oracle accepts at most 12 samples, got {n}")]
    BruteForceTooLarge { n: usize },
    #[error("grid size overflowed while doubling")]
    GridTooLarge,
}
