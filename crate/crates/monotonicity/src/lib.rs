//! Indices that quantify how far a real function is from being
//! non-decreasing.
//!
//! A function on `[0, M]` is represented by samples on a uniform grid
//! ([`GridFunction`]). Its non-decreasing rearrangement is the ascending
//! sort of the samples, and two numbers measure the distance to it:
//!
//! * [`index_i`] — the L1 distance between the function and its
//!   rearrangement. Zero exactly for non-decreasing functions, invariant
//!   under vertical shifts, positively homogeneous, and subadditive over
//!   comonotonic summands.
//! * [`index_l`] — the `(1 − t)`-weighted signed gap, equivalently the
//!   integrated gap between the cumulative integral of the function and
//!   its convex rearrangement. Shares the zero set and the invariances,
//!   never exceeds `index_i` on the unit domain, and is fully *additive*
//!   over comonotonic summands.
//!
//! Discretized on `n` cells both estimators converge to the exact indices
//! as the grid refines, with error at most twice the L1 distance between
//! the function and its sampled step function.
//!
//! ```
//! use monotonicity::{index_i_unit, index_l_unit, GridFunction};
//!
//! let g = GridFunction::unit(vec![2.0, 1.0, 3.0]).unwrap();
//! assert_eq!(index_i_unit(&g), 2.0 / 3.0);
//! assert_eq!(index_l_unit(&g), 1.0 / 9.0);
//!
//! let sorted = GridFunction::unit(vec![1.0, 2.0, 3.0]).unwrap();
//! assert_eq!(index_i_unit(&sorted), 0.0);
//! ```

pub mod error;
pub mod grid;
pub mod indices;
pub mod io;
mod kahan;
pub mod oracles;
pub mod rearrangement;

pub use error::Error;
pub use grid::{sample, AnalyticFunction, GridFunction, SampleRule};
pub use indices::{
    converge, index_i, index_i_unit, index_l, index_l_unit, index_l_via_cumulative, report,
    ConvergenceRun, ConvergenceStep, IndexReport, RichardsonGap,
};
pub use oracles::{
    brute_force_index_i, check_comonotonic, ComonotonicityVerdict, HAlphaOracle,
};
pub use rearrangement::{
    cumulative_pair, distribution, rearrange, CumulativePair, Rearrangement,
};
