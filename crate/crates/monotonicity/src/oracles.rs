//! Closed-form ground truth and brute-force checkers.
//!
//! Nothing here touches the sort-based fast paths: the brute-force index
//! walks the definitional route (distribution function → generalized
//! inverse → cell-by-cell integration) and the `HAlpha` formulas come from
//! direct integration of the piecewise-linear family, so either side can
//! catch a bug in the other.

use crate::error::Error;
use crate::grid::GridFunction;

/// Largest grid the brute-force index accepts; it scans all samples per
/// cell per candidate, so it is meant for tiny cross-check grids only.
pub const BRUTE_FORCE_MAX_N: usize = 12;

/// Tolerance on pairwise increment products: products down to `-1e-12` are
/// treated as comonotonic so that floating-point noise does not produce
/// false violations when testing additivity laws.
pub const COMONOTONICITY_EPSILON: f64 = 1e-12;

/// Exact indices and rearrangement for the `HAlpha` family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HAlphaOracle {
    alpha: f64,
}

impl HAlphaOracle {
    pub fn new(alpha: f64) -> Result<Self, Error> {
        if !(alpha.is_finite() && (0.0..=1.0).contains(&alpha)) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                requirement: "within [0, 1]",
                value: alpha,
            });
        }
        Ok(Self { alpha })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    /// Closed-form L1 index: `(1 − 2α)(1 − α) / (2(3 − 2α))` below the
    /// monotone threshold `α = 1/2`, zero at or above it.
    pub fn index_i(&self) -> f64 {
        let a = self.alpha;
        if a >= 0.5 {
            0.0
        } else {
            (1.0 - 2.0 * a) * (1.0 - a) / (2.0 * (3.0 - 2.0 * a))
        }
    }

    /// Closed-form weighted index: `(1 − 2α)(1 − α) / 24` below `α = 1/2`,
    /// zero at or above it.
    pub fn index_l(&self) -> f64 {
        let a = self.alpha;
        if a >= 0.5 {
            0.0
        } else {
            (1.0 - 2.0 * a) * (1.0 - a) / 24.0
        }
    }

    /// Exact non-decreasing rearrangement at `t ∈ [0, 1]`.
    ///
    /// Below the threshold this is `t` on `[0, α)` and
    /// `((1 − 2α)t + α) / (2 − 2α)` on `[α, 1]`; at or above the threshold
    /// the function is already non-decreasing and is its own rearrangement.
    pub fn rearrangement(&self, t: f64) -> Result<f64, Error> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfDomain { value: t });
        }
        let a = self.alpha;
        if a >= 0.5 {
            return Ok(if t <= 0.5 {
                t
            } else {
                a * t + (1.0 - a) * (1.0 - t)
            });
        }
        Ok(if t < a {
            t
        } else {
            ((1.0 - 2.0 * a) * t + a) / (2.0 - 2.0 * a)
        })
    }

    /// The single point where the function and its rearrangement cross,
    /// `(α − 2) / (2α − 3)`; only meaningful below the monotone threshold.
    pub fn crossing_point(&self) -> Option<f64> {
        (self.alpha < 0.5).then(|| (self.alpha - 2.0) / (2.0 * self.alpha - 3.0))
    }
}

/// Result of the pairwise comonotonicity test.
///
/// A witness is present exactly when the pair is not comonotonic; it names
/// two cell indices whose values move in strictly opposite directions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComonotonicityVerdict {
    pub comonotonic: bool,
    pub witness: Option<(usize, usize)>,
}

/// Exhaustive pairwise check: the grids are comonotonic iff
/// `(a[i] − a[j]) · (b[i] − b[j]) ≥ −ε` for every pair of cells. Quadratic;
/// intended for grids of at most a few thousand cells in tests.
///
/// Returns the lexicographically first violating pair as witness.
pub fn check_comonotonic(
    a: &GridFunction,
    b: &GridFunction,
) -> Result<ComonotonicityVerdict, Error> {
    if a.len() != b.len() || a.domain_length() != b.domain_length() {
        return Err(Error::GridMismatch);
    }
    let (xs, ys) = (a.values(), b.values());
    for i in 0..xs.len() {
        for j in (i + 1)..xs.len() {
            if (xs[i] - xs[j]) * (ys[i] - ys[j]) < -COMONOTONICITY_EPSILON {
                return Ok(ComonotonicityVerdict {
                    comonotonic: false,
                    witness: Some((i, j)),
                });
            }
        }
    }
    Ok(ComonotonicityVerdict {
        comonotonic: true,
        witness: None,
    })
}

/// L1 index computed along the definitional path, with no sorting shortcut:
/// builds the distribution function by counting, inverts it by scanning for
/// the smallest feasible sample value, and integrates the gap cell by cell.
///
/// Must agree with `indices::index_i_unit` to within 1e-12; limited to
/// [`BRUTE_FORCE_MAX_N`] samples.
pub fn brute_force_index_i(g: &GridFunction) -> Result<f64, Error> {
    let n = g.len();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::BruteForceTooLarge { n });
    }
    let values = g.values();
    let nf = n as f64;
    let distribution = |x: f64| values.iter().filter(|&&v| v <= x).count() as f64 / nf;
    let mut total = 0.0;
    for (cell, &step_value) in values.iter().enumerate() {
        // The rearrangement is constant on each cell; evaluate its defining
        // infimum at the cell's right endpoint. The infimum is attained at
        // a sample value because the distribution only steps there.
        let level = (cell + 1) as f64 / nf;
        let rearranged = values
            .iter()
            .copied()
            .filter(|&x| distribution(x) >= level)
            .fold(f64::INFINITY, f64::min);
        total += (step_value - rearranged).abs() / nf;
    }
    Ok(total)
}
