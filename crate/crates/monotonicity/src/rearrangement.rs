//! Non-decreasing rearrangement, distribution function, and cumulative
//! integrals of grid functions.
//!
//! For a step function the non-decreasing rearrangement — the generalized
//! inverse of the distribution function `G(x) = (1/n)·#{i : values[i] ≤ x}`
//! — is simply the ascending sort of the samples, so that is how it is
//! computed. The definitional route (build `G`, invert it, integrate) lives
//! in the `oracles` module as an independent cross-check.

use crate::error::Error;
use crate::grid::GridFunction;
use crate::kahan::KahanSum;

/// The non-decreasing rearrangement of a grid function: the same multiset
/// of samples in ascending order, over the same domain.
#[derive(Debug, Clone, PartialEq)]
pub struct Rearrangement {
    sorted_values: Vec<f64>,
    domain_length: f64,
}

impl Rearrangement {
    pub fn sorted_values(&self) -> &[f64] {
        &self.sorted_values
    }

    pub fn len(&self) -> usize {
        self.sorted_values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn domain_length(&self) -> f64 {
        self.domain_length
    }

    /// Value of the rearrangement at level `t ∈ (0, 1]`: the step function
    /// takes the `⌈t·n⌉`-th smallest sample on `((i−1)/n, i/n]`.
    pub fn quantile(&self, t: f64) -> Result<f64, Error> {
        if !(t > 0.0 && t <= 1.0) {
            return Err(Error::InvalidQuantileLevel { value: t });
        }
        let n = self.sorted_values.len();
        let cell = ((t * n as f64).ceil() as usize).clamp(1, n);
        Ok(self.sorted_values[cell - 1])
    }
}

/// Sorts the samples ascending. The sort is stable, so ties keep their
/// original relative order; no downstream quantity depends on tie order.
pub fn rearrange(g: &GridFunction) -> Rearrangement {
    let mut sorted_values = g.values().to_vec();
    // Samples are finite by construction, so the comparison is total.
    sorted_values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Rearrangement {
        sorted_values,
        domain_length: g.domain_length(),
    }
}

/// Distribution function of the samples: the fraction of cells whose value
/// is at most `x`. `x = +∞` gives 1 and `x = −∞` gives 0; `x` must not be
/// NaN.
pub fn distribution(g: &GridFunction, x: f64) -> f64 {
    debug_assert!(!x.is_nan());
    let below = g.values().iter().filter(|&&v| v <= x).count();
    below as f64 / g.len() as f64
}

/// Prefix integrals of a step function and of its rearrangement.
///
/// `cumulative()[k]` is the integral of the step function over the first
/// `k` cells, i.e. `(M/n)·(values[0] + … + values[k−1])`; `convex()[k]` is
/// the same for the sorted values and is a convex sequence. Both hold
/// `n + 1` entries starting at 0, so index-weighted Riemann sums over the
/// gaps can be read off directly.
#[derive(Debug, Clone, PartialEq)]
pub struct CumulativePair {
    cumulative: Vec<f64>,
    convex: Vec<f64>,
}

impl CumulativePair {
    /// Prefix integrals of the step function itself.
    pub fn cumulative(&self) -> &[f64] {
        &self.cumulative
    }

    /// Prefix integrals of the rearrangement; the convex minorant of
    /// `cumulative` among rearrangements, lying at or below it everywhere.
    pub fn convex(&self) -> &[f64] {
        &self.convex
    }

    /// Number of cells (one less than the stored prefix count).
    pub fn len(&self) -> usize {
        self.cumulative.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Computes both prefix-integral sequences with compensated accumulation.
pub fn cumulative_pair(g: &GridFunction) -> CumulativePair {
    let cell_width = g.domain_length() / g.len() as f64;
    let sorted = rearrange(g);
    CumulativePair {
        cumulative: prefix_integrals(g.values(), cell_width),
        convex: prefix_integrals(sorted.sorted_values(), cell_width),
    }
}

fn prefix_integrals(values: &[f64], cell_width: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(values.len() + 1);
    out.push(0.0);
    let mut acc = KahanSum::new();
    for &v in values {
        acc.add(v);
        out.push(acc.total() * cell_width);
    }
    out
}
