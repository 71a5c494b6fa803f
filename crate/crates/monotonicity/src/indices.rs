//! The two non-decreasingness indices and their discretized estimators.
//!
//! For samples `values[0..n]` with ascending sort `sorted[0..n]`:
//!
//! * `index_i_unit` — the L1 distance between the step function and its
//!   rearrangement, `(1/n) Σ |sorted[i] − values[i]|`. Zero iff the samples
//!   are already non-decreasing; subadditive over comonotonic summands.
//! * `index_l_unit` — the `(1 − t)`-weighted signed gap,
//!   `(1/n²) Σ (i+1)·(sorted[i] − values[i])`. Also zero iff sorted, and
//!   fully additive over comonotonic summands.
//!
//! Both satisfy `0 ≤ index_l_unit ≤ index_i_unit`. On a domain `[0, M]`
//! the indices of `f` equal `M` (resp. `M²`) times the unit-domain indices
//! of the pullback `t ↦ f(tM)`, which is exactly how [`index_i`] and
//! [`index_l`] compute them — one rearrangement engine serves every domain.

use crate::error::Error;
use crate::grid::{sample, AnalyticFunction, GridFunction, SampleRule};
use crate::kahan::KahanSum;
use crate::rearrangement::{cumulative_pair, rearrange};

/// Unit-domain L1 index `(1/n) Σ |sorted[i] − values[i]|`.
///
/// The stored domain length is ignored: the grid is read as samples of the
/// unit-domain pullback.
pub fn index_i_unit(g: &GridFunction) -> f64 {
    let sorted = rearrange(g);
    unit_index_i_from(g.values(), sorted.sorted_values())
}

/// Unit-domain weighted index `(1/n²) Σ (i+1)·(sorted[i] − values[i])`.
///
/// Summation runs in ascending cell order with compensated accumulation;
/// the weights grow to `n`, and naive summation loses digits at the grid
/// sizes the table reproductions use.
pub fn index_l_unit(g: &GridFunction) -> f64 {
    let sorted = rearrange(g);
    unit_index_l_from(g.values(), sorted.sorted_values())
}

fn unit_index_i_from(values: &[f64], sorted: &[f64]) -> f64 {
    let mut acc = KahanSum::new();
    for (s, v) in sorted.iter().zip(values) {
        acc.add((s - v).abs());
    }
    acc.total() / values.len() as f64
}

fn unit_index_l_from(values: &[f64], sorted: &[f64]) -> f64 {
    let n = values.len() as f64;
    let mut acc = KahanSum::new();
    for (i, (s, v)) in sorted.iter().zip(values).enumerate() {
        acc.add((i + 1) as f64 * (s - v));
    }
    acc.total() / (n * n)
}

/// The weighted index computed through the cumulative-integral route: the
/// mean gap between the prefix integrals of the step function and of its
/// rearrangement, `(1/n) Σ_{k=1..n} (cumulative[k] − convex[k])`, rescaled
/// to the unit domain.
///
/// Algebraically identical to [`index_l_unit`]; kept as an internal
/// cross-check of the estimator. The two routes agree to well within
/// 1e-12 in floating point for grids up to 10^6 cells.
pub fn index_l_via_cumulative(g: &GridFunction) -> f64 {
    let pair = cumulative_pair(g);
    let n = pair.len();
    let mut acc = KahanSum::new();
    for k in 1..=n {
        acc.add(pair.cumulative()[k] - pair.convex()[k]);
    }
    // cumulative_pair scales by M/n per cell; divide M back out so the
    // result matches the unit-domain convention of index_l_unit.
    acc.total() / n as f64 / g.domain_length()
}

/// Index of `f` on `[0, M]`: `M` times the unit index of the pullback.
pub fn index_i(g: &GridFunction) -> f64 {
    g.domain_length() * index_i_unit(g)
}

/// Weighted index of `f` on `[0, M]`: `M²` times the unit index of the
/// pullback.
pub fn index_l(g: &GridFunction) -> f64 {
    let m = g.domain_length();
    m * m * index_l_unit(g)
}

/// Doubling gaps `|estimate(n) − estimate(n/2)|` recorded by a convergence
/// run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RichardsonGap {
    pub index_i: f64,
    pub index_l: f64,
}

/// Both indices of one grid, with the grid parameters that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct IndexReport {
    pub index_i: f64,
    pub index_l: f64,
    /// Grid size the estimates were computed at.
    pub n: usize,
    /// Domain length `M`; the estimates are the `[0, M]`-scaled indices.
    pub domain_length: f64,
    /// Present when the report came out of a convergence run.
    pub richardson_gap: Option<RichardsonGap>,
}

/// Computes both scaled indices of a grid in one pass.
pub fn report(g: &GridFunction) -> IndexReport {
    let sorted = rearrange(g);
    let m = g.domain_length();
    IndexReport {
        index_i: m * unit_index_i_from(g.values(), sorted.sorted_values()),
        index_l: m * m * unit_index_l_from(g.values(), sorted.sorted_values()),
        n: g.len(),
        domain_length: m,
        richardson_gap: None,
    }
}

/// One row of a convergence run. Gaps are `None` on the starting row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConvergenceStep {
    pub n: usize,
    pub index_i: f64,
    pub index_l: f64,
    pub gap_i: Option<f64>,
    pub gap_l: Option<f64>,
}

/// Estimates at successively doubled grid sizes.
///
/// `converged` is false when the gap tolerance was not reached within the
/// allowed doublings; the recorded steps still carry the last estimates, so
/// a failed run is a distinguished outcome rather than a silent success.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRun {
    pub steps: Vec<ConvergenceStep>,
    pub converged: bool,
    pub domain_length: f64,
}

impl ConvergenceRun {
    pub fn last(&self) -> &ConvergenceStep {
        self.steps.last().expect("runs hold at least one step")
    }

    pub fn report(&self) -> IndexReport {
        let last = self.last();
        IndexReport {
            index_i: last.index_i,
            index_l: last.index_l,
            n: last.n,
            domain_length: self.domain_length,
            richardson_gap: match (last.gap_i, last.gap_l) {
                (Some(index_i), Some(index_l)) => Some(RichardsonGap { index_i, index_l }),
                _ => None,
            },
        }
    }
}

/// Doubles the grid starting from `n0` until the doubling gap of **both**
/// scaled indices drops below `tol`, or `max_doublings` doublings have been
/// spent.
///
/// The exact discretization error is not computable without knowing the
/// function between samples, so the doubling gap serves as a practical
/// surrogate for it.
pub fn converge(
    f: &AnalyticFunction,
    domain_length: f64,
    n0: usize,
    tol: f64,
    max_doublings: u32,
    rule: SampleRule,
) -> Result<ConvergenceRun, Error> {
    f.validate()?;
    if n0 < 2 {
        return Err(Error::InvalidParameter {
            name: "n0",
            requirement: "at least 2",
            value: n0 as f64,
        });
    }
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            requirement: "positive",
            value: tol,
        });
    }
    if !(domain_length.is_finite() && domain_length > 0.0) {
        return Err(Error::InvalidDomainLength {
            value: domain_length,
        });
    }

    let estimate = |n: usize| -> Result<(f64, f64), Error> {
        let g = sample(f, n, rule)?.with_domain_length(domain_length)?;
        let r = report(&g);
        Ok((r.index_i, r.index_l))
    };

    let mut n = n0;
    let (mut est_i, mut est_l) = estimate(n)?;
    let mut steps = vec![ConvergenceStep {
        n,
        index_i: est_i,
        index_l: est_l,
        gap_i: None,
        gap_l: None,
    }];
    let mut converged = false;
    for _ in 0..max_doublings {
        n = n.checked_mul(2).ok_or(Error::GridTooLarge)?;
        let (next_i, next_l) = estimate(n)?;
        let gap_i = (next_i - est_i).abs();
        let gap_l = (next_l - est_l).abs();
        steps.push(ConvergenceStep {
            n,
            index_i: next_i,
            index_l: next_l,
            gap_i: Some(gap_i),
            gap_l: Some(gap_l),
        });
        est_i = next_i;
        est_l = next_l;
        if gap_i < tol && gap_l < tol {
            converged = true;
            break;
        }
    }
    Ok(ConvergenceRun {
        steps,
        converged,
        domain_length,
    })
}
