//! Sampled and analytic function representations.
//!
//! Every computation downstream runs on a [`GridFunction`]: `n` samples
//! `values[0..n]` of a function, read as the step function that takes the
//! value `values[i]` on the `i`-th of `n` equal cells of `[0, M)`. Built-in
//! [`AnalyticFunction`]s produce grids through [`sample`].

use crate::error::Error;

/// Which point of each cell `[i/n, (i+1)/n)` is evaluated when sampling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SampleRule {
    /// Cell midpoint. For a Lipschitz function this halves the worst-case
    /// L1 distance between the function and its sampled step function
    /// relative to the endpoint rules, which is what bounds the index
    /// estimation error; hence the default.
    #[default]
    Midpoint,
    /// Left endpoint of the cell.
    Left,
    /// Right endpoint of the cell, understood as the limit from inside the
    /// cell. All built-in functions are continuous, so this is the value at
    /// the endpoint itself.
    Right,
}

impl SampleRule {
    /// Sample abscissa for the `i`-th of `n` cells (`i` zero-based).
    pub fn abscissa(self, i: usize, n: usize) -> f64 {
        let offset = match self {
            SampleRule::Left => 0.0,
            SampleRule::Midpoint => 0.5,
            SampleRule::Right => 1.0,
        };
        (i as f64 + offset) / n as f64
    }

    pub fn name(self) -> &'static str {
        match self {
            SampleRule::Midpoint => "midpoint",
            SampleRule::Left => "left",
            SampleRule::Right => "right",
        }
    }
}

/// A function sampled on a uniform grid.
///
/// Immutable after construction: all samples are finite and the domain
/// length is positive, so downstream code never re-validates.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    values: Vec<f64>,
    domain_length: f64,
    sample_rule: SampleRule,
}

impl GridFunction {
    /// Builds a grid function from raw samples.
    ///
    /// Rejects empty grids, non-finite samples, and non-positive domain
    /// lengths; the indices are undefined for non-integrable inputs, so bad
    /// samples are refused here rather than silently dropped.
    pub fn new(
        values: Vec<f64>,
        domain_length: f64,
        sample_rule: SampleRule,
    ) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptyGrid);
        }
        if let Some(index) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFiniteSample { index });
        }
        if !(domain_length.is_finite() && domain_length > 0.0) {
            return Err(Error::InvalidDomainLength {
                value: domain_length,
            });
        }
        Ok(Self {
            values,
            domain_length,
            sample_rule,
        })
    }

    /// Unit-domain grid with the default midpoint rule.
    pub fn unit(values: Vec<f64>) -> Result<Self, Error> {
        Self::new(values, 1.0, SampleRule::default())
    }

    /// Reinterprets the same samples over a domain of a different length,
    /// i.e. stretches the step function onto `[0, domain_length)`.
    pub fn with_domain_length(self, domain_length: f64) -> Result<Self, Error> {
        Self::new(self.values, domain_length, self.sample_rule)
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Number of grid cells.
    pub fn len(&self) -> usize {
        self.values.len()
    }

    /// Always false; grids hold at least one sample.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn domain_length(&self) -> f64 {
        self.domain_length
    }

    pub fn sample_rule(&self) -> SampleRule {
        self.sample_rule
    }
}

/// A built-in function on `[0, 1]`, used to generate grids.
#[derive(Debug, Clone, PartialEq)]
pub enum AnalyticFunction {
    /// `t ↦ sin(t · scale)`; the unit-domain pullback of `sin` on `[0, scale]`.
    Sin { scale: f64 },
    /// `t ↦ cos(t · scale)`.
    Cos { scale: f64 },
    /// `t` on `[0, 1/2]`, then `alpha·t + (1 − alpha)·(1 − t)` on `(1/2, 1]`.
    /// Non-decreasing exactly when `alpha ≥ 1/2`; for smaller `alpha` both
    /// indices have closed forms (see the `oracles` module).
    HAlpha { alpha: f64 },
    /// The constant `value`.
    Constant { value: f64 },
    /// Piecewise-linear interpolation through `(t, value)` knots with
    /// strictly increasing abscissae spanning `[0, 1]`.
    PiecewiseLinear { knots: Vec<(f64, f64)> },
}

impl AnalyticFunction {
    /// Checks the parameters; every public entry point calls this first.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            AnalyticFunction::Sin { scale } | AnalyticFunction::Cos { scale } => {
                if !scale.is_finite() {
                    return Err(Error::InvalidParameter {
                        name: "scale",
                        requirement: "finite",
                        value: *scale,
                    });
                }
            }
            AnalyticFunction::HAlpha { alpha } => {
                if !(alpha.is_finite() && (0.0..=1.0).contains(alpha)) {
                    return Err(Error::InvalidParameter {
                        name: "alpha",
                        requirement: "within [0, 1]",
                        value: *alpha,
                    });
                }
            }
            AnalyticFunction::Constant { value } => {
                if !value.is_finite() {
                    return Err(Error::InvalidParameter {
                        name: "value",
                        requirement: "finite",
                        value: *value,
                    });
                }
            }
            AnalyticFunction::PiecewiseLinear { knots } => {
                let ok = knots.len() >= 2
                    && knots.iter().all(|(t, v)| t.is_finite() && v.is_finite())
                    && knots.windows(2).all(|w| w[0].0 < w[1].0)
                    && knots.first().map(|(t, _)| *t) == Some(0.0)
                    && knots.last().map(|(t, _)| *t) == Some(1.0);
                if !ok {
                    return Err(Error::InvalidKnots);
                }
            }
        }
        Ok(())
    }

    /// Pointwise value at `t ∈ [0, 1]`.
    pub fn evaluate(&self, t: f64) -> Result<f64, Error> {
        self.validate()?;
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::OutOfDomain { value: t });
        }
        Ok(self.evaluate_unchecked(t))
    }

    /// Evaluation without parameter or domain checks; `sample` validates
    /// once and then calls this in the loop so that sampled values match
    /// `evaluate` bit for bit.
    fn evaluate_unchecked(&self, t: f64) -> f64 {
        match self {
            AnalyticFunction::Sin { scale } => (t * scale).sin(),
            AnalyticFunction::Cos { scale } => (t * scale).cos(),
            // Branch split is left-closed: [0, 1/2] then (1/2, 1].
            AnalyticFunction::HAlpha { alpha } => {
                if t <= 0.5 {
                    t
                } else {
                    alpha * t + (1.0 - alpha) * (1.0 - t)
                }
            }
            AnalyticFunction::Constant { value } => *value,
            AnalyticFunction::PiecewiseLinear { knots } => {
                // Left-closed segments: at a knot the segment starting
                // there is used (the interpolant is continuous, so the
                // value is the knot value either way).
                let j = knots.partition_point(|(kt, _)| *kt <= t);
                if j == knots.len() {
                    return knots[knots.len() - 1].1;
                }
                let (t0, v0) = knots[j - 1];
                let (t1, v1) = knots[j];
                v0 + (v1 - v0) * (t - t0) / (t1 - t0)
            }
        }
    }
}

/// Samples `f` on `n` uniform cells of `[0, 1)` using `rule`.
///
/// The returned grid has domain length 1: the built-ins are unit-domain
/// functions, and indices on `[0, M]` are obtained by rescaling the grid
/// (see [`GridFunction::with_domain_length`] and the `indices` module).
pub fn sample(f: &AnalyticFunction, n: usize, rule: SampleRule) -> Result<GridFunction, Error> {
    f.validate()?;
    if n == 0 {
        return Err(Error::EmptyGrid);
    }
    let values = (0..n)
        .map(|i| f.evaluate_unchecked(rule.abscissa(i, n)))
        .collect();
    GridFunction::new(values, 1.0, rule)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn constant_samples_are_flat() {
        let g = sample(
            &AnalyticFunction::Constant { value: 5.0 },
            3,
            SampleRule::Midpoint,
        )
        .unwrap();
        assert_eq!(g.values(), [5.0, 5.0, 5.0]);
        assert_eq!(g.domain_length(), 1.0);
    }

    #[test]
    fn halpha_zero_midpoint_samples() {
        let g = sample(
            &AnalyticFunction::HAlpha { alpha: 0.0 },
            4,
            SampleRule::Midpoint,
        )
        .unwrap();
        assert_eq!(g.values(), [0.125, 0.375, 0.375, 0.125]);
    }

    #[test]
    fn sin_quarter_period_midpoint_samples() {
        let g = sample(
            &AnalyticFunction::Sin {
                scale: std::f64::consts::FRAC_PI_2,
            },
            2,
            SampleRule::Midpoint,
        )
        .unwrap();
        assert_abs_diff_eq!(g.values()[0], 0.38268, epsilon = 1e-5);
        assert_abs_diff_eq!(g.values()[1], 0.92388, epsilon = 1e-5);
    }

    #[test]
    fn halpha_branch_boundary_belongs_to_left_branch() {
        let f = AnalyticFunction::HAlpha { alpha: 0.3 };
        assert_eq!(f.evaluate(0.5).unwrap(), 0.5);
    }

    #[test]
    fn halpha_zero_vanishes_at_one() {
        let f = AnalyticFunction::HAlpha { alpha: 0.0 };
        assert_eq!(f.evaluate(1.0).unwrap(), 0.0);
    }

    #[test]
    fn cos_at_right_endpoint() {
        let f = AnalyticFunction::Cos {
            scale: std::f64::consts::PI,
        };
        assert_abs_diff_eq!(f.evaluate(1.0).unwrap(), -1.0, epsilon = 1e-15);
    }

    #[test]
    fn sampling_rejects_zero_cells() {
        let f = AnalyticFunction::Constant { value: 1.0 };
        assert_eq!(
            sample(&f, 0, SampleRule::Midpoint).unwrap_err(),
            Error::EmptyGrid
        );
    }

    #[test]
    fn sampling_rejects_nan_parameters() {
        let f = AnalyticFunction::Sin { scale: f64::NAN };
        assert!(sample(&f, 4, SampleRule::Midpoint).is_err());
        let f = AnalyticFunction::HAlpha { alpha: f64::NAN };
        assert!(sample(&f, 4, SampleRule::Midpoint).is_err());
    }

    #[test]
    fn evaluate_rejects_out_of_domain_argument() {
        let f = AnalyticFunction::Constant { value: 1.0 };
        assert!(matches!(
            f.evaluate(1.5).unwrap_err(),
            Error::OutOfDomain { .. }
        ));
        assert!(f.evaluate(-0.1).is_err());
        assert!(f.evaluate(f64::NAN).is_err());
    }

    #[test]
    fn grid_rejects_bad_inputs() {
        assert_eq!(
            GridFunction::unit(vec![]).unwrap_err(),
            Error::EmptyGrid
        );
        assert_eq!(
            GridFunction::unit(vec![1.0, f64::INFINITY]).unwrap_err(),
            Error::NonFiniteSample { index: 1 }
        );
        assert!(GridFunction::new(vec![1.0], 0.0, SampleRule::Midpoint).is_err());
        assert!(GridFunction::new(vec![1.0], -2.0, SampleRule::Midpoint).is_err());
        assert!(GridFunction::new(vec![1.0], f64::NAN, SampleRule::Midpoint).is_err());
    }

    #[test]
    fn halpha_rejects_alpha_outside_unit_interval() {
        assert!(AnalyticFunction::HAlpha { alpha: -0.1 }.validate().is_err());
        assert!(AnalyticFunction::HAlpha { alpha: 1.1 }.validate().is_err());
        assert!(AnalyticFunction::HAlpha { alpha: 1.0 }.validate().is_ok());
    }

    #[test]
    fn knots_must_span_unit_interval_strictly_increasing() {
        let bad = [
            vec![(0.0, 1.0)],
            vec![(0.0, 1.0), (0.5, 2.0)],
            vec![(0.1, 1.0), (1.0, 2.0)],
            vec![(0.0, 1.0), (0.5, 2.0), (0.5, 3.0), (1.0, 0.0)],
            vec![(0.0, f64::NAN), (1.0, 0.0)],
        ];
        for knots in bad {
            assert!(
                AnalyticFunction::PiecewiseLinear { knots: knots.clone() }
                    .validate()
                    .is_err(),
                "expected rejection of {knots:?}"
            );
        }
        let ok = AnalyticFunction::PiecewiseLinear {
            knots: vec![(0.0, 1.0), (0.25, -1.0), (1.0, 3.0)],
        };
        assert!(ok.validate().is_ok());
    }

    #[test]
    fn piecewise_linear_matches_halpha() {
        // h_alpha is itself piecewise linear with knots at 0, 1/2, 1.
        for alpha in [0.0, 0.2, 0.45, 0.8] {
            let direct = AnalyticFunction::HAlpha { alpha };
            let pl = AnalyticFunction::PiecewiseLinear {
                knots: vec![(0.0, 0.0), (0.5, 0.5), (1.0, alpha)],
            };
            for i in 0..=100 {
                let t = i as f64 / 100.0;
                assert_abs_diff_eq!(
                    pl.evaluate(t).unwrap(),
                    direct.evaluate(t).unwrap(),
                    epsilon = 1e-15
                );
            }
        }
    }

    #[test]
    fn samples_match_pointwise_evaluation_exactly() {
        let functions = [
            AnalyticFunction::Sin { scale: 2.7 },
            AnalyticFunction::Cos { scale: 9.1 },
            AnalyticFunction::HAlpha { alpha: 0.3 },
            AnalyticFunction::Constant { value: -4.0 },
            AnalyticFunction::PiecewiseLinear {
                knots: vec![(0.0, 0.0), (0.3, 2.0), (1.0, -1.0)],
            },
        ];
        for f in &functions {
            for rule in [SampleRule::Midpoint, SampleRule::Left, SampleRule::Right] {
                for n in [1, 2, 7, 64] {
                    let g = sample(f, n, rule).unwrap();
                    for i in 0..n {
                        let t = rule.abscissa(i, n);
                        assert_eq!(g.values()[i], f.evaluate(t).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn refinement_shrinks_step_function_distance() {
        // L1 distance between the step functions at n and 2n cells must
        // fall as the grid refines.
        fn refinement_l1(f: &AnalyticFunction, n: usize) -> f64 {
            let coarse = sample(f, n, SampleRule::Midpoint).unwrap();
            let fine = sample(f, 2 * n, SampleRule::Midpoint).unwrap();
            fine.values()
                .iter()
                .enumerate()
                .map(|(j, v)| (v - coarse.values()[j / 2]).abs())
                .sum::<f64>()
                / (2 * n) as f64
        }
        let functions = [
            AnalyticFunction::Sin {
                scale: std::f64::consts::TAU,
            },
            AnalyticFunction::Cos {
                scale: std::f64::consts::PI,
            },
            AnalyticFunction::HAlpha { alpha: 0.2 },
        ];
        for f in &functions {
            let d100 = refinement_l1(f, 100);
            let d1k = refinement_l1(f, 1_000);
            let d10k = refinement_l1(f, 10_000);
            assert!(d1k < d100 + 1e-12, "{f:?}: {d1k} !< {d100}");
            assert!(d10k < d1k + 1e-12, "{f:?}: {d10k} !< {d1k}");
        }
    }
}
