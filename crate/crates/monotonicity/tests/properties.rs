//! Property tests for the rearrangement engine, the index estimators, and
//! the oracles.
//!
//! The exact-equality assertions are deliberate: sorting permutes samples
//! without arithmetic, and monotone maps commute with sorting bit for bit,
//! so those laws hold exactly in floating point. Laws that re-associate
//! sums get a mixed absolute/relative tolerance instead.

use monotonicity::oracles::COMONOTONICITY_EPSILON;
use monotonicity::{
    brute_force_index_i, check_comonotonic, cumulative_pair, distribution, index_i, index_i_unit,
    index_l, index_l_unit, index_l_via_cumulative, rearrange, GridFunction, SampleRule,
};
use proptest::prelude::*;

fn unit(values: &[f64]) -> GridFunction {
    GridFunction::unit(values.to_vec()).unwrap()
}

fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1.0)
}

fn flipped(values: &[f64]) -> Vec<f64> {
    values.iter().rev().map(|v| -v).collect()
}

fn values_strategy() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-10.0..10.0f64, 1..200)
}

/// Non-decreasing maps used to manufacture comonotonic pairs from a shared
/// base grid.
#[derive(Debug, Clone, Copy)]
enum MonotoneMap {
    Affine { slope: f64, intercept: f64 },
    Cube,
    Exp,
    Clamp { lo: f64, hi: f64 },
    Staircase,
}

impl MonotoneMap {
    fn apply(self, x: f64) -> f64 {
        match self {
            MonotoneMap::Affine { slope, intercept } => slope * x + intercept,
            MonotoneMap::Cube => x * x * x / 100.0,
            MonotoneMap::Exp => (x / 4.0).exp() / 10.0,
            MonotoneMap::Clamp { lo, hi } => x.clamp(lo, hi),
            MonotoneMap::Staircase => (x * 2.0).floor() / 2.0,
        }
    }
}

fn monotone_map_strategy() -> impl Strategy<Value = MonotoneMap> {
    prop_oneof![
        (0.0..2.0f64, -5.0..5.0f64)
            .prop_map(|(slope, intercept)| MonotoneMap::Affine { slope, intercept }),
        Just(MonotoneMap::Cube),
        Just(MonotoneMap::Exp),
        (-5.0..0.0f64, 0.1..5.0f64).prop_map(|(lo, hi)| MonotoneMap::Clamp { lo, hi }),
        Just(MonotoneMap::Staircase),
    ]
}

proptest! {
    // ------------------------------------------------------------------
    // Rearrangement laws
    // ------------------------------------------------------------------

    #[test]
    fn rearrangement_is_sorted_permutation(values in values_strategy()) {
        let g = unit(&values);
        let sorted = rearrange(&g);
        prop_assert!(sorted.sorted_values().windows(2).all(|w| w[0] <= w[1]));
        let mut expected = values.clone();
        expected.sort_by(|a, b| a.partial_cmp(b).unwrap());
        prop_assert_eq!(sorted.sorted_values(), expected.as_slice());
    }

    #[test]
    fn rearrangement_preserves_distribution(values in values_strategy(), x in -15.0..15.0f64) {
        let g = unit(&values);
        let rearranged = rearrange(&g);
        let sorted = unit(rearranged.sorted_values());
        prop_assert_eq!(distribution(&g, x), distribution(&sorted, x));
        // Also probe exactly at a sample value, where ties matter.
        prop_assert_eq!(
            distribution(&g, values[0]),
            distribution(&sorted, values[0])
        );
    }

    #[test]
    fn rearrangement_preserves_mean(values in values_strategy()) {
        let g = unit(&values);
        let sum: f64 = values.iter().sum();
        let sorted_sum: f64 = rearrange(&g).sorted_values().iter().sum();
        let scale = values.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
        prop_assert!((sum - sorted_sum).abs() <= 1e-10 * scale);
    }

    #[test]
    fn rearrangement_shift_equivariance(values in values_strategy(), d in -100.0..100.0f64) {
        let g = unit(&values);
        let shifted = unit(&values.iter().map(|v| v + d).collect::<Vec<_>>());
        let expected: Vec<f64> = rearrange(&g).sorted_values().iter().map(|v| v + d).collect();
        let sorted_shifted = rearrange(&shifted);
        prop_assert_eq!(sorted_shifted.sorted_values(), expected.as_slice());
    }

    #[test]
    fn rearrangement_scale_equivariance(values in values_strategy(), c in 0.0..100.0f64) {
        let g = unit(&values);
        let scaled = unit(&values.iter().map(|v| c * v).collect::<Vec<_>>());
        let expected: Vec<f64> = rearrange(&g).sorted_values().iter().map(|v| c * v).collect();
        let sorted_scaled = rearrange(&scaled);
        prop_assert_eq!(sorted_scaled.sorted_values(), expected.as_slice());
    }

    #[test]
    fn rearrangement_flip_symmetry(values in values_strategy()) {
        let n = values.len();
        let g = unit(&values);
        let flip = unit(&flipped(&values));
        let sorted = rearrange(&g);
        let sorted_flip = rearrange(&flip);
        for i in 0..n {
            prop_assert_eq!(
                sorted_flip.sorted_values()[i],
                -sorted.sorted_values()[n - 1 - i]
            );
        }
    }

    #[test]
    fn sorting_contracts_l1_distance(
        values in values_strategy(),
        perturbation in prop::collection::vec(-3.0..3.0f64, 200),
    ) {
        // |sorted(a) - sorted(b)| in L1 never exceeds |a - b| in L1.
        let n = values.len();
        let other: Vec<f64> = values
            .iter()
            .zip(&perturbation)
            .map(|(v, p)| v + p)
            .collect();
        let sorted_a = rearrange(&unit(&values));
        let sorted_b = rearrange(&unit(&other));
        let lhs: f64 = sorted_a
            .sorted_values()
            .iter()
            .zip(sorted_b.sorted_values())
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / n as f64;
        let rhs: f64 = values
            .iter()
            .zip(&other)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / n as f64;
        prop_assert!(lhs <= rhs + 1e-12 * rhs.max(1.0));
    }

    #[test]
    fn cumulative_integral_dominates_convex_rearrangement(values in values_strategy()) {
        let pair = cumulative_pair(&unit(&values));
        prop_assert_eq!(pair.cumulative()[0], 0.0);
        prop_assert_eq!(pair.convex()[0], 0.0);
        let n = pair.len();
        prop_assert!((pair.cumulative()[n] - pair.convex()[n]).abs() <= 1e-12);
        for k in 0..=n {
            prop_assert!(pair.cumulative()[k] >= pair.convex()[k] - 1e-12);
        }
        // Convexity of the rearranged prefix integrals: second differences
        // of a non-decreasing integrand are non-negative.
        for w in pair.convex().windows(3) {
            prop_assert!(w[2] - w[1] >= w[1] - w[0] - 1e-12);
        }
    }

    #[test]
    fn comonotonic_rearrangement_is_additive(
        base in values_strategy(),
        f in monotone_map_strategy(),
        h in monotone_map_strategy(),
    ) {
        let a: Vec<f64> = base.iter().map(|&x| f.apply(x)).collect();
        let b: Vec<f64> = base.iter().map(|&x| h.apply(x)).collect();
        let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let sorted_sum = rearrange(&unit(&sum));
        let sorted_a = rearrange(&unit(&a));
        let sorted_b = rearrange(&unit(&b));
        for i in 0..base.len() {
            prop_assert_eq!(
                sorted_sum.sorted_values()[i],
                sorted_a.sorted_values()[i] + sorted_b.sorted_values()[i]
            );
        }
    }

    // ------------------------------------------------------------------
    // Index laws
    // ------------------------------------------------------------------

    #[test]
    fn indices_are_non_negative_and_ordered(values in values_strategy()) {
        let g = unit(&values);
        let i = index_i_unit(&g);
        let l = index_l_unit(&g);
        prop_assert!(i >= 0.0);
        prop_assert!(l >= 0.0);
        prop_assert!(l <= i);
    }

    #[test]
    fn index_zero_iff_sorted(values in values_strategy()) {
        let g = unit(&values);
        let sorted = values.windows(2).all(|w| w[0] <= w[1]);
        prop_assert_eq!(index_i_unit(&g) == 0.0, sorted);
        prop_assert_eq!(index_l_unit(&g) == 0.0, sorted);
    }

    #[test]
    fn indices_are_shift_invariant(values in values_strategy(), d in -100.0..100.0f64) {
        let g = unit(&values);
        let shifted = unit(&values.iter().map(|v| v + d).collect::<Vec<_>>());
        prop_assert!(close(index_i_unit(&g), index_i_unit(&shifted), 1e-12));
        prop_assert!(close(index_l_unit(&g), index_l_unit(&shifted), 1e-12));
    }

    #[test]
    fn indices_are_positively_homogeneous(values in values_strategy(), c in 0.0..100.0f64) {
        let g = unit(&values);
        let scaled = unit(&values.iter().map(|v| c * v).collect::<Vec<_>>());
        prop_assert!(close(index_i_unit(&scaled), c * index_i_unit(&g), 1e-12));
        prop_assert!(close(index_l_unit(&scaled), c * index_l_unit(&g), 1e-12));
    }

    #[test]
    fn indices_are_flip_invariant(values in values_strategy()) {
        let g = unit(&values);
        let flip = unit(&flipped(&values));
        prop_assert!(close(index_i_unit(&g), index_i_unit(&flip), 1e-12));
        prop_assert!(close(index_l_unit(&g), index_l_unit(&flip), 1e-12));
    }

    #[test]
    fn indices_are_lipschitz_in_l1(
        values in values_strategy(),
        perturbation in prop::collection::vec(-1.0..1.0f64, 200),
    ) {
        let n = values.len();
        let other: Vec<f64> = values
            .iter()
            .zip(&perturbation)
            .map(|(v, p)| v + p)
            .collect();
        let l1 = values
            .iter()
            .zip(&other)
            .map(|(a, b)| (a - b).abs())
            .sum::<f64>()
            / n as f64;
        let bound = 2.0 * l1 + 1e-12;
        let (ga, gb) = (unit(&values), unit(&other));
        prop_assert!((index_i_unit(&ga) - index_i_unit(&gb)).abs() <= bound);
        prop_assert!((index_l_unit(&ga) - index_l_unit(&gb)).abs() <= bound);
    }

    #[test]
    fn cumulative_route_agrees_with_direct_route(values in values_strategy()) {
        let g = unit(&values);
        prop_assert!(close(index_l_unit(&g), index_l_via_cumulative(&g), 1e-12));
    }

    #[test]
    fn domain_scaling_is_exact_by_construction(
        values in values_strategy(),
        m in 0.1..50.0f64,
    ) {
        let g = GridFunction::new(values, m, SampleRule::Midpoint).unwrap();
        prop_assert_eq!(index_i(&g), m * index_i_unit(&g));
        prop_assert_eq!(index_l(&g), m * m * index_l_unit(&g));
    }

    #[test]
    fn comonotonic_index_laws(
        base in values_strategy(),
        f in monotone_map_strategy(),
        h in monotone_map_strategy(),
    ) {
        let a: Vec<f64> = base.iter().map(|&x| f.apply(x)).collect();
        let b: Vec<f64> = base.iter().map(|&x| h.apply(x)).collect();
        let sum: Vec<f64> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let (ga, gb, gsum) = (unit(&a), unit(&b), unit(&sum));
        prop_assert!(check_comonotonic(&ga, &gb).unwrap().comonotonic);
        // The weighted index is additive over comonotonic summands ...
        let (la, lb, lsum) = (index_l_unit(&ga), index_l_unit(&gb), index_l_unit(&gsum));
        prop_assert!(close(lsum, la + lb, 1e-10));
        // ... while the L1 index is only subadditive.
        let (ia, ib, isum) = (index_i_unit(&ga), index_i_unit(&gb), index_i_unit(&gsum));
        prop_assert!(ia + ib - isum >= -1e-12);
    }

    // ------------------------------------------------------------------
    // Oracle laws
    // ------------------------------------------------------------------

    #[test]
    fn comonotonicity_is_reflexive_and_symmetric(
        values in values_strategy(),
        other in values_strategy(),
    ) {
        let g = unit(&values);
        prop_assert!(check_comonotonic(&g, &g).unwrap().comonotonic);
        if values.len() == other.len() {
            let h = unit(&other);
            let ab = check_comonotonic(&g, &h).unwrap();
            let ba = check_comonotonic(&h, &g).unwrap();
            prop_assert_eq!(ab.comonotonic, ba.comonotonic);
        }
    }

    #[test]
    fn affine_images_are_comonotonic(
        values in values_strategy(),
        c in 0.0..10.0f64,
        d in -10.0..10.0f64,
    ) {
        let g = unit(&values);
        let image = unit(&values.iter().map(|v| c * v + d).collect::<Vec<_>>());
        prop_assert!(check_comonotonic(&g, &image).unwrap().comonotonic);
    }

    #[test]
    fn non_decreasing_pairs_are_comonotonic(
        mut a in prop::collection::vec(-10.0..10.0f64, 1..50),
        mut b in prop::collection::vec(-10.0..10.0f64, 50),
    ) {
        b.truncate(a.len());
        a.sort_by(|x, y| x.partial_cmp(y).unwrap());
        b.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let verdict = check_comonotonic(&unit(&a), &unit(&b)).unwrap();
        prop_assert!(verdict.comonotonic);
        prop_assert!(verdict.witness.is_none());
    }

    #[test]
    fn witness_pairs_violate_by_more_than_epsilon(
        a in prop::collection::vec(-10.0..10.0f64, 2..30),
        b in prop::collection::vec(-10.0..10.0f64, 30),
    ) {
        let b = &b[..a.len()];
        let (ga, gb) = (unit(&a), unit(b));
        let verdict = check_comonotonic(&ga, &gb).unwrap();
        if let Some((i, j)) = verdict.witness {
            prop_assert!(!verdict.comonotonic);
            let product = (a[i] - a[j]) * (b[i] - b[j]);
            prop_assert!(product < -COMONOTONICITY_EPSILON);
        } else {
            prop_assert!(verdict.comonotonic);
        }
    }

    #[test]
    fn brute_force_matches_sort_based_index(
        values in prop::collection::vec(-10.0..10.0f64, 1..=12),
    ) {
        let g = unit(&values);
        let brute = brute_force_index_i(&g).unwrap();
        let fast = index_i_unit(&g);
        prop_assert!(close(brute, fast, 1e-12));
    }
}
