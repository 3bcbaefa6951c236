//! Scale-invariant, polarity-agnostic distance between signals treated as
//! vectors in R^n.
//!
//! The distance between `v1` and `v2` is the sine of the angle between them:
//! it is 0 for parallel or antiparallel vectors, 1 for orthogonal ones, and
//! unchanged when either argument is rescaled by any nonzero factor.

use crate::centroid::CentroidBank;
use crate::error::{Error, Result};
use crate::signal::{dot, norm, norm_floor};

/// A polarity-agnostic distance value, by construction in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Distance(f64);

impl Distance {
    pub fn value(self) -> f64 {
        self.0
    }
}

/// Distance assigned to a degenerate (directionless) signal against any
/// centroid: the maximum of the metric's range.
pub const DEGENERATE_DISTANCE: f64 = 1.0;

/// Cosine of the angle between two vectors given their precomputed norms,
/// clamped to `[-1, 1]` against round-off.
#[inline]
fn cosine(v1: &[f64], v2: &[f64], n1: f64, n2: f64) -> f64 {
    (dot(v1, v2) / (n1 * n2)).clamp(-1.0, 1.0)
}

/// Sine distance from precomputed norms. Callers guarantee both norms exceed
/// the degeneracy floor.
#[inline]
pub(crate) fn sine_distance_raw(v1: &[f64], v2: &[f64], n1: f64, n2: f64) -> f64 {
    let c = cosine(v1, v2, n1, n2);
    // cos^2 can exceed 1 by round-off; clamp before the root.
    (1.0 - (c * c).min(1.0)).sqrt()
}

fn checked_norm(v: &[f64]) -> Result<f64> {
    let floor = norm_floor(v.len());
    let n = norm(v);
    if n <= floor {
        Err(Error::DegenerateNorm { norm: n, floor })
    } else {
        Ok(n)
    }
}

/// Angle in `[0, π]` between two non-degenerate vectors.
pub fn angle(v1: &[f64], v2: &[f64]) -> Result<f64> {
    check_dims(v1, v2)?;
    let n1 = checked_norm(v1)?;
    let n2 = checked_norm(v2)?;
    Ok(cosine(v1, v2, n1, n2).acos())
}

/// Sine distance between two non-degenerate vectors.
pub fn distance(v1: &[f64], v2: &[f64]) -> Result<Distance> {
    check_dims(v1, v2)?;
    let n1 = checked_norm(v1)?;
    let n2 = checked_norm(v2)?;
    Ok(Distance(sine_distance_raw(v1, v2, n1, n2)))
}

fn check_dims(v1: &[f64], v2: &[f64]) -> Result<()> {
    if v1.len() != v2.len() {
        return Err(Error::LengthMismatch {
            left: v1.len(),
            right: v2.len(),
        });
    }
    Ok(())
}

/// Index and distance of the nearest centroid to `v`, ties broken by lowest
/// index.
///
/// A degenerate `v` has no direction; it is assigned the maximal distance
/// ([`DEGENERATE_DISTANCE`]) against every centroid and reported at index 0,
/// so that all-zero signals do not abort a clustering run.
pub fn distance_to_bank(v: &[f64], bank: &CentroidBank) -> (usize, Distance) {
    let vn = norm(v);
    if vn <= norm_floor(v.len()) {
        return (0, Distance(DEGENERATE_DISTANCE));
    }
    let mut best = (0usize, f64::INFINITY);
    for (i, c) in bank.iter().enumerate() {
        let d = sine_distance_raw(v, c, vn, norm(c));
        if d < best.1 {
            best = (i, d);
        }
    }
    (best.0, Distance(best.1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn angle_analytic_cases() {
        assert!((angle(&[1.0, 0.0], &[0.0, 1.0]).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!((angle(&[1.0, 0.0], &[-1.0, 0.0]).unwrap() - PI).abs() < 1e-15);
        assert!((angle(&[1.0, 0.0], &[1.0, 1.0]).unwrap() - FRAC_PI_4).abs() < 1e-15);
    }

    #[test]
    fn distance_analytic_cases() {
        assert_eq!(distance(&[3.0, 4.0, 0.0], &[3.0, 4.0, 0.0]).unwrap().value(), 0.0);
        // Polarity agnosticism: s and a negatively scaled s are at distance 0.
        assert!(distance(&[2.0, 0.0], &[-5.0, 0.0]).unwrap().value() <= 1e-12);
        let d = distance(&[1.0, 0.0], &[1.0, 1.0]).unwrap().value();
        assert!((d - FRAC_PI_4.sin()).abs() < 1e-15);
    }

    #[test]
    fn degenerate_inputs_error() {
        let z = [0.0, 0.0, 0.0];
        assert!(matches!(
            distance(&z, &[1.0, 0.0, 0.0]),
            Err(Error::DegenerateNorm { .. })
        ));
        assert!(matches!(
            angle(&[1.0, 0.0, 0.0], &z),
            Err(Error::DegenerateNorm { .. })
        ));
    }

    #[test]
    fn bank_lookup_with_ties_and_inversion() {
        let bank =
            CentroidBank::from_directions(vec![vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 0.0]]).unwrap();
        let (i, d) = distance_to_bank(&[1.0, 0.0, 0.0], &bank);
        assert_eq!(i, 1);
        assert!(d.value() <= 1e-12);
        // Inversion maps to the same centroid.
        let (i, d) = distance_to_bank(&[-1.0, 0.0, 0.0], &bank);
        assert_eq!(i, 1);
        assert!(d.value() <= 1e-12);

        let inv = 1.0 / 2.0f64.sqrt();
        let bank =
            CentroidBank::from_directions(vec![vec![1.0, 0.0, 0.0], vec![0.0, 0.0, 1.0]]).unwrap();
        let (i, d) = distance_to_bank(&[inv, inv, 0.0], &bank);
        assert_eq!(i, 0);
        assert!((d.value() - inv).abs() < 1e-12);
    }

    #[test]
    fn degenerate_signal_gets_max_distance_at_index_zero() {
        let bank =
            CentroidBank::from_directions(vec![vec![0.0, 1.0, 0.0], vec![1.0, 0.0, 0.0]]).unwrap();
        let (i, d) = distance_to_bank(&[0.0, 0.0, 0.0], &bank);
        assert_eq!(i, 0);
        assert_eq!(d.value(), DEGENERATE_DISTANCE);
    }

    fn vector(n: usize) -> impl Strategy<Value = Vec<f64>> {
        prop::collection::vec(-100.0f64..100.0, n..=n)
            .prop_filter("non-degenerate", |v| norm(v) > 1e-6)
    }

    proptest! {
        #[test]
        fn symmetry_is_bitwise(a in vector(8), b in vector(8)) {
            // Dot accumulation order and the norm product are argument-order
            // independent, so the two evaluations must agree to 0 ulps.
            let d1 = distance(&a, &b).unwrap().value();
            let d2 = distance(&b, &a).unwrap().value();
            prop_assert_eq!(d1.to_bits(), d2.to_bits());
        }

        #[test]
        fn range_and_consistency(a in vector(8), b in vector(8)) {
            let d = distance(&a, &b).unwrap().value();
            prop_assert!((0.0..=1.0).contains(&d));
            let s = angle(&a, &b).unwrap().sin();
            prop_assert!((d - s).abs() <= 1e-12);
        }

        #[test]
        fn scale_invariance(a in vector(8), b in vector(8), c in prop::sample::select(vec![-7.5f64, -1.0, -1e-3, 1e-3, 0.5, 2.0, 1e4])) {
            let scaled: Vec<f64> = a.iter().map(|x| c * x).collect();
            let d0 = distance(&a, &b).unwrap().value();
            let d1 = distance(&scaled, &b).unwrap().value();
            prop_assert!((d0 - d1).abs() <= 1e-12);
        }

        #[test]
        fn polarity_agnosticism(a in vector(8)) {
            let neg: Vec<f64> = a.iter().map(|x| -x).collect();
            prop_assert!(distance(&a, &neg).unwrap().value() <= 1e-12);
        }

        #[test]
        fn permutation_invariance(a in vector(8), b in vector(8), rot in 0usize..8) {
            let perm = |v: &[f64]| -> Vec<f64> {
                (0..v.len()).map(|i| v[(i + rot) % v.len()]).collect()
            };
            let d0 = distance(&a, &b).unwrap().value();
            let d1 = distance(&perm(&a), &perm(&b)).unwrap().value();
            prop_assert!((d0 - d1).abs() <= 1e-12);
        }
    }
}
