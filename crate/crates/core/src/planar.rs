//! The extremal planar configuration.
//!
//! For `2^{d-1} < n ≤ 2^d` and a good direction set `u_0, …, u_{d-1}`, the
//! point for index `j` is `Σ_k a_k u_k` where `a_k` is bit `k` of `j`. Two
//! points are at unit distance exactly when their indices differ in one
//! bit, so the configuration carries the edges of the prefix set
//! `{0, …, n-1}` of the hypercube, `T(n)` of them.
//!
//! Error budget: each coordinate is a sum of at most 62 terms of magnitude
//! ≤ 1, so its absolute rounding error stays around `1e-13`, far inside
//! the default tolerance of `1e-9`.

use std::f64::consts::PI;

use serde::Serialize;

use crate::directions::CertifiedDirections;
use crate::error::{Error, Result};
use crate::tcount::t_closed;

pub const DEFAULT_TOL: f64 = 1e-9;

/// Two difference directions closer than this (modulo π) are the same.
pub const ANGLE_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlanarConfig {
    pub points: Vec<[f64; 2]>,
    pub directions: CertifiedDirections,
    pub tol: f64,
}

impl PlanarConfig {
    pub fn n(&self) -> usize {
        self.points.len()
    }
}

/// Number of directions the construction uses for `n` points.
pub fn required_directions(n: usize) -> usize {
    let bits = (usize::BITS - n.saturating_sub(1).leading_zeros()) as usize;
    bits.max(1)
}

pub fn build_config(n: usize, directions: &CertifiedDirections) -> Result<PlanarConfig> {
    build_config_with_tol(n, directions, DEFAULT_TOL)
}

pub fn build_config_with_tol(
    n: usize,
    directions: &CertifiedDirections,
    tol: f64,
) -> Result<PlanarConfig> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            range: "1..",
        });
    }
    if !(tol > 0.0 && tol < 1e-3) {
        return Err(Error::InvalidArgument(format!(
            "tolerance {tol} outside (0, 1e-3)"
        )));
    }
    let d = required_directions(n);
    if directions.len() != d {
        return Err(Error::DimensionMismatch {
            n,
            expected: d,
            got: directions.len(),
        });
    }
    let units: Vec<[f64; 2]> = (0..d).map(|k| directions.unit(k)).collect();
    let points: Vec<[f64; 2]> = (0..n)
        .map(|j| {
            let mut p = [0.0, 0.0];
            for (k, u) in units.iter().enumerate() {
                if j >> k & 1 == 1 {
                    p[0] += u[0];
                    p[1] += u[1];
                }
            }
            p
        })
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            if distance(points[i], points[j]) <= tol {
                return Err(Error::CoincidentPoints(i, j));
            }
        }
    }
    Ok(PlanarConfig {
        points,
        directions: directions.clone(),
        tol,
    })
}

fn distance(a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - b[0]).hypot(a[1] - b[1])
}

/// Principal argument of `±v`, in `[0, π)`.
pub fn line_angle(v: [f64; 2]) -> f64 {
    let a = v[1].atan2(v[0]);
    let a = if a < 0.0 { a + PI } else { a };
    if a >= PI {
        a - PI
    } else {
        a
    }
}

fn same_line(a: f64, b: f64) -> bool {
    let d = (a - b).abs();
    d.min(PI - d) <= ANGLE_TOL
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UnitDistanceReport {
    pub unit_pairs: Vec<[usize; 2]>,
    /// One difference vector per distinct unit direction, sign-flipped so
    /// its argument lies in `[0, π)`.
    pub distinct_directions: Vec<[f64; 2]>,
    pub count: usize,
}

impl UnitDistanceReport {
    /// Principal arguments of the distinct directions.
    pub fn direction_angles(&self) -> Vec<f64> {
        self.distinct_directions
            .iter()
            .map(|&v| line_angle(v))
            .collect()
    }
}

/// All-pairs scan for distances within `tol` of 1.
///
/// A distance inside `[1 - 10 tol, 1 + 10 tol]` but outside the `tol` band
/// is reported as [`Error::ToleranceAmbiguity`] instead of being classified.
pub fn count_unit_distances(config: &PlanarConfig) -> Result<UnitDistanceReport> {
    unit_distances(&config.points, config.tol)
}

/// [`count_unit_distances`] on a bare point list.
pub fn unit_distances(points: &[[f64; 2]], tol: f64) -> Result<UnitDistanceReport> {
    let mut unit_pairs = Vec::new();
    let mut distinct_directions: Vec<[f64; 2]> = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let diff = [points[j][0] - points[i][0], points[j][1] - points[i][1]];
            let dist = diff[0].hypot(diff[1]);
            let off = (dist - 1.0).abs();
            if off <= tol {
                unit_pairs.push([i, j]);
                let angle = line_angle(diff);
                if !distinct_directions
                    .iter()
                    .any(|&v| same_line(line_angle(v), angle))
                {
                    let (s, c) = angle.sin_cos();
                    let sign = if diff[0] * c + diff[1] * s >= 0.0 {
                        1.0
                    } else {
                        -1.0
                    };
                    distinct_directions.push([sign * diff[0], sign * diff[1]]);
                }
            } else if off <= 10.0 * tol {
                return Err(Error::ToleranceAmbiguity {
                    i,
                    j,
                    distance: dist,
                });
            }
        }
    }
    let count = unit_pairs.len();
    Ok(UnitDistanceReport {
        unit_pairs,
        distinct_directions,
        count,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalCheck {
    pub holds: bool,
    pub expected: u64,
    pub report: UnitDistanceReport,
}

/// Builds the configuration and checks it has `T(n)` unit pairs, all along
/// configured directions.
pub fn verify_extremal(n: usize, directions: &CertifiedDirections) -> Result<ExtremalCheck> {
    let config = build_config(n, directions)?;
    check_config(&config)
}

pub fn check_config(config: &PlanarConfig) -> Result<ExtremalCheck> {
    let report = count_unit_distances(config)?;
    let expected = t_closed(config.n() as u64)?;
    let configured = config.directions.angles();
    let directions_ok = report
        .direction_angles()
        .iter()
        .all(|&a| configured.iter().any(|&b| same_line(a, b)));
    Ok(ExtremalCheck {
        holds: report.count as u64 == expected && directions_ok,
        expected,
        report,
    })
}

/// Translates the first point to the origin and rotates so that the first
/// unit-distance pair found points along `(1, 0)`. `None` when there is no
/// unit pair.
pub fn canonicalize(points: &[[f64; 2]], tol: f64) -> Option<Vec<[f64; 2]>> {
    let origin = *points.first()?;
    let shifted: Vec<[f64; 2]> = points
        .iter()
        .map(|p| [p[0] - origin[0], p[1] - origin[1]])
        .collect();
    let (i, j) = (0..shifted.len())
        .flat_map(|i| (i + 1..shifted.len()).map(move |j| (i, j)))
        .find(|&(i, j)| (distance(shifted[i], shifted[j]) - 1.0).abs() <= tol)?;
    let theta = line_angle([shifted[j][0] - shifted[i][0], shifted[j][1] - shifted[i][1]]);
    let (s, c) = (-theta).sin_cos();
    Some(
        shifted
            .iter()
            .map(|p| [c * p[0] - s * p[1], s * p[0] + c * p[1]])
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::directions::{random_good_directions, DirectionSet};

    fn certified(angles: &[f64]) -> CertifiedDirections {
        DirectionSet::new(angles.to_vec())
            .unwrap()
            .certify(1, 1e-9)
            .unwrap()
    }

    fn close(a: &[[f64; 2]], b: &[[f64; 2]]) -> bool {
        a.len() == b.len()
            && a.iter()
                .zip(b)
                .all(|(p, q)| (p[0] - q[0]).abs() < 1e-12 && (p[1] - q[1]).abs() < 1e-12)
    }

    #[test]
    fn required_direction_counts() {
        assert_eq!(required_directions(1), 1);
        assert_eq!(required_directions(2), 1);
        assert_eq!(required_directions(3), 2);
        assert_eq!(required_directions(4), 2);
        assert_eq!(required_directions(5), 3);
        assert_eq!(required_directions(256), 8);
    }

    #[test]
    fn build_examples() {
        let c = build_config(2, &certified(&[0.0])).unwrap();
        assert!(close(&c.points, &[[0.0, 0.0], [1.0, 0.0]]));

        let square = build_config(4, &certified(&[0.0, PI / 2.0])).unwrap();
        assert!(close(
            &square.points,
            &[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0], [1.0, 1.0]]
        ));

        let three = build_config(3, &certified(&[0.0, PI / 2.0])).unwrap();
        assert!(close(&three.points, &[[0.0, 0.0], [1.0, 0.0], [0.0, 1.0]]));
    }

    #[test]
    fn build_rejects_wrong_dimension() {
        let two = certified(&[0.0, PI / 2.0]);
        assert!(matches!(
            build_config(5, &two),
            Err(Error::DimensionMismatch {
                expected: 3,
                got: 2,
                ..
            })
        ));
        assert!(build_config(2, &two).is_err());
        assert!(build_config(0, &two).is_err());
    }

    #[test]
    fn count_examples() {
        let square = build_config(4, &certified(&[0.0, PI / 2.0])).unwrap();
        let r = count_unit_distances(&square).unwrap();
        assert_eq!(r.count, 4);
        assert_eq!(r.distinct_directions.len(), 2);

        let three = build_config(3, &certified(&[0.0, PI / 2.0])).unwrap();
        assert_eq!(count_unit_distances(&three).unwrap().count, 2);

        let one = build_config(1, &certified(&[0.3])).unwrap();
        assert_eq!(count_unit_distances(&one).unwrap().count, 0);
    }

    #[test]
    fn ambiguity_is_an_error() {
        let pts = [[0.0, 0.0], [1.0 + 5e-9, 0.0]];
        assert!(matches!(
            unit_distances(&pts, 1e-9),
            Err(Error::ToleranceAmbiguity { .. })
        ));
        assert_eq!(unit_distances(&pts, 1e-8).unwrap().count, 1);
    }

    #[test]
    fn directions_normalized_to_upper_half_plane() {
        let pts = [[0.0, 0.0], [0.0, -1.0], [-1.0, 0.0]];
        let r = unit_distances(&pts, 1e-9).unwrap();
        for v in &r.distinct_directions {
            let a = v[1].atan2(v[0]);
            assert!((0.0..PI).contains(&a), "{v:?}");
        }
        assert_eq!(r.distinct_directions.len(), 2);
    }

    #[test]
    fn extremal_examples() {
        let dirs = random_good_directions(4, 1, 3).unwrap();
        let check = verify_extremal(16, &dirs).unwrap();
        assert!(check.holds);
        assert_eq!(check.report.count, 32);

        let single = verify_extremal(1, &certified(&[1.0])).unwrap();
        assert!(single.holds && single.report.count == 0);

        let dirs = random_good_directions(4, 1, 5).unwrap();
        let check = verify_extremal(10, &dirs).unwrap();
        assert!(check.holds);
        assert_eq!(check.report.count, 15);
    }

    #[test]
    fn canonicalize_moves_first_unit_pair_to_x_axis() {
        let dirs = certified(&[0.4, 1.3]);
        let config = build_config(4, &dirs).unwrap();
        let shifted: Vec<[f64; 2]> = config
            .points
            .iter()
            .map(|p| [p[0] + 3.0, p[1] - 1.0])
            .collect();
        let canon = canonicalize(&shifted, 1e-9).unwrap();
        assert!(canon[0][0].abs() < 1e-12 && canon[0][1].abs() < 1e-12);
        assert!((canon[1][0] - 1.0).abs() < 1e-12 && canon[1][1].abs() < 1e-12);
        assert!(canonicalize(&[[0.0, 0.0], [3.0, 0.0]], 1e-9).is_none());
    }
}
