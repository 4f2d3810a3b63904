//! The composite self-check run by `edgemax verify-all`.
//!
//! Every check is deterministic given the [`RunConfig`], checks run on
//! separate threads and the report lists them sorted by name, so identical
//! configurations give byte-identical JSON.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::directions::{
    random_good_directions_with, DirectionSet, SamplerConfig, Verdict, DEFAULT_DELTA,
    DEFAULT_TUPLE_BUDGET,
};
use crate::error::{Error, Result};
use crate::hypercube::{total_arrange, CubeVertexSet};
use crate::lattice::LatticePointSet;
use crate::oracle::{box_max_edges_with_budget, cube_max_edges_with_budget, DEFAULT_BUDGET};
use crate::planar::{build_config_with_tol, check_config, required_directions, DEFAULT_TOL};
use crate::tcount::{hamming_weight, t_bounds, t_closed, t_hamming_sum};

pub const SCHEMA: &str = "edgemax/1";

/// Largest `max_n` accepted by [`verify_all`].
pub const MAX_FORMULA_N: u64 = 1_000_000;

/// Planar checks stop here regardless of `max_n`.
pub const MAX_PLANAR_N: u64 = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RunConfig {
    pub seed: u64,
    /// Unit-distance tolerance for planar checks.
    pub tol: f64,
    /// Coefficient bound for direction certification.
    pub bound: u32,
    /// Enumeration budget for the oracle.
    pub budget: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 0,
            tol: DEFAULT_TOL,
            bound: 1,
            budget: DEFAULT_BUDGET,
            format: OutputFormat::Json,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0 && self.tol < 1e-4) {
            return Err(Error::InvalidArgument(format!(
                "tolerance {} outside (0, 1e-4)",
                self.tol
            )));
        }
        if self.bound == 0 || self.budget == 0 {
            return Err(Error::InvalidArgument(
                "bound and budget must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Sampler settings matching this run. Certification uses ten
    /// tolerances so that no sampled set can produce an ambiguous distance
    /// in the planar scan.
    pub fn sampler(&self) -> SamplerConfig {
        SamplerConfig {
            delta: (10.0 * self.tol).min(1e-3),
            ..SamplerConfig::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Refused,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub status: CheckStatus,
    pub expected: Value,
    pub got: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub max_n: u64,
    pub config: RunConfig,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    /// 0 when everything passed, 1 on any failure or error, 3 when the only
    /// problems are budget refusals.
    pub fn exit_code(&self) -> i32 {
        let any = |s| self.checks.iter().any(|c| c.status == s);
        if any(CheckStatus::Fail) || any(CheckStatus::Error) {
            1
        } else if any(CheckStatus::Refused) {
            3
        } else {
            0
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

type CheckFn = Box<dyn Fn() -> Result<(Value, Value)> + Send + Sync>;

fn outcome(name: String, result: Result<(Value, Value)>) -> CheckOutcome {
    match result {
        Ok((expected, got)) => CheckOutcome {
            status: if expected == got {
                CheckStatus::Pass
            } else {
                CheckStatus::Fail
            },
            name,
            expected,
            got,
            error: None,
        },
        Err(e) => CheckOutcome {
            status: if matches!(e, Error::BudgetExceeded { .. }) {
                CheckStatus::Refused
            } else {
                CheckStatus::Error
            },
            name,
            expected: Value::Null,
            got: Value::Null,
            error: Some(e.to_string()),
        },
    }
}

/// Runs every check up to `max_n` (planar checks up to 256).
pub fn verify_all(max_n: u64, config: &RunConfig) -> Result<VerifyReport> {
    if max_n == 0 || max_n > MAX_FORMULA_N {
        return Err(Error::OutOfRange {
            what: "max_n",
            value: max_n,
            range: "1..=1000000",
        });
    }
    config.validate()?;
    let checks = build_checks(max_n, *config);
    let mut outcomes: Vec<CheckOutcome> = std::thread::scope(|scope| {
        let handles: Vec<_> = checks
            .iter()
            .map(|(name, f)| scope.spawn(move || outcome(name.clone(), f())))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check panicked"))
            .collect()
    });
    outcomes.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(VerifyReport {
        schema: SCHEMA,
        max_n,
        config: *config,
        passed: outcomes.iter().all(|c| c.status == CheckStatus::Pass),
        checks: outcomes,
    })
}

fn build_checks(max_n: u64, cfg: RunConfig) -> Vec<(String, CheckFn)> {
    let mut checks: Vec<(String, CheckFn)> = Vec::new();

    checks.push((
        "formula_identity".into(),
        Box::new(move || {
            let mut mismatches = Vec::new();
            let mut prev = t_closed(1)?;
            for n in 1..=max_n {
                let t = t_closed(n)?;
                if t != t_hamming_sum(n)? {
                    mismatches.push(n);
                }
                if n > 1 && t - prev != u64::from(hamming_weight(n - 1)) {
                    mismatches.push(n);
                }
                prev = t;
            }
            Ok((json!([]), json!(mismatches)))
        }),
    ));

    checks.push((
        "power_of_two_values".into(),
        Box::new(|| {
            let expected: Vec<u64> = std::iter::once(0)
                .chain((1..=20u64).map(|d| d << (d - 1)))
                .collect();
            let got = std::iter::once(t_closed(1))
                .chain((1..=20u32).map(|d| t_closed(1 << d)))
                .collect::<Result<Vec<_>>>()?;
            Ok((json!(expected), json!(got)))
        }),
    ));

    checks.push((
        "bounds_strict".into(),
        Box::new(move || {
            let mut violations = Vec::new();
            for n in 2..=max_n {
                let (lo, hi) = t_bounds(n)?;
                let t = t_closed(n)?;
                if !(lo.lt_int(t) && t < hi) {
                    violations.push(n);
                }
            }
            Ok((json!([]), json!(violations)))
        }),
    ));

    for d in 1..=4u32 {
        checks.push((
            format!("cube_oracle_d{d}"),
            Box::new(move || {
                let top = (1u64 << d).min(max_n);
                let mut expected = Vec::new();
                let mut got = Vec::new();
                for n in 1..=top {
                    let t = t_closed(n)?;
                    expected.push(json!([t, t]));
                    let oracle = cube_max_edges_with_budget(d, n as usize, cfg.budget)?;
                    let prefix = CubeVertexSet::prefix(d, n)?.edge_count();
                    got.push(json!([oracle.max_edges, prefix]));
                }
                Ok((json!(expected), json!(got)))
            }),
        ));
    }

    checks.push((
        "cube_oracle_d5_spot".into(),
        Box::new(move || {
            let sizes: Vec<u64> = [4u64, 8, 28, 30]
                .into_iter()
                .filter(|&n| n <= max_n)
                .collect();
            let expected = sizes
                .iter()
                .map(|&n| t_closed(n))
                .collect::<Result<Vec<_>>>()?;
            let got = sizes
                .iter()
                .map(|&n| {
                    cube_max_edges_with_budget(5, n as usize, cfg.budget).map(|r| r.max_edges)
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((json!(expected), json!(got)))
        }),
    ));

    checks.push((
        "box_oracle_bound".into(),
        Box::new(move || {
            // Z^2 never beats T(n); the 3x3 box attains it for n <= 5.
            let mut over = Vec::new();
            for extents in [vec![2u32, 2], vec![3, 3], vec![1, 1, 3]] {
                let cells: u64 = extents.iter().map(|&e| u64::from(e) + 1).product();
                for n in 1..=cells.min(max_n) {
                    let r = box_max_edges_with_budget(&extents, n as usize, cfg.budget)?;
                    if r.max_edges > t_closed(n)? {
                        over.push(json!({"extents": extents, "n": n}));
                    }
                }
            }
            let small = [4u64, 5]
                .into_iter()
                .filter(|&n| n <= max_n)
                .map(|n| {
                    Ok((
                        t_closed(n)?,
                        box_max_edges_with_budget(&[2, 2], n as usize, cfg.budget)?.max_edges,
                    ))
                })
                .collect::<Result<Vec<_>>>()?;
            let (expected, got): (Vec<u64>, Vec<u64>) = small.into_iter().unzip();
            Ok((
                json!({"over": [], "attained": expected}),
                json!({"over": over, "attained": got}),
            ))
        }),
    ));

    checks.push((
        "arrange_random".into(),
        Box::new(move || {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa11);
            let mut failures = Vec::new();
            for trial in 0..500u32 {
                let set = random_cube_subset(&mut rng, 10);
                let (out, trace) = total_arrange(&set);
                let n = set.len() as u64;
                let target = if n == 0 { 0 } else { t_closed(n)? };
                if !out.is_totally_arranged()
                    || out.len() != set.len()
                    || !trace.is_monotone()
                    || trace.final_edges != target
                {
                    failures.push(trial);
                }
            }
            Ok((json!([]), json!(failures)))
        }),
    ));

    checks.push((
        "compress_random".into(),
        Box::new(move || {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xc0);
            let mut failures = Vec::new();
            for trial in 0..300u32 {
                let set = random_box_subset(&mut rng, 3, 5, 20);
                let c = set.compress_with_history()?;
                let edges = set.edge_count();
                let ok = c.cube.len() == set.len()
                    && c.cube.edge_count() == edges
                    && c.history
                        .iter()
                        .all(|s| s.set.len() == set.len() && s.set.edge_count() == edges)
                    && edges <= t_closed(set.len() as u64)?;
                if !ok {
                    failures.push(trial);
                }
            }
            Ok((json!([]), json!(failures)))
        }),
    ));

    checks.push((
        "directions_examples".into(),
        Box::new(|| {
            let bad = DirectionSet::new(vec![0.0, 2.0 * PI / 3.0])?.check_good(1, DEFAULT_DELTA)?;
            let good = DirectionSet::new(vec![0.0, PI / 2.0])?.check_good(3, DEFAULT_DELTA)?;
            Ok((
                json!({"bad": {"verdict": "bad", "witness": [1, 1], "residual_below_1e-12": true}, "orthogonal": "good_up_to_B"}),
                json!({
                    "bad": {
                        "verdict": bad.verdict,
                        "witness": bad.witness,
                        "residual_below_1e-12": bad.residual.is_some_and(|r| r < 1e-12),
                    },
                    "orthogonal": good.verdict,
                }),
            ))
        }),
    ));

    checks.push((
        "directions_sampling".into(),
        Box::new(move || {
            let sampler = SamplerConfig {
                budget: DEFAULT_TUPLE_BUDGET,
                ..SamplerConfig::default()
            };
            let mut failures = Vec::new();
            for d in 1..=10usize {
                for s in 0..10u64 {
                    let seed = cfg.seed.wrapping_add(s);
                    match random_good_directions_with(d, cfg.bound, seed, &sampler) {
                        Ok(c) if c.certificate().verdict == Verdict::GoodUpToB => {}
                        _ => failures.push(json!([d, seed])),
                    }
                }
            }
            Ok((json!([]), json!(failures)))
        }),
    ));

    checks.push((
        "planar_extremal".into(),
        Box::new(move || {
            let top = max_n.min(MAX_PLANAR_N) as usize;
            let sampler = cfg.sampler();
            let sets = (1..=required_directions(top))
                .map(|d| {
                    random_good_directions_with(
                        d,
                        cfg.bound,
                        cfg.seed.wrapping_add(d as u64),
                        &sampler,
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            let mut failures = Vec::new();
            for n in 1..=top {
                let config = build_config_with_tol(n, &sets[required_directions(n) - 1], cfg.tol)?;
                if !check_config(&config)?.holds {
                    failures.push(n);
                }
            }
            Ok((json!([]), json!(failures)))
        }),
    ));

    checks
}

/// Uniform random dimension in `1..=max_dim`, then each vertex kept with a
/// random density.
pub fn random_cube_subset(rng: &mut impl Rng, max_dim: u32) -> CubeVertexSet {
    let d = rng.random_range(1..=max_dim);
    let p: f64 = rng.random();
    let v: Vec<u64> = (0..1u64 << d).filter(|_| rng.random_bool(p)).collect();
    CubeVertexSet::new(d, v).expect("indices in range")
}

/// Up to `max_points` distinct points of `{0..=side}^dim`.
pub fn random_box_subset(
    rng: &mut impl Rng,
    dim: usize,
    side: i64,
    max_points: usize,
) -> LatticePointSet {
    let target = rng.random_range(1..=max_points);
    let mut points = std::collections::BTreeSet::new();
    while points.len() < target {
        points.insert(
            (0..dim)
                .map(|_| rng.random_range(0..=side))
                .collect::<Vec<i64>>(),
        );
    }
    LatticePointSet::new(dim, points).expect("points in range")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes() {
        let report = verify_all(16, &RunConfig::default()).unwrap();
        assert!(report.passed, "{report:#?}");
        assert_eq!(report.exit_code(), 0);
        assert!(report.check("cube_oracle_d4").is_some());
        let names: Vec<_> = report.checks.iter().map(|c| c.name.clone()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(names, sorted);
    }

    #[test]
    fn reports_are_reproducible() {
        let cfg = RunConfig {
            seed: 9,
            ..RunConfig::default()
        };
        let a = serde_json::to_string(&verify_all(12, &cfg).unwrap()).unwrap();
        let b = serde_json::to_string(&verify_all(12, &cfg).unwrap()).unwrap();
        assert_eq!(a, b);
        assert!(a.contains("\"schema\":\"edgemax/1\""));
    }

    #[test]
    fn mismatch_and_refusal_statuses() {
        let fail = outcome("x".into(), Ok((json!(1), json!(2))));
        assert_eq!(fail.status, CheckStatus::Fail);
        let refused = outcome(
            "y".into(),
            Err(Error::BudgetExceeded {
                needed: 10,
                budget: 1,
            }),
        );
        assert_eq!(refused.status, CheckStatus::Refused);
        let mut report = VerifyReport {
            schema: SCHEMA,
            max_n: 1,
            config: RunConfig::default(),
            passed: false,
            checks: vec![refused],
        };
        assert_eq!(report.exit_code(), 3);
        report.checks.push(fail);
        assert_eq!(report.exit_code(), 1);
    }

    #[test]
    fn tiny_budget_is_refused() {
        let cfg = RunConfig {
            budget: 10,
            ..RunConfig::default()
        };
        let report = verify_all(8, &cfg).unwrap();
        assert_eq!(report.exit_code(), 3);
    }

    #[test]
    fn argument_validation() {
        assert!(verify_all(0, &RunConfig::default()).is_err());
        assert!(verify_all(MAX_FORMULA_N + 1, &RunConfig::default()).is_err());
        let bad = RunConfig {
            tol: 0.0,
            ..RunConfig::default()
        };
        assert!(verify_all(4, &bad).is_err());
    }
}
