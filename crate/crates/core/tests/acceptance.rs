//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any fails.

use std::f64::consts::PI;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use edgemax::directions::{random_good_directions_with, DirectionSet, SamplerConfig, Verdict};
use edgemax::hypercube::{total_arrange, CubeVertexSet};
use edgemax::oracle::cube_max_edges;
use edgemax::planar::{build_config_with_tol, check_config, required_directions};
use edgemax::tcount::{hamming_weight, t_bounds, t_closed, t_hamming_sum};
use edgemax::verify::{random_box_subset, random_cube_subset};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_secs: u64) -> Result<(), String> {
    ensure(elapsed < Duration::from_secs(limit_secs), || {
        format!("took {elapsed:.2?}, limit {limit_secs} s")
    })
}

fn formula_triple_equality() -> Outcome {
    let start = Instant::now();
    let mut prev = 0u64;
    for n in 1..=1_000_000u64 {
        let t = t_closed(n).map_err(|e| e.to_string())?;
        let s = t_hamming_sum(n).map_err(|e| e.to_string())?;
        ensure(t == s, || format!("T({n}): closed {t} != hamming sum {s}"))?;
        if n > 1 {
            ensure(t - prev == u64::from(hamming_weight(n - 1)), || {
                format!("T({n}) - T({}) != H({})", n - 1, n - 1)
            })?;
        }
        prev = t;
    }
    let elapsed = start.elapsed();
    within(elapsed, 5)?;
    Ok(format!("n <= 10^6 in {elapsed:.2?}"))
}

fn power_of_two_values() -> Outcome {
    ensure(t_closed(1) == Ok(0), || "T(1) != 0".into())?;
    for d in 1..=20u32 {
        let expected = u64::from(d) << (d - 1);
        let got = t_closed(1 << d).map_err(|e| e.to_string())?;
        ensure(got == expected, || {
            format!("T(2^{d}) = {got}, expected {expected}")
        })?;
    }
    for n in 2..=1_000_000u64 {
        let (lo, hi) = t_bounds(n).map_err(|e| e.to_string())?;
        let t = t_closed(n).map_err(|e| e.to_string())?;
        ensure(lo.lt_int(t) && t < hi, || {
            format!("bounds fail at n={n}: {lo} < {t} < {hi}")
        })?;
    }
    Ok("T(2^d) for d <= 20, strict bounds for 2 <= n <= 10^6".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for d in 1..=4u32 {
        for n in 1..=1u64 << d {
            let oracle = cube_max_edges(d, n as usize)
                .map_err(|e| e.to_string())?
                .max_edges;
            let t = t_closed(n).map_err(|e| e.to_string())?;
            let prefix = CubeVertexSet::prefix(d, n)
                .map_err(|e| e.to_string())?
                .edge_count();
            ensure(oracle == t && t == prefix, || {
                format!("d={d} n={n}: oracle {oracle}, T {t}, prefix {prefix}")
            })?;
            checked += 1;
        }
    }
    for n in [4u64, 8, 28, 30] {
        let oracle = cube_max_edges(5, n as usize)
            .map_err(|e| e.to_string())?
            .max_edges;
        let t = t_closed(n).map_err(|e| e.to_string())?;
        ensure(oracle == t, || format!("d=5 n={n}: oracle {oracle}, T {t}"))?;
        checked += 1;
    }
    let elapsed = start.elapsed();
    within(elapsed, 30)?;
    Ok(format!("{checked} (d, n) cases in {elapsed:.2?}"))
}

fn arrangement_soundness() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..10_000 {
        let set = random_cube_subset(&mut rng, 10);
        let (out, trace) = total_arrange(&set);
        let n = set.len() as u64;
        let expected = CubeVertexSet::prefix(set.dim(), n).map_err(|e| e.to_string())?;
        ensure(out == expected, || {
            format!("trial {trial}: result is not the prefix set")
        })?;
        ensure(trace.is_monotone(), || {
            format!("trial {trial}: edge count decreased")
        })?;
        let target = if n == 0 {
            0
        } else {
            t_closed(n).map_err(|e| e.to_string())?
        };
        ensure(trace.final_edges == target, || {
            format!(
                "trial {trial}: final edges {} != T({n}) = {target}",
                trace.final_edges
            )
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, 60)?;
    Ok(format!("10000 subsets with d <= 10 in {elapsed:.2?}"))
}

fn golden_example() -> Outcome {
    let t = CubeVertexSet::new(5, [0, 1, 9, 10, 11, 19, 23, 24, 25, 26, 27, 28, 29, 30])
        .map_err(|e| e.to_string())?;
    let p = t.partition_edges().map_err(|e| e.to_string())?;
    ensure(p.hor == 2 && p.vert == 3, || {
        format!("E^hor {} E^vert {}", p.hor, p.vert)
    })?;
    let checks: [(&str, Vec<u64>, Vec<u64>); 4] = [
        (
            "lambda_4(T)",
            t.flip_coordinate(4).map_err(|e| e.to_string())?.to_vec(),
            vec![3, 7, 8, 9, 10, 11, 12, 13, 14, 16, 17, 25, 26, 27],
        ),
        (
            "horizontal",
            t.horizontal_arrange().map_err(|e| e.to_string())?.to_vec(),
            (0..=4).chain(16..=24).collect(),
        ),
        (
            "vertical",
            t.vertical_arrange().map_err(|e| e.to_string())?.to_vec(),
            (0..=3).chain(8..=15).chain(24..=25).collect(),
        ),
        ("complete", total_arrange(&t).0.to_vec(), (0..=13).collect()),
    ];
    for (name, got, expected) in checks {
        ensure(got == expected, || {
            format!("{name}: got {got:?}, expected {expected:?}")
        })?;
    }
    Ok("E^hor = 2, E^vert = 3, four arrays match".into())
}

fn compression_conservation() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let mut steps = 0;
    for trial in 0..1000 {
        let set = random_box_subset(&mut rng, 3, 5, 20);
        let edges = set.edge_count();
        let c = set.compress_with_history().map_err(|e| e.to_string())?;
        ensure(
            c.cube.len() == set.len() && c.cube.edge_count() == edges,
            || {
                format!(
                    "trial {trial}: cube has {} vertices / {} edges, input {} / {edges}",
                    c.cube.len(),
                    c.cube.edge_count(),
                    set.len()
                )
            },
        )?;
        for (k, s) in c.history.iter().enumerate() {
            ensure(
                s.set.len() == set.len() && s.set.edge_count() == edges,
                || format!("trial {trial}: step {k} changed the counts"),
            )?;
        }
        steps += c.history.len();
    }
    Ok(format!(
        "1000 subsets of [0,5]^3, {steps} compression steps"
    ))
}

fn direction_certification() -> Outcome {
    let bad = DirectionSet::new(vec![0.0, 2.0 * PI / 3.0]).map_err(|e| e.to_string())?;
    let cert = bad.check_good(1, 1e-12).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::Bad, || "(0, 2π/3) accepted".into())?;
    ensure(cert.witness.as_deref() == Some(&[1, 1][..]), || {
        format!("witness {:?}", cert.witness)
    })?;
    let residual = (bad.combination_norm(&[1, 1]) - 1.0).abs();
    ensure(residual < 1e-12, || format!("residual {residual}"))?;

    let orth = DirectionSet::new(vec![0.0, PI / 2.0]).map_err(|e| e.to_string())?;
    let cert = orth.check_good(3, 1e-9).map_err(|e| e.to_string())?;
    ensure(cert.verdict == Verdict::GoodUpToB, || {
        "(0, π/2) rejected at B=3".into()
    })?;

    let sampler = SamplerConfig::default();
    for d in 1..=10 {
        for seed in 0..100 {
            random_good_directions_with(d, 1, seed, &sampler)
                .map_err(|e| format!("d={d} seed={seed}: {e}"))?;
        }
    }
    Ok(format!(
        "witness (1,1) residual {residual:.1e}; sampling ok for d <= 10 x 100 seeds"
    ))
}

fn planar_end_to_end() -> Outcome {
    let start = Instant::now();
    let tol = 1e-9;
    let sampler = SamplerConfig {
        delta: 10.0 * tol,
        ..SamplerConfig::default()
    };
    let sets = (1..=8)
        .map(|d| random_good_directions_with(d, 1, 7 + d as u64, &sampler))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    for n in 1..=256usize {
        let dirs = &sets[required_directions(n) - 1];
        let config = build_config_with_tol(n, dirs, tol).map_err(|e| format!("n={n}: {e}"))?;
        let check = check_config(&config).map_err(|e| format!("n={n}: {e}"))?;
        ensure(check.holds, || {
            format!(
                "n={n}: {} unit pairs, T = {}",
                check.report.count, check.expected
            )
        })?;
    }
    let elapsed = start.elapsed();
    within(elapsed, 10)?;
    Ok(format!("n <= 256 in {elapsed:.2?}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 formula triple-equality", formula_triple_equality),
        (
            "2 power-of-two values and strict bounds",
            power_of_two_values,
        ),
        ("3 cube oracle equivalence", oracle_equivalence),
        ("4 arrangement soundness", arrangement_soundness),
        ("5 golden 5-cube example", golden_example),
        ("6 compression conservation", compression_conservation),
        ("7 direction certification", direction_certification),
        ("8 planar end-to-end", planar_end_to_end),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
