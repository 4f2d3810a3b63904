use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use edgemax::directions::{random_good_directions_with, DirectionSet};
use edgemax::oracle::{box_max_edges_with_budget, cube_max_edges_with_budget, DEFAULT_BUDGET};
use edgemax::planar::{build_config_with_tol, check_config, required_directions, DEFAULT_TOL};
use edgemax::tcount::{hamming_weight, t_bounds, t_closed};
use edgemax::verify::{OutputFormat, RunConfig};
use edgemax::{total_arrange, CubeVertexSet, Error, LatticePointSet};

// Like println!, but a closed stdout (e.g. piping into `head`) ends the
// process quietly instead of panicking.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if writeln!(std::io::stdout(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "edgemax",
    version,
    about = "Extremal unit-distance and hypercube edge counts"
)]
struct Cli {
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Enumeration budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Unit-distance tolerance, also the certification tolerance δ.
    #[arg(long, global = true, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Rows of n, T(n), H(n) and the bounds.
    Tvalues {
        #[arg(long)]
        from: u64,
        #[arg(long)]
        to: u64,
    },
    /// Totally arrange a hypercube vertex set and print the trace.
    Arrange {
        #[arg(long)]
        dim: u32,
        #[arg(
            long,
            value_delimiter = ',',
            conflicts_with = "random",
            required_unless_present = "random"
        )]
        vertices: Option<Vec<u64>>,
        /// Draw this many distinct vertices at random.
        #[arg(long)]
        random: Option<usize>,
    },
    /// Compress a lattice point set onto a hypercube.
    Compress {
        /// Points as "x,y;x,y;…".
        #[arg(long)]
        points: String,
    },
    /// Sample and certify a good direction set.
    Directions {
        #[arg(long = "d")]
        d: usize,
        #[arg(long, default_value_t = 1)]
        bound: u32,
    },
    /// Build the extremal planar configuration for n points.
    Construct {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        bound: u32,
        /// Emit the unit segments for plotting.
        #[arg(long)]
        plot_data: bool,
    },
    /// Exhaustive edge maximisation.
    Oracle {
        #[command(subcommand)]
        target: OracleTarget,
    },
    /// Run every self-check and print a JSON report.
    VerifyAll {
        #[arg(long, default_value_t = 256)]
        max_n: u64,
        #[arg(long, default_value_t = 1)]
        bound: u32,
    },
}

#[derive(Subcommand)]
enum OracleTarget {
    Cube {
        #[arg(long = "d")]
        d: u32,
        #[arg(long)]
        n: usize,
    },
    Box {
        #[arg(long, value_delimiter = ',')]
        extents: Vec<u32>,
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::BudgetExceeded { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn print_json(value: &impl serde::Serialize) {
    out!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn run(cli: &Cli) -> Result<u8, Error> {
    match &cli.command {
        Command::Tvalues { from, to } => tvalues(*from, *to, cli.format)?,
        Command::Arrange {
            dim,
            vertices,
            random,
        } => {
            let set = match (vertices, random) {
                (Some(v), _) => CubeVertexSet::new(*dim, v.iter().copied())?,
                (None, Some(n)) => random_vertices(*dim, *n, cli.seed)?,
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let (_, trace) = total_arrange(&set);
            print_json(&trace);
        }
        Command::Compress { points } => {
            let set = LatticePointSet::parse(points)?;
            let cube = set.compress_to_cube()?;
            print_json(&json!({
                "input_edges": set.edge_count(),
                "output_dim": cube.dim(),
                "output_vertices": cube.to_vec(),
                "output_edges": cube.edge_count(),
            }));
        }
        Command::Directions { d, bound } => {
            let config = run_config(cli, *bound);
            let sampler = edgemax::directions::SamplerConfig {
                delta: cli.tol,
                ..config.sampler()
            };
            let dirs = random_good_directions_with(*d, *bound, cli.seed, &sampler)?;
            print_json(&dirs);
        }
        Command::Construct {
            n,
            bound,
            plot_data,
        } => construct(cli, *n, *bound, *plot_data)?,
        Command::Oracle { target } => {
            let result = match target {
                OracleTarget::Cube { d, n } => cube_max_edges_with_budget(*d, *n, cli.budget)?,
                OracleTarget::Box { extents, n } => {
                    box_max_edges_with_budget(extents, *n, cli.budget)?
                }
            };
            print_json(&result);
        }
        Command::VerifyAll { max_n, bound } => {
            let report = edgemax::verify_all(*max_n, &run_config(cli, *bound))?;
            print_json(&report);
            return Ok(report.exit_code() as u8);
        }
    }
    Ok(0)
}

fn run_config(cli: &Cli, bound: u32) -> RunConfig {
    RunConfig {
        seed: cli.seed,
        tol: cli.tol,
        bound,
        budget: cli.budget,
        format: match cli.format {
            Format::Json => OutputFormat::Json,
            Format::Csv => OutputFormat::Csv,
        },
    }
}

fn tvalues(from: u64, to: u64, format: Format) -> Result<(), Error> {
    if from == 0 || from > to {
        return Err(Error::InvalidArgument(format!("bad range {from}..={to}")));
    }
    let mut rows = Vec::new();
    for n in from..=to {
        let t = t_closed(n)?;
        let bounds = if n >= 2 { Some(t_bounds(n)?) } else { None };
        rows.push((n, t, hamming_weight(n), bounds));
    }
    match format {
        Format::Csv => {
            out!("n,T,H,lower_num,lower_den,upper");
            for (n, t, h, b) in rows {
                match b {
                    Some((lo, hi)) => out!("{n},{t},{h},{},{},{hi}", lo.num, lo.den),
                    None => out!("{n},{t},{h},,,"),
                }
            }
        }
        Format::Json => {
            let rows: Vec<_> = rows
                .into_iter()
                .map(|(n, t, h, b)| {
                    json!({
                        "n": n,
                        "T": t,
                        "H": h,
                        "lower_num": b.map(|b| b.0.num),
                        "lower_den": b.map(|b| b.0.den),
                        "upper": b.map(|b| b.1),
                    })
                })
                .collect();
            print_json(&rows);
        }
    }
    Ok(())
}

fn random_vertices(dim: u32, n: usize, seed: u64) -> Result<CubeVertexSet, Error> {
    if dim == 0 || dim > edgemax::hypercube::MAX_DIM || n as u128 > 1u128 << dim {
        return Err(Error::InvalidArgument(format!(
            "cannot draw {n} vertices from dimension {dim}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picked = rand::seq::index::sample(&mut rng, 1usize << dim, n);
    CubeVertexSet::new(dim, picked.into_iter().map(|i| i as u64))
}

fn construct(cli: &Cli, n: usize, bound: u32, plot_data: bool) -> Result<(), Error> {
    let config = run_config(cli, bound);
    config.validate()?;
    let dirs =
        random_good_directions_with(required_directions(n), bound, cli.seed, &config.sampler())?;
    let planar = build_config_with_tol(n, &dirs, cli.tol)?;
    let check = check_config(&planar)?;
    let segments: Vec<[[f64; 2]; 2]> = check
        .report
        .unit_pairs
        .iter()
        .map(|&[i, j]| [planar.points[i], planar.points[j]])
        .collect();
    match cli.format {
        Format::Json => {
            let mut out = json!({
                "points": planar.points,
                "unit_pairs": check.report.unit_pairs,
                "count": check.report.count,
                "T": check.expected,
                "angles": DirectionSet::angles(&dirs),
            });
            if plot_data {
                out["segments"] = json!(segments);
            }
            print_json(&out);
        }
        Format::Csv if plot_data => {
            out!("x1,y1,x2,y2");
            for [a, b] in segments {
                out!("{},{},{},{}", a[0], a[1], b[0], b[1]);
            }
        }
        Format::Csv => {
            out!("x,y");
            for p in &planar.points {
                out!("{},{}", p[0], p[1]);
            }
        }
    }
    Ok(())
}
