//! Builds the extremal planar configuration for n points and writes its
//! unit segments as CSV (x1,y1,x2,y2) for plotting.
//!
//! ```bash
//! cargo run -p edgemax --example planar_construction -- 37 > segments.csv
//! ```

use edgemax::directions::random_good_directions;
use edgemax::planar::required_directions;
use edgemax::{build_config, count_unit_distances, t_closed};

fn main() -> edgemax::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(37);

    let dirs = random_good_directions(required_directions(n), 1, 7)?;
    let config = build_config(n, &dirs)?;
    let report = count_unit_distances(&config)?;
    eprintln!(
        "n={n}: {} unit distances (T(n) = {}), {} distinct directions, angles {:?}",
        report.count,
        t_closed(n as u64)?,
        report.distinct_directions.len(),
        dirs.angles()
    );

    println!("x1,y1,x2,y2");
    for [i, j] in report.unit_pairs {
        let (a, b) = (config.points[i], config.points[j]);
        println!("{},{},{},{}", a[0], a[1], b[0], b[1]);
    }
    Ok(())
}
