//! Certifies a few direction sets at bounded coefficients and samples a
//! random good one.
//!
//! ```bash
//! cargo run -p edgemax --example good_directions
//! ```

use std::f64::consts::PI;

use edgemax::directions::random_good_directions;
use edgemax::DirectionSet;

fn main() -> edgemax::Result<()> {
    let cases = [
        ("third roots of unity", vec![0.0, 2.0 * PI / 3.0], 1),
        ("orthogonal pair", vec![0.0, PI / 2.0], 3),
        ("0, pi/3, 2pi/3", vec![0.0, PI / 3.0, 2.0 * PI / 3.0], 1),
    ];
    for (name, angles, bound) in cases {
        let set = DirectionSet::new(angles)?;
        let cert = set.check_good(bound, 1e-9)?;
        println!(
            "{name:<22} B={bound}: {}",
            serde_json::to_string(&cert).unwrap()
        );
    }

    let sampled = random_good_directions(6, 1, 42)?;
    println!(
        "\nrandom good set (seed 42): {}",
        serde_json::to_string(&sampled).unwrap()
    );
    Ok(())
}
