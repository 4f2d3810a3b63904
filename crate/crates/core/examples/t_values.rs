//! Tabulates T(n) by the three independent routes, with the bounds.
//!
//! ```bash
//! cargo run -p edgemax --example t_values -- 40
//! ```

use edgemax::TCountReport;

fn main() -> edgemax::Result<()> {
    let upto: u64 = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(32);

    println!(
        "{:>6} {:>8} {:>8} {:>8} {:>10} {:>8}",
        "n", "closed", "H-sum", "recur", "lower", "upper"
    );
    for n in 1..=upto {
        let r = TCountReport::new(n)?;
        assert!(r.is_consistent());
        let lower = r
            .lower_bound
            .map_or("-".to_string(), |f| format!("{}", f.to_f64()));
        let upper = r.upper_bound.map_or("-".to_string(), |u| u.to_string());
        println!(
            "{:>6} {:>8} {:>8} {:>8} {:>10} {:>8}",
            n, r.t_closed, r.t_hamming_sum, r.t_recurrence, lower, upper
        );
    }
    Ok(())
}
