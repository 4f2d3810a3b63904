//! Runs the composite self-check and prints one line per check.
//!
//! ```bash
//! cargo run -p edgemax --release --example self_check
//! ```

use edgemax::{verify_all, RunConfig};

fn main() -> edgemax::Result<()> {
    let report = verify_all(256, &RunConfig::default())?;
    for c in &report.checks {
        println!("{:<22} {:?}", c.name, c.status);
    }
    println!("exit code would be {}", report.exit_code());
    Ok(())
}
