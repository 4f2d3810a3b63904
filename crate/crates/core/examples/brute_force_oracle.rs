//! Exhaustive maxima on small cubes and boxes next to T(n).
//!
//! ```bash
//! cargo run -p edgemax --release --example brute_force_oracle
//! ```

use edgemax::{box_max_edges, cube_max_edges, t_closed};

fn main() -> edgemax::Result<()> {
    println!("{{0,1}}^4:");
    for n in 1..=16 {
        let r = cube_max_edges(4, n)?;
        println!(
            "  n={n:>2}  oracle={:>2}  T(n)={:>2}  subsets={:>5}",
            r.max_edges,
            t_closed(n as u64)?,
            r.subsets_examined
        );
    }

    // A 4x4 piece of Z^2 falls short of T(n) once n needs a third dimension.
    println!("4x4 box of Z^2:");
    for n in 1..=10 {
        let r = box_max_edges(&[3, 3], n)?;
        println!(
            "  n={n:>2}  oracle={:>2}  T(n)={:>2}",
            r.max_edges,
            t_closed(n as u64)?
        );
    }
    Ok(())
}
