//! Compresses a 3x3 grid of Z^2 onto a hypercube, printing each
//! intermediate set.
//!
//! ```bash
//! cargo run -p edgemax --example lattice_compression
//! ```

use edgemax::LatticePointSet;

fn main() -> edgemax::Result<()> {
    let grid = (0..3).flat_map(|x| (0..3).map(move |y| vec![x, y]));
    let set = LatticePointSet::new(2, grid)?;
    println!(
        "input: {} points, {} edges, M = {:?}",
        set.len(),
        set.edge_count(),
        set.coordinate_max()?
    );

    let c = set.compress_with_history()?;
    for (k, step) in c.history.iter().enumerate() {
        let pts: Vec<_> = step.set.points().cloned().collect();
        println!(
            "step {k}: compressed coordinate {} -> dim {}, {} edges\n  {pts:?}",
            step.coordinate,
            step.set.dim(),
            step.set.edge_count()
        );
    }
    println!("cube: {}  ({} edges)", c.cube, c.cube.edge_count());
    Ok(())
}
