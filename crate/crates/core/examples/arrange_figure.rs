//! Walks the 14-vertex example graph in {0,1}^5 through the block
//! operations and the full arrangement.
//!
//! ```bash
//! cargo run -p edgemax --example arrange_figure
//! ```

use edgemax::hypercube::{total_arrange, CubeVertexSet};

fn show(label: &str, set: &CubeVertexSet) {
    let b = set.blocks().expect("d >= 2");
    println!(
        "{label:<22} edges={:>3}  A={:?} B={:?} C={:?} D={:?}",
        set.edge_count(),
        b.a.to_vec(),
        b.b.to_vec(),
        b.c.to_vec(),
        b.d.to_vec()
    );
}

fn main() -> edgemax::Result<()> {
    let t = CubeVertexSet::new(5, [0, 1, 9, 10, 11, 19, 23, 24, 25, 26, 27, 28, 29, 30])?;
    let p = t.partition_edges()?;
    println!(
        "E_AB={} E_CD={} E^vert={}  |  E_AC={} E_BD={} E^hor={}",
        p.ab, p.cd, p.vert, p.ac, p.bd, p.hor
    );

    show("T", &t);
    show("lambda_4(T)", &t.flip_coordinate(4)?);
    show("sigma_3,4(T)", &t.swap_coordinates(3, 4)?);
    show("horizontally arranged", &t.horizontal_arrange()?);
    show("vertically arranged", &t.vertical_arrange()?);

    let (out, trace) = total_arrange(&t);
    println!("\ntrace (start: {} edges):", trace.initial_edges);
    for step in &trace.steps {
        println!("  {:<20} -> {} edges", step.op.to_string(), step.edges);
    }
    show("totally arranged", &out);
    Ok(())
}
