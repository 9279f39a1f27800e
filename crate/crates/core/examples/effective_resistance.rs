//! Electric flows and effective resistances on small networks.
//!
//! Run with `cargo run --example effective_resistance`.

use flowpath::{effective_resistance, escape_time_bound, solve_flow, Graph};

fn main() -> flowpath::Result<()> {
    // A unit triangle: direct edge 0-2 in parallel with the detour 0-1-2.
    let triangle = Graph::from_edge_list("0 2 1\n0 1 1\n1 2 1")?;
    let flow = solve_flow(&triangle, 0, 2)?;
    println!("triangle resistance R(0,2) = {}", flow.resistance);
    for e in triangle.edge_ids() {
        let (u, v) = triangle.endpoints(e);
        println!("  edge {u}-{v}: flow {:+.4}", flow.flow(e));
    }
    println!(
        "  walker escape-time bound R*m = {}",
        escape_time_bound(&triangle, 0, 2)?
    );

    // Series path: resistance equals the hop count.
    let path = Graph::from_edge_list("0 1 1\n1 2 1\n2 3 1")?;
    println!(
        "\n3-edge path: R(0,3) = {}",
        effective_resistance(&path, 0, 3)?
    );

    // Removing edges never lowers the resistance.
    println!("\nremoval monotonicity on the triangle:");
    for e in triangle.edge_ids() {
        let (u, v) = triangle.endpoints(e);
        let r = effective_resistance(&triangle.remove_edge(e)?, 0, 2)?;
        println!("  without {u}-{v}: R = {r}");
    }

    // A disconnected pair reports infinite resistance.
    let cut = path.remove_edge(path.edge_between(1, 2).unwrap())?;
    println!(
        "\nafter cutting the middle path edge: R(0,3) = {}",
        effective_resistance(&cut, 0, 3)?
    );
    Ok(())
}
