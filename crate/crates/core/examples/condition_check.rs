//! The path condition: edge-removal checker vs the exhaustive subgraph
//! checker, on instances that pass and instances that fail.
//!
//! Run with `cargo run --example condition_check`.

use flowpath::{check_condition_bruteforce, check_condition_edges, Graph, InstanceSpec};

fn main() -> flowpath::Result<()> {
    let cases: Vec<(&str, Graph, usize, usize)> = vec![
        (
            "triangle",
            Graph::from_edge_list("0 2 1\n0 1 1\n1 2 1")?,
            0,
            2,
        ),
        (
            "four-cycle (two tied routes)",
            Graph::from_edge_list("0 1 1\n1 2 1\n2 3 1\n0 3 1")?,
            0,
            2,
        ),
        (
            "heavy direct edge",
            Graph::from_edge_list("0 2 0.2\n0 1 1\n1 2 1")?,
            0,
            2,
        ),
    ];
    for (name, g, s, t) in cases {
        let report = check_condition_edges(&g, s, t)?;
        let brute = check_condition_bruteforce(&g, s, t)?;
        println!("{name}:");
        print!("{}", report.to_text());
        println!("exhaustive agrees: {}", brute == report.holds_condition1);
        println!();
    }

    // A generated composite: backbone with side gadgets.
    let inst = InstanceSpec::Figure1 {
        g1_size: 3,
        g2_size: 4,
        g3_len: 3,
        seed: 3,
    }
    .generate()?;
    println!(
        "figure1 composite (n={}, m={}):",
        inst.graph.vertex_count(),
        inst.graph.edge_count()
    );
    print!("{}", inst.report.to_text());
    Ok(())
}
