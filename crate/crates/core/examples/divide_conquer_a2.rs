//! Divide-and-conquer path finding: per segment, sample flow-state
//! edges, keep the one whose removal hurts the resistance most, and
//! split at one of its endpoints.
//!
//! Run with `cargo run --example divide_conquer_a2`.

use flowpath::harness::{run_trials_on, Algorithm, Mode, TrialSettings};
use flowpath::{algorithm_a2, dijkstra, A2Params, EmulationConfig, InstanceSpec};

fn main() -> flowpath::Result<()> {
    let inst = InstanceSpec::Figure1 {
        g1_size: 3,
        g2_size: 4,
        g3_len: 3,
        seed: 3,
    }
    .generate()?;
    let g = &inst.graph;
    let reference = dijkstra(g, inst.s, inst.t)?;
    println!(
        "instance: backbone composite (n={}, m={}), classical path {:?}",
        g.vertex_count(),
        g.edge_count(),
        reference.vertices
    );

    let alpha = inst.report.max_alpha.min(0.5);
    let params = A2Params::new(reference.resistance_length, alpha)?;
    let run = algorithm_a2(g, inst.s, inst.t, &params, &EmulationConfig::exact(5))?;
    println!("\nexact emulation:");
    println!("  success: {}", run.success);
    println!("  path: {:?}", run.path.as_ref().map(|p| &p.vertices));
    println!("  rounds:");
    for r in &run.round_log {
        let (u, v) = g.endpoints(r.chosen.unwrap());
        println!(
            "    segment ({}, {}): winner {}-{}{}",
            r.x,
            r.y,
            u,
            v,
            if r.resolved { " -> resolved" } else { "" }
        );
    }
    println!(
        "  charged {} steps ({} parallel depth)",
        run.ledger.total_steps(),
        run.ledger.parallel_depth()
    );

    let settings = TrialSettings {
        mode: Mode::Noisy,
        ..TrialSettings::default()
    };
    let (_, summary) = run_trials_on(&inst, Algorithm::A2, &settings, 300, 0)?;
    println!(
        "\nnoisy Monte-Carlo: {}/{} runs returned the classical path; \
         winner on the path in {:.1}% of rounds",
        summary.successes,
        summary.trials,
        100.0 * summary.on_path_rate()
    );
    Ok(())
}
