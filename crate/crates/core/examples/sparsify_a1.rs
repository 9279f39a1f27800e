//! Sample-and-sparsify path finding: draw flow-state samples until the
//! whole shortest path has been seen, then solve classically on the
//! sampled subgraph.
//!
//! Run with `cargo run --example sparsify_a1`.

use flowpath::harness::{run_trials_on, Algorithm, Mode, TrialSettings};
use flowpath::{algorithm_a1, A1Params, EmulationConfig, InstanceSpec};

fn main() -> flowpath::Result<()> {
    let inst = InstanceSpec::ParallelDetour {
        l: 4,
        detour_len: 16,
        copies: 3,
        seed: 0,
    }
    .generate()?;
    println!(
        "instance: 4-edge path plus three 16-edge detours (n={}, m={})",
        inst.graph.vertex_count(),
        inst.graph.edge_count()
    );

    let params = A1Params::new(4.0)?;
    println!(
        "drawing {} samples at accuracy {:.3}",
        params.sample_count(),
        params.epsilon
    );
    let run = algorithm_a1(
        &inst.graph,
        inst.s,
        inst.t,
        &params,
        &EmulationConfig::noisy(1),
    )?;
    println!("success: {}", run.success);
    if let Some(p) = &run.path {
        println!("path: {:?} (length {})", p.vertices, p.resistance_length);
    }
    println!(
        "charged {} steps ({} parallel depth)",
        run.ledger.total_steps(),
        run.ledger.parallel_depth()
    );

    // Success rate over seeded noisy trials.
    let settings = TrialSettings {
        mode: Mode::Noisy,
        ..TrialSettings::default()
    };
    let (_, summary) = run_trials_on(&inst, Algorithm::A1, &settings, 200, 0)?;
    println!(
        "\nnoisy Monte-Carlo: {}/{} runs recovered the shortest path",
        summary.successes, summary.trials
    );

    // Parallel accounting: all preparations in one group.
    let mut par = A1Params::new(4.0)?;
    par.parallel = true;
    let run = algorithm_a1(
        &inst.graph,
        inst.s,
        inst.t,
        &par,
        &EmulationConfig::noisy(1),
    )?;
    println!(
        "parallel mode: total {} steps, depth {} (one preparation)",
        run.ledger.total_steps(),
        run.ledger.parallel_depth()
    );
    Ok(())
}
