//! Emulated flow-state sampling: measurement distribution, perturbation
//! modes, and the step ledger.
//!
//! Run with `cargo run --example flow_state_sampling`.

use flowpath::emul::{CostLedger, EmulationConfig, Emulator};
use flowpath::{flow_state_distribution, Graph};

fn main() -> flowpath::Result<()> {
    let g = Graph::from_edge_list("0 2 1\n0 1 1\n1 2 1")?;
    let dist = flow_state_distribution(&g, 0, 2)?;
    println!("exact measurement distribution:");
    for e in g.edge_ids() {
        let (u, v) = g.endpoints(e);
        println!("  p({u}-{v}) = {:.4}", dist.prob(e));
    }

    for config in [
        EmulationConfig::exact(11),
        EmulationConfig::noisy(11),
        EmulationConfig::adversarial(11),
    ] {
        let mode = config.perturbation_mode;
        let mut emul = Emulator::new(config)?;
        let mut ledger = CostLedger::new();
        let mut counts = vec![0usize; g.edge_capacity()];
        let draws = 20_000;
        for _ in 0..draws {
            let grp = ledger.begin_parallel_group();
            let e = emul.sample_flow_edge(&g, 0, 2, 0.2, &mut ledger, grp)?;
            counts[e.index()] += 1;
        }
        println!("\n{mode:?} sampling at accuracy 0.2 ({draws} draws):");
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            println!(
                "  freq({u}-{v}) = {:.4}",
                counts[e.index()] as f64 / draws as f64
            );
        }
        println!("  charged steps: {}", ledger.total_steps());
    }

    // One resistance estimate, with its ledger entry spelling out the
    // repetition amplification.
    let mut emul = Emulator::new(EmulationConfig::noisy(7))?;
    let mut ledger = CostLedger::new();
    let grp = ledger.begin_parallel_group();
    let est = emul.estimate_resistance(&g, 0, 2, 0.1, 0.01, &mut ledger, grp)?;
    println!(
        "\nresistance estimate at (eps=0.1, delta=0.01): {:.4}",
        est.value
    );
    print!("{}", ledger.report());
    Ok(())
}
