//! Structural inequality checks over a freshly generated corpus.
//!
//! Run with `cargo run --example lemma_suite`.

use flowpath::harness::{run_instance_checks, SuiteReport};
use flowpath::InstanceSpec;

fn main() -> flowpath::Result<()> {
    let mut report = SuiteReport::empty();
    let mut generated = 0;
    for seed in 0..30u64 {
        let spec = InstanceSpec::RandomCondition1 {
            n: 12 + (seed % 4) as usize,
            m: 14 + (seed % 3) as usize,
            l: 3,
            seed,
            max_attempts: 400,
        };
        let inst = spec.generate()?;
        report.instances += 1;
        generated += 1;
        run_instance_checks(&mut report, &inst.graph, inst.s, inst.t, seed)?;
    }
    println!("checked {generated} condition-verified random instances\n");
    print!("{}", report.to_text());
    Ok(())
}
