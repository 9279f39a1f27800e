//! Write a labeled instance corpus to disk and replay the inequality
//! suite over it, the same flow the `gen` and `verify-lemmas`
//! subcommands expose.
//!
//! Run with `cargo run --example generate_corpus -- [directory]`.

use flowpath::harness::{verify_suite, write_corpus};
use flowpath::InstanceSpec;

fn main() -> flowpath::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "corpus-demo".to_string());
    let dir = std::path::PathBuf::from(dir);

    let specs = vec![
        InstanceSpec::Path { l: 3 },
        InstanceSpec::ParallelDetour {
            l: 2,
            detour_len: 8,
            copies: 1,
            seed: 0,
        },
        InstanceSpec::ParallelDetour {
            l: 4,
            detour_len: 16,
            copies: 3,
            seed: 0,
        },
        // Tie control: labeled as failing, skipped by the verifier.
        InstanceSpec::ParallelDetour {
            l: 2,
            detour_len: 2,
            copies: 1,
            seed: 0,
        },
        InstanceSpec::Figure1 {
            g1_size: 3,
            g2_size: 4,
            g3_len: 3,
            seed: 3,
        },
        InstanceSpec::CactusOdd { n: 15, seed: 5 },
    ];
    let instances: Vec<_> = specs
        .into_iter()
        .map(|s| s.generate())
        .collect::<flowpath::Result<_>>()?;
    let written = write_corpus(&dir, &instances)?;
    println!("wrote {} instances under {}", written.len(), dir.display());

    let report = verify_suite(&dir)?;
    print!("{}", report.to_text());
    Ok(())
}
