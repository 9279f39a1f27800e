//! Ledger scaling over detour-instance grids: fit the growth of the
//! emulated step counts against path length and edge count.
//!
//! Run with `cargo run --example scaling_sweep` (release profile
//! recommended for the larger grids).

use flowpath::harness::{scaling_sweep, Algorithm, Mode, TrialSettings};

fn main() -> flowpath::Result<()> {
    let settings = TrialSettings {
        mode: Mode::Noisy,
        parallel: true,
        ..TrialSettings::default()
    };

    println!("divide-and-conquer, path length sweep at ~640 edges:");
    let sweep = scaling_sweep(Algorithm::A2, &[4, 8, 16, 32], &[640], &settings, 3, 40)?;
    print!("{}", sweep.to_csv());

    println!("\ndivide-and-conquer, edge count sweep at path length 8:");
    let sweep = scaling_sweep(Algorithm::A2, &[8], &[64, 256, 1024], &settings, 3, 40)?;
    print!("{}", sweep.to_csv());

    println!("\nsparsifier, path length sweep at ~640 edges:");
    let sweep = scaling_sweep(Algorithm::A1, &[4, 8, 16, 32], &[640], &settings, 2, 40)?;
    print!("{}", sweep.to_csv());
    Ok(())
}
