//! Electric-flow shortest paths on resistor networks.
//!
//! A weighted undirected graph is read as an electric network (edge
//! resistance `1/w`). The crate computes exact unit electric flows,
//! effective resistances and flow-state measurement distributions, checks
//! the structural condition under which the shortest path dominates every
//! alternative route in resistance distance, and runs two path-finding
//! algorithms on top of emulated walk primitives (flow-state sampling and
//! resistance estimation) whose invocations charge step counts to a
//! ledger with both sequential and parallel-depth accounting.
//!
//! Start with the runnable examples (`cargo run --example <name>`):
//!
//! - `effective_resistance`: flows, potentials, resistance oracles
//! - `flow_state_sampling`:  emulated sampling and the cost ledger
//! - `condition_check`:      the path condition and its brute-force twin
//! - `lemma_suite`:          inequality checks over a generated corpus
//! - `sparsify_a1`:          sample-and-sparsify path finding
//! - `divide_conquer_a2`:    divide-and-conquer path finding
//! - `scaling_sweep`:        ledger scaling fits over instance grids
//! - `generate_corpus`:      corpus files for the batch verifier
//!
//! The `flowpath` binary exposes the same functionality as subcommands
//! (`gen`, `check`, `flow`, `shortest`, `a1`, `a2`, `bench`,
//! `verify-lemmas`).

pub mod algorithms;
pub mod cli;
pub mod conditions;
pub mod electric;
pub mod emul;
pub mod error;
pub mod generators;
pub mod graph;
pub mod harness;

pub use algorithms::{
    algorithm_a1, algorithm_a2, coupon_collector_bound, dijkstra, validate_path, A1Params,
    A2Params, RunResult,
};
pub use conditions::{check_condition_bruteforce, check_condition_edges, ConditionReport};
pub use electric::{
    effective_resistance, energy, escape_time_bound, flow_state_distribution, solve_flow,
    FlowSolution, FlowStateDistribution, SolverConfig,
};
pub use emul::{
    CorruptionMode, CostLedger, EmulationConfig, Emulator, PerturbationMode, ResistanceEstimate,
};
pub use error::{Error, Result};
pub use generators::{Instance, InstanceSpec};
pub use graph::{EdgeId, Graph, OrientedEdge, PathWitness};
