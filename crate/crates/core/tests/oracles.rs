//! Oracle-backed checks of the solvers: independent resistance routes,
//! exhaustive shortest-path enumeration, and structural property tests.

mod common;

use flowpath::algorithms::dijkstra;
use flowpath::electric::{
    effective_resistance, effective_resistance_with, escape_time_bound, solve_flow, SolverConfig,
};
use flowpath::Graph;
use proptest::prelude::*;
use rand::Rng;

/// The specific random instance exercised throughout: n = 30, m = 80,
/// seed 7. Conservation holds to 1e-9 and the resistance matches the
/// spectral pseudo-inverse to 1e-9 relative.
#[test]
fn random_instance_n30_m80_seed7() {
    let mut rng = common::seeded_rng(7);
    let g = common::random_graph(30, 80, false, &mut rng);
    let (s, t) = (0, 29);
    let flow = solve_flow(&g, s, t).unwrap();
    assert!(flow.conservation_residual(&g) < 1e-9);
    let oracle = common::pinv_resistance(&g, s, t);
    let rel = (flow.resistance - oracle).abs() / oracle;
    assert!(rel < 1e-9, "rel err {rel}");

    let et = escape_time_bound(&g, s, t).unwrap();
    let r = effective_resistance(&g, s, t).unwrap();
    assert!((et - r * g.edge_count() as f64).abs() < 1e-9 * et);
}

#[test]
fn dijkstra_matches_exhaustive_enumeration() {
    let mut rng = common::seeded_rng(12);
    for trial in 0..30 {
        let n = rng.gen_range(4..=10);
        let max_m = n * (n - 1) / 2;
        let m = rng.gen_range(n - 1..=max_m.min(2 * n));
        let g = common::random_graph(n, m, trial % 2 == 0, &mut rng);
        let s = rng.gen_range(0..n);
        let mut t = rng.gen_range(0..n);
        while t == s {
            t = rng.gen_range(0..n);
        }
        let found = dijkstra(&g, s, t).unwrap();
        let brute = common::brute_force_shortest_length(&g, s, t).unwrap();
        assert!(
            (found.resistance_length - brute).abs() <= 1e-9 * brute.max(1.0),
            "trial {trial}: {} vs {brute}",
            found.resistance_length
        );
    }
}

#[test]
fn conjugate_gradient_handles_larger_instances() {
    // Force the iterative path on a graph the dense cutoff would take.
    let mut rng = common::seeded_rng(31);
    let g = common::random_graph(400, 900, true, &mut rng);
    let cg = SolverConfig {
        dense_cutoff: 0,
        ..SolverConfig::default()
    };
    let dense = effective_resistance(&g, 3, 397).unwrap();
    let iter = effective_resistance_with(&g, 3, 397, &cg).unwrap();
    assert!((dense - iter).abs() / dense < 1e-9);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// Serialization round-trips: identical fingerprint and resistances.
    #[test]
    fn edge_list_round_trip(seed in 0u64..5000, n in 3usize..12, extra in 0usize..8) {
        let mut rng = common::seeded_rng(seed);
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        let g = common::random_graph(n, m, seed % 2 == 0, &mut rng);
        let h = Graph::from_edge_list(&g.to_edge_list()).unwrap();
        prop_assert_eq!(g.vertex_count(), h.vertex_count());
        prop_assert_eq!(g.edge_count(), h.edge_count());
        let rg = effective_resistance(&g, 0, n - 1).unwrap();
        let rh = effective_resistance(&h, 0, n - 1).unwrap();
        prop_assert!((rg - rh).abs() <= 1e-10 * rg.max(1.0));
    }

    /// Handshake identity on generated graphs.
    #[test]
    fn degree_sum_is_twice_edges(seed in 0u64..5000, n in 2usize..15, extra in 0usize..10) {
        let mut rng = common::seeded_rng(seed);
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        let g = common::random_graph(n, m, false, &mut rng);
        let total: usize = (0..n).map(|v| g.degree(v).unwrap()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
    }

    /// Removing any edge never lowers the effective resistance, and the
    /// resistance never exceeds the shortest-path length.
    #[test]
    fn rayleigh_and_path_bound(seed in 0u64..5000, n in 4usize..10, extra in 1usize..6) {
        let mut rng = common::seeded_rng(seed);
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        let g = common::random_graph(n, m, seed % 2 == 1, &mut rng);
        let r = effective_resistance(&g, 0, n - 1).unwrap();
        let path = dijkstra(&g, 0, n - 1).unwrap();
        prop_assert!(r <= path.resistance_length + 1e-10);
        for e in g.edge_ids() {
            let removed = effective_resistance(&g.remove_edge(e).unwrap(), 0, n - 1).unwrap();
            prop_assert!(removed >= r - 1e-10);
        }
    }
}
