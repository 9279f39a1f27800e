//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line (`cargo test --test acceptance -- --nocapture` to see them all).

mod common;

use flowpath::algorithms::coupon_collector_bound;
use flowpath::conditions::{check_condition_bruteforce, check_condition_edges};
use flowpath::electric::effective_resistance;
use flowpath::harness::{
    default_corpus, records_to_csv, run_instance_checks, run_trials_on, scaling_sweep,
    strip_wall_time, Algorithm, Mode, SuiteReport, TrialSettings,
};
use rand::Rng;
use statrs::distribution::{Binomial, DiscreteCDF};

fn report(criterion: &str, pass: bool, detail: &str) {
    println!(
        "ACCEPTANCE {criterion}: {} | {detail}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "{criterion}: {detail}");
}

/// Criterion 1: the resistance oracle agrees with a dense spectral
/// pseudo-inverse on random graphs and with series-parallel reduction on
/// composable networks, to 1e-9 relative.
#[test]
fn criterion_1_oracle_correctness() {
    let mut rng = common::seeded_rng(101);
    let mut worst_rel: f64 = 0.0;
    for i in 0..100 {
        let n = rng.gen_range(5..=50);
        let extra = rng.gen_range(0..=n);
        let m = (n - 1 + extra).min(n * (n - 1) / 2);
        let g = common::random_graph(n, m, i % 2 == 0, &mut rng);
        let s = rng.gen_range(0..n);
        let mut t = rng.gen_range(0..n);
        while t == s {
            t = rng.gen_range(0..n);
        }
        let ours = effective_resistance(&g, s, t).unwrap();
        let oracle = common::pinv_resistance(&g, s, t);
        worst_rel = worst_rel.max((ours - oracle).abs() / oracle.max(1e-12));
    }
    let pass_random = worst_rel <= 1e-9;

    let mut worst_sp: f64 = 0.0;
    for i in 0..50 {
        let mut rng = common::seeded_rng(7000 + i);
        let net = common::SpNet::random(&mut rng, 4);
        let (g, s, t) = net.materialize();
        let ours = effective_resistance(&g, s, t).unwrap();
        let analytic = net.resistance();
        worst_sp = worst_sp.max((ours - analytic).abs() / analytic.max(1e-12));
    }
    let pass_sp = worst_sp <= 1e-9;

    report(
        "criterion 1 (oracle correctness)",
        pass_random && pass_sp,
        &format!("worst rel err: pseudo-inverse {worst_rel:.2e}, series-parallel {worst_sp:.2e}"),
    );
}

/// Criterion 2: the edge-removal checker agrees with the exhaustive
/// subgraph checker on every small connected graph and on 200 random
/// graphs with at most 12 edges.
#[test]
fn criterion_2_checker_equivalence() {
    let mut graphs_checked = 0usize;
    let mut pairs_checked = 0usize;
    let mut disagreements = 0usize;

    for g in common::exhaustive_connected_graphs(5, 8) {
        graphs_checked += 1;
        for s in 0..g.vertex_count() {
            for t in s + 1..g.vertex_count() {
                pairs_checked += 1;
                let by_edges = check_condition_edges(&g, s, t).unwrap().holds_condition1;
                let by_bruteforce = check_condition_bruteforce(&g, s, t).unwrap();
                if by_edges != by_bruteforce {
                    disagreements += 1;
                }
            }
        }
    }

    let mut rng = common::seeded_rng(202);
    for i in 0..200 {
        let n = rng.gen_range(5..=7);
        let max_m = (n * (n - 1) / 2).min(12);
        let m = rng.gen_range(n - 1..=max_m);
        let g = common::random_graph(n, m, i % 2 == 1, &mut rng);
        let s = rng.gen_range(0..n);
        let mut t = rng.gen_range(0..n);
        while t == s {
            t = rng.gen_range(0..n);
        }
        graphs_checked += 1;
        pairs_checked += 1;
        let by_edges = check_condition_edges(&g, s, t).unwrap().holds_condition1;
        let by_bruteforce = check_condition_bruteforce(&g, s, t).unwrap();
        if by_edges != by_bruteforce {
            disagreements += 1;
        }
    }

    report(
        "criterion 2 (checker equivalence)",
        disagreements == 0,
        &format!("{graphs_checked} graphs, {pairs_checked} pairs, {disagreements} disagreements"),
    );
}

/// Criterion 3: every structural inequality holds with slack >= -1e-9 on
/// all 200 random condition-verified instances.
#[test]
fn criterion_3_inequality_suite() {
    let suite = common::condition1_suite();
    let mut sr = SuiteReport::empty();
    for (i, inst) in suite.iter().enumerate() {
        sr.instances += 1;
        run_instance_checks(&mut sr, &inst.graph, inst.s, inst.t, i as u64).unwrap();
    }
    let detail: Vec<String> = sr
        .checks
        .iter()
        .map(|c| {
            format!(
                "{}: {} fail, worst {:.2e}",
                c.name, c.failures, c.worst_slack
            )
        })
        .collect();
    report(
        "criterion 3 (inequality suite, 200 instances)",
        sr.all_passed(),
        &detail.join("; "),
    );
}

/// Criterion 4: the sparsifier succeeds at rate >= 0.9 on every corpus
/// instance over 1000 noisy trials, by a one-sided binomial test at 99%
/// confidence.
#[test]
fn criterion_4_a1_success_rate() {
    let settings = TrialSettings {
        mode: Mode::Noisy,
        ..TrialSettings::default()
    };
    let mut lines = Vec::new();
    let mut pass = true;
    for spec in default_corpus() {
        let inst = spec.generate().unwrap();
        let (_, summary) = run_trials_on(&inst, Algorithm::A1, &settings, 1000, 41_000).unwrap();
        // Reject H0 (rate >= 0.9) only when P(X <= k | p = 0.9) < 0.01.
        let binom = Binomial::new(0.9, 1000).unwrap();
        let p_value = binom.cdf(summary.successes as u64);
        let ok = p_value >= 0.01;
        pass &= ok;
        lines.push(format!(
            "{}: {}/1000 (p={:.3})",
            flowpath::harness::instance_label(&spec),
            summary.successes,
            p_value
        ));
    }
    report("criterion 4 (a1 success rate)", pass, &lines.join("; "));
}

/// Criterion 5: under exact emulation the divide-and-conquer output is
/// identical to the classical reference on every instance and seed.
#[test]
fn criterion_5_a2_exactness() {
    let mut mismatches = 0usize;
    let mut runs = 0usize;
    for spec in default_corpus() {
        let inst = spec.generate().unwrap();
        let (records, summary) =
            run_trials_on(&inst, Algorithm::A2, &TrialSettings::exact(), 50, 55_000).unwrap();
        runs += records.len();
        mismatches += records.len() - summary.successes;
    }
    report(
        "criterion 5 (a2 exactness)",
        mismatches == 0,
        &format!("{runs} runs, {mismatches} mismatches"),
    );
}

/// Criterion 6: noisy divide-and-conquer succeeds on at least 2/3 of 500
/// trials per instance, and the winning edge lies on the reference path
/// in at least a `1 - 5/l` fraction of rounds.
#[test]
fn criterion_6_a2_noisy_success() {
    let settings = TrialSettings {
        mode: Mode::Noisy,
        ..TrialSettings::default()
    };
    let mut pass = true;
    let mut lines = Vec::new();
    for spec in default_corpus() {
        let inst = spec.generate().unwrap();
        let l = inst.report.shortest_path.resistance_length;
        let (_, summary) = run_trials_on(&inst, Algorithm::A2, &settings, 500, 66_000).unwrap();
        let rate = summary.success_rate();
        let on_path = summary.on_path_rate();
        let bound = 1.0 - 5.0 / l;
        let ok = rate >= 2.0 / 3.0 && on_path >= bound;
        pass &= ok;
        lines.push(format!(
            "{}: success {:.3}, e* on path {:.3} (>= {:.3})",
            flowpath::harness::instance_label(&spec),
            rate,
            on_path,
            bound.max(0.0)
        ));
    }
    report("criterion 6 (a2 noisy success)", pass, &lines.join("; "));
}

/// Criterion 7: ledger scaling exponents. Divide-and-conquer total steps
/// scale linearly in path length at fixed size and as sqrt(m) at fixed
/// length; its parallel depth scales as sqrt(l); the sparsifier total is
/// quadratic in path length.
#[test]
fn criterion_7_scaling_laws() {
    let noisy_par = TrialSettings {
        mode: Mode::Noisy,
        parallel: true,
        ..TrialSettings::default()
    };
    let a2_l = scaling_sweep(
        Algorithm::A2,
        &[4, 8, 16, 32, 64],
        &[640],
        &noisy_par,
        5,
        40,
    )
    .unwrap();
    let slope_l = a2_l.slope_l_total.unwrap();
    let slope_depth = a2_l.slope_l_depth.unwrap();

    let a2_m = scaling_sweep(Algorithm::A2, &[8], &[64, 256, 1024], &noisy_par, 5, 40).unwrap();
    let slope_m = a2_m.slope_m_total.unwrap();

    let noisy_seq = TrialSettings {
        mode: Mode::Noisy,
        ..TrialSettings::default()
    };
    let a1_l = scaling_sweep(
        Algorithm::A1,
        &[4, 8, 16, 32, 64],
        &[640],
        &noisy_seq,
        2,
        40,
    )
    .unwrap();
    let slope_a1 = a1_l.slope_l_total.unwrap();

    let pass = (slope_l - 1.0).abs() <= 0.25
        && (slope_m - 0.5).abs() <= 0.1
        && (slope_depth - 0.5).abs() <= 0.15
        && (slope_a1 - 2.0).abs() <= 0.3;
    report(
        "criterion 7 (ledger scaling)",
        pass,
        &format!(
            "a2: steps~l^{slope_l:.3} (want 1±0.25), steps~m^{slope_m:.3} (want 0.5±0.1), \
             depth~l^{slope_depth:.3} (want 0.5±0.15); a1: steps~l^{slope_a1:.3} (want 2±0.3)"
        ),
    );
}

/// Criterion 8: the empirical coupon-collection mean stays below the
/// `(1/p) H_|Y|` bound when coupons are drawn uniformly and the bound is
/// evaluated at the guaranteed per-coupon floor `p = 1/(4|Y|)`.
#[test]
fn criterion_8_coupon_collector() {
    let mut pass = true;
    let mut lines = Vec::new();
    for &(y, p) in &[(4usize, 1.0 / 16.0), (8, 1.0 / 32.0), (16, 1.0 / 64.0)] {
        let bound = coupon_collector_bound(y, p).unwrap();
        let mut rng = common::seeded_rng(800 + y as u64);
        let sims = 100_000;
        let mut total_draws = 0u64;
        for _ in 0..sims {
            let mut seen = vec![false; y];
            let mut remaining = y;
            while remaining > 0 {
                total_draws += 1;
                let c = rng.gen_range(0..y);
                if !seen[c] {
                    seen[c] = true;
                    remaining -= 1;
                }
            }
        }
        let mean = total_draws as f64 / sims as f64;
        pass &= mean <= bound;
        lines.push(format!("|Y|={y}: mean {mean:.2} <= bound {bound:.2}"));
    }
    report("criterion 8 (coupon collector)", pass, &lines.join("; "));
}

/// Criterion 9: identical seeds reproduce byte-identical CSV outputs,
/// wall time excluded.
#[test]
fn criterion_9_reproducibility() {
    let settings = TrialSettings {
        mode: Mode::Noisy,
        parallel: true,
        ..TrialSettings::default()
    };
    let sweep = |_: ()| {
        scaling_sweep(Algorithm::A2, &[4, 8], &[64], &settings, 2, 90_001)
            .unwrap()
            .to_csv()
    };
    let sweeps_equal = sweep(()) == sweep(());

    let spec = flowpath::InstanceSpec::ParallelDetour {
        l: 4,
        detour_len: 16,
        copies: 2,
        seed: 1,
    };
    let trial_csv = |_: ()| {
        let (records, _) =
            flowpath::harness::run_trials(&spec, Algorithm::A2, &settings, 25, 90_001).unwrap();
        strip_wall_time(&records_to_csv(&records))
    };
    let trials_equal = trial_csv(()) == trial_csv(());

    report(
        "criterion 9 (reproducibility)",
        sweeps_equal && trials_equal,
        &format!("sweep csv identical: {sweeps_equal}; trial csv identical (wall time stripped): {trials_equal}"),
    );
}
