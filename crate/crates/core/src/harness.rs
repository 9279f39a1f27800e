//! Experiment orchestration: seeded Monte-Carlo trial runs, scaling
//! sweeps over instance grids with log-log slope fits on the step ledger,
//! corpus files on disk, and a batch verifier that replays the inequality
//! checks over a corpus directory.

use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithms::{
    algorithm_a1_with, algorithm_a2_with, dijkstra, A1Params, A2Params, RunResult,
};
use crate::conditions;
use crate::emul::{EmulationConfig, Emulator};
use crate::error::{Error, Result};
use crate::generators::{Instance, InstanceSpec};
use crate::graph::{parse_edge_list, EdgeId, PathWitness};

/// Environment variable naming the default corpus directory.
pub const CORPUS_ENV: &str = "FLOWPATH_CORPUS_DIR";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Dijkstra,
    A1,
    A2,
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Algorithm::Dijkstra => "dijkstra",
            Algorithm::A1 => "a1",
            Algorithm::A2 => "a2",
        };
        f.write_str(s)
    }
}

/// Noise profile for a run: which perturbation the sampler applies and
/// which corruption the estimator applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Noisy,
    Adversarial,
}

impl Mode {
    pub fn emulation_config(self, seed: u64) -> EmulationConfig {
        match self {
            Mode::Exact => EmulationConfig::exact(seed),
            Mode::Noisy => EmulationConfig::noisy(seed),
            Mode::Adversarial => EmulationConfig::adversarial(seed),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Mode::Exact => "exact",
            Mode::Noisy => "noisy",
            Mode::Adversarial => "adversarial",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(Mode::Exact),
            "noisy" => Ok(Mode::Noisy),
            "adversarial" => Ok(Mode::Adversarial),
            other => Err(Error::invalid_parameter(
                "mode",
                format!("unknown mode `{other}`"),
            )),
        }
    }
}

/// Run-time knobs shared by the trial runner and the sweeps.
#[derive(Debug, Clone)]
pub struct TrialSettings {
    pub mode: Mode,
    pub parallel: bool,
    pub cost_constant_prep: f64,
    pub cost_constant_est: f64,
    /// Path-length bound handed to the algorithms; defaults to the exact
    /// classical length of the instance.
    pub l_hat: Option<f64>,
    /// Condition margin handed to the divide-and-conquer algorithm;
    /// defaults to the checker's measured margin.
    pub alpha: Option<f64>,
}

impl Default for TrialSettings {
    fn default() -> Self {
        TrialSettings {
            mode: Mode::Noisy,
            parallel: false,
            cost_constant_prep: 1.0,
            cost_constant_est: 1.0,
            l_hat: None,
            alpha: None,
        }
    }
}

impl TrialSettings {
    pub fn exact() -> Self {
        TrialSettings {
            mode: Mode::Exact,
            ..TrialSettings::default()
        }
    }

    fn config(&self, seed: u64) -> EmulationConfig {
        let mut config = self.mode.emulation_config(seed);
        config.cost_constant_prep = self.cost_constant_prep;
        config.cost_constant_est = self.cost_constant_est;
        config
    }
}

/// One trial outcome. `success` means the run reported success and its
/// output path equals the classical reference. Wall time is informative
/// only and never part of reproducibility comparisons.
#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub instance: String,
    pub algorithm: Algorithm,
    pub mode: Mode,
    pub seed: u64,
    pub success: bool,
    pub total_steps: u64,
    pub parallel_depth: u64,
    pub wall_time: f64,
}

/// Aggregate over one trial batch.
#[derive(Debug, Clone)]
pub struct TrialSummary {
    pub trials: usize,
    pub successes: usize,
    pub mean_total_steps: f64,
    pub mean_parallel_depth: f64,
    /// Divide-and-conquer rounds observed, and how many picked an edge of
    /// the reference shortest path.
    pub rounds_total: usize,
    pub rounds_on_path: usize,
}

impl TrialSummary {
    pub fn success_rate(&self) -> f64 {
        self.successes as f64 / self.trials.max(1) as f64
    }

    pub fn on_path_rate(&self) -> f64 {
        if self.rounds_total == 0 {
            1.0
        } else {
            self.rounds_on_path as f64 / self.rounds_total as f64
        }
    }
}

/// Compact instance label used in CSV rows.
pub fn instance_label(spec: &InstanceSpec) -> String {
    match *spec {
        InstanceSpec::Path { l } => format!("path(l={l})"),
        InstanceSpec::ParallelDetour {
            l,
            detour_len,
            copies,
            seed,
        } => format!("parallel-detour(l={l},L={detour_len},c={copies},s={seed})"),
        InstanceSpec::CactusOdd { n, seed } => format!("cactus-odd(n={n},s={seed})"),
        InstanceSpec::Figure1 {
            g1_size,
            g2_size,
            g3_len,
            seed,
        } => format!("figure1(g1={g1_size},g2={g2_size},g3={g3_len},s={seed})"),
        InstanceSpec::RandomCondition1 { n, m, l, seed, .. } => {
            format!("random-condition1(n={n},m={m},l={l},s={seed})")
        }
        InstanceSpec::ErdosControl { n, m, seed } => {
            format!("erdos-control(n={n},m={m},s={seed})")
        }
    }
}

/// Default instance corpus for algorithm benchmarks: paths, detour
/// composites, backbone-with-gadget graphs and odd cacti, with classical
/// path lengths between 2 and 16.
pub fn default_corpus() -> Vec<InstanceSpec> {
    vec![
        InstanceSpec::Path { l: 2 },
        InstanceSpec::Path { l: 5 },
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
        InstanceSpec::ParallelDetour {
            l: 8,
            detour_len: 32,
            copies: 2,
            seed: 0,
        },
        InstanceSpec::ParallelDetour {
            l: 16,
            detour_len: 64,
            copies: 3,
            seed: 0,
        },
        InstanceSpec::Figure1 {
            g1_size: 3,
            g2_size: 4,
            g3_len: 3,
            seed: 3,
        },
        InstanceSpec::Figure1 {
            g1_size: 5,
            g2_size: 6,
            g3_len: 4,
            seed: 9,
        },
        InstanceSpec::CactusOdd { n: 15, seed: 5 },
        InstanceSpec::CactusOdd { n: 24, seed: 8 },
    ]
}

/// Run `trials` seeded trials of one algorithm on one instance. Seeds are
/// `base_seed .. base_seed + trials`; records come back in seed order.
pub fn run_trials(
    spec: &InstanceSpec,
    algorithm: Algorithm,
    settings: &TrialSettings,
    trials: usize,
    base_seed: u64,
) -> Result<(Vec<BenchRecord>, TrialSummary)> {
    if trials == 0 {
        return Err(Error::invalid_parameter(
            "trials",
            "need at least one trial",
        ));
    }
    let instance = spec.generate()?;
    run_trials_on(&instance, algorithm, settings, trials, base_seed)
}

/// As [`run_trials`], on an already generated instance.
pub fn run_trials_on(
    instance: &Instance,
    algorithm: Algorithm,
    settings: &TrialSettings,
    trials: usize,
    base_seed: u64,
) -> Result<(Vec<BenchRecord>, TrialSummary)> {
    if trials == 0 {
        return Err(Error::invalid_parameter(
            "trials",
            "need at least one trial",
        ));
    }
    let g = &instance.graph;
    let (s, t) = (instance.s, instance.t);
    let reference = dijkstra(g, s, t)?;
    let l_hat = settings
        .l_hat
        .unwrap_or(reference.resistance_length.max(1.0));
    // Any margin below the measured one is still a valid margin; capping
    // keeps the removal-estimate accuracy alpha/2 meaningful instead of
    // railing against the estimator's epsilon clamp on high-margin
    // instances.
    let alpha = settings.alpha.unwrap_or(instance.report.max_alpha.min(0.5));

    let label = instance_label(&instance.spec);
    let mut emul = Emulator::new(settings.config(base_seed))?;
    let mut records = Vec::with_capacity(trials);
    let mut summary = TrialSummary {
        trials,
        successes: 0,
        mean_total_steps: 0.0,
        mean_parallel_depth: 0.0,
        rounds_total: 0,
        rounds_on_path: 0,
    };

    for i in 0..trials {
        let seed = base_seed + i as u64;
        emul.reseed(seed);
        let start = Instant::now();
        let (run, success) = match algorithm {
            Algorithm::Dijkstra => {
                let path = dijkstra(g, s, t)?;
                let success = path.vertices == reference.vertices;
                (
                    RunResult {
                        path: Some(path),
                        ledger: Default::default(),
                        success,
                        rounds: 0,
                        round_log: Vec::new(),
                    },
                    success,
                )
            }
            Algorithm::A1 => {
                let mut params = A1Params::new(l_hat)?;
                params.parallel = settings.parallel;
                let run = algorithm_a1_with(&mut emul, g, s, t, &params)?;
                let success = run.success && matches_reference(&run, &reference);
                (run, success)
            }
            Algorithm::A2 => {
                let mut params = A2Params::new(l_hat, alpha)?;
                params.parallel = settings.parallel;
                let run = algorithm_a2_with(&mut emul, g, s, t, &params)?;
                let success = run.success && matches_reference(&run, &reference);
                (run, success)
            }
        };
        let wall_time = start.elapsed().as_secs_f64();
        summary.successes += success as usize;
        summary.mean_total_steps += run.ledger.total_steps() as f64 / trials as f64;
        summary.mean_parallel_depth += run.ledger.parallel_depth() as f64 / trials as f64;
        for round in &run.round_log {
            summary.rounds_total += 1;
            if let Some(e) = round.chosen {
                if reference.contains_edge(e) {
                    summary.rounds_on_path += 1;
                }
            }
        }
        records.push(BenchRecord {
            instance: label.clone(),
            algorithm,
            mode: settings.mode,
            seed,
            success,
            total_steps: run.ledger.total_steps(),
            parallel_depth: run.ledger.parallel_depth(),
            wall_time,
        });
    }
    Ok((records, summary))
}

fn matches_reference(run: &RunResult, reference: &PathWitness) -> bool {
    run.path
        .as_ref()
        .map(|p| p.vertices == reference.vertices)
        .unwrap_or(false)
}

/// Per-trial CSV with a stable column order; wall time sits in the last
/// column so comparisons can strip it.
pub fn records_to_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from(
        "instance,algorithm,mode,seed,success,total_steps,parallel_depth,wall_time_s\n",
    );
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{:.6}\n",
            r.instance,
            r.algorithm,
            r.mode,
            r.seed,
            r.success,
            r.total_steps,
            r.parallel_depth,
            r.wall_time
        ));
    }
    out
}

/// Drop the trailing wall-time column from a records CSV. Reproducibility
/// comparisons run on this projection.
pub fn strip_wall_time(csv: &str) -> String {
    csv.lines()
        .map(|line| match line.rfind(',') {
            Some(idx) => &line[..idx],
            None => line,
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

/// Least-squares slope of `ln y` against `ln x`.
pub fn fit_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points
        .iter()
        .filter(|(x, y)| *x > 0.0 && *y > 0.0)
        .map(|(x, y)| (x.ln(), y.ln()))
        .collect();
    let n = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let cov: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.1 - mean_y)).sum();
    let var: f64 = logs.iter().map(|p| (p.0 - mean_x) * (p.0 - mean_x)).sum();
    cov / var
}

/// Known polylog factors of the step formulas, divided out before slope
/// fitting. For the divide-and-conquer algorithm the sequential total
/// carries three logarithmic factors (samples per round, preparation
/// accuracy, repetition amplification) and the parallel depth two; the
/// sparsifier total carries one (its sample count).
fn polylog_correction(algorithm: Algorithm, depth_metric: bool, l: f64) -> f64 {
    let log = (l + 2.0).ln();
    match (algorithm, depth_metric) {
        (Algorithm::A2, false) => log.powi(3),
        (Algorithm::A2, true) => log.powi(2),
        (Algorithm::A1, false) => log,
        (Algorithm::A1, true) => 1.0,
        (Algorithm::Dijkstra, _) => 1.0,
    }
}

/// One aggregated sweep cell.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub l: usize,
    pub m: usize,
    pub mean_total_steps: f64,
    pub mean_parallel_depth: f64,
    pub success_rate: f64,
}

/// Sweep outcome: the CSV document plus the fitted slopes.
#[derive(Debug, Clone)]
pub struct SweepResult {
    pub rows: Vec<SweepRow>,
    pub slope_l_total: Option<f64>,
    pub slope_l_depth: Option<f64>,
    pub slope_m_total: Option<f64>,
}

impl SweepResult {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("l,m,mean_total_steps,mean_parallel_depth,success_rate\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:.3},{:.3},{:.4}\n",
                r.l, r.m, r.mean_total_steps, r.mean_parallel_depth, r.success_rate
            ));
        }
        if let Some(s) = self.slope_l_total {
            out.push_str(&format!("# slope_l_total_steps: {s:.4}\n"));
        }
        if let Some(s) = self.slope_l_depth {
            out.push_str(&format!("# slope_l_parallel_depth: {s:.4}\n"));
        }
        if let Some(s) = self.slope_m_total {
            out.push_str(&format!("# slope_m_total_steps: {s:.4}\n"));
        }
        out
    }
}

/// Run an algorithm over a grid of single-detour instances and fit the
/// ledger scalings: path length is swept at (approximately) fixed edge
/// count by shrinking the detour, edge count is swept at fixed path
/// length by growing it.
pub fn scaling_sweep(
    algorithm: Algorithm,
    l_values: &[usize],
    m_values: &[usize],
    settings: &TrialSettings,
    trials: usize,
    base_seed: u64,
) -> Result<SweepResult> {
    if l_values.is_empty() || m_values.is_empty() {
        return Err(Error::invalid_parameter("grid", "grids must be nonempty"));
    }
    let mut rows = Vec::new();
    for &l in l_values {
        for &m in m_values {
            if m <= 2 * l + 1 {
                return Err(Error::invalid_parameter(
                    "grid",
                    format!("m = {m} leaves no room for a detour longer than l = {l}"),
                ));
            }
            let spec = InstanceSpec::ParallelDetour {
                l,
                detour_len: m - l,
                copies: 1,
                seed: 0,
            };
            let (_, summary) = run_trials(&spec, algorithm, settings, trials, base_seed)?;
            rows.push(SweepRow {
                l,
                m,
                mean_total_steps: summary.mean_total_steps,
                mean_parallel_depth: summary.mean_parallel_depth,
                success_rate: summary.success_rate(),
            });
        }
    }

    let slope_of = |metric: fn(&SweepRow) -> f64, corrected: bool, depth: bool| {
        // Fit along l at the first m, and along m at the first l.
        let (points_l, points_m): (Vec<_>, Vec<_>) = (
            rows.iter()
                .filter(|r| r.m == m_values[0])
                .map(|r| {
                    let correction = if corrected {
                        polylog_correction(algorithm, depth, r.l as f64)
                    } else {
                        1.0
                    };
                    (r.l as f64, metric(r) / correction)
                })
                .collect(),
            rows.iter()
                .filter(|r| r.l == l_values[0])
                .map(|r| (r.m as f64, metric(r)))
                .collect(),
        );
        (points_l, points_m)
    };

    let (total_l, total_m) = slope_of(|r| r.mean_total_steps, true, false);
    let (depth_l, _) = slope_of(|r| r.mean_parallel_depth, true, true);

    Ok(SweepResult {
        slope_l_total: (l_values.len() >= 2).then(|| fit_log_slope(&total_l)),
        slope_l_depth: (l_values.len() >= 2).then(|| fit_log_slope(&depth_l)),
        slope_m_total: (m_values.len() >= 2).then(|| fit_log_slope(&total_m)),
        rows,
    })
}

/// Write instances as `<stem>.edges` + `<stem>.manifest` pairs.
pub fn write_corpus(dir: &Path, instances: &[Instance]) -> Result<Vec<PathBuf>> {
    write_corpus_from(dir, instances, 0)
}

/// As [`write_corpus`], numbering stems from `start_index` so repeated
/// invocations can accumulate into one directory.
pub fn write_corpus_from(
    dir: &Path,
    instances: &[Instance],
    start_index: usize,
) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for (i, inst) in instances.iter().enumerate() {
        let stem = format!("{:03}-{}", start_index + i, inst.spec.family());
        let edges_path = dir.join(format!("{stem}.edges"));
        std::fs::write(&edges_path, inst.graph.to_edge_list())?;
        let mut manifest = inst.manifest_text();
        manifest.push_str(&format!("edges_file: {stem}.edges\n"));
        let manifest_path = dir.join(format!("{stem}.manifest"));
        std::fs::write(&manifest_path, manifest)?;
        written.push(manifest_path);
    }
    Ok(written)
}

/// Parse a key/value manifest document.
pub fn parse_manifest(text: &str) -> BTreeMap<String, String> {
    let mut map = BTreeMap::new();
    for line in text.lines() {
        if let Some((k, v)) = line.split_once(':') {
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
    }
    map
}

/// Outcome of one inequality family over a corpus.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: &'static str,
    pub passes: usize,
    pub failures: usize,
    pub worst_slack: f64,
}

/// Batch verification report over a corpus directory.
#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub instances: usize,
    pub skipped_controls: usize,
    pub checks: Vec<CheckLine>,
}

impl SuiteReport {
    /// Fresh report with all check lines zeroed.
    pub fn empty() -> Self {
        let line = |name: &'static str| CheckLine {
            name,
            passes: 0,
            failures: 0,
            worst_slack: f64::INFINITY,
        };
        SuiteReport {
            instances: 0,
            skipped_controls: 0,
            checks: vec![
                line("flow-at-least-half"),
                line("per-edge-sampling"),
                line("path-mass-quarter"),
                line("flow-dominance"),
                line("subgraph-probability"),
                line("resistance-decomposition"),
                line("rg-at-least-half-rp"),
            ],
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("instances: {}\n", self.instances));
        out.push_str(&format!("skipped_controls: {}\n", self.skipped_controls));
        for c in &self.checks {
            out.push_str(&format!(
                "check: {} passes={} failures={} worst_slack={}\n",
                c.name, c.passes, c.failures, c.worst_slack
            ));
        }
        out.push_str(&format!(
            "result: {}\n",
            if self.all_passed() { "pass" } else { "fail" }
        ));
        out
    }
}

const SLACK_TOL: f64 = -1e-9;

/// Replay the structural inequality checks over every instance in a
/// corpus directory. Instances labeled as failing controls are skipped;
/// everything labeled `holds` must pass every check.
pub fn verify_suite(dir: &Path) -> Result<SuiteReport> {
    let mut manifests: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().map(|x| x == "manifest").unwrap_or(false))
        .collect();
    manifests.sort();

    let mut report = SuiteReport::empty();

    for manifest_path in manifests {
        let manifest = parse_manifest(&std::fs::read_to_string(&manifest_path)?);
        let get = |key: &str| -> Result<&String> {
            manifest
                .get(key)
                .ok_or_else(|| Error::invalid_parameter("manifest", format!("missing key `{key}`")))
        };
        report.instances += 1;
        if get("label")? != "holds" {
            report.skipped_controls += 1;
            continue;
        }
        let edges_file = dir.join(get("edges_file")?);
        let parsed = parse_edge_list(&std::fs::read_to_string(&edges_file)?)?;
        let g = &parsed.graph;
        let s_label: u64 = get("s")?
            .parse()
            .map_err(|_| Error::invalid_parameter("manifest", "bad `s`"))?;
        let t_label: u64 = get("t")?
            .parse()
            .map_err(|_| Error::invalid_parameter("manifest", "bad `t`"))?;
        let s = parsed
            .index_of(s_label)
            .ok_or(Error::InvalidVertex(s_label as usize))?;
        let t = parsed
            .index_of(t_label)
            .ok_or(Error::InvalidVertex(t_label as usize))?;

        let stem = manifest_path
            .file_stem()
            .and_then(|x| x.to_str())
            .unwrap_or("");
        let mut subgraph_seed = 0u64;
        for b in stem.bytes() {
            subgraph_seed = subgraph_seed.wrapping_mul(31).wrapping_add(b as u64);
        }

        run_instance_checks(&mut report, g, s, t, subgraph_seed)?;
    }
    Ok(report)
}

/// The per-instance inequality battery; shared by `verify_suite` and the
/// in-process suites in the tests.
pub fn run_instance_checks(
    report: &mut SuiteReport,
    g: &crate::graph::Graph,
    s: usize,
    t: usize,
    subgraph_seed: u64,
) -> Result<()> {
    let record = |idx: usize, slack: f64, report: &mut SuiteReport| {
        let line = &mut report.checks[idx];
        if slack >= SLACK_TOL {
            line.passes += 1;
        } else {
            line.failures += 1;
        }
        if slack < line.worst_slack {
            line.worst_slack = slack;
        }
    };

    let min_flow = conditions::verify_flow_half(g, s, t)?;
    record(0, min_flow - 0.5, report);

    let (per_edge, total) = conditions::verify_sampling_bounds(g, s, t)?;
    let worst_edge = per_edge.iter().copied().fold(f64::INFINITY, f64::min);
    record(1, worst_edge, report);
    record(2, total, report);

    let dominated = conditions::verify_flow_dominance(g, s, t)?;
    record(3, if dominated { 0.0 } else { -1.0 }, report);

    // Random path-containing subgraphs keep the pair connected by
    // construction.
    let path = dijkstra(g, s, t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(subgraph_seed);
    for _ in 0..5 {
        let mut subset: Vec<EdgeId> = path.edges.clone();
        for e in g.edge_ids() {
            if !path.contains_edge(e) && rng.gen_bool(0.5) {
                subset.push(e);
            }
        }
        let slack = conditions::verify_subgraph_probability(g, &subset, s, t)?;
        record(4, slack, report);
    }

    let (slack, q) = conditions::verify_resistance_decomposition(g, s, t)?;
    let q_slack = q
        .iter()
        .copied()
        .map(|qi| qi - 1.0)
        .fold(f64::INFINITY, f64::min);
    record(5, slack.min(q_slack), report);

    record(6, conditions::verify_rg_half_rp(g, s, t)?, report);
    Ok(())
}
