//! Command-line front end. Subcommands: `gen`, `check`, `flow`,
//! `shortest`, `a1`, `a2`, `bench`, `verify-lemmas`.
//!
//! Exit codes: 0 success, 1 algorithm or condition failure, 2 input
//! error, 3 internal numerical failure.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algorithms::{algorithm_a1, algorithm_a2, dijkstra, A1Params, A2Params, RunResult};
use crate::conditions::check_condition_edges;
use crate::electric::{flow_state_distribution_with, solve_flow_with, SolverConfig};
use crate::error::{Error, Result};
use crate::generators::InstanceSpec;
use crate::graph::{parse_edge_list, ParsedEdgeList};
use crate::harness::{
    self, instance_label, records_to_csv, run_trials, scaling_sweep, verify_suite, Algorithm, Mode,
    TrialSettings, CORPUS_ENV,
};

#[derive(Debug, Parser)]
#[command(
    name = "flowpath",
    version,
    about = "Electric-flow shortest paths with an emulated walk-cost ledger"
)]
pub struct Cli {
    /// Base RNG seed.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write output to this path instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format where a command supports both; sweeps default to
    /// csv, everything else to text.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Vertex count above which the Laplacian solver switches from dense
    /// Cholesky to conjugate gradients.
    #[arg(long, global = true)]
    dense_cutoff: Option<usize>,
    /// Relative residual target for the conjugate-gradient solver.
    #[arg(long, global = true)]
    cg_residual: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

impl Cli {
    fn family_spec(family: &Option<FamilyParams>, seed: u64) -> Result<InstanceSpec> {
        family
            .as_ref()
            .ok_or_else(|| Error::invalid_parameter("family", "bench needs --family or a grid"))?
            .spec(seed)
    }

    fn solver_config(&self) -> SolverConfig {
        let mut config = SolverConfig::default();
        if let Some(cutoff) = self.dense_cutoff {
            config.dense_cutoff = cutoff;
        }
        if let Some(res) = self.cg_residual {
            config.cg_rel_residual = res;
        }
        config
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Noisy,
    Adversarial,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Noisy => Mode::Noisy,
            ModeArg::Adversarial => Mode::Adversarial,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Dijkstra,
    A1,
    A2,
}

impl From<AlgorithmArg> for Algorithm {
    fn from(a: AlgorithmArg) -> Algorithm {
        match a {
            AlgorithmArg::Dijkstra => Algorithm::Dijkstra,
            AlgorithmArg::A1 => Algorithm::A1,
            AlgorithmArg::A2 => Algorithm::A2,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Path,
    ParallelDetour,
    CactusOdd,
    Figure1,
    RandomCondition1,
    ErdosControl,
}

/// Family size parameters shared by `gen` and `bench`.
#[derive(Debug, Args, Clone)]
struct FamilyParams {
    #[arg(long, value_enum)]
    family: Option<FamilyArg>,
    /// Path length (edges).
    #[arg(long, default_value_t = 4)]
    l: usize,
    /// Detour length for parallel-detour.
    #[arg(long, default_value_t = 16)]
    detour_len: usize,
    /// Number of detours for parallel-detour.
    #[arg(long, default_value_t = 1)]
    copies: usize,
    /// Vertex count for cactus-odd / random families.
    #[arg(long, default_value_t = 12)]
    n: usize,
    /// Edge count for random families.
    #[arg(long, default_value_t = 16)]
    m: usize,
    #[arg(long, default_value_t = 3)]
    g1_size: usize,
    #[arg(long, default_value_t = 3)]
    g2_size: usize,
    #[arg(long, default_value_t = 3)]
    g3_len: usize,
    #[arg(long, default_value_t = 400)]
    max_attempts: usize,
    /// Reweight edges log-uniformly in [1/4, 4] after generation.
    #[arg(long, default_value_t = false)]
    weighted: bool,
}

impl FamilyParams {
    fn spec(&self, seed: u64) -> Result<InstanceSpec> {
        let family = self
            .family
            .ok_or_else(|| Error::invalid_parameter("family", "this command needs --family"))?;
        Ok(match family {
            FamilyArg::Path => InstanceSpec::Path { l: self.l },
            FamilyArg::ParallelDetour => InstanceSpec::ParallelDetour {
                l: self.l,
                detour_len: self.detour_len,
                copies: self.copies,
                seed,
            },
            FamilyArg::CactusOdd => InstanceSpec::CactusOdd { n: self.n, seed },
            FamilyArg::Figure1 => InstanceSpec::Figure1 {
                g1_size: self.g1_size,
                g2_size: self.g2_size,
                g3_len: self.g3_len,
                seed,
            },
            FamilyArg::RandomCondition1 => InstanceSpec::RandomCondition1 {
                n: self.n,
                m: self.m,
                l: self.l,
                seed,
                max_attempts: self.max_attempts,
            },
            FamilyArg::ErdosControl => InstanceSpec::ErdosControl {
                n: self.n,
                m: self.m,
                seed,
            },
        })
    }
}

#[derive(Debug, Args, Clone)]
struct PairArgs {
    /// Edge-list input file.
    #[arg(long)]
    input: PathBuf,
    /// Source vertex label (as written in the input file).
    #[arg(long)]
    source: u64,
    /// Target vertex label.
    #[arg(long)]
    target: u64,
}

#[derive(Debug, Args, Clone)]
struct EmulArgs {
    /// Upper bound on the shortest-path resistance length.
    #[arg(long)]
    l_hat: f64,
    /// Condition margin; measured by the checker when omitted.
    #[arg(long)]
    alpha: Option<f64>,
    #[arg(long, value_enum, default_value_t = ModeArg::Noisy)]
    mode: ModeArg,
    /// Account independent work as concurrent in the ledger.
    #[arg(long, default_value_t = false)]
    parallel: bool,
    /// Step-cost constants, e.g. `prep=2,est=0.5`.
    #[arg(long, value_parser = parse_cost_model)]
    cost_model: Option<CostModel>,
}

#[derive(Debug, Clone, Copy)]
struct CostModel {
    prep: f64,
    est: f64,
}

fn parse_cost_model(s: &str) -> std::result::Result<CostModel, String> {
    let mut model = CostModel {
        prep: 1.0,
        est: 1.0,
    };
    for part in s.split(',') {
        match part.split_once('=') {
            Some(("prep", v)) => model.prep = v.parse().map_err(|_| format!("bad prep `{v}`"))?,
            Some(("est", v)) => model.est = v.parse().map_err(|_| format!("bad est `{v}`"))?,
            _ => return Err(format!("expected prep=<c>,est=<c>, got `{part}`")),
        }
    }
    Ok(model)
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance: edge list plus manifest.
    Gen {
        #[command(flatten)]
        family: FamilyParams,
    },
    /// Check the path condition for a vertex pair; exits 0 iff it holds.
    Check {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Solve the unit electric flow and print potentials, flows and the
    /// flow-state measurement distribution.
    Flow {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Classical shortest path under the resistance metric.
    Shortest {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Sample-and-sparsify path finding with an emulated cost ledger.
    A1 {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        emul: EmulArgs,
    },
    /// Divide-and-conquer path finding with an emulated cost ledger.
    A2 {
        #[command(flatten)]
        pair: PairArgs,
        #[command(flatten)]
        emul: EmulArgs,
    },
    /// Trial batches and scaling sweeps over generated instances.
    Bench {
        #[arg(long, value_enum)]
        algorithm: AlgorithmArg,
        /// Grid of path lengths, comma separated; sweeps detour instances.
        #[arg(long, value_delimiter = ',')]
        l_grid: Vec<usize>,
        /// Grid of edge counts, comma separated.
        #[arg(long, value_delimiter = ',')]
        m_grid: Vec<usize>,
        #[command(flatten)]
        family: Option<FamilyParams>,
        #[arg(long, default_value_t = 10)]
        trials: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Noisy)]
        mode: ModeArg,
        #[arg(long, default_value_t = false)]
        parallel: bool,
        #[arg(long, value_parser = parse_cost_model)]
        cost_model: Option<CostModel>,
    },
    /// Re-run the inequality checks over a corpus directory.
    VerifyLemmas {
        /// Corpus directory; falls back to $FLOWPATH_CORPUS_DIR.
        #[arg(long)]
        corpus: Option<PathBuf>,
    },
}

/// Parse and run; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("flowpath: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SolverFailure(_) => 3,
        Error::GeneratorExhausted { .. } | Error::ConditionNotVerified(_) => 1,
        _ => 2,
    }
}

fn load_pair(pair: &PairArgs) -> Result<(ParsedEdgeList, usize, usize)> {
    let text = std::fs::read_to_string(&pair.input)?;
    let parsed = parse_edge_list(&text)?;
    let s = parsed
        .index_of(pair.source)
        .ok_or(Error::InvalidVertex(pair.source as usize))?;
    let t = parsed
        .index_of(pair.target)
        .ok_or(Error::InvalidVertex(pair.target as usize))?;
    Ok((parsed, s, t))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn execute(cli: Cli) -> Result<i32> {
    let solver = cli.solver_config();
    let (seed, out, format) = (cli.seed, cli.out, cli.format);
    match cli.command {
        Command::Gen { family } => {
            let spec = family.spec(seed)?;
            let mut instance = spec.generate()?;
            if family.weighted {
                instance = instance.weighted_variant(seed ^ 0x5eed)?;
            }
            let dir = out.clone().unwrap_or_else(|| PathBuf::from("corpus"));
            // Number after whatever the directory already holds.
            let existing = std::fs::read_dir(&dir)
                .map(|entries| {
                    entries
                        .filter_map(|e| e.ok())
                        .filter(|e| {
                            e.path()
                                .extension()
                                .map(|x| x == "manifest")
                                .unwrap_or(false)
                        })
                        .count()
                })
                .unwrap_or(0);
            let written = harness::write_corpus_from(&dir, &[instance], existing)?;
            println!("wrote {}", written[0].display());
            Ok(0)
        }
        Command::Check { pair } => {
            let (parsed, s, t) = load_pair(&pair)?;
            let report = check_condition_edges(&parsed.graph, s, t)?;
            emit(&out, &report.to_text())?;
            Ok(if report.holds_condition1 { 0 } else { 1 })
        }
        Command::Flow { pair } => {
            let (parsed, s, t) = load_pair(&pair)?;
            let text = flow_report(&parsed, s, t, &solver, format)?;
            emit(&out, &text)?;
            Ok(0)
        }
        Command::Shortest { pair } => {
            let (parsed, s, t) = load_pair(&pair)?;
            let path = dijkstra(&parsed.graph, s, t)?;
            let labels: Vec<String> = path
                .vertices
                .iter()
                .map(|&v| parsed.vertex_labels[v].to_string())
                .collect();
            let text = format!(
                "path: {}\nresistance_length: {}\n",
                labels.join(" "),
                path.resistance_length
            );
            emit(&out, &text)?;
            Ok(0)
        }
        Command::A1 { pair, emul } => {
            let (parsed, s, t) = load_pair(&pair)?;
            let mut params = A1Params::new(emul.l_hat)?;
            params.parallel = emul.parallel;
            let config = build_config(&emul, seed, solver.clone());
            let run = algorithm_a1(&parsed.graph, s, t, &params, &config)?;
            let text = run_report("a1", &parsed, &run);
            emit(&out, &text)?;
            Ok(if run.success { 0 } else { 1 })
        }
        Command::A2 { pair, emul } => {
            let (parsed, s, t) = load_pair(&pair)?;
            let alpha = match emul.alpha {
                Some(a) => a,
                None => {
                    let report = check_condition_edges(&parsed.graph, s, t)?;
                    if !report.holds_condition1 {
                        return Err(Error::ConditionNotVerified(
                            "pair fails the path condition; pass --alpha to override".into(),
                        ));
                    }
                    if report.max_alpha.is_finite() {
                        report.max_alpha
                    } else {
                        1.0
                    }
                }
            };
            let mut params = A2Params::new(emul.l_hat, alpha)?;
            params.parallel = emul.parallel;
            let config = build_config(&emul, seed, solver.clone());
            let run = algorithm_a2(&parsed.graph, s, t, &params, &config)?;
            let text = run_report("a2", &parsed, &run);
            emit(&out, &text)?;
            Ok(if run.success { 0 } else { 1 })
        }
        Command::Bench {
            algorithm,
            l_grid,
            m_grid,
            family,
            trials,
            mode,
            parallel,
            cost_model,
        } => {
            let settings = TrialSettings {
                mode: mode.into(),
                parallel,
                cost_constant_prep: cost_model.map(|c| c.prep).unwrap_or(1.0),
                cost_constant_est: cost_model.map(|c| c.est).unwrap_or(1.0),
                ..TrialSettings::default()
            };
            let text = if !l_grid.is_empty() || !m_grid.is_empty() {
                let ls = if l_grid.is_empty() { vec![8] } else { l_grid };
                let ms = if m_grid.is_empty() { vec![256] } else { m_grid };
                let sweep = scaling_sweep(algorithm.into(), &ls, &ms, &settings, trials, seed)?;
                sweep.to_csv()
            } else {
                let spec = Cli::family_spec(&family, seed)?;
                let (records, summary) =
                    run_trials(&spec, algorithm.into(), &settings, trials, seed)?;
                let aggregate = format!(
                    "instance: {}\nsuccess_rate: {:.4}\nmean_total_steps: {:.3}\nmean_parallel_depth: {:.3}\n",
                    instance_label(&spec),
                    summary.success_rate(),
                    summary.mean_total_steps,
                    summary.mean_parallel_depth,
                );
                match format.unwrap_or(Format::Csv) {
                    Format::Csv => {
                        let mut csv = records_to_csv(&records);
                        for line in aggregate.lines() {
                            csv.push_str(&format!("# {line}\n"));
                        }
                        csv
                    }
                    Format::Text => aggregate,
                }
            };
            emit(&out, &text)?;
            Ok(0)
        }
        Command::VerifyLemmas { corpus } => {
            let dir = corpus
                .or_else(|| std::env::var_os(CORPUS_ENV).map(PathBuf::from))
                .ok_or_else(|| {
                    Error::invalid_parameter(
                        "corpus",
                        format!("pass --corpus or set ${CORPUS_ENV}"),
                    )
                })?;
            let report = verify_suite(Path::new(&dir))?;
            emit(&out, &report.to_text())?;
            Ok(if report.all_passed() { 0 } else { 1 })
        }
    }
}

fn build_config(emul: &EmulArgs, seed: u64, solver: SolverConfig) -> crate::emul::EmulationConfig {
    let mode: Mode = emul.mode.into();
    let mut config = mode.emulation_config(seed);
    if let Some(cm) = emul.cost_model {
        config.cost_constant_prep = cm.prep;
        config.cost_constant_est = cm.est;
    }
    config.solver = solver;
    config
}

fn flow_report(
    parsed: &ParsedEdgeList,
    s: usize,
    t: usize,
    solver: &SolverConfig,
    format: Option<Format>,
) -> Result<String> {
    let g = &parsed.graph;
    let labels = &parsed.vertex_labels;
    let flow = solve_flow_with(g, s, t, solver)?;
    let dist = flow_state_distribution_with(g, s, t, solver)?;
    let mut out = String::new();
    match format.unwrap_or(Format::Text) {
        Format::Text => {
            out.push_str(&format!("source: {}\ntarget: {}\n", labels[s], labels[t]));
            out.push_str(&format!("resistance: {}\n", flow.resistance));
            out.push_str("# potential: vertex value\n");
            for (label, phi) in labels.iter().zip(&flow.potentials) {
                out.push_str(&format!("potential: {label} {phi}\n"));
            }
            out.push_str("# edge: id u v weight flow probability\n");
            for e in g.edge_ids() {
                let (u, v) = g.endpoints(e);
                out.push_str(&format!(
                    "edge: {} {} {} {} {} {}\n",
                    e.index(),
                    labels[u],
                    labels[v],
                    g.weight(e),
                    flow.flow(e),
                    dist.prob(e)
                ));
            }
        }
        Format::Csv => {
            out.push_str("edge_id,u,v,weight,flow,probability\n");
            for e in g.edge_ids() {
                let (u, v) = g.endpoints(e);
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    e.index(),
                    labels[u],
                    labels[v],
                    g.weight(e),
                    flow.flow(e),
                    dist.prob(e)
                ));
            }
        }
    }
    Ok(out)
}

fn run_report(name: &str, parsed: &ParsedEdgeList, run: &RunResult) -> String {
    let mut out = String::new();
    out.push_str(&format!("algorithm: {name}\n"));
    out.push_str(&format!("success: {}\n", run.success));
    match &run.path {
        Some(p) => {
            let labels: Vec<String> = p
                .vertices
                .iter()
                .map(|&v| parsed.vertex_labels[v].to_string())
                .collect();
            out.push_str(&format!("path: {}\n", labels.join(" ")));
            out.push_str(&format!("resistance_length: {}\n", p.resistance_length));
        }
        None => out.push_str("path: none\n"),
    }
    out.push_str(&format!("rounds: {}\n", run.rounds));
    out.push_str(&run.ledger.report());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cost_model_parser() {
        let m = parse_cost_model("prep=2,est=0.5").unwrap();
        assert_eq!(m.prep, 2.0);
        assert_eq!(m.est, 0.5);
        assert!(parse_cost_model("prep=x").is_err());
        assert!(parse_cost_model("nope=1").is_err());
    }
}
