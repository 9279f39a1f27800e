//! Distribution-level emulation of the two walk primitives used by the
//! path-finding algorithms: approximate flow-state sampling and
//! multiplicative effective-resistance estimation.
//!
//! Nothing quantum is simulated here. Sampling draws edges from the exact
//! measurement distribution of the flow state, optionally perturbed within
//! the l2 guarantee `||a' - a|| <= eps` that a real preparation would
//! provide; estimation returns the exact resistance blurred to the
//! requested multiplicative accuracy, with a configurable chance of
//! returning a corrupted value. Every call charges an emulated step count
//! to a [`CostLedger`]: the counts implement the walk-cost formulas
//! `sqrt(ET) * (1/eps + ln(R d + 2))` for preparation and
//! `sqrt(ET) * (eps^-3/2 + ln(R d + 2)) * ceil(ln(1/delta))` for
//! estimation, with `ET = R * m`. The `ceil(ln(1/delta))` factor is
//! median-of-runs amplification and is spelled out in the ledger labels.
//!
//! Charged counts use exact oracle values for `R` and `d_s` (accounting is
//! analysis-side); a caller that owns a resistance bound for a subproblem
//! can pass it explicitly so that the charge reflects the budget the
//! algorithm would actually allocate.

use std::collections::HashMap;
use std::rc::Rc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithms::dijkstra;
use crate::electric::{LaplacianSystem, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// How sampled flow states deviate from the exact distribution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PerturbationMode {
    /// No perturbation; sample the exact measurement distribution.
    Exact,
    /// Add a random direction of l2 norm `eps` to the amplitude vector,
    /// renormalize, square.
    RandomAmplitude,
    /// Move `eps^2/2` probability mass from the strongest path edge to the
    /// strongest off-path edge; the worst case allowed by the guarantee.
    AdversarialMassShift,
}

/// What an estimation failure returns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorruptionMode {
    /// Estimates never fail.
    None,
    /// Failed estimates come back at `R * (1 +- 3 eps)`, outside the band.
    Multiplicative3Eps,
    /// Failed estimates are log-uniform in `[R/10, 10 R]`.
    ArbitraryPositive,
}

#[derive(Debug, Clone)]
pub struct EmulationConfig {
    pub rng_seed: u64,
    pub perturbation_mode: PerturbationMode,
    pub corruption_mode: CorruptionMode,
    /// Multiplier on preparation step charges.
    pub cost_constant_prep: f64,
    /// Multiplier on estimation step charges.
    pub cost_constant_est: f64,
    pub solver: SolverConfig,
}

impl EmulationConfig {
    pub fn exact(seed: u64) -> Self {
        EmulationConfig {
            rng_seed: seed,
            perturbation_mode: PerturbationMode::Exact,
            corruption_mode: CorruptionMode::None,
            cost_constant_prep: 1.0,
            cost_constant_est: 1.0,
            solver: SolverConfig::default(),
        }
    }

    pub fn noisy(seed: u64) -> Self {
        EmulationConfig {
            perturbation_mode: PerturbationMode::RandomAmplitude,
            corruption_mode: CorruptionMode::Multiplicative3Eps,
            ..EmulationConfig::exact(seed)
        }
    }

    pub fn adversarial(seed: u64) -> Self {
        EmulationConfig {
            perturbation_mode: PerturbationMode::AdversarialMassShift,
            corruption_mode: CorruptionMode::ArbitraryPositive,
            ..EmulationConfig::exact(seed)
        }
    }

    fn validate(&self) -> Result<()> {
        if self.cost_constant_prep.is_nan() || self.cost_constant_prep <= 0.0 {
            return Err(Error::invalid_parameter(
                "cost_constant_prep",
                "must be > 0",
            ));
        }
        if self.cost_constant_est.is_nan() || self.cost_constant_est <= 0.0 {
            return Err(Error::invalid_parameter("cost_constant_est", "must be > 0"));
        }
        Ok(())
    }
}

/// Identifies a parallel group in a ledger. Charges within one group are
/// counted as concurrent: the group contributes its maximum entry to the
/// parallel depth, while every entry contributes to the sequential total.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupId(u32);

#[derive(Debug, Clone)]
pub struct LedgerEntry {
    pub label: String,
    pub steps: u64,
    pub group: GroupId,
}

/// Step-accounting ledger: sequential total plus a parallel-depth metric
/// (sum over groups of the maximum charge within the group).
#[derive(Debug, Clone, Default)]
pub struct CostLedger {
    entries: Vec<LedgerEntry>,
    group_max: Vec<u64>,
    total: u64,
    depth: u64,
}

impl CostLedger {
    pub fn new() -> Self {
        CostLedger::default()
    }

    pub fn begin_parallel_group(&mut self) -> GroupId {
        self.group_max.push(0);
        GroupId(self.group_max.len() as u32 - 1)
    }

    pub fn charge(&mut self, group: GroupId, label: impl Into<String>, steps: u64) {
        let idx = group.0 as usize;
        assert!(idx < self.group_max.len(), "charge against unknown group");
        self.total += steps;
        if steps > self.group_max[idx] {
            self.depth += steps - self.group_max[idx];
            self.group_max[idx] = steps;
        }
        self.entries.push(LedgerEntry {
            label: label.into(),
            steps,
            group,
        });
    }

    /// Charge in a fresh singleton group: purely sequential work.
    pub fn charge_sequential(&mut self, label: impl Into<String>, steps: u64) -> GroupId {
        let g = self.begin_parallel_group();
        self.charge(g, label, steps);
        g
    }

    pub fn total_steps(&self) -> u64 {
        self.total
    }

    pub fn parallel_depth(&self) -> u64 {
        self.depth
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn group_count(&self) -> usize {
        self.group_max.len()
    }

    /// Structured-text report: one line per entry, then totals.
    pub fn report(&self) -> String {
        let mut out = String::new();
        out.push_str("# ledger entries: label steps group\n");
        for e in &self.entries {
            out.push_str(&format!("entry: {} {} {}\n", e.label, e.steps, e.group.0));
        }
        out.push_str(&format!("total_steps: {}\n", self.total));
        out.push_str(&format!("parallel_depth: {}\n", self.depth));
        out
    }
}

/// Outcome of an emulated resistance estimation. `corrupted` is ground
/// truth for test harnesses; the algorithms never read it.
#[derive(Debug, Clone, Copy)]
pub struct ResistanceEstimate {
    pub value: f64,
    pub epsilon: f64,
    pub delta: f64,
    pub corrupted: bool,
}

/// Steps charged for one flow-state preparation at accuracy `epsilon`.
pub fn preparation_cost(
    c_prep: f64,
    et_bound: f64,
    resistance_scale: f64,
    source_degree: usize,
    epsilon: f64,
) -> u64 {
    let log_term = (resistance_scale * source_degree as f64 + 2.0).ln();
    (c_prep * et_bound.sqrt() * (1.0 / epsilon + log_term)).ceil() as u64
}

/// Steps charged for one resistance estimation at accuracy `epsilon` and
/// failure probability `delta`; the trailing factor is the repetition
/// amplification `ceil(ln(1/delta))`.
pub fn estimation_cost(
    c_est: f64,
    et_bound: f64,
    resistance_scale: f64,
    source_degree: usize,
    epsilon: f64,
    delta: f64,
) -> u64 {
    let amp = amplification(delta);
    let log_term = (resistance_scale * source_degree as f64 + 2.0).ln();
    (c_est * et_bound.sqrt() * (epsilon.powf(-1.5) + log_term) * amp as f64).ceil() as u64
}

pub fn amplification(delta: f64) -> u64 {
    ((1.0 / delta).ln().ceil() as u64).max(1)
}

struct FlowData {
    live: Vec<EdgeId>,
    /// Signed amplitudes on the canonical edge orientation, unit l2 norm.
    amps: Vec<f64>,
    probs: Vec<f64>,
    resistance: f64,
    /// Membership of each live edge in the shortest path, for the
    /// adversarial perturbation.
    on_path: Vec<bool>,
}

#[derive(Default)]
struct SolveCache {
    systems: HashMap<(u64, usize), Rc<LaplacianSystem>>,
    potentials: HashMap<(u64, usize, usize), Rc<Vec<f64>>>,
    resistances: HashMap<(u64, usize, usize), f64>,
    flows: HashMap<(u64, usize, usize), Rc<FlowData>>,
}

/// Stateful emulator: owns the RNG stream and a solve cache. Reuse one
/// emulator across runs on the same graphs and reseed per run; concurrent
/// runs should each own their emulator.
///
/// ```
/// use flowpath::emul::{CostLedger, EmulationConfig, Emulator};
/// use flowpath::Graph;
///
/// let g = Graph::from_edge_list("0 1 1\n1 2 1\n2 3 1").unwrap();
/// let mut emul = Emulator::new(EmulationConfig::exact(7)).unwrap();
/// let mut ledger = CostLedger::new();
/// let group = ledger.begin_parallel_group();
/// let edge = emul.sample_flow_edge(&g, 0, 3, 0.1, &mut ledger, group).unwrap();
/// assert!(g.contains_edge(edge));
/// // sqrt(R m) (1/eps + ln(R d + 2)) = 3 (10 + ln 5) rounded up.
/// assert_eq!(ledger.total_steps(), 35);
/// ```
pub struct Emulator {
    config: EmulationConfig,
    rng: ChaCha8Rng,
    cache: SolveCache,
}

impl Emulator {
    pub fn new(config: EmulationConfig) -> Result<Self> {
        config.validate()?;
        let rng = ChaCha8Rng::seed_from_u64(config.rng_seed);
        Ok(Emulator {
            config,
            rng,
            cache: SolveCache::default(),
        })
    }

    pub fn config(&self) -> &EmulationConfig {
        &self.config
    }

    /// Reset the RNG stream; the solve cache is kept.
    pub fn reseed(&mut self, seed: u64) {
        self.config.rng_seed = seed;
        self.rng = ChaCha8Rng::seed_from_u64(seed);
    }

    /// One bit from the run's random stream, for caller-side choices that
    /// must replay deterministically with the seed.
    pub fn random_bit(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    fn system(&mut self, g: &Graph, root: usize) -> Result<Rc<LaplacianSystem>> {
        let mask = g.component_of(root);
        let ground = mask.iter().position(|&b| b).unwrap();
        let key = (g.fingerprint(), ground);
        if let Some(sys) = self.cache.systems.get(&key) {
            return Ok(Rc::clone(sys));
        }
        let sys = Rc::new(LaplacianSystem::build(g, root, &self.config.solver)?);
        self.cache.systems.insert(key, Rc::clone(&sys));
        Ok(sys)
    }

    fn pair_potentials(&mut self, g: &Graph, s: usize, t: usize) -> Result<Rc<Vec<f64>>> {
        let key = (g.fingerprint(), s, t);
        if let Some(phi) = self.cache.potentials.get(&key) {
            return Ok(Rc::clone(phi));
        }
        let sys = self.system(g, s)?;
        if !sys.contains(t) {
            return Err(Error::Disconnected { s, t });
        }
        let phi = Rc::new(sys.pair_potentials(g, s, t)?);
        self.cache.potentials.insert(key, Rc::clone(&phi));
        Ok(phi)
    }

    /// Exact effective resistance, cached; `+inf` when disconnected.
    pub fn exact_resistance(&mut self, g: &Graph, s: usize, t: usize) -> Result<f64> {
        if s == t {
            return Err(Error::DegeneratePair(s));
        }
        g.check_vertex(s)?;
        g.check_vertex(t)?;
        let key = (g.fingerprint(), s.min(t), s.max(t));
        if let Some(&r) = self.cache.resistances.get(&key) {
            return Ok(r);
        }
        let r = match self.pair_potentials(g, s, t) {
            Ok(phi) => phi[s] - phi[t],
            Err(Error::Disconnected { .. }) => f64::INFINITY,
            Err(e) => return Err(e),
        };
        self.cache.resistances.insert(key, r);
        Ok(r)
    }

    fn flow_data(&mut self, g: &Graph, s: usize, t: usize) -> Result<Rc<FlowData>> {
        let key = (g.fingerprint(), s, t);
        if let Some(fd) = self.cache.flows.get(&key) {
            return Ok(Rc::clone(fd));
        }
        let phi = self.pair_potentials(g, s, t)?;
        let resistance = phi[s] - phi[t];
        let sqrt_r = resistance.sqrt();
        let mut live = Vec::with_capacity(g.edge_count());
        let mut amps = Vec::with_capacity(g.edge_count());
        let mut probs = Vec::with_capacity(g.edge_count());
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            let f = (phi[u] - phi[v]) * g.weight(e);
            let a = f * g.resistance(e).sqrt() / sqrt_r;
            live.push(e);
            amps.push(a);
            probs.push(a * a);
        }
        let path = dijkstra(g, s, t)?;
        let on_path = live.iter().map(|&e| path.contains_edge(e)).collect();
        let fd = Rc::new(FlowData {
            live,
            amps,
            probs,
            resistance,
            on_path,
        });
        self.cache.flows.insert(key, Rc::clone(&fd));
        Ok(fd)
    }

    /// Perturbed amplitude vector for one preparation, alongside the exact
    /// amplitudes and the live edges they refer to. Exposed so tests can
    /// assert the l2 guarantee on the constructed vector directly.
    pub fn perturbed_amplitudes(
        &mut self,
        g: &Graph,
        s: usize,
        t: usize,
        epsilon: f64,
    ) -> Result<(Vec<EdgeId>, Vec<f64>, Vec<f64>)> {
        check_epsilon(epsilon)?;
        let fd = self.flow_data(g, s, t)?;
        let perturbed = self.perturb(&fd, epsilon);
        Ok((fd.live.clone(), fd.amps.clone(), perturbed))
    }

    fn perturb(&mut self, fd: &FlowData, epsilon: f64) -> Vec<f64> {
        match self.config.perturbation_mode {
            PerturbationMode::Exact => fd.amps.clone(),
            PerturbationMode::RandomAmplitude => {
                let k = fd.amps.len();
                if k == 0 {
                    return Vec::new();
                }
                // Random direction from normalized gaussians.
                let mut dir: Vec<f64> = (0..k).map(|_| standard_normal(&mut self.rng)).collect();
                let norm = dir.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm == 0.0 {
                    return fd.amps.clone();
                }
                for d in &mut dir {
                    *d /= norm;
                }
                // Step, renormalize; halve the step until the renormalized
                // vector is within the guarantee.
                let mut scale = 1.0;
                for _ in 0..60 {
                    let cand = renormalized_step(&fd.amps, &dir, scale * epsilon);
                    let dist = l2_distance(&cand, &fd.amps);
                    if dist <= epsilon {
                        return cand;
                    }
                    scale *= 0.5;
                }
                fd.amps.clone()
            }
            PerturbationMode::AdversarialMassShift => {
                let mut probs = fd.probs.clone();
                let hi_path = argmax_where(&probs, |i| fd.on_path[i]);
                let hi_off = argmax_where(&probs, |i| !fd.on_path[i]);
                if let (Some(hi), Some(off)) = (hi_path, hi_off) {
                    let shift = (epsilon * epsilon / 2.0).min(probs[hi]);
                    probs[hi] -= shift;
                    probs[off] += shift;
                }
                probs
                    .iter()
                    .zip(&fd.amps)
                    .map(|(&p, &a)| p.sqrt().copysign(if a == 0.0 { 1.0 } else { a }))
                    .collect()
            }
        }
    }

    /// Sample one edge from an `epsilon`-accurate preparation of the
    /// `s -> t` flow state, charging the preparation cost to `ledger`
    /// under `group`.
    pub fn sample_flow_edge(
        &mut self,
        g: &Graph,
        s: usize,
        t: usize,
        epsilon: f64,
        ledger: &mut CostLedger,
        group: GroupId,
    ) -> Result<EdgeId> {
        check_epsilon(epsilon)?;
        if s == t {
            return Err(Error::DegeneratePair(s));
        }
        let fd = self.flow_data(g, s, t)?;
        let amps = self.perturb(&fd, epsilon);
        let total: f64 = amps.iter().map(|a| a * a).sum();
        let mut u = self.rng.gen::<f64>() * total;
        let mut chosen = *fd.live.last().expect("flow state over empty edge set");
        for (i, a) in amps.iter().enumerate() {
            u -= a * a;
            if u <= 0.0 {
                chosen = fd.live[i];
                break;
            }
        }

        let d_s = g.degree(s)?;
        let et = fd.resistance * g.edge_count() as f64;
        let steps = preparation_cost(
            self.config.cost_constant_prep,
            et,
            fd.resistance,
            d_s,
            epsilon,
        );
        ledger.charge(group, "prepare-flow-state", steps);
        Ok(chosen)
    }

    /// Estimate the `s -> t` effective resistance to multiplicative
    /// accuracy `epsilon` with failure probability `delta`. The charge is
    /// parameterized by the exact resistance of `g`; see
    /// [`Emulator::estimate_resistance_bounded`] when the caller owns a
    /// budget for the pair.
    #[allow(clippy::too_many_arguments)]
    pub fn estimate_resistance(
        &mut self,
        g: &Graph,
        s: usize,
        t: usize,
        epsilon: f64,
        delta: f64,
        ledger: &mut CostLedger,
        group: GroupId,
    ) -> Result<ResistanceEstimate> {
        self.estimate_resistance_bounded(g, s, t, epsilon, delta, None, ledger, group)
    }

    /// As [`Emulator::estimate_resistance`], with the charge computed from
    /// the caller's resistance bound instead of the exact value. A
    /// disconnected pair yields an uncorrupted `+inf` sentinel and is
    /// charged as one full run at the same budget.
    #[allow(clippy::too_many_arguments)]
    pub fn estimate_resistance_bounded(
        &mut self,
        g: &Graph,
        s: usize,
        t: usize,
        epsilon: f64,
        delta: f64,
        resistance_bound: Option<f64>,
        ledger: &mut CostLedger,
        group: GroupId,
    ) -> Result<ResistanceEstimate> {
        check_epsilon(epsilon)?;
        check_delta(delta)?;
        let exact = self.exact_resistance(g, s, t)?;
        self.finish_estimate(
            exact,
            g.edge_count(),
            g.degree(s)?,
            epsilon,
            delta,
            resistance_bound,
            g.total_resistance(),
            ledger,
            group,
        )
    }

    /// Estimate the `s -> t` resistance of `g` with edge `e` removed,
    /// without materializing the removal view. Uses the rank-one identity
    /// `R_{G\e}(s,t) = R(s,t) + w (phi_a - phi_b)^2 / (1 - w R(a,b))`
    /// on cached solves of the intact graph; a vanishing denominator means
    /// `e` is a bridge for the pair and the sentinel is `+inf`.
    #[allow(clippy::too_many_arguments)]
    pub fn estimate_removed_resistance(
        &mut self,
        g: &Graph,
        e: EdgeId,
        s: usize,
        t: usize,
        epsilon: f64,
        delta: f64,
        resistance_bound: Option<f64>,
        ledger: &mut CostLedger,
        group: GroupId,
    ) -> Result<ResistanceEstimate> {
        check_epsilon(epsilon)?;
        check_delta(delta)?;
        if !g.contains_edge(e) {
            return Err(Error::InvalidEdge(e.index()));
        }
        if s == t {
            return Err(Error::DegeneratePair(s));
        }
        let (a, b) = g.endpoints(e);
        let w = g.weight(e);
        let exact = {
            let r_st = self.exact_resistance(g, s, t)?;
            if r_st.is_infinite() {
                f64::INFINITY
            } else {
                let r_ab = self.exact_resistance(g, a, b)?;
                let phi = self.pair_potentials(g, s, t)?;
                let cross = phi[a] - phi[b];
                let denom = 1.0 - w * r_ab;
                if denom <= 1e-9 {
                    // Cut edge. The flow it carries is either the whole
                    // unit (the pair straddles the cut: removal
                    // disconnects it) or nothing (the cut hangs off to
                    // one side: removal changes nothing for the pair).
                    if (w * cross).abs() > 0.5 {
                        f64::INFINITY
                    } else {
                        r_st
                    }
                } else {
                    r_st + w * cross * cross / denom
                }
            }
        };
        self.finish_estimate(
            exact,
            g.edge_count() - 1,
            g.degree(s)?,
            epsilon,
            delta,
            resistance_bound,
            g.total_resistance() - g.resistance(e),
            ledger,
            group,
        )
    }

    #[allow(clippy::too_many_arguments)]
    fn finish_estimate(
        &mut self,
        exact: f64,
        edge_count: usize,
        source_degree: usize,
        epsilon: f64,
        delta: f64,
        resistance_bound: Option<f64>,
        fallback_scale: f64,
        ledger: &mut CostLedger,
        group: GroupId,
    ) -> Result<ResistanceEstimate> {
        // Scale for the charge: the caller's budget when provided, the
        // exact value otherwise, and the total series resistance as a
        // finite stand-in when the pair is disconnected.
        let scale = resistance_bound.unwrap_or(if exact.is_finite() {
            exact
        } else {
            fallback_scale
        });
        let steps = estimation_cost(
            self.config.cost_constant_est,
            scale * edge_count as f64,
            scale,
            source_degree,
            epsilon,
            delta,
        );
        ledger.charge(
            group,
            format!("estimate-resistance amp={}", amplification(delta)),
            steps,
        );

        if exact.is_infinite() {
            // Disconnection is treated as certain detection.
            return Ok(ResistanceEstimate {
                value: f64::INFINITY,
                epsilon,
                delta,
                corrupted: false,
            });
        }

        let corrupted =
            self.config.corruption_mode != CorruptionMode::None && self.rng.gen::<f64>() < delta;
        let value = if corrupted {
            match self.config.corruption_mode {
                CorruptionMode::None => unreachable!(),
                CorruptionMode::Multiplicative3Eps => {
                    let up = self.rng.gen_bool(0.5);
                    let factor = if up {
                        1.0 + 3.0 * epsilon
                    } else {
                        1.0 - 3.0 * epsilon
                    };
                    (exact * factor).max(exact * 1e-3)
                }
                CorruptionMode::ArbitraryPositive => {
                    let u = self.rng.gen_range(-1.0..1.0);
                    exact * 10f64.powf(u)
                }
            }
        } else if self.config.perturbation_mode == PerturbationMode::Exact {
            exact
        } else {
            exact * (1.0 + epsilon * self.rng.gen_range(-1.0..1.0))
        };
        Ok(ResistanceEstimate {
            value,
            epsilon,
            delta,
            corrupted,
        })
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid_parameter("epsilon", "must lie in (0, 1)"))
    }
}

fn check_delta(delta: f64) -> Result<()> {
    if delta > 0.0 && delta < 1.0 {
        Ok(())
    } else {
        Err(Error::invalid_parameter("delta", "must lie in (0, 1)"))
    }
}

fn standard_normal(rng: &mut ChaCha8Rng) -> f64 {
    // Box-Muller; two uniforms per draw keeps the stream simple.
    let u1: f64 = rng.gen_range(f64::MIN_POSITIVE..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (2.0 * std::f64::consts::PI * u2).cos()
}

fn renormalized_step(a: &[f64], dir: &[f64], step: f64) -> Vec<f64> {
    let mut out: Vec<f64> = a.iter().zip(dir).map(|(x, d)| x + step * d).collect();
    let norm = out.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in &mut out {
            *x /= norm;
        }
    }
    out
}

fn l2_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn argmax_where(values: &[f64], keep: impl Fn(usize) -> bool) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (i, &v) in values.iter().enumerate() {
        if !keep(i) {
            continue;
        }
        match best {
            Some(j) if values[j] >= v => {}
            _ => best = Some(i),
        }
    }
    best
}
