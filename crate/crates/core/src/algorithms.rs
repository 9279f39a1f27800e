//! Shortest-path solvers: the classical reference (Dijkstra on the
//! resistance metric), the sample-and-sparsify algorithm `a1`, and the
//! divide-and-conquer algorithm `a2` built on the emulated walk
//! primitives. Both emulated algorithms return the path candidate they
//! assembled together with the step ledger their primitive calls charged.

use std::collections::HashMap;

use crate::emul::{CostLedger, EmulationConfig, Emulator, GroupId};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, PathWitness};

/// Relative tolerance for comparing path lengths.
const LENGTH_TOL: f64 = 1e-12;

/// Parameters for the sparsification algorithm. `epsilon` is the
/// preparation accuracy and defaults to `1/sqrt(8 l_hat)`; `beta`
/// multiplies the expected coupon-collector sample count.
#[derive(Debug, Clone)]
pub struct A1Params {
    pub l_hat: f64,
    pub beta: f64,
    pub epsilon: f64,
    /// Charge all preparations into one parallel group.
    pub parallel: bool,
}

impl A1Params {
    pub fn new(l_hat: f64) -> Result<Self> {
        if l_hat.is_nan() || l_hat < 1.0 || !l_hat.is_finite() {
            return Err(Error::invalid_parameter("l_hat", "must be finite and >= 1"));
        }
        Ok(A1Params {
            l_hat,
            beta: 3.0,
            epsilon: 1.0 / (8.0 * l_hat).sqrt(),
            parallel: false,
        })
    }

    fn validate(&self) -> Result<()> {
        if self.l_hat.is_nan() || self.l_hat < 1.0 {
            return Err(Error::invalid_parameter("l_hat", "must be >= 1"));
        }
        if self.beta.is_nan() || self.beta < 1.0 {
            return Err(Error::invalid_parameter("beta", "must be >= 1"));
        }
        if self.epsilon.is_nan() || self.epsilon <= 0.0 || self.epsilon >= 1.0 {
            return Err(Error::invalid_parameter("epsilon", "must lie in (0, 1)"));
        }
        Ok(())
    }

    /// Number of flow-state samples drawn.
    pub fn sample_count(&self) -> usize {
        (self.beta * 8.0 * self.l_hat * (self.l_hat + 2.0).ln()).ceil() as usize
    }
}

/// Parameters for the divide-and-conquer algorithm. Derived quantities
/// are clamped into valid ranges: the per-round sample accuracy into
/// `(0, 0.9]`, the removal-estimate accuracy `alpha/2` into
/// `[1e-3, 0.5]`, and both failure probabilities into `(0, 0.5]`.
#[derive(Debug, Clone)]
pub struct A2Params {
    pub l_hat: f64,
    /// Margin by which detour resistances exceed the path resistance.
    pub alpha: f64,
    pub k_const: f64,
    pub eps_const: f64,
    pub delta1: f64,
    pub delta2: f64,
    /// Account rounds at the same recursion depth as concurrent.
    pub parallel: bool,
}

impl A2Params {
    pub fn new(l_hat: f64, alpha: f64) -> Result<Self> {
        if l_hat.is_nan() || l_hat < 1.0 || !l_hat.is_finite() {
            return Err(Error::invalid_parameter("l_hat", "must be finite and >= 1"));
        }
        if alpha.is_nan() || alpha <= 0.0 {
            return Err(Error::invalid_parameter("alpha", "must be > 0"));
        }
        let log_l = (l_hat + 2.0).ln();
        Ok(A2Params {
            l_hat,
            alpha,
            k_const: 6.0,
            eps_const: 1.0,
            delta1: clamp_delta(1.0 / (l_hat * log_l)),
            delta2: clamp_delta(1.0 / l_hat),
            parallel: false,
        })
    }

    fn validate(&self) -> Result<()> {
        if self.l_hat.is_nan() || self.l_hat < 1.0 {
            return Err(Error::invalid_parameter("l_hat", "must be >= 1"));
        }
        if self.alpha.is_nan() || self.alpha <= 0.0 {
            return Err(Error::invalid_parameter("alpha", "must be > 0"));
        }
        if self.k_const.is_nan()
            || self.k_const <= 0.0
            || self.eps_const.is_nan()
            || self.eps_const <= 0.0
        {
            return Err(Error::invalid_parameter("k_const", "constants must be > 0"));
        }
        for (name, d) in [("delta1", self.delta1), ("delta2", self.delta2)] {
            if d.is_nan() || d <= 0.0 || d >= 1.0 {
                return Err(Error::invalid_parameter(name, "must lie in (0, 1)"));
            }
        }
        Ok(())
    }

    pub fn samples_per_round(&self) -> usize {
        (self.k_const * (self.l_hat + 2.0).ln()).ceil().max(1.0) as usize
    }

    pub fn sample_epsilon(&self) -> f64 {
        (self.eps_const / (self.l_hat + 2.0).ln()).clamp(1e-6, 0.9)
    }

    pub fn removal_epsilon(&self) -> f64 {
        (self.alpha / 2.0).clamp(1e-3, 0.5)
    }

    pub fn depth_cap(&self) -> usize {
        (4.0 * self.l_hat).ceil() as usize
    }

    /// Hard cap on the total number of rounds; healthy runs stay near
    /// `2 l`, the cap only converts runaway noise into a reported failure.
    pub fn round_cap(&self) -> usize {
        (6.0 * self.l_hat * (self.l_hat + 2.0).ln()).ceil() as usize
    }
}

fn clamp_delta(d: f64) -> f64 {
    d.clamp(1e-9, 0.5)
}

/// One divide-and-conquer round, kept for instrumentation.
#[derive(Debug, Clone)]
pub struct RoundRecord {
    pub x: usize,
    pub y: usize,
    /// Edge that won the removal-resistance comparison.
    pub chosen: Option<EdgeId>,
    /// Whether the round resolved its subproblem to a single edge.
    pub resolved: bool,
}

/// Result of one algorithm run.
#[derive(Debug, Clone)]
pub struct RunResult {
    pub path: Option<PathWitness>,
    pub ledger: CostLedger,
    pub success: bool,
    pub rounds: usize,
    pub round_log: Vec<RoundRecord>,
}

/// Shortest `s -> t` path under the resistance metric (`r_e = 1/w_e`,
/// hop count on unweighted graphs). Ties are broken toward the
/// lexicographically smallest vertex sequence.
pub fn dijkstra(g: &Graph, s: usize, t: usize) -> Result<PathWitness> {
    g.check_vertex(s)?;
    g.check_vertex(t)?;
    if s == t {
        return PathWitness::from_vertices(g, &[s]);
    }
    let dist_to_t = resistance_distances(g, t);
    if dist_to_t[s].is_infinite() {
        return Err(Error::Disconnected { s, t });
    }
    // Greedy descent: always take the smallest neighbor that lies on some
    // shortest path, which yields the lexicographically smallest witness.
    let mut vertices = vec![s];
    let mut u = s;
    for _ in 0..g.vertex_count() {
        if u == t {
            break;
        }
        let mut next: Option<usize> = None;
        for &(v, e) in g.neighbors(u)? {
            let tol = LENGTH_TOL * dist_to_t[u].max(1.0);
            if (g.resistance(e) + dist_to_t[v] - dist_to_t[u]).abs() <= tol {
                next = Some(match next {
                    Some(b) => b.min(v),
                    None => v,
                });
            }
        }
        u = next.expect("descent stalled on a reachable vertex");
        vertices.push(u);
    }
    PathWitness::from_vertices(g, &vertices)
}

/// Shortest path plus a uniqueness flag, from counting shortest paths over
/// the tight-edge relaxation graph.
pub fn shortest_path_with_uniqueness(g: &Graph, s: usize, t: usize) -> Result<(PathWitness, bool)> {
    let witness = dijkstra(g, s, t)?;
    if s == t {
        return Ok((witness, true));
    }
    let dist = resistance_distances(g, s);
    let mut order: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| dist[v].is_finite())
        .collect();
    order.sort_by(|&a, &b| dist[a].partial_cmp(&dist[b]).unwrap());
    let mut count = vec![0u64; g.vertex_count()];
    count[s] = 1;
    for &v in &order {
        if v == s {
            continue;
        }
        let mut acc: u64 = 0;
        for &(u, e) in g.neighbors(v)? {
            let tol = LENGTH_TOL * dist[v].max(1.0);
            if dist[u].is_finite() && (dist[u] + g.resistance(e) - dist[v]).abs() <= tol {
                acc = acc.saturating_add(count[u]);
            }
        }
        count[v] = acc;
    }
    Ok((witness, count[t] == 1))
}

/// Resistance-metric distances from `source` to every vertex.
pub fn resistance_distances(g: &Graph, source: usize) -> Vec<f64> {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;

    #[derive(PartialEq)]
    struct Entry(f64, usize);
    impl Eq for Entry {}
    impl PartialOrd for Entry {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Entry {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            self.0
                .partial_cmp(&other.0)
                .unwrap()
                .then(self.1.cmp(&other.1))
        }
    }

    let mut dist = vec![f64::INFINITY; g.vertex_count()];
    let mut heap = BinaryHeap::new();
    dist[source] = 0.0;
    heap.push(Reverse(Entry(0.0, source)));
    while let Some(Reverse(Entry(d, u))) = heap.pop() {
        if d > dist[u] {
            continue;
        }
        for &(v, e) in g.neighbors(u).expect("vertex in range") {
            let nd = d + g.resistance(e);
            if nd < dist[v] {
                dist[v] = nd;
                heap.push(Reverse(Entry(nd, v)));
            }
        }
    }
    dist
}

/// True when `p` is a simple `s -> t` path of `g` with a consistent
/// resistance length.
pub fn validate_path(g: &Graph, p: &PathWitness, s: usize, t: usize) -> bool {
    p.validate(g) && p.source() == s && p.target() == t
}

/// Expected samples to collect every element of a `set_size`-element set
/// when each element is seen with probability at least `p_min` per draw:
/// `(1/p_min) * H(set_size)`.
///
/// ```
/// use flowpath::coupon_collector_bound;
///
/// assert_eq!(coupon_collector_bound(1, 1.0).unwrap(), 1.0);
/// let b = coupon_collector_bound(3, 0.5).unwrap();
/// assert!((b - 11.0 / 3.0).abs() < 1e-12); // 2 * (1 + 1/2 + 1/3)
/// ```
pub fn coupon_collector_bound(set_size: usize, p_min: f64) -> Result<f64> {
    if set_size == 0 {
        return Err(Error::invalid_parameter("set_size", "must be positive"));
    }
    if p_min.is_nan() || p_min <= 0.0 || p_min > 1.0 {
        return Err(Error::invalid_parameter("p_min", "must lie in (0, 1]"));
    }
    let harmonic: f64 = (1..=set_size).map(|k| 1.0 / k as f64).sum();
    Ok(harmonic / p_min)
}

/// Sample-and-sparsify: draw enough flow-state samples to see every edge
/// of the shortest path with good probability, then run the classical
/// solver on the sampled subgraph.
pub fn algorithm_a1(
    g: &Graph,
    s: usize,
    t: usize,
    params: &A1Params,
    config: &EmulationConfig,
) -> Result<RunResult> {
    let mut emul = Emulator::new(config.clone())?;
    algorithm_a1_with(&mut emul, g, s, t, params)
}

pub fn algorithm_a1_with(
    emul: &mut Emulator,
    g: &Graph,
    s: usize,
    t: usize,
    params: &A1Params,
) -> Result<RunResult> {
    params.validate()?;
    if s == t {
        return Err(Error::DegeneratePair(s));
    }
    let mut ledger = CostLedger::new();
    let n_samples = params.sample_count();
    let shared_group = if params.parallel {
        Some(ledger.begin_parallel_group())
    } else {
        None
    };

    let mut sampled: Vec<EdgeId> = Vec::new();
    let mut seen = vec![false; g.edge_capacity()];
    for _ in 0..n_samples {
        let group = shared_group.unwrap_or_else(|| ledger.begin_parallel_group());
        let e = emul.sample_flow_edge(g, s, t, params.epsilon, &mut ledger, group)?;
        if !seen[e.index()] {
            seen[e.index()] = true;
            sampled.push(e);
        }
    }

    // Classical post-processing on the sparsified graph. Vertex ids are
    // shared with the parent, so the witness can be rebuilt against `g`.
    let edges: Vec<(usize, usize, f64)> = sampled
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (u, v, g.weight(e))
        })
        .collect();
    let sparse = Graph::new(g.vertex_count(), &edges)?;

    let (path, success) = match dijkstra(&sparse, s, t) {
        Ok(w) => {
            let witness = PathWitness::from_vertices(g, &w.vertices)?;
            let ok = validate_path(g, &witness, s, t) && within_bound(&witness, params.l_hat);
            (Some(witness), ok)
        }
        Err(Error::Disconnected { .. }) => (None, false),
        Err(e) => return Err(e),
    };

    Ok(RunResult {
        path,
        ledger,
        success,
        rounds: 1,
        round_log: Vec::new(),
    })
}

fn within_bound(w: &PathWitness, l_hat: f64) -> bool {
    w.resistance_length <= l_hat * (1.0 + 1e-9) + 1e-9
}

/// Divide-and-conquer: per subproblem, sample flow-state edges, keep the
/// sampled edge whose removal maximizes the estimated resistance, and
/// split at one of its endpoints until single edges remain.
///
/// ```
/// use flowpath::{algorithm_a2, A2Params, EmulationConfig, Graph};
///
/// let g = Graph::from_edge_list("0 2 1\n0 1 1\n1 2 1").unwrap();
/// let params = A2Params::new(1.0, 0.9).unwrap();
/// let run = algorithm_a2(&g, 0, 2, &params, &EmulationConfig::exact(5)).unwrap();
/// assert!(run.success);
/// assert_eq!(run.path.unwrap().vertices, vec![0, 2]);
/// assert!(run.ledger.parallel_depth() <= run.ledger.total_steps());
/// ```
pub fn algorithm_a2(
    g: &Graph,
    s: usize,
    t: usize,
    params: &A2Params,
    config: &EmulationConfig,
) -> Result<RunResult> {
    let mut emul = Emulator::new(config.clone())?;
    algorithm_a2_with(&mut emul, g, s, t, params)
}

struct A2State<'a> {
    params: &'a A2Params,
    ledger: CostLedger,
    log: Vec<RoundRecord>,
    /// Shared parallel groups per (depth, phase) when parallel mode is on.
    groups: HashMap<(usize, u8), GroupId>,
    rounds_left: usize,
}

impl A2State<'_> {
    fn group(&mut self, depth: usize, phase: u8) -> GroupId {
        if self.params.parallel {
            let ledger = &mut self.ledger;
            *self
                .groups
                .entry((depth, phase))
                .or_insert_with(|| ledger.begin_parallel_group())
        } else {
            self.ledger.begin_parallel_group()
        }
    }
}

pub fn algorithm_a2_with(
    emul: &mut Emulator,
    g: &Graph,
    s: usize,
    t: usize,
    params: &A2Params,
) -> Result<RunResult> {
    params.validate()?;
    if s == t {
        return Err(Error::DegeneratePair(s));
    }
    if !g.is_connected(s, t)? {
        return Err(Error::Disconnected { s, t });
    }

    let mut state = A2State {
        params,
        ledger: CostLedger::new(),
        log: Vec::new(),
        groups: HashMap::new(),
        rounds_left: params.round_cap(),
    };

    let assembled = solve_segment(emul, g, &mut state, s, t, params.l_hat, 0)?;

    let (path, success) = match assembled {
        Some(vertices) => match PathWitness::from_vertices(g, &vertices) {
            Ok(w) => {
                let ok = validate_path(g, &w, s, t) && within_bound(&w, params.l_hat);
                (Some(w), ok)
            }
            // Concatenation produced a non-simple walk: a failed trial.
            Err(_) => (None, false),
        },
        None => (None, false),
    };

    Ok(RunResult {
        path,
        success,
        rounds: state.log.len(),
        round_log: state.log,
        ledger: state.ledger,
    })
}

/// Resolve the segment between `x` and `y`; returns the vertex sequence
/// from `x` to `y` inclusive, or `None` when a cap was exceeded.
fn solve_segment(
    emul: &mut Emulator,
    g: &Graph,
    state: &mut A2State,
    x: usize,
    y: usize,
    r_hat: f64,
    depth: usize,
) -> Result<Option<Vec<usize>>> {
    let params = state.params;
    if x == y {
        return Ok(Some(vec![x]));
    }
    if depth > params.depth_cap() || state.rounds_left == 0 {
        return Ok(None);
    }
    state.rounds_left -= 1;

    let k = params.samples_per_round();
    let eps_sample = params.sample_epsilon();
    let eps_removal = params.removal_epsilon();

    // Step 2: sample candidate edges from the x->y flow state.
    let sample_group = state.group(depth, 0);
    let mut candidates: Vec<EdgeId> = Vec::with_capacity(k);
    for _ in 0..k {
        let e = emul.sample_flow_edge(g, x, y, eps_sample, &mut state.ledger, sample_group)?;
        if !candidates.contains(&e) {
            candidates.push(e);
        }
    }

    // Step 3: estimate the x-y resistance with each candidate removed and
    // keep the maximizer; disconnections beat every finite estimate and
    // ties go to the smaller edge id.
    let estimate_group = state.group(depth, 1);
    let mut best: Option<(EdgeId, f64)> = None;
    let mut estimates: HashMap<EdgeId, f64> = HashMap::new();
    for &e in &candidates {
        let est = emul.estimate_removed_resistance(
            g,
            e,
            x,
            y,
            eps_removal,
            params.delta1,
            Some(r_hat),
            &mut state.ledger,
            estimate_group,
        )?;
        estimates.insert(e, est.value);
        best = match best {
            None => Some((e, est.value)),
            Some((be, bv)) => {
                if est.value > bv || (est.value == bv && e < be) {
                    Some((e, est.value))
                } else {
                    Some((be, bv))
                }
            }
        };
    }
    let (star, _) = best.expect("at least one sampled edge");
    let (a, b) = g.endpoints(star);

    // Step 4a: the winner joins the endpoints, the segment is one edge.
    if (a.min(b), a.max(b)) == (x.min(y), x.max(y)) {
        state.log.push(RoundRecord {
            x,
            y,
            chosen: Some(star),
            resolved: true,
        });
        return Ok(Some(vec![x, y]));
    }

    // Step 4b: adjacent endpoints whose direct edge shows the removal
    // signature of a path edge resolve immediately; without this check a
    // round whose samples all missed the path could recurse forever on a
    // single-edge segment.
    if let Some(direct) = g.edge_between(x, y) {
        let value = match estimates.get(&direct) {
            Some(&v) => v,
            None => {
                let est = emul.estimate_removed_resistance(
                    g,
                    direct,
                    x,
                    y,
                    eps_removal,
                    params.delta1,
                    Some(r_hat),
                    &mut state.ledger,
                    estimate_group,
                )?;
                est.value
            }
        };
        if value > (1.0 + params.alpha / 2.0) * g.resistance(direct) {
            state.log.push(RoundRecord {
                x,
                y,
                chosen: Some(direct),
                resolved: true,
            });
            return Ok(Some(vec![x, y]));
        }
    }

    state.log.push(RoundRecord {
        x,
        y,
        chosen: Some(star),
        resolved: false,
    });

    // Step 4c: split at a random endpoint of the winner. An endpoint that
    // coincides with x or y is excluded: splitting there leaves an empty
    // child plus this very subproblem again, so it cannot make progress.
    // Both endpoints coinciding is the resolved case handled above.
    let a_excluded = a == x || a == y;
    let b_excluded = b == x || b == y;
    let v = if a_excluded {
        b
    } else if b_excluded || emul.random_bit() {
        a
    } else {
        b
    };
    let child_group = state.group(depth, 2);
    let bound_for = |est_value: f64| 2.0 * 1.5 * est_value;

    let left = emul.estimate_resistance_bounded(
        g,
        x,
        v,
        0.5,
        params.delta2,
        Some(r_hat),
        &mut state.ledger,
        child_group,
    )?;
    let right = emul.estimate_resistance_bounded(
        g,
        v,
        y,
        0.5,
        params.delta2,
        Some(r_hat),
        &mut state.ledger,
        child_group,
    )?;
    let (left_bound, right_bound) = (bound_for(left.value), bound_for(right.value));

    let left = solve_segment(emul, g, state, x, v, left_bound, depth + 1)?;
    let Some(mut left) = left else {
        return Ok(None);
    };
    let right = solve_segment(emul, g, state, v, y, right_bound, depth + 1)?;
    let Some(right) = right else {
        return Ok(None);
    };
    left.extend_from_slice(&right[1..]);
    Ok(Some(left))
}
