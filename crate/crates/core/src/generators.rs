//! Seeded instance families for tests and benchmarks. Every generated
//! instance is run through the condition checker before it is handed out,
//! so corpus labels are always ground truth.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conditions::{check_condition_edges, ConditionReport};
use crate::electric::effective_resistance;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Deterministic description of one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceSpec {
    /// Plain path of `l` unit edges; the condition holds trivially.
    Path { l: usize },
    /// An `l`-edge path plus `copies` vertex-disjoint detours of
    /// `detour_len` unit edges each. `detour_len == l` gives a tie
    /// control that fails the condition.
    ParallelDetour {
        l: usize,
        detour_len: usize,
        copies: usize,
        seed: u64,
    },
    /// Random cactus whose cycles all have odd length.
    CactusOdd { n: usize, seed: u64 },
    /// Seven-vertex backbone with a long side gadget between the source
    /// side vertices, a pendant blob, and a detour bridging the last
    /// backbone edge.
    Figure1 {
        g1_size: usize,
        g2_size: usize,
        g3_len: usize,
        seed: u64,
    },
    /// Rejection-sampled random graph conditioned on the checker holding
    /// and the shortest path length landing in `[l, 2l]`.
    RandomCondition1 {
        n: usize,
        m: usize,
        l: usize,
        seed: u64,
        max_attempts: usize,
    },
    /// Unconditioned random connected graph; usually a failing control.
    ErdosControl { n: usize, m: usize, seed: u64 },
}

impl InstanceSpec {
    pub fn family(&self) -> &'static str {
        match self {
            InstanceSpec::Path { .. } => "path",
            InstanceSpec::ParallelDetour { .. } => "parallel-detour",
            InstanceSpec::CactusOdd { .. } => "cactus-odd",
            InstanceSpec::Figure1 { .. } => "figure1",
            InstanceSpec::RandomCondition1 { .. } => "random-condition1",
            InstanceSpec::ErdosControl { .. } => "erdos-control",
        }
    }

    pub fn generate(&self) -> Result<Instance> {
        let (graph, s, t) = match *self {
            InstanceSpec::Path { l } => gen_path(l)?,
            InstanceSpec::ParallelDetour {
                l,
                detour_len,
                copies,
                seed,
            } => gen_parallel_detour(l, detour_len, copies, seed)?,
            InstanceSpec::CactusOdd { n, seed } => gen_cactus_odd(n, seed)?,
            InstanceSpec::Figure1 {
                g1_size,
                g2_size,
                g3_len,
                seed,
            } => gen_figure1(seed, g1_size, g2_size, g3_len)?,
            InstanceSpec::RandomCondition1 {
                n,
                m,
                l,
                seed,
                max_attempts,
            } => gen_random_condition1(n, m, l, seed, max_attempts)?,
            InstanceSpec::ErdosControl { n, m, seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let g = random_connected_graph(n, m, &mut rng)?;
                let s = rng.gen_range(0..n);
                let mut t = rng.gen_range(0..n);
                while t == s {
                    t = rng.gen_range(0..n);
                }
                (g, s, t)
            }
        };
        let report = check_condition_edges(&graph, s, t)?;
        if let InstanceSpec::RandomCondition1 { max_attempts, .. } = self {
            if !report.holds_condition1 {
                return Err(Error::GeneratorExhausted {
                    attempts: *max_attempts,
                    reason: "internal: accepted instance fails recheck".into(),
                });
            }
        }
        Ok(Instance {
            spec: self.clone(),
            graph,
            s,
            t,
            report,
            weighted: false,
        })
    }

    fn param_lines(&self) -> String {
        match *self {
            InstanceSpec::Path { l } => format!("l: {l}\n"),
            InstanceSpec::ParallelDetour {
                l,
                detour_len,
                copies,
                seed,
            } => format!("l: {l}\ndetour_len: {detour_len}\ncopies: {copies}\nseed: {seed}\n"),
            InstanceSpec::CactusOdd { n, seed } => format!("n: {n}\nseed: {seed}\n"),
            InstanceSpec::Figure1 {
                g1_size,
                g2_size,
                g3_len,
                seed,
            } => {
                format!("g1_size: {g1_size}\ng2_size: {g2_size}\ng3_len: {g3_len}\nseed: {seed}\n")
            }
            InstanceSpec::RandomCondition1 {
                n,
                m,
                l,
                seed,
                max_attempts,
            } => format!("n: {n}\nm: {m}\nl: {l}\nseed: {seed}\nmax_attempts: {max_attempts}\n"),
            InstanceSpec::ErdosControl { n, m, seed } => format!("n: {n}\nm: {m}\nseed: {seed}\n"),
        }
    }
}

/// A generated instance together with its checker report.
#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub graph: Graph,
    pub s: usize,
    pub t: usize,
    pub report: ConditionReport,
    pub weighted: bool,
}

impl Instance {
    pub fn holds(&self) -> bool {
        self.report.holds_condition1
    }

    pub fn label(&self) -> &'static str {
        if self.holds() {
            "holds"
        } else {
            "control"
        }
    }

    /// Reweighted copy: every weight scaled log-uniformly in `[1/4, 4]`,
    /// then re-verified so the label stays truthful.
    pub fn weighted_variant(&self, seed: u64) -> Result<Instance> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let edges: Vec<(usize, usize, f64)> = self
            .graph
            .edge_ids()
            .map(|e| {
                let (u, v) = self.graph.endpoints(e);
                let factor = 4f64.powf(rng.gen_range(-1.0..1.0));
                (u, v, self.graph.weight(e) * factor)
            })
            .collect();
        let graph = Graph::new(self.graph.vertex_count(), &edges)?;
        let report = check_condition_edges(&graph, self.s, self.t)?;
        Ok(Instance {
            spec: self.spec.clone(),
            graph,
            s: self.s,
            t: self.t,
            report,
            weighted: true,
        })
    }

    /// Key/value manifest block describing the instance.
    pub fn manifest_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("family: {}\n", self.spec.family()));
        out.push_str(&self.spec.param_lines());
        out.push_str(&format!("weighted: {}\n", self.weighted));
        out.push_str(&format!("vertices: {}\n", self.graph.vertex_count()));
        out.push_str(&format!("edges: {}\n", self.graph.edge_count()));
        out.push_str(&format!("s: {}\n", self.s));
        out.push_str(&format!("t: {}\n", self.t));
        out.push_str(&format!("label: {}\n", self.label()));
        out.push_str(&self.report.to_text());
        out
    }
}

fn gen_path(l: usize) -> Result<(Graph, usize, usize)> {
    if l < 1 {
        return Err(Error::invalid_parameter(
            "l",
            "path needs at least one edge",
        ));
    }
    let edges: Vec<(usize, usize, f64)> = (0..l).map(|i| (i, i + 1, 1.0)).collect();
    Ok((Graph::new(l + 1, &edges)?, 0, l))
}

/// Path of `l` unit edges between `s` and `t` plus `copies` disjoint
/// detours of `detour_len` unit edges.
pub fn gen_parallel_detour(
    l: usize,
    detour_len: usize,
    copies: usize,
    _seed: u64,
) -> Result<(Graph, usize, usize)> {
    if l < 1 {
        return Err(Error::invalid_parameter("l", "must be >= 1"));
    }
    if detour_len < l {
        return Err(Error::invalid_parameter(
            "detour_len",
            "detours shorter than the path would replace it as shortest",
        ));
    }
    if detour_len < 2 {
        return Err(Error::invalid_parameter(
            "detour_len",
            "a length-one detour would duplicate a path edge",
        ));
    }
    let mut edges: Vec<(usize, usize, f64)> = (0..l).map(|i| (i, i + 1, 1.0)).collect();
    let mut next = l + 1;
    for _ in 0..copies {
        let mut prev = 0;
        for step in 0..detour_len {
            let node = if step + 1 == detour_len { l } else { next };
            edges.push((prev.min(node), prev.max(node), 1.0));
            prev = node;
            if step + 1 != detour_len {
                next += 1;
            }
        }
    }
    Ok((Graph::new(next, &edges)?, 0, l))
}

/// Random cactus with only odd cycles (trees count): repeatedly attach a
/// pendant edge or a 3- or 5-cycle at a random existing vertex.
///
/// The vertex pair is rejection-sampled until the condition checker
/// confirms it. Short pairs in an odd cactus always qualify, but long
/// geodesics that thread many cycles can fail: every traversed cycle
/// discounts the graph resistance below the plain path length while the
/// path resistance keeps full weight, so a single edge removal no longer
/// costs enough. Adjacent pairs are the guaranteed fallback.
pub fn gen_cactus_odd(n: usize, seed: u64) -> Result<(Graph, usize, usize)> {
    if n < 2 {
        return Err(Error::invalid_parameter("n", "need at least two vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut count = 1usize;
    while count < n {
        let anchor = rng.gen_range(0..count);
        let remaining = n - count;
        let cycle = if remaining >= 4 && rng.gen_bool(0.3) {
            5
        } else if remaining >= 2 && rng.gen_bool(0.6) {
            3
        } else {
            0
        };
        if cycle > 0 {
            // anchor -> fresh chain -> anchor closes an odd cycle.
            let mut prev = anchor;
            for i in 0..cycle - 1 {
                let node = count + i;
                edges.push((prev.min(node), prev.max(node), 1.0));
                prev = node;
            }
            edges.push((anchor.min(prev), anchor.max(prev), 1.0));
            count += cycle - 1;
        } else {
            edges.push((anchor, count, 1.0));
            count += 1;
        }
    }
    let g = Graph::new(count, &edges)?;

    // Prefer pairs at distance >= 2; fall back to any confirmed pair.
    for min_dist in [2.0, 1.0] {
        for _ in 0..200 {
            let s = rng.gen_range(0..count);
            let mut t = rng.gen_range(0..count);
            while t == s {
                t = rng.gen_range(0..count);
            }
            let dist = crate::algorithms::resistance_distances(&g, s);
            if dist[t] < min_dist {
                continue;
            }
            if check_condition_edges(&g, s, t)?.holds_condition1 {
                return Ok((g, s, t));
            }
        }
    }
    Err(Error::GeneratorExhausted {
        attempts: 400,
        reason: format!("no condition-satisfying pair in cactus n={n} seed={seed}"),
    })
}

/// Backbone `s-1-2-3-4-5-t` with three gadgets: a side path with local
/// shortcuts between `s` and `2` (strictly longer than the backbone
/// segment), an arbitrary pendant blob at `2`, and a `g3_len`-edge path
/// bridging `4` and `5` in parallel with the backbone edge. The bridge
/// gadget must be slower than the edge it parallels; violating parameters
/// are rejected after bounded retries.
pub fn gen_figure1(
    seed: u64,
    g1_size: usize,
    g2_size: usize,
    g3_len: usize,
) -> Result<(Graph, usize, usize)> {
    const RETRIES: usize = 20;
    for attempt in 0..RETRIES {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(attempt as u64 * 0x9e37));
        match build_figure1(&mut rng, g1_size, g2_size, g3_len) {
            Ok((g, s, t)) => {
                // Gadget inequality: the bridge detour must not undercut
                // the edge it parallels.
                let e45 = g.edge_between(4, 5).expect("backbone edge");
                let local = effective_resistance(&g.remove_edge(e45)?, 4, 5)?;
                if local <= g.resistance(e45) {
                    continue;
                }
                let report = check_condition_edges(&g, s, t)?;
                if report.holds_condition1 {
                    return Ok((g, s, t));
                }
            }
            Err(Error::InvalidParameter { .. }) => break,
            Err(e) => return Err(e),
        }
    }
    Err(Error::GeneratorExhausted {
        attempts: RETRIES,
        reason: "no figure1 gadget satisfied the resistance conditions".into(),
    })
}

fn build_figure1(
    rng: &mut ChaCha8Rng,
    g1_size: usize,
    g2_size: usize,
    g3_len: usize,
) -> Result<(Graph, usize, usize)> {
    if g3_len < 2 {
        return Err(Error::invalid_parameter(
            "g3_len",
            "bridge detour must be at least two edges",
        ));
    }
    let (s, t) = (0usize, 6usize);
    let mut edges: Vec<(usize, usize, f64)> = (0..6).map(|i| (i, i + 1, 1.0)).collect();
    let mut next = 7usize;

    // Side gadget between s and 2: internal path with skip-two shortcuts,
    // so the through resistance stays above the two backbone hops.
    let k1 = g1_size.max(3);
    let g1: Vec<usize> = (0..k1).map(|i| next + i).collect();
    next += k1;
    edges.push((s, g1[0], 1.0));
    for w in g1.windows(2) {
        edges.push((w[0], w[1], 1.0));
    }
    edges.push((2, g1[k1 - 1], 1.0));
    for i in 0..k1.saturating_sub(2) {
        if rng.gen_bool(0.5) {
            edges.push((g1[i], g1[i + 2], 1.0));
        }
    }

    // Pendant blob at 2: attached through a single cut vertex, so its
    // shape is unconstrained.
    if g2_size > 0 {
        let blob: Vec<usize> = (0..g2_size).map(|i| next + i).collect();
        next += g2_size;
        edges.push((2, blob[0], 1.0));
        for w in blob.windows(2) {
            edges.push((w[0], w[1], 1.0));
        }
        for i in 0..blob.len() {
            for j in i + 2..blob.len() {
                if rng.gen_bool(0.3) {
                    edges.push((blob[i], blob[j], 1.0));
                }
            }
        }
    }

    // Bridge detour parallel to edge (4, 5).
    let mut prev = 4usize;
    for step in 0..g3_len {
        let node = if step + 1 == g3_len { 5 } else { next };
        edges.push((prev.min(node), prev.max(node), 1.0));
        prev = node;
        if step + 1 != g3_len {
            next += 1;
        }
    }

    Ok((Graph::new(next, &edges)?, s, t))
}

/// Random connected graph: a uniform random spanning tree skeleton plus
/// random extra edges up to `m`.
pub fn random_connected_graph(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Result<Graph> {
    if n < 2 {
        return Err(Error::invalid_parameter("n", "need at least two vertices"));
    }
    if m + 1 < n {
        return Err(Error::invalid_parameter("m", "need at least n-1 edges"));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::invalid_parameter(
            "m",
            "more edges than vertex pairs",
        ));
    }
    let mut edges: Vec<(usize, usize, f64)> = Vec::with_capacity(m);
    let mut present = std::collections::HashSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v, 1.0));
        present.insert((u, v));
    }
    while edges.len() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let key = (u.min(v), u.max(v));
        if present.insert(key) {
            edges.push((key.0, key.1, 1.0));
        }
    }
    Graph::new(n, &edges)
}

/// Rejection sampler: random connected graphs until the checker holds for
/// a pair whose shortest-path length lands in `[l, 2l]`.
pub fn gen_random_condition1(
    n: usize,
    m: usize,
    l: usize,
    seed: u64,
    max_attempts: usize,
) -> Result<(Graph, usize, usize)> {
    if l < 1 || l + 1 > n {
        return Err(Error::invalid_parameter("l", "need 1 <= l <= n-1"));
    }
    if m + 1 < n {
        return Err(Error::invalid_parameter("m", "need at least n-1 edges"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..max_attempts {
        let g = random_connected_graph(n, m, &mut rng)?;
        let s = rng.gen_range(0..n);
        let dist = crate::algorithms::resistance_distances(&g, s);
        let candidates: Vec<usize> = (0..n)
            .filter(|&v| {
                v != s && dist[v].is_finite() && dist[v] >= l as f64 && dist[v] <= 2.0 * l as f64
            })
            .collect();
        if candidates.is_empty() {
            continue;
        }
        let t = candidates[rng.gen_range(0..candidates.len())];
        let report = check_condition_edges(&g, s, t)?;
        if report.holds_condition1 {
            return Ok((g, s, t));
        }
    }
    Err(Error::GeneratorExhausted {
        attempts: max_attempts,
        reason: format!("no condition-satisfying pair found for n={n} m={m} l={l}"),
    })
}
