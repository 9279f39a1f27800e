//! Structural condition checkers for the path-uniqueness requirement the
//! emulated algorithms rely on, plus verification routines for the flow
//! and resistance inequalities that requirement implies.
//!
//! The central condition: the shortest `s-t` path `P` must beat every
//! `s-t`-connecting subgraph that omits part of `P`, measured in effective
//! resistance. Checking it edge-by-edge (`R_{G\e} > R_P` for every edge of
//! `P`) is equivalent to the full subgraph quantifier by Rayleigh
//! monotonicity; [`check_condition_bruteforce`] certifies that equivalence
//! by enumeration on small instances.
//!
//! Every `verify_*` routine returns a slack that the caller asserts to be
//! nonnegative (within 1e-9); the routines themselves only refuse to run
//! when the condition precheck fails.

use crate::algorithms::shortest_path_with_uniqueness;
use crate::electric::{effective_resistance, flow_state_distribution, solve_flow};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, PathWitness};

/// Ratios within `1 + TIE_TOL` of one count as ties, and ties fail.
const TIE_TOL: f64 = 1e-9;

/// Outcome of the edge-removal condition check for a vertex pair.
#[derive(Debug, Clone)]
pub struct ConditionReport {
    pub holds_condition1: bool,
    /// Largest margin `alpha` such that every path-edge removal satisfies
    /// `R_{G\e} >= (1 + alpha) R_P`; `+inf` when every path edge is a
    /// bridge. Negative or zero margins mean the condition fails.
    pub max_alpha: f64,
    pub shortest_path: PathWitness,
    pub unique_shortest: bool,
    /// The path edge whose removal violates the margin, when one exists.
    pub violating_edge: Option<EdgeId>,
}

impl ConditionReport {
    /// Structured-text rendering used by the CLI.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("holds: {}\n", self.holds_condition1));
        out.push_str(&format!("unique_shortest: {}\n", self.unique_shortest));
        out.push_str(&format!("max_alpha: {}\n", self.max_alpha));
        out.push_str(&format!("r_p: {}\n", self.shortest_path.resistance_length));
        let verts: Vec<String> = self
            .shortest_path
            .vertices
            .iter()
            .map(|v| v.to_string())
            .collect();
        out.push_str(&format!("path: {}\n", verts.join(" ")));
        match self.violating_edge {
            Some(e) => out.push_str(&format!("violating_edge: {}\n", e.index())),
            None => out.push_str("violating_edge: none\n"),
        }
        out
    }
}

/// Edge-removal condition check: compute the shortest path, remove each of
/// its edges in turn, and compare the resulting resistance against the
/// path resistance.
///
/// ```
/// use flowpath::{check_condition_edges, Graph};
///
/// let triangle = Graph::from_edge_list("0 2 1\n0 1 1\n1 2 1").unwrap();
/// let report = check_condition_edges(&triangle, 0, 2).unwrap();
/// assert!(report.holds_condition1);
/// assert!((report.max_alpha - 1.0).abs() < 1e-9); // detour costs twice the edge
///
/// // Two tied routes around a square: uniqueness fails.
/// let square = Graph::from_edge_list("0 1 1\n1 2 1\n2 3 1\n0 3 1").unwrap();
/// assert!(!check_condition_edges(&square, 0, 2).unwrap().holds_condition1);
/// ```
pub fn check_condition_edges(g: &Graph, s: usize, t: usize) -> Result<ConditionReport> {
    let (path, unique) = shortest_path_with_uniqueness(g, s, t)?;
    let r_p = path.resistance_length;
    let mut max_alpha = f64::INFINITY;
    let mut violating: Option<EdgeId> = None;
    for &e in &path.edges {
        let removed = g.remove_edge(e)?;
        let r = effective_resistance(&removed, s, t)?;
        let alpha = r / r_p - 1.0;
        if alpha < max_alpha {
            max_alpha = alpha;
            if alpha <= TIE_TOL {
                violating = Some(e);
            }
        }
    }
    let edge_criterion = max_alpha > TIE_TOL;
    Ok(ConditionReport {
        holds_condition1: edge_criterion && unique,
        max_alpha,
        shortest_path: path,
        unique_shortest: unique,
        violating_edge: if edge_criterion { None } else { violating },
    })
}

/// Exhaustive check of the subgraph form of the condition: every edge
/// subset that keeps `s` and `t` connected while missing part of the
/// shortest path must have strictly larger resistance. Only feasible for
/// small edge counts.
pub fn check_condition_bruteforce(g: &Graph, s: usize, t: usize) -> Result<bool> {
    let m = g.edge_count();
    if m > 14 {
        return Err(Error::InstanceTooLarge(format!(
            "{m} edges exceed the 2^m enumeration limit of 14"
        )));
    }
    let (path, _) = shortest_path_with_uniqueness(g, s, t)?;
    let r_p = path.resistance_length;
    let live: Vec<EdgeId> = g.edge_ids().collect();
    let path_mask: u32 = live
        .iter()
        .enumerate()
        .filter(|(_, e)| path.contains_edge(**e))
        .map(|(i, _)| 1u32 << i)
        .sum();

    for subset in 0u32..(1 << m) {
        if subset & path_mask == path_mask {
            continue; // contains the whole path
        }
        let edges: Vec<(usize, usize, f64)> = live
            .iter()
            .enumerate()
            .filter(|(i, _)| subset >> i & 1 == 1)
            .map(|(_, &e)| {
                let (u, v) = g.endpoints(e);
                (u, v, g.weight(e))
            })
            .collect();
        let x = Graph::new(g.vertex_count(), &edges)?;
        if !x.is_connected(s, t)? {
            continue;
        }
        let r_x = effective_resistance(&x, s, t)?;
        if r_x <= r_p * (1.0 + TIE_TOL) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn require_condition(g: &Graph, s: usize, t: usize) -> Result<ConditionReport> {
    let report = check_condition_edges(g, s, t)?;
    if report.holds_condition1 {
        Ok(report)
    } else {
        Err(Error::ConditionNotVerified(format!(
            "pair ({s}, {t}): max_alpha = {}, unique = {}",
            report.max_alpha, report.unique_shortest
        )))
    }
}

/// Smallest flow magnitude over the shortest-path edges. Under the
/// condition every path edge carries at least half the unit flow.
pub fn verify_flow_half(g: &Graph, s: usize, t: usize) -> Result<f64> {
    let report = require_condition(g, s, t)?;
    let flow = solve_flow(g, s, t)?;
    Ok(report
        .shortest_path
        .edges
        .iter()
        .map(|&e| flow.flow(e).abs())
        .fold(f64::INFINITY, f64::min))
}

/// Per-path-edge sampling slacks `p_e - r_e / (4 R_G)` and the aggregate
/// slack `sum_{e in P} p_e - 1/4` of the flow-state distribution.
pub fn verify_sampling_bounds(g: &Graph, s: usize, t: usize) -> Result<(Vec<f64>, f64)> {
    let report = require_condition(g, s, t)?;
    let flow = solve_flow(g, s, t)?;
    let dist = flow_state_distribution(g, s, t)?;
    let r_g = flow.resistance;
    let mut per_edge = Vec::with_capacity(report.shortest_path.edges.len());
    let mut on_path = 0.0;
    for &e in &report.shortest_path.edges {
        let p = dist.prob(e);
        per_edge.push(p - g.resistance(e) / (4.0 * r_g));
        on_path += p;
    }
    Ok((per_edge, on_path - 0.25))
}

/// True when the weakest path-edge flow still dominates the strongest
/// off-path flow.
pub fn verify_flow_dominance(g: &Graph, s: usize, t: usize) -> Result<bool> {
    let report = require_condition(g, s, t)?;
    let flow = solve_flow(g, s, t)?;
    let mut min_on = f64::INFINITY;
    let mut max_off: f64 = 0.0;
    for e in g.edge_ids() {
        let f = flow.flow(e).abs();
        if report.shortest_path.contains_edge(e) {
            min_on = min_on.min(f);
        } else {
            max_off = max_off.max(f);
        }
    }
    Ok(min_on >= max_off - 1e-9)
}

/// Slack `Pr(e in X) - R_G / R_X` for a subgraph given as an edge subset.
/// The subset must keep `s` and `t` connected.
pub fn verify_subgraph_probability(
    g: &Graph,
    x_edges: &[EdgeId],
    s: usize,
    t: usize,
) -> Result<f64> {
    for &e in x_edges {
        if !g.contains_edge(e) {
            return Err(Error::InvalidEdge(e.index()));
        }
    }
    let edges: Vec<(usize, usize, f64)> = x_edges
        .iter()
        .map(|&e| {
            let (u, v) = g.endpoints(e);
            (u, v, g.weight(e))
        })
        .collect();
    let x = Graph::new(g.vertex_count(), &edges)?;
    if !x.is_connected(s, t)? {
        return Err(Error::Disconnected { s, t });
    }
    let r_g = effective_resistance(g, s, t)?;
    let r_x = effective_resistance(&x, s, t)?;
    let dist = flow_state_distribution(g, s, t)?;
    let mass: f64 = x_edges.iter().map(|&e| dist.prob(e)).sum();
    Ok(mass - r_g / r_x)
}

/// Resistance decomposition along the path: from the removal potentials
/// of each path edge, build the induced back-flow `q_i` through the edge,
/// weight edges by `1/q_i`, and report the slack of
/// `1/R_G <= 1/E[R_{G\e}] + 1/R_P` together with the `q_i` values
/// (each of which should be at least one).
///
/// When some path edge is a bridge the inequality is vacuous and the
/// slack is `+inf` with no `q` values.
pub fn verify_resistance_decomposition(g: &Graph, s: usize, t: usize) -> Result<(f64, Vec<f64>)> {
    let report = require_condition(g, s, t)?;
    let path = &report.shortest_path;
    let r_p = path.resistance_length;
    let r_g = effective_resistance(g, s, t)?;

    let mut removal_r = Vec::with_capacity(path.edges.len());
    let mut q = Vec::with_capacity(path.edges.len());
    for (i, &e) in path.edges.iter().enumerate() {
        let removed = g.remove_edge(e)?;
        let r = effective_resistance(&removed, s, t)?;
        if r.is_infinite() {
            return Ok((f64::INFINITY, Vec::new()));
        }
        removal_r.push(r);
        let flow = solve_flow(&removed, s, t)?;
        let (a, b) = (path.vertices[i], path.vertices[i + 1]);
        q.push((flow.potentials[a] - flow.potentials[b]) * g.weight(e));
    }

    let inv_q: Vec<f64> = q.iter().map(|qi| 1.0 / qi).collect();
    let z: f64 = inv_q.iter().sum();
    let expectation: f64 = inv_q.iter().zip(&removal_r).map(|(w, r)| w / z * r).sum();
    let slack = 1.0 / expectation + 1.0 / r_p - 1.0 / r_g;
    Ok((slack, q))
}

/// Slack of `R_G >= R_P / 2`.
pub fn verify_rg_half_rp(g: &Graph, s: usize, t: usize) -> Result<f64> {
    let report = require_condition(g, s, t)?;
    let r_g = effective_resistance(g, s, t)?;
    Ok(r_g - report.shortest_path.resistance_length / 2.0)
}

/// The condition margin is inherited by subpaths: the margin measured
/// between two path vertices `x`, `y` is at least the margin of the whole
/// pair. Returns `alpha(x, y) - alpha(s, t)`; bridges on the subpath give
/// `+inf`.
pub fn verify_subpath_inheritance(
    g: &Graph,
    s: usize,
    t: usize,
    x: usize,
    y: usize,
) -> Result<f64> {
    let report = require_condition(g, s, t)?;
    let path = &report.shortest_path;
    let px = path.vertices.iter().position(|&v| v == x);
    let py = path.vertices.iter().position(|&v| v == y);
    let (px, py) = match (px, py) {
        (Some(a), Some(b)) if a < b => (a, b),
        (Some(a), Some(b)) if a == b => {
            return Err(Error::invalid_parameter(
                "x,y",
                "subpath endpoints coincide",
            ))
        }
        _ => {
            return Err(Error::invalid_parameter(
                "x,y",
                "both endpoints must lie on the shortest path, in order",
            ))
        }
    };

    let sub_edges = &path.edges[px..py];
    let r_sub: f64 = sub_edges.iter().map(|&e| g.resistance(e)).sum();
    let mut alpha_xy = f64::INFINITY;
    for &e in sub_edges {
        let removed = g.remove_edge(e)?;
        let r = effective_resistance(&removed, x, y)?;
        alpha_xy = alpha_xy.min(r / r_sub - 1.0);
    }
    if alpha_xy.is_infinite() {
        return Ok(f64::INFINITY);
    }
    Ok(alpha_xy - report.max_alpha)
}
