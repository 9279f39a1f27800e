//! Exact electric-flow computations on resistor networks.
//!
//! The unit `s -> t` electric flow is obtained from a grounded Laplacian
//! solve: potentials satisfy `L phi = chi_s - chi_t`, flows follow from
//! Ohm's law `f_uv = (phi_u - phi_v) * w_uv`, and the effective resistance
//! is the potential drop `phi_s - phi_t`, which equals the flow energy.
//!
//! Graphs up to [`SolverConfig::dense_cutoff`] vertices are solved with a
//! dense Cholesky factorization of the grounded Laplacian; larger systems
//! fall back to Jacobi-preconditioned conjugate gradients, matrix-free.

use nalgebra::{Cholesky, DMatrix, DVector, Dyn};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph};

/// Numerical knobs for the Laplacian solver, one record so the CLI can
/// override them in a single place.
#[derive(Debug, Clone)]
pub struct SolverConfig {
    /// Use a dense Cholesky factorization up to this many vertices.
    pub dense_cutoff: usize,
    /// Relative residual target for the conjugate-gradient fallback.
    pub cg_rel_residual: f64,
    /// Iteration cap for conjugate gradients, as a multiple of n.
    pub cg_max_iter_factor: usize,
    /// Tolerance used when checking current conservation.
    pub conservation_tol: f64,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            dense_cutoff: 2000,
            cg_rel_residual: 1e-12,
            cg_max_iter_factor: 20,
            conservation_tol: 1e-9,
        }
    }
}

/// Unit electric flow between a vertex pair.
///
/// `potentials` are grounded at the target (`phi_t = 0`) and zero outside
/// the source's component. `flows` hold the signed current per edge on the
/// canonical orientation (smaller vertex id -> larger); a negative entry
/// means the current runs high-to-low id. `resistance` is `phi_s`.
#[derive(Debug, Clone)]
pub struct FlowSolution {
    pub source: usize,
    pub target: usize,
    pub potentials: Vec<f64>,
    pub flows: Vec<f64>,
    pub resistance: f64,
}

impl FlowSolution {
    pub fn flow(&self, e: EdgeId) -> f64 {
        self.flows[e.index()]
    }

    /// Largest violation of Kirchhoff's current law: net flow at interior
    /// vertices, and deviation from one unit at the source and target.
    pub fn conservation_residual(&self, g: &Graph) -> f64 {
        let mut net = vec![0.0; g.vertex_count()];
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            let f = self.flows[e.index()];
            net[u] -= f;
            net[v] += f;
        }
        let mut worst: f64 = 0.0;
        for (v, &x) in net.iter().enumerate() {
            let target = if v == self.source {
                -1.0
            } else if v == self.target {
                1.0
            } else {
                0.0
            };
            worst = worst.max((x - target).abs());
        }
        worst
    }
}

/// Measurement distribution of the electric flow state: each edge of the
/// network is seen with probability `f_e^2 r_e / R`.
#[derive(Debug, Clone)]
pub struct FlowStateDistribution {
    pub probs: Vec<f64>,
}

impl FlowStateDistribution {
    pub fn from_flow(g: &Graph, flow: &FlowSolution) -> Self {
        let mut probs = vec![0.0; g.edge_capacity()];
        for e in g.edge_ids() {
            let f = flow.flows[e.index()];
            probs[e.index()] = f * f * g.resistance(e) / flow.resistance;
        }
        FlowStateDistribution { probs }
    }

    pub fn prob(&self, e: EdgeId) -> f64 {
        self.probs[e.index()]
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }
}

/// Unit electric flow from `s` to `t`, with the default solver settings.
///
/// ```
/// use flowpath::{solve_flow, Graph};
///
/// // Unit triangle: direct edge 0-2 in parallel with the detour 0-1-2.
/// let g = Graph::from_edge_list("0 2 1\n0 1 1\n1 2 1").unwrap();
/// let flow = solve_flow(&g, 0, 2).unwrap();
/// assert!((flow.resistance - 2.0 / 3.0).abs() < 1e-12);
/// let direct = g.edge_between(0, 2).unwrap();
/// assert!((flow.flow(direct) - 2.0 / 3.0).abs() < 1e-12);
/// ```
pub fn solve_flow(g: &Graph, s: usize, t: usize) -> Result<FlowSolution> {
    solve_flow_with(g, s, t, &SolverConfig::default())
}

pub fn solve_flow_with(
    g: &Graph,
    s: usize,
    t: usize,
    config: &SolverConfig,
) -> Result<FlowSolution> {
    let system = LaplacianSystem::build(g, s, config)?;
    system.unit_flow(g, s, t)
}

/// Effective resistance between `s` and `t`; `+inf` when disconnected.
pub fn effective_resistance(g: &Graph, s: usize, t: usize) -> Result<f64> {
    effective_resistance_with(g, s, t, &SolverConfig::default())
}

pub fn effective_resistance_with(
    g: &Graph,
    s: usize,
    t: usize,
    config: &SolverConfig,
) -> Result<f64> {
    match solve_flow_with(g, s, t, config) {
        Ok(flow) => Ok(flow.resistance),
        Err(Error::Disconnected { .. }) => Ok(f64::INFINITY),
        Err(e) => Err(e),
    }
}

/// Energy `sum f_e^2 r_e` of an arbitrary flow vector over the live edges.
pub fn energy(g: &Graph, flows: &[f64]) -> Result<f64> {
    if flows.len() != g.edge_capacity() {
        return Err(Error::DimensionMismatch {
            expected: g.edge_capacity(),
            got: flows.len(),
        });
    }
    Ok(g.edge_ids()
        .map(|e| flows[e.index()] * flows[e.index()] * g.resistance(e))
        .sum())
}

pub fn flow_state_distribution(g: &Graph, s: usize, t: usize) -> Result<FlowStateDistribution> {
    let flow = solve_flow(g, s, t)?;
    Ok(FlowStateDistribution::from_flow(g, &flow))
}

pub fn flow_state_distribution_with(
    g: &Graph,
    s: usize,
    t: usize,
    config: &SolverConfig,
) -> Result<FlowStateDistribution> {
    let flow = solve_flow_with(g, s, t, config)?;
    Ok(FlowStateDistribution::from_flow(g, &flow))
}

/// Upper bound `R(s,t) * m` on the walker escape time, the quantity that
/// parameterizes the emulated walk costs.
pub fn escape_time_bound(g: &Graph, s: usize, t: usize) -> Result<f64> {
    let flow = solve_flow(g, s, t)?;
    Ok(flow.resistance * g.edge_count() as f64)
}

enum Factorization {
    Dense(Cholesky<f64, Dyn>),
    Cg {
        diag: Vec<f64>,
        rel_residual: f64,
        max_iters: usize,
    },
}

/// Grounded Laplacian system for one connected component, reusable across
/// many right-hand sides. Grounding at the smallest component vertex keeps
/// the factorization shareable between all vertex pairs of the component.
pub struct LaplacianSystem {
    /// Component vertices in increasing order; `vertices[0]` is the ground.
    vertices: Vec<usize>,
    /// Dense index per graph vertex (ground included), `None` outside.
    index: Vec<Option<usize>>,
    /// Reduced adjacency (ground row/column dropped): `(neighbor_idx, w)`,
    /// neighbor_idx == usize::MAX marks the ground.
    adjacency: Vec<Vec<(usize, f64)>>,
    factorization: Factorization,
    fingerprint: u64,
}

impl LaplacianSystem {
    /// Factor the component containing `root`.
    pub fn build(g: &Graph, root: usize, config: &SolverConfig) -> Result<Self> {
        g.check_vertex(root)?;
        let mask = g.component_of(root);
        let vertices: Vec<usize> = (0..g.vertex_count()).filter(|&v| mask[v]).collect();
        let mut index = vec![None; g.vertex_count()];
        // Reduced index: ground (vertices[0]) gets no row.
        for (i, &v) in vertices.iter().enumerate().skip(1) {
            index[v] = Some(i - 1);
        }
        let ground = vertices[0];
        let k = vertices.len() - 1;

        let mut adjacency = vec![Vec::new(); k];
        let mut diag = vec![0.0; k];
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            if !mask[u] {
                continue;
            }
            let w = g.weight(e);
            let iu = if u == ground {
                usize::MAX
            } else {
                index[u].unwrap()
            };
            let iv = if v == ground {
                usize::MAX
            } else {
                index[v].unwrap()
            };
            if iu != usize::MAX {
                diag[iu] += w;
                adjacency[iu].push((iv, w));
            }
            if iv != usize::MAX {
                diag[iv] += w;
                adjacency[iv].push((iu, w));
            }
        }

        let factorization = if vertices.len() <= config.dense_cutoff {
            let mut m = DMatrix::<f64>::zeros(k, k);
            for (i, nbrs) in adjacency.iter().enumerate() {
                m[(i, i)] = diag[i];
                for &(j, w) in nbrs {
                    if j != usize::MAX {
                        m[(i, j)] -= w;
                    }
                }
            }
            match m.cholesky() {
                Some(c) => Factorization::Dense(c),
                None => Factorization::Cg {
                    diag,
                    rel_residual: config.cg_rel_residual,
                    max_iters: config.cg_max_iter_factor * (k + 1),
                },
            }
        } else {
            Factorization::Cg {
                diag,
                rel_residual: config.cg_rel_residual,
                max_iters: config.cg_max_iter_factor * (k + 1),
            }
        };

        // Index vector for the ground as well, for potential lookups.
        let mut full_index = index;
        full_index[ground] = None;

        Ok(LaplacianSystem {
            vertices,
            index: full_index,
            adjacency,
            factorization,
            fingerprint: g.fingerprint(),
        })
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn ground(&self) -> usize {
        self.vertices[0]
    }

    pub fn contains(&self, v: usize) -> bool {
        v == self.ground() || self.index.get(v).map(|i| i.is_some()).unwrap_or(false)
    }

    fn apply(&self, x: &[f64], out: &mut [f64]) {
        for (i, nbrs) in self.adjacency.iter().enumerate() {
            let mut acc = 0.0;
            let mut d = 0.0;
            for &(j, w) in nbrs {
                d += w;
                if j != usize::MAX {
                    acc += w * x[j];
                }
            }
            out[i] = d * x[i] - acc;
        }
    }

    fn solve_reduced(&self, b: &[f64]) -> Result<Vec<f64>> {
        match &self.factorization {
            Factorization::Dense(chol) => {
                let rhs = DVector::from_column_slice(b);
                Ok(chol.solve(&rhs).iter().copied().collect())
            }
            Factorization::Cg {
                diag,
                rel_residual,
                max_iters,
            } => {
                let k = b.len();
                let norm_b = b.iter().map(|x| x * x).sum::<f64>().sqrt();
                if norm_b == 0.0 {
                    return Ok(vec![0.0; k]);
                }
                let mut x = vec![0.0; k];
                let mut r = b.to_vec();
                let mut z: Vec<f64> = r.iter().zip(diag).map(|(ri, di)| ri / di).collect();
                let mut p = z.clone();
                let mut rz: f64 = r.iter().zip(&z).map(|(a, b)| a * b).sum();
                let mut ap = vec![0.0; k];
                for _ in 0..*max_iters {
                    self.apply(&p, &mut ap);
                    let pap: f64 = p.iter().zip(&ap).map(|(a, b)| a * b).sum();
                    if pap <= 0.0 {
                        break;
                    }
                    let alpha = rz / pap;
                    for i in 0..k {
                        x[i] += alpha * p[i];
                        r[i] -= alpha * ap[i];
                    }
                    let norm_r = r.iter().map(|v| v * v).sum::<f64>().sqrt();
                    if norm_r <= rel_residual * norm_b {
                        return Ok(x);
                    }
                    for i in 0..k {
                        z[i] = r[i] / diag[i];
                    }
                    let rz_next: f64 = r.iter().zip(&z).map(|(a, b)| a * b).sum();
                    let beta = rz_next / rz;
                    rz = rz_next;
                    for i in 0..k {
                        p[i] = z[i] + beta * p[i];
                    }
                }
                let mut res = vec![0.0; k];
                self.apply(&x, &mut res);
                let norm_r = res
                    .iter()
                    .zip(b)
                    .map(|(a, bi)| (a - bi) * (a - bi))
                    .sum::<f64>()
                    .sqrt();
                if norm_r <= 1e-8 * norm_b {
                    Ok(x)
                } else {
                    Err(Error::SolverFailure(format!(
                        "cg stalled at relative residual {:.3e}",
                        norm_r / norm_b
                    )))
                }
            }
        }
    }

    /// Potentials of the unit `s -> t` flow, full length, `phi_t = 0`,
    /// zero outside the component.
    pub fn pair_potentials(&self, g: &Graph, s: usize, t: usize) -> Result<Vec<f64>> {
        if s == t {
            return Err(Error::DegeneratePair(s));
        }
        if !self.contains(s) || !self.contains(t) {
            return Err(Error::Disconnected { s, t });
        }
        let k = self.adjacency.len();
        let mut b = vec![0.0; k];
        if let Some(i) = self.index[s] {
            b[i] += 1.0;
        }
        if let Some(i) = self.index[t] {
            b[i] -= 1.0;
        }
        let x = self.solve_reduced(&b)?;
        let mut phi = vec![0.0; g.vertex_count()];
        for &v in &self.vertices {
            phi[v] = match self.index[v] {
                Some(i) => x[i],
                None => 0.0,
            };
        }
        let shift = phi[t];
        for &v in &self.vertices {
            phi[v] -= shift;
        }
        Ok(phi)
    }

    pub fn unit_flow(&self, g: &Graph, s: usize, t: usize) -> Result<FlowSolution> {
        g.check_vertex(s)?;
        g.check_vertex(t)?;
        let phi = self.pair_potentials(g, s, t)?;
        let mut flows = vec![0.0; g.edge_capacity()];
        for e in g.edge_ids() {
            let (u, v) = g.endpoints(e);
            flows[e.index()] = (phi[u] - phi[v]) * g.weight(e);
        }
        let resistance = phi[s] - phi[t];
        Ok(FlowSolution {
            source: s,
            target: t,
            potentials: phi,
            flows,
            resistance,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(k: usize) -> Graph {
        let edges: Vec<(usize, usize, f64)> = (0..k).map(|i| (i, i + 1, 1.0)).collect();
        Graph::new(k + 1, &edges).unwrap()
    }

    /// Triangle: direct edge 0-2 plus two-edge detour 0-1-2, unit weights.
    fn triangle() -> Graph {
        Graph::new(3, &[(0, 2, 1.0), (0, 1, 1.0), (1, 2, 1.0)]).unwrap()
    }

    #[test]
    fn series_path_unit_flow() {
        let g = path(3);
        let flow = solve_flow(&g, 0, 3).unwrap();
        assert!((flow.resistance - 3.0).abs() < 1e-12);
        for (expect, &phi) in [3.0, 2.0, 1.0, 0.0].iter().zip(&flow.potentials) {
            assert!((phi - expect).abs() < 1e-12);
        }
        for e in g.edge_ids() {
            assert!((flow.flow(e) - 1.0).abs() < 1e-12);
        }
        assert!(flow.conservation_residual(&g) < 1e-12);
    }

    #[test]
    fn triangle_current_divider() {
        let g = triangle();
        let flow = solve_flow(&g, 0, 2).unwrap();
        assert!((flow.resistance - 2.0 / 3.0).abs() < 1e-12);
        let st = g.edge_between(0, 2).unwrap();
        let sv = g.edge_between(0, 1).unwrap();
        let vt = g.edge_between(1, 2).unwrap();
        assert!((flow.flow(st) - 2.0 / 3.0).abs() < 1e-12);
        assert!((flow.flow(sv) - 1.0 / 3.0).abs() < 1e-12);
        assert!((flow.flow(vt) - 1.0 / 3.0).abs() < 1e-12);
    }

    #[test]
    fn degenerate_pair_is_an_error() {
        let g = path(2);
        assert!(matches!(
            solve_flow(&g, 1, 1),
            Err(Error::DegeneratePair(1))
        ));
        assert!(effective_resistance(&g, 1, 1).is_err());
    }

    #[test]
    fn disconnected_pair_signals_infinite_resistance() {
        let g = path(2);
        let cut = g.remove_edge(g.edge_between(0, 1).unwrap()).unwrap();
        assert!(matches!(
            solve_flow(&cut, 0, 2),
            Err(Error::Disconnected { .. })
        ));
        assert_eq!(effective_resistance(&cut, 0, 2).unwrap(), f64::INFINITY);
    }

    #[test]
    fn resistance_of_unit_path_is_its_length() {
        for k in 1..6 {
            let g = path(k);
            let r = effective_resistance(&g, 0, k).unwrap();
            assert!((r - k as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn energy_examples() {
        let single = Graph::new(2, &[(0, 1, 1.0)]).unwrap();
        let mut f = vec![1.0];
        assert!((energy(&single, &f).unwrap() - 1.0).abs() < 1e-12);
        f[0] = 0.0;
        assert_eq!(energy(&single, &f).unwrap(), 0.0);

        let g = triangle();
        let flow = solve_flow(&g, 0, 2).unwrap();
        let e = energy(&g, &flow.flows).unwrap();
        assert!((e - flow.resistance).abs() < 1e-12);
        assert!(matches!(
            energy(&g, &[0.0; 2]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn energy_matches_resistance_on_random_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for trial in 0..20 {
            let n = rng.gen_range(4..30);
            let mut edges: Vec<(usize, usize, f64)> = (1..n)
                .map(|v| (rng.gen_range(0..v), v, rng.gen_range(0.25..4.0)))
                .collect();
            for _ in 0..n {
                let u = rng.gen_range(0..n);
                let v = rng.gen_range(0..n);
                if u != v
                    && !edges
                        .iter()
                        .any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v)))
                {
                    edges.push((u.min(v), u.max(v), rng.gen_range(0.25..4.0)));
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            let (s, t) = (0, n - 1);
            let flow = solve_flow(&g, s, t).unwrap();
            let e = energy(&g, &flow.flows).unwrap();
            let rel = (e - flow.resistance).abs() / flow.resistance.max(1e-30);
            assert!(
                rel < 1e-9,
                "trial {trial}: energy/resistance mismatch {rel}"
            );
            assert!(flow.conservation_residual(&g) < 1e-9);
        }
    }

    #[test]
    fn distribution_is_uniform_on_paths() {
        for k in [2usize, 4, 7] {
            let g = path(k);
            let dist = flow_state_distribution(&g, 0, k).unwrap();
            for e in g.edge_ids() {
                assert!((dist.prob(e) - 1.0 / k as f64).abs() < 1e-12);
            }
            assert!((dist.total() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn distribution_on_triangle() {
        let g = triangle();
        let dist = flow_state_distribution(&g, 0, 2).unwrap();
        let st = g.edge_between(0, 2).unwrap();
        let sv = g.edge_between(0, 1).unwrap();
        assert!((dist.prob(st) - 2.0 / 3.0).abs() < 1e-12);
        assert!((dist.prob(sv) - 1.0 / 6.0).abs() < 1e-12);
        assert!((dist.total() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn escape_time_bound_examples() {
        let g = path(3);
        assert!((escape_time_bound(&g, 0, 3).unwrap() - 9.0).abs() < 1e-12);
        let tri = triangle();
        assert!((escape_time_bound(&tri, 0, 2).unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn escape_time_is_product_of_resistance_and_edges() {
        let g = triangle();
        let r = effective_resistance(&g, 0, 1).unwrap();
        let et = escape_time_bound(&g, 0, 1).unwrap();
        assert!((et - r * g.edge_count() as f64).abs() < 1e-12);
    }

    #[test]
    fn removal_and_readd_left_resistance_unchanged() {
        let g = Graph::new(
            4,
            &[
                (0, 1, 1.0),
                (1, 2, 2.0),
                (2, 3, 1.0),
                (0, 2, 0.5),
                (1, 3, 1.5),
            ],
        )
        .unwrap();
        let before = effective_resistance(&g, 0, 3).unwrap();
        let e = g.edge_between(1, 2).unwrap();
        let (u, v) = g.endpoints(e);
        let w = g.weight(e);
        let removed = g.remove_edge(e).unwrap();
        let mut edges: Vec<(usize, usize, f64)> = removed
            .edge_ids()
            .map(|e| {
                let (a, b) = removed.endpoints(e);
                (a, b, removed.weight(e))
            })
            .collect();
        edges.push((u, v, w));
        let readded = Graph::new(4, &edges).unwrap();
        let after = effective_resistance(&readded, 0, 3).unwrap();
        assert!((before - after).abs() < 1e-10);
    }

    #[test]
    fn rayleigh_monotonicity_under_removal() {
        let g = Graph::new(
            5,
            &[
                (0, 1, 1.0),
                (1, 2, 0.5),
                (2, 3, 2.0),
                (3, 4, 1.0),
                (0, 2, 1.0),
                (1, 3, 0.25),
                (2, 4, 1.0),
            ],
        )
        .unwrap();
        let base = effective_resistance(&g, 0, 4).unwrap();
        for e in g.edge_ids() {
            let r = effective_resistance(&g.remove_edge(e).unwrap(), 0, 4).unwrap();
            assert!(r >= base - 1e-10, "removal of {e} decreased resistance");
        }
    }

    #[test]
    fn resistance_never_exceeds_any_path_length() {
        let g = Graph::new(
            5,
            &[
                (0, 1, 1.0),
                (1, 2, 1.0),
                (2, 4, 1.0),
                (0, 3, 0.5),
                (3, 4, 0.5),
                (1, 4, 0.2),
            ],
        )
        .unwrap();
        let r = effective_resistance(&g, 0, 4).unwrap();
        for path in [vec![0, 1, 2, 4], vec![0, 3, 4], vec![0, 1, 4]] {
            let w = crate::graph::PathWitness::from_vertices(&g, &path).unwrap();
            assert!(r <= w.resistance_length + 1e-12);
        }
    }

    #[test]
    fn resistance_is_a_metric_on_samples() {
        let g = Graph::new(
            6,
            &[
                (0, 1, 1.0),
                (1, 2, 2.0),
                (2, 3, 1.0),
                (3, 4, 0.5),
                (4, 5, 1.0),
                (0, 5, 1.0),
                (1, 4, 1.0),
            ],
        )
        .unwrap();
        for (s, t, u) in [(0, 3, 5), (1, 5, 2), (0, 4, 2)] {
            let rst = effective_resistance(&g, s, t).unwrap();
            let rts = effective_resistance(&g, t, s).unwrap();
            assert!((rst - rts).abs() < 1e-10);
            let rsu = effective_resistance(&g, s, u).unwrap();
            let rut = effective_resistance(&g, u, t).unwrap();
            assert!(rst <= rsu + rut + 1e-10);
        }
    }

    #[test]
    fn cg_agrees_with_dense_cholesky() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(21);
        let n = 60;
        let mut edges: Vec<(usize, usize, f64)> = (1..n)
            .map(|v| (rng.gen_range(0..v), v, rng.gen_range(0.25..4.0)))
            .collect();
        for _ in 0..2 * n {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v
                && !edges
                    .iter()
                    .any(|&(a, b, _)| (a, b) == (u.min(v), u.max(v)))
            {
                edges.push((u.min(v), u.max(v), rng.gen_range(0.25..4.0)));
            }
        }
        let g = Graph::new(n, &edges).unwrap();
        let cg_config = SolverConfig {
            dense_cutoff: 0,
            ..SolverConfig::default()
        };
        let dense = effective_resistance(&g, 0, n - 1).unwrap();
        let cg = effective_resistance_with(&g, 0, n - 1, &cg_config).unwrap();
        assert!((dense - cg).abs() / dense < 1e-9);
    }
}
