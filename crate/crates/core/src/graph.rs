//! Weighted undirected simple graphs with adjacency-list access.
//!
//! Edges carry a positive weight `w`; viewed as a resistor network every
//! edge has resistance `r = 1/w`. Edge ids are stable under removal:
//! removing an edge invalidates its id and keeps every other id unchanged,
//! so ids can be exchanged between a graph and its edge-removal views.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};

/// Index of an edge in the graph's edge sequence. Stable under removal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub usize);

impl EdgeId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

/// One of the two directions of an edge. The stored edge endpoints
/// `(u, v)` are normalized with `u < v`; the `forward` orientation is
/// `u -> v` and the reverse is `v -> u`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrientedEdge {
    pub edge: EdgeId,
    pub reversed: bool,
}

impl OrientedEdge {
    pub fn forward(edge: EdgeId) -> Self {
        OrientedEdge {
            edge,
            reversed: false,
        }
    }

    pub fn reverse(self) -> Self {
        OrientedEdge {
            edge: self.edge,
            reversed: !self.reversed,
        }
    }

    /// `(tail, head)` endpoints in flow direction.
    pub fn endpoints(self, g: &Graph) -> (usize, usize) {
        let (u, v) = g.endpoints(self.edge);
        if self.reversed {
            (v, u)
        } else {
            (u, v)
        }
    }
}

#[derive(Debug, Clone)]
struct EdgeSlot {
    u: usize,
    v: usize,
    weight: f64,
    alive: bool,
}

/// Immutable weighted undirected simple graph.
#[derive(Debug, Clone)]
pub struct Graph {
    vertex_count: usize,
    slots: Vec<EdgeSlot>,
    adjacency: Vec<Vec<(usize, EdgeId)>>,
    live_edges: usize,
    fingerprint: u64,
}

impl Graph {
    /// Build a graph from an explicit edge list. Endpoints are normalized
    /// so that the canonical orientation of every edge runs from the
    /// smaller to the larger vertex id.
    pub fn new(vertex_count: usize, edges: &[(usize, usize, f64)]) -> Result<Self> {
        let mut slots = Vec::with_capacity(edges.len());
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        for (line, &(u, v, w)) in edges.iter().enumerate() {
            let line = line + 1;
            if u >= vertex_count {
                return Err(Error::InvalidVertex(u));
            }
            if v >= vertex_count {
                return Err(Error::InvalidVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop { v: u as u64, line });
            }
            if !w.is_finite() || w <= 0.0 {
                return Err(Error::NonPositiveWeight { weight: w, line });
            }
            let key = (u.min(v), u.max(v));
            if seen.insert(key, line).is_some() {
                return Err(Error::DuplicateEdge {
                    u: key.0 as u64,
                    v: key.1 as u64,
                    line,
                });
            }
            slots.push(EdgeSlot {
                u: key.0,
                v: key.1,
                weight: w,
                alive: true,
            });
        }
        let mut g = Graph {
            vertex_count,
            slots,
            adjacency: Vec::new(),
            live_edges: 0,
            fingerprint: 0,
        };
        g.rebuild();
        Ok(g)
    }

    /// Parse the edge-list text format: one `u v w` triple per line,
    /// whitespace separated, `#` starts a comment. Sparse vertex ids are
    /// remapped to a dense `0..n` range; the mapping is discarded here,
    /// use [`parse_edge_list`] to keep it.
    ///
    /// ```
    /// use flowpath::Graph;
    ///
    /// let g = Graph::from_edge_list("0 1 1  # first hop\n1 2 0.5").unwrap();
    /// assert_eq!(g.vertex_count(), 3);
    /// assert_eq!(g.degree(1).unwrap(), 2);
    /// let e = g.edge_between(1, 2).unwrap();
    /// assert_eq!(g.resistance(e), 2.0);
    /// ```
    pub fn from_edge_list(text: &str) -> Result<Self> {
        parse_edge_list(text).map(|parsed| parsed.graph)
    }

    /// Canonical edge-list serialization: live edges in id order.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for id in self.edge_ids() {
            let (u, v) = self.endpoints(id);
            out.push_str(&format!("{} {} {}\n", u, v, self.weight(id)));
        }
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Number of live edges.
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// Length of the underlying edge slot array, counting removed edges.
    /// Per-edge vectors (flows, probabilities) are indexed by `EdgeId` and
    /// sized by this, so ids stay usable across removal views.
    pub fn edge_capacity(&self) -> usize {
        self.slots.len()
    }

    /// Live edge ids in increasing order.
    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.alive)
            .map(|(i, _)| EdgeId(i))
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.slots.get(e.0).map(|s| s.alive).unwrap_or(false)
    }

    /// Endpoints `(u, v)` with `u < v`. Panics on a dead or out-of-range id;
    /// use [`Graph::contains_edge`] to check first.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let s = &self.slots[e.0];
        assert!(s.alive, "edge {} has been removed", e);
        (s.u, s.v)
    }

    pub fn weight(&self, e: EdgeId) -> f64 {
        let s = &self.slots[e.0];
        assert!(s.alive, "edge {} has been removed", e);
        s.weight
    }

    /// Resistance `1/w` of an edge.
    pub fn resistance(&self, e: EdgeId) -> f64 {
        1.0 / self.weight(e)
    }

    /// Sum of resistances over all live edges.
    pub fn total_resistance(&self) -> f64 {
        self.edge_ids().map(|e| self.resistance(e)).sum()
    }

    /// Neighbors of `v` as `(neighbor, edge)` pairs.
    pub fn neighbors(&self, v: usize) -> Result<&[(usize, EdgeId)]> {
        self.adjacency
            .get(v)
            .map(|a| a.as_slice())
            .ok_or(Error::InvalidVertex(v))
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.neighbors(v)?.len())
    }

    /// The live edge joining `u` and `v`, if any.
    pub fn edge_between(&self, u: usize, v: usize) -> Option<EdgeId> {
        self.adjacency
            .get(u)?
            .iter()
            .find(|&&(w, _)| w == v)
            .map(|&(_, e)| e)
    }

    /// A copy of this graph with edge `e` removed. All other edge ids are
    /// preserved, so results computed on the view can be reported against
    /// the original graph.
    pub fn remove_edge(&self, e: EdgeId) -> Result<Graph> {
        if !self.contains_edge(e) {
            return Err(Error::InvalidEdge(e.0));
        }
        let mut g = self.clone();
        g.slots[e.0].alive = false;
        g.rebuild();
        Ok(g)
    }

    /// Breadth-first reachability between `s` and `t`.
    pub fn is_connected(&self, s: usize, t: usize) -> Result<bool> {
        self.check_vertex(s)?;
        self.check_vertex(t)?;
        Ok(self.component_of(s)[t])
    }

    /// Membership mask of the connected component containing `root`.
    pub fn component_of(&self, root: usize) -> Vec<bool> {
        let mut seen = vec![false; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &self.adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::InvalidVertex(v))
        }
    }

    /// Content hash over vertex count and live edges; used as a cache key
    /// by solvers. Two graphs with identical live edge sets collide on
    /// purpose.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    fn rebuild(&mut self) {
        let mut adjacency = vec![Vec::new(); self.vertex_count];
        let mut live = 0;
        let mut hasher = std::collections::hash_map::DefaultHasher::new();
        self.vertex_count.hash(&mut hasher);
        for (i, s) in self.slots.iter().enumerate() {
            if !s.alive {
                continue;
            }
            live += 1;
            adjacency[s.u].push((s.v, EdgeId(i)));
            adjacency[s.v].push((s.u, EdgeId(i)));
            (i, s.u, s.v, s.weight.to_bits()).hash(&mut hasher);
        }
        self.adjacency = adjacency;
        self.live_edges = live;
        self.fingerprint = hasher.finish();
    }
}

/// Result of parsing an edge-list document: the graph plus the original
/// vertex labels (index in the graph -> label in the input).
#[derive(Debug, Clone)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub vertex_labels: Vec<u64>,
}

impl ParsedEdgeList {
    /// Dense index of an original vertex label.
    pub fn index_of(&self, label: u64) -> Option<usize> {
        self.vertex_labels.iter().position(|&l| l == label)
    }
}

pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
    let mut labels: Vec<u64> = Vec::new();
    let mut index: HashMap<u64, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize, f64)> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();

    let intern = |label: u64, labels: &mut Vec<u64>, index: &mut HashMap<u64, usize>| {
        *index.entry(label).or_insert_with(|| {
            labels.push(label);
            labels.len() - 1
        })
    };

    for (lineno, raw) in text.lines().enumerate() {
        let lineno = lineno + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(Error::Parse {
                line: lineno,
                reason: format!("expected `u v w`, got {} fields", fields.len()),
            });
        }
        let u: u64 = fields[0].parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("bad vertex id `{}`", fields[0]),
        })?;
        let v: u64 = fields[1].parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("bad vertex id `{}`", fields[1]),
        })?;
        let w: f64 = fields[2].parse().map_err(|_| Error::Parse {
            line: lineno,
            reason: format!("bad weight `{}`", fields[2]),
        })?;
        if u == v {
            return Err(Error::SelfLoop { v: u, line: lineno });
        }
        if !w.is_finite() || w <= 0.0 {
            return Err(Error::NonPositiveWeight {
                weight: w,
                line: lineno,
            });
        }
        let ui = intern(u, &mut labels, &mut index);
        let vi = intern(v, &mut labels, &mut index);
        edges.push((ui, vi, w));
        lines.push(lineno);
    }

    // Re-check duplicates here so the error carries the input line number
    // and the original labels rather than remapped indices.
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    for (k, &(u, v, _)) in edges.iter().enumerate() {
        let key = (u.min(v), u.max(v));
        if seen.insert(key, k).is_some() {
            return Err(Error::DuplicateEdge {
                u: labels[key.0],
                v: labels[key.1],
                line: lines[k],
            });
        }
    }

    let graph = Graph::new(labels.len(), &edges)?;
    Ok(ParsedEdgeList {
        graph,
        vertex_labels: labels,
    })
}

/// An explicit `s -> t` path: the vertex sequence, the edges joining
/// consecutive vertices, and the total resistance along them.
#[derive(Debug, Clone, PartialEq)]
pub struct PathWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeId>,
    pub resistance_length: f64,
}

impl PathWitness {
    /// Assemble a witness from a vertex sequence, resolving edges against
    /// `g` and computing the resistance length. Fails if consecutive
    /// vertices are not adjacent or a vertex repeats.
    pub fn from_vertices(g: &Graph, vertices: &[usize]) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::invalid_parameter("vertices", "empty path"));
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in vertices {
            g.check_vertex(v)?;
            if seen[v] {
                return Err(Error::invalid_parameter(
                    "vertices",
                    format!("vertex {v} repeats"),
                ));
            }
            seen[v] = true;
        }
        let mut edges = Vec::with_capacity(vertices.len().saturating_sub(1));
        let mut resistance_length = 0.0;
        for pair in vertices.windows(2) {
            let e = g.edge_between(pair[0], pair[1]).ok_or_else(|| {
                Error::invalid_parameter(
                    "vertices",
                    format!("no edge between {} and {}", pair[0], pair[1]),
                )
            })?;
            edges.push(e);
            resistance_length += g.resistance(e);
        }
        Ok(PathWitness {
            vertices: vertices.to_vec(),
            edges,
            resistance_length,
        })
    }

    pub fn source(&self) -> usize {
        self.vertices[0]
    }

    pub fn target(&self) -> usize {
        *self.vertices.last().unwrap()
    }

    pub fn len_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    /// Check structural validity against `g`: simple vertex sequence,
    /// consecutive vertices joined by the listed edges, and the stored
    /// resistance length consistent with the edges to 1e-12 relative.
    pub fn validate(&self, g: &Graph) -> bool {
        if self.vertices.is_empty() || self.edges.len() + 1 != self.vertices.len() {
            return false;
        }
        let mut seen = vec![false; g.vertex_count()];
        for &v in &self.vertices {
            if v >= g.vertex_count() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
        let mut total = 0.0;
        for (pair, &e) in self.vertices.windows(2).zip(&self.edges) {
            if !g.contains_edge(e) {
                return false;
            }
            let (u, v) = g.endpoints(e);
            if (u, v) != (pair[0].min(pair[1]), pair[0].max(pair[1])) {
                return false;
            }
            total += g.resistance(e);
        }
        let scale = total.abs().max(1.0);
        (total - self.resistance_length).abs() <= 1e-12 * scale
    }
}
