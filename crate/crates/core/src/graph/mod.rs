//! Finite simple graphs and the graphs derived from them.
//!
//! Vertices carry opaque string identifiers and are kept in declaration
//! order; all internal bookkeeping uses the position of a vertex in that
//! order. Edges are unordered pairs stored with the smaller index first, and
//! every derived graph whose vertices are edges of another graph names them
//! `"u-v"` with `u` before `v`, so identities such as
//! `opposite(delta(G)) == line(G)` are literal equality tests.

mod builtin;
mod cover;
mod iso;
mod json;
pub mod planarity;

pub use builtin::{builtin_graph, parse_builtin};
pub use cover::{validate_cover, CoverFailure, CoverVerdict, GraphMorphism};
pub use iso::{find_isomorphism, girth};
pub use json::GraphJson;
pub use planarity::{is_planar, KuratowskiKind, KuratowskiWitness, PlanarityVerdict};

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::error::GraphError;

/// An unordered edge, stored as vertex indices with `.0 < .1`.
pub type EdgeKey = (usize, usize);

#[derive(Clone)]
pub struct SimplicialGraph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<EdgeKey>,
    adjacency: Vec<BTreeSet<usize>>,
    /// Explicit `(tail, head)` per edge; `None` means tail = smaller index.
    orientation: Option<BTreeMap<EdgeKey, (usize, usize)>>,
}

impl PartialEq for SimplicialGraph {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.orientation == other.orientation
    }
}

impl Eq for SimplicialGraph {}

impl fmt::Debug for SimplicialGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialGraph")
            .field("vertices", &self.vertices)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|&(a, b)| (&self.vertices[a], &self.vertices[b]))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl SimplicialGraph {
    /// Builds a graph from vertex names and edges given by name.
    pub fn new<V, E, S>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (S, S)>,
    {
        let mut graph = Self::with_vertices(vertices)?;
        for (a, b) in edges {
            let (a, b) = (a.into(), b.into());
            let ia = graph.require(&a)?;
            let ib = graph.require(&b)?;
            if ia == ib {
                return Err(GraphError::Loop(a));
            }
            if !graph.insert_edge(ia, ib) {
                return Err(GraphError::MultipleEdge(a, b));
            }
        }
        Ok(graph)
    }

    /// Edgeless graph on the given vertices.
    pub fn with_vertices<V, S>(vertices: V) -> Result<Self, GraphError>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names = Vec::new();
        let mut index = HashMap::new();
        for v in vertices {
            let v = v.into();
            if index.insert(v.clone(), names.len()).is_some() {
                return Err(GraphError::DuplicateVertex(v));
            }
            names.push(v);
        }
        let n = names.len();
        Ok(Self {
            vertices: names,
            index,
            edges: BTreeSet::new(),
            adjacency: vec![BTreeSet::new(); n],
            orientation: None,
        })
    }

    /// Builds a graph from index pairs; panics on loops or out-of-range indices.
    pub(crate) fn from_indices(
        vertices: Vec<String>,
        edges: impl IntoIterator<Item = EdgeKey>,
    ) -> Self {
        let mut graph = Self::with_vertices(vertices).expect("distinct vertex names");
        for (a, b) in edges {
            assert!(a != b, "loop at vertex {a}");
            graph.insert_edge(a, b);
        }
        graph
    }

    fn require(&self, name: &str) -> Result<usize, GraphError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    fn insert_edge(&mut self, a: usize, b: usize) -> bool {
        let key = (a.min(b), a.max(b));
        if !self.edges.insert(key) {
            return false;
        }
        self.adjacency[a].insert(b);
        self.adjacency[b].insert(a);
        true
    }

    /// Replaces the orientation. Every edge must appear exactly once, as `(tail, head)`.
    pub fn with_orientation<S: AsRef<str>>(mut self, arcs: &[(S, S)]) -> Result<Self, GraphError> {
        let mut map = BTreeMap::new();
        for (t, h) in arcs {
            let (t, h) = (t.as_ref(), h.as_ref());
            let it = self.require(t)?;
            let ih = self.require(h)?;
            let key = (it.min(ih), it.max(ih));
            if !self.edges.contains(&key) {
                return Err(GraphError::OrientationNotAnEdge(
                    t.to_string(),
                    h.to_string(),
                ));
            }
            if map.insert(key, (it, ih)).is_some() {
                return Err(GraphError::OrientationRepeated(
                    t.to_string(),
                    h.to_string(),
                ));
            }
        }
        if map.len() != self.edges.len() {
            return Err(GraphError::OrientationIncomplete {
                oriented: map.len(),
                edges: self.edges.len(),
            });
        }
        self.orientation = Some(map);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Edges in canonical order (lexicographic on endpoint indices).
    pub fn edges(&self) -> impl Iterator<Item = EdgeKey> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_list(&self) -> Vec<EdgeKey> {
        self.edges.iter().copied().collect()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.adjacency[a].contains(&b)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_oriented(&self) -> bool {
        self.orientation.is_some()
    }

    /// Returns `(tail, head)` for the edge `{a, b}`.
    pub fn tail_head(&self, edge: EdgeKey) -> (usize, usize) {
        let key = (edge.0.min(edge.1), edge.0.max(edge.1));
        match &self.orientation {
            Some(map) => map[&key],
            None => key,
        }
    }

    /// Canonical name of an edge: its endpoint names joined by `-`, smaller index first.
    pub fn edge_name(&self, edge: EdgeKey) -> String {
        let (a, b) = (edge.0.min(edge.1), edge.0.max(edge.1));
        format!("{}-{}", self.vertices[a], self.vertices[b])
    }

    /// The orientation as explicit arcs, or `None` when the default applies.
    pub fn orientation_arcs(&self) -> Option<Vec<(usize, usize)>> {
        self.orientation
            .as_ref()
            .map(|m| m.values().copied().collect())
    }

    pub fn is_regular(&self) -> Option<usize> {
        let first = self.adjacency.first().map(BTreeSet::len)?;
        self.adjacency
            .iter()
            .all(|a| a.len() == first)
            .then_some(first)
    }

    /// Connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for start in 0..self.vertex_count() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph on all vertices keeping only `edges`.
    pub(crate) fn spanning_subgraph(&self, edges: impl IntoIterator<Item = EdgeKey>) -> Self {
        Self::from_indices(self.vertices.clone(), edges)
    }
}

/// Δ(G): one vertex per edge of `g`, adjacent when the closed edges are disjoint.
pub fn delta_graph(g: &SimplicialGraph) -> SimplicialGraph {
    edge_graph(g, |e, f| {
        e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
    })
}

/// The line graph: one vertex per edge of `g`, adjacent when the edges share an endpoint.
pub fn line_graph(g: &SimplicialGraph) -> SimplicialGraph {
    edge_graph(g, |e, f| {
        e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1
    })
}

fn edge_graph(g: &SimplicialGraph, adjacent: impl Fn(EdgeKey, EdgeKey) -> bool) -> SimplicialGraph {
    let edges = g.edge_list();
    let names = edges.iter().map(|&e| g.edge_name(e)).collect();
    let mut pairs = Vec::new();
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if adjacent(edges[i], edges[j]) {
                pairs.push((i, j));
            }
        }
    }
    SimplicialGraph::from_indices(names, pairs)
}

/// The complement graph on the same vertex set. Orientation is dropped.
pub fn opposite_graph(d: &SimplicialGraph) -> SimplicialGraph {
    let n = d.vertex_count();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !d.has_edge(a, b) {
                pairs.push((a, b));
            }
        }
    }
    SimplicialGraph::from_indices(d.vertices.clone(), pairs)
}

/// Replaces every edge by a path of `k` edges.
///
/// The fresh vertices on edge `u-v` are named `u-v.1`, ..., `u-v.(k-1)`,
/// counted from the smaller endpoint, and follow the original vertices in
/// edge order.
pub fn subdivide(g: &SimplicialGraph, k: usize) -> Result<SimplicialGraph, GraphError> {
    if k == 0 {
        return Err(GraphError::NonPositiveParameter("k".into()));
    }
    let mut names = g.vertices.clone();
    let mut pairs = Vec::new();
    for e in g.edges() {
        let base = g.edge_name(e);
        let mut prev = e.0;
        for i in 1..k {
            names.push(format!("{base}.{i}"));
            let fresh = names.len() - 1;
            pairs.push((prev, fresh));
            prev = fresh;
        }
        pairs.push((prev, e.1));
    }
    let mut out =
        SimplicialGraph::from_indices(names, pairs.iter().map(|&(a, b)| (a.min(b), a.max(b))));
    if g.orientation.is_some() {
        // Each sub-edge inherits the direction of the edge it came from.
        let mut map = BTreeMap::new();
        let mut cursor = 0;
        for e in g.edges() {
            let forward = g.tail_head(e) == e;
            for &(a, b) in &pairs[cursor..cursor + k] {
                let key = (a.min(b), a.max(b));
                map.insert(key, if forward { (a, b) } else { (b, a) });
            }
            cursor += k;
        }
        out.orientation = Some(map);
    }
    Ok(out)
}
