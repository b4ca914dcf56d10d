//! Weighted oriented graphs and the purely combinatorial operations the
//! algebra relies on: validation, component decomposition, leaf pruning,
//! cycle discovery and shape classification.
//!
//! Vertex and edge ids are 1-based everywhere in the public API, matching the
//! `x_i` / `e_j` labels used when printing binomials.

mod cycles;
mod structure;

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use cycles::{simple_cycles, Cycle};
pub use structure::{classify_structure, GraphStructure, SharedPart, StructureTag};

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    NoVertices,
    #[error("expected {expected} weights, found {found}")]
    WeightCountMismatch { expected: usize, found: usize },
    #[error("edge e{edge} is a self-loop")]
    SelfLoop { edge: EdgeId },
    #[error("edges e{first} and e{second} join the same pair of vertices")]
    ParallelEdge { first: EdgeId, second: EdgeId },
    #[error("edge e{edge} refers to vertex {vertex}, outside 1..={vertex_count}")]
    BadVertexId {
        edge: EdgeId,
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("vertex x{vertex} has non-positive weight")]
    NonPositiveWeight { vertex: VertexId },
    #[error("edge e{edge} has a non-positive exponent")]
    NonPositiveExponent { edge: EdgeId },
    #[error("edges {edges:?} do not form a cycle")]
    NotACycle { edges: Vec<EdgeId> },
    #[error("cycle of length {length} is odd")]
    OddLength { length: usize },
    #[error("vertex x{vertex} is a leaf; prune the graph first")]
    NotPruned { vertex: VertexId },
    #[error("graph is not connected")]
    Disconnected,
}

/// An oriented edge `(tail, head)`; its edge monomial is `x_tail * x_head^w_head`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OrientedEdge {
    pub tail: VertexId,
    pub head: VertexId,
}

impl OrientedEdge {
    pub fn new(tail: VertexId, head: VertexId) -> Self {
        OrientedEdge { tail, head }
    }

    pub fn reversed(self) -> Self {
        OrientedEdge {
            tail: self.head,
            head: self.tail,
        }
    }
}

/// Topology and edge monomials shared by both graph flavours.
pub trait EdgeGraph: Clone {
    fn vertex_count(&self) -> usize;

    fn edge_count(&self) -> usize;

    /// Endpoints of edge `e` (1-based).
    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId);

    /// The edge monomial of `e` as two `(vertex, exponent)` factors.
    fn edge_monomial(&self, e: EdgeId) -> [(VertexId, u64); 2];

    /// The subgraph on `vertices` (new vertex `i+1` is `vertices[i]`) with the
    /// listed edges, renumbered in the given order. Every listed edge must have
    /// both endpoints in `vertices`.
    fn restrict(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Self;

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertex_count() + 1];
        for e in 1..=self.edge_count() {
            let (a, b) = self.endpoints(e);
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// `adjacency[v]` lists `(neighbour, edge)` pairs in edge order.
    fn adjacency(&self) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.vertex_count() + 1];
        for e in 1..=self.edge_count() {
            let (a, b) = self.endpoints(e);
            adj[a].push((b, e));
            adj[b].push((a, e));
        }
        adj
    }
}

fn check_simple(vertex_count: usize, ends: impl Iterator<Item = (VertexId, VertexId)>) -> Result<(), GraphError> {
    let mut seen: HashMap<(VertexId, VertexId), EdgeId> = HashMap::new();
    for (idx, (a, b)) in ends.enumerate() {
        let edge = idx + 1;
        for v in [a, b] {
            if v == 0 || v > vertex_count {
                return Err(GraphError::BadVertexId {
                    edge,
                    vertex: v,
                    vertex_count,
                });
            }
        }
        if a == b {
            return Err(GraphError::SelfLoop { edge });
        }
        if let Some(&first) = seen.get(&(a.min(b), a.max(b))) {
            return Err(GraphError::ParallelEdge { first, second: edge });
        }
        seen.insert((a.min(b), a.max(b)), edge);
    }
    Ok(())
}

/// Checks every structural requirement on a vertex-weighted oriented graph.
pub fn validate(weights: &[u64], edges: &[OrientedEdge]) -> Result<(), GraphError> {
    if weights.is_empty() {
        return Err(GraphError::NoVertices);
    }
    if let Some(i) = weights.iter().position(|&w| w == 0) {
        return Err(GraphError::NonPositiveWeight { vertex: i + 1 });
    }
    check_simple(weights.len(), edges.iter().map(|e| (e.tail, e.head)))
}

/// A vertex-weighted oriented simple graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawGraph", into = "RawGraph")]
pub struct WeightedOrientedGraph {
    weights: Vec<u64>,
    edges: Vec<OrientedEdge>,
}

#[derive(Serialize, Deserialize)]
struct RawGraph {
    weights: Vec<u64>,
    edges: Vec<(VertexId, VertexId)>,
}

impl TryFrom<RawGraph> for WeightedOrientedGraph {
    type Error = GraphError;
    fn try_from(raw: RawGraph) -> Result<Self, GraphError> {
        let edges = raw.edges.into_iter().map(|(t, h)| OrientedEdge::new(t, h)).collect();
        WeightedOrientedGraph::new(raw.weights, edges)
    }
}

impl From<WeightedOrientedGraph> for RawGraph {
    fn from(g: WeightedOrientedGraph) -> Self {
        RawGraph {
            weights: g.weights,
            edges: g.edges.into_iter().map(|e| (e.tail, e.head)).collect(),
        }
    }
}

impl WeightedOrientedGraph {
    pub fn new(weights: Vec<u64>, edges: Vec<OrientedEdge>) -> Result<Self, GraphError> {
        validate(&weights, &edges)?;
        Ok(WeightedOrientedGraph { weights, edges })
    }

    /// Shorthand for literal graphs: `from_pairs(&[1, 4], &[(1, 2)])`.
    pub fn from_pairs(weights: &[u64], edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Self::new(
            weights.to_vec(),
            edges.iter().map(|&(t, h)| OrientedEdge::new(t, h)).collect(),
        )
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn weight(&self, v: VertexId) -> u64 {
        self.weights[v - 1]
    }

    pub fn edges(&self) -> &[OrientedEdge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> OrientedEdge {
        self.edges[e - 1]
    }

    /// The same graph read through the general two-variable monomial setting,
    /// edge `(t, h)` becoming `x_t^1 x_h^{w_h}`.
    pub fn to_general(&self) -> GeneralEdgeMonomialGraph {
        GeneralEdgeMonomialGraph {
            vertex_count: self.weights.len(),
            edges: self
                .edges
                .iter()
                .map(|e| MonomialEdge {
                    vertex_a: e.tail,
                    exp_a: 1,
                    vertex_b: e.head,
                    exp_b: self.weight(e.head),
                })
                .collect(),
        }
    }

    /// `true` if `v` is the head of every incident edge (and has one).
    pub fn is_sink_within(&self, v: VertexId, edges: &[EdgeId]) -> bool {
        let incident: Vec<_> = edges
            .iter()
            .map(|&e| self.edge(e))
            .filter(|e| e.tail == v || e.head == v)
            .collect();
        !incident.is_empty() && incident.iter().all(|e| e.head == v)
    }

    /// `true` if `v` is the tail of every incident edge (and has one).
    pub fn is_source_within(&self, v: VertexId, edges: &[EdgeId]) -> bool {
        let incident: Vec<_> = edges
            .iter()
            .map(|&e| self.edge(e))
            .filter(|e| e.tail == v || e.head == v)
            .collect();
        !incident.is_empty() && incident.iter().all(|e| e.tail == v)
    }
}

impl EdgeGraph for WeightedOrientedGraph {
    fn vertex_count(&self) -> usize {
        self.weights.len()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let edge = self.edge(e);
        (edge.tail, edge.head)
    }

    fn edge_monomial(&self, e: EdgeId) -> [(VertexId, u64); 2] {
        let edge = self.edge(e);
        [(edge.tail, 1), (edge.head, self.weight(edge.head))]
    }

    fn restrict(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Self {
        let local = local_ids(self.vertex_count(), vertices);
        WeightedOrientedGraph {
            weights: vertices.iter().map(|&v| self.weight(v)).collect(),
            edges: edges
                .iter()
                .map(|&e| {
                    let edge = self.edge(e);
                    OrientedEdge::new(local[edge.tail], local[edge.head])
                })
                .collect(),
        }
    }
}

/// One edge of the general setting: the monomial `x_a^exp_a x_b^exp_b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialEdge {
    pub vertex_a: VertexId,
    pub exp_a: u64,
    pub vertex_b: VertexId,
    pub exp_b: u64,
}

/// Edges carrying arbitrary two-variable monomials `x_a^p x_b^q` with `p, q >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GeneralEdgeMonomialGraph {
    vertex_count: usize,
    edges: Vec<MonomialEdge>,
}

impl GeneralEdgeMonomialGraph {
    pub fn new(vertex_count: usize, edges: Vec<MonomialEdge>) -> Result<Self, GraphError> {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        check_simple(vertex_count, edges.iter().map(|e| (e.vertex_a, e.vertex_b)))?;
        if let Some(i) = edges.iter().position(|e| e.exp_a == 0 || e.exp_b == 0) {
            return Err(GraphError::NonPositiveExponent { edge: i + 1 });
        }
        Ok(GeneralEdgeMonomialGraph { vertex_count, edges })
    }

    pub fn edges(&self) -> &[MonomialEdge] {
        &self.edges
    }
}

impl EdgeGraph for GeneralEdgeMonomialGraph {
    fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let edge = self.edges[e - 1];
        (edge.vertex_a, edge.vertex_b)
    }

    fn edge_monomial(&self, e: EdgeId) -> [(VertexId, u64); 2] {
        let edge = self.edges[e - 1];
        [(edge.vertex_a, edge.exp_a), (edge.vertex_b, edge.exp_b)]
    }

    fn restrict(&self, vertices: &[VertexId], edges: &[EdgeId]) -> Self {
        let local = local_ids(self.vertex_count, vertices);
        GeneralEdgeMonomialGraph {
            vertex_count: vertices.len(),
            edges: edges
                .iter()
                .map(|&e| {
                    let m = self.edges[e - 1];
                    MonomialEdge {
                        vertex_a: local[m.vertex_a],
                        vertex_b: local[m.vertex_b],
                        ..m
                    }
                })
                .collect(),
        }
    }
}

fn local_ids(vertex_count: usize, vertices: &[VertexId]) -> Vec<VertexId> {
    let mut local = vec![0; vertex_count + 1];
    for (i, &v) in vertices.iter().enumerate() {
        local[v] = i + 1;
    }
    local
}

/// A connected component together with the maps back to the parent graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component<G> {
    pub graph: G,
    /// `vertex_map[i]` is the parent id of local vertex `i + 1`.
    pub vertex_map: Vec<VertexId>,
    /// `edge_map[j]` is the parent id of local edge `j + 1`.
    pub edge_map: Vec<EdgeId>,
}

/// Splits a graph into connected components, ordered by smallest vertex id.
/// Isolated vertices become single-vertex components.
pub fn connected_components<G: EdgeGraph>(graph: &G) -> Vec<Component<G>> {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut label = vec![usize::MAX; n + 1];
    let mut comps: Vec<(Vec<VertexId>, Vec<EdgeId>)> = Vec::new();
    for start in 1..=n {
        if label[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        label[start] = id;
        let mut stack = vec![start];
        let mut verts = vec![];
        while let Some(v) = stack.pop() {
            verts.push(v);
            for &(u, _) in &adj[v] {
                if label[u] == usize::MAX {
                    label[u] = id;
                    stack.push(u);
                }
            }
        }
        verts.sort_unstable();
        comps.push((verts, Vec::new()));
    }
    for e in 1..=graph.edge_count() {
        comps[label[graph.endpoints(e).0]].1.push(e);
    }
    comps
        .into_iter()
        .map(|(vertex_map, edge_map)| Component {
            graph: graph.restrict(&vertex_map, &edge_map),
            vertex_map,
            edge_map,
        })
        .collect()
}

/// Result of [`prune_leaves`]. The vertex set is unchanged.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pruned<G> {
    pub graph: G,
    /// Removed edge ids of the input graph, ascending.
    pub removed_edges: Vec<EdgeId>,
    /// `edge_map[j]` is the input id of surviving edge `j + 1`.
    pub edge_map: Vec<EdgeId>,
}

/// Repeatedly deletes the edge at a degree-1 vertex until no leaf remains.
pub fn prune_leaves<G: EdgeGraph>(graph: &G) -> Pruned<G> {
    let n = graph.vertex_count();
    let adj = graph.adjacency();
    let mut deg = graph.degrees();
    let mut alive = vec![true; graph.edge_count() + 1];
    let mut queue: Vec<VertexId> = (1..=n).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop() {
        if deg[v] != 1 {
            continue;
        }
        let (u, e) = adj[v]
            .iter()
            .copied()
            .find(|&(_, e)| alive[e])
            .expect("degree-1 vertex has a live edge");
        alive[e] = false;
        deg[v] = 0;
        deg[u] -= 1;
        if deg[u] == 1 {
            queue.push(u);
        }
    }
    let (edge_map, removed_edges): (Vec<EdgeId>, Vec<EdgeId>) = (1..=graph.edge_count()).partition(|&e| alive[e]);
    let all_vertices: Vec<VertexId> = (1..=n).collect();
    Pruned {
        graph: graph.restrict(&all_vertices, &edge_map),
        removed_edges,
        edge_map,
    }
}

/// Vertices with at least one incident edge.
pub fn active_vertices<G: EdgeGraph>(graph: &G) -> BTreeSet<VertexId> {
    (1..=graph.edge_count())
        .flat_map(|e| {
            let (a, b) = graph.endpoints(e);
            [a, b]
        })
        .collect()
}

/// First Betti number `|E| - |V| + c` counting only non-isolated vertices.
pub fn cycle_rank<G: EdgeGraph>(graph: &G) -> usize {
    let comps = connected_components(graph)
        .into_iter()
        .filter(|c| c.graph.edge_count() > 0)
        .count();
    graph.edge_count() + comps - active_vertices(graph).len()
}

/// `true` if every edge of `cycle` is oriented along one traversal direction.
pub fn is_naturally_oriented(graph: &WeightedOrientedGraph, cycle: &[EdgeId]) -> Result<bool, GraphError> {
    let c = Cycle::from_edges(graph, cycle)?;
    Ok(c.forward_edge_count(graph) == 0 || c.forward_edge_count(graph) == c.len())
}
