use super::{EdgeGraph, EdgeId, GraphError, VertexId, WeightedOrientedGraph};

/// A simple cycle in the underlying unoriented graph, stored in traversal
/// order: edge `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (indices
/// mod n).
///
/// The canonical traversal starts at the smallest edge id and continues
/// towards the smaller of its two neighbouring edge ids.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
}

impl Cycle {
    /// Builds the canonical traversal of an edge set, in any order.
    pub fn from_edges<G: EdgeGraph>(graph: &G, edges: &[EdgeId]) -> Result<Cycle, GraphError> {
        let not_a_cycle = || GraphError::NotACycle { edges: edges.to_vec() };
        let n = edges.len();
        if n < 3 || edges.iter().any(|&e| e == 0 || e > graph.edge_count()) {
            return Err(not_a_cycle());
        }
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != n {
            return Err(not_a_cycle());
        }
        // incident[v] = cycle edges touching v
        let mut incident: std::collections::HashMap<VertexId, Vec<EdgeId>> = Default::default();
        for &e in &sorted {
            let (a, b) = graph.endpoints(e);
            incident.entry(a).or_default().push(e);
            incident.entry(b).or_default().push(e);
        }
        if incident.len() != n || incident.values().any(|es| es.len() != 2) {
            return Err(not_a_cycle());
        }
        let other_edge = |v: VertexId, e: EdgeId| {
            let es = &incident[&v];
            if es[0] == e {
                es[1]
            } else {
                es[0]
            }
        };
        let first = sorted[0];
        let (a, b) = graph.endpoints(first);
        // Leave `first` through whichever endpoint leads to the smaller neighbour.
        let (start, mut at) = if other_edge(b, first) < other_edge(a, first) {
            (a, b)
        } else {
            (b, a)
        };
        let mut cycle_edges = vec![first];
        let mut vertices = vec![start];
        let mut current = first;
        while at != start {
            vertices.push(at);
            let next = other_edge(at, current);
            let (x, y) = graph.endpoints(next);
            cycle_edges.push(next);
            at = if x == at { y } else { x };
            current = next;
            if cycle_edges.len() > n {
                return Err(not_a_cycle());
            }
        }
        if cycle_edges.len() != n {
            // closed up early: the edge set is several disjoint cycles
            return Err(not_a_cycle());
        }
        Ok(Cycle {
            edges: cycle_edges,
            vertices,
        })
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.len().is_multiple_of(2)
    }

    pub fn sorted_edges(&self) -> Vec<EdgeId> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    /// Number of edges oriented from `vertices[i]` to `vertices[i + 1]`.
    pub fn forward_edge_count(&self, graph: &WeightedOrientedGraph) -> usize {
        self.edges
            .iter()
            .zip(&self.vertices)
            .filter(|&(&e, &v)| graph.edge(e).tail == v)
            .count()
    }

    /// Maps edge and vertex ids through parent tables (`map[id - 1]`).
    pub fn relabel(&self, vertex_map: &[VertexId], edge_map: &[EdgeId]) -> Cycle {
        Cycle {
            edges: self.edges.iter().map(|&e| edge_map[e - 1]).collect(),
            vertices: self.vertices.iter().map(|&v| vertex_map[v - 1]).collect(),
        }
    }
}

/// Every simple cycle (length >= 3) of the underlying unoriented graph, in
/// canonical form, sorted by length then edge sequence.
///
/// Plain DFS enumeration: cycles are rooted at their smallest vertex and each is
/// found once per direction, the mirror copy being discarded. Exponential in
/// general; intended for graphs with a handful of cycles.
pub fn simple_cycles<G: EdgeGraph>(graph: &G) -> Vec<Cycle> {
    let adj = graph.adjacency();
    let mut out = Vec::new();
    let n = graph.vertex_count();
    let mut on_path = vec![false; n + 1];
    for root in 1..=n {
        let mut path_vertices = vec![root];
        let mut path_edges = Vec::new();
        on_path[root] = true;
        dfs(
            graph,
            &adj,
            root,
            root,
            &mut on_path,
            &mut path_vertices,
            &mut path_edges,
            &mut out,
        );
        on_path[root] = false;
    }
    out.sort_by(|a: &Cycle, b: &Cycle| a.len().cmp(&b.len()).then_with(|| a.edges.cmp(&b.edges)));
    out
}

#[allow(clippy::too_many_arguments)]
fn dfs<G: EdgeGraph>(
    graph: &G,
    adj: &[Vec<(VertexId, EdgeId)>],
    root: VertexId,
    at: VertexId,
    on_path: &mut [bool],
    path_vertices: &mut Vec<VertexId>,
    path_edges: &mut Vec<EdgeId>,
    out: &mut Vec<Cycle>,
) {
    for &(next, e) in &adj[at] {
        if next == root && path_edges.len() >= 2 && path_edges[0] != e {
            // keep one direction: second vertex smaller than the last
            if path_vertices[1] < *path_vertices.last().expect("nonempty") {
                let mut edges = path_edges.clone();
                edges.push(e);
                out.push(Cycle::from_edges(graph, &edges).expect("dfs closes a simple cycle"));
            }
            continue;
        }
        if next <= root || on_path[next] {
            continue;
        }
        on_path[next] = true;
        path_vertices.push(next);
        path_edges.push(e);
        dfs(graph, adj, root, next, on_path, path_vertices, path_edges, out);
        path_edges.pop();
        path_vertices.pop();
        on_path[next] = false;
    }
}
