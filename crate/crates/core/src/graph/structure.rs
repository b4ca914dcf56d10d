use std::collections::BTreeSet;

use serde::Serialize;

use super::{
    active_vertices, connected_components, cycle_rank, simple_cycles, Cycle, EdgeGraph, EdgeId, GraphError, VertexId,
};

/// Shape of a connected leafless graph, as far as the single-generator
/// characterization needs it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StructureTag {
    Forest,
    Unicyclic,
    TwoCyclesSharedVertex,
    TwoCyclesSharedPath,
    TwoCyclesBridged,
    MultiCycleVertexJoin,
    Other,
}

impl StructureTag {
    pub fn describe(self) -> &'static str {
        match self {
            StructureTag::Forest => "forest",
            StructureTag::Unicyclic => "unicyclic",
            StructureTag::TwoCyclesSharedVertex => "two cycles sharing a vertex",
            StructureTag::TwoCyclesSharedPath => "two cycles sharing a path",
            StructureTag::TwoCyclesBridged => "two cycles joined by a path",
            StructureTag::MultiCycleVertexJoin => "cycles joined at one vertex",
            StructureTag::Other => "other",
        }
    }

    /// The three two-cycle shapes.
    pub fn is_two_cycle(self) -> bool {
        matches!(
            self,
            StructureTag::TwoCyclesSharedVertex | StructureTag::TwoCyclesSharedPath | StructureTag::TwoCyclesBridged
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum SharedPart {
    None,
    Vertex(VertexId),
    /// Edges common to the two inner cycles, ascending.
    Path(Vec<EdgeId>),
    /// Edges on no cycle, joining the two cycles, ascending.
    Bridge(Vec<EdgeId>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStructure {
    pub tag: StructureTag,
    /// For `TwoCyclesSharedPath`: the two inner cycles, then the outer one.
    /// Otherwise in [`simple_cycles`] order. Empty for `Forest` and `Other`.
    pub cycles: Vec<Cycle>,
    pub shared: SharedPart,
    pub cycle_rank: usize,
}

/// Classifies a connected graph without leaves. Isolated vertices are ignored,
/// so pruned graphs (which keep their vertex set) are accepted as they are.
pub fn classify_structure<G: EdgeGraph>(graph: &G) -> Result<GraphStructure, GraphError> {
    let deg = graph.degrees();
    if let Some(v) = (1..=graph.vertex_count()).find(|&v| deg[v] == 1) {
        return Err(GraphError::NotPruned { vertex: v });
    }
    let nontrivial = connected_components(graph)
        .into_iter()
        .filter(|c| c.graph.edge_count() > 0)
        .count();
    if nontrivial > 1 {
        return Err(GraphError::Disconnected);
    }
    let rank = cycle_rank(graph);
    let structure = |tag, cycles, shared| GraphStructure {
        tag,
        cycles,
        shared,
        cycle_rank: rank,
    };
    match rank {
        0 => Ok(structure(StructureTag::Forest, Vec::new(), SharedPart::None)),
        1 => Ok(structure(
            StructureTag::Unicyclic,
            simple_cycles(graph),
            SharedPart::None,
        )),
        2 => {
            let cycles = simple_cycles(graph);
            if cycles.len() == 3 {
                Ok(theta(cycles, rank))
            } else {
                let a: BTreeSet<VertexId> = cycles[0].vertices().iter().copied().collect();
                let common: Vec<VertexId> = cycles[1].vertices().iter().copied().filter(|v| a.contains(v)).collect();
                if let [v] = common[..] {
                    Ok(structure(
                        StructureTag::TwoCyclesSharedVertex,
                        cycles,
                        SharedPart::Vertex(v),
                    ))
                } else {
                    let on_cycle: BTreeSet<EdgeId> = cycles.iter().flat_map(|c| c.edges().iter().copied()).collect();
                    let bridge = (1..=graph.edge_count()).filter(|e| !on_cycle.contains(e)).collect();
                    Ok(structure(
                        StructureTag::TwoCyclesBridged,
                        cycles,
                        SharedPart::Bridge(bridge),
                    ))
                }
            }
        }
        _ => match petal_center(graph, &deg, rank) {
            Some(v) => Ok(structure(
                StructureTag::MultiCycleVertexJoin,
                simple_cycles(graph),
                SharedPart::Vertex(v),
            )),
            None => Ok(structure(StructureTag::Other, Vec::new(), SharedPart::None)),
        },
    }
}

/// A vertex of degree `2 * rank` with every other active vertex of degree 2:
/// the graph is then `rank` cycles glued at that vertex.
fn petal_center<G: EdgeGraph>(graph: &G, deg: &[usize], rank: usize) -> Option<VertexId> {
    let active = active_vertices(graph);
    let mut centers = active.iter().copied().filter(|&v| deg[v] != 2);
    let center = centers.next()?;
    (centers.next().is_none() && deg[center] == 2 * rank).then_some(center)
}

fn theta(cycles: Vec<Cycle>, rank: usize) -> GraphStructure {
    let sets: Vec<BTreeSet<EdgeId>> = cycles.iter().map(|c| c.edges().iter().copied().collect()).collect();
    // Pairwise intersections are the three internally disjoint paths.
    let mut best: Option<(usize, usize, Vec<EdgeId>)> = None;
    for i in 0..3 {
        for j in i + 1..3 {
            let path: Vec<EdgeId> = sets[i].intersection(&sets[j]).copied().collect();
            let better = match &best {
                None => true,
                Some((_, _, p)) => (path.len(), &path) < (p.len(), p),
            };
            if better {
                best = Some((i, j, path));
            }
        }
    }
    let (i, j, path) = best.expect("theta graph has three cycles");
    let outer = 3 - i - j;
    let ordered = vec![cycles[i].clone(), cycles[j].clone(), cycles[outer].clone()];
    GraphStructure {
        tag: StructureTag::TwoCyclesSharedPath,
        cycles: ordered,
        shared: SharedPart::Path(path),
        cycle_rank: rank,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::WeightedOrientedGraph;

    fn g(n: usize, edges: &[(usize, usize)]) -> WeightedOrientedGraph {
        WeightedOrientedGraph::from_pairs(&vec![1; n], edges).unwrap()
    }

    #[test]
    fn eight_cycle_is_unicyclic() {
        let c8 = g(8, &[(1, 2), (2, 3), (3, 4), (5, 4), (6, 5), (7, 6), (8, 7), (1, 8)]);
        let s = classify_structure(&c8).unwrap();
        assert_eq!(s.tag, StructureTag::Unicyclic);
        assert_eq!(s.cycles.len(), 1);
        assert_eq!(s.cycles[0].len(), 8);
    }

    #[test]
    fn two_squares_sharing_an_edge() {
        let theta = g(6, &[(1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 1)]);
        let s = classify_structure(&theta).unwrap();
        assert_eq!(s.tag, StructureTag::TwoCyclesSharedPath);
        let lens: Vec<usize> = s.cycles.iter().map(Cycle::len).collect();
        assert_eq!(lens, vec![4, 4, 6]);
        assert_eq!(s.shared, SharedPart::Path(vec![4]));
    }

    #[test]
    fn three_petals() {
        let petals = g(
            8,
            &[
                (1, 2),
                (2, 3),
                (3, 1),
                (1, 4),
                (4, 5),
                (5, 1),
                (1, 6),
                (6, 7),
                (7, 8),
                (8, 1),
            ],
        );
        let s = classify_structure(&petals).unwrap();
        assert_eq!(s.tag, StructureTag::MultiCycleVertexJoin);
        assert_eq!(s.cycles.len(), 3);
        assert_eq!(s.shared, SharedPart::Vertex(1));
    }

    #[test]
    fn figure_eight_and_dumbbell() {
        let eight = g(5, &[(1, 2), (2, 3), (3, 1), (1, 4), (4, 5), (5, 1)]);
        let s = classify_structure(&eight).unwrap();
        assert_eq!(s.tag, StructureTag::TwoCyclesSharedVertex);
        assert_eq!(s.shared, SharedPart::Vertex(1));

        let dumbbell = g(7, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)]);
        let s = classify_structure(&dumbbell).unwrap();
        assert_eq!(s.tag, StructureTag::TwoCyclesBridged);
        assert_eq!(s.shared, SharedPart::Bridge(vec![4, 5]));
    }

    #[test]
    fn other_and_errors() {
        let k4 = g(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]);
        let s = classify_structure(&k4).unwrap();
        assert_eq!(s.tag, StructureTag::Other);
        assert_eq!(s.cycle_rank, 3);
        assert!(s.cycles.is_empty());

        let leafy = g(4, &[(1, 2), (2, 3), (3, 1), (3, 4)]);
        assert_eq!(classify_structure(&leafy), Err(GraphError::NotPruned { vertex: 4 }));
        let apart = g(6, &[(1, 2), (2, 3), (3, 1), (4, 5), (5, 6), (6, 4)]);
        assert_eq!(classify_structure(&apart), Err(GraphError::Disconnected));
        let empty = g(3, &[]);
        assert_eq!(classify_structure(&empty).unwrap().tag, StructureTag::Forest);
    }
}
