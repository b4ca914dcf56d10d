#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use wog_toric::graph::{VertexId, WeightedOrientedGraph};

pub type Pairs = Vec<(VertexId, VertexId)>;

pub fn wog(weights: &[u64], pairs: &[(VertexId, VertexId)]) -> WeightedOrientedGraph {
    WeightedOrientedGraph::from_pairs(weights, pairs).expect("valid test graph")
}

/// Reverses edge `i` whenever bit `i` of `mask` is set.
pub fn orient(pairs: &[(VertexId, VertexId)], mask: u64) -> Pairs {
    pairs
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| if mask >> i & 1 == 1 { (b, a) } else { (a, b) })
        .collect()
}

/// `x1 -> x2 -> ... -> xn -> x1`.
pub fn cycle_pairs(n: usize) -> Pairs {
    (1..=n).map(|i| (i, i % n + 1)).collect()
}

/// The closed walk `start, path[0], ..., path[k-1], end` as consecutive pairs.
pub fn path_pairs(start: VertexId, path: &[VertexId], end: VertexId) -> Pairs {
    let mut walk = vec![start];
    walk.extend_from_slice(path);
    walk.push(end);
    walk.windows(2).map(|w| (w[0], w[1])).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwoCycleFamily {
    /// Cycle lengths `m` and `n` meeting at one vertex.
    SharedVertex(usize, usize),
    /// Three internally disjoint paths of the given lengths between two vertices.
    SharedPath(usize, usize, usize),
    /// Cycles of lengths `m` and `n` joined by a path of the given length.
    Bridged(usize, usize, usize),
}

impl TwoCycleFamily {
    /// Every shape with cycle lengths at most 5 and shared path or bridge of
    /// length at most 2.
    pub fn all() -> Vec<TwoCycleFamily> {
        let mut out = Vec::new();
        for m in 3..=5 {
            for n in m..=5 {
                out.push(TwoCycleFamily::SharedVertex(m, n));
                for l in 1..=2 {
                    out.push(TwoCycleFamily::Bridged(m, n, l));
                }
            }
        }
        for k in 1..=2 {
            for p in k.max(2)..=5 - k {
                for q in p..=5 - k {
                    out.push(TwoCycleFamily::SharedPath(k, p, q));
                }
            }
        }
        out
    }

    pub fn vertex_count(self) -> usize {
        match self {
            TwoCycleFamily::SharedVertex(m, n) => m + n - 1,
            TwoCycleFamily::SharedPath(k, p, q) => k + p + q - 1,
            TwoCycleFamily::Bridged(m, n, l) => m + n + l - 1,
        }
    }

    /// Unoriented edges, with a fixed traversal direction.
    pub fn pairs(self) -> Pairs {
        match self {
            TwoCycleFamily::SharedVertex(m, n) => {
                let mut e = cycle_pairs(m);
                let b: Vec<VertexId> = (m + 1..m + n).collect();
                e.extend(path_pairs(1, &b, 1));
                e
            }
            TwoCycleFamily::SharedPath(k, p, q) => {
                let mut next = 3;
                let mut e = Vec::new();
                for len in [k, p, q] {
                    let inner: Vec<VertexId> = (next..next + len - 1).collect();
                    next += len - 1;
                    e.extend(path_pairs(1, &inner, 2));
                }
                e
            }
            TwoCycleFamily::Bridged(m, n, l) => {
                let mut e = cycle_pairs(m);
                let inner: Vec<VertexId> = (m + 1..m + l).collect();
                let b0 = m + l;
                e.extend(path_pairs(1, &inner, b0));
                let b: Vec<VertexId> = (b0 + 1..b0 + n).collect();
                e.extend(path_pairs(b0, &b, b0));
                e
            }
        }
    }

    pub fn relevant_cycle_count(self) -> usize {
        match self {
            TwoCycleFamily::SharedPath(..) => 3,
            _ => 2,
        }
    }
}

fn is_connected(n: usize, pairs: &[(VertexId, VertexId)]) -> bool {
    let mut seen = vec![false; n + 1];
    let mut stack = vec![1];
    seen[1] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in pairs {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen[1..].iter().all(|&s| s)
}

/// A connected simple graph without leaves or isolated vertices, with random
/// orientation and weights in `1..=max_weight`.
pub fn random_leafless<R: Rng>(rng: &mut R, max_edges: usize, max_weight: u64) -> WeightedOrientedGraph {
    loop {
        let n = rng.gen_range(3..=6);
        let all: Pairs = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        let hi = max_edges.min(all.len());
        if hi < n {
            continue;
        }
        let m = rng.gen_range(n..=hi);
        let mut pairs: Pairs = all.choose_multiple(rng, m).copied().collect();
        let mut deg = vec![0; n + 1];
        for &(a, b) in &pairs {
            deg[a] += 1;
            deg[b] += 1;
        }
        if deg[1..].iter().any(|&d| d < 2) || !is_connected(n, &pairs) {
            continue;
        }
        pairs.shuffle(rng);
        let pairs = orient(&pairs, rng.gen());
        let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=max_weight)).collect();
        return wog(&weights, &pairs);
    }
}

/// Hangs `extra` new edges off `g` as random trees. The edges of `g` keep
/// their ids.
pub fn attach_trees<R: Rng>(rng: &mut R, g: &WeightedOrientedGraph, extra: usize) -> WeightedOrientedGraph {
    let mut weights = g.weights().to_vec();
    let mut pairs: Pairs = g.edges().iter().map(|e| (e.tail, e.head)).collect();
    for _ in 0..extra {
        let old = rng.gen_range(1..=weights.len());
        weights.push(rng.gen_range(1..=4));
        let new = weights.len();
        pairs.push(if rng.gen() { (old, new) } else { (new, old) });
    }
    wog(&weights, &pairs)
}

pub fn support_of(edges: impl IntoIterator<Item = usize>) -> BTreeSet<usize> {
    edges.into_iter().collect()
}
