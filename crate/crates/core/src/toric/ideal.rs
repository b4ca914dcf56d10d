use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use super::{
    balanced_cycle_generator, incidence_matrix, incidence_matrix_in, is_balanced, presentation_order, Binomial,
    ToricError, ToricGraph,
};
use crate::exactalg::{null_space_basis, primitive_integer_vector, rank};
use crate::graph::{
    classify_structure, connected_components, cycle_rank, is_naturally_oriented, prune_leaves, EdgeGraph, EdgeId,
    StructureTag, WeightedOrientedGraph,
};
use crate::oracle::{saturate_markov_basis, Budget};
use crate::scalar::ExactInt;

/// Which combinatorial criterion, besides the rank itself, certifies `I = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ZeroReason {
    /// No cycles survive pruning.
    OnlyTrivialEvenClosedWalks,
    /// Every surviving cycle is odd.
    OddCycle,
    /// Every surviving cycle is odd or an unbalanced even cycle.
    UnbalancedUnicyclic,
    /// As above, with every even cycle naturally oriented and carrying a weight >= 2.
    NaturallyOriented,
    /// Full rank with no structural explanation available.
    RankOnly,
}

impl fmt::Display for ZeroReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ZeroReason::OnlyTrivialEvenClosedWalks => "only trivial even closed walks",
            ZeroReason::OddCycle => "odd cycle",
            ZeroReason::UnbalancedUnicyclic => "unbalanced cycle",
            ZeroReason::NaturallyOriented => "naturally oriented cycle",
            ZeroReason::RankOnly => "full rank",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroVerdict {
    pub is_zero: bool,
    /// Set exactly when `is_zero`.
    pub reason: Option<ZeroReason>,
}

/// `I = 0` iff the incidence matrix has full column rank.
pub fn is_zero_ideal<G: ToricGraph>(graph: &G) -> ZeroVerdict {
    is_zero_ideal_in::<BigInt, G>(graph)
}

/// [`is_zero_ideal`] with the rank computed over `T`.
pub fn is_zero_ideal_in<T: ExactInt, G: ToricGraph>(graph: &G) -> ZeroVerdict {
    let a = incidence_matrix_in::<T, G>(graph);
    let is_zero = rank(&a.matrix) == graph.edge_count();
    ZeroVerdict {
        is_zero,
        reason: is_zero.then(|| zero_reason(graph)),
    }
}

fn zero_reason<G: ToricGraph>(graph: &G) -> ZeroReason {
    let pruned = prune_leaves(graph);
    let cores: Vec<G> = connected_components(&pruned.graph)
        .into_iter()
        .filter(|c| c.graph.edge_count() > 0)
        .map(|c| c.graph)
        .collect();
    if cores.is_empty() {
        return ZeroReason::OnlyTrivialEvenClosedWalks;
    }
    if cores.iter().any(|c| cycle_rank(c) != 1) {
        return ZeroReason::RankOnly;
    }
    // each core is now a single cycle using all of its edges
    let even: Vec<&G> = cores.iter().filter(|c| c.edge_count() % 2 == 0).collect();
    if even.is_empty() {
        return ZeroReason::OddCycle;
    }
    let mut natural = true;
    for core in even {
        let Some(d) = core.oriented() else {
            return ZeroReason::RankOnly;
        };
        let edges: Vec<EdgeId> = (1..=d.edge_count()).collect();
        let heavy = edges.iter().any(|&e| d.weight(d.edge(e).head) >= 2);
        natural &= heavy && is_naturally_oriented(d, &edges).unwrap_or(false);
    }
    if natural {
        ZeroReason::NaturallyOriented
    } else {
        ZeroReason::UnbalancedUnicyclic
    }
}

/// The generator of a principal toric ideal.
///
/// The gate is the kernel dimension. For weighted oriented graphs whose shape
/// admits a support prediction, the support of the result is checked against it.
pub fn principal_generator<G: ToricGraph>(graph: &G) -> Result<Binomial, ToricError> {
    let a = incidence_matrix(graph);
    let null = null_space_basis(&a.matrix);
    if null.len() != 1 {
        return Err(ToricError::NotPrincipal { dimension: null.len() });
    }
    let u = primitive_integer_vector(&null[0])?;
    let b = Binomial::from_kernel_vector(&u)?;
    if let Some(predicted) = graph.oriented().and_then(predict_support) {
        let actual = b.support();
        if predicted != actual {
            return Err(ToricError::GenFormViolation {
                predicted: predicted.into_iter().collect(),
                actual: actual.into_iter().collect(),
            });
        }
    }
    Ok(b)
}

/// Predicted support of the single generator: the unique balanced cycle if
/// there is one, otherwise every edge of the pruned graph. `None` unless the
/// pruned graph is one cycle or one of the two-cycle shapes with at most one
/// balanced cycle. Ids refer to the input graph.
pub fn predict_support(graph: &WeightedOrientedGraph) -> Option<BTreeSet<EdgeId>> {
    let pruned = prune_leaves(graph);
    let s = classify_structure(&pruned.graph).ok()?;
    let lift = |edges: &[EdgeId]| -> BTreeSet<EdgeId> { edges.iter().map(|&e| pruned.edge_map[e - 1]).collect() };
    let balanced: Vec<_> = s
        .cycles
        .iter()
        .filter(|c| is_balanced(&pruned.graph, c.edges()).unwrap_or(false))
        .collect();
    match s.tag {
        StructureTag::Unicyclic => balanced.first().map(|c| lift(c.edges())),
        tag if tag.is_two_cycle() => match balanced[..] {
            [] => Some(pruned.edge_map.iter().copied().collect()),
            [c] => Some(lift(c.edges())),
            _ => None,
        },
        _ => None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum IdealKind {
    Zero,
    Principal,
    Basis,
}

/// Ordered from cheapest to most general; a union reports the most general one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Method {
    RankTest,
    BalancedCycleAlgorithm,
    PrimitiveKernel,
    OracleSaturation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ToricIdealResult {
    pub kind: IdealKind,
    /// Sorted by [`presentation_order`].
    pub generators: Vec<Binomial>,
    pub method: Method,
    pub certified_minimal: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ComputeOptions {
    /// Send every component through the saturation oracle.
    pub force_oracle: bool,
    pub budget: Budget,
}

pub fn compute_toric_ideal<G: ToricGraph>(graph: &G) -> Result<ToricIdealResult, ToricError> {
    compute_toric_ideal_with(graph, &ComputeOptions::default())
}

/// Splits into components, prunes leaves, and solves each core by the cheapest
/// applicable method before mapping generators back to the input edge ids.
pub fn compute_toric_ideal_with<G: ToricGraph>(
    graph: &G,
    options: &ComputeOptions,
) -> Result<ToricIdealResult, ToricError> {
    let mu = graph.edge_count();
    let mut generators = Vec::new();
    let mut method = Method::RankTest;
    let mut certified = true;
    for comp in connected_components(graph) {
        let pruned = prune_leaves(&comp.graph);
        let core = &pruned.graph;
        if core.edge_count() == 0 && !options.force_oracle {
            continue;
        }
        let edge_map: Vec<EdgeId> = pruned.edge_map.iter().map(|&e| comp.edge_map[e - 1]).collect();
        let (local, m, cert) = solve_core(core, options)?;
        method = method.max(m);
        certified &= cert;
        generators.extend(local.iter().map(|b| b.embed(mu, &edge_map)));
    }
    generators.sort_by(presentation_order);
    let kind = match generators.len() {
        0 => IdealKind::Zero,
        1 => IdealKind::Principal,
        _ => IdealKind::Basis,
    };
    Ok(ToricIdealResult {
        kind,
        generators,
        method,
        certified_minimal: certified,
    })
}

fn solve_core<G: ToricGraph>(core: &G, options: &ComputeOptions) -> Result<(Vec<Binomial>, Method, bool), ToricError> {
    let a = incidence_matrix(core);
    if !options.force_oracle {
        let dimension = core.edge_count() - rank(&a.matrix);
        if dimension == 0 {
            return Ok((Vec::new(), Method::RankTest, true));
        }
        if dimension == 1 {
            if let Some(d) = core.oriented() {
                if classify_structure(d).is_ok_and(|s| s.tag == StructureTag::Unicyclic) {
                    let edges: Vec<EdgeId> = (1..=d.edge_count()).collect();
                    let b = balanced_cycle_generator(d, &edges)?;
                    return Ok((vec![b], Method::BalancedCycleAlgorithm, true));
                }
            }
            return Ok((vec![principal_generator(core)?], Method::PrimitiveKernel, true));
        }
    }
    let markov = saturate_markov_basis(&a, &options.budget)?;
    Ok((markov.basis, Method::OracleSaturation, markov.certified))
}
