use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Signed};

use super::{incidence_matrix, Binomial, ToricError};
use crate::exactalg::{determinant, null_space_basis, primitive_integer_vector, Matrix};
use crate::graph::{Cycle, EdgeGraph, EdgeId, GraphError, WeightedOrientedGraph};
use crate::scalar::ExactInt;

/// Exponent of `v` in the edge monomial of `e`.
fn entry(graph: &WeightedOrientedGraph, e: EdgeId, v: usize) -> u64 {
    graph
        .edge_monomial(e)
        .iter()
        .find(|&&(u, _)| u == v)
        .map_or(0, |&(_, x)| x)
}

/// The banded matrix `A(C_n)`: row `i` is the `i`-th cycle vertex and column
/// `j` the `j`-th cycle edge, both in canonical traversal order.
pub fn cycle_incidence_matrix<T: ExactInt>(graph: &WeightedOrientedGraph, cycle: &Cycle) -> Matrix<T> {
    let n = cycle.len();
    let mut m = Matrix::zeros(n, n);
    for (j, &e) in cycle.edges().iter().enumerate() {
        for (i, &v) in cycle.vertices().iter().enumerate() {
            let x = entry(graph, e, v);
            if x != 0 {
                m[(i, j)] = T::from_unsigned(x);
            }
        }
    }
    m
}

pub fn cycle_determinant<T: ExactInt>(graph: &WeightedOrientedGraph, cycle: &Cycle) -> T {
    determinant(&cycle_incidence_matrix::<T>(graph, cycle)).expect("cycle matrix is square")
}

/// Products of the diagonal and of the wrap-around band of `A(C_n)`.
fn band_products(graph: &WeightedOrientedGraph, c: &Cycle) -> (BigInt, BigInt) {
    let n = c.len();
    let mut diag = BigInt::one();
    let mut off = BigInt::one();
    for i in 0..n {
        let e = c.edges()[i];
        diag *= entry(graph, e, c.vertices()[i]);
        off *= entry(graph, e, c.vertices()[(i + 1) % n]);
    }
    (diag, off)
}

/// Even length and equal diagonal and off-diagonal band products.
pub fn is_balanced(graph: &WeightedOrientedGraph, cycle: &[EdgeId]) -> Result<bool, GraphError> {
    let c = Cycle::from_edges(graph, cycle)?;
    if !c.is_even() {
        return Ok(false);
    }
    let (diag, off) = band_products(graph, &c);
    Ok(diag == off)
}

/// Half the edges point along the traversal and all vertices that are neither
/// a source nor a sink on the cycle carry the same weight.
pub fn is_uniformly_balanced(graph: &WeightedOrientedGraph, cycle: &[EdgeId]) -> Result<bool, GraphError> {
    let c = Cycle::from_edges(graph, cycle)?;
    if !c.is_even() {
        return Err(GraphError::OddLength { length: c.len() });
    }
    if 2 * c.forward_edge_count(graph) != c.len() {
        return Ok(false);
    }
    let mut inner = c
        .vertices()
        .iter()
        .filter(|&&v| !graph.is_sink_within(v, c.edges()) && !graph.is_source_within(v, c.edges()))
        .map(|&v| graph.weight(v));
    let Some(w) = inner.next() else {
        return Ok(true);
    };
    Ok(inner.all(|x| x == w))
}

/// The generator of a balanced cycle by the propagation algorithm.
///
/// With `r_1 = 1`, walk the cycle; at the vertex `x` shared by consecutive edges
/// `e_prev, e_cur`, divide by `w_x` if `x` is the tail of `e_prev` and the head
/// of `e_cur`, multiply by `w_x` in the mirrored case and carry the value
/// otherwise. Clearing denominators gives the exponents, which alternate
/// between the two monomials. The result is checked against the primitive
/// null vector of the cycle's columns.
pub fn balanced_cycle_generator(graph: &WeightedOrientedGraph, cycle: &[EdgeId]) -> Result<Binomial, ToricError> {
    let c = Cycle::from_edges(graph, cycle)?;
    if !is_balanced(graph, cycle)? {
        return Err(ToricError::NotBalanced);
    }
    let n = c.len();
    let mut r: Vec<Ratio<BigInt>> = vec![Ratio::one()];
    for i in 1..n {
        let x = c.vertices()[i];
        let prev = graph.edge(c.edges()[i - 1]);
        let cur = graph.edge(c.edges()[i]);
        let w = Ratio::from_integer(BigInt::from(graph.weight(x)));
        let last = r[i - 1].clone();
        let next = if prev.tail == x && cur.head == x {
            last / w
        } else if prev.head == x && cur.tail == x {
            last * w
        } else {
            last
        };
        r.push(next);
    }
    let lcm = r.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut plus = vec![0u64; graph.edge_count()];
    let mut minus = vec![0u64; graph.edge_count()];
    for (i, q) in r.iter().enumerate() {
        let b = (q * Ratio::from_integer(lcm.clone())).to_integer();
        let b = u64::try_from(b).map_err(|_| ToricError::ExponentOverflow)?;
        let e = c.edges()[i];
        if i % 2 == 0 {
            plus[e - 1] = b;
        } else {
            minus[e - 1] = b;
        }
    }
    let algorithmic = Binomial::new(plus, minus)?;

    let kernel = cycle_kernel_binomial(graph, &c)?;
    if kernel != algorithmic {
        return Err(ToricError::Internal(format!(
            "propagation gave {algorithmic}, null space gave {kernel}"
        )));
    }
    Ok(algorithmic)
}

/// Primitive null vector of the cycle's columns of `A`, as a binomial over all edges.
fn cycle_kernel_binomial(graph: &WeightedOrientedGraph, c: &Cycle) -> Result<Binomial, ToricError> {
    let a = incidence_matrix(graph);
    let cols: Vec<usize> = c.edges().iter().map(|&e| e - 1).collect();
    let null = null_space_basis(&a.matrix.select_columns(&cols));
    if null.len() != 1 {
        return Err(ToricError::Internal(format!(
            "balanced cycle has a {}-dimensional null space",
            null.len()
        )));
    }
    let local = primitive_integer_vector(&null[0])?;
    let mut u = vec![BigInt::from(0); graph.edge_count()];
    for (k, &e) in c.edges().iter().enumerate() {
        u[e - 1] = local[k].clone();
    }
    debug_assert!(u.iter().any(Signed::is_positive));
    Binomial::from_kernel_vector(&u)
}
