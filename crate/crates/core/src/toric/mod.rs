//! Toric ideals of weighted oriented graphs.
//!
//! The toric ideal `I_D` is the kernel of the monomial map sending the edge
//! variable of `(x_t, x_h)` to `x_t * x_h^{w_h}`. It is spanned by the binomials
//! `e^u+ - e^u-` with `A u = 0`, where `A` is the incidence matrix.

mod balance;
mod binomial;
mod ideal;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use balance::{
    balanced_cycle_generator, cycle_determinant, cycle_incidence_matrix, is_balanced, is_uniformly_balanced,
};
pub use binomial::{grevlex, presentation_order, Binomial};
pub use ideal::{
    compute_toric_ideal, compute_toric_ideal_with, is_zero_ideal, is_zero_ideal_in, predict_support,
    principal_generator, ComputeOptions, IdealKind, Method, ToricIdealResult, ZeroReason, ZeroVerdict,
};

use crate::exactalg::{ExactAlgError, Matrix};
use crate::graph::{EdgeGraph, EdgeId, GeneralEdgeMonomialGraph, GraphError, VertexId, WeightedOrientedGraph};
use crate::oracle::OracleError;
use crate::scalar::ExactInt;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ToricError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("the zero vector does not give a binomial")]
    ZeroVector,
    #[error("vector is not in the kernel of the incidence matrix")]
    NotInKernel,
    #[error("plus and minus monomials share e{edge}")]
    OverlappingSupports { edge: EdgeId },
    #[error("exponent does not fit in 64 bits")]
    ExponentOverflow,
    #[error("cycle is not balanced")]
    NotBalanced,
    #[error("kernel has dimension {dimension}, not 1")]
    NotPrincipal { dimension: usize },
    #[error("generator support {actual:?} differs from the predicted support {predicted:?}")]
    GenFormViolation {
        predicted: Vec<EdgeId>,
        actual: Vec<EdgeId>,
    },
    #[error("malformed binomial: {message}")]
    BadBinomial { message: String },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl From<ExactAlgError> for ToricError {
    fn from(e: ExactAlgError) -> Self {
        match e {
            ExactAlgError::ZeroVector => ToricError::ZeroVector,
            ExactAlgError::LengthMismatch { expected, found } => ToricError::LengthMismatch { expected, found },
            other => ToricError::Internal(other.to_string()),
        }
    }
}

/// Graphs the toric machinery accepts. Balance notions only exist for the
/// weighted oriented flavour, which exposes itself through [`ToricGraph::oriented`].
pub trait ToricGraph: EdgeGraph {
    fn oriented(&self) -> Option<&WeightedOrientedGraph> {
        None
    }
}

impl ToricGraph for WeightedOrientedGraph {
    fn oriented(&self) -> Option<&WeightedOrientedGraph> {
        Some(self)
    }
}

impl ToricGraph for GeneralEdgeMonomialGraph {}

/// The incidence matrix together with its row and column labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix<T = BigInt> {
    pub matrix: Matrix<T>,
    pub edge_of_column: Vec<EdgeId>,
    pub vertex_of_row: Vec<VertexId>,
}

impl<T: ExactInt> IncidenceMatrix<T> {
    pub fn edge_count(&self) -> usize {
        self.matrix.cols()
    }

    /// Column sums: the degree of each edge monomial, a positive grading of `I_D`.
    pub fn column_degrees(&self) -> Vec<T> {
        (0..self.matrix.cols())
            .map(|j| self.matrix.column(j).into_iter().fold(T::zero(), |a, b| a + b))
            .collect()
    }

    /// `true` if `A (plus - minus) = 0`.
    pub fn annihilates(&self, b: &Binomial) -> bool {
        if b.len() != self.edge_count() {
            return false;
        }
        let u: Vec<T> = b
            .plus()
            .iter()
            .zip(b.minus())
            .map(|(&p, &m)| T::from_unsigned(p) - T::from_unsigned(m))
            .collect();
        self.matrix.mul_vec(&u).is_ok_and(|v| v.iter().all(Zero::is_zero))
    }
}

/// Incidence matrix with `BigInt` entries.
pub fn incidence_matrix<G: EdgeGraph>(graph: &G) -> IncidenceMatrix {
    incidence_matrix_in(graph)
}

/// Rows in vertex order, columns in edge order; column `e` carries the two
/// exponents of the edge monomial of `e`.
pub fn incidence_matrix_in<T: ExactInt, G: EdgeGraph>(graph: &G) -> IncidenceMatrix<T> {
    let mut m = Matrix::<T>::zeros(graph.vertex_count(), graph.edge_count());
    for e in 1..=graph.edge_count() {
        for (v, exp) in graph.edge_monomial(e) {
            m[(v - 1, e - 1)] = m[(v - 1, e - 1)].clone() + T::from_unsigned(exp);
        }
    }
    IncidenceMatrix {
        matrix: m,
        edge_of_column: (1..=graph.edge_count()).collect(),
        vertex_of_row: (1..=graph.vertex_count()).collect(),
    }
}

/// Vertex exponent vector of the image of the edge monomial `e^edge_exponents`.
pub fn phi_image<G: EdgeGraph>(graph: &G, edge_exponents: &[u64]) -> Result<Vec<BigInt>, ToricError> {
    let a = incidence_matrix(graph);
    let v: Vec<BigInt> = edge_exponents.iter().map(|&x| BigInt::from(x)).collect();
    Ok(a.matrix.mul_vec(&v)?)
}

/// The binomial of a nonzero kernel vector, in canonical sign.
pub fn kernel_vector_to_binomial<T: ExactInt>(a: &IncidenceMatrix<T>, u: &[T]) -> Result<Binomial, ToricError> {
    let image = a.matrix.mul_vec(u)?;
    if u.iter().all(Zero::is_zero) {
        return Err(ToricError::ZeroVector);
    }
    if !image.iter().all(Zero::is_zero) {
        return Err(ToricError::NotInKernel);
    }
    Binomial::from_kernel_vector(u)
}
