//! Brute-force ground truth for toric ideals.
//!
//! A lattice basis of `ker_Z A` gives binomials generating an ideal whose
//! saturation by the product of all variables is `I_A`. Adjoining `t` with
//! `t * e1 * ... * en - 1` and eliminating `t` computes that saturation in one
//! Gröbner basis run. Everything stays binomial with coefficients `+-1`, which
//! the engine asserts along the way.

mod buchberger;
mod poly;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use buchberger::{s_pairs_reduce_to_zero, Engine};
pub use poly::{Coefficient, Monomial, MonomialOrder, SparseBinomialPoly};

use crate::exactalg::integer_kernel_basis;
use crate::scalar::ExactInt;
use crate::toric::{presentation_order, Binomial, IncidenceMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("basis element {index} is not in the kernel of the incidence matrix")]
    NotInKernel { index: usize },
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("reduction produced a polynomial with {terms} terms; expected a binomial")]
    NonBinomial { terms: usize },
}

/// Resource limits for one Buchberger run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// S-pair reductions.
    pub max_pairs: usize,
    /// Pairs whose lcm exceeds this total degree are skipped (and the run is
    /// then no longer certified).
    pub max_degree: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pairs: 200_000,
            max_degree: 600,
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_pairs: usize::MAX,
            max_degree: u64::MAX,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MarkovBasis {
    pub basis: Vec<Binomial>,
    /// `true` when Buchberger finished within budget and `basis` is minimal.
    pub certified: bool,
}

/// One binomial per vector of a lattice basis of `ker_Z A`.
pub fn lattice_ideal_generators<T: ExactInt>(a: &IncidenceMatrix<T>) -> Vec<Binomial> {
    integer_kernel_basis(&a.matrix)
        .iter()
        .map(|u| Binomial::from_kernel_vector(u).expect("lattice basis vectors are nonzero"))
        .collect()
}

fn lift_binomial(p: &SparseBinomialPoly, order: &MonomialOrder) -> Option<Binomial> {
    let n = order.edge_vars;
    let t = p.sorted_terms(order);
    if t.len() != 2 || t.iter().any(|(m, _)| m[n..].iter().any(|&x| x != 0)) {
        return None;
    }
    Binomial::new_reduced(t[0].0[..n].to_vec(), t[1].0[..n].to_vec()).ok()
}

/// A generating set of the toric ideal of `a`, minimalized when certified.
pub fn saturate_markov_basis<T: ExactInt>(a: &IncidenceMatrix<T>, budget: &Budget) -> Result<MarkovBasis, OracleError> {
    let mu = a.edge_count();
    let lattice = lattice_ideal_generators(a);
    if lattice.is_empty() {
        return Ok(MarkovBasis {
            basis: Vec::new(),
            certified: true,
        });
    }
    let order = MonomialOrder::elimination(mu);
    let mut engine = Engine::new(order);
    for b in &lattice {
        engine.insert(&SparseBinomialPoly::from_binomial(b, 1))?;
    }
    let unit = SparseBinomialPoly::from_terms([
        (vec![1; mu + 1], Coefficient::one()),
        (vec![0; mu + 1], -Coefficient::one()),
    ]);
    engine.insert(&unit)?;
    let complete = engine.run(budget)?;
    let gb = if complete {
        engine.reduced_basis()?
    } else {
        engine.basis().to_vec()
    };
    let mut toric: Vec<Binomial> = gb.iter().filter_map(|p| lift_binomial(p, &order)).collect();
    if complete {
        Ok(MarkovBasis {
            basis: minimalize(&toric, a)?,
            certified: true,
        })
    } else {
        toric.sort_by(presentation_order);
        toric.dedup();
        Ok(MarkovBasis {
            basis: toric,
            certified: false,
        })
    }
}

/// A minimal generating subset of the ideal spanned by `basis`.
///
/// Toric ideals are graded by the column sums of `a`. Elements are visited by
/// increasing degree and kept only if they are not already in the ideal of the
/// elements kept so far.
pub fn minimalize<T: ExactInt>(basis: &[Binomial], a: &IncidenceMatrix<T>) -> Result<Vec<Binomial>, OracleError> {
    let mu = a.edge_count();
    for (index, b) in basis.iter().enumerate() {
        if b.len() != mu {
            return Err(OracleError::LengthMismatch {
                expected: mu,
                found: b.len(),
            });
        }
        if !a.annihilates(b) {
            return Err(OracleError::NotInKernel { index });
        }
    }
    let weights: Vec<BigInt> = a.column_degrees().iter().map(ExactInt::to_bigint).collect();
    let graded = |b: &Binomial| -> BigInt { b.plus().iter().zip(&weights).map(|(&x, w)| w * x).sum() };
    let mut sorted: Vec<&Binomial> = basis.iter().collect();
    sorted.sort_by(|x, y| graded(x).cmp(&graded(y)).then_with(|| presentation_order(x, y)));
    sorted.dedup();

    let mut engine = Engine::new(MonomialOrder::grevlex(mu));
    let mut kept = Vec::new();
    for b in sorted {
        let p = SparseBinomialPoly::from_binomial(b, 0);
        if engine.reduce(&p)?.is_zero() {
            continue;
        }
        kept.push(b.clone());
        engine.insert(&p)?;
        engine.run(&Budget::unlimited())?;
    }
    Ok(kept)
}

/// `true` iff `f` lies in the ideal generated by `basis`.
pub fn verify_membership(f: &Binomial, basis: &[Binomial]) -> bool {
    if basis.iter().any(|b| b.len() != f.len()) {
        return false;
    }
    let mut engine = Engine::new(MonomialOrder::grevlex(f.len()));
    let mut check = || -> Result<bool, OracleError> {
        for b in basis {
            engine.insert(&SparseBinomialPoly::from_binomial(b, 0))?;
        }
        engine.run(&Budget::unlimited())?;
        Ok(engine.reduce(&SparseBinomialPoly::from_binomial(f, 0))?.is_zero())
    };
    check().expect("binomial reduction stays binomial")
}

/// Every element of `a` lies in the ideal of `b` and vice versa.
pub fn same_ideal(a: &[Binomial], b: &[Binomial]) -> bool {
    a.iter().all(|f| verify_membership(f, b)) && b.iter().all(|f| verify_membership(f, a))
}
