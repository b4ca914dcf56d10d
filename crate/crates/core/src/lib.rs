//! Toric ideals of vertex-weighted oriented graphs.
//!
//! The crate is organised bottom-up: [`scalar`] and [`exactalg`] provide exact
//! integer and rational linear algebra, [`graph`] the combinatorics, [`toric`]
//! the ideal-theoretic layer and [`oracle`] an independent Gröbner-basis
//! computation used to cross-check it. [`cli`] holds the text formats used by
//! the `wogtoric` binary.

pub mod cli;
pub mod exactalg;
pub mod graph;
pub mod oracle;
pub mod scalar;
pub mod toric;

pub use num_bigint::BigInt;

/// Arbitrary-precision rationals.
pub type Rational = num_rational::Ratio<BigInt>;
/// Integer matrices with arbitrary-precision entries.
pub type IntMatrix = exactalg::Matrix<BigInt>;
/// Rational vectors with arbitrary-precision entries.
pub type RationalVector = exactalg::RationalVector<BigInt>;
/// Incidence matrices with `i64` entries, for exhaustive sweeps over small graphs.
pub type SmallIncidenceMatrix = toric::IncidenceMatrix<i64>;
