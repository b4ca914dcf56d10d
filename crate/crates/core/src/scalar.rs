//! Exact integer scalars.
//!
//! Every routine in [`crate::exactalg`] and the matrix-facing parts of
//! [`crate::toric`] is generic over [`ExactInt`]. `BigInt` is the default and
//! never overflows; `i64`/`i128` are much faster for exhaustive sweeps over
//! small graphs but will panic on overflow in debug builds.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact, signed, Euclidean integer type.
pub trait ExactInt:
    Integer + Signed + Clone + Debug + Display + FromPrimitive + ToPrimitive + Send + Sync + 'static
{
    /// Lossless conversion from an unsigned weight or exponent.
    fn from_unsigned(v: u64) -> Self {
        <Self as FromPrimitive>::from_u64(v).expect("value does not fit the scalar type")
    }

    /// Conversion to `BigInt`, used when results leave the generic layer.
    fn to_bigint(&self) -> BigInt;
}

impl ExactInt for i64 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for i128 {
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl ExactInt for BigInt {
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

/// Extended Euclid: returns `(g, x, y)` with `g = gcd(a, b) >= 0` and
/// `a*x + b*y = g`.
pub fn extended_gcd<T: ExactInt>(a: &T, b: &T) -> (T, T, T) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (T::one(), T::zero());
    let (mut old_t, mut t) = (T::zero(), T::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = old_r - q.clone() * r.clone();
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = old_s - q.clone() * s.clone();
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = old_t - q * t.clone();
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}
