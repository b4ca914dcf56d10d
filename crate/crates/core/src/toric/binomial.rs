use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;

use serde::{Deserialize, Serialize};

use super::ToricError;
use crate::graph::EdgeId;
use crate::scalar::ExactInt;

/// An irreducible binomial `e^plus - e^minus` over the edge variables.
///
/// Supports are disjoint, not both monomials are `1`, and the sign is canonical:
/// the smallest edge id in the combined support belongs to `plus`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Binomial {
    plus: Vec<u64>,
    minus: Vec<u64>,
}

impl Binomial {
    /// Validates supports and flips to the canonical sign if necessary.
    pub fn new(plus: Vec<u64>, minus: Vec<u64>) -> Result<Self, ToricError> {
        if plus.len() != minus.len() {
            return Err(ToricError::LengthMismatch {
                expected: plus.len(),
                found: minus.len(),
            });
        }
        if let Some(i) = (0..plus.len()).find(|&i| plus[i] != 0 && minus[i] != 0) {
            return Err(ToricError::OverlappingSupports { edge: i + 1 });
        }
        let first = (0..plus.len()).find(|&i| plus[i] != 0 || minus[i] != 0);
        match first {
            None => Err(ToricError::ZeroVector),
            Some(i) if plus[i] == 0 => Ok(Binomial {
                plus: minus,
                minus: plus,
            }),
            Some(_) => Ok(Binomial { plus, minus }),
        }
    }

    /// Like [`Binomial::new`] but first cancels the common monomial factor.
    pub fn new_reduced(mut plus: Vec<u64>, mut minus: Vec<u64>) -> Result<Self, ToricError> {
        for (p, m) in plus.iter_mut().zip(minus.iter_mut()) {
            let common = (*p).min(*m);
            *p -= common;
            *m -= common;
        }
        Self::new(plus, minus)
    }

    /// `u = plus - minus` for the canonical sign of `u`.
    pub fn from_kernel_vector<T: ExactInt>(u: &[T]) -> Result<Self, ToricError> {
        let mut plus = vec![0; u.len()];
        let mut minus = vec![0; u.len()];
        for (i, x) in u.iter().enumerate() {
            let mag = x.abs().to_u64().ok_or(ToricError::ExponentOverflow)?;
            if x.is_positive() {
                plus[i] = mag;
            } else if x.is_negative() {
                minus[i] = mag;
            }
        }
        Self::new(plus, minus)
    }

    pub fn plus(&self) -> &[u64] {
        &self.plus
    }

    pub fn minus(&self) -> &[u64] {
        &self.minus
    }

    /// Number of edge variables.
    pub fn len(&self) -> usize {
        self.plus.len()
    }

    pub fn is_empty(&self) -> bool {
        self.plus.is_empty()
    }

    /// `plus - minus` as a signed vector.
    pub fn exponent_vector(&self) -> Vec<BigInt> {
        self.plus
            .iter()
            .zip(&self.minus)
            .map(|(&p, &m)| BigInt::from(p) - BigInt::from(m))
            .collect()
    }

    pub fn support(&self) -> BTreeSet<EdgeId> {
        (0..self.len())
            .filter(|&i| self.plus[i] != 0 || self.minus[i] != 0)
            .map(|i| i + 1)
            .collect()
    }

    /// Total degree of the binomial as a polynomial.
    pub fn degree(&self) -> u64 {
        self.plus.iter().sum::<u64>().max(self.minus.iter().sum())
    }

    /// Re-indexes into a larger edge set: local edge `j + 1` becomes `edge_map[j]`.
    pub fn embed(&self, edge_count: usize, edge_map: &[EdgeId]) -> Binomial {
        let mut plus = vec![0; edge_count];
        let mut minus = vec![0; edge_count];
        for (j, &e) in edge_map.iter().enumerate() {
            plus[e - 1] = self.plus[j];
            minus[e - 1] = self.minus[j];
        }
        Binomial::new(plus, minus).expect("embedding preserves validity")
    }

    /// Parses the printing grammar, e.g. `e1^2 e3 - e2^2`; `1` stands for the
    /// empty monomial. A comment after `#` is ignored. Exponents may be omitted.
    pub fn parse(text: &str, edge_count: usize) -> Result<Binomial, ToricError> {
        let text = text.split('#').next().unwrap_or("").trim();
        let bad = |msg: String| ToricError::BadBinomial { message: msg };
        let (lhs, rhs) = text
            .split_once(" - ")
            .or_else(|| text.split_once('-'))
            .ok_or_else(|| bad(format!("missing ' - ' in `{text}`")))?;
        let parse_side = |side: &str| -> Result<Vec<u64>, ToricError> {
            let mut exps = vec![0u64; edge_count];
            for tok in side.split_whitespace() {
                if tok == "1" {
                    continue;
                }
                let tok = tok.trim_start_matches('*');
                let body = tok
                    .strip_prefix('e')
                    .ok_or_else(|| bad(format!("expected `e<id>^<exp>`, found `{tok}`")))?;
                let (id, exp) = match body.split_once('^') {
                    Some((id, exp)) => (id, exp),
                    None => (body, "1"),
                };
                let id: usize = id.parse().map_err(|_| bad(format!("bad edge id in `{tok}`")))?;
                let exp: u64 = exp.parse().map_err(|_| bad(format!("bad exponent in `{tok}`")))?;
                if id == 0 || id > edge_count {
                    return Err(bad(format!("edge e{id} out of range 1..={edge_count}")));
                }
                exps[id - 1] = exps[id - 1].checked_add(exp).ok_or(ToricError::ExponentOverflow)?;
            }
            Ok(exps)
        };
        Binomial::new_reduced(parse_side(lhs)?, parse_side(rhs)?)
    }
}

fn fmt_monomial(exps: &[u64], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for (i, &x) in exps.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if !first {
            f.write_str(" ")?;
        }
        write!(f, "e{}^{}", i + 1, x)?;
        first = false;
    }
    if first {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for Binomial {
    /// `e1^1 e3^16 - e2^4 e8^1`: ascending ids, explicit exponents.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_monomial(&self.plus, f)?;
        f.write_str(" - ")?;
        fmt_monomial(&self.minus, f)
    }
}

/// Graded reverse lexicographic comparison with `e1 > e2 > ...`.
pub fn grevlex(a: &[u64], b: &[u64]) -> Ordering {
    let da: u64 = a.iter().sum();
    let db: u64 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for i in (0..a.len()).rev() {
            if a[i] != b[i] {
                return b[i].cmp(&a[i]);
            }
        }
        Ordering::Equal
    })
}

/// Presentation order for generator lists: ascending degree, ties broken by the
/// grevlex order of the plus and then the minus monomials.
pub fn presentation_order(a: &Binomial, b: &Binomial) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| grevlex(a.plus(), b.plus()))
        .then_with(|| grevlex(a.minus(), b.minus()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_sign() {
        let b = Binomial::new(vec![0, 1], vec![1, 0]).unwrap();
        assert_eq!(b.plus(), &[1, 0]);
        assert_eq!(b.minus(), &[0, 1]);
        assert_eq!(b.to_string(), "e1^1 - e2^1");
        assert!(matches!(
            Binomial::new(vec![1, 0], vec![1, 0]),
            Err(ToricError::OverlappingSupports { edge: 1 })
        ));
        assert!(matches!(
            Binomial::new(vec![0, 0], vec![0, 0]),
            Err(ToricError::ZeroVector)
        ));
    }

    #[test]
    fn from_kernel_vector_splits_signs() {
        let u: Vec<i64> = vec![-1, 4, -16, 16, -8, 4, -2, 1];
        let b = Binomial::from_kernel_vector(&u).unwrap();
        assert_eq!(b.to_string(), "e1^1 e3^16 e5^8 e7^2 - e2^4 e4^16 e6^4 e8^1");
        assert!(matches!(
            Binomial::from_kernel_vector(&[0i64, 0]),
            Err(ToricError::ZeroVector)
        ));
    }

    #[test]
    fn parse_round_trip() {
        let b = Binomial::parse("e1^1 e3^16 e5^8 e7^2 - e2^4 e4^16 e6^4 e8^1", 8).unwrap();
        assert_eq!(b.to_string(), "e1^1 e3^16 e5^8 e7^2 - e2^4 e4^16 e6^4 e8^1");
        let loose = Binomial::parse("e2^2 e5 - e1 e3^4", 5).unwrap();
        assert_eq!(loose.to_string(), "e1^1 e3^4 - e2^2 e5^1");
        let cancelled = Binomial::parse("e1^2 e3 - e1 e2", 3).unwrap();
        assert_eq!(cancelled.to_string(), "e1^1 e3^1 - e2^1");
        assert!(Binomial::parse("e1 e9 - e2", 3).is_err());
        assert!(Binomial::parse("e1 e2", 3).is_err());
        assert_eq!(Binomial::parse("1 - e2^3", 3).unwrap().to_string(), "e2^3 - 1");
    }

    #[test]
    fn embedding() {
        let b = Binomial::new(vec![1, 0], vec![0, 2]).unwrap();
        let e = b.embed(5, &[4, 2]);
        assert_eq!(e.to_string(), "e2^2 - e4^1");
        assert_eq!(e.support(), [2, 4].into_iter().collect());
    }
}
