use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::toric::{grevlex, Binomial};

pub type Monomial = Vec<u64>;
pub type Coefficient = Ratio<BigInt>;

/// Block order: with an auxiliary variable (stored last) its exponent decides
/// first; ties, and all comparisons without one, use grevlex on the edge
/// variables with `e1 > e2 > ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialOrder {
    pub edge_vars: usize,
    pub auxiliary: bool,
}

impl MonomialOrder {
    pub fn grevlex(edge_vars: usize) -> Self {
        MonomialOrder {
            edge_vars,
            auxiliary: false,
        }
    }

    pub fn elimination(edge_vars: usize) -> Self {
        MonomialOrder {
            edge_vars,
            auxiliary: true,
        }
    }

    pub fn width(&self) -> usize {
        self.edge_vars + usize::from(self.auxiliary)
    }

    pub fn cmp(&self, a: &[u64], b: &[u64]) -> Ordering {
        let n = self.edge_vars;
        let block = if self.auxiliary {
            a[n].cmp(&b[n])
        } else {
            Ordering::Equal
        };
        block.then_with(|| grevlex(&a[..n], &b[..n]))
    }
}

pub fn divides(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u64], b: &[u64]) -> Monomial {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub fn are_coprime(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}

pub fn degree(a: &[u64]) -> u64 {
    a.iter().sum()
}

/// A polynomial stored as exponent vector -> nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparseBinomialPoly {
    terms: BTreeMap<Monomial, Coefficient>,
}

impl SparseBinomialPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Sums duplicate monomials and drops zero coefficients.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Coefficient)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `e^plus - e^minus`, padded with `extra` zero exponents.
    pub fn from_binomial(b: &Binomial, extra: usize) -> Self {
        let pad = |v: &[u64]| -> Monomial { v.iter().copied().chain(std::iter::repeat_n(0, extra)).collect() };
        Self::from_terms([
            (pad(b.plus()), Coefficient::one()),
            (pad(b.minus()), -Coefficient::one()),
        ])
    }

    fn add_term(&mut self, m: Monomial, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    /// Terms from largest to smallest.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Coefficient)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| order.cmp(b.0, a.0));
        t
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Monomial, &Coefficient)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// `self - c * x^shift * other`.
    pub fn sub_scaled(&self, c: &Coefficient, shift: &[u64], other: &SparseBinomialPoly) -> Self {
        let mut out = self.clone();
        for (m, d) in &other.terms {
            let moved: Monomial = m.iter().zip(shift).map(|(x, y)| x + y).collect();
            out.add_term(moved, -(c * d));
        }
        out
    }

    pub fn mul_monomial(&self, shift: &[u64]) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.iter().zip(shift).map(|(x, y)| x + y).collect(), c.clone())),
        )
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        let Some((_, lc)) = self.leading(order) else {
            return self.clone();
        };
        let lc = lc.clone();
        SparseBinomialPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c / &lc)).collect(),
        }
    }

    /// Zero, or two terms whose coefficients are `1` and `-1`.
    pub fn is_pure_binomial(&self) -> bool {
        match self.terms.len() {
            0 => true,
            2 => {
                let mut cs = self.terms.values();
                let (a, b) = (cs.next().expect("two terms"), cs.next().expect("two terms"));
                a.abs().is_one() && (a + b).is_zero()
            }
            _ => false,
        }
    }

    /// The binomial `lead - trail` over the first `edge_vars` variables, if every
    /// variable beyond them has exponent zero and the supports are disjoint.
    pub fn to_binomial(&self, order: &MonomialOrder) -> Option<Binomial> {
        if !self.is_pure_binomial() || self.is_zero() {
            return None;
        }
        let t = self.sorted_terms(order);
        let n = order.edge_vars;
        if t.iter().any(|(m, _)| m[n..].iter().any(|&x| x != 0)) {
            return None;
        }
        Binomial::new(t[0].0[..n].to_vec(), t[1].0[..n].to_vec()).ok()
    }
}
