use std::collections::{BTreeSet, HashSet};

use super::poly::{are_coprime, degree, divides, lcm, Monomial, MonomialOrder, SparseBinomialPoly};
use super::{Budget, OracleError};

/// Incremental Buchberger engine for binomial ideals.
///
/// Pairs are processed by the normal strategy (smallest lcm degree, then by
/// index). The product criterion and the chain criterion discard pairs.
#[derive(Debug, Clone)]
pub struct Engine {
    order: MonomialOrder,
    polys: Vec<SparseBinomialPoly>,
    leads: Vec<Monomial>,
    queue: BTreeSet<(u64, usize, usize)>,
    pending: HashSet<(usize, usize)>,
    reductions: usize,
    truncated: bool,
}

impl Engine {
    pub fn new(order: MonomialOrder) -> Self {
        Engine {
            order,
            polys: Vec::new(),
            leads: Vec::new(),
            queue: BTreeSet::new(),
            pending: HashSet::new(),
            reductions: 0,
            truncated: false,
        }
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    /// Current generators, monic, in insertion order.
    pub fn basis(&self) -> &[SparseBinomialPoly] {
        &self.polys
    }

    /// S-pair reductions performed so far.
    pub fn reductions(&self) -> usize {
        self.reductions
    }

    /// Full normal form of `p` modulo the current basis.
    pub fn reduce(&self, p: &SparseBinomialPoly) -> Result<SparseBinomialPoly, OracleError> {
        let mut p = p.clone();
        'outer: loop {
            let terms: Vec<(Monomial, _)> = p
                .sorted_terms(&self.order)
                .into_iter()
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            for (m, c) in terms {
                if let Some(k) = self.leads.iter().position(|l| divides(l, &m)) {
                    let shift: Monomial = m.iter().zip(&self.leads[k]).map(|(a, b)| a - b).collect();
                    let lc = self.polys[k]
                        .leading(&self.order)
                        .expect("basis element is nonzero")
                        .1
                        .clone();
                    p = p.sub_scaled(&(c / lc), &shift, &self.polys[k]);
                    if p.len() > 2 || (p.len() == 2 && !p.is_pure_binomial()) {
                        return Err(OracleError::NonBinomial { terms: p.len() });
                    }
                    continue 'outer;
                }
            }
            return Ok(p);
        }
    }

    /// Reduces `p` and, if the remainder is nonzero, adds it with its new pairs.
    /// Returns whether the basis grew.
    pub fn insert(&mut self, p: &SparseBinomialPoly) -> Result<bool, OracleError> {
        if !p.is_pure_binomial() {
            return Err(OracleError::NonBinomial { terms: p.len() });
        }
        let h = self.reduce(p)?;
        if h.is_zero() {
            return Ok(false);
        }
        let h = h.monic(&self.order);
        let lead = h.leading(&self.order).expect("nonzero").0.clone();
        let idx = self.polys.len();
        for j in 0..idx {
            let d = degree(&lcm(&self.leads[j], &lead));
            self.queue.insert((d, j, idx));
            self.pending.insert((j, idx));
        }
        self.polys.push(h);
        self.leads.push(lead);
        Ok(true)
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Runs Buchberger until the pair queue is empty or the budget runs out.
    /// Returns `true` if the basis is a complete Gröbner basis.
    pub fn run(&mut self, budget: &Budget) -> Result<bool, OracleError> {
        while let Some(&(d, i, j)) = self.queue.iter().next() {
            self.queue.remove(&(d, i, j));
            self.pending.remove(&(i, j));
            if are_coprime(&self.leads[i], &self.leads[j]) {
                continue;
            }
            let l = lcm(&self.leads[i], &self.leads[j]);
            let chain = (0..self.polys.len()).any(|k| {
                k != i && k != j && divides(&self.leads[k], &l) && !self.is_pending(i, k) && !self.is_pending(j, k)
            });
            if chain {
                continue;
            }
            if d > budget.max_degree {
                self.truncated = true;
                continue;
            }
            if self.reductions >= budget.max_pairs {
                self.truncated = true;
                self.queue.clear();
                self.pending.clear();
                break;
            }
            self.reductions += 1;
            let s = self.s_polynomial(i, j, &l);
            self.insert(&s)?;
        }
        Ok(!self.truncated)
    }

    fn s_polynomial(&self, i: usize, j: usize, l: &[u64]) -> SparseBinomialPoly {
        let shift = |k: usize| -> Monomial { l.iter().zip(&self.leads[k]).map(|(a, b)| a - b).collect() };
        let a = self.polys[i].mul_monomial(&shift(i));
        let lc_i = self.polys[i].leading(&self.order).expect("nonzero").1;
        let lc_j = self.polys[j].leading(&self.order).expect("nonzero").1;
        a.sub_scaled(&(lc_i / lc_j), &shift(j), &self.polys[j])
    }

    /// The reduced Gröbner basis of everything inserted, sorted by leading
    /// monomial (largest first). Only meaningful after a complete [`Engine::run`].
    pub fn reduced_basis(&self) -> Result<Vec<SparseBinomialPoly>, OracleError> {
        let n = self.polys.len();
        let keep: Vec<usize> = (0..n)
            .filter(|&i| {
                !(0..n).any(|j| {
                    j != i && divides(&self.leads[j], &self.leads[i]) && (self.leads[j] != self.leads[i] || j < i)
                })
            })
            .collect();
        let mut minimal = Engine::new(self.order);
        for &i in &keep {
            minimal.polys.push(self.polys[i].clone());
            minimal.leads.push(self.leads[i].clone());
        }
        let mut out = Vec::with_capacity(keep.len());
        for k in 0..minimal.polys.len() {
            let p = &minimal.polys[k];
            let (lead, lc) = p.leading(&self.order).expect("nonzero");
            let tail = SparseBinomialPoly::from_terms(
                p.terms()
                    .filter(|(m, _)| *m != lead)
                    .map(|(m, c)| (m.clone(), c.clone())),
            );
            let mut others = minimal.clone();
            others.polys.remove(k);
            others.leads.remove(k);
            let tail = others.reduce(&tail)?;
            let full = SparseBinomialPoly::from_terms(
                std::iter::once((lead.clone(), lc.clone())).chain(tail.terms().map(|(m, c)| (m.clone(), c.clone()))),
            );
            out.push(full.monic(&self.order));
        }
        out.sort_by(|a, b| {
            let la = a.leading(&self.order).expect("nonzero").0;
            let lb = b.leading(&self.order).expect("nonzero").0;
            self.order.cmp(lb, la)
        });
        Ok(out)
    }
}

/// `true` if every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn s_pairs_reduce_to_zero(basis: &[SparseBinomialPoly], order: MonomialOrder) -> Result<bool, OracleError> {
    let mut e = Engine::new(order);
    for p in basis {
        if p.is_zero() {
            continue;
        }
        let p = p.monic(&order);
        e.leads.push(p.leading(&order).expect("nonzero").0.clone());
        e.polys.push(p);
    }
    for i in 0..e.polys.len() {
        for j in i + 1..e.polys.len() {
            let l = lcm(&e.leads[i], &e.leads[j]);
            if !e.reduce(&e.s_polynomial(i, j, &l))?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::toric::Binomial;

    fn poly(plus: &[u64], minus: &[u64]) -> SparseBinomialPoly {
        SparseBinomialPoly::from_binomial(&Binomial::new(plus.to_vec(), minus.to_vec()).unwrap(), 0)
    }

    #[test]
    fn twisted_cubic() {
        // e1 e3 - e2^2, e1 e4 - e2 e3, e2 e4 - e3^2
        let order = MonomialOrder::grevlex(4);
        let mut e = Engine::new(order);
        e.insert(&poly(&[1, 0, 0, 1], &[0, 1, 1, 0])).unwrap();
        e.insert(&poly(&[1, 0, 1, 0], &[0, 2, 0, 0])).unwrap();
        e.insert(&poly(&[0, 1, 0, 1], &[0, 0, 2, 0])).unwrap();
        assert!(e.run(&Budget::default()).unwrap());
        let gb = e.reduced_basis().unwrap();
        assert_eq!(gb.len(), 3);
        assert!(s_pairs_reduce_to_zero(&gb, order).unwrap());
        // e1 e4^2 - e3^3 is in the ideal; e1 - e2 is not
        assert!(e.reduce(&poly(&[1, 0, 0, 2], &[0, 0, 3, 0])).unwrap().is_zero());
        assert!(!e.reduce(&poly(&[1, 0, 0, 0], &[0, 1, 0, 0])).unwrap().is_zero());
    }

    #[test]
    fn completion_passes_self_check() {
        let order = MonomialOrder::grevlex(3);
        let gens = [poly(&[2, 0, 0], &[0, 1, 1]), poly(&[1, 1, 0], &[0, 0, 2])];
        let mut e = Engine::new(order);
        for g in &gens {
            e.insert(g).unwrap();
        }
        assert!(e.run(&Budget::default()).unwrap());
        let gb = e.reduced_basis().unwrap();
        assert!(gb.len() > 2);
        assert!(s_pairs_reduce_to_zero(&gb, order).unwrap());
    }

    #[test]
    fn budget_truncates() {
        let order = MonomialOrder::grevlex(4);
        let mut e = Engine::new(order);
        e.insert(&poly(&[1, 0, 0, 1], &[0, 1, 1, 0])).unwrap();
        e.insert(&poly(&[1, 0, 1, 0], &[0, 2, 0, 0])).unwrap();
        let tight = Budget {
            max_pairs: 0,
            max_degree: 600,
        };
        assert!(!e.run(&tight).unwrap());
    }
}
