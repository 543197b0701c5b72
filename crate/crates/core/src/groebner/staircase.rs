//! Monomial ideals through their minimal generators.

use crate::polyring::{Monomial, NatInf};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Staircase {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl Staircase {
    /// Monomial ideal generated by `gens`; non-minimal generators are dropped.
    pub fn new(nvars: usize, gens: Vec<Monomial>) -> Staircase {
        let mut sorted = gens;
        sorted.sort_by_key(|m| m.degree());
        sorted.dedup();
        let mut min: Vec<Monomial> = Vec::new();
        for m in sorted {
            if !min.iter().any(|g| g.divides(&m)) {
                min.push(m);
            }
        }
        min.sort();
        Staircase { nvars, gens: min }
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whether every variable has a pure power in the ideal.
    pub fn is_finite(&self) -> bool {
        (0..self.nvars).all(|i| {
            self.gens
                .iter()
                .any(|g| g.exps().iter().enumerate().all(|(j, &e)| j == i || e == 0))
        })
    }

    /// Standard monomials, in the order they are discovered; `None` when
    /// there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = Vec::new();
        if self.contains(&Monomial::one(self.nvars)) {
            return Some(out);
        }
        // every standard monomial is reached by raising exponents in
        // nondecreasing variable order through standard monomials
        let mut stack = vec![(Monomial::one(self.nvars), 0usize)];
        while let Some((m, from)) = stack.pop() {
            for i in from..self.nvars {
                let mut e = m.0.clone();
                e[i] += 1;
                let next = Monomial(e);
                if !self.contains(&next) {
                    stack.push((next, i));
                }
            }
            out.push(m);
        }
        Some(out)
    }

    pub fn colength(&self) -> NatInf {
        match self.standard_monomials() {
            Some(s) => NatInf::Fin(s.len() as u64),
            None => NatInf::Inf,
        }
    }
}
