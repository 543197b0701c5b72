//! Ideals with cached Gröbner bases and the membership-style queries built
//! on them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use super::buchberger::groebner_basis;
use super::staircase::Staircase;
use super::GroebnerError;
use crate::polyring::{normal_form, Monomial, NatInf, Poly, Ring, TermOrder, WeightVec};

/// Ideal of a polynomial ring, given by generators.
#[derive(Debug)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    cache: Mutex<HashMap<TermOrder, Arc<Vec<Poly>>>>,
    local: Mutex<HashMap<Vec<u64>, Arc<Vec<Poly>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(self.cache.lock().unwrap().clone()),
            local: Mutex::new(self.local.lock().unwrap().clone()),
        }
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<Ideal, GroebnerError> {
        if gens.iter().any(|g| g.ring() != ring) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens,
            cache: Mutex::new(HashMap::new()),
            local: Mutex::new(HashMap::new()),
        })
    }

    /// Parse one generator per string.
    pub fn parse(ring: &Ring, gens: &[&str]) -> Result<Ideal, GroebnerError> {
        let polys = gens
            .iter()
            .map(|g| ring.parse(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, polys)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Poly] {
        &self.gens
    }

    /// Ideal generated by these generators and `extra`.
    pub fn with(&self, extra: &[Poly]) -> Ideal {
        let mut g = self.gens.clone();
        g.extend(extra.iter().cloned());
        Ideal::new(&self.ring, g).expect("ring mismatch")
    }

    /// Reduced Gröbner basis under `ord`, computed once per order.
    pub fn groebner(&self, ord: &TermOrder) -> Arc<Vec<Poly>> {
        if let Some(g) = self.cache.lock().unwrap().get(ord) {
            return g.clone();
        }
        let gb: Vec<Poly> = groebner_basis(&self.ring, &self.gens, ord, None)
            .into_iter()
            .map(|t| t.poly)
            .collect();
        let gb = Arc::new(gb);
        self.cache
            .lock()
            .unwrap()
            .insert(ord.clone(), gb.clone());
        gb
    }

    /// Cache of local standard bases keyed by weight vector.
    pub(crate) fn local_cache(&self) -> &Mutex<HashMap<Vec<u64>, Arc<Vec<Poly>>>> {
        &self.local
    }

    pub fn is_unit(&self) -> bool {
        self.groebner(&TermOrder::DegRevLex)
            .iter()
            .any(|g| g.is_unit())
    }

    pub fn is_zero(&self) -> bool {
        self.gens.iter().all(|g| g.is_zero())
    }

    pub fn normal_form(&self, f: &Poly, ord: &TermOrder) -> Poly {
        normal_form(f, &self.groebner(ord), ord)
    }

    /// `f ∈ I`.
    pub fn contains(&self, f: &Poly) -> bool {
        f.is_zero() || self.normal_form(f, &TermOrder::DegRevLex).is_zero()
    }

    /// Every generator of `other` lies in this ideal.
    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// `f ∈ √I`, decided by whether `I + ⟨1 - y·f⟩` is the unit ideal for a
    /// fresh variable `y`.
    pub fn contains_radical(&self, f: &Poly) -> bool {
        if f.is_zero() {
            return true;
        }
        let y = self.ring.fresh_name(&[]);
        let big = self.ring.extend(&[y]).unwrap();
        let yi = big.nvars() - 1;
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.embed(&big)).collect();
        gens.push(big.one().sub(&big.var(yi).mul(&f.embed(&big))));
        Ideal::new(&big, gens).unwrap().is_unit()
    }

    /// `I : f^∞`, by eliminating `y` from `I + ⟨1 - y·f⟩`.
    pub fn saturation(&self, f: &Poly) -> Ideal {
        let n = self.ring.nvars();
        let mut names = vec![self.ring.fresh_name(&[])];
        names.extend(self.ring.vars().iter().cloned());
        let big = Ring::from_names(self.ring.field(), names).unwrap();
        let shift: Vec<usize> = (1..=n).collect();
        let mut gens: Vec<Poly> = self.gens.iter().map(|g| g.map_vars(&big, &shift)).collect();
        gens.push(big.one().sub(&big.var(0).mul(&f.map_vars(&big, &shift))));
        let ord = TermOrder::Elimination { front: 1 };
        let back: Vec<usize> = std::iter::once(0).chain(0..n).collect();
        let kept = Ideal::new(&big, gens)
            .unwrap()
            .groebner(&ord)
            .iter()
            .filter(|g| g.degree_in(0) == 0)
            .map(|g| g.map_vars(&self.ring, &back))
            .collect();
        Ideal::new(&self.ring, kept).unwrap()
    }

    /// Leading monomials of the reduced Gröbner basis under `ord`.
    pub fn leading_monomials(&self, ord: &TermOrder) -> Vec<Monomial> {
        self.groebner(ord)
            .iter()
            .map(|g| g.leading_term(ord).unwrap().0)
            .collect()
    }

    /// Staircase of the leading ideal under `ord`.
    pub fn staircase(&self, ord: &TermOrder) -> Staircase {
        Staircase::new(self.ring.nvars(), self.leading_monomials(ord))
    }

    /// `dim_k k[x]/I`, infinite when the quotient is not finite-dimensional.
    pub fn colength(&self) -> NatInf {
        self.staircase(&TermOrder::DegRevLex).colength()
    }

    /// Krull dimension via maximal independent sets of variables.
    pub fn krull_dimension(&self) -> Result<usize, GroebnerError> {
        if self.is_unit() {
            return Err(GroebnerError::UnitIdeal);
        }
        let lms = self.leading_monomials(&TermOrder::DegRevLex);
        let n = self.ring.nvars();
        let mut best = 0;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = lms.iter().all(|m| {
                m.exps()
                    .iter()
                    .enumerate()
                    .any(|(i, &e)| e > 0 && mask & (1 << i) == 0)
            });
            if independent {
                best = size;
            }
        }
        Ok(best)
    }

    /// A monomial of the ideal, if there is one. Existence is decided by
    /// whether the product of all variables lies in the radical (the
    /// saturation by that product is then the unit ideal). The returned
    /// witness is a monomial of least `w`-degree (or total degree without
    /// `w`), ties broken by total degree and then lexicographically.
    pub fn contains_monomial(&self, w: Option<&WeightVec>) -> Result<Option<Monomial>, GroebnerError> {
        let n = self.ring.nvars();
        let weights: Vec<u64> = match w {
            Some(w) => {
                let fin = w.as_finite().ok_or(GroebnerError::InfiniteWeight)?;
                if let Some(g) = self.gens.iter().find(|g| !g.is_homogeneous(w)) {
                    return Err(GroebnerError::NotHomogeneous(g.to_string()));
                }
                fin
            }
            None => vec![1; n],
        };
        if self.is_unit() {
            return Ok(Some(Monomial::one(n)));
        }
        let prod = self.ring.monomial(Monomial(vec![1; n]));
        if !self.contains_radical(&prod) {
            return Ok(None);
        }
        let mut m = 1;
        while !self.contains(&prod.pow(m)) {
            m += 1;
        }
        let bound = Monomial(vec![m; n]).wdeg(&weights);
        let mut d: u128 = 1;
        while d <= bound {
            let mut cands = monomials_of_wdeg(&weights, d);
            cands.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));
            if let Some(found) = cands
                .into_iter()
                .find(|c| self.contains(&self.ring.monomial(c.clone())))
            {
                return Ok(Some(found));
            }
            d += 1;
        }
        Ok(Some(Monomial(vec![m; n])))
    }
}

/// All monomials with `w·a = d`.
pub(crate) fn monomials_of_wdeg(w: &[u64], d: u128) -> Vec<Monomial> {
    fn rec(w: &[u64], i: usize, left: u128, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i == w.len() {
            if left == 0 {
                out.push(Monomial(cur.clone()));
            }
            return;
        }
        let wi = w[i] as u128;
        let mut e = 0u32;
        while e as u128 * wi <= left {
            cur.push(e);
            rec(w, i + 1, left - e as u128 * wi, cur, out);
            cur.pop();
            e += 1;
        }
    }
    let mut out = Vec::new();
    rec(w, 0, d, &mut Vec::new(), &mut out);
    out
}
