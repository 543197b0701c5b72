//! Numerical semigroups `Semi(w) = Σ N·w_i` and the toric ideals `Prim(w)`.

use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::groebner::Ideal;
use crate::polyring::{normal_form, Monomial, NatInf, Poly, Ring, TermOrder, WeightVec};
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("every generator is infinite")]
    AllInfinite,
    #[error("generators have gcd {0}, not 1")]
    NotPrimitive(u64),
    #[error("zero is not a valid generator")]
    ZeroWeight,
    #[error("Prim(w) needs finite weights")]
    InfiniteWeight,
}

/// `gcd{w_i | w_i ≠ ∞}`.
pub fn gcd_weights(w: &WeightVec) -> Result<u64, SemigroupError> {
    w.gcd().map_err(|_| SemigroupError::AllInfinite)
}

/// The semigroup generated by the finite entries of a weight vector, with
/// a lazily computed elimination basis for membership queries.
#[derive(Debug)]
pub struct Semigroup {
    weights: WeightVec,
    finite: Vec<(usize, u64)>,
    elim: OnceLock<(Ring, Arc<Vec<Poly>>)>,
}

impl Semigroup {
    pub fn new(w: &WeightVec) -> Result<Semigroup, SemigroupError> {
        if w.0.contains(&NatInf::Fin(0)) {
            return Err(SemigroupError::ZeroWeight);
        }
        let finite: Vec<(usize, u64)> = w
            .0
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.finite().map(|v| (i, v)))
            .collect();
        if finite.is_empty() {
            return Err(SemigroupError::AllInfinite);
        }
        Ok(Semigroup {
            weights: w.clone(),
            finite,
            elim: OnceLock::new(),
        })
    }

    pub fn weights(&self) -> &WeightVec {
        &self.weights
    }

    pub fn gcd(&self) -> u64 {
        self.weights.gcd().unwrap()
    }

    /// Gröbner basis of `⟨x_i - t^{w_i}⟩` (finite entries only) for the
    /// elimination order with `t` first.
    fn elimination(&self) -> &(Ring, Arc<Vec<Poly>>) {
        self.elim.get_or_init(|| {
            let mut names = vec!["t".to_string()];
            names.extend((0..self.finite.len()).map(|i| format!("x{i}")));
            let ring = Ring::from_names(&Field::rationals(), names).unwrap();
            let n = ring.nvars();
            let gens: Vec<Poly> = self
                .finite
                .iter()
                .enumerate()
                .map(|(k, &(_, wi))| {
                    let mut tp = vec![0; n];
                    tp[0] = wi as u32;
                    ring.var(k + 1).sub(&ring.monomial(Monomial(tp)))
                })
                .collect();
            let gb = Ideal::new(&ring, gens)
                .unwrap()
                .groebner(&TermOrder::Elimination { front: 1 });
            (ring, gb)
        })
    }

    /// Witness `c` with `N = c·w` from the remainder of `t^N` on division by
    /// the elimination basis; `None` when `N ∉ Semi(w)`. Infinite entries
    /// get exponent zero.
    pub fn membership(&self, n: u64) -> Option<Vec<u64>> {
        let (ring, gb) = self.elimination();
        let mut e = vec![0; ring.nvars()];
        e[0] = n as u32;
        let rem = normal_form(&ring.monomial(Monomial(e)), gb, &TermOrder::Elimination { front: 1 });
        let (m, _) = rem.terms().first()?;
        if m.exps()[0] != 0 {
            return None;
        }
        let mut c = vec![0; self.weights.len()];
        for (k, &(i, _)) in self.finite.iter().enumerate() {
            c[i] = m.exps()[k + 1] as u64;
        }
        Some(c)
    }

    /// Membership by dynamic programming over `0..=N`: the witness uses the
    /// first generator that leads to a representable remainder.
    pub fn membership_dp(&self, n: u64) -> Option<Vec<u64>> {
        let n = n as usize;
        let mut via: Vec<Option<usize>> = vec![None; n + 1];
        let mut ok = vec![false; n + 1];
        ok[0] = true;
        for v in 1..=n {
            for (k, &(_, wi)) in self.finite.iter().enumerate() {
                let wi = wi as usize;
                if wi <= v && ok[v - wi] {
                    ok[v] = true;
                    via[v] = Some(k);
                    break;
                }
            }
        }
        if !ok[n] {
            return None;
        }
        let mut c = vec![0; self.weights.len()];
        let mut v = n;
        while v > 0 {
            let k = via[v].unwrap();
            c[self.finite[k].0] += 1;
            v -= self.finite[k].1 as usize;
        }
        Some(c)
    }

    /// Smallest element of the semigroup in each residue class modulo the
    /// least generator (the Apéry set), when the gcd is one.
    pub fn apery(&self) -> Result<Vec<u64>, SemigroupError> {
        let g = self.gcd();
        if g != 1 {
            return Err(SemigroupError::NotPrimitive(g));
        }
        let m = self.finite.iter().map(|&(_, v)| v).min().unwrap();
        let mut dist = vec![u64::MAX; m as usize];
        dist[0] = 0;
        let mut changed = true;
        while changed {
            changed = false;
            for r in 0..m as usize {
                if dist[r] == u64::MAX {
                    continue;
                }
                for &(_, wi) in &self.finite {
                    let s = (r + wi as usize) % m as usize;
                    let cand = dist[r] + wi;
                    if cand < dist[s] {
                        dist[s] = cand;
                        changed = true;
                    }
                }
            }
        }
        Ok(dist)
    }

    /// Least `c` with `[c, ∞) ⊆ Semi(w)`.
    pub fn conductor(&self) -> Result<u64, SemigroupError> {
        let ap = self.apery()?;
        let m = ap.len() as u64;
        Ok((ap.into_iter().max().unwrap() + 1).saturating_sub(m))
    }

    /// Membership through the Apéry set; requires gcd one.
    pub fn contains(&self, n: u64) -> Result<bool, SemigroupError> {
        let ap = self.apery()?;
        Ok(n >= ap[(n % ap.len() as u64) as usize])
    }

    /// Minimal generators among the finite entries.
    pub fn minimal_generators(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.finite.iter().map(|&(_, w)| w).collect();
        v.sort();
        v.dedup();
        let mut out: Vec<u64> = Vec::new();
        for &x in &v {
            let sub = Semigroup::new(&WeightVec::finite(&out)).ok();
            if sub.and_then(|s| s.membership_dp(x)).is_none() {
                out.push(x);
            }
        }
        out
    }
}

/// Membership `N ∈ Semi(w)` with a witness exponent vector.
pub fn membership(n: u64, w: &WeightVec) -> Result<Option<Vec<u64>>, SemigroupError> {
    Ok(Semigroup::new(w)?.membership(n))
}

/// Conductor of `Semi(w)`.
pub fn conductor(w: &WeightVec) -> Result<u64, SemigroupError> {
    Semigroup::new(w)?.conductor()
}

/// Binomial generators of `Prim(w)`, the kernel of `x_i ↦ t^{w_i}`,
/// expressed in `ring` (whose variables correspond to the entries of `w`).
/// They form a Gröbner basis for the degrevlex order on the `x` block.
pub fn prim_generators(ring: &Ring, w: &WeightVec) -> Result<Vec<Poly>, SemigroupError> {
    if w.has_infinite() {
        return Err(SemigroupError::InfiniteWeight);
    }
    let s = Semigroup::new(w)?;
    let (_, gb) = s.elimination();
    Ok(gb
        .iter()
        .filter(|g| g.degree_in(0) == 0)
        .map(|g| {
            let terms = g
                .terms()
                .iter()
                .map(|(m, c)| {
                    let e = Monomial(m.exps()[1..].to_vec());
                    let c = ring.field().from_bigint(&g.field().as_integer(c).unwrap());
                    (e, c)
                })
                .collect();
            ring.from_terms(terms)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sg(w: &[u64]) -> Semigroup {
        Semigroup::new(&WeightVec::finite(w)).unwrap()
    }

    #[test]
    fn memberships() {
        assert_eq!(sg(&[2, 3]).membership(5), Some(vec![1, 1]));
        assert_eq!(sg(&[2, 3]).membership(1), None);
        assert_eq!(sg(&[4, 6]).membership(13), None);
        assert_eq!(sg(&[4, 6]).membership_dp(13), None);
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd_weights(&"(4,6)".parse().unwrap()).unwrap(), 2);
        assert_eq!(gcd_weights(&"(4,6,15)".parse().unwrap()).unwrap(), 1);
        assert_eq!(gcd_weights(&"(2,inf)".parse().unwrap()).unwrap(), 2);
        assert_eq!(gcd_weights(&"(inf)".parse().unwrap()), Err(SemigroupError::AllInfinite));
    }

    #[test]
    fn conductors() {
        assert_eq!(sg(&[2, 3]).conductor().unwrap(), 2);
        assert_eq!(sg(&[1, 7]).conductor().unwrap(), 0);
        assert_eq!(sg(&[4, 6, 13]).conductor().unwrap(), 16);
        assert_eq!(sg(&[4, 6]).conductor(), Err(SemigroupError::NotPrimitive(2)));
    }

    fn prim_strings(vars: &[&str], w: &[u64]) -> Vec<String> {
        let r = Ring::new(&Field::rationals(), vars).unwrap();
        let mut v: Vec<String> = prim_generators(&r, &WeightVec::finite(w))
            .unwrap()
            .iter()
            .map(|g| g.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn prim_ideals() {
        assert_eq!(prim_strings(&["x", "y"], &[2, 3]), vec!["x^3 - y^2"]);
        assert!(prim_strings(&["x"], &[1]).is_empty());
        let r = Ring::new(&Field::rationals(), &["x", "y", "z", "u"]).unwrap();
        let prim = Ideal::new(&r, prim_generators(&r, &WeightVec::finite(&[8, 12, 10, 25])).unwrap()).unwrap();
        let expect = Ideal::parse(&r, &["x^3 - y^2", "z^2 - x*y", "u^2 - x*y*z^3"]).unwrap();
        assert!(prim.contains_ideal(&expect) && expect.contains_ideal(&prim));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn membership_paths_agree(w in prop::collection::vec(2u64..12, 1..4)) {
            let s = sg(&w);
            for n in 0..=200u64 {
                let a = s.membership(n);
                let b = s.membership_dp(n);
                prop_assert_eq!(a.is_some(), b.is_some());
                if let Some(c) = a {
                    prop_assert_eq!(c.iter().zip(&w).map(|(x, y)| x * y).sum::<u64>(), n);
                }
            }
        }

        #[test]
        fn prim_binomials_vanish(w in prop::collection::vec(1u64..9, 1..4)) {
            let names: Vec<String> = (0..w.len()).map(|i| format!("x{i}")).collect();
            let r = Ring::from_names(&Field::rationals(), names).unwrap();
            let wv = WeightVec::finite(&w);
            for b in prim_generators(&r, &wv).unwrap() {
                prop_assert_eq!(b.len(), 2);
                prop_assert_eq!(b.terms()[0].0.wdeg(&w), b.terms()[1].0.wdeg(&w));
                let c0 = r.field().add(&b.terms()[0].1, &b.terms()[1].1);
                prop_assert!(c0.is_zero());
            }
        }
    }
}
