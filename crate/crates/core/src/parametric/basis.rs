//! The curve ring as a free module over the series ring of a pivot
//! variable, and coordinates of polynomials in that module.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use super::series::Series;
use super::ParamError;
use crate::groebner::{Ideal, Staircase};
use crate::localalg::{local_leading_term, standard_basis_tracked};
use crate::polyring::{Monomial, Poly, Ring, TermOrder};
use crate::scalars::Coeff;

/// Monomial ordered so that the local leading monomial (lowest degree,
/// then largest in degrevlex) is the maximum.
#[derive(Clone, PartialEq, Eq)]
struct Key(Monomial);

impl Ord for Key {
    fn cmp(&self, o: &Self) -> Ordering {
        o.0.degree()
            .cmp(&self.0.degree())
            .then_with(|| TermOrder::DegRevLex.cmp(&self.0, &o.0))
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

/// Standard basis element `g = a + b·pivot` with `a ∈ I`, leading monomial
/// free of the pivot.
#[derive(Clone, Debug)]
struct Reducer {
    lm: Monomial,
    lc_inv: Coeff,
    tail: Vec<(Monomial, Coeff)>,
    cofactor: Vec<(Monomial, Coeff)>,
}

/// `Γ`: standard monomials of `I + ⟨pivot⟩`, a basis of `k[[x]]/I` over
/// `k[[pivot]]`.
#[derive(Clone, Debug)]
pub struct FreeBasis {
    ring: Ring,
    pivot: usize,
    gamma: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    delta: u64,
    reducers: Vec<Reducer>,
}

impl FreeBasis {
    pub fn new(ideal: &Ideal, pivot: usize) -> Result<FreeBasis, ParamError> {
        let ring = ideal.ring().clone();
        let n = ring.nvars();
        let mut gens: Vec<Poly> = ideal.generators().iter().filter(|g| !g.is_zero()).cloned().collect();
        gens.push(ring.var(pivot));
        let ones = vec![1u64; n];
        let sb = standard_basis_tracked(&ring, &gens, &ones, Some(gens.len() - 1));
        if sb.iter().any(|t| !t.poly.constant_term().is_zero()) {
            return Err(ParamError::UnitIdeal);
        }
        let mut lms = Vec::new();
        let mut reducers = Vec::new();
        for t in &sb {
            let (lm, lc) = local_leading_term(&t.poly, &ones).unwrap();
            lms.push(lm.clone());
            if lm.exps()[pivot] > 0 {
                continue;
            }
            let f = ring.field();
            reducers.push(Reducer {
                lc_inv: f.inv(&lc).unwrap(),
                tail: t.poly.terms().iter().filter(|(m, _)| *m != lm).cloned().collect(),
                cofactor: t.cofactor.as_ref().map(|c| c.terms().to_vec()).unwrap_or_default(),
                lm,
            });
        }
        let stairs = Staircase::new(n, lms);
        let mut gamma = stairs
            .standard_monomials()
            .ok_or_else(|| ParamError::InfinitePivot(ring.vars()[pivot].clone()))?;
        gamma.sort_by(|a, b| {
            let ka: Vec<u32> = a.exps().iter().enumerate().filter(|(i, _)| *i != pivot).map(|(_, &e)| e).collect();
            let kb: Vec<u32> = b.exps().iter().enumerate().filter(|(i, _)| *i != pivot).map(|(_, &e)| e).collect();
            ka.cmp(&kb)
        });
        let delta = gamma.iter().map(Monomial::degree).max().unwrap_or(0);
        let index = gamma.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Ok(FreeBasis {
            ring,
            pivot,
            gamma,
            index,
            delta,
            reducers,
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.gamma
    }

    pub fn rank(&self) -> usize {
        self.gamma.len()
    }

    /// Coordinates of `h` in the basis, each a series in the pivot known
    /// modulo `pivot^prec`.
    ///
    /// A monomial whose non-pivot part has degree `d` lies in
    /// `pivot^⌊d/(δ+1)⌋·A` (`δ` the top degree of `Γ`), which bounds the
    /// terms that still matter at each pivot power.
    pub fn coordinates(&self, h: &Poly, prec: usize) -> Vec<Series> {
        let f = self.ring.field().clone();
        let mut out = vec![vec![f.zero(); prec]; self.rank()];
        let mut levels: Vec<BTreeMap<Key, Coeff>> = vec![BTreeMap::new(); prec];
        let step = self.delta + 1;
        let pivot = self.pivot;
        let push = |levels: &mut Vec<BTreeMap<Key, Coeff>>, base: usize, m: Monomial, c: Coeff| {
            let mut e = m.0;
            let lvl = base + e[pivot] as usize;
            e[pivot] = 0;
            let m = Monomial(e);
            if lvl + (m.degree() / step) as usize >= prec {
                return;
            }
            let key = Key(m);
            let v = match levels[lvl].get(&key) {
                Some(old) => f.add(old, &c),
                None => c,
            };
            if v.is_zero() {
                levels[lvl].remove(&key);
            } else {
                levels[lvl].insert(key, v);
            }
        };
        for (m, c) in h.terms() {
            push(&mut levels, 0, m.clone(), c.clone());
        }
        for s in 0..prec {
            while let Some((Key(m), c)) = levels[s].pop_last() {
                if let Some(&j) = self.index.get(&m) {
                    out[j][s] = c;
                    continue;
                }
                let r = self
                    .reducers
                    .iter()
                    .find(|r| r.lm.divides(&m))
                    .expect("non-standard monomial without reducer");
                let q = r.lm.quotient(&m);
                let coef = f.mul(&c, &r.lc_inv);
                let negc = f.neg(&coef);
                for (t, a) in &r.tail {
                    push(&mut levels, s, t.mul(&q), f.mul(&negc, a));
                }
                for (t, a) in &r.cofactor {
                    push(&mut levels, s + 1, t.mul(&q), f.mul(&coef, a));
                }
            }
        }
        out
    }

    /// Multiplication by `g` on the basis: column `j` holds the coordinates
    /// of `g·Γ_j`.
    pub fn mult_matrix(&self, g: &Poly, prec: usize) -> Vec<Vec<Series>> {
        let n = self.rank();
        let f = self.ring.field();
        let mut m = vec![vec![vec![f.zero(); prec]; n]; n];
        for (j, gam) in self.gamma.iter().enumerate() {
            let col = self.coordinates(&g.mul(&self.ring.monomial(gam.clone())), prec);
            for (i, c) in col.into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }
}
