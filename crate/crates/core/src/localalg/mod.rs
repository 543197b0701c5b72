//! Computations in the power series ring: local standard bases through
//! weighted homogenization, initial ideals, intersection numbers and the
//! vector `bw(I)`.

use std::sync::Arc;

use thiserror::Error;

use crate::groebner::{groebner_basis, GroebnerError, Ideal, Staircase, Tracked};
use crate::polyring::{Monomial, NatInf, Poly, PolyError, Ring, TermOrder, WeightVec};
use crate::scalars::Coeff;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LocalError {
    #[error("the ideal is the unit ideal of the local ring")]
    UnitIdeal,
    #[error("intersection with the zero polynomial")]
    ZeroPoly,
    #[error("weight vector must be finite")]
    InfiniteWeight,
    #[error("weights must be positive")]
    NonPositiveWeight,
    #[error("weight vector has length {got}, ring has {want} variables")]
    WeightLength { got: usize, want: usize },
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Leading term for the local order that prefers low `w`-degree, ties
/// broken by degrevlex.
pub fn local_leading_term(f: &Poly, w: &[u64]) -> Option<(Monomial, Coeff)> {
    f.terms()
        .iter()
        .max_by(|a, b| TermOrder::local_cmp(w, &a.0, &b.0))
        .cloned()
}

fn check_weights(ring: &Ring, w: &WeightVec) -> Result<Vec<u64>, LocalError> {
    if w.len() != ring.nvars() {
        return Err(LocalError::WeightLength {
            got: w.len(),
            want: ring.nvars(),
        });
    }
    let fin = w.as_finite().ok_or(LocalError::InfiniteWeight)?;
    if fin.contains(&0) {
        return Err(LocalError::NonPositiveWeight);
    }
    Ok(fin)
}

/// Homogenize `f` for weights `(w, 1)` in `hring`, which has one more
/// variable than `f`'s ring.
fn homogenize(f: &Poly, w: &[u64], hring: &Ring) -> Poly {
    let top = f
        .terms()
        .iter()
        .map(|(m, _)| m.wdeg(w))
        .max()
        .unwrap_or(0);
    hring.from_terms(
        f.terms()
            .iter()
            .map(|(m, c)| {
                let mut e = m.exps().to_vec();
                e.push((top - m.wdeg(w)) as u32);
                (Monomial(e), c.clone())
            })
            .collect(),
    )
}

fn dehomogenize(f: &Poly, ring: &Ring) -> Poly {
    let n = ring.nvars();
    ring.from_terms(
        f.terms()
            .iter()
            .map(|(m, c)| (Monomial(m.exps()[..n].to_vec()), c.clone()))
            .collect(),
    )
}

/// Local standard basis of `⟨gens⟩` for the weights `w`, optionally with the
/// cofactor of generator `track` for each element.
pub fn standard_basis_tracked(ring: &Ring, gens: &[Poly], w: &[u64], track: Option<usize>) -> Vec<Tracked> {
    let h = ring.fresh_name(&[]);
    let hring = ring.extend(&[h]).unwrap();
    let hgens: Vec<Poly> = gens.iter().map(|g| homogenize(g, w, &hring)).collect();
    let ord = TermOrder::LocalHomog {
        weights: w.to_vec(),
        hvar: ring.nvars(),
    };
    let mut out: Vec<Tracked> = groebner_basis(&hring, &hgens, &ord, track)
        .into_iter()
        .map(|t| Tracked {
            poly: dehomogenize(&t.poly, ring),
            cofactor: t.cofactor.map(|c| dehomogenize(&c, ring)),
        })
        .collect();
    out.sort_by(|a, b| {
        let la = local_leading_term(&a.poly, w).unwrap().0;
        let lb = local_leading_term(&b.poly, w).unwrap().0;
        TermOrder::local_cmp(w, &lb, &la)
    });
    out
}

/// Standard basis of an ideal in the power series ring for a local weighted
/// order.
#[derive(Clone, Debug)]
pub struct LocalBasis {
    ring: Ring,
    weights: Vec<u64>,
    elems: Arc<Vec<Poly>>,
}

impl LocalBasis {
    fn compute(ideal: &Ideal, w: &[u64]) -> LocalBasis {
        let cached = ideal.local_cache().lock().unwrap().get(w).cloned();
        let elems = match cached {
            Some(e) => e,
            None => {
                let gens: Vec<Poly> = ideal
                    .generators()
                    .iter()
                    .filter(|g| !g.is_zero())
                    .cloned()
                    .collect();
                let e = Arc::new(
                    standard_basis_tracked(ideal.ring(), &gens, w, None)
                        .into_iter()
                        .map(|t| t.poly)
                        .collect(),
                );
                ideal
                    .local_cache()
                    .lock()
                    .unwrap()
                    .insert(w.to_vec(), Arc::clone(&e));
                e
            }
        };
        LocalBasis {
            ring: ideal.ring().clone(),
            weights: w.to_vec(),
            elems,
        }
    }

    pub fn elements(&self) -> &[Poly] {
        &self.elems
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    /// Some element has a nonzero constant term.
    pub fn is_unit(&self) -> bool {
        self.elems.iter().any(|g| !g.constant_term().is_zero())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elems
            .iter()
            .filter_map(|g| local_leading_term(g, &self.weights).map(|t| t.0))
            .collect()
    }

    pub fn staircase(&self) -> Staircase {
        Staircase::new(self.ring.nvars(), self.leading_monomials())
    }

    /// `dim_k k[[x]]/I`.
    pub fn colength(&self) -> NatInf {
        if self.is_unit() {
            NatInf::Fin(0)
        } else {
            self.staircase().colength()
        }
    }

    /// `⟨in_w(s) | s ∈ S⟩`.
    pub fn initial_ideal(&self) -> Ideal {
        let w = WeightVec::finite(&self.weights);
        Ideal::new(
            &self.ring,
            self.elems.iter().map(|g| g.initial_form(&w)).collect(),
        )
        .unwrap()
    }
}

/// Local standard basis of `I` for the weights `w`.
pub fn local_std_basis(ideal: &Ideal, w: &WeightVec) -> Result<LocalBasis, LocalError> {
    let fin = check_weights(ideal.ring(), w)?;
    let lb = LocalBasis::compute(ideal, &fin);
    if lb.is_unit() {
        return Err(LocalError::UnitIdeal);
    }
    Ok(lb)
}

/// The initial ideal `in_w(I)` of an ideal of the power series ring.
pub fn initial_ideal(ideal: &Ideal, w: &WeightVec) -> Result<Ideal, LocalError> {
    Ok(local_std_basis(ideal, w)?.initial_ideal())
}

/// `int(f; I) = dim_k k[[x]]/(I + ⟨f⟩)`.
pub fn intersection_number(f: &Poly, ideal: &Ideal) -> Result<NatInf, LocalError> {
    if f.is_zero() {
        return Err(LocalError::ZeroPoly);
    }
    if f.ring() != ideal.ring() {
        return Err(LocalError::Groebner(GroebnerError::RingMismatch));
    }
    if !f.constant_term().is_zero() {
        return Ok(NatInf::Fin(0));
    }
    let sum = ideal.with(std::slice::from_ref(f));
    let ones = vec![1; ideal.ring().nvars()];
    Ok(LocalBasis::compute(&sum, &ones).colength())
}

/// `bw(I) = (int(x_1; I), …, int(x_r; I))`.
pub fn bw_vector(ideal: &Ideal) -> Result<WeightVec, LocalError> {
    let r = ideal.ring();
    (0..r.nvars())
        .map(|i| intersection_number(&r.var(i), ideal))
        .collect::<Result<Vec<_>, _>>()
        .map(WeightVec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;

    fn ideal(field: &Field, vars: &[&str], gens: &[&str]) -> Ideal {
        let r = Ring::new(field, vars).unwrap();
        Ideal::parse(&r, gens).unwrap()
    }

    fn strs(i: &Ideal) -> Vec<String> {
        let mut v: Vec<String> = i
            .groebner(&TermOrder::DegRevLex)
            .iter()
            .map(|g| g.to_string())
            .collect();
        v.sort();
        v
    }

    #[test]
    fn intersection_numbers() {
        let q = Field::rationals();
        let i = ideal(&q, &["x", "y"], &["x^3 - y^4"]);
        let f = i.ring().parse("x*y^2").unwrap();
        assert_eq!(intersection_number(&f, &i).unwrap(), NatInf::Fin(10));
        assert_eq!(intersection_number(&i.ring().parse("1 + x").unwrap(), &i).unwrap(), NatInf::Fin(0));
        let line = ideal(&q, &["x", "y"], &["y"]);
        assert_eq!(intersection_number(&line.ring().parse("x").unwrap(), &line).unwrap(), NatInf::Fin(1));
        let kuo = ideal(&q, &["x", "y"], &["(y^2 - x^3)^2 - x^7"]);
        let g = kuo.ring().parse("y^2 - x^3").unwrap();
        assert_eq!(intersection_number(&g, &kuo).unwrap(), NatInf::Fin(14));
        assert_eq!(intersection_number(&kuo.ring().zero(), &kuo), Err(LocalError::ZeroPoly));
        let same = ideal(&q, &["x", "y"], &["y - x^2"]);
        assert_eq!(intersection_number(&same.ring().parse("y - x^2").unwrap(), &same).unwrap(), NatInf::Inf);
    }

    #[test]
    fn bw_vectors() {
        let q = Field::rationals();
        assert_eq!(bw_vector(&ideal(&q, &["x", "y"], &["y - x^2"])).unwrap().to_string(), "(1,2)");
        let f2 = Field::prime(2).unwrap();
        let kuo = ideal(&f2, &["x", "y", "z"], &["(y^2 - x^3)^2 - x^7", "z - (y^2 - x^3 - x^2*y)"]);
        assert_eq!(bw_vector(&kuo).unwrap().to_string(), "(4,6,15)");
        let space = ideal(&q, &["x", "y", "z"], &["x^3 - y^2", "(z^2 - x*y)^2 - x^2*y*z^2"]);
        assert_eq!(bw_vector(&space).unwrap().to_string(), "(8,12,10)");
    }

    #[test]
    fn initial_ideals() {
        let f2 = Field::prime(2).unwrap();
        let kuo = ideal(&f2, &["x", "y", "z"], &["(y^2 - x^3)^2 - x^7", "z - (y^2 - x^3 - x^2*y)"]);
        let ini = initial_ideal(&kuo, &WeightVec::finite(&[4, 6, 15])).unwrap();
        let expect = ideal(&f2, &["x", "y", "z"], &["x^3 - y^2", "y^5 - z^2"]);
        assert_eq!(strs(&ini), strs(&expect));

        let q = Field::rationals();
        let fam = ideal(
            &q,
            &["x", "y", "z", "u"],
            &["x^3 - y^2", "(z^2 - x*y)^2 - x*y*z^3", "u - (z^2 - x*y)"],
        );
        let ini = initial_ideal(&fam, &WeightVec::finite(&[8, 12, 10, 25])).unwrap();
        let expect = ideal(&q, &["x", "y", "z", "u"], &["x^3 - y^2", "u^2 - x*y*z^3", "z^2 - x*y"]);
        assert_eq!(strs(&ini), strs(&expect));

        let p = ideal(&q, &["x", "y"], &["(y^2 - x^3)^2 - x^7"]);
        let ini = initial_ideal(&p, &WeightVec::finite(&[4, 6])).unwrap();
        assert_eq!(ini.generators(), &[p.ring().parse("(y^2 - x^3)^2").unwrap()]);
    }

    #[test]
    fn local_unit_ideal() {
        let q = Field::rationals();
        let i = ideal(&q, &["x", "y"], &["1 - x"]);
        assert!(matches!(
            local_std_basis(&i, &WeightVec::finite(&[1, 1])),
            Err(LocalError::UnitIdeal)
        ));
    }
}
