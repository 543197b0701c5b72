//! Local SAGBI bases of curves given by an explicit parametrization with
//! polynomial components, using truncated power series in `t`.

use std::fmt;

use thiserror::Error;

use crate::polyring::{Monomial, Poly, PolyError, Ring, WeightVec};
use crate::scalars::{Coeff, Field, UniPoly};
use crate::semigroups::{prim_generators, Semigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SagbiError {
    #[error("truncation order {0} is too small to decide the reduction")]
    TruncationExhausted(usize),
    #[error("parametrization component {0} has no positive t-order")]
    BadComponent(usize),
    #[error("parametrization and ring disagree on the number of variables")]
    Arity,
    #[error("precision cap {0} reached")]
    PrecisionCap(usize),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Power series known modulo `t^prec`. `exact` records that every
/// coefficient from `prec` on is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries {
    field: Field,
    coeffs: Vec<Coeff>,
    prec: usize,
    exact: bool,
}

impl TruncSeries {
    fn normalize(mut self) -> Self {
        self.coeffs.truncate(self.prec);
        while self.coeffs.last().is_some_and(Coeff::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    /// The polynomial `p(t)` modulo `t^prec`.
    pub fn from_poly(field: &Field, p: &UniPoly, prec: usize) -> TruncSeries {
        let exact = p.degree().is_none_or(|d| d < prec);
        TruncSeries {
            field: field.clone(),
            coeffs: p.coeffs().to_vec(),
            prec,
            exact,
        }
        .normalize()
    }

    pub fn zero(field: &Field, prec: usize) -> TruncSeries {
        TruncSeries {
            field: field.clone(),
            coeffs: vec![],
            prec,
            exact: true,
        }
    }

    pub fn one(field: &Field, prec: usize) -> TruncSeries {
        TruncSeries::from_poly(field, &UniPoly::constant(field.one()), prec)
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Coeff {
        self.coeffs.get(k).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Zero modulo `t^prec`.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `t`-adic order when some visible coefficient is nonzero.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, o: &TruncSeries) -> TruncSeries {
        let f = &self.field;
        let n = self.coeffs.len().max(o.coeffs.len());
        TruncSeries {
            field: f.clone(),
            coeffs: (0..n).map(|k| f.add(&self.coeff(k), &o.coeff(k))).collect(),
            prec: self.prec.min(o.prec),
            exact: self.exact && o.exact,
        }
        .normalize()
    }

    pub fn scale(&self, c: &Coeff) -> TruncSeries {
        TruncSeries {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| self.field.mul(a, c)).collect(),
            ..self.clone()
        }
        .normalize()
    }

    pub fn sub(&self, o: &TruncSeries) -> TruncSeries {
        self.add(&o.scale(&self.field.neg(&self.field.one())))
    }

    pub fn mul(&self, o: &TruncSeries) -> TruncSeries {
        let f = &self.field;
        let prec = self.prec.min(o.prec);
        let full = (self.coeffs.len() + o.coeffs.len()).saturating_sub(1);
        let exact = self.exact && o.exact && full <= prec;
        let n = full.min(prec);
        let mut out = vec![f.zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() || i >= n {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j >= n {
                    break;
                }
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        TruncSeries {
            field: f.clone(),
            coeffs: out,
            prec,
            exact,
        }
        .normalize()
    }

    pub fn pow(&self, e: u64) -> TruncSeries {
        let mut acc = TruncSeries::one(&self.field, self.prec);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = UniPoly::new(self.coeffs.clone());
        write!(f, "{}", p.display(&self.field, "t"))?;
        if !self.exact {
            write!(f, " + O(t^{})", self.prec)?;
        }
        Ok(())
    }
}

/// A parametrization `x_i ↦ ξ_i(t)` of a curve, one component per ring
/// variable.
#[derive(Clone, Debug)]
pub struct Parametrization {
    ring: Ring,
    comps: Vec<TruncSeries>,
}

impl Parametrization {
    pub fn new(ring: &Ring, comps: Vec<TruncSeries>) -> Result<Parametrization, SagbiError> {
        if comps.len() != ring.nvars() {
            return Err(SagbiError::Arity);
        }
        for (i, c) in comps.iter().enumerate() {
            if c.order().is_none_or(|o| o == 0) {
                return Err(SagbiError::BadComponent(i));
            }
        }
        Ok(Parametrization {
            ring: ring.clone(),
            comps,
        })
    }

    /// Components given as polynomials in `t`, read at precision `prec`.
    pub fn from_polys(ring: &Ring, polys: &[UniPoly], prec: usize) -> Result<Parametrization, SagbiError> {
        let f = ring.field();
        Parametrization::new(
            ring,
            polys.iter().map(|p| TruncSeries::from_poly(f, p, prec)).collect(),
        )
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn components(&self) -> &[TruncSeries] {
        &self.comps
    }

    pub fn prec(&self) -> usize {
        self.comps.iter().map(|c| c.prec).min().unwrap_or(0)
    }

    /// `ord_t(ξ)`.
    pub fn orders(&self) -> WeightVec {
        WeightVec::finite(
            &self
                .comps
                .iter()
                .map(|c| c.order().unwrap() as u64)
                .collect::<Vec<_>>(),
        )
    }

    fn leading_coeffs(&self) -> Vec<Coeff> {
        self.comps
            .iter()
            .map(|c| c.coeff(c.order().unwrap()))
            .collect()
    }

    /// `ξ^a`.
    pub fn eval_monomial(&self, a: &Monomial) -> TruncSeries {
        let f = self.ring.field();
        let mut acc = TruncSeries::one(f, self.prec());
        for (c, &e) in self.comps.iter().zip(a.exps()) {
            if e > 0 {
                acc = acc.mul(&c.pow(e as u64));
            }
        }
        acc
    }

    /// `q(ξ)`.
    pub fn eval(&self, q: &Poly) -> TruncSeries {
        let f = self.ring.field();
        let mut acc = TruncSeries::zero(f, self.prec());
        for (m, c) in q.terms() {
            acc = acc.add(&self.eval_monomial(m).scale(c));
        }
        acc
    }

    /// The same parametrization with one more component `eta`, named by a
    /// fresh variable.
    pub fn adjoin(&self, eta: TruncSeries) -> Result<Parametrization, SagbiError> {
        let name = self.ring.fresh_name(&[]);
        let ring = self.ring.extend(&[name])?;
        let mut comps = self.comps.clone();
        comps.push(eta);
        Parametrization::new(&ring, comps)
    }
}

/// Local reduction `η = q(ξ) + ζ`: the leading term of `ζ` is repeatedly
/// cancelled by a monomial in `ξ` while its order lies in `Semi(ord_t(ξ))`.
/// A zero remainder is only reported when it is exact, or when the order
/// has passed the conductor (so the quotient extends indefinitely).
pub fn local_reduce(eta: &TruncSeries, xi: &Parametrization) -> Result<(Poly, TruncSeries), SagbiError> {
    let f = xi.ring.field().clone();
    let w = xi.orders();
    let semi = Semigroup::new(&w)?;
    let conductor = if semi.gcd() == 1 { Some(semi.conductor()?) } else { None };
    let lcs = xi.leading_coeffs();
    let mut q = xi.ring.zero();
    let mut zeta = eta.clone();
    loop {
        let Some(k) = zeta.order() else {
            let past_conductor = conductor.is_some_and(|c| zeta.prec >= c as usize);
            if zeta.exact || past_conductor {
                return Ok((q, TruncSeries::zero(&f, zeta.prec)));
            }
            return Err(SagbiError::TruncationExhausted(zeta.prec));
        };
        let Some(c) = semi.membership(k as u64) else {
            return Ok((q, zeta));
        };
        let a = Monomial(c.iter().map(|&e| e as u32).collect());
        let lead = a
            .exps()
            .iter()
            .zip(&lcs)
            .fold(f.one(), |acc, (&e, l)| f.mul(&acc, &f.pow(l, e as u64)));
        let beta = f.div(&zeta.coeff(k), &lead).unwrap();
        q = q.add(&xi.ring.term(beta.clone(), a.clone()));
        zeta = zeta.sub(&xi.eval_monomial(&a).scale(&beta));
    }
}

/// Generators of `Ker φ_{in_t(ξ)}`: the binomials of `Prim(ord_t(ξ))`
/// rescaled by the leading coefficients of `ξ`.
pub fn kernel_binomials(xi: &Parametrization) -> Result<Vec<Poly>, SagbiError> {
    let f = xi.ring.field().clone();
    let lcs = xi.leading_coeffs();
    let lval = |m: &Monomial| {
        m.exps()
            .iter()
            .zip(&lcs)
            .fold(f.one(), |acc, (&e, l)| f.mul(&acc, &f.pow(l, e as u64)))
    };
    Ok(prim_generators(&xi.ring, &xi.orders())?
        .into_iter()
        .map(|b| {
            let (ma, mb) = (b.terms()[0].0.clone(), b.terms()[1].0.clone());
            let ratio = f.div(&lval(&ma), &lval(&mb)).unwrap();
            xi.ring
                .monomial(ma)
                .sub(&xi.ring.term(ratio, mb))
        })
        .collect())
}

/// A kernel binomial whose image has a nonzero remainder, with that
/// remainder; `None` when `ξ` is a local SAGBI basis.
pub fn sagbi_witness(xi: &Parametrization) -> Result<Option<(Poly, TruncSeries)>, SagbiError> {
    for b in kernel_binomials(xi)? {
        let (_, zeta) = local_reduce(&xi.eval(&b), xi)?;
        if !zeta.is_zero() {
            return Ok(Some((b, zeta)));
        }
    }
    Ok(None)
}

/// Whether `ξ` is a local SAGBI basis of `K[[ξ]]`.
pub fn sagbi_check(xi: &Parametrization) -> Result<bool, SagbiError> {
    Ok(sagbi_witness(xi)?.is_none())
}

/// Result of a completion: the extended parametrization and its semigroup.
#[derive(Clone, Debug)]
pub struct Completion {
    pub param: Parametrization,
    pub semigroup: Vec<u64>,
    pub precision: usize,
}

/// Extend the polynomial parametrization `polys` by remainders until it is
/// a local SAGBI basis. Precision starts at `max(64, 4·Σ ord)` and doubles
/// on truncation failures up to `cap`.
pub fn sagbi_complete(ring: &Ring, polys: &[UniPoly], cap: usize) -> Result<Completion, SagbiError> {
    let ords: usize = polys
        .iter()
        .map(|p| p.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0))
        .sum();
    let mut prec = 64usize.max(4 * ords);
    loop {
        match complete_at(ring, polys, prec) {
            Ok(param) => {
                let semigroup = Semigroup::new(&param.orders())?.minimal_generators();
                return Ok(Completion {
                    param,
                    semigroup,
                    precision: prec,
                });
            }
            Err(SagbiError::TruncationExhausted(_)) if prec * 2 <= cap => prec *= 2,
            Err(SagbiError::TruncationExhausted(_)) => return Err(SagbiError::PrecisionCap(cap)),
            Err(e) => return Err(e),
        }
    }
}

fn complete_at(ring: &Ring, polys: &[UniPoly], prec: usize) -> Result<Parametrization, SagbiError> {
    let mut xi = Parametrization::from_polys(ring, polys, prec)?;
    while let Some((_, zeta)) = sagbi_witness(&xi)? {
        xi = xi.adjoin(zeta)?;
    }
    Ok(xi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tpoly(f: &Field, terms: &[(i64, usize)]) -> UniPoly {
        let mut v = vec![f.zero(); terms.iter().map(|t| t.1).max().unwrap_or(0) + 1];
        for &(c, k) in terms {
            v[k] = f.add(&v[k], &f.from_i64(c));
        }
        UniPoly::new(v)
    }

    fn ring(n: usize) -> Ring {
        let names = ["x", "y", "z", "u"][..n].to_vec();
        Ring::new(&Field::rationals(), &names).unwrap()
    }

    #[test]
    fn reduce_monomial_curve() {
        let r = ring(2);
        let f = r.field().clone();
        let xi = Parametrization::from_polys(&r, &[tpoly(&f, &[(1, 2)]), tpoly(&f, &[(1, 3)])], 64).unwrap();
        let eta = TruncSeries::from_poly(&f, &tpoly(&f, &[(1, 7)]), 64);
        let (q, z) = local_reduce(&eta, &xi).unwrap();
        assert_eq!(q, r.parse("x^2*y").unwrap());
        assert!(z.is_zero());
        let (q0, z0) = local_reduce(&TruncSeries::zero(&f, 64), &xi).unwrap();
        assert!(q0.is_zero() && z0.is_zero());
    }

    #[test]
    fn reduce_kuo_branch() {
        let r = ring(2);
        let f = r.field().clone();
        let xi = Parametrization::from_polys(&r, &[tpoly(&f, &[(1, 4)]), tpoly(&f, &[(1, 6), (1, 7)])], 64).unwrap();
        let eta = xi.eval(&r.parse("y^2 - x^3").unwrap());
        let (q, z) = local_reduce(&eta, &xi).unwrap();
        assert!(q.is_zero());
        assert_eq!(z.to_string(), "t^14 + 2*t^13");
        assert!(!sagbi_check(&xi).unwrap());
    }

    #[test]
    fn completion() {
        let r = ring(2);
        let f = r.field().clone();
        let c = sagbi_complete(&r, &[tpoly(&f, &[(1, 4)]), tpoly(&f, &[(1, 6), (1, 7)])], 4096).unwrap();
        assert_eq!(c.semigroup, vec![4, 6, 13]);
        assert!(sagbi_check(&c.param).unwrap());

        let c = sagbi_complete(&r, &[tpoly(&f, &[(1, 1), (1, 2)]), tpoly(&f, &[(1, 2), (1, 3)])], 4096).unwrap();
        assert_eq!(c.param.components().len(), 2);
        assert_eq!(c.semigroup, vec![1]);

        let r1 = ring(1);
        let c = sagbi_complete(&r1, &[tpoly(&f, &[(1, 1)])], 4096).unwrap();
        assert_eq!(c.param.components().len(), 1);
    }

    #[test]
    fn monomial_parametrization_is_sagbi() {
        let r = ring(2);
        let f = r.field().clone();
        let xi = Parametrization::from_polys(&r, &[tpoly(&f, &[(1, 2)]), tpoly(&f, &[(1, 3)])], 64).unwrap();
        assert!(sagbi_check(&xi).unwrap());
    }

    #[test]
    fn reduction_identity() {
        let r = ring(3);
        let f = r.field().clone();
        let xi = Parametrization::from_polys(
            &r,
            &[tpoly(&f, &[(1, 4)]), tpoly(&f, &[(1, 6), (1, 7)]), tpoly(&f, &[(2, 13), (1, 14)])],
            128,
        )
        .unwrap();
        let eta = xi.eval(&r.parse("z^2 - x^5*y + 3*y^3*z").unwrap());
        let (q, z) = local_reduce(&eta, &xi).unwrap();
        let back = xi.eval(&q).add(&z);
        assert_eq!(back.coeffs(), eta.coeffs());
    }
}
