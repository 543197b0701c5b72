//! Polynomial rings and sparse polynomials.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use super::order::{Monomial, NatInf, TermOrder, WeightVec};
use super::PolyError;
use crate::scalars::{Coeff, Field};

#[derive(Debug, PartialEq, Eq)]
struct RingSpec {
    field: Field,
    vars: Vec<String>,
}

/// Polynomial ring `k[x_1, …, x_r]` with named variables.
#[derive(Clone, Debug)]
pub struct Ring(Arc<RingSpec>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Ring {}

impl Ring {
    pub fn new(field: &Field, vars: &[&str]) -> Result<Ring, PolyError> {
        Ring::from_names(field, vars.iter().map(|s| s.to_string()).collect())
    }

    pub fn from_names(field: &Field, vars: Vec<String>) -> Result<Ring, PolyError> {
        if vars.is_empty() {
            return Err(PolyError::NoVariables);
        }
        for (i, v) in vars.iter().enumerate() {
            let ok = !v.is_empty()
                && v.chars().next().unwrap().is_alphabetic()
                && v.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !ok {
                return Err(PolyError::BadVariable(v.clone()));
            }
            if vars[..i].contains(v) || field.generator_name() == Some(v.as_str()) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Ring(Arc::new(RingSpec {
            field: field.clone(),
            vars,
        })))
    }

    pub fn field(&self) -> &Field {
        &self.0.field
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn nvars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    /// The same ring with extra variables appended.
    pub fn extend(&self, extra: &[String]) -> Result<Ring, PolyError> {
        let mut v = self.0.vars.clone();
        v.extend(extra.iter().cloned());
        Ring::from_names(&self.0.field, v)
    }

    /// A variable name not yet used, drawn from a fixed list.
    pub fn fresh_name(&self, avoid: &[String]) -> String {
        let taken = |s: &str| {
            self.var_index(s).is_some()
                || avoid.iter().any(|a| a == s)
                || self.field().generator_name() == Some(s)
        };
        for c in ["z", "u", "v", "s", "t", "w", "p", "q", "r"] {
            if !taken(c) {
                return c.to_string();
            }
        }
        (1..)
            .map(|i| format!("x{i}"))
            .find(|s| !taken(s))
            .unwrap()
    }

    pub fn zero(&self) -> Poly {
        Poly {
            ring: self.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(&self, c: Coeff) -> Poly {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn one(&self) -> Poly {
        self.constant(self.field().one())
    }

    pub fn from_i64(&self, v: i64) -> Poly {
        self.constant(self.field().from_i64(v))
    }

    pub fn var(&self, i: usize) -> Poly {
        self.monomial(Monomial::var(self.nvars(), i))
    }

    pub fn monomial(&self, m: Monomial) -> Poly {
        self.term(self.field().one(), m)
    }

    pub fn term(&self, c: Coeff, m: Monomial) -> Poly {
        assert_eq!(m.len(), self.nvars(), "monomial length mismatch");
        let terms = if c.is_zero() { vec![] } else { vec![(m, c)] };
        Poly {
            ring: self.clone(),
            terms,
        }
    }

    /// Build from arbitrary terms; like terms are combined.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, Coeff)>) -> Poly {
        let f = self.field();
        terms.sort_by(|a, b| canon(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = f.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly {
            ring: self.clone(),
            terms: out,
        }
    }

    pub fn parse(&self, text: &str) -> Result<Poly, PolyError> {
        super::parse::parse_poly(self, text)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field(), self.vars().join(","))
    }
}

/// The canonical storage order (degrevlex).
fn canon(a: &Monomial, b: &Monomial) -> Ordering {
    TermOrder::DegRevLex.cmp(a, b)
}

/// Sparse polynomial; terms are stored in descending degrevlex order with
/// nonzero coefficients.
#[derive(Clone, Debug)]
pub struct Poly {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.ring == other.ring
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn field(&self) -> &Field {
        self.ring.field()
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.is_constant()
    }

    /// Single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|(t, _)| canon(m, t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| self.field().zero())
    }

    pub fn constant_term(&self) -> Coeff {
        self.coeff_of(&Monomial::one(self.ring.nvars()))
    }

    fn check(&self, o: &Poly) -> Result<(), PolyError> {
        if self.ring == o.ring {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    fn with_terms(&self, terms: Vec<(Monomial, Coeff)>) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    /// Sum; panics when the rings differ (see [`Poly::try_add`]).
    pub fn add(&self, o: &Poly) -> Poly {
        self.try_add(o).expect("ring mismatch")
    }

    pub fn try_add(&self, o: &Poly) -> Result<Poly, PolyError> {
        self.check(o)?;
        let f = self.field();
        let (a, b) = (&self.terms, &o.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match canon(&a[i].0, &b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(&a[i].1, &b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Ok(self.with_terms(out))
    }

    pub fn neg(&self) -> Poly {
        let f = self.field();
        self.with_terms(
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), f.neg(c)))
                .collect(),
        )
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.neg())
    }

    pub fn try_sub(&self, o: &Poly) -> Result<Poly, PolyError> {
        self.try_add(&o.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let f = self.field();
        self.with_terms(
            self.terms
                .iter()
                .map(|(m, a)| (m.clone(), f.mul(a, c)))
                .collect(),
        )
    }

    /// Multiply by `c·m`.
    pub fn mul_term(&self, c: &Coeff, m: &Monomial) -> Poly {
        if c.is_zero() {
            return self.ring.zero();
        }
        let f = self.field();
        self.with_terms(
            self.terms
                .iter()
                .map(|(t, a)| (t.mul(m), f.mul(a, c)))
                .collect(),
        )
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        self.try_mul(o).expect("ring mismatch")
    }

    pub fn try_mul(&self, o: &Poly) -> Result<Poly, PolyError> {
        self.check(o)?;
        let f = self.field();
        let mut terms = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &o.terms {
                terms.push((m.mul(n), f.mul(a, b)));
            }
        }
        Ok(self.ring.from_terms(terms))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = self.ring.one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Divide by the leading coefficient under `ord`.
    pub fn monic(&self, ord: &TermOrder) -> Poly {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => self.scale(&self.field().inv(&c).unwrap()),
        }
    }

    /// Leading monomial and coefficient under `ord`.
    pub fn leading_term(&self, ord: &TermOrder) -> Option<(Monomial, Coeff)> {
        if *ord == TermOrder::DegRevLex {
            return self.terms.first().cloned();
        }
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .cloned()
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: &TermOrder) -> Vec<(Monomial, Coeff)> {
        let mut t = self.terms.clone();
        if *ord != TermOrder::DegRevLex {
            t.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        t
    }

    /// `ord_w(f) = min{w·a | c_a ≠ 0}`; `∞` for the zero polynomial.
    pub fn ord_w(&self, w: &WeightVec) -> NatInf {
        self.terms
            .iter()
            .map(|(m, _)| w.dot(m))
            .min()
            .unwrap_or(NatInf::Inf)
    }

    /// Sum of the terms of minimal weight; zero when the order is infinite.
    pub fn initial_form(&self, w: &WeightVec) -> Poly {
        let o = self.ord_w(w);
        if o.is_inf() {
            return self.ring.zero();
        }
        self.with_terms(
            self.terms
                .iter()
                .filter(|(m, _)| w.dot(m) == o)
                .cloned()
                .collect(),
        )
    }

    /// Whether every term has the same weight.
    pub fn is_homogeneous(&self, w: &WeightVec) -> bool {
        let o = self.ord_w(w);
        self.terms.iter().all(|(m, _)| w.dot(m) == o)
    }

    /// Substitute polynomials (over the target ring) for all variables.
    pub fn compose(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.ring.nvars());
        let target = images
            .first()
            .map(|p| p.ring.clone())
            .unwrap_or_else(|| self.ring.clone());
        let mut acc = target.zero();
        let mut powers: Vec<Vec<Poly>> = vec![vec![target.one()]; images.len()];
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = powers[i].last().unwrap().mul(&images[i]);
                    powers[i].push(next);
                }
                t = t.mul(&powers[i][e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Replace variable `i` by `p` (same ring).
    pub fn substitute(&self, i: usize, p: &Poly) -> Poly {
        let images: Vec<Poly> = (0..self.ring.nvars())
            .map(|j| if j == i { p.clone() } else { self.ring.var(j) })
            .collect();
        self.compose(&images)
    }

    /// Set the listed variables to zero.
    pub fn zero_vars(&self, vars: &[usize]) -> Poly {
        self.with_terms(
            self.terms
                .iter()
                .filter(|(m, _)| vars.iter().all(|&i| m.exps()[i] == 0))
                .cloned()
                .collect(),
        )
    }

    /// Re-express in `target`, mapping variable `i` to `target` variable
    /// `map[i]`. Unmapped target variables get exponent zero.
    pub fn map_vars(&self, target: &Ring, map: &[usize]) -> Poly {
        let n = target.nvars();
        target.from_terms(
            self.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0; n];
                    for (i, &a) in m.exps().iter().enumerate() {
                        e[map[i]] += a;
                    }
                    (Monomial(e), c.clone())
                })
                .collect(),
        )
    }

    /// Embed into a ring that extends this one by trailing variables.
    pub fn embed(&self, target: &Ring) -> Poly {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.map_vars(target, &map)
    }

    /// Largest exponent of variable `i`.
    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exps()[i]).max().unwrap_or(0)
    }

    /// Variables that occur.
    pub fn support_vars(&self) -> Vec<usize> {
        (0..self.ring.nvars())
            .filter(|&i| self.degree_in(i) > 0)
            .collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative_rational(c);
            let mag = if neg { field.neg(c) } else { c.clone() };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    let v = &self.ring.vars()[i];
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{}", field.format(&mag))?;
            } else if field.is_one(&mag) {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", field.format(&mag), mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Remainder of multivariate division of `f` by `divisors`, whose leading
/// terms are taken under `ord`. No term of the result is divisible by any
/// of those leading monomials. When several divisors apply, the one with the
/// largest leading monomial is used.
pub fn normal_form(f: &Poly, divisors: &[Poly], ord: &TermOrder) -> Poly {
    let field = f.field().clone();
    let leads: Vec<(Monomial, Coeff, Vec<(Monomial, Coeff)>)> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let t = g.sorted_terms(ord);
            let inv = field.inv(&t[0].1).unwrap();
            let tail: Vec<(Monomial, Coeff)> = t[1..]
                .iter()
                .map(|(m, c)| (m.clone(), field.mul(c, &inv)))
                .collect();
            (t[0].0.clone(), inv, tail)
        })
        .collect();
    let mut work = f.sorted_terms(ord);
    let mut rem: Vec<(Monomial, Coeff)> = Vec::new();
    while !work.is_empty() {
        let (m, c) = work.remove(0);
        let reducer = leads
            .iter()
            .filter(|(lm, _, _)| lm.divides(&m))
            .max_by(|a, b| ord.cmp(&a.0, &b.0));
        if let Some((lm, _, tail)) = reducer {
            let q = lm.quotient(&m);
            let sub: Vec<(Monomial, Coeff)> = tail
                .iter()
                .map(|(t, a)| (t.mul(&q), field.neg(&field.mul(a, &c))))
                .collect();
            work = merge_sorted(&work, &sub, ord, &field);
        } else {
            rem.push((m, c));
        }
    }
    f.ring().from_terms(rem)
}

/// Sum of two term lists sorted descending under `ord`.
pub(crate) fn merge_sorted(
    a: &[(Monomial, Coeff)],
    b: &[(Monomial, Coeff)],
    ord: &TermOrder,
    f: &Field,
) -> Vec<(Monomial, Coeff)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ord.cmp(&a[i].0, &b[j].0) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = f.add(&a[i].1, &b[j].1);
                if !c.is_zero() {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}
