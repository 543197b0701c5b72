//! Intersection numbers along pencils `f − a·g` through the determinant of
//! multiplication matrices on the curve ring viewed as a free module over a
//! pivot variable, and the parametric test built on them.

mod basis;
pub mod series;

use thiserror::Error;

pub use basis::FreeBasis;

use crate::groebner::{GroebnerError, Ideal};
use crate::localalg::{intersection_number, LocalError};
use crate::polyring::{NatInf, Poly, PolyError, Ring};
use crate::scalars::{is_irreducible, univariate_roots, Coeff, Field, ScalarError, UniPoly};
use series::{ParamEntry, Series};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("int({0}; I) is infinite")]
    InfinitePivot(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("int(f; I) = {f} but int(g; I) = {g}")]
    UnequalBase { f: NatInf, g: NatInf },
    #[error("int(f; I) is infinite")]
    InfiniteBase,
    #[error("truncation cap {0} reached")]
    TruncationExhausted(usize),
    #[error("{poly} lies in the radical of the ideal")]
    ContextViolation { poly: String, beta: Coeff },
    #[error("cannot materialize two roots of {0}")]
    Unsupported(String),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamConfig {
    pub trunc_cap: usize,
}

impl Default for ParamConfig {
    fn default() -> Self {
        ParamConfig { trunc_cap: 4096 }
    }
}

/// `D(a, x) = det(M_f − a·M_g)` modulo `x^prec`, stored as the polynomial
/// coefficient `c_k(a)` of each pivot power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSeries {
    field: Field,
    coeffs: Vec<UniPoly>,
}

impl ParamSeries {
    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, k: usize) -> &UniPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    /// Least `k` with `c_k ≠ 0`.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// `D(α, x)`.
    pub fn eval(&self, alpha: &Coeff) -> Series {
        self.coeffs.iter().map(|c| c.eval(alpha, &self.field)).collect()
    }

    pub fn display(&self, var: &str) -> String {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("({})*{var}^{k}", c.display(&self.field, "a")))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// An exceptional parameter: a root in the coefficient field, or all roots
/// of a root-free factor (conjugate over the field).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Beta {
    Value(Coeff),
    Conjugates(UniPoly),
}

#[derive(Clone, Debug)]
pub struct ParametricOrder {
    pub pivot: usize,
    /// `int(f; I) = int(g; I)`.
    pub base_value: u64,
    pub generic_value: NatInf,
    pub exceptional: Vec<(Beta, NatInf)>,
    pub determinant: ParamSeries,
}

impl ParametricOrder {
    /// Exceptional parameters counted over the algebraic closure.
    pub fn distinct_exceptional(&self) -> usize {
        self.exceptional
            .iter()
            .map(|(b, _)| match b {
                Beta::Value(_) => 1,
                Beta::Conjugates(h) => h.degree().unwrap_or(0),
            })
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FalseKind {
    /// The generic value drops below `int(f; I)`.
    GenericDrop,
    /// Two parameters raise the value.
    TwoRoots,
    /// The unique parameter gives an infinite value off the radical.
    InfiniteRoot,
}

/// Ideal in a ring with adjoined variables, each `name − poly`.
#[derive(Clone, Debug)]
pub struct Adjunction {
    pub kind: FalseKind,
    pub ideal: Ideal,
    pub relations: Vec<(String, Poly)>,
    pub betas: Vec<Coeff>,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    False(Adjunction),
    NotFalse(Coeff),
}

/// The free basis for the pivot `x_i` minimizing `int(x_i; I)`.
pub fn free_basis(ideal: &Ideal, pivot: usize) -> Result<FreeBasis, ParamError> {
    let n = intersection_number(&ideal.ring().var(pivot), ideal)?;
    if n.is_inf() {
        return Err(ParamError::InfinitePivot(ideal.ring().vars()[pivot].clone()));
    }
    FreeBasis::new(ideal, pivot)
}

/// The matrix of multiplication by `g`, entries modulo `pivot^prec`.
pub fn mult_matrix(g: &Poly, basis: &FreeBasis, prec: usize) -> Vec<Vec<Series>> {
    basis.mult_matrix(g, prec)
}

/// Variable with the least finite intersection number, first on ties.
pub fn choose_pivot(ideal: &Ideal) -> Result<usize, ParamError> {
    let r = ideal.ring();
    let mut best: Option<(u64, usize)> = None;
    for i in 0..r.nvars() {
        if let NatInf::Fin(v) = intersection_number(&r.var(i), ideal)? {
            if best.is_none_or(|b| v < b.0) {
                best = Some((v, i));
            }
        }
    }
    best.map(|b| b.1)
        .ok_or_else(|| ParamError::InfinitePivot(r.vars().join(",")))
}

/// `count` distinct field elements, if the field has that many.
fn sample_points(field: &Field, count: usize) -> Option<Vec<Coeff>> {
    let p = field.characteristic() as usize;
    if p == 0 || p >= count {
        return Some((0..count as i64).map(|i| field.from_i64(i)).collect());
    }
    let d = field.degree();
    if (p as f64).powi(d as i32) < count as f64 {
        return None;
    }
    Some(
        (0..count)
            .map(|mut i| {
                let mut digits = Vec::with_capacity(d);
                for _ in 0..d {
                    digits.push(field.prime_field().from_i64((i % p) as i64));
                    i /= p;
                }
                field.from_coords(&UniPoly::new(digits))
            })
            .collect(),
    )
}

/// `det(M_f − a·M_g)` modulo `pivot^prec`. Uses evaluation at `n + 1`
/// points and interpolation when the field is large enough, and a
/// division-free determinant over `K[a]` otherwise.
pub fn parametric_determinant(f: &Poly, g: &Poly, basis: &FreeBasis, prec: usize) -> ParamSeries {
    let field = basis.ring().field().clone();
    let mf = basis.mult_matrix(f, prec);
    let mg = basis.mult_matrix(g, prec);
    let n = basis.rank();
    let coeffs = match sample_points(&field, n + 1) {
        Some(points) => {
            let dets: Vec<Series> = points
                .iter()
                .map(|alpha| {
                    let m: Vec<Vec<Series>> = mf
                        .iter()
                        .zip(&mg)
                        .map(|(rf, rg)| {
                            rf.iter()
                                .zip(rg)
                                .map(|(ef, eg)| {
                                    ef.iter()
                                        .zip(eg)
                                        .map(|(a, b)| field.sub(a, &field.mul(alpha, b)))
                                        .collect()
                                })
                                .collect()
                        })
                        .collect();
                    series::det(&field, m, prec)
                })
                .collect();
            (0..prec)
                .map(|k| {
                    let vals: Vec<Coeff> = dets.iter().map(|d| d[k].clone()).collect();
                    series::interpolate(&field, &points, &vals)
                })
                .collect()
        }
        None => {
            let m: Vec<Vec<ParamEntry>> = mf
                .iter()
                .zip(&mg)
                .map(|(rf, rg)| {
                    rf.iter()
                        .zip(rg)
                        .map(|(ef, eg)| {
                            ef.iter()
                                .zip(eg)
                                .map(|(a, b)| UniPoly::new(vec![a.clone(), field.neg(b)]))
                                .collect()
                        })
                        .collect()
                })
                .collect();
            series::berkowitz(&field, &m, prec)
        }
    };
    ParamSeries { field, coeffs }
}

fn base_values(f: &Poly, g: &Poly, ideal: &Ideal) -> Result<u64, ParamError> {
    let a = intersection_number(f, ideal)?;
    let b = intersection_number(g, ideal)?;
    if a != b {
        return Err(ParamError::UnequalBase { f: a, g: b });
    }
    a.finite().ok_or(ParamError::InfiniteBase)
}

pub fn parametric_intersection(f: &Poly, g: &Poly, ideal: &Ideal) -> Result<ParametricOrder, ParamError> {
    parametric_intersection_with(f, g, ideal, &ParamConfig::default())
}

/// Generic and exceptional values of `int(f − αg; I)` for `α ≠ 0`.
pub fn parametric_intersection_with(
    f: &Poly,
    g: &Poly,
    ideal: &Ideal,
    cfg: &ParamConfig,
) -> Result<ParametricOrder, ParamError> {
    let base = base_values(f, g, ideal)?;
    let pivot = choose_pivot(ideal)?;
    let basis = FreeBasis::new(ideal, pivot)?;
    let field = ideal.ring().field().clone();
    let mut prec = (4 * base + 8) as usize;
    let mut det = parametric_determinant(f, g, &basis, prec);
    let k0 = loop {
        if let Some(k) = det.order() {
            break k;
        }
        prec *= 2;
        if prec > cfg.trunc_cap {
            return Err(ParamError::TruncationExhausted(cfg.trunc_cap));
        }
        det = parametric_determinant(f, g, &basis, prec);
    };
    let roots = univariate_roots(det.coeff(k0), &field)?;
    let mut exceptional = Vec::new();
    for r in roots.roots.iter().filter(|r| !r.value.is_zero()) {
        let value = match series::order(&det.eval(&r.value)) {
            Some(k) => NatInf::Fin(k as u64),
            None => exact_value(&f.sub(&g.scale(&r.value)), ideal)?,
        };
        exceptional.push((Beta::Value(r.value.clone()), value));
    }
    for h in &roots.residual {
        let hit = det.coeffs()[k0..].iter().position(|c| !c.rem(h, &field).is_zero());
        if hit.is_none() {
            if let Some(ext) = splitting_extension(&field, h) {
                let ring = Ring::from_names(&ext, ideal.ring().vars().to_vec())?;
                let lifted = Ideal::new(&ring, ideal.generators().iter().map(|p| change_field(p, &ring)).collect())?;
                let theta = ext.generator().unwrap();
                let hpoly = change_field(f, &ring).sub(&change_field(g, &ring).scale(&theta));
                exceptional.push((Beta::Conjugates(h.clone()), exact_value(&hpoly, &lifted)?));
                continue;
            }
        }
        let value = loop {
            let hit = det.coeffs()[k0..]
                .iter()
                .position(|c| !c.rem(h, &field).is_zero());
            if let Some(k) = hit {
                break NatInf::Fin((k0 + k) as u64);
            }
            prec *= 2;
            if prec > cfg.trunc_cap {
                return Err(ParamError::TruncationExhausted(cfg.trunc_cap));
            }
            det = parametric_determinant(f, g, &basis, prec);
        };
        exceptional.push((Beta::Conjugates(h.clone()), value));
    }
    Ok(ParametricOrder {
        pivot,
        base_value: base,
        generic_value: NatInf::Fin(k0 as u64),
        exceptional,
        determinant: det,
    })
}

/// `int(h; I)` from a local standard basis, infinite for `h = 0`.
fn exact_value(h: &Poly, ideal: &Ideal) -> Result<NatInf, ParamError> {
    if h.is_zero() {
        return Ok(NatInf::Inf);
    }
    Ok(intersection_number(h, ideal)?)
}

/// `K[θ]/(h)` when `K` is a prime field and `h` is known irreducible.
fn splitting_extension(field: &Field, h: &UniPoly) -> Option<Field> {
    if !field.is_prime_field() {
        return None;
    }
    if field.characteristic() == 0 && h.degree()? >= 4 && is_irreducible(h, field) != Ok(true) {
        return None;
    }
    Field::extension(field, h.clone(), "θ").ok()
}

/// Move a polynomial to a ring with the same variables over `target`'s
/// field, embedding prime-field coefficients.
pub fn change_field(p: &Poly, target: &Ring) -> Poly {
    let field = target.field();
    target.from_terms(p.terms().iter().map(|(m, c)| (m.clone(), field.embed(c))).collect())
}

/// `⟨I, z_1 − h_1, …⟩` in a ring with fresh variables `z_i`.
pub fn adjoin(ideal: &Ideal, polys: &[Poly]) -> (Ideal, Vec<(String, Poly)>) {
    let ring = ideal.ring();
    let mut names: Vec<String> = Vec::new();
    for _ in polys {
        names.push(ring.fresh_name(&names));
    }
    let big = ring.extend(&names).unwrap();
    let mut gens: Vec<Poly> = ideal.generators().iter().map(|g| g.embed(&big)).collect();
    for (k, h) in polys.iter().enumerate() {
        gens.push(big.var(ring.nvars() + k).sub(&h.embed(&big)));
    }
    let rels = names.into_iter().zip(polys.iter().cloned()).collect();
    (Ideal::new(&big, gens).unwrap(), rels)
}

/// Two distinct parameters among the exceptional ones, passing to a simple
/// extension when fewer than two lie in the field.
fn two_betas(field: &Field, po: &ParametricOrder) -> Result<(Field, Coeff, Coeff), ParamError> {
    let inside: Vec<Coeff> = po
        .exceptional
        .iter()
        .filter_map(|(b, _)| match b {
            Beta::Value(v) => Some(v.clone()),
            Beta::Conjugates(_) => None,
        })
        .collect();
    if inside.len() >= 2 {
        return Ok((field.clone(), inside[0].clone(), inside[1].clone()));
    }
    let h = po
        .exceptional
        .iter()
        .find_map(|(b, _)| match b {
            Beta::Conjugates(h) => Some(h.clone()),
            Beta::Value(_) => None,
        })
        .expect("fewer than two exceptional parameters");
    let shown = h.display(field, "a");
    let ext = splitting_extension(field, &h).ok_or_else(|| ParamError::Unsupported(shown.clone()))?;
    let theta = ext.generator().unwrap();
    if let Some(v) = inside.first() {
        return Ok((ext.clone(), ext.embed(v), theta));
    }
    if h.degree() == Some(2) {
        let other = ext.sub(&ext.neg(&ext.embed(&h.coeffs()[1])), &theta);
        return Ok((ext, theta, other));
    }
    let lifted = UniPoly::new(h.coeffs().iter().map(|c| ext.embed(c)).collect());
    let other = univariate_roots(&lifted, &ext)?
        .roots
        .into_iter()
        .map(|r| r.value)
        .find(|v| *v != theta)
        .ok_or(ParamError::Unsupported(shown))?;
    Ok((ext, theta, other))
}

pub fn parametric_test(f: &Poly, g: &Poly, ideal: &Ideal) -> Result<Verdict, ParamError> {
    parametric_test_with(f, g, ideal, &ParamConfig::default())
}

/// Decide between the three outcomes for the pencil `f − a·g` on `I`:
/// a generic drop, two raising parameters, or a unique one.
pub fn parametric_test_with(f: &Poly, g: &Poly, ideal: &Ideal, cfg: &ParamConfig) -> Result<Verdict, ParamError> {
    let po = parametric_intersection_with(f, g, ideal, cfg)?;
    verdict_from(f, g, ideal, &po)
}

/// The verdict together with the pencil data it was read from.
pub fn parametric_test_report(
    f: &Poly,
    g: &Poly,
    ideal: &Ideal,
    cfg: &ParamConfig,
) -> Result<(Verdict, ParametricOrder), ParamError> {
    let po = parametric_intersection_with(f, g, ideal, cfg)?;
    Ok((verdict_from(f, g, ideal, &po)?, po))
}

fn verdict_from(f: &Poly, g: &Poly, ideal: &Ideal, po: &ParametricOrder) -> Result<Verdict, ParamError> {
    let field = ideal.ring().field().clone();
    if po.generic_value < NatInf::Fin(po.base_value) {
        let (j, rels) = adjoin(ideal, &[f.clone(), g.clone()]);
        return Ok(Verdict::False(Adjunction {
            kind: FalseKind::GenericDrop,
            ideal: j,
            relations: rels,
            betas: Vec::new(),
        }));
    }
    if po.distinct_exceptional() >= 2 {
        let (ext, b1, b2) = two_betas(&field, po)?;
        let ring = Ring::from_names(&ext, ideal.ring().vars().to_vec())?;
        let lift = |p: &Poly| change_field(p, &ring);
        let base = Ideal::new(&ring, ideal.generators().iter().map(lift).collect())?;
        let (fl, gl) = (lift(f), lift(g));
        let h1 = fl.sub(&gl.scale(&b1));
        let h2 = fl.sub(&gl.scale(&b2));
        let (j, rels) = adjoin(&base, &[h1, h2]);
        return Ok(Verdict::False(Adjunction {
            kind: FalseKind::TwoRoots,
            ideal: j,
            relations: rels,
            betas: vec![b1, b2],
        }));
    }
    let (beta, value) = match &po.exceptional[0] {
        (Beta::Value(b), v) => (b.clone(), *v),
        (Beta::Conjugates(_), _) => unreachable!("a single exceptional parameter lies in the field"),
    };
    if !value.is_inf() {
        return Ok(Verdict::NotFalse(beta));
    }
    let h = f.sub(&g.scale(&beta));
    if ideal.contains_radical(&h) {
        return Err(ParamError::ContextViolation {
            poly: h.to_string(),
            beta,
        });
    }
    let (j, rels) = adjoin(ideal, std::slice::from_ref(&h));
    Ok(Verdict::False(Adjunction {
        kind: FalseKind::InfiniteRoot,
        ideal: j,
        relations: rels,
        betas: vec![beta],
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::Monomial;

    fn setup(field: &Field, vars: &[&str], gens: &[&str]) -> Ideal {
        let r = Ring::new(field, vars).unwrap();
        Ideal::parse(&r, gens).unwrap()
    }

    fn series_of(field: &Field, s: &[Coeff]) -> Vec<(usize, String)> {
        s.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k, field.format(c)))
            .collect()
    }

    fn kuo() -> Ideal {
        setup(&Field::rationals(), &["x", "y"], &["(y^2 - x^3)^2 - x^7"])
    }

    fn space() -> Ideal {
        setup(&Field::rationals(), &["x", "y", "z"], &["x^3 - y^2", "(z^2 - x*y)^2 - x^2*y*z^2"])
    }

    fn names(b: &FreeBasis) -> Vec<String> {
        b.monomials()
            .iter()
            .map(|m| b.ring().monomial(m.clone()).to_string())
            .collect()
    }

    #[test]
    fn free_bases() {
        let k = kuo();
        assert_eq!(names(&free_basis(&k, 0).unwrap()), ["1", "y", "y^2", "y^3"]);
        let s = space();
        assert_eq!(
            names(&free_basis(&s, 0).unwrap()),
            ["1", "z", "z^2", "z^3", "y", "y*z", "y*z^2", "y*z^3"]
        );
        let line = setup(&Field::rationals(), &["x", "y"], &["y"]);
        assert_eq!(names(&free_basis(&line, 0).unwrap()), ["1"]);
        let axis = setup(&Field::rationals(), &["x", "y"], &["x"]);
        assert!(matches!(free_basis(&axis, 0), Err(ParamError::InfinitePivot(_))));
    }

    #[test]
    fn kuo_matrices() {
        let k = kuo();
        let q = k.ring().field().clone();
        let b = free_basis(&k, 0).unwrap();
        let mx = mult_matrix(&k.ring().var(0), &b, 10);
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { vec![(1, "1".to_string())] } else { vec![] };
                assert_eq!(series_of(&q, &mx[i][j]), want);
            }
        }
        let my = mult_matrix(&k.ring().var(1), &b, 10);
        let col: Vec<_> = (0..4).map(|i| series_of(&q, &my[i][3])).collect();
        assert_eq!(
            col,
            vec![
                vec![(6, "-1".to_string()), (7, "1".to_string())],
                vec![],
                vec![(3, "2".to_string())],
                vec![]
            ]
        );
    }

    #[test]
    fn space_curve_matrix() {
        let s = space();
        let q = s.ring().field().clone();
        let b = free_basis(&s, 0).unwrap();
        let mz = mult_matrix(&s.ring().var(2), &b, 12);
        let col: Vec<_> = (0..8).map(|i| series_of(&q, &mz[i][7])).collect();
        assert_eq!(col[2], vec![(4, "2".to_string()), (5, "1".to_string())]);
        assert_eq!(col[4], vec![(5, "-1".to_string())]);
        assert!(col.iter().enumerate().all(|(i, c)| i == 2 || i == 4 || c.is_empty()));
    }

    #[test]
    fn kuo_determinant() {
        let k = kuo();
        let r = k.ring();
        let q = r.field().clone();
        let f = r.parse("y^2 - x^3").unwrap();
        let g = r.parse("x^2*y").unwrap();
        let po = parametric_intersection(&f, &g, &k).unwrap();
        let a = UniPoly::x(&q);
        let one = UniPoly::constant(q.one());
        let c14 = a.add(&one, &q).pow(2, &q).mul(&a.sub(&one, &q).pow(2, &q), &q);
        let c15 = a.pow(4, &q).neg(&q);
        for (k, c) in po.determinant.coeffs().iter().enumerate() {
            let want = match k {
                14 => c14.clone(),
                15 => c15.clone(),
                _ => UniPoly::zero(),
            };
            assert_eq!(c, &want, "coefficient of x^{k}");
        }
        assert_eq!(po.generic_value, NatInf::Fin(14));
        assert_eq!(
            po.exceptional,
            vec![
                (Beta::Value(q.from_i64(-1)), NatInf::Fin(15)),
                (Beta::Value(q.from_i64(1)), NatInf::Fin(15))
            ]
        );
    }

    #[test]
    fn space_curve_pencil() {
        let s = space();
        let r = s.ring();
        let q = r.field().clone();
        let f = r.parse("z^2 - x*y").unwrap();
        let g = r.parse("y^2").unwrap();
        let po = parametric_intersection(&f, &g, &s).unwrap();
        assert_eq!(po.generic_value, NatInf::Fin(24));
        assert_eq!(
            po.exceptional,
            vec![
                (Beta::Value(q.from_i64(-1)), NatInf::Fin(26)),
                (Beta::Value(q.from_i64(1)), NatInf::Fin(26))
            ]
        );
    }

    #[test]
    fn equal_pencil_collapses() {
        let k = kuo();
        let x = k.ring().var(0);
        let po = parametric_intersection(&x, &x, &k).unwrap();
        assert_eq!(po.generic_value, NatInf::Fin(4));
        assert_eq!(po.exceptional, vec![(Beta::Value(k.ring().field().one()), NatInf::Inf)]);
    }

    #[test]
    fn determinant_order_is_colength() {
        let k = kuo();
        let r = k.ring();
        let b = free_basis(&k, 0).unwrap();
        for text in ["y", "x*y", "y^2 - x^3", "y^3 + x^5", "y^2 - x^3 - x^2*y"] {
            let h = r.parse(text).unwrap();
            let d = series::det(r.field(), mult_matrix(&h, &b, 40), 40);
            let want = intersection_number(&h, &k).unwrap();
            assert_eq!(NatInf::Fin(series::order(&d).unwrap() as u64), want, "{text}");
        }
    }

    #[test]
    fn tests_on_known_curves() {
        let k = kuo();
        let r = k.ring();
        let f = r.parse("y^2 - x^3").unwrap();
        let g = r.parse("x^2*y").unwrap();
        match parametric_test(&f, &g, &k).unwrap() {
            Verdict::False(adj) => {
                assert_eq!(adj.kind, FalseKind::TwoRoots);
                let rels: Vec<String> = adj.relations.iter().map(|(n, p)| format!("{n}={p}")).collect();
                assert_eq!(rels, ["z=-x^3 + x^2*y + y^2", "u=-x^3 - x^2*y + y^2"]);
            }
            v => panic!("{v:?}"),
        }

        let q = Field::rationals();
        let p = setup(&q, &["x", "y"], &["(y^2 - x^3)^2 - x^2*y^3"]);
        let r = p.ring();
        let v = parametric_test(&r.parse("y^2").unwrap(), &r.parse("x^3").unwrap(), &p).unwrap();
        assert!(matches!(v, Verdict::NotFalse(ref b) if *b == q.one()));
        assert_eq!(intersection_number(&r.parse("y^2 - x^3").unwrap(), &p).unwrap(), NatInf::Fin(13));

        let cusp = setup(&q, &["x", "y"], &["y^2 - x^3"]);
        let r = cusp.ring();
        let v = parametric_test(&r.parse("y^2").unwrap(), &r.parse("x^3").unwrap(), &cusp);
        assert!(matches!(v, Err(ParamError::ContextViolation { .. })));
    }

    #[test]
    fn conjugate_parameters_use_an_extension() {
        // y^2 + x^2 splits only over Q(i)
        let q = Field::rationals();
        let i = setup(&q, &["x", "y"], &["y^2 + x^2"]);
        let r = i.ring();
        let po = parametric_intersection(&r.parse("y").unwrap(), &r.parse("x").unwrap(), &i).unwrap();
        assert_eq!(po.generic_value, NatInf::Fin(2));
        assert_eq!(po.distinct_exceptional(), 2);
        match parametric_test(&r.parse("y").unwrap(), &r.parse("x").unwrap(), &i).unwrap() {
            Verdict::False(adj) => {
                assert_eq!(adj.kind, FalseKind::TwoRoots);
                assert_eq!(adj.ideal.ring().field().degree(), 2);
            }
            v => panic!("{v:?}"),
        }
    }

    #[test]
    fn small_field_uses_division_free_path() {
        let f2 = Field::prime(2).unwrap();
        let k = setup(&f2, &["x", "y"], &["(y^2 - x^3)^2 - x^7"]);
        let r = k.ring();
        let v = parametric_test(&r.parse("y^2").unwrap(), &r.parse("x^3").unwrap(), &k).unwrap();
        assert!(matches!(v, Verdict::NotFalse(ref b) if *b == f2.one()));
        let g = r.parse("y^2 + x^3").unwrap();
        let c = r.monomial(Monomial(vec![2, 1]));
        let v = parametric_test(&g, &c, &k).unwrap();
        assert!(matches!(v, Verdict::NotFalse(ref b) if *b == f2.one()));
    }
}
