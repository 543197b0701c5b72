//! Roots of univariate polynomials and the factorization pieces needed to
//! find them: distinct/equal-degree factorization over finite fields and
//! Hensel-lifted rational roots over Q.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::field::{is_prime, Coeff, Field};
use super::unipoly::UniPoly;
use super::ScalarError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: Coeff,
    /// Multiplicity of the root in the input polynomial.
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSet {
    pub roots: Vec<Root>,
    /// Monic squarefree factors of degree at least two without a root in the
    /// field. Over a finite field these are irreducible; over `Q` and its
    /// extensions they are only known to be root-free.
    pub residual: Vec<UniPoly>,
}

/// All roots in `f` of the polynomial `p`, with the root-free remainder.
pub fn univariate_roots(p: &UniPoly, f: &Field) -> Result<RootSet, ScalarError> {
    if p.is_zero() {
        return Err(ScalarError::ZeroPolynomial);
    }
    let mut roots = Vec::new();
    let mut residual = Vec::new();
    for (g, m) in p.squarefree_decomposition(f) {
        let (rs, rest) = squarefree_roots(&g, f)?;
        roots.extend(rs.into_iter().map(|value| Root {
            value,
            multiplicity: m,
        }));
        residual.extend(rest);
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(RootSet { roots, residual })
}

/// Roots of a monic squarefree polynomial and the root-free cofactors.
fn squarefree_roots(g: &UniPoly, f: &Field) -> Result<(Vec<Coeff>, Vec<UniPoly>), ScalarError> {
    if f.characteristic() > 0 {
        let mut roots = Vec::new();
        let mut rest = Vec::new();
        for h in factor_squarefree_finite(g, f) {
            if h.degree() == Some(1) {
                roots.push(f.neg(&h.coeffs()[0]));
            } else {
                rest.push(h);
            }
        }
        return Ok((roots, rest));
    }
    if g.degree() == Some(1) {
        return Ok((vec![f.neg(&g.coeffs()[0])], vec![]));
    }
    let q = f.prime_field();
    let rational: Option<Vec<Coeff>> = g.coeffs().iter().map(|c| f.as_prime(c)).collect();
    let Some(rational) = rational else {
        // genuine extension coefficients: only linear factors are split off
        return Ok((vec![], vec![g.clone()]));
    };
    let gq = UniPoly::new(rational);
    let rs = rational_roots(&gq);
    let mut cof = gq.clone();
    for r in &rs {
        cof = cof.div_exact(&UniPoly::linear_root(&Coeff::Rat(r.clone()), &q), &q);
    }
    let roots = rs.into_iter().map(|r| f.embed(&Coeff::Rat(r))).collect();
    let rest = if cof.degree().unwrap_or(0) >= 1 {
        vec![UniPoly::new(cof.coeffs().iter().map(|c| f.embed(c)).collect())]
    } else {
        vec![]
    };
    Ok((roots, rest))
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| is_prime(n))
}

/// Integer primitive form of a rational polynomial.
fn primitive_integer(p: &UniPoly) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in p.coeffs() {
        if let Coeff::Rat(r) = c {
            den = den.lcm(r.denom());
        }
    }
    let ints: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| match c {
            Coeff::Rat(r) => (r * BigRational::from_integer(den.clone())).to_integer(),
            _ => unreachable!("rational polynomial expected"),
        })
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |a, b| a.gcd(b));
    ints.into_iter().map(|c| c / &g).collect()
}

fn reduce_mod(ints: &[BigInt], fp: &Field) -> UniPoly {
    UniPoly::new(ints.iter().map(|c| fp.from_bigint(c)).collect())
}

fn eval_int(ints: &[BigInt], x: &BigInt) -> BigInt {
    ints.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Distinct rational roots of a squarefree rational polynomial, found by
/// Hensel lifting the roots of a monic integer transform modulo a prime.
pub(crate) fn rational_roots(p: &UniPoly) -> Vec<BigRational> {
    let Some(n) = p.degree() else { return vec![] };
    if n == 0 {
        return vec![];
    }
    let ints = primitive_integer(p);
    let mut out = Vec::new();
    // strip the root zero
    let shift = ints.iter().take_while(|c| c.is_zero()).count();
    if shift > 0 {
        out.push(BigRational::zero());
    }
    let a: Vec<BigInt> = ints[shift..].to_vec();
    let n = a.len() - 1;
    if n == 0 {
        return out;
    }
    // g(z) = lc^{n-1} p(z / lc) is monic with integer coefficients
    let lc = a[n].clone();
    let g: Vec<BigInt> = (0..=n)
        .map(|i| {
            if i == n {
                BigInt::one()
            } else {
                &a[i] * num_traits::pow(lc.clone(), n - 1 - i)
            }
        })
        .collect();
    let bound: BigInt = g.iter().map(|c| c.abs()).max().unwrap() + 1;
    let dg: Vec<BigInt> = (1..=n).map(|i| &g[i] * BigInt::from(i)).collect();
    for prime in small_primes() {
        let fp = Field::prime(prime).unwrap();
        let gp = reduce_mod(&g, &fp);
        if gp.gcd(&gp.derivative(&fp), &fp).degree() != Some(0) {
            continue;
        }
        let modroots = factor_squarefree_finite(&gp, &fp)
            .into_iter()
            .filter(|h| h.degree() == Some(1))
            .map(|h| match fp.neg(&h.coeffs()[0]) {
                Coeff::Mod(v) => BigInt::from(v),
                _ => unreachable!(),
            });
        let two_bound = &bound * 2;
        for r0 in modroots {
            let mut modulus = BigInt::from(prime);
            let mut r = r0;
            while modulus <= two_bound {
                modulus = &modulus * &modulus;
                let num = eval_int(&g, &r).mod_floor(&modulus);
                let den = eval_int(&dg, &r).mod_floor(&modulus);
                let inv = den
                    .extended_gcd(&modulus)
                    .x
                    .mod_floor(&modulus);
                r = (&r - num * inv).mod_floor(&modulus);
            }
            if &r * 2 > modulus {
                r -= &modulus;
            }
            if eval_int(&g, &r).is_zero() {
                out.push(BigRational::new(r, lc.clone()));
            }
        }
        break;
    }
    out.sort();
    out.dedup();
    out
}

/// Distinct-degree factorization of a monic squarefree polynomial over a
/// finite field: pairs `(product of all irreducible factors of degree d, d)`.
pub(crate) fn distinct_degree(g: &UniPoly, f: &Field) -> Vec<(UniPoly, usize)> {
    let q = f.order().unwrap();
    let mut out = Vec::new();
    let mut rest = g.monic(f);
    let x = UniPoly::x(f);
    let mut h = x.clone();
    let mut d = 0;
    while rest.degree().unwrap_or(0) >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&q, &rest, f);
        let gd = h.sub(&x, f).gcd(&rest, f);
        if gd.degree().unwrap_or(0) > 0 {
            rest = rest.div_exact(&gd, f);
            h = h.rem(&rest, f);
            out.push((gd, d));
        }
    }
    if let Some(deg) = rest.degree() {
        if deg > 0 {
            out.push((rest, deg));
        }
    }
    out
}

fn random_coeff(f: &Field, rng: &mut StdRng) -> Coeff {
    let p = f.characteristic();
    let coords = (0..f.degree()).map(|_| Coeff::Mod(rng.gen_range(0..p))).collect();
    f.from_coords(&UniPoly::new(coords))
}

/// Equal-degree splitting (Cantor–Zassenhaus) of a product of irreducible
/// factors of degree `d`.
fn equal_degree(g: &UniPoly, d: usize, f: &Field, rng: &mut StdRng) -> Vec<UniPoly> {
    let n = g.degree().unwrap();
    if n == d {
        return vec![g.monic(f)];
    }
    let q = f.order().unwrap();
    let qd = q.pow(d as u32);
    loop {
        let u = UniPoly::new((0..n).map(|_| random_coeff(f, rng)).collect());
        if u.degree().unwrap_or(0) == 0 {
            continue;
        }
        let v = if f.characteristic() == 2 {
            // trace map to F_2: u + u^2 + ... + u^{2^{kd-1}}
            let steps = (qd.bits() - 1) as usize;
            let mut t = u.rem(g, f);
            let mut acc = t.clone();
            for _ in 1..steps {
                t = t.mul(&t, f).rem(g, f);
                acc = acc.add(&t, f);
            }
            acc
        } else {
            let e: BigUint = (&qd - 1u32) / 2u32;
            u.pow_mod(&e, g, f).sub(&UniPoly::constant(f.one()), f)
        };
        let h = v.gcd(g, f);
        let hd = h.degree().unwrap_or(0);
        if hd > 0 && hd < n {
            let mut out = equal_degree(&h, d, f, rng);
            out.extend(equal_degree(&g.div_exact(&h, f), d, f, rng));
            return out;
        }
    }
}

/// Complete factorization of a monic squarefree polynomial over a finite
/// field into monic irreducibles, sorted by degree then coefficients.
pub(crate) fn factor_squarefree_finite(g: &UniPoly, f: &Field) -> Vec<UniPoly> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut out = Vec::new();
    for (h, d) in distinct_degree(g, f) {
        out.extend(equal_degree(&h, d, f, &mut rng));
    }
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| a.coeffs().cmp(b.coeffs()))
    });
    out
}

/// Irreducibility over a prime field. Over `Q` the answer is certified by
/// the absence of rational roots (degree ≤ 3) or by incompatible factor
/// degree patterns modulo several primes.
pub fn is_irreducible(m: &UniPoly, base: &Field) -> Result<bool, ScalarError> {
    let n = m.degree().unwrap_or(0);
    if n == 0 {
        return Ok(false);
    }
    if m.squarefree_decomposition(base).iter().map(|(_, k)| *k).max() != Some(1)
        || m.squarefree_decomposition(base).len() != 1
    {
        return Ok(false);
    }
    if base.characteristic() > 0 {
        let dd = distinct_degree(&m.monic(base), base);
        return Ok(dd.len() == 1 && dd[0].1 == n);
    }
    if !rational_roots(m).is_empty() {
        return Ok(n == 1);
    }
    if n <= 3 {
        return Ok(true);
    }
    let ints = primitive_integer(m);
    // possible degrees of a rational factor, intersected across primes
    let mut possible: Vec<bool> = vec![true; n + 1];
    let mut used = 0;
    for prime in small_primes().take_while(|&p| p < 2000) {
        let lc = ints[n].to_i128().map(|v| v.rem_euclid(prime as i128));
        if lc == Some(0) || (lc.is_none() && (&ints[n] % BigInt::from(prime)).is_zero()) {
            continue;
        }
        let fp = Field::prime(prime).unwrap();
        let mp = reduce_mod(&ints, &fp);
        if mp.gcd(&mp.derivative(&fp), &fp).degree() != Some(0) {
            continue;
        }
        let mut sums = vec![false; n + 1];
        sums[0] = true;
        for (h, d) in distinct_degree(&mp.monic(&fp), &fp) {
            for _ in 0..h.degree().unwrap() / d {
                for s in (d..=n).rev() {
                    if sums[s - d] {
                        sums[s] = true;
                    }
                }
            }
        }
        for (p, s) in possible.iter_mut().zip(sums) {
            *p &= s;
        }
        used += 1;
        if possible[1..n].iter().all(|b| !b) {
            return Ok(true);
        }
        if used >= 40 {
            break;
        }
    }
    Err(ScalarError::IrreducibilityUndecided(
        m.display(base, "a"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(f: &Field, v: &[i64]) -> UniPoly {
        UniPoly::new(v.iter().map(|&c| f.from_i64(c)).collect())
    }

    #[test]
    fn kuo_discriminant_roots() {
        let q = Field::rationals();
        let p = poly(&q, &[1, 1]).pow(2, &q).mul(&poly(&q, &[-1, 1]).pow(2, &q), &q);
        let rs = univariate_roots(&p, &q).unwrap();
        let vals: Vec<Coeff> = rs.roots.iter().map(|r| r.value.clone()).collect();
        assert_eq!(vals, vec![q.from_i64(-1), q.from_i64(1)]);
        assert!(rs.roots.iter().all(|r| r.multiplicity == 2));
        assert!(rs.residual.is_empty());
    }

    #[test]
    fn no_rational_roots_of_a2_plus_1() {
        let q = Field::rationals();
        let rs = univariate_roots(&poly(&q, &[1, 0, 1]), &q).unwrap();
        assert!(rs.roots.is_empty());
        assert_eq!(rs.residual, vec![poly(&q, &[1, 0, 1])]);
    }

    #[test]
    fn roots_over_f3() {
        let f = Field::prime(3).unwrap();
        let rs = univariate_roots(&poly(&f, &[0, -1, 1]), &f).unwrap();
        let vals: Vec<Coeff> = rs.roots.iter().map(|r| r.value.clone()).collect();
        assert_eq!(vals, vec![Coeff::Mod(0), Coeff::Mod(1)]);
    }

    #[test]
    fn rational_root_with_denominator() {
        let q = Field::rationals();
        // (3a - 2)(a^2 + 5)
        let p = poly(&q, &[-2, 3]).mul(&poly(&q, &[5, 0, 1]), &q);
        let rs = univariate_roots(&p, &q).unwrap();
        assert_eq!(rs.roots.len(), 1);
        assert_eq!(rs.roots[0].value, Coeff::Rat(BigRational::new(2.into(), 3.into())));
    }

    #[test]
    fn quartic_irreducible_over_q() {
        let q = Field::rationals();
        // a^4 - 10 a^2 + 1 is reducible mod every prime but irreducible over Q,
        // so it cannot be certified by degree patterns
        assert!(is_irreducible(&poly(&q, &[1, 0, -10, 0, 1]), &q).is_err());
        assert!(is_irreducible(&poly(&q, &[2, 0, 0, 0, 1]), &q).unwrap());
        // (a^2+1)^2 + ... reducible: (a^2+1)(a^2+2)
        assert!(!is_irreducible(&poly(&q, &[1, 0, 1]).mul(&poly(&q, &[2, 0, 1]), &q), &q).unwrap_or(false));
    }

    #[test]
    fn factor_over_f7() {
        let f = Field::prime(7).unwrap();
        // (a^2+1)(a-3)(a^3+a+1)... a^3+a+1 mod 7 irreducible? check product only
        let p = poly(&f, &[1, 0, 1]).mul(&poly(&f, &[-3, 1]), &f);
        let fs = factor_squarefree_finite(&p, &f);
        assert_eq!(fs.len(), 2);
        let prod = fs.iter().fold(UniPoly::constant(f.one()), |a, b| a.mul(b, &f));
        assert_eq!(prod, p);
    }

    #[test]
    fn roots_in_gf4() {
        let f2 = Field::prime(2).unwrap();
        let k = Field::extension(&f2, poly(&f2, &[1, 1, 1]), "g").unwrap();
        let p = poly(&k, &[1, 1, 1]);
        let rs = univariate_roots(&p, &k).unwrap();
        assert_eq!(rs.roots.len(), 2);
        for r in &rs.roots {
            assert!(p.eval(&r.value, &k).is_zero());
        }
    }
}
