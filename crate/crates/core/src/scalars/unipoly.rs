//! Dense univariate polynomials over a [`Field`], coefficients stored from
//! the constant term upward.

use num_bigint::BigUint;

use super::field::{Coeff, Field};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<Coeff>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Coeff>) -> UniPoly {
        while coeffs.last().is_some_and(Coeff::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> UniPoly {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: Coeff) -> UniPoly {
        UniPoly::new(vec![c])
    }

    /// `c·a^k`.
    pub fn monomial(c: Coeff, k: usize, f: &Field) -> UniPoly {
        let mut v = vec![f.zero(); k];
        v.push(c);
        UniPoly::new(v)
    }

    /// The polynomial `a`.
    pub fn x(f: &Field) -> UniPoly {
        UniPoly::monomial(f.one(), 1, f)
    }

    /// `a - r`.
    pub fn linear_root(r: &Coeff, f: &Field) -> UniPoly {
        UniPoly::new(vec![f.neg(r), f.one()])
    }

    pub fn coeffs(&self) -> &[Coeff] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<Coeff> {
        self.coeffs.get(i).cloned()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient. Panics on the zero polynomial.
    pub fn lc(&self) -> &Coeff {
        self.coeffs.last().expect("leading coefficient of zero polynomial")
    }

    pub fn add(&self, o: &UniPoly, f: &Field) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let z = f.zero();
        UniPoly::new(
            (0..n)
                .map(|i| {
                    f.add(
                        self.coeffs.get(i).unwrap_or(&z),
                        o.coeffs.get(i).unwrap_or(&z),
                    )
                })
                .collect(),
        )
    }

    pub fn neg(&self, f: &Field) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| f.neg(c)).collect())
    }

    pub fn sub(&self, o: &UniPoly, f: &Field) -> UniPoly {
        self.add(&o.neg(f), f)
    }

    pub fn scale(&self, c: &Coeff, f: &Field) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, o: &UniPoly, f: &Field) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![f.zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UniPoly::new(out)
    }

    pub fn pow(&self, e: u32, f: &Field) -> UniPoly {
        let mut acc = UniPoly::constant(f.one());
        for _ in 0..e {
            acc = acc.mul(self, f);
        }
        acc
    }

    /// Quotient and remainder. Panics when dividing by zero.
    pub fn divrem(&self, d: &UniPoly, f: &Field) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = f.inv(d.lc()).unwrap();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![f.zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = f.mul(&r[k + dd], &inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = f.sub(&r[k + j], &f.mul(&c, b));
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    pub fn rem(&self, d: &UniPoly, f: &Field) -> UniPoly {
        self.divrem(d, f).1
    }

    /// Exact quotient; the caller guarantees divisibility.
    pub fn div_exact(&self, d: &UniPoly, f: &Field) -> UniPoly {
        let (q, r) = self.divrem(d, f);
        debug_assert!(r.is_zero(), "inexact division");
        q
    }

    pub fn monic(&self, f: &Field) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = f.inv(self.lc()).unwrap();
        self.scale(&inv, f)
    }

    /// Monic greatest common divisor (zero when both inputs are zero).
    pub fn gcd(&self, o: &UniPoly, f: &Field) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f);
            a = b;
            b = r;
        }
        a.monic(f)
    }

    /// `(g, s, t)` with `g = s·self + t·o`; `g` is not normalized.
    pub fn xgcd(&self, o: &UniPoly, f: &Field) -> (UniPoly, UniPoly, UniPoly) {
        let one = UniPoly::constant(f.one());
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (one.clone(), UniPoly::zero());
        let (mut t0, mut t1) = (UniPoly::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1, f);
            let s2 = s0.sub(&q.mul(&s1, f), f);
            let t2 = t0.sub(&q.mul(&t1, f), f);
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s2);
            (t0, t1) = (t1, t2);
        }
        (r0, s0, t0)
    }

    pub fn derivative(&self, f: &Field) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| f.mul(c, &f.from_i64(i as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Coeff, f: &Field) -> Coeff {
        let mut acc = f.zero();
        for c in self.coeffs.iter().rev() {
            acc = f.add(&f.mul(&acc, x), c);
        }
        acc
    }

    /// Substitute a polynomial for the variable.
    pub fn compose(&self, g: &UniPoly, f: &Field) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g, f).add(&UniPoly::constant(c.clone()), f);
        }
        acc
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, e: &BigUint, m: &UniPoly, f: &Field) -> UniPoly {
        let base = self.rem(m, f);
        let mut acc = UniPoly::constant(f.one()).rem(m, f);
        for i in (0..e.bits()).rev() {
            acc = acc.mul(&acc, f).rem(m, f);
            if e.bit(i) {
                acc = acc.mul(&base, f).rem(m, f);
            }
        }
        acc
    }

    /// For `self = g(a^p)` in characteristic `p`, returns the `p`-th root of
    /// `self`, i.e. `g` with every coefficient replaced by its `p`-th root.
    pub fn pth_root(&self, f: &Field) -> UniPoly {
        let p = f.characteristic() as usize;
        UniPoly::new(
            self.coeffs
                .iter()
                .step_by(p)
                .map(|c| f.pth_root(c))
                .collect(),
        )
    }

    /// Squarefree decomposition: pairs `(g, m)` of monic, squarefree, pairwise
    /// coprime factors with `self = lc · ∏ g^m`.
    pub fn squarefree_decomposition(&self, f: &Field) -> Vec<(UniPoly, u64)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let a = self.monic(f);
        let mut c = a.gcd(&a.derivative(f), f);
        let mut w = a.div_exact(&c, f);
        let mut i = 1u64;
        while w.degree().unwrap() > 0 {
            let y = w.gcd(&c, f);
            let z = w.div_exact(&y, f);
            if z.degree().unwrap() > 0 {
                out.push((z, i));
            }
            i += 1;
            c = c.div_exact(&y, f);
            w = y;
        }
        if c.degree().unwrap() > 0 {
            // only reachable in positive characteristic: c is a p-th power
            let p = f.characteristic();
            for (g, m) in c.pth_root(f).squarefree_decomposition(f) {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Product of the distinct monic irreducible factors.
    pub fn squarefree_part(&self, f: &Field) -> UniPoly {
        self.squarefree_decomposition(f)
            .into_iter()
            .fold(UniPoly::constant(f.one()), |acc, (g, _)| acc.mul(&g, f))
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display(&self, f: &Field, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, mag) = if f.is_negative_rational(c) {
                (true, f.neg(c))
            } else {
                (false, c.clone())
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let cs = f.format(&mag);
            let pw = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&cs);
            } else if f.is_one(&mag) {
                out.push_str(&pw);
            } else {
                out.push_str(&format!("{cs}*{pw}"));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qp(v: &[i64]) -> UniPoly {
        let f = Field::rationals();
        UniPoly::new(v.iter().map(|&c| f.from_i64(c)).collect())
    }

    #[test]
    fn divrem_roundtrip() {
        let f = Field::rationals();
        let a = qp(&[1, 2, 3, 4, 5]);
        let b = qp(&[1, 0, 2]);
        let (q, r) = a.divrem(&b, &f);
        assert_eq!(q.mul(&b, &f).add(&r, &f), a);
        assert!(r.degree().unwrap() < 2);
    }

    #[test]
    fn squarefree_over_q() {
        let f = Field::rationals();
        // (a+1)^2 (a-1)^2 a
        let p = qp(&[1, 1]).pow(2, &f).mul(&qp(&[-1, 1]).pow(2, &f), &f).mul(&qp(&[0, 1]), &f);
        let d = p.squarefree_decomposition(&f);
        assert_eq!(d.len(), 2);
        assert_eq!(d[0], (qp(&[0, 1]), 1));
        assert_eq!(d[1], (qp(&[-1, 0, 1]), 2));
    }

    #[test]
    fn squarefree_inseparable() {
        let f = Field::prime(3).unwrap();
        // a^3 - 1 = (a - 1)^3 over F_3, times a
        let p = UniPoly::new(vec![f.from_i64(-1), f.zero(), f.zero(), f.one()]).mul(&UniPoly::x(&f), &f);
        let d = p.squarefree_decomposition(&f);
        assert!(d.contains(&(UniPoly::x(&f), 1)));
        assert!(d.contains(&(UniPoly::linear_root(&f.one(), &f), 3)));
    }

    #[test]
    fn display_form() {
        let f = Field::rationals();
        assert_eq!(qp(&[-2, 0, 1]).display(&f, "a"), "a^2 - 2");
        assert_eq!(qp(&[0, -3]).display(&f, "a"), "-3*a");
    }
}
