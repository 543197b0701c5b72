//! Exact coefficient fields: the rationals, prime fields and simple
//! algebraic extensions of either.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use super::unipoly::UniPoly;
use super::ScalarError;

/// Raw field element. The meaning of a value depends on the [`Field`] it
/// belongs to; every value produced by a field method is canonical, so
/// structural equality is field equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Coeff {
    /// Rational in lowest terms, positive denominator.
    Rat(BigRational),
    /// Residue in `[0, p)`.
    Mod(u64),
    /// Coordinates over the prime field in the power basis `1, θ, …, θ^{d-1}`.
    Ext(Vec<Coeff>),
}

impl Coeff {
    pub fn is_zero(&self) -> bool {
        match self {
            Coeff::Rat(r) => r.is_zero(),
            Coeff::Mod(v) => *v == 0,
            Coeff::Ext(v) => v.iter().all(Coeff::is_zero),
        }
    }
}

#[derive(Debug)]
struct Extension {
    base: Field,
    modulus: UniPoly,
    name: String,
}

#[derive(Debug)]
struct FieldSpec {
    characteristic: u64,
    extension: Option<Extension>,
}

/// A coefficient field. Cheap to clone; all clones share one specification.
#[derive(Clone, Debug)]
pub struct Field(Arc<FieldSpec>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        if self.0.characteristic != other.0.characteristic {
            return false;
        }
        match (&self.0.extension, &other.0.extension) {
            (None, None) => true,
            (Some(a), Some(b)) => a.modulus == b.modulus,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl Hash for Field {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.characteristic.hash(state);
        if let Some(ext) = &self.0.extension {
            ext.modulus.coeffs().hash(state);
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(acc, b);
            }
            b = mulmod(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1);
    t.rem_euclid(p as i128) as u64
}

impl Field {
    pub fn rationals() -> Field {
        Field(Arc::new(FieldSpec {
            characteristic: 0,
            extension: None,
        }))
    }

    pub fn prime(p: u64) -> Result<Field, ScalarError> {
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(Field(Arc::new(FieldSpec {
            characteristic: p,
            extension: None,
        })))
    }

    /// Prime field of the given characteristic (`0` gives `Q`).
    pub fn with_characteristic(p: u64) -> Result<Field, ScalarError> {
        if p == 0 {
            Ok(Field::rationals())
        } else {
            Field::prime(p)
        }
    }

    /// Simple extension `base[θ]/(modulus)`. The modulus must be monic of
    /// degree at least two and irreducible over the prime field `base`;
    /// irreducibility is verified here.
    pub fn extension(base: &Field, modulus: UniPoly, name: &str) -> Result<Field, ScalarError> {
        if !base.is_prime_field() {
            return Err(ScalarError::NestedExtension);
        }
        let deg = modulus.degree().unwrap_or(0);
        if deg < 2 {
            return Err(ScalarError::BadModulus("degree must be at least 2".into()));
        }
        if !base.is_one(modulus.lc()) {
            return Err(ScalarError::BadModulus("modulus must be monic".into()));
        }
        if !super::roots::is_irreducible(&modulus, base)? {
            return Err(ScalarError::BadModulus(format!(
                "{} is not irreducible",
                modulus.display(base, "θ")
            )));
        }
        Ok(Field(Arc::new(FieldSpec {
            characteristic: base.characteristic(),
            extension: Some(Extension {
                base: base.clone(),
                modulus,
                name: name.to_string(),
            }),
        })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.characteristic
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.extension.is_none()
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> usize {
        self.0
            .extension
            .as_ref()
            .map_or(1, |e| e.modulus.degree().unwrap())
    }

    /// The prime field underneath (itself when already prime).
    pub fn prime_field(&self) -> Field {
        match &self.0.extension {
            Some(e) => e.base.clone(),
            None => self.clone(),
        }
    }

    pub fn modulus(&self) -> Option<&UniPoly> {
        self.0.extension.as_ref().map(|e| &e.modulus)
    }

    pub fn generator_name(&self) -> Option<&str> {
        self.0.extension.as_ref().map(|e| e.name.as_str())
    }

    /// Number of elements, `None` for characteristic zero.
    pub fn order(&self) -> Option<BigUint> {
        if self.characteristic() == 0 {
            None
        } else {
            Some(BigUint::from(self.characteristic()).pow(self.degree() as u32))
        }
    }

    pub fn zero(&self) -> Coeff {
        match &self.0.extension {
            Some(e) => Coeff::Ext(vec![e.base.zero(); self.degree()]),
            None if self.0.characteristic == 0 => Coeff::Rat(BigRational::zero()),
            None => Coeff::Mod(0),
        }
    }

    pub fn one(&self) -> Coeff {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Coeff {
        match &self.0.extension {
            Some(e) => self.embed(&e.base.from_bigint(v)),
            None if self.0.characteristic == 0 => Coeff::Rat(BigRational::from_integer(v.clone())),
            None => {
                let p = BigInt::from(self.0.characteristic);
                Coeff::Mod(v.mod_floor(&p).to_u64().unwrap())
            }
        }
    }

    pub fn from_rational(&self, v: &BigRational) -> Result<Coeff, ScalarError> {
        let num = self.from_bigint(v.numer());
        let den = self.from_bigint(v.denom());
        self.div(&num, &den)
    }

    /// Embed an element of the prime field.
    pub fn embed(&self, c: &Coeff) -> Coeff {
        match &self.0.extension {
            Some(e) => {
                let mut v = vec![e.base.zero(); self.degree()];
                v[0] = c.clone();
                Coeff::Ext(v)
            }
            None => c.clone(),
        }
    }

    /// The class of θ in an extension field.
    pub fn generator(&self) -> Option<Coeff> {
        let e = self.0.extension.as_ref()?;
        let mut v = vec![e.base.zero(); self.degree()];
        v[1] = e.base.one();
        Some(Coeff::Ext(v))
    }

    /// Element with the given power-basis coordinates (reduced).
    pub fn from_coords(&self, coords: &UniPoly) -> Coeff {
        match &self.0.extension {
            Some(e) => {
                let r = coords.rem(&e.modulus, &e.base);
                let mut v = r.coeffs().to_vec();
                v.resize(self.degree(), e.base.zero());
                Coeff::Ext(v)
            }
            None => coords.coeff(0).unwrap_or_else(|| self.zero()),
        }
    }

    /// Coordinates in the power basis as a polynomial over the prime field.
    pub fn coords(&self, c: &Coeff) -> UniPoly {
        match c {
            Coeff::Ext(v) => UniPoly::new(v.clone()),
            other => UniPoly::new(vec![other.clone()]),
        }
    }

    /// Returns the prime-field value when `c` lies in the prime field.
    pub fn as_prime(&self, c: &Coeff) -> Option<Coeff> {
        match c {
            Coeff::Ext(v) => v[1..].iter().all(Coeff::is_zero).then(|| v[0].clone()),
            other => Some(other.clone()),
        }
    }

    pub fn is_zero(&self, c: &Coeff) -> bool {
        c.is_zero()
    }

    pub fn is_one(&self, c: &Coeff) -> bool {
        *c == self.one()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x + y),
            (Coeff::Mod(x), Coeff::Mod(y)) => {
                let p = self.0.characteristic;
                Coeff::Mod(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            (Coeff::Ext(x), Coeff::Ext(y)) => {
                let base = &self.0.extension.as_ref().unwrap().base;
                Coeff::Ext(x.iter().zip(y).map(|(s, t)| base.add(s, t)).collect())
            }
            _ => panic!("coefficient representation mismatch"),
        }
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        match a {
            Coeff::Rat(x) => Coeff::Rat(-x),
            Coeff::Mod(x) => {
                let p = self.0.characteristic;
                Coeff::Mod(if *x == 0 { 0 } else { p - x })
            }
            Coeff::Ext(x) => {
                let base = &self.0.extension.as_ref().unwrap().base;
                Coeff::Ext(x.iter().map(|s| base.neg(s)).collect())
            }
        }
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        match (a, b) {
            (Coeff::Rat(x), Coeff::Rat(y)) => Coeff::Rat(x * y),
            (Coeff::Mod(x), Coeff::Mod(y)) => {
                let p = self.0.characteristic;
                Coeff::Mod(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            (Coeff::Ext(x), Coeff::Ext(y)) => {
                let e = self.0.extension.as_ref().unwrap();
                let prod = UniPoly::new(x.clone()).mul(&UniPoly::new(y.clone()), &e.base);
                self.from_coords(&prod)
            }
            _ => panic!("coefficient representation mismatch"),
        }
    }

    pub fn inv(&self, a: &Coeff) -> Result<Coeff, ScalarError> {
        if a.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(match a {
            Coeff::Rat(x) => Coeff::Rat(x.recip()),
            Coeff::Mod(x) => Coeff::Mod(inv_mod(*x, self.0.characteristic)),
            Coeff::Ext(x) => {
                let e = self.0.extension.as_ref().unwrap();
                let (g, s, _) = UniPoly::new(x.clone()).xgcd(&e.modulus, &e.base);
                // g is a nonzero constant because the modulus is irreducible
                let ginv = e.base.inv(g.lc())?;
                self.from_coords(&s.scale(&ginv, &e.base))
            }
        })
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Result<Coeff, ScalarError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Coeff, e: u64) -> Coeff {
        self.pow_big(a, &BigUint::from(e))
    }

    pub fn pow_big(&self, a: &Coeff, e: &BigUint) -> Coeff {
        let mut acc = self.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = self.mul(&acc, &acc);
            if e.bit(i) {
                acc = self.mul(&acc, a);
            }
        }
        acc
    }

    /// `p`-th root; only meaningful in positive characteristic, where every
    /// finite field is perfect.
    pub fn pth_root(&self, a: &Coeff) -> Coeff {
        match &self.0.extension {
            None => a.clone(),
            Some(_) => {
                let p = BigUint::from(self.characteristic());
                self.pow_big(a, &p.pow(self.degree() as u32 - 1))
            }
        }
    }

    /// Every element of a finite field, in a fixed order.
    pub fn elements(&self) -> Option<Vec<Coeff>> {
        let p = self.characteristic();
        if p == 0 {
            return None;
        }
        let base: Vec<Coeff> = (0..p).map(Coeff::Mod).collect();
        match &self.0.extension {
            None => Some(base),
            Some(_) => {
                let d = self.degree();
                let mut out = vec![Vec::new()];
                for _ in 0..d {
                    let mut next = Vec::with_capacity(out.len() * base.len());
                    for prefix in &out {
                        for b in &base {
                            let mut v = prefix.clone();
                            v.push(b.clone());
                            next.push(v);
                        }
                    }
                    out = next;
                }
                Some(out.into_iter().map(Coeff::Ext).collect())
            }
        }
    }

    /// Integer value of a prime-field element when it is one.
    pub fn as_integer(&self, c: &Coeff) -> Option<BigInt> {
        match c {
            Coeff::Rat(r) if r.is_integer() => Some(r.to_integer()),
            Coeff::Mod(v) => Some(BigInt::from(*v)),
            _ => None,
        }
    }

    /// Text form usable by the polynomial parser. Compound values are
    /// parenthesized.
    pub fn format(&self, c: &Coeff) -> String {
        match c {
            Coeff::Rat(r) => {
                if r.is_integer() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            Coeff::Mod(v) => v.to_string(),
            Coeff::Ext(_) => {
                let e = self.0.extension.as_ref().unwrap();
                let coords = self.coords(c);
                let s = coords.display(&e.base, &e.name);
                if coords.degree().unwrap_or(0) == 0 && !s.starts_with('-') {
                    s
                } else {
                    format!("({s})")
                }
            }
        }
    }

    /// True when the printed form of `c` needs no sign handling: a positive
    /// rational or any positive-characteristic value.
    pub(crate) fn is_negative_rational(&self, c: &Coeff) -> bool {
        matches!(c, Coeff::Rat(r) if r.is_negative())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.characteristic() == 0 {
            "Q".to_string()
        } else {
            format!("F_{}", self.characteristic())
        };
        match &self.0.extension {
            None => write!(f, "{base}"),
            Some(e) => write!(
                f,
                "{base}[{}]/({})",
                e.name,
                e.modulus.display(&e.base, &e.name)
            ),
        }
    }
}

/// A field element that knows its field. Operations check that both
/// operands live in the same field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar {
    field: Field,
    value: Coeff,
}

impl Scalar {
    pub fn new(field: &Field, value: Coeff) -> Scalar {
        Scalar {
            field: field.clone(),
            value,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> &Coeff {
        &self.value
    }

    fn check(&self, other: &Scalar) -> Result<(), ScalarError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        Ok(Scalar::new(&self.field, self.field.add(&self.value, &other.value)))
    }

    pub fn sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        Ok(Scalar::new(&self.field, self.field.sub(&self.value, &other.value)))
    }

    pub fn mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.check(other)?;
        Ok(Scalar::new(&self.field, self.field.mul(&self.value, &other.value)))
    }

    pub fn neg(&self) -> Scalar {
        Scalar::new(&self.field, self.field.neg(&self.value))
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        Ok(Scalar::new(&self.field, self.field.inv(&self.value)?))
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// Equality that reports a field mismatch instead of answering `false`.
    pub fn same_as(&self, other: &Scalar) -> Result<bool, ScalarError> {
        self.check(other)?;
        Ok(self.value == other.value)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(&self.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Coeff {
        Coeff::Rat(BigRational::new(n.into(), d.into()))
    }

    #[test]
    fn rational_sum() {
        let f = Field::rationals();
        assert_eq!(f.add(&q(1, 3), &q(1, 6)), q(1, 2));
    }

    #[test]
    fn inverse_mod_five() {
        let f = Field::prime(5).unwrap();
        assert_eq!(f.inv(&Coeff::Mod(2)).unwrap(), Coeff::Mod(3));
        assert_eq!(f.inv(&Coeff::Mod(0)), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn sqrt_two_squared() {
        let q0 = Field::rationals();
        let m = UniPoly::new(vec![q0.from_i64(-2), q0.zero(), q0.one()]);
        let k = Field::extension(&q0, m, "th").unwrap();
        let th = k.generator().unwrap();
        assert_eq!(k.mul(&th, &th), k.from_i64(2));
        let inv = k.inv(&th).unwrap();
        assert_eq!(k.mul(&inv, &th), k.one());
    }

    #[test]
    fn reducible_modulus_rejected() {
        let q0 = Field::rationals();
        let m = UniPoly::new(vec![q0.from_i64(-1), q0.zero(), q0.one()]);
        assert!(Field::extension(&q0, m, "th").is_err());
        assert!(Field::prime(6).is_err());
    }

    #[test]
    fn scalar_field_mismatch() {
        let a = Scalar::new(&Field::prime(5).unwrap(), Coeff::Mod(1));
        let b = Scalar::new(&Field::prime(7).unwrap(), Coeff::Mod(1));
        assert_eq!(a.add(&b), Err(ScalarError::FieldMismatch));
    }

    #[test]
    fn gf4_inverses() {
        let f2 = Field::prime(2).unwrap();
        let m = UniPoly::new(vec![f2.one(), f2.one(), f2.one()]);
        let k = Field::extension(&f2, m, "g").unwrap();
        for e in k.elements().unwrap() {
            if !e.is_zero() {
                assert_eq!(k.mul(&e, &k.inv(&e).unwrap()), k.one());
            }
        }
    }
}
