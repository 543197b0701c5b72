//! Monomials, weights with an infinite value, and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PolyError;

/// Exponent vector `a` of `x^a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Monomial {
        let mut m = vec![0; n];
        m[i] = 1;
        Monomial(m)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    /// `o / self`, assuming divisibility.
    pub fn quotient(&self, o: &Monomial) -> Monomial {
        Monomial(o.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, o: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, o: &Monomial) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, e: u32) -> Monomial {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    /// Weighted degree `w·a` with finite weights.
    pub fn wdeg(&self, w: &[u64]) -> u128 {
        self.0
            .iter()
            .zip(w)
            .map(|(&a, &b)| a as u128 * b as u128)
            .sum()
    }
}

/// Element of `N ∪ {∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NatInf {
    Fin(u64),
    Inf,
}

impl NatInf {
    pub fn finite(self) -> Option<u64> {
        match self {
            NatInf::Fin(v) => Some(v),
            NatInf::Inf => None,
        }
    }

    pub fn is_inf(self) -> bool {
        self == NatInf::Inf
    }

    pub fn add(self, o: NatInf) -> NatInf {
        match (self, o) {
            (NatInf::Fin(a), NatInf::Fin(b)) => NatInf::Fin(a + b),
            _ => NatInf::Inf,
        }
    }
}

impl fmt::Display for NatInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatInf::Fin(v) => write!(f, "{v}"),
            NatInf::Inf => write!(f, "inf"),
        }
    }
}

impl std::str::FromStr for NatInf {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "∞" | "oo" => Ok(NatInf::Inf),
            t => t
                .parse::<u64>()
                .map(NatInf::Fin)
                .map_err(|_| PolyError::BadWeight(s.to_string())),
        }
    }
}

impl Serialize for NatInf {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            NatInf::Fin(v) => s.serialize_u64(*v),
            NatInf::Inf => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for NatInf {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u64),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(v) => Ok(NatInf::Fin(v)),
            Raw::S(s) => s.parse().map_err(serde::de::Error::custom),
        }
    }
}

/// Weight vector in `(N_+ ∪ {∞})^r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<NatInf>);

impl WeightVec {
    pub fn finite(w: &[u64]) -> WeightVec {
        WeightVec(w.iter().map(|&v| NatInf::Fin(v)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// All entries when none is infinite.
    pub fn as_finite(&self) -> Option<Vec<u64>> {
        self.0.iter().map(|e| e.finite()).collect()
    }

    pub fn has_infinite(&self) -> bool {
        self.0.iter().any(|e| e.is_inf())
    }

    /// gcd of the finite entries.
    pub fn gcd(&self) -> Result<u64, PolyError> {
        let g = self
            .0
            .iter()
            .filter_map(|e| e.finite())
            .fold(0u64, |a, b| a.gcd(&b));
        if self.0.iter().all(|e| e.is_inf()) {
            Err(PolyError::AllInfinite)
        } else {
            Ok(g)
        }
    }

    pub fn is_primitive(&self) -> Result<bool, PolyError> {
        Ok(self.gcd()? == 1)
    }

    /// Divide the finite entries by their gcd.
    pub fn primitive(&self) -> Result<WeightVec, PolyError> {
        let g = self.gcd()?;
        Ok(WeightVec(
            self.0
                .iter()
                .map(|e| match e {
                    NatInf::Fin(v) if g > 0 => NatInf::Fin(v / g),
                    other => *other,
                })
                .collect(),
        ))
    }

    /// `w·a`, infinite when an infinite weight meets a positive exponent.
    pub fn dot(&self, a: &Monomial) -> NatInf {
        let mut acc: u64 = 0;
        for (w, &e) in self.0.iter().zip(a.exps()) {
            if e == 0 {
                continue;
            }
            match w {
                NatInf::Inf => return NatInf::Inf,
                NatInf::Fin(v) => acc += v * e as u64,
            }
        }
        NatInf::Fin(acc)
    }
}

impl fmt::Display for WeightVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for WeightVec {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let v: Result<Vec<NatInf>, _> = t.split(',').map(str::parse).collect();
        let v = v?;
        if v.contains(&NatInf::Fin(0)) {
            return Err(PolyError::BadWeight(s.to_string()));
        }
        Ok(WeightVec(v))
    }
}

/// Monomial orders used by the Gröbner engine.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TermOrder {
    Lex,
    DegRevLex,
    /// Weighted degree, ties broken by degrevlex.
    Weighted(Vec<u64>),
    /// The first `front` variables are eliminated: degrevlex on that block
    /// decides, then degrevlex on the rest.
    Elimination { front: usize },
    /// Order on a homogenized ring whose variable `hvar` has weight one:
    /// weighted degree, then larger `hvar` exponent, then degrevlex.
    /// Dehomogenizing a Gröbner basis under this order gives a standard
    /// basis for the local order of lowest weighted degree.
    LocalHomog { weights: Vec<u64>, hvar: usize },
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl TermOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            TermOrder::Lex => a.0.cmp(&b.0),
            TermOrder::DegRevLex => degrevlex(&a.0, &b.0),
            TermOrder::Weighted(w) => a
                .wdeg(w)
                .cmp(&b.wdeg(w))
                .then_with(|| degrevlex(&a.0, &b.0)),
            TermOrder::Elimination { front } => degrevlex(&a.0[..*front], &b.0[..*front])
                .then_with(|| degrevlex(&a.0[*front..], &b.0[*front..])),
            TermOrder::LocalHomog { weights, hvar } => {
                let h = *hvar;
                let wd = |m: &Monomial| m.wdeg(weights) + m.0[h] as u128;
                wd(a)
                    .cmp(&wd(b))
                    .then_with(|| a.0[h].cmp(&b.0[h]))
                    .then_with(|| degrevlex(&a.0, &b.0))
            }
        }
    }

    /// Local order on the dehomogenized ring induced by a [`TermOrder::LocalHomog`]
    /// order: lower weighted degree is larger, ties by degrevlex.
    pub fn local_cmp(w: &[u64], a: &Monomial, b: &Monomial) -> Ordering {
        b.wdeg(w)
            .cmp(&a.wdeg(w))
            .then_with(|| degrevlex(&a.0, &b.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_gcd() {
        let w: WeightVec = "(4,6,inf)".parse().unwrap();
        assert_eq!(w.gcd().unwrap(), 2);
        assert_eq!(w.primitive().unwrap().to_string(), "(2,3,inf)");
        let all: WeightVec = "(inf,inf)".parse().unwrap();
        assert_eq!(all.gcd(), Err(PolyError::AllInfinite));
    }

    #[test]
    fn dot_with_infinity() {
        let w: WeightVec = "(1,2,inf)".parse().unwrap();
        assert_eq!(w.dot(&Monomial(vec![1, 1, 0])), NatInf::Fin(3));
        assert_eq!(w.dot(&Monomial(vec![0, 0, 1])), NatInf::Inf);
    }

    #[test]
    fn elimination_property() {
        let ord = TermOrder::Elimination { front: 1 };
        // t * 1 beats x^5 y^9
        assert_eq!(
            ord.cmp(&Monomial(vec![1, 0, 0]), &Monomial(vec![0, 5, 9])),
            Ordering::Greater
        );
    }

    #[test]
    fn serde_inf() {
        let w: WeightVec = "(2,inf)".parse().unwrap();
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, "[2,\"inf\"]");
        assert_eq!(serde_json::from_str::<WeightVec>(&s).unwrap(), w);
    }
}
