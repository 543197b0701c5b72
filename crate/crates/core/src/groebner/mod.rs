//! Gröbner bases and ideal-theoretic predicates.

mod buchberger;
mod ideal;
mod staircase;

use thiserror::Error;

pub use buchberger::{groebner_basis, Tracked};
pub use ideal::Ideal;
pub use staircase::Staircase;


use crate::polyring::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroebnerError {
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("generators belong to different rings")]
    RingMismatch,
    #[error("weight vector has an infinite entry")]
    InfiniteWeight,
    #[error("generator {0} is not homogeneous for the weight")]
    NotHomogeneous(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::{Monomial, NatInf, Poly, Ring, TermOrder, WeightVec};
    use crate::scalars::Field;
    use proptest::prelude::*;

    fn q(vars: &[&str]) -> Ring {
        Ring::new(&Field::rationals(), vars).unwrap()
    }

    fn spoly_reduces(gb: &[Poly], ord: &TermOrder) -> bool {
        for i in 0..gb.len() {
            for j in i + 1..gb.len() {
                let (ma, ca) = gb[i].leading_term(ord).unwrap();
                let (mb, cb) = gb[j].leading_term(ord).unwrap();
                let l = ma.lcm(&mb);
                let f = gb[i].field();
                let s = gb[i]
                    .mul_term(&f.inv(&ca).unwrap(), &ma.quotient(&l))
                    .sub(&gb[j].mul_term(&f.inv(&cb).unwrap(), &mb.quotient(&l)));
                if !crate::polyring::normal_form(&s, gb, ord).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn elimination_gives_toric_ideal() {
        let r = q(&["t", "x", "y"]);
        let i = Ideal::parse(&r, &["x - t^2", "y - t^3"]).unwrap();
        let ord = TermOrder::Elimination { front: 1 };
        let gb = i.groebner(&ord);
        let tfree: Vec<String> = gb
            .iter()
            .filter(|g| g.degree_in(0) == 0)
            .map(|g| g.to_string())
            .collect();
        assert_eq!(tfree, vec!["x^3 - y^2"]);
        assert!(spoly_reduces(&gb, &ord));
    }

    #[test]
    fn unit_and_monomial_inputs() {
        let r = q(&["x", "y"]);
        let one = Ideal::parse(&r, &["1", "x"]).unwrap();
        assert_eq!(one.groebner(&TermOrder::Lex).as_slice(), &[r.one()]);
        let mono = Ideal::parse(&r, &["x^2*y", "x*y", "y^3"]).unwrap();
        let gb: Vec<String> = mono.groebner(&TermOrder::DegRevLex).iter().map(|g| g.to_string()).collect();
        assert_eq!(gb, vec!["x*y", "y^3"]);
    }

    #[test]
    fn membership() {
        let r = q(&["x", "y"]);
        let i = Ideal::parse(&r, &["x^3 - y^2"]).unwrap();
        assert!(i.contains(&r.parse("x^3 - y^2").unwrap()));
        assert!(!i.contains(&r.parse("x").unwrap()));
        assert!(i.contains(&r.zero()));
    }

    #[test]
    fn radical_membership() {
        let r = q(&["x", "y", "z"]);
        let i = Ideal::parse(&r, &["x^3 - y^2", "(z^2 - x*y)^2"]).unwrap();
        assert!(i.contains_radical(&r.parse("z^2 - x*y").unwrap()));
        assert!(!i.contains(&r.parse("z^2 - x*y").unwrap()));
        let r2 = q(&["x", "y"]);
        assert!(Ideal::parse(&r2, &["x^2"]).unwrap().contains_radical(&r2.parse("x").unwrap()));
        assert!(!Ideal::parse(&r2, &["y"]).unwrap().contains_radical(&r2.parse("x").unwrap()));
    }

    #[test]
    fn saturation_removes_a_component() {
        let r = q(&["x", "y"]);
        let i = Ideal::parse(&r, &["x*y*(y - x^2)"]).unwrap();
        let s = i.saturation(&r.parse("y").unwrap());
        let want = Ideal::parse(&r, &["x*(y - x^2)"]).unwrap();
        assert!(s.contains_ideal(&want) && want.contains_ideal(&s));
    }

    #[test]
    fn monomial_detection() {
        let r = q(&["x", "y"]);
        let cusp = Ideal::parse(&r, &["x^3 - y^2"]).unwrap();
        assert_eq!(cusp.contains_monomial(Some(&WeightVec::finite(&[2, 3]))).unwrap(), None);
        let lin = Ideal::parse(&r, &["x + y", "x - y"]).unwrap();
        assert_eq!(lin.contains_monomial(None).unwrap(), Some(Monomial(vec![1, 0])));
        let bad = lin.contains_monomial(Some(&WeightVec::finite(&[1, 2])));
        assert!(matches!(bad, Err(GroebnerError::NotHomogeneous(_))));
    }

    #[test]
    fn colengths() {
        let r = q(&["x", "y"]);
        assert_eq!(Ideal::parse(&r, &["y^4", "x"]).unwrap().colength(), NatInf::Fin(4));
        assert_eq!(Ideal::parse(&r, &["x"]).unwrap().colength(), NatInf::Inf);
        let st = Staircase::new(2, vec![Monomial(vec![3, 0]), Monomial(vec![1, 2]), Monomial(vec![0, 4])]);
        assert_eq!(st.colength(), NatInf::Fin(8));
    }

    #[test]
    fn dimensions() {
        let r = q(&["x", "y"]);
        assert_eq!(Ideal::parse(&r, &["x^3 - y^2"]).unwrap().krull_dimension().unwrap(), 1);
        assert_eq!(Ideal::parse(&r, &["x", "y"]).unwrap().krull_dimension().unwrap(), 0);
        assert_eq!(Ideal::parse(&r, &["1"]).unwrap().krull_dimension(), Err(GroebnerError::UnitIdeal));
        let r3 = q(&["x", "y", "z"]);
        assert_eq!(Ideal::parse(&r3, &["x^3 - y^2", "y^5 - z^2"]).unwrap().krull_dimension().unwrap(), 1);
    }

    fn small_poly() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
        prop::collection::vec((-3i64..4, [0u32..3, 0u32..3, 0u32..3]), 1..4)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn buchberger_criterion(a in small_poly(), b in small_poly(), c in small_poly()) {
            let r = q(&["x", "y", "z"]);
            let f = r.field().clone();
            let mk = |t: &Vec<(i64, [u32; 3])>| r.from_terms(t.iter().map(|(c, e)| (Monomial(e.to_vec()), f.from_i64(*c))).collect());
            let i = Ideal::new(&r, vec![mk(&a), mk(&b), mk(&c)]).unwrap();
            for ord in [TermOrder::DegRevLex, TermOrder::Lex, TermOrder::Weighted(vec![1, 2, 3])] {
                let gb = i.groebner(&ord);
                prop_assert!(spoly_reduces(&gb, &ord));
                for g in i.generators() {
                    prop_assert!(crate::polyring::normal_form(g, &gb, &ord).is_zero());
                }
            }
        }
    }
}
