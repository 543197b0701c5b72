//! Sparse multivariate polynomials, weights and monomial orders.

mod order;
mod parse;
mod poly;

use thiserror::Error;

pub use order::{Monomial, NatInf, TermOrder, WeightVec};
pub use poly::{normal_form, Poly, Ring};

pub(crate) use poly::merge_sorted;

use crate::scalars::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown variable '{0}'")]
    UnknownVariable(String),
    #[error("variable '{0}' declared twice")]
    DuplicateVariable(String),
    #[error("invalid variable name '{0}'")]
    BadVariable(String),
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("invalid weight '{0}'")]
    BadWeight(String),
    #[error("every weight is infinite")]
    AllInfinite,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Field;
    use proptest::prelude::*;

    fn ring3() -> Ring {
        Ring::new(&Field::rationals(), &["x", "y", "z"]).unwrap()
    }

    #[test]
    fn ord_and_initial_form() {
        let r = ring3();
        let w: WeightVec = "(1,2,inf)".parse().unwrap();
        let f = r.parse("x^2 + y + x*y + z").unwrap();
        assert_eq!(f.ord_w(&w), NatInf::Fin(2));
        assert_eq!(f.initial_form(&w), r.parse("x^2 + y").unwrap());
        assert!(r.parse("z").unwrap().initial_form(&w).is_zero());
        assert_eq!(r.zero().ord_w(&w), NatInf::Inf);
        assert_eq!(r.one().ord_w(&w), NatInf::Fin(0));
    }

    #[test]
    fn division_by_parametrization() {
        let r = Ring::new(&Field::rationals(), &["t", "x", "y"]).unwrap();
        let g = vec![r.parse("x - t^2").unwrap(), r.parse("y - t^3").unwrap()];
        let ord = TermOrder::Elimination { front: 1 };
        let t5 = r.parse("t^5").unwrap();
        assert_eq!(normal_form(&t5, &g, &ord), r.parse("x*y").unwrap());
        assert_eq!(normal_form(&r.one(), &g, &ord), r.one());
    }

    fn small_poly() -> impl Strategy<Value = Vec<(i64, [u32; 3])>> {
        prop::collection::vec((-4i64..5, [0u32..4, 0u32..4, 0u32..4]), 1..5)
    }

    fn build(r: &Ring, t: &[(i64, [u32; 3])]) -> Poly {
        let f = r.field().clone();
        r.from_terms(
            t.iter()
                .map(|(c, e)| (Monomial(e.to_vec()), f.from_i64(*c)))
                .collect(),
        )
    }

    proptest! {
        #[test]
        fn initial_forms_multiply(a in small_poly(), b in small_poly(), w in [1u64..5, 1u64..5, 1u64..5]) {
            let r = ring3();
            let (f, g) = (build(&r, &a), build(&r, &b));
            prop_assume!(!f.is_zero() && !g.is_zero());
            let w = WeightVec::finite(&w);
            let fg = f.mul(&g);
            prop_assert_eq!(fg.ord_w(&w), f.ord_w(&w).add(g.ord_w(&w)));
            prop_assert_eq!(fg.initial_form(&w), f.initial_form(&w).mul(&g.initial_form(&w)));
        }

        #[test]
        fn ord_of_sum(a in small_poly(), b in small_poly(), w in [1u64..5, 1u64..5, 1u64..5]) {
            let r = ring3();
            let (f, g) = (build(&r, &a), build(&r, &b));
            let w = WeightVec::finite(&w);
            let (of, og) = (f.ord_w(&w), g.ord_w(&w));
            let s = f.add(&g).ord_w(&w);
            prop_assert!(s >= of.min(og));
            if of != og {
                prop_assert_eq!(s, of.min(og));
            }
        }

        #[test]
        fn normal_form_idempotent(a in small_poly(), b in small_poly(), c in small_poly()) {
            let r = ring3();
            let g = vec![build(&r, &b), build(&r, &c)];
            let f = build(&r, &a);
            let n = normal_form(&f, &g, &TermOrder::Lex);
            prop_assert_eq!(normal_form(&n, &g, &TermOrder::Lex), n);
        }

        #[test]
        fn display_parse_roundtrip(a in small_poly()) {
            let r = ring3();
            let f = build(&r, &a);
            prop_assert_eq!(r.parse(&f.to_string()).unwrap(), f);
        }
    }
}
