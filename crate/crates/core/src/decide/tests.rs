use std::time::Instant;

use super::*;
use crate::scalars::Field;

fn ideal(field: &Field, vars: &[&str], gens: &[&str]) -> Ideal {
    let r = Ring::new(field, vars).unwrap();
    Ideal::parse(&r, gens).unwrap()
}

fn q() -> Field {
    Field::rationals()
}

fn rays(r: &DecisionReport) -> Vec<String> {
    r.certificate.data.rays.as_ref().unwrap().iter().map(|w| w.to_string()).collect()
}

#[test]
fn preconditions() {
    let cusp = ideal(&q(), &["x", "y"], &["y^2 - x^3"]);
    assert_eq!(assert_preconditions(&cusp).unwrap().ring().nvars(), 2);
    let with_x = ideal(&q(), &["x", "y", "z"], &["x", "y^2 - z^3"]);
    let red = assert_preconditions(&with_x).unwrap();
    assert_eq!(red.ring().vars(), ["y", "z"]);
    assert_eq!(red.generators()[0], red.ring().parse("y^2 - z^3").unwrap());
    let axes = ideal(&q(), &["x", "y"], &["x*y"]);
    assert!(matches!(assert_preconditions(&axes), Err(DecideError::InfiniteWeight(_))));
    let surface = ideal(&q(), &["x", "y", "z"], &["x*y - z^2"]);
    assert_eq!(assert_preconditions(&surface).unwrap_err(), DecideError::WrongDimension(2));
}

#[test]
fn cusp_is_irreducible_at_once() {
    let r = decide_irreducible(&ideal(&q(), &["x", "y"], &["y^2 - x^3"])).unwrap();
    assert_eq!(r.verdict, Irreducibility::Irreducible);
    assert_eq!(r.certificate.data.tropism.as_ref().unwrap().to_string(), "(2,3)");
    assert_eq!(r.stats.parametric_tests, 0);
    verify_certificate(&r.certificate).unwrap();
}

#[test]
fn kuo_over_rationals_splits() {
    let t = Instant::now();
    let r = decide_irreducible(&ideal(&q(), &["x", "y"], &["(y^2 - x^3)^2 - x^7"])).unwrap();
    assert_eq!(r.verdict, Irreducibility::Reducible);
    assert_eq!(r.certificate.kind, CertKind::TwoTropisms);
    let mut got = rays(&r);
    got.sort();
    assert_eq!(got, ["(2,3,7,8)", "(2,3,8,7)"]);
    verify_certificate(&r.certificate).unwrap();
    eprintln!("kuo/Q {:?}", t.elapsed());
}

#[test]
fn kuo_over_f2_is_prime() {
    let f2 = Field::prime(2).unwrap();
    let r = decide_irreducible(&ideal(&f2, &["x", "y"], &["(y^2 - x^3)^2 - x^7"])).unwrap();
    assert_eq!(r.verdict, Irreducibility::Irreducible);
    let w = r.certificate.data.tropism.clone().unwrap();
    assert_eq!(w.to_string(), "(4,6,15)");
    let j = r.certificate.ideal().unwrap();
    let init = initial_ideal(&j, &w).unwrap();
    let want = Ideal::parse(j.ring(), &["x^3 - y^2", "y^5 - z^2"]).unwrap();
    assert!(init.contains_ideal(&want) && want.contains_ideal(&init));
    verify_certificate(&r.certificate).unwrap();
}

#[test]
fn determinantal_curve_has_a_monomial_witness() {
    let i = ideal(
        &q(),
        &["x", "y", "z"],
        &["(x^3 + y^2)*x - y*z^2", "y^2 - x*z", "z^3 - (x^3 + y^2)*y"],
    );
    let r = decide_irreducible(&i).unwrap();
    assert_eq!(r.verdict, Irreducibility::Reducible);
    assert_eq!(r.certificate.data.weights.as_ref().unwrap().to_string(), "(5,6,7)");
    assert_eq!(r.certificate.data.witness.as_deref(), Some("x*y^2"));
    verify_certificate(&r.certificate).unwrap();
}

#[test]
fn space_curve_splits() {
    let t = Instant::now();
    let i = ideal(&q(), &["x", "y", "z"], &["x^3 - y^2", "(z^2 - x*y)^2 - x^2*y*z^2"]);
    let r = decide_irreducible(&i).unwrap();
    let mut got = rays(&r);
    got.sort();
    assert_eq!(got, ["(4,6,5,12,14)", "(4,6,5,14,12)"]);
    verify_certificate(&r.certificate).unwrap();
    eprintln!("space {:?}", t.elapsed());
}

#[test]
fn value_semigroups() {
    let cusp = ideal(&q(), &["x", "y"], &["y^2 - x^3"]);
    assert_eq!(value_semigroup(&cusp).unwrap().1.to_string(), "(2,3)");
    let p = ideal(&q(), &["x", "y"], &["(y^2 - x^3)^2 - x^2*y^3"]);
    let (j, w, steps) = value_semigroup(&p).unwrap();
    assert_eq!(w.to_string(), "(4,6,13)");
    assert_eq!(steps.len(), 1);
    assert_eq!(bw_vector(&j).unwrap(), w);
    let p = ideal(&q(), &["x", "y", "z"], &["x^3 - y^2", "(z^2 - x*y)^2 - x*y*z^3"]);
    let (j, w, steps) = value_semigroup(&p).unwrap();
    assert_eq!(w.to_string(), "(8,12,10,25)");
    assert_eq!(steps.len(), 1);
    let init = initial_ideal(&j, &w).unwrap();
    let want = Ideal::parse(j.ring(), &["x^3 - y^2", "u^2 - x*y*z^3", "z^2 - x*y"]).unwrap();
    assert!(init.contains_ideal(&want) && want.contains_ideal(&init));
}

#[test]
fn value_semigroup_rejects_a_reducible_curve() {
    let kuo = ideal(&q(), &["x", "y"], &["(y^2 - x^3)^2 - x^7"]);
    assert!(matches!(value_semigroup(&kuo), Err(DecideError::NotPrime(_))));
}

#[test]
fn two_component_rays_sum_to_bw() {
    let i = ideal(&q(), &["x", "y", "z"], &["x^2 + y^3 + z^3", "x*y + y*z + z*x"]);
    assert_eq!(bw_vector(&i).unwrap().to_string(), "(6,5,5)");
    let r = decide_irreducible(&i).unwrap();
    assert_eq!(r.verdict, Irreducibility::Reducible);
    verify_certificate(&r.certificate).unwrap();
    for w in ["(3,3,2)", "(3,2,3)"] {
        assert!(is_tropism(&i, &w.parse().unwrap()).unwrap());
    }
    assert!(!is_tropism(&i, &"(6,5,5)".parse().unwrap()).unwrap());
}

#[test]
fn tampered_certificates_fail() {
    let r = decide_irreducible(&ideal(&q(), &["x", "y"], &["(y^2 - x^3)^2 - x^7"])).unwrap();
    let mut scaled = r.certificate.clone();
    let rs = scaled.data.rays.as_mut().unwrap();
    rs[1] = WeightVec(rs[0].0.iter().map(|e| e.add(*e)).collect());
    assert!(matches!(verify_certificate(&scaled), Err(CertFailure::RaysProportional(..))));
    let mut doubled = r.certificate.clone();
    let rs = doubled.data.rays.as_mut().unwrap();
    rs[0] = WeightVec(rs[0].0.iter().map(|e| e.add(*e)).collect());
    assert!(matches!(verify_certificate(&doubled), Err(CertFailure::NotPrimitive(_))));
    let mut dropped = r.certificate.clone();
    dropped.transcript.pop();
    assert!(matches!(verify_certificate(&dropped), Err(CertFailure::TranscriptGap(_))));
    let json = serde_json::to_string(&r.certificate).unwrap();
    let back: Certificate = serde_json::from_str(&json).unwrap();
    verify_certificate(&back).unwrap();
}
