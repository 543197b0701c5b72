//! Serializable certificates and their independent verification.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::search::is_tropism;
use crate::groebner::Ideal;
use crate::localalg::{bw_vector, initial_ideal, LocalError};
use crate::polyring::{NatInf, Poly, PolyError, Ring, WeightVec};
use crate::scalars::{Field, UniPoly};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtSpec {
    pub name: String,
    /// Monic irreducible polynomial in `name` over the prime field.
    pub modulus: String,
}

/// Text description of a polynomial ring, as stored in certificates and
/// ideal files.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    pub char: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ext: Option<ExtSpec>,
    pub vars: Vec<String>,
}

impl RingSpec {
    pub fn from_ring(ring: &Ring) -> RingSpec {
        let f = ring.field();
        let ext = f.modulus().map(|m| {
            let name = f.generator_name().unwrap().to_string();
            ExtSpec {
                modulus: m.display(&f.prime_field(), &name),
                name,
            }
        });
        RingSpec {
            char: f.characteristic(),
            ext,
            vars: ring.vars().to_vec(),
        }
    }

    pub fn field(&self) -> Result<Field, PolyError> {
        let base = Field::with_characteristic(self.char)?;
        let Some(ext) = &self.ext else {
            return Ok(base);
        };
        let r = Ring::new(&base, &[ext.name.as_str()])?;
        let p = r.parse(&ext.modulus)?;
        let deg = p.total_degree().unwrap_or(0) as usize;
        let mut coeffs = vec![base.zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exps()[0] as usize] = c.clone();
        }
        Ok(Field::extension(&base, UniPoly::new(coeffs), &ext.name)?)
    }

    pub fn build(&self) -> Result<Ring, PolyError> {
        Ring::from_names(&self.field()?, self.vars.clone())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertKind {
    PrimeTropism,
    MonomialWitness,
    TwoTropisms,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertData {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tropism: Option<WeightVec>,
    /// `bw` of the ideal, for the monomial witness.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<WeightVec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rays: Option<Vec<WeightVec>>,
}

/// Adjoined variable `var` with relation `var − poly`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub var: String,
    pub poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: CertKind,
    pub ring: RingSpec,
    pub generators: Vec<String>,
    pub data: CertData,
    pub transcript: Vec<Step>,
}

impl Certificate {
    pub fn ideal(&self) -> Result<Ideal, PolyError> {
        let ring = self.ring.build()?;
        let gens = self
            .generators
            .iter()
            .map(|g| ring.parse(g))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(&ring, gens).map_err(|_| PolyError::RingMismatch)
    }
}

/// Why a certificate was rejected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertFailure {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("transcript does not account for variable {0}")]
    TranscriptGap(String),
    #[error("transcript entry {var} = {poly} is not a relation of the ideal")]
    TranscriptMismatch { var: String, poly: String },
    #[error("recorded weights {recorded} differ from bw = {computed}")]
    WeightMismatch { recorded: WeightVec, computed: WeightVec },
    #[error("tropism {0} is not primitive")]
    NotPrimitive(WeightVec),
    #[error("the initial ideal for {0} contains a monomial")]
    MonomialInInitial(WeightVec),
    #[error("witness {0} is not a monomial of the initial ideal")]
    BadWitness(String),
    #[error("rays {0} and {1} are proportional")]
    RaysProportional(WeightVec, WeightVec),
    #[error("expected two rays, found {0}")]
    RayCount(usize),
}

fn local(e: LocalError) -> CertFailure {
    CertFailure::Malformed(e.to_string())
}

/// Same direction: infinite in the same places, finite parts proportional.
pub fn proportional(a: &WeightVec, b: &WeightVec) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let pairs: Vec<(u64, u64)> = a
        .0
        .iter()
        .zip(&b.0)
        .filter_map(|(x, y)| match (x, y) {
            (NatInf::Fin(x), NatInf::Fin(y)) => Some((*x, *y)),
            _ => None,
        })
        .collect();
    let same_inf = a.0.iter().zip(&b.0).all(|(x, y)| x.is_inf() == y.is_inf());
    same_inf
        && pairs.first().is_none_or(|&(x0, y0)| {
            pairs
                .iter()
                .all(|&(x, y)| x as u128 * y0 as u128 == y as u128 * x0 as u128)
        })
}

fn replay(c: &Certificate, ideal: &Ideal) -> Result<(), CertFailure> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let t = c.transcript.len();
    if t > n {
        return Err(CertFailure::Malformed("transcript longer than the variable list".into()));
    }
    let base = n - t;
    for (k, name) in ring.vars()[base..].iter().enumerate() {
        if c.transcript[k].var != *name {
            return Err(CertFailure::TranscriptGap(name.clone()));
        }
    }
    for (k, step) in c.transcript.iter().enumerate() {
        let bad = || CertFailure::TranscriptMismatch {
            var: step.var.clone(),
            poly: step.poly.clone(),
        };
        let p = ring.parse(&step.poly).map_err(|_| bad())?;
        if p.support_vars().iter().any(|&i| i >= base + k) {
            return Err(bad());
        }
        let rel = ring.var(base + k).sub(&p);
        if !ideal.generators().contains(&rel) && !ideal.contains(&rel) {
            return Err(bad());
        }
    }
    Ok(())
}

fn check_tropism(ideal: &Ideal, w: &WeightVec) -> Result<(), CertFailure> {
    if w.len() != ideal.ring().nvars() {
        return Err(CertFailure::Malformed(format!("weight {w} has the wrong length")));
    }
    if w.is_primitive() != Ok(true) {
        return Err(CertFailure::NotPrimitive(w.clone()));
    }
    if !is_tropism(ideal, w).map_err(|e| CertFailure::Malformed(e.to_string()))? {
        return Err(CertFailure::MonomialInInitial(w.clone()));
    }
    Ok(())
}

/// Check a certificate without rerunning the decision: replay the
/// transcript, then the claim for its kind.
pub fn verify_certificate(c: &Certificate) -> Result<(), CertFailure> {
    let ideal = c.ideal().map_err(|e| CertFailure::Malformed(e.to_string()))?;
    replay(c, &ideal)?;
    match c.kind {
        CertKind::PrimeTropism => {
            let w = c
                .data
                .tropism
                .as_ref()
                .ok_or_else(|| CertFailure::Malformed("missing tropism".into()))?;
            let bw = bw_vector(&ideal).map_err(local)?;
            if bw != *w {
                return Err(CertFailure::WeightMismatch {
                    recorded: w.clone(),
                    computed: bw,
                });
            }
            check_tropism(&ideal, w)
        }
        CertKind::MonomialWitness => {
            let w = c
                .data
                .weights
                .as_ref()
                .ok_or_else(|| CertFailure::Malformed("missing weights".into()))?;
            let bw = bw_vector(&ideal).map_err(local)?;
            if bw != *w {
                return Err(CertFailure::WeightMismatch {
                    recorded: w.clone(),
                    computed: bw,
                });
            }
            let text = c
                .data
                .witness
                .as_ref()
                .ok_or_else(|| CertFailure::Malformed("missing witness".into()))?;
            let m: Poly = ideal
                .ring()
                .parse(text)
                .map_err(|_| CertFailure::BadWitness(text.clone()))?;
            if !m.is_monomial() {
                return Err(CertFailure::BadWitness(text.clone()));
            }
            let init = initial_ideal(&ideal, w).map_err(local)?;
            if !init.contains(&m) {
                return Err(CertFailure::BadWitness(text.clone()));
            }
            Ok(())
        }
        CertKind::TwoTropisms => {
            let rays = c
                .data
                .rays
                .as_ref()
                .ok_or_else(|| CertFailure::Malformed("missing rays".into()))?;
            if rays.len() != 2 {
                return Err(CertFailure::RayCount(rays.len()));
            }
            if proportional(&rays[0], &rays[1]) {
                return Err(CertFailure::RaysProportional(rays[0].clone(), rays[1].clone()));
            }
            for r in rays {
                check_tropism(&ideal, r)?;
            }
            Ok(())
        }
    }
}
