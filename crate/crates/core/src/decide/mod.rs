//! Value semigroups of prime curves and the irreducibility decision for
//! reduced curves, with checkable certificates.

mod certificate;
mod search;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use certificate::{
    proportional, verify_certificate, CertData, CertFailure, CertKind, Certificate, ExtSpec, RingSpec, Step,
};
pub use search::{find_tropisms, is_tropism};

use crate::groebner::{GroebnerError, Ideal, Staircase};
use crate::localalg::{bw_vector, initial_ideal, intersection_number, local_std_basis, LocalError};
use crate::parametric::{
    adjoin, change_field, parametric_test_report, Adjunction, FalseKind, ParamConfig, ParamError, Verdict,
};
use crate::polyring::{Monomial, Poly, PolyError, Ring, WeightVec};
use crate::scalars::Coeff;
use crate::semigroups::{prim_generators, Semigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecideError {
    #[error("the ideal is the unit ideal of the local ring")]
    UnitIdeal,
    #[error("the local ring has dimension {0}, not 1")]
    WrongDimension(usize),
    #[error("int({0}; I) is infinite")]
    InfiniteWeight(String),
    #[error("the ideal is not prime: {0}")]
    NotPrime(String),
    #[error("no decision after {0} steps of the inner loop; the input may not be radical")]
    NonRadicalSuspected(usize),
    #[error("no resolved binomial lies in the radical of the initial ideal but outside it")]
    NoCandidate,
    #[error("no pair of tropisms found within the search bounds")]
    CertificateSearch,
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Local(#[from] LocalError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DecideConfig {
    /// Largest pivot truncation for parametric determinants.
    pub trunc_cap: usize,
    /// Bound on the inner loop per adjoined variable.
    pub iter_cap: usize,
}

impl Default for DecideConfig {
    fn default() -> Self {
        DecideConfig {
            trunc_cap: 4096,
            iter_cap: 256,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Irreducibility {
    Irreducible,
    Reducible,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub outer_iterations: usize,
    pub inner_steps: usize,
    pub parametric_tests: usize,
    /// Largest truncation used by a parametric determinant.
    pub max_precision: usize,
    /// Weights after each adjunction, starting from `bw` of the input; the
    /// last entry is the final weight vector.
    pub weights: Vec<WeightVec>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DecisionReport {
    pub verdict: Irreducibility,
    pub certificate: Certificate,
    pub stats: Stats,
}

fn independent_dimension(nvars: usize, lms: &[Monomial]) -> usize {
    let mut best = 0;
    for mask in 0u64..(1u64 << nvars) {
        let size = mask.count_ones() as usize;
        if size > best
            && lms
                .iter()
                .all(|m| m.exps().iter().enumerate().any(|(i, &e)| e > 0 && mask & (1 << i) == 0))
        {
            best = size;
        }
    }
    best
}

/// Check that the local ring has dimension one, drop variables lying in
/// the ideal, and require every `int(x_i; I)` to be finite.
pub fn assert_preconditions(ideal: &Ideal) -> Result<Ideal, DecideError> {
    let ring = ideal.ring();
    let n = ring.nvars();
    let ones = WeightVec::finite(&vec![1; n]);
    let lb = local_std_basis(ideal, &ones).map_err(|e| match e {
        LocalError::UnitIdeal => DecideError::UnitIdeal,
        e => e.into(),
    })?;
    let lms = lb.leading_monomials();
    let dim = independent_dimension(n, &lms);
    if dim != 1 {
        return Err(DecideError::WrongDimension(dim));
    }
    let stairs = Staircase::new(n, lms);
    let inside: Vec<usize> = (0..n).filter(|&i| stairs.contains(&Monomial::var(n, i))).collect();
    let reduced = if inside.is_empty() {
        ideal.clone()
    } else {
        let keep: Vec<usize> = (0..n).filter(|i| !inside.contains(i)).collect();
        let small = Ring::from_names(ring.field(), keep.iter().map(|&i| ring.vars()[i].clone()).collect())?;
        let mut map = vec![0; n];
        for (k, &i) in keep.iter().enumerate() {
            map[i] = k;
        }
        let gens: Vec<Poly> = ideal
            .generators()
            .iter()
            .map(|g| g.zero_vars(&inside))
            .filter(|g| !g.is_zero())
            .map(|g| g.map_vars(&small, &map))
            .collect();
        Ideal::new(&small, gens)?
    };
    finite_bw(&reduced)?;
    Ok(reduced)
}

fn finite_bw(ideal: &Ideal) -> Result<Vec<u64>, DecideError> {
    let bw = bw_vector(ideal)?;
    match bw.0.iter().position(|e| e.is_inf()) {
        Some(i) => Err(DecideError::InfiniteWeight(ideal.ring().vars()[i].clone())),
        None => Ok(bw.as_finite().unwrap()),
    }
}

/// A monomial of `in_w(I)`, preferring initial forms of generators and
/// then of standard basis elements.
pub fn monomial_witness(ideal: &Ideal, w: &WeightVec) -> Result<Option<Monomial>, DecideError> {
    let lb = local_std_basis(ideal, w)?;
    let direct = ideal
        .generators()
        .iter()
        .chain(lb.elements())
        .map(|g| g.initial_form(w))
        .find(|g| g.is_monomial());
    if let Some(m) = direct {
        return Ok(Some(m.terms()[0].0.clone()));
    }
    Ok(lb.initial_ideal().contains_monomial(Some(w))?)
}

fn gcd_of(w: &[u64]) -> u64 {
    w.iter().fold(0u64, |a, b| a.gcd(b))
}

enum Outcome {
    Prime,
    Monomial(Monomial),
    /// The adjunction and the second member of the pencil that split.
    Split(Box<Adjunction>, Poly),
}

struct Run {
    ideal: Ideal,
    weights: Vec<u64>,
    transcript: Vec<(String, Poly)>,
    stats: Stats,
    cfg: DecideConfig,
}

impl Run {
    fn new(ideal: &Ideal, cfg: &DecideConfig) -> Result<Run, DecideError> {
        let weights = finite_bw(ideal)?;
        Ok(Run {
            ideal: ideal.clone(),
            stats: Stats {
                weights: vec![WeightVec::finite(&weights)],
                ..Stats::default()
            },
            weights,
            transcript: Vec::new(),
            cfg: *cfg,
        })
    }

    fn initial_monomial(&self) -> Result<Option<Monomial>, DecideError> {
        monomial_witness(&self.ideal, &WeightVec::finite(&self.weights))
    }

    fn test(&mut self, f: &Poly, g: &Poly) -> Result<Verdict, ParamError> {
        self.stats.parametric_tests += 1;
        let pcfg = ParamConfig {
            trunc_cap: self.cfg.trunc_cap,
        };
        let (v, po) = parametric_test_report(f, g, &self.ideal, &pcfg)?;
        self.stats.max_precision = self.stats.max_precision.max(po.determinant.prec());
        Ok(v)
    }

    /// Resolve the binomials of `Prim(w)` by increasing `w`-degree until one
    /// lies in `√in_w(I)` but not in `in_w(I)`.
    fn pick_binomial(&mut self) -> Result<Result<Poly, Outcome>, DecideError> {
        let ring = self.ideal.ring().clone();
        let w = WeightVec::finite(&self.weights);
        let mut prim = prim_generators(&ring, &w)?;
        prim.sort_by_key(|b| b.terms()[0].0.wdeg(&self.weights));
        let init = initial_ideal(&self.ideal, &w)?;
        for b in &prim {
            let xa = ring.monomial(b.terms()[0].0.clone());
            let xb = ring.monomial(b.terms()[1].0.clone());
            let beta: Coeff = match self.test(&xa, &xb) {
                Ok(Verdict::False(adj)) => return Ok(Err(Outcome::Split(Box::new(adj), xb))),
                Ok(Verdict::NotFalse(beta)) => beta,
                Err(ParamError::ContextViolation { beta, .. }) => beta,
                Err(e) => return Err(e.into()),
            };
            let h = xa.sub(&xb.scale(&beta));
            if !init.contains(&h) && init.contains_radical(&h) {
                return Ok(Ok(h));
            }
        }
        Err(DecideError::NoCandidate)
    }

    /// Raise `gcd(w)` to one by adjoining elements whose values leave the
    /// current semigroup, stopping early at a witness of reducibility.
    fn drive(&mut self) -> Result<Outcome, DecideError> {
        if let Some(m) = self.initial_monomial()? {
            return Ok(Outcome::Monomial(m));
        }
        while gcd_of(&self.weights) != 1 {
            self.stats.outer_iterations += 1;
            let mut f = match self.pick_binomial()? {
                Ok(f) => f,
                Err(out) => return Ok(out),
            };
            let ring = self.ideal.ring().clone();
            let semi = Semigroup::new(&WeightVec::finite(&self.weights))?;
            let mut steps = 0;
            let n = loop {
                let value = intersection_number(&f, &self.ideal)?;
                let Some(v) = value.finite() else {
                    if self.ideal.contains_radical(&f) {
                        return Err(DecideError::NonRadicalSuspected(steps));
                    }
                    let (j, rels) = adjoin(&self.ideal, std::slice::from_ref(&f));
                    let adj = Adjunction {
                        kind: FalseKind::InfiniteRoot,
                        ideal: j,
                        relations: rels,
                        betas: Vec::new(),
                    };
                    return Ok(Outcome::Split(Box::new(adj), f));
                };
                let Some(c) = semi.membership(v) else {
                    break v;
                };
                steps += 1;
                self.stats.inner_steps += 1;
                if steps > self.cfg.iter_cap {
                    return Err(DecideError::NonRadicalSuspected(self.cfg.iter_cap));
                }
                let xc = ring.monomial(Monomial(c.iter().map(|&e| e as u32).collect()));
                match self.test(&f, &xc)? {
                    Verdict::False(adj) => return Ok(Outcome::Split(Box::new(adj), xc)),
                    Verdict::NotFalse(beta) => f = f.sub(&xc.scale(&beta)),
                }
            };
            let (j, rels) = adjoin(&self.ideal, std::slice::from_ref(&f));
            self.transcript.extend(rels);
            self.ideal = j;
            self.weights.push(n);
            self.stats.weights.push(WeightVec::finite(&self.weights));
            if let Some(m) = self.initial_monomial()? {
                return Ok(Outcome::Monomial(m));
            }
        }
        Ok(Outcome::Prime)
    }

    fn certificate(&self, ideal: &Ideal, transcript: &[(String, Poly)], kind: CertKind, data: CertData) -> Certificate {
        Certificate {
            kind,
            ring: RingSpec::from_ring(ideal.ring()),
            generators: ideal.generators().iter().map(|g| g.to_string()).collect(),
            data,
            transcript: transcript
                .iter()
                .map(|(v, p)| Step {
                    var: v.clone(),
                    poly: p.to_string(),
                })
                .collect(),
        }
    }
}

pub type ValueSemigroup = (Ideal, WeightVec, Vec<(String, Poly)>);

/// The value semigroup of a prime: the adjoined ideal, its `bw` (whose
/// entries generate the semigroup) and the adjoined relations.
pub fn value_semigroup(p: &Ideal) -> Result<ValueSemigroup, DecideError> {
    value_semigroup_with(p, &DecideConfig::default())
}

pub fn value_semigroup_with(p: &Ideal, cfg: &DecideConfig) -> Result<ValueSemigroup, DecideError> {
    let mut run = Run::new(p, cfg)?;
    match run.drive()? {
        Outcome::Prime => Ok((run.ideal, WeightVec::finite(&run.weights), run.transcript)),
        Outcome::Monomial(m) => Err(DecideError::NotPrime(format!(
            "the initial ideal for {} contains {}",
            WeightVec::finite(&run.weights),
            run.ideal.ring().monomial(m)
        ))),
        Outcome::Split(adj, _) => Err(DecideError::NotPrime(format!(
            "the pencil splits after adjoining {}",
            adj.relations
                .iter()
                .map(|(v, p)| format!("{v} = {p}"))
                .collect::<Vec<_>>()
                .join(", ")
        ))),
    }
}

pub fn decide_irreducible(ideal: &Ideal) -> Result<DecisionReport, DecideError> {
    decide_irreducible_with(ideal, &DecideConfig::default())
}

/// Decide whether `k[[x]]/I` is a domain, for a reduced ideal of dimension
/// one with all `int(x_i; I)` finite.
pub fn decide_irreducible_with(ideal: &Ideal, cfg: &DecideConfig) -> Result<DecisionReport, DecideError> {
    let mut run = Run::new(ideal, cfg)?;
    let outcome = run.drive()?;
    let (verdict, certificate) = match outcome {
        Outcome::Prime => {
            let data = CertData {
                tropism: Some(WeightVec::finite(&run.weights)),
                ..CertData::default()
            };
            let c = run.certificate(&run.ideal, &run.transcript, CertKind::PrimeTropism, data);
            (Irreducibility::Irreducible, c)
        }
        Outcome::Monomial(m) => {
            let data = CertData {
                weights: Some(WeightVec::finite(&run.weights)),
                witness: Some(run.ideal.ring().monomial(m).to_string()),
                ..CertData::default()
            };
            let c = run.certificate(&run.ideal, &run.transcript, CertKind::MonomialWitness, data);
            (Irreducibility::Reducible, c)
        }
        Outcome::Split(adj, g) => {
            let rays = find_tropisms(&adj, &run.weights, &g)?;
            let field = adj.ideal.ring().field();
            let mut transcript: Vec<(String, Poly)> = run
                .transcript
                .iter()
                .map(|(v, p)| {
                    let r = Ring::from_names(field, p.ring().vars().to_vec()).unwrap();
                    (v.clone(), change_field(p, &r))
                })
                .collect();
            transcript.extend(adj.relations.iter().cloned());
            let data = CertData {
                rays: Some(rays),
                ..CertData::default()
            };
            let c = run.certificate(&adj.ideal, &transcript, CertKind::TwoTropisms, data);
            (Irreducibility::Reducible, c)
        }
    };
    Ok(DecisionReport {
        verdict,
        certificate,
        stats: run.stats,
    })
}

#[cfg(test)]
mod tests;
