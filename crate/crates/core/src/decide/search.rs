//! Tropism checks and the search for two branch rays after a split.

use num_integer::Integer;

use super::certificate::proportional;
use super::DecideError;
use crate::groebner::Ideal;
use crate::localalg::{bw_vector, initial_ideal, intersection_number, LocalError};
use crate::parametric::{Adjunction, FalseKind};
use crate::polyring::{Monomial, NatInf, Poly, Ring, WeightVec};

/// `in_w(I)` contains no monomial. Variables of infinite weight are set to
/// zero and the check runs on the remaining ones.
pub fn is_tropism(ideal: &Ideal, w: &WeightVec) -> Result<bool, DecideError> {
    let ring = ideal.ring();
    let inf: Vec<usize> = (0..w.len()).filter(|&i| w.0[i].is_inf()).collect();
    if inf.len() == w.len() {
        return Ok(false);
    }
    if !inf.is_empty() {
        let keep: Vec<usize> = (0..w.len()).filter(|i| !inf.contains(i)).collect();
        let small = Ring::from_names(ring.field(), keep.iter().map(|&i| ring.vars()[i].clone()).collect())?;
        let mut map = vec![0; w.len()];
        for (k, &i) in keep.iter().enumerate() {
            map[i] = k;
        }
        let gens: Vec<Poly> = ideal
            .generators()
            .iter()
            .map(|g| g.zero_vars(&inf))
            .filter(|g| !g.is_zero())
            .map(|g| g.map_vars(&small, &map))
            .collect();
        let restricted = Ideal::new(&small, gens)?;
        let wf = WeightVec(keep.iter().map(|&i| w.0[i]).collect());
        return is_tropism(&restricted, &wf);
    }
    if ideal.generators().iter().any(|g| g.initial_form(w).is_monomial()) {
        return Ok(false);
    }
    let init = match initial_ideal(ideal, w) {
        Ok(i) => i,
        Err(LocalError::UnitIdeal) => return Ok(false),
        Err(e) => return Err(e.into()),
    };
    let all = ring.monomial(Monomial(vec![1; ring.nvars()]));
    Ok(!init.contains_radical(&all))
}

fn ord(p: &Poly, w: &WeightVec) -> u64 {
    p.ord_w(w).finite().unwrap_or(0)
}

/// Two non-proportional tropisms of the split ideal.
///
/// Every branch is assumed to restrict to a multiple `k·w0` of the
/// primitive current weights on the old variables. On such a branch an
/// adjoined `h` has value at least `k·max(ord(h), ord(g))` (`g` the second
/// member of the pencil) and at most its total value less the least the
/// other branches can take; an `h` of infinite total value may also vanish.
pub fn find_tropisms(adj: &Adjunction, weights: &[u64], g: &Poly) -> Result<Vec<WeightVec>, DecideError> {
    let ideal = &adj.ideal;
    let n_old = weights.len();
    let gcd = weights.iter().fold(0u64, |a, &b| a.gcd(&b));
    let w0 = WeightVec::finite(&weights.iter().map(|w| w / gcd).collect::<Vec<_>>());
    let bw = bw_vector(ideal)?;
    let old_ideal = || -> Result<Ideal, DecideError> {
        let m = adj.relations.len();
        let gens = ideal.generators();
        let ring = adj.relations[0].1.ring().clone();
        let back: Vec<usize> = (0..n_old).collect();
        Ok(Ideal::new(
            &ring,
            gens[..gens.len() - m].iter().map(|p| p.map_vars(&ring, &back)).collect(),
        )?)
    };
    let g_ord = ord(g, &w0);
    let mut candidates: Vec<WeightVec> = Vec::new();
    for k in 1..=gcd {
        let mut ranges: Vec<Vec<NatInf>> = Vec::new();
        for (i, (_, h)) in adj.relations.iter().enumerate() {
            let unit = match adj.kind {
                FalseKind::GenericDrop => ord(h, &w0),
                _ => ord(h, &w0).max(g_ord),
            };
            let lo = k * unit;
            let mut vals: Vec<NatInf> = Vec::new();
            match bw.0[n_old + i] {
                NatInf::Fin(total) => {
                    let hi = total.saturating_sub((gcd - k) * unit);
                    vals.extend((lo..=hi).map(NatInf::Fin));
                }
                NatInf::Inf => {
                    let rest = old_ideal()?.saturation(h);
                    let hi = match intersection_number(h, &rest) {
                        Ok(NatInf::Fin(v)) => v,
                        _ => lo + weights.iter().sum::<u64>(),
                    };
                    vals.extend((lo..=hi).map(NatInf::Fin));
                    vals.push(NatInf::Inf);
                }
            }
            ranges.push(vals);
        }
        let mut combos: Vec<Vec<NatInf>> = vec![w0.0.iter().map(|e| NatInf::Fin(e.finite().unwrap() * k)).collect()];
        for vals in &ranges {
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    vals.iter().map(move |v| {
                        let mut c = c.clone();
                        c.push(*v);
                        c
                    })
                })
                .collect();
        }
        for c in combos {
            let p = WeightVec(c).primitive()?;
            if !candidates.contains(&p) {
                candidates.push(p);
            }
        }
    }
    candidates.sort_by_key(|c| {
        let infs = c.0.iter().filter(|e| e.is_inf()).count();
        let sum: u64 = c.0.iter().filter_map(|e| e.finite()).sum();
        (infs, sum)
    });
    let mut found: Vec<WeightVec> = Vec::new();
    for c in candidates {
        if found.iter().any(|f| proportional(f, &c)) {
            continue;
        }
        if is_tropism(ideal, &c)? {
            found.push(c);
            if found.len() == 2 {
                return Ok(found);
            }
        }
    }
    Err(DecideError::CertificateSearch)
}
