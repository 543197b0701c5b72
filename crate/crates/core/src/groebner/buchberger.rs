//! Buchberger's algorithm with the normal selection strategy and the
//! Gebauer–Möller pair criteria.

use crate::polyring::{merge_sorted, Monomial, Poly, Ring, TermOrder};
use crate::scalars::{Coeff, Field};

type Terms = Vec<(Monomial, Coeff)>;

/// Basis element: terms sorted descending under the active order, monic,
/// with an optional cofactor of the tracked generator.
#[derive(Clone, Debug)]
struct Elem {
    terms: Terms,
    cof: Option<Poly>,
}

impl Elem {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }
}

/// A Gröbner basis element together with its cofactor on the tracked
/// generator, when tracking was requested.
#[derive(Clone, Debug)]
pub struct Tracked {
    pub poly: Poly,
    pub cofactor: Option<Poly>,
}

struct Engine<'a> {
    field: Field,
    ord: &'a TermOrder,
}

impl Engine<'_> {
    fn make_monic(&self, mut e: Elem) -> Elem {
        let inv = self.field.inv(&e.terms[0].1).unwrap();
        if !self.field.is_one(&e.terms[0].1) {
            for t in e.terms.iter_mut() {
                t.1 = self.field.mul(&t.1, &inv);
            }
            e.cof = e.cof.map(|c| c.scale(&inv));
        }
        e
    }

    fn scaled_shift(&self, terms: &[(Monomial, Coeff)], c: &Coeff, m: &Monomial) -> Terms {
        terms
            .iter()
            .map(|(t, a)| (t.mul(m), self.field.mul(a, c)))
            .collect()
    }

    fn find_reducer<'b>(&self, m: &Monomial, basis: &'b [Elem], active: &[usize]) -> Option<&'b Elem> {
        active
            .iter()
            .map(|&i| &basis[i])
            .find(|g| g.lm().divides(m))
    }

    /// Full reduction of `e` modulo the active elements, made monic.
    fn reduce(&self, e: Elem, basis: &[Elem], active: &[usize]) -> Option<Elem> {
        let r = reduce_tail(self, e, basis, active);
        (!r.terms.is_empty()).then(|| self.make_monic(r))
    }

    fn spoly(&self, a: &Elem, b: &Elem) -> Elem {
        let l = a.lm().lcm(b.lm());
        let qa = a.lm().quotient(&l);
        let qb = b.lm().quotient(&l);
        let one = self.field.one();
        let mone = self.field.neg(&one);
        let ta = self.scaled_shift(&a.terms[1..], &one, &qa);
        let tb = self.scaled_shift(&b.terms[1..], &mone, &qb);
        let cof = match (&a.cof, &b.cof) {
            (Some(ca), Some(cb)) => Some(ca.mul_term(&one, &qa).add(&cb.mul_term(&mone, &qb))),
            _ => None,
        };
        Elem {
            terms: merge_sorted(&ta, &tb, self.ord, &self.field),
            cof,
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of the ideal generated by `gens` under `ord`,
/// sorted by ascending leading monomial. When `track` names a generator,
/// each element carries its cofactor on that generator in some fixed
/// representation `g = Σ c_i gens_i`.
pub fn groebner_basis(ring: &Ring, gens: &[Poly], ord: &TermOrder, track: Option<usize>) -> Vec<Tracked> {
    let eng = Engine {
        field: ring.field().clone(),
        ord,
    };
    let mut basis: Vec<Elem> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<Elem> = gens
        .iter()
        .enumerate()
        .filter(|(_, g)| !g.is_zero())
        .map(|(k, g)| Elem {
            terms: g.sorted_terms(ord),
            cof: track.map(|t| if t == k { ring.one() } else { ring.zero() }),
        })
        .collect();
    inputs.sort_by(|a, b| ord.cmp(a.lm(), b.lm()));

    let mut queue: Vec<Elem> = inputs;
    queue.reverse();
    loop {
        let next = if let Some(e) = queue.pop() {
            Some(e)
        } else if !pairs.is_empty() {
            // normal strategy: smallest lcm, ties by index
            let k = (0..pairs.len())
                .min_by(|&a, &b| {
                    ord.cmp(&pairs[a].lcm, &pairs[b].lcm)
                        .then_with(|| (pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j)))
                })
                .unwrap();
            let p = pairs.swap_remove(k);
            Some(eng.spoly(&basis[p.i], &basis[p.j]))
        } else {
            None
        };
        let Some(e) = next else { break };
        let Some(h) = eng.reduce(e, &basis, &active) else {
            continue;
        };
        if h.lm().is_one() {
            return vec![Tracked {
                poly: ring.from_terms(h.terms),
                cofactor: h.cof,
            }];
        }
        let hi = basis.len();
        let hlm = h.lm().clone();
        basis.push(h);
        update(&basis, &mut active, &mut pairs, hi, &hlm, ord);
    }

    // inter-reduce the minimal basis
    let mut minimal: Vec<usize> = active.clone();
    minimal.sort_by(|&a, &b| ord.cmp(basis[a].lm(), basis[b].lm()));
    let mut out: Vec<Elem> = Vec::new();
    for (pos, &i) in minimal.iter().enumerate() {
        let others: Vec<usize> = minimal
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != pos)
            .map(|(_, &j)| j)
            .collect();
        let e = basis[i].clone();
        let head = e.terms[0].clone();
        let tail = Elem {
            terms: e.terms[1..].to_vec(),
            cof: e.cof.clone(),
        };
        let reduced_tail = reduce_tail(&eng, tail, &basis, &others);
        let mut terms = vec![head];
        terms.extend(reduced_tail.terms);
        out.push(Elem {
            terms,
            cof: reduced_tail.cof,
        });
    }
    out.into_iter()
        .map(|e| Tracked {
            poly: ring.from_terms(e.terms),
            cofactor: e.cof,
        })
        .collect()
}

/// Reduce every term of `e` modulo the given elements.
fn reduce_tail(eng: &Engine, e: Elem, basis: &[Elem], active: &[usize]) -> Elem {
    let mut work = e.terms;
    let mut cof = e.cof;
    let mut done: Terms = Vec::new();
    while !work.is_empty() {
        let (m, c) = &work[0];
        match eng.find_reducer(m, basis, active) {
            Some(g) => {
                let q = g.lm().quotient(m);
                let negc = eng.field.neg(c);
                let sub = eng.scaled_shift(&g.terms[1..], &negc, &q);
                if let (Some(cf), Some(gc)) = (cof.as_mut(), g.cof.as_ref()) {
                    *cf = cf.add(&gc.mul_term(&negc, &q));
                }
                work = merge_sorted(&work[1..], &sub, eng.ord, &eng.field);
            }
            None => done.push(work.remove(0)),
        }
    }
    Elem { terms: done, cof }
}

/// Gebauer–Möller update after adding basis element `h`.
fn update(
    basis: &[Elem],
    active: &mut Vec<usize>,
    pairs: &mut Vec<Pair>,
    h: usize,
    hlm: &Monomial,
    ord: &TermOrder,
) {
    let coprime = |g: usize| basis[g].lm().is_coprime(hlm);
    let mut c: Vec<Pair> = active
        .iter()
        .map(|&g| Pair {
            i: g,
            j: h,
            lcm: basis[g].lm().lcm(hlm),
        })
        .collect();
    let mut d: Vec<Pair> = Vec::new();
    while !c.is_empty() {
        let p = c.remove(0);
        let chained = |q: &Pair| q.lcm.divides(&p.lcm);
        if coprime(p.i) || (!c.iter().any(chained) && !d.iter().any(chained)) {
            d.push(p);
        }
    }
    d.retain(|p| !coprime(p.i));
    pairs.retain(|p| {
        !(hlm.divides(&p.lcm)
            && basis[p.i].lm().lcm(hlm) != p.lcm
            && basis[p.j].lm().lcm(hlm) != p.lcm)
    });
    pairs.extend(d);
    active.retain(|&g| !hlm.divides(basis[g].lm()));
    active.push(h);
    active.sort_by(|&a, &b| ord.cmp(basis[a].lm(), basis[b].lm()).then(a.cmp(&b)));
}
