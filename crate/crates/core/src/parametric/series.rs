//! Truncated power series in one variable and determinants of matrices
//! over them, with or without a polynomial parameter.

use crate::scalars::{Coeff, Field, UniPoly};

/// Coefficients of `x^0 .. x^{prec-1}`.
pub type Series = Vec<Coeff>;

pub fn order(s: &[Coeff]) -> Option<usize> {
    s.iter().position(|c| !c.is_zero())
}

pub fn sub(f: &Field, a: &[Coeff], b: &[Coeff]) -> Series {
    a.iter().zip(b).map(|(x, y)| f.sub(x, y)).collect()
}

/// Product truncated at `prec`, skipping zero coefficients.
pub fn mul(f: &Field, a: &[Coeff], b: &[Coeff], prec: usize) -> Series {
    let mut out = vec![f.zero(); prec];
    let bn: Vec<(usize, &Coeff)> = b.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for (i, x) in a.iter().enumerate().take(prec) {
        if x.is_zero() {
            continue;
        }
        for &(j, y) in &bn {
            if i + j >= prec {
                break;
            }
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

/// Inverse of a series with nonzero constant term, to `prec` terms.
pub fn inv_unit(f: &Field, a: &[Coeff], prec: usize) -> Series {
    let c0 = f.inv(&a[0]).expect("series is not a unit");
    let mut out = vec![f.zero(); prec];
    if prec == 0 {
        return out;
    }
    out[0] = c0.clone();
    for k in 1..prec {
        let mut s = f.zero();
        for j in 1..=k.min(a.len() - 1) {
            if !a[j].is_zero() && !out[k - j].is_zero() {
                s = f.add(&s, &f.mul(&a[j], &out[k - j]));
            }
        }
        out[k] = f.neg(&f.mul(&s, &c0));
    }
    out
}

/// Determinant modulo `x^prec` by elimination, always pivoting on an entry
/// of least order in the remaining block so no precision is lost.
pub fn det(f: &Field, mut m: Vec<Vec<Series>>, prec: usize) -> Series {
    let n = m.len();
    let mut acc = vec![f.zero(); prec];
    if prec == 0 {
        return acc;
    }
    acc[0] = f.one();
    let mut negate = false;
    for k in 0..n {
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in m.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().skip(k) {
                if let Some(v) = order(e) {
                    if best.is_none_or(|b| v < b.2) {
                        best = Some((i, j, v));
                    }
                }
            }
        }
        let Some((pi, pj, v)) = best else {
            return vec![f.zero(); prec];
        };
        if pi != k {
            m.swap(pi, k);
            negate = !negate;
        }
        if pj != k {
            for row in m.iter_mut() {
                row.swap(pj, k);
            }
            negate = !negate;
        }
        let inv = inv_unit(f, &m[k][k][v..], prec - v);
        for i in k + 1..n {
            if order(&m[i][k]).is_none() {
                continue;
            }
            let factor = mul(f, &m[i][k][v..], &inv, prec - v);
            for j in k + 1..n {
                let t = mul(f, &factor, &m[k][j], prec);
                m[i][j] = sub(f, &m[i][j], &t);
            }
        }
        acc = mul(f, &acc, &m[k][k], prec);
    }
    if negate {
        acc = acc.iter().map(|c| f.neg(c)).collect();
    }
    acc
}

/// Series whose coefficients are polynomials in a parameter `a`.
pub type ParamEntry = Vec<UniPoly>;

fn pmul(f: &Field, a: &[UniPoly], b: &[UniPoly], prec: usize) -> ParamEntry {
    let mut out = vec![UniPoly::zero(); prec];
    for (i, x) in a.iter().enumerate().take(prec) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if i + j >= prec {
                break;
            }
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y, f), f);
            }
        }
    }
    out
}

fn padd(f: &Field, a: &[UniPoly], b: &[UniPoly]) -> ParamEntry {
    a.iter().zip(b).map(|(x, y)| x.add(y, f)).collect()
}

fn pneg(f: &Field, a: &[UniPoly]) -> ParamEntry {
    a.iter().map(|x| x.neg(f)).collect()
}

/// Division-free determinant (Berkowitz) over `K[a][x]/(x^prec)`.
pub fn berkowitz(f: &Field, m: &[Vec<ParamEntry>], prec: usize) -> ParamEntry {
    let n = m.len();
    let mut one = vec![UniPoly::zero(); prec];
    one[0] = UniPoly::constant(f.one());
    if n == 0 {
        return one;
    }
    // characteristic polynomial coefficients, leading first
    let mut cp: Vec<ParamEntry> = vec![one.clone(), pneg(f, &m[0][0])];
    for r in 1..n {
        let mut t: Vec<ParamEntry> = vec![one.clone(), pneg(f, &m[r][r])];
        let mut v: Vec<ParamEntry> = (0..r).map(|i| m[i][r].clone()).collect();
        for _ in 0..r {
            let mut rv = vec![UniPoly::zero(); prec];
            for (j, vj) in v.iter().enumerate() {
                rv = padd(f, &rv, &pmul(f, &m[r][j], vj, prec));
            }
            t.push(pneg(f, &rv));
            v = (0..r)
                .map(|i| {
                    let mut s = vec![UniPoly::zero(); prec];
                    for (j, vj) in v.iter().enumerate() {
                        s = padd(f, &s, &pmul(f, &m[i][j], vj, prec));
                    }
                    s
                })
                .collect();
        }
        let mut next = Vec::with_capacity(r + 2);
        for i in 0..r + 2 {
            let mut s = vec![UniPoly::zero(); prec];
            for (j, c) in cp.iter().enumerate() {
                if j <= i {
                    s = padd(f, &s, &pmul(f, &t[i - j], c, prec));
                }
            }
            next.push(s);
        }
        cp = next;
    }
    let last = cp.pop().unwrap();
    if n % 2 == 1 {
        pneg(f, &last)
    } else {
        last
    }
}

/// Polynomial of degree below `points.len()` through `(points[i], values[i])`.
pub fn interpolate(f: &Field, points: &[Coeff], values: &[Coeff]) -> UniPoly {
    let mut acc = UniPoly::zero();
    for (i, (xi, yi)) in points.iter().zip(values).enumerate() {
        if yi.is_zero() {
            continue;
        }
        let mut basis = UniPoly::constant(f.one());
        let mut denom = f.one();
        for (j, xj) in points.iter().enumerate() {
            if j != i {
                basis = basis.mul(&UniPoly::linear_root(xj, f), f);
                denom = f.mul(&denom, &f.sub(xi, xj));
            }
        }
        let scale = f.div(yi, &denom).unwrap();
        acc = acc.add(&basis.scale(&scale, f), f);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn laplace(f: &Field, m: &[Vec<ParamEntry>], prec: usize) -> ParamEntry {
        let n = m.len();
        if n == 0 {
            let mut one = vec![UniPoly::zero(); prec];
            one[0] = UniPoly::constant(f.one());
            return one;
        }
        let mut acc = vec![UniPoly::zero(); prec];
        for j in 0..n {
            let minor: Vec<Vec<ParamEntry>> = m[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, e)| e.clone()).collect())
                .collect();
            let term = pmul(f, &m[0][j], &laplace(f, &minor, prec), prec);
            acc = if j % 2 == 0 { padd(f, &acc, &term) } else { padd(f, &acc, &pneg(f, &term)) };
        }
        acc
    }

    fn entry(f: &Field, rows: &[&[i64]], prec: usize) -> ParamEntry {
        let mut e: ParamEntry = rows
            .iter()
            .map(|cs| UniPoly::new(cs.iter().map(|&c| f.from_i64(c)).collect()))
            .collect();
        e.resize(prec, UniPoly::zero());
        e
    }

    #[test]
    fn berkowitz_matches_laplace() {
        let q = Field::rationals();
        let prec = 6;
        let m: Vec<Vec<ParamEntry>> = vec![
            vec![entry(&q, &[&[1], &[0, 1]], prec), entry(&q, &[&[0], &[2]], prec), entry(&q, &[&[3, -1]], prec)],
            vec![entry(&q, &[&[0], &[0], &[1, 1]], prec), entry(&q, &[&[0, 2], &[1]], prec), entry(&q, &[&[1]], prec)],
            vec![entry(&q, &[&[5]], prec), entry(&q, &[&[0], &[0, 0, 1]], prec), entry(&q, &[&[0], &[0], &[0], &[7]], prec)],
        ];
        assert_eq!(berkowitz(&q, &m, prec), laplace(&q, &m, prec));
    }

    #[test]
    fn elimination_matches_interpolated_berkowitz() {
        let q = Field::rationals();
        let prec = 8;
        let raw: Vec<Vec<Series>> = vec![
            vec![vec![0, 0, 1], vec![0, 1], vec![0, 0, 0, 2]],
            vec![vec![1], vec![0, 0, 0, 0, 1], vec![0, 3]],
            vec![vec![0, 1, 1], vec![2], vec![0, 0, 1]],
        ]
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|cs| {
                    let mut s: Series = cs.into_iter().map(|c| q.from_i64(c)).collect();
                    s.resize(prec, q.zero());
                    s
                })
                .collect()
        })
        .collect();
        let lifted: Vec<Vec<ParamEntry>> = raw
            .iter()
            .map(|row| row.iter().map(|s| s.iter().map(|c| UniPoly::constant(c.clone())).collect()).collect())
            .collect();
        let b = berkowitz(&q, &lifted, prec);
        let e = det(&q, raw, prec);
        for k in 0..prec {
            assert_eq!(b[k].coeff(0).unwrap_or_else(|| q.zero()), e[k]);
        }
    }

    #[test]
    fn interpolation_recovers_polynomial() {
        let f = Field::prime(7).unwrap();
        let p = UniPoly::new(vec![f.from_i64(3), f.zero(), f.from_i64(1), f.from_i64(5)]);
        let pts: Vec<Coeff> = (0..4).map(|i| f.from_i64(i)).collect();
        let vals: Vec<Coeff> = pts.iter().map(|x| p.eval(x, &f)).collect();
        assert_eq!(interpolate(&f, &pts, &vals), p);
    }
}
