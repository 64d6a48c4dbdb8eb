//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use excq_core::exactnum::{Cyclotomic, CyclotomicField};
use excq_core::linalg;
use excq_core::SquareMatrix;

/// Power series coefficients of `(Σ t^a for a in numerator) / ∏ (1 − t^b)` up to `t^max`.
pub fn rational_series(numerator: &[usize], denominator: &[usize], max: usize) -> Vec<u64> {
    let mut c = vec![0u64; max + 1];
    for &a in numerator {
        if a <= max {
            c[a] += 1;
        }
    }
    for &b in denominator {
        for i in b..=max {
            c[i] += c[i - b];
        }
    }
    c
}

type Poly = BTreeMap<Vec<u32>, Cyclotomic>;

fn poly_mul(a: &Poly, b: &Poly, f: &Arc<CyclotomicField>) -> Poly {
    let mut out: Poly = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert_with(|| Cyclotomic::zero(f));
            *slot = &*slot + &(ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Degree-`d` exponent vectors in `n` variables, in any fixed order.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Matrix (rows indexed by output monomial) of `f ↦ f∘m` on `Sym^d`, by
/// expanding each monomial as a product of linear forms.
pub fn sym_power_matrix(m: &SquareMatrix, d: u32) -> Vec<Vec<Cyclotomic>> {
    let f = m.field().clone();
    let n = m.dim();
    let basis = monomials(n, d);
    let linear: Vec<Poly> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| !m.get(i, j).is_zero())
                .map(|j| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    (e, m.get(i, j).clone())
                })
                .collect()
        })
        .collect();
    let mut cols = Vec::new();
    for e in &basis {
        let mut p: Poly = BTreeMap::from([(vec![0; n], Cyclotomic::one(&f))]);
        for (i, &k) in e.iter().enumerate() {
            for _ in 0..k {
                p = poly_mul(&p, &linear[i], &f);
            }
        }
        cols.push(basis.iter().map(|b| p.get(b).cloned().unwrap_or_else(|| Cyclotomic::zero(&f))).collect::<Vec<_>>());
    }
    linalg::transpose(&cols, basis.len())
}

/// Rank of `Σ_h Sym^d(h)` over the given elements.
pub fn reynolds_rank<'a>(elements: impl Iterator<Item = &'a SquareMatrix>, d: u32) -> usize {
    let mut acc: Option<Vec<Vec<Cyclotomic>>> = None;
    for h in elements {
        let m = sym_power_matrix(h, d);
        acc = Some(match acc {
            None => m,
            Some(a) => a.iter().zip(&m).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x + y).collect()).collect(),
        });
    }
    let acc = acc.expect("nonempty group");
    let n = acc.len();
    linalg::rank(&acc, n).expect("exact rank")
}

/// Trace of an explicit matrix.
pub fn trace(m: &[Vec<Cyclotomic>]) -> Cyclotomic {
    let f = m[0][0].field().clone();
    m.iter().enumerate().fold(Cyclotomic::zero(&f), |acc, (i, r)| &acc + &r[i])
}
