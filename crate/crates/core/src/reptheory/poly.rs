use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exactnum::{Cyclotomic, CyclotomicField};
use crate::matgroup::SquareMatrix;
use crate::{Error, Result};

/// Exponent vectors of all degree-`d` monomials in `n` variables, in graded
/// lexicographic order (`x1^d` first, `xn^d` last).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    num_vars: usize,
    degree: u32,
    monomials: Vec<Vec<u32>>,
    index: BTreeMap<Vec<u32>, usize>,
}

impl MonomialBasis {
    /// Basis of `Sym^d` in `n ≥ 1` variables.
    pub fn new(num_vars: usize, degree: u32) -> Self {
        let mut monomials = Vec::new();
        let mut cur = vec![0u32; num_vars];
        fill(&mut cur, 0, degree, &mut monomials);
        let index = monomials.iter().cloned().zip(0..).collect();
        MonomialBasis { num_vars, degree, monomials, index }
    }

    /// Number of variables.
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Common degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `C(d + n − 1, d)`.
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    /// Never true: there is always at least one monomial.
    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Exponent vectors in order.
    pub fn monomials(&self) -> &[Vec<u32>] {
        &self.monomials
    }

    /// Position of an exponent vector.
    pub fn position(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }
}

fn fill(cur: &mut Vec<u32>, var: usize, left: u32, out: &mut Vec<Vec<u32>>) {
    if var + 1 == cur.len() {
        cur[var] = left;
        out.push(cur.clone());
        return;
    }
    for e in (0..=left).rev() {
        cur[var] = e;
        fill(cur, var + 1, left - e, out);
    }
    cur[var] = 0;
}

/// Substitution tables for `Sym^0 … Sym^d`: given a matrix `M`, computes the
/// image of every degree-`d` monomial under `f ↦ f∘M`, i.e. `x_i ↦ Σ_j M_ij x_j`.
#[derive(Clone, Debug)]
pub struct SubstitutionTable {
    bases: Vec<MonomialBasis>,
    /// `up[k][p][j]`: position in degree `k+1` of monomial `p` (degree `k`) times `x_j`.
    up: Vec<Vec<Vec<usize>>>,
    /// `split[k][q] = (p, i)`: degree-`k+1` monomial `q` equals monomial `p` of degree `k` times `x_i`,
    /// with `i` the first variable occurring in `q`.
    split: Vec<Vec<(usize, usize)>>,
}

impl SubstitutionTable {
    /// Tables up to degree `d` in `n` variables.
    pub fn new(num_vars: usize, degree: u32) -> Self {
        let bases: Vec<MonomialBasis> = (0..=degree).map(|k| MonomialBasis::new(num_vars, k)).collect();
        let mut up = Vec::new();
        let mut split = Vec::new();
        for k in 0..degree as usize {
            let (lo, hi) = (&bases[k], &bases[k + 1]);
            let table = lo
                .monomials()
                .iter()
                .map(|m| {
                    (0..num_vars)
                        .map(|j| {
                            let mut e = m.clone();
                            e[j] += 1;
                            hi.position(&e).expect("degree k+1 monomial")
                        })
                        .collect()
                })
                .collect();
            up.push(table);
            let sp = hi
                .monomials()
                .iter()
                .map(|m| {
                    let i = m.iter().position(|&e| e > 0).expect("positive degree");
                    let mut e = m.clone();
                    e[i] -= 1;
                    (lo.position(&e).expect("degree k monomial"), i)
                })
                .collect();
            split.push(sp);
        }
        SubstitutionTable { bases, up, split }
    }

    /// The degree-`d` monomial basis.
    pub fn basis(&self) -> &MonomialBasis {
        self.bases.last().expect("degree 0 is always present")
    }

    /// Row `q` holds the coefficients of `m_q ∘ M` on the degree-`d` basis.
    /// Row `q` is column `q` of the matrix of `f ↦ f∘M`.
    pub fn images(&self, m: &SquareMatrix) -> Vec<Vec<Cyclotomic>> {
        let field = m.field();
        let n = m.dim();
        let zero = Cyclotomic::zero(field);
        let mut prev: Vec<Vec<Cyclotomic>> = vec![vec![Cyclotomic::one(field)]];
        for k in 0..self.split.len() {
            let hi_len = self.bases[k + 1].len();
            let next = self.split[k]
                .iter()
                .map(|&(p, i)| {
                    let mut out = vec![zero.clone(); hi_len];
                    for (pp, c) in prev[p].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            let a = m.get(i, j);
                            if a.is_zero() {
                                continue;
                            }
                            let slot = &mut out[self.up[k][pp][j]];
                            *slot = &*slot + &(c * a);
                        }
                    }
                    out
                })
                .collect();
            prev = next;
        }
        prev
    }
}

/// A homogeneous polynomial with cyclotomic coefficients.
///
/// Only nonzero coefficients are stored; every exponent vector has length
/// `num_vars` and sums to `degree`.
#[derive(Clone)]
pub struct HomogeneousPolynomial {
    field: Arc<CyclotomicField>,
    num_vars: usize,
    degree: u32,
    terms: BTreeMap<Vec<u32>, Cyclotomic>,
}

impl HomogeneousPolynomial {
    /// The zero form of a given degree.
    pub fn zero(field: &Arc<CyclotomicField>, num_vars: usize, degree: u32) -> Self {
        HomogeneousPolynomial { field: field.clone(), num_vars, degree, terms: BTreeMap::new() }
    }

    /// `x_i` (zero-based index).
    pub fn variable(field: &Arc<CyclotomicField>, num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::from_terms(field, num_vars, [(e, Cyclotomic::one(field))]).expect("valid monomial")
    }

    /// From `(exponents, coefficient)` pairs; repeated exponents are summed.
    pub fn from_terms(
        field: &Arc<CyclotomicField>,
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Cyclotomic)>,
    ) -> Result<Self> {
        let mut degree = None;
        let mut map: BTreeMap<Vec<u32>, Cyclotomic> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != num_vars {
                return Err(Error::Shape(format!("exponent vector of length {} in {num_vars} variables", e.len())));
            }
            if c.conductor() != field.conductor() {
                return Err(Error::ConductorMismatch { left: field.conductor(), right: c.conductor() });
            }
            let d: u32 = e.iter().sum();
            if *degree.get_or_insert(d) != d {
                return Err(Error::Shape(format!("terms of degrees {} and {d}", degree.unwrap_or(d))));
            }
            let slot = map.entry(e).or_insert_with(|| Cyclotomic::zero(field));
            *slot = &*slot + &c;
        }
        map.retain(|_, c| !c.is_zero());
        Ok(HomogeneousPolynomial { field: field.clone(), num_vars, degree: degree.unwrap_or(0), terms: map })
    }

    /// From a coefficient vector on a [`MonomialBasis`].
    pub fn from_vector(field: &Arc<CyclotomicField>, basis: &MonomialBasis, v: &[Cyclotomic]) -> Self {
        let terms = basis
            .monomials()
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e.clone(), c.clone()))
            .collect();
        HomogeneousPolynomial { field: field.clone(), num_vars: basis.num_vars(), degree: basis.degree(), terms }
    }

    /// Coefficient vector on a [`MonomialBasis`] of the same shape.
    pub fn to_vector(&self, basis: &MonomialBasis) -> Vec<Cyclotomic> {
        let mut v = vec![Cyclotomic::zero(&self.field); basis.len()];
        for (e, c) in &self.terms {
            v[basis.position(e).expect("same degree and variable count")] = c.clone();
        }
        v
    }

    /// Coefficient field.
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// Number of variables.
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    /// Degree.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Nonzero terms in increasing exponent-vector order.
    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Cyclotomic)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Coefficient of a monomial.
    pub fn coeff(&self, exps: &[u32]) -> Cyclotomic {
        self.terms.get(exps).cloned().unwrap_or_else(|| Cyclotomic::zero(&self.field))
    }

    /// True when no term is stored.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by a constant.
    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let terms = if c.is_zero() {
            BTreeMap::new()
        } else {
            self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect()
        };
        HomogeneousPolynomial { terms, ..self.clone() }
    }

    /// Sum of two forms of the same degree.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(Error::Shape(format!("adding forms of degrees {} and {}", self.degree, other.degree)));
        }
        let terms = self.terms.iter().chain(&other.terms).map(|(e, c)| (e.clone(), c.clone()));
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = Self::from_terms(&self.field, self.num_vars, terms)?;
        out.degree = degree;
        Ok(out)
    }

    /// Product of two forms.
    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<Vec<u32>, Cyclotomic> = BTreeMap::new();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e: Vec<u32> = a.iter().zip(b).map(|(p, q)| p + q).collect();
                let slot = terms.entry(e).or_insert_with(|| Cyclotomic::zero(&self.field));
                *slot = &*slot + &(x * y);
            }
        }
        terms.retain(|_, c| !c.is_zero());
        HomogeneousPolynomial {
            field: self.field.clone(),
            num_vars: self.num_vars,
            degree: self.degree + other.degree,
            terms,
        }
    }

    /// `f∘M`, the substitution `x_i ↦ Σ_j M_ij x_j`.
    pub fn compose(&self, m: &SquareMatrix) -> Self {
        let table = SubstitutionTable::new(self.num_vars, self.degree);
        let basis = table.basis();
        let images = table.images(m);
        let mut acc = vec![Cyclotomic::zero(&self.field); basis.len()];
        for (e, c) in &self.terms {
            let row = &images[basis.position(e).expect("same shape")];
            for (slot, x) in acc.iter_mut().zip(row) {
                if !x.is_zero() {
                    *slot = &*slot + &(c * x);
                }
            }
        }
        Self::from_vector(&self.field, basis, &acc)
    }

    /// The contragredient action `g·f = f∘g⁻¹`.
    pub fn act(&self, g: &SquareMatrix) -> Result<Self> {
        Ok(self.compose(&g.inverse()?))
    }

    /// Rescaled so the first term in graded lexicographic order has
    /// coefficient 1. Zero stays zero.
    pub fn monic(&self) -> Self {
        match self.terms.iter().next_back() {
            Some((_, lead)) => self.scale(&lead.inv().expect("stored coefficients are nonzero")),
            None => self.clone(),
        }
    }

    /// Evaluates at a point.
    pub fn eval(&self, point: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(&self.field);
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = &t * x;
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Same polynomial over `ℚ(ζ_m)` with `n | m`.
    pub fn embed(&self, target: &Arc<CyclotomicField>) -> Result<Self> {
        let terms = self.terms.iter().map(|(e, c)| Ok((e.clone(), c.embed(target)?))).collect::<Result<_>>()?;
        Ok(HomogeneousPolynomial { field: target.clone(), num_vars: self.num_vars, degree: self.degree, terms })
    }
}

impl PartialEq for HomogeneousPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor() == other.field.conductor()
            && self.num_vars == other.num_vars
            && self.degree == other.degree
            && self.terms == other.terms
    }
}

impl Eq for HomogeneousPolynomial {}

impl core::hash::Hash for HomogeneousPolynomial {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.field.conductor().hash(state);
        self.num_vars.hash(state);
        self.degree.hash(state);
        self.terms.hash(state);
    }
}

impl fmt::Display for HomogeneousPolynomial {
    /// Terms in graded lexicographic order, e.g. `x1^3 + (z^2 + 1)*x2*x3^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            let mono: Vec<alloc::string::String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| if p == 1 { format!("x{}", i + 1) } else { format!("x{}^{p}", i + 1) })
                .collect();
            let coeff = format!("{c}");
            match (mono.is_empty(), c.is_one()) {
                (true, _) => write!(f, "({coeff})")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "({coeff})*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for HomogeneousPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over Q(z{})", self.field.conductor())
    }
}
