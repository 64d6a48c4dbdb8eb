use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use super::{element_order, FiniteMatrixGroup, SquareMatrix};
use crate::exactnum::{lcm, Cyclotomic, CyclotomicField, Rational};
use crate::linalg;
use crate::{Error, Result};

/// Eigenvalue data of a finite-order matrix `g` of order `k`: eigenvalue
/// `ζ_k^a` occurs with the given multiplicity. Only nonzero multiplicities
/// are listed, sorted by `a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    /// Order `k` of the element.
    pub order: u32,
    /// `(a, multiplicity)` pairs with `0 ≤ a < k`.
    pub multiplicities: Vec<(u32, u32)>,
}

impl Spectrum {
    /// Age `Σ (a/k)·mult_a`.
    pub fn age(&self) -> Rational {
        let total: u64 = self.multiplicities.iter().map(|&(a, m)| u64::from(a) * u64::from(m)).sum();
        Rational::new(total.into(), self.order.into())
    }

    /// Number of eigenvalues different from 1, with multiplicity.
    pub fn nontrivial_count(&self) -> u32 {
        self.multiplicities.iter().filter(|(a, _)| *a != 0).map(|(_, m)| m).sum()
    }

    /// `ζ_k^a` inside `field` (whose conductor must be a multiple of `k`).
    pub fn eigenvalue(&self, a: u32, field: &Arc<CyclotomicField>) -> Cyclotomic {
        let step = field.conductor() / self.order;
        Cyclotomic::zeta_pow(field, i64::from(step) * i64::from(a))
    }
}

/// Multiplicities by the discrete Fourier transform of power traces:
/// `mult_a = (1/k) Σ_t trace(g^t) ζ_k^{−at}`.
fn spectrum_from_traces(traces: &[Cyclotomic], dim: usize) -> Result<Spectrum> {
    let k = traces.len() as u32;
    let field = traces[0].field().clone();
    let step = i64::from(field.conductor() / k);
    let mut multiplicities = Vec::new();
    let mut total = 0u32;
    for a in 0..k {
        let mut acc = Cyclotomic::zero(&field);
        for (t, tr) in traces.iter().enumerate() {
            if tr.is_zero() {
                continue;
            }
            let e = -step * i64::from(a) * t as i64;
            acc = &acc + &(tr * &Cyclotomic::zeta_pow(&field, e));
        }
        let m = acc
            .as_rational()
            .map(|r| r / Rational::from_integer(k.into()))
            .filter(|r| r.is_integer() && !r.is_negative())
            .and_then(|r| r.to_integer().to_u32())
            .ok_or_else(|| Error::InternalArithmetic(format!("eigenvalue multiplicity {acc} / {k} is not a natural number")))?;
        if m > 0 {
            multiplicities.push((a, m));
            total += m;
        }
    }
    if total as usize != dim {
        return Err(Error::InternalArithmetic(format!("multiplicities sum to {total}, not {dim}")));
    }
    Ok(Spectrum { order: k, multiplicities })
}

/// Eigenvalue multiplicities of a finite-order matrix, without extracting
/// roots. Traces are embedded into `ℚ(ζ_lcm(n,k))` when needed.
pub fn eigen_multiplicities(g: &SquareMatrix, cap: usize) -> Result<Spectrum> {
    let k = element_order(g, cap)?;
    let n = lcm(g.conductor(), k).ok_or(Error::InvalidConductor(u64::from(g.conductor()) * u64::from(k)))?;
    let field = CyclotomicField::new(n)?;
    let mut traces = Vec::with_capacity(k as usize);
    let mut cur = SquareMatrix::identity(g.field(), g.dim());
    for _ in 0..k {
        traces.push(cur.trace().embed(&field)?);
        cur = &cur * g;
    }
    spectrum_from_traces(&traces, g.dim())
}

impl FiniteMatrixGroup {
    /// Eigenvalue multiplicities of the element at `pos`, from the cached
    /// power traces.
    pub fn spectrum(&self, pos: usize) -> Result<Spectrum> {
        spectrum_from_traces(self.power_traces(pos), self.dim())
    }
}

/// Positions of all pseudo-reflections: `g ≠ I` with `rank(g − I) = 1`.
pub fn reflections(g: &FiniteMatrixGroup) -> Vec<usize> {
    let one = Cyclotomic::one(g.field());
    (1..g.order()).filter(|&p| g.element(p).minus_scalar(&one).rank() == 1).collect()
}

/// True when every generator has determinant 1.
pub fn in_special_linear(g: &FiniteMatrixGroup) -> bool {
    g.generators().all(|m| m.det().is_one())
}

/// A set of `dim` independent lines permuted by the group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialSystem {
    /// Line representatives, each scaled so its first nonzero coordinate is 1.
    pub lines: Vec<Vec<Cyclotomic>>,
    /// Orbit sizes of the group on the lines.
    pub orbit_sizes: Vec<usize>,
}

impl MonomialSystem {
    /// The group permutes the lines transitively.
    pub fn is_transitive(&self) -> bool {
        self.orbit_sizes.len() == 1
    }
}

fn normalize_line(v: &[Cyclotomic]) -> Option<Vec<Cyclotomic>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().ok()?;
    Some(v.iter().map(|x| x * &inv).collect())
}

/// Searches for a system of imprimitivity made of lines.
///
/// Candidate lines are the coordinate axes and every one-dimensional
/// eigenspace of every element. A stable system is a union of orbits, so
/// only candidates whose orbit has at most `dim` lines are kept, and unions
/// of such orbits are tried for `dim` independent lines.
pub fn monomial_system(g: &FiniteMatrixGroup) -> Result<Option<MonomialSystem>> {
    let dim = g.dim();
    let field = g.field().clone();
    let mut seen = BTreeSet::new();
    let mut candidates: Vec<Vec<Cyclotomic>> = Vec::new();
    let mut push = |line: Vec<Cyclotomic>, seen: &mut BTreeSet<Vec<Cyclotomic>>| {
        if seen.insert(line.clone()) {
            candidates.push(line);
        }
    };
    for i in 0..dim {
        let axis = (0..dim)
            .map(|j| if i == j { Cyclotomic::one(&field) } else { Cyclotomic::zero(&field) })
            .collect();
        push(axis, &mut seen);
    }
    for pos in 1..g.order() {
        let sp = g.spectrum(pos)?;
        for &(a, m) in &sp.multiplicities {
            if m != 1 {
                continue;
            }
            let lambda = sp.eigenvalue(a, &field);
            let shifted = g.element(pos).minus_scalar(&lambda);
            let kernel = linalg::nullspace(&shifted.rows(), dim, &field)?;
            if let [v] = kernel.as_slice() {
                if let Some(line) = normalize_line(v) {
                    push(line, &mut seen);
                }
            }
        }
    }

    let gens: Vec<&SquareMatrix> = g.generators().collect();
    let mut orbits: Vec<Vec<Vec<Cyclotomic>>> = Vec::new();
    let mut placed = BTreeSet::new();
    'candidates: for line in &candidates {
        if placed.contains(line) {
            continue;
        }
        let mut orbit = alloc::vec![line.clone()];
        let mut head = 0;
        while head < orbit.len() {
            for s in &gens {
                let image = normalize_line(&s.apply(&orbit[head]))
                    .ok_or_else(|| Error::InternalArithmetic(format!("invertible map sent a line to zero")))?;
                if !orbit.contains(&image) {
                    if orbit.len() == dim {
                        continue 'candidates;
                    }
                    orbit.push(image);
                }
            }
            head += 1;
        }
        for l in &orbit {
            placed.insert(l.clone());
        }
        orbits.push(orbit);
    }

    let mut chosen = Vec::new();
    if pick_orbits(&orbits, 0, dim, &mut chosen, &field)? {
        let lines = chosen.iter().flat_map(|&i| orbits[i].iter().cloned()).collect();
        let orbit_sizes = chosen.iter().map(|&i| orbits[i].len()).collect();
        return Ok(Some(MonomialSystem { lines, orbit_sizes }));
    }
    Ok(None)
}

fn pick_orbits(
    orbits: &[Vec<Vec<Cyclotomic>>],
    start: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
    field: &Arc<CyclotomicField>,
) -> Result<bool> {
    if remaining == 0 {
        let rows: Vec<Vec<Cyclotomic>> = chosen.iter().flat_map(|&i| orbits[i].iter().cloned()).collect();
        let dim = rows.len();
        return Ok(linalg::rank(&rows, dim)? == dim);
    }
    for i in start..orbits.len() {
        if orbits[i].len() > remaining {
            continue;
        }
        chosen.push(i);
        if pick_orbits(orbits, i + 1, remaining - orbits[i].len(), chosen, field)? {
            return Ok(true);
        }
        chosen.pop();
    }
    Ok(false)
}
