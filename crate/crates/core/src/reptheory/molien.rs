use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use num_traits::{Signed, ToPrimitive};

use crate::exactnum::{Cyclotomic, Rational};
use crate::matgroup::{FiniteMatrixGroup, GroupView, SquareMatrix};
use crate::{Error, Result};

/// Degree bound used by [`molien_prefix`] callers that do not choose one.
pub const DEFAULT_MOLIEN_DEGREE: usize = 50;

/// `h_0 … h_D` from power sums `p_1 … p_D` (index 0 of `power_sums` is
/// ignored), by `d·h_d = Σ_{t=1..d} p_t·h_{d−t}`.
fn complete_from_power_sums(power_sums: &[Cyclotomic], max_degree: usize) -> Vec<Cyclotomic> {
    let field = power_sums[0].field();
    let mut h = Vec::with_capacity(max_degree + 1);
    h.push(Cyclotomic::one(field));
    for d in 1..=max_degree {
        let mut acc = Cyclotomic::zero(field);
        for t in 1..=d {
            let p = &power_sums[t];
            if !p.is_zero() && !h[d - t].is_zero() {
                acc = &acc + &(p * &h[d - t]);
            }
        }
        h.push(acc.mul_rational(&Rational::new(1.into(), (d as u64).into())));
    }
    h
}

/// Trace of `g` acting on `Sym^d`, from power traces by the Newton
/// recurrence. Does not need `g` to have finite order.
pub fn sym_trace(g: &SquareMatrix, d: usize) -> Cyclotomic {
    let mut sums = Vec::with_capacity(d + 1);
    let mut cur = SquareMatrix::identity(g.field(), g.dim());
    for _ in 0..=d {
        sums.push(cur.trace());
        cur = &cur * g;
    }
    complete_from_power_sums(&sums, d).swap_remove(d)
}

/// [`sym_trace`] for a group element, using its cached power traces.
pub fn sym_trace_at(g: &FiniteMatrixGroup, pos: usize, d: usize) -> Cyclotomic {
    let sums: Vec<Cyclotomic> = (0..=d).map(|t| g.power_trace(pos, t).clone()).collect();
    complete_from_power_sums(&sums, d).swap_remove(d)
}

fn natural(value: &Cyclotomic, size: usize, what: &str) -> Result<u64> {
    value
        .as_rational()
        .map(|r| r / Rational::from_integer(size.into()))
        .filter(|r| r.is_integer() && !r.is_negative())
        .and_then(|r| r.to_integer().to_u64())
        .ok_or_else(|| Error::InternalArithmetic(format!("{what}: average {value} / {size} is not a natural number")))
}

/// Molien coefficients `a_0 … a_D`: `a_d = dim (Sym^d V*)^H`.
///
/// Elements with the same power traces contribute identical terms, so the
/// Newton recurrence runs once per distinct trace sequence.
pub fn molien_prefix<H: GroupView + ?Sized>(h: &H, max_degree: usize) -> Result<Vec<u64>> {
    let g = h.group();
    let mut classes: BTreeMap<&[Cyclotomic], usize> = BTreeMap::new();
    for &pos in h.positions() {
        *classes.entry(g.power_traces(pos)).or_default() += 1;
    }
    let field = g.field();
    let mut totals = alloc::vec![Cyclotomic::zero(field); max_degree + 1];
    for (traces, count) in classes {
        let sums: Vec<Cyclotomic> = (0..=max_degree).map(|t| traces[t % traces.len()].clone()).collect();
        let hs = complete_from_power_sums(&sums, max_degree);
        let weight = Rational::from_integer(count.into());
        for (tot, hd) in totals.iter_mut().zip(&hs) {
            if !hd.is_zero() {
                *tot = &*tot + &hd.mul_rational(&weight);
            }
        }
    }
    totals.iter().enumerate().map(|(d, v)| natural(v, h.size(), &format!("Molien coefficient {d}"))).collect()
}

/// `dim (Sym^d V*)^H` as the average of `sym_trace` over `H`.
pub fn invariant_dimension<H: GroupView + ?Sized>(h: &H, d: usize) -> Result<u64> {
    Ok(molien_prefix(h, d)?[d])
}

/// `⟨χ, χ⟩` for the defining character; 1 exactly for irreducible groups.
pub fn character_norm(g: &FiniteMatrixGroup) -> Result<Rational> {
    let mut acc = Cyclotomic::zero(g.field());
    for pos in 0..g.order() {
        let t = g.element(pos).trace();
        acc = &acc + &(&t * &t.conj());
    }
    acc.as_rational()
        .map(|r| r / Rational::from_integer(g.order().into()))
        .ok_or_else(|| Error::InternalArithmetic(format!("character norm {acc} is not rational")))
}
