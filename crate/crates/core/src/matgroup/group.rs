use alloc::collections::BTreeMap;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::SquareMatrix;
use crate::exactnum::{lcm, Cyclotomic, CyclotomicField};
use crate::{Error, Result};

/// Default element cap for [`closure`].
pub const DEFAULT_CLOSURE_CAP: usize = 100_000;

/// A finite matrix group with every element enumerated.
///
/// Elements are listed in breadth-first insertion order from the identity
/// (always position 0), multiplying on the right by the generators in their
/// given order. Once built the group is immutable.
///
/// All entries live in one session field `ℚ(ζ_N)` where `N` is the lcm of the
/// input conductor and every element order, so eigenvalues of any element are
/// available without further embedding.
#[derive(Clone, Debug)]
pub struct FiniteMatrixGroup {
    dim: usize,
    input_conductor: u32,
    field: Arc<CyclotomicField>,
    elements: Vec<SquareMatrix>,
    index: BTreeMap<SquareMatrix, usize>,
    generator_positions: Vec<usize>,
    /// `right_mul[e][s]` is the position of `elements[e] · generator s`.
    right_mul: Vec<Vec<usize>>,
    orders: Vec<u32>,
    inverses: Vec<usize>,
    /// `power_traces[e][t] = trace(g^t)` for `t < order(g)`.
    power_traces: Vec<Vec<Cyclotomic>>,
    all_positions: Vec<usize>,
}

/// Least `k ≥ 1` with `g^k = I`, giving up after `cap` steps.
pub fn element_order(g: &SquareMatrix, cap: usize) -> Result<u32> {
    let mut cur = g.clone();
    for k in 1..=cap {
        if cur.is_identity() {
            return u32::try_from(k).map_err(|_| Error::OrderOverflow { cap });
        }
        cur = &cur * g;
    }
    Err(Error::OrderOverflow { cap })
}

/// Breadth-first closure of `generators` under right multiplication.
pub fn closure(generators: &[SquareMatrix], cap: usize) -> Result<FiniteMatrixGroup> {
    let first = generators.first().ok_or_else(|| Error::Shape(format!("no generators")))?;
    let dim = first.dim();
    let field = first.field().clone();
    for g in generators {
        if g.dim() != dim {
            return Err(Error::Shape(format!("generators of sizes {dim} and {}", g.dim())));
        }
        if g.conductor() != field.conductor() {
            return Err(Error::ConductorMismatch { left: field.conductor(), right: g.conductor() });
        }
    }
    if let Some(index) = generators.iter().position(|g| g.det().is_zero()) {
        return Err(Error::SingularGenerator { index });
    }
    if cap == 0 {
        return Err(Error::NotFiniteOrCapTooSmall { cap });
    }

    let identity = SquareMatrix::identity(&field, dim);
    let mut elements = alloc::vec![identity.clone()];
    let mut index = BTreeMap::new();
    index.insert(identity, 0usize);
    let mut right_mul: Vec<Vec<usize>> = Vec::new();
    let mut head = 0;
    while head < elements.len() {
        let mut row = Vec::with_capacity(generators.len());
        for g in generators {
            let p = &elements[head] * g;
            let pos = match index.get(&p) {
                Some(&pos) => pos,
                None => {
                    if elements.len() == cap {
                        return Err(Error::NotFiniteOrCapTooSmall { cap });
                    }
                    let pos = elements.len();
                    index.insert(p.clone(), pos);
                    elements.push(p);
                    pos
                }
            };
            row.push(pos);
        }
        right_mul.push(row);
        head += 1;
    }
    let generator_positions = right_mul[0].clone();
    let order = elements.len();

    // orders, inverses and power traces at the input conductor
    let mut orders = Vec::with_capacity(order);
    let mut inverses = Vec::with_capacity(order);
    let mut power_traces = Vec::with_capacity(order);
    for g in &elements {
        let mut traces = alloc::vec![Cyclotomic::from_integer(&field, dim as i64)];
        let mut prev = SquareMatrix::identity(&field, dim);
        let mut cur = g.clone();
        while !cur.is_identity() {
            if traces.len() > order {
                return Err(Error::InternalArithmetic(format!("element order exceeds group order")));
            }
            traces.push(cur.trace());
            prev = cur.clone();
            cur = &cur * g;
        }
        orders.push(traces.len() as u32);
        inverses.push(*index.get(&prev).ok_or_else(|| Error::InternalArithmetic(format!("inverse missing")))?);
        power_traces.push(traces);
    }

    let mut session = field.conductor();
    for &k in &orders {
        session = lcm(session, k).ok_or(Error::InvalidConductor(u64::from(session) * u64::from(k)))?;
    }
    let input_conductor = field.conductor();
    let (field, elements, index, power_traces) = if session == input_conductor {
        (field, elements, index, power_traces)
    } else {
        let target = CyclotomicField::new(session)?;
        let elements: Vec<SquareMatrix> = elements.iter().map(|g| g.embed(&target)).collect::<Result<_>>()?;
        let index = elements.iter().cloned().zip(0..).collect();
        let power_traces = power_traces
            .iter()
            .map(|ts| ts.iter().map(|t| t.embed(&target)).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        (target, elements, index, power_traces)
    };

    Ok(FiniteMatrixGroup {
        dim,
        input_conductor,
        field,
        elements,
        index,
        generator_positions,
        right_mul,
        orders,
        inverses,
        power_traces,
        all_positions: (0..order).collect(),
    })
}

impl FiniteMatrixGroup {
    /// Matrix size.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `|G|`.
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Session conductor `N`.
    pub fn conductor(&self) -> u32 {
        self.field.conductor()
    }

    /// Conductor of the generators as given.
    pub fn input_conductor(&self) -> u32 {
        self.input_conductor
    }

    /// The session field.
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    /// All elements, identity first.
    pub fn elements(&self) -> &[SquareMatrix] {
        &self.elements
    }

    /// Element at a position.
    pub fn element(&self, pos: usize) -> &SquareMatrix {
        &self.elements[pos]
    }

    /// Position of a matrix, if it is a member (over the session field).
    pub fn position(&self, m: &SquareMatrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Positions of the generators, in input order.
    pub fn generator_positions(&self) -> &[usize] {
        &self.generator_positions
    }

    /// The generators (over the session field).
    pub fn generators(&self) -> impl Iterator<Item = &SquareMatrix> {
        self.generator_positions.iter().map(move |&p| &self.elements[p])
    }

    /// Order of the element at `pos`.
    pub fn element_order_at(&self, pos: usize) -> u32 {
        self.orders[pos]
    }

    /// Position of the inverse.
    pub fn inverse_of(&self, pos: usize) -> usize {
        self.inverses[pos]
    }

    /// `trace(g^t)` for `t = 0..order(g)`.
    pub fn power_traces(&self, pos: usize) -> &[Cyclotomic] {
        &self.power_traces[pos]
    }

    /// `trace(g^t)` for any `t ≥ 0`.
    pub fn power_trace(&self, pos: usize, t: usize) -> &Cyclotomic {
        let ts = &self.power_traces[pos];
        &ts[t % ts.len()]
    }

    /// Position of `elements[e] · generator s`.
    pub fn right_mul_generator(&self, e: usize, s: usize) -> usize {
        self.right_mul[e][s]
    }

    /// Position of `elements[a] · elements[b]`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let p = &self.elements[a] * &self.elements[b];
        *self.index.get(&p).expect("group is closed under multiplication")
    }

    /// Exponent: lcm of element orders.
    pub fn exponent(&self) -> u32 {
        self.orders.iter().fold(1, |acc, &k| lcm(acc, k).expect("bounded by session conductor"))
    }

    /// Positions `0..|G|`.
    pub fn all_positions(&self) -> &[usize] {
        &self.all_positions
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::field;

    #[test]
    fn minus_identity() {
        let f = field(1).unwrap();
        let g = SquareMatrix::scalar(&Cyclotomic::from_integer(&f, -1), 2);
        let grp = closure(&[g], DEFAULT_CLOSURE_CAP).unwrap();
        assert_eq!(grp.order(), 2);
        assert_eq!(grp.conductor(), 2);
        assert!(grp.element(0).is_identity());
        assert_eq!(grp.inverse_of(1), 1);
    }

    #[test]
    fn errors() {
        let f = field(1).unwrap();
        let two = SquareMatrix::scalar(&Cyclotomic::from_integer(&f, 2), 2);
        assert_eq!(closure(&[two], 50).unwrap_err(), Error::NotFiniteOrCapTooSmall { cap: 50 });
        let sing = SquareMatrix::scalar(&Cyclotomic::zero(&f), 2);
        let id = SquareMatrix::identity(&f, 2);
        assert_eq!(closure(&[id, sing], 10).unwrap_err(), Error::SingularGenerator { index: 1 });
        assert!(closure(&[], 10).is_err());
    }

    #[test]
    fn element_orders() {
        let f7 = field(7).unwrap();
        let z = |e| Cyclotomic::zeta_pow(&f7, e);
        assert_eq!(element_order(&SquareMatrix::identity(&f7, 3), 10).unwrap(), 1);
        assert_eq!(element_order(&SquareMatrix::diagonal(&[z(1), z(2), z(4)]), 10).unwrap(), 7);
        assert_eq!(element_order(&SquareMatrix::permutation(&f7, &[1, 2, 0]), 10).unwrap(), 3);
        assert_eq!(
            element_order(&SquareMatrix::diagonal(&[z(1), z(2), z(4)]), 5).unwrap_err(),
            Error::OrderOverflow { cap: 5 }
        );
    }
}
