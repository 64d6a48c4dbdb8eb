use alloc::vec;
use alloc::vec::Vec;

use super::{closure, FiniteMatrixGroup, SquareMatrix, DEFAULT_CLOSURE_CAP};
use crate::Result;

/// Anything that is a set of elements of an enumerated group: the group
/// itself or one of its subgroups. Averaging operations take this.
pub trait GroupView {
    /// The ambient enumerated group.
    fn group(&self) -> &FiniteMatrixGroup;
    /// Positions (in the ambient group) of the members, sorted.
    fn positions(&self) -> &[usize];
    /// Number of members.
    fn size(&self) -> usize {
        self.positions().len()
    }
}

impl GroupView for FiniteMatrixGroup {
    fn group(&self) -> &FiniteMatrixGroup {
        self
    }
    fn positions(&self) -> &[usize] {
        self.all_positions()
    }
}

/// A subgroup, as a sorted list of positions in its parent.
#[derive(Clone, Debug)]
pub struct Subgroup<'a> {
    parent: &'a FiniteMatrixGroup,
    members: Vec<usize>,
}

impl GroupView for Subgroup<'_> {
    fn group(&self) -> &FiniteMatrixGroup {
        self.parent
    }
    fn positions(&self) -> &[usize] {
        &self.members
    }
}

impl<'a> Subgroup<'a> {
    /// The subgroup generated by the elements at `seeds`.
    pub fn generated_by(parent: &'a FiniteMatrixGroup, seeds: &[usize]) -> Self {
        let mut member = vec![false; parent.order()];
        member[0] = true;
        let mut queue = vec![0usize];
        let mut head = 0;
        while head < queue.len() {
            let e = queue[head];
            head += 1;
            for &s in seeds {
                let p = parent.mul(e, s);
                if !member[p] {
                    member[p] = true;
                    queue.push(p);
                }
            }
        }
        queue.sort_unstable();
        Subgroup { parent, members: queue }
    }

    /// Wraps a position set already known to be a subgroup.
    pub(crate) fn from_sorted(parent: &'a FiniteMatrixGroup, members: Vec<usize>) -> Self {
        Subgroup { parent, members }
    }

    /// The parent group.
    pub fn parent(&self) -> &'a FiniteMatrixGroup {
        self.parent
    }

    /// Member positions, sorted.
    pub fn member_positions(&self) -> &[usize] {
        &self.members
    }

    /// `|H|`.
    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Membership test.
    pub fn contains(&self, pos: usize) -> bool {
        self.members.binary_search(&pos).is_ok()
    }

    /// A small generating set, chosen greedily in position order.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut current = Subgroup::generated_by(self.parent, &gens);
        for &p in &self.members {
            if current.order() == self.order() {
                break;
            }
            if !current.contains(p) {
                gens.push(p);
                current = Subgroup::generated_by(self.parent, &gens);
            }
        }
        gens
    }

    /// Re-enumerates the subgroup as a standalone group from
    /// [`generating_set`](Self::generating_set).
    pub fn to_group(&self) -> Result<FiniteMatrixGroup> {
        let gens: Vec<SquareMatrix> = self.generating_set().iter().map(|&p| self.parent.element(p).clone()).collect();
        let gens = if gens.is_empty() { vec![self.parent.element(0).clone()] } else { gens };
        closure(&gens, DEFAULT_CLOSURE_CAP)
    }
}

fn commutator(g: &FiniteMatrixGroup, a: usize, b: usize) -> usize {
    let ai = g.inverse_of(a);
    let bi = g.inverse_of(b);
    g.mul(g.mul(ai, bi), g.mul(a, b))
}

/// The derived subgroup `[G, G]`, as the normal closure of the commutators of
/// generator pairs.
pub fn commutator_subgroup(g: &FiniteMatrixGroup) -> Subgroup<'_> {
    let gens = g.generator_positions();
    let mut seeds: Vec<usize> = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            let c = commutator(g, a, b);
            if c != 0 && !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    let mut sub = Subgroup::generated_by(g, &seeds);
    let mut next = 0;
    while next < seeds.len() {
        let t = seeds[next];
        next += 1;
        for &s in gens {
            let conj = g.mul(g.mul(g.inverse_of(s), t), s);
            if !sub.contains(conj) {
                seeds.push(conj);
                sub = Subgroup::generated_by(g, &seeds);
            }
        }
    }
    sub
}

/// `[G, G]` from all `|G|²` commutators. Quadratic; kept as a reference for
/// cross-checking [`commutator_subgroup`] on small groups.
pub fn commutator_subgroup_all_pairs(g: &FiniteMatrixGroup) -> Subgroup<'_> {
    let n = g.order();
    let mut seen = vec![false; n];
    let mut seeds = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let c = commutator(g, a, b);
            if !seen[c] {
                seen[c] = true;
                seeds.push(c);
            }
        }
    }
    Subgroup::generated_by(g, &seeds)
}

/// The center (elements commuting with every generator) and the scalar
/// subgroup `G ∩ ℂ*`.
pub fn center_and_scalars(g: &FiniteMatrixGroup) -> (Subgroup<'_>, Subgroup<'_>) {
    let gens: Vec<&SquareMatrix> = g.generators().collect();
    let mut center = Vec::new();
    let mut scalars = Vec::new();
    for (pos, e) in g.elements().iter().enumerate() {
        if e.as_scalar().is_some() {
            scalars.push(pos);
            center.push(pos);
        } else if gens.iter().all(|s| &(e * *s) == &(*s * e)) {
            center.push(pos);
        }
    }
    (Subgroup::from_sorted(g, center), Subgroup::from_sorted(g, scalars))
}
