//! Structural tags, the semiinvariant exceptionality test, Reid–Tai ages,
//! and the canonical / ε-log-terminal screens.
//!
//! For a finite `G ⊂ GL_m(ℂ)` without reflections and `m ∈ {2, 3}`, the
//! quotient `ℂ^m/G` is exceptional exactly when `G` has no semiinvariant of
//! degree `≤ m`. The verdict here applies that test literally. Ages follow
//! the Reid–Tai convention: the quotient is canonical iff every non-identity
//! element has age `≥ 1` (terminal iff `> 1`).

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::exactnum::{Cyclotomic, Rational};
use crate::matgroup::{
    center_and_scalars, eigen_multiplicities, in_special_linear, monomial_system, reflections, FiniteMatrixGroup,
    SquareMatrix,
};
use crate::reptheory::{character_norm, semiinv_basis, semiinvariant_report, SemiinvariantReport, DEFAULT_WORK_BOUND};
use crate::{Error, Result};

/// Coarse structure of a finite linear group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StructureKind {
    /// All generators commute.
    Abelian,
    /// The representation has a proper invariant subspace.
    Reducible,
    /// Irreducible and permutes a set of coordinate-like lines.
    ImprimitiveMonomial,
    /// Irreducible and not monomial.
    Primitive,
}

impl StructureKind {
    /// Kebab-case name.
    pub fn as_str(self) -> &'static str {
        match self {
            StructureKind::Abelian => "abelian",
            StructureKind::Reducible => "reducible",
            StructureKind::ImprimitiveMonomial => "imprimitive-monomial",
            StructureKind::Primitive => "primitive",
        }
    }
}

/// Collineation orders of the primitive types of `PGL_3`.
pub const PRIMITIVE_TYPES: [(char, usize); 6] = [('E', 36), ('F', 72), ('G', 216), ('H', 60), ('I', 360), ('J', 168)];

/// Structural classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureTag {
    /// Coarse kind.
    pub kind: StructureKind,
    /// Type letter for primitive groups in dimension 3.
    pub primitive_letter: Option<char>,
    /// `|G| / |G ∩ scalars|`.
    pub collineation_order: usize,
    /// Whether a found monomial system is permuted transitively.
    pub transitive: Option<bool>,
    /// Set when a primitive dimension-3 group has an unlisted collineation order.
    pub note: Option<String>,
}

/// Looks up the primitive type letter by collineation order.
pub fn primitive_letter(collineation_order: usize) -> Option<char> {
    PRIMITIVE_TYPES.iter().find(|(_, o)| *o == collineation_order).map(|(c, _)| *c)
}

/// Abelian, then reducible (character norm above 1), then monomial, then
/// primitive with a letter from the collineation order.
pub fn structure_tag(g: &FiniteMatrixGroup) -> Result<StructureTag> {
    let (_, scalars) = center_and_scalars(g);
    let collineation_order = g.order() / scalars.order();
    let mut tag = StructureTag {
        kind: StructureKind::Abelian,
        primitive_letter: None,
        collineation_order,
        transitive: None,
        note: None,
    };
    let gens: Vec<&SquareMatrix> = g.generators().collect();
    let abelian = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| &(*a * *b) == &(*b * *a)));
    if abelian {
        return Ok(tag);
    }
    if character_norm(g)? > Rational::from_integer(1.into()) {
        tag.kind = StructureKind::Reducible;
        return Ok(tag);
    }
    if let Some(system) = monomial_system(g)? {
        tag.kind = StructureKind::ImprimitiveMonomial;
        tag.transitive = Some(system.is_transitive());
        return Ok(tag);
    }
    tag.kind = StructureKind::Primitive;
    if g.dim() == 3 {
        tag.primitive_letter = primitive_letter(collineation_order);
        if tag.primitive_letter.is_none() {
            tag.note = Some(format!("unknown-primitive-type: collineation order {collineation_order}"));
        }
    }
    Ok(tag)
}

/// Outcome of the exceptionality test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VerdictStatus {
    /// No semiinvariant of degree `≤ dim`.
    Exceptional,
    /// A semiinvariant of degree `≤ dim` exists.
    Nonexceptional,
    /// The criterion does not apply (reflections, or dimension outside 2..=3).
    NotApplicable,
}

impl VerdictStatus {
    /// Kebab-case name.
    pub fn as_str(self) -> &'static str {
        match self {
            VerdictStatus::Exceptional => "exceptional",
            VerdictStatus::Nonexceptional => "nonexceptional",
            VerdictStatus::NotApplicable => "not-applicable",
        }
    }
}

/// A lowest-degree semiinvariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    /// Its degree.
    pub degree: usize,
    /// `s_d` at that degree.
    pub dimension: u64,
    /// One semiinvariant.
    pub polynomial: crate::HomogeneousPolynomial,
    /// Its character on the generators.
    pub character: Vec<Cyclotomic>,
}

/// Exceptionality verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExceptionalityVerdict {
    /// Outcome.
    pub status: VerdictStatus,
    /// Present exactly for nonexceptional groups.
    pub witness: Option<Witness>,
    /// Human-readable justification.
    pub reason: String,
}

/// Applies the semiinvariant criterion in degrees `1..=dim`.
pub fn exceptionality(g: &FiniteMatrixGroup) -> Result<ExceptionalityVerdict> {
    let dims = semiinvariant_report(g, g.dim(), false, DEFAULT_WORK_BOUND)?;
    exceptionality_from(g, &dims, !reflections(g).is_empty(), DEFAULT_WORK_BOUND)
}

fn exceptionality_from(
    g: &FiniteMatrixGroup,
    dims: &SemiinvariantReport,
    has_reflections: bool,
    work_bound: u128,
) -> Result<ExceptionalityVerdict> {
    let dim = g.dim();
    if has_reflections {
        return Ok(ExceptionalityVerdict {
            status: VerdictStatus::NotApplicable,
            witness: None,
            reason: String::from("reflections-present: the criterion assumes a group without reflections"),
        });
    }
    if !(2..=3).contains(&dim) {
        return Ok(ExceptionalityVerdict {
            status: VerdictStatus::NotApplicable,
            witness: None,
            reason: format!(
                "dimension-out-of-range: the criterion is proved only in dimensions 2 and 3 (dimension {dim}); \
                 whether semiinvariant data decides exceptionality beyond that is an open question"
            ),
        });
    }
    let first = (1..=dim).find(|&d| dims.dimension(d).unwrap_or(0) > 0);
    match first {
        None => Ok(ExceptionalityVerdict {
            status: VerdictStatus::Exceptional,
            witness: None,
            reason: format!("no semiinvariants of degree <= {dim}"),
        }),
        Some(d) => {
            let entry = semiinv_basis(g, d, work_bound)?;
            let witness = Witness {
                degree: d,
                dimension: entry.dimension,
                polynomial: entry.basis[0].clone(),
                character: entry.characters[0].clone(),
            };
            Ok(ExceptionalityVerdict {
                status: VerdictStatus::Nonexceptional,
                witness: Some(witness),
                reason: format!("semiinvariant of degree {d} (s_{d} = {})", entry.dimension),
            })
        }
    }
}

/// Age `Σ a/k` over the eigenvalues `ζ_k^a` of `g`.
pub fn age(g: &SquareMatrix) -> Result<Rational> {
    Ok(eigen_multiplicities(g, crate::matgroup::DEFAULT_CLOSURE_CAP)?.age())
}

/// Reid–Tai data of a group without reflections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReidTai {
    /// Least age of a non-identity element.
    pub min_age: Rational,
    /// `min_age ≥ 1`.
    pub canonical: bool,
    /// `min_age > 1`.
    pub terminal: bool,
    /// `−1 + dim / r` with `r = |G ∩ scalars|`: the discrepancy of the
    /// divisor from blowing up the origin of `ℂ^dim / μ_r`, an upper bound
    /// on the minimal discrepancy.
    pub center_discrepancy_bound: Rational,
}

/// Minimal age over non-identity elements and the derived flags.
pub fn reid_tai(g: &FiniteMatrixGroup) -> Result<ReidTai> {
    if g.order() == 1 {
        return Err(Error::TrivialGroup);
    }
    if !reflections(g).is_empty() {
        return Err(Error::ReflectionsPresent);
    }
    reid_tai_unchecked(g)
}

fn reid_tai_unchecked(g: &FiniteMatrixGroup) -> Result<ReidTai> {
    let mut min_age: Option<Rational> = None;
    for pos in 1..g.order() {
        let a = g.spectrum(pos)?.age();
        if min_age.as_ref().is_none_or(|m| a < *m) {
            min_age = Some(a);
        }
    }
    let min_age = min_age.ok_or(Error::TrivialGroup)?;
    let one = Rational::from_integer(1.into());
    let (_, scalars) = center_and_scalars(g);
    let bound = Rational::new((g.dim() as i64).into(), (scalars.order() as i64).into()) - &one;
    Ok(ReidTai { canonical: min_age >= one, terminal: min_age > one, min_age, center_discrepancy_bound: bound })
}

/// Necessary condition for `ε`-log-terminality: `min_age > ε`.
///
/// Element ages only bound the minimal discrepancy from above, so `false`
/// rules the quotient out while `true` does not certify it.
pub fn epsilon_screen(g: &FiniteMatrixGroup, epsilon: &Rational) -> Result<bool> {
    Ok(reid_tai(g)?.min_age > *epsilon)
}

/// Group-level summary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSummary {
    /// Matrix size.
    pub dim: usize,
    /// `|G|`.
    pub order: usize,
    /// Conductor of the input generators.
    pub input_conductor: u32,
    /// Session conductor (input conductor and all element orders).
    pub conductor: u32,
    /// `|Z(G)|`.
    pub center_order: usize,
    /// `|G ∩ scalars|`.
    pub scalar_order: usize,
    /// All generators have determinant 1.
    pub in_special_linear: bool,
    /// Number of pseudo-reflections.
    pub reflection_count: usize,
}

/// Everything the analysis reports for one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularityReport {
    /// Label (catalog name or file name).
    pub name: String,
    /// Group summary.
    pub summary: GroupSummary,
    /// Structural tag.
    pub tag: StructureTag,
    /// Semiinvariants in degrees `1..=max(dim, requested)`.
    pub semiinvariants: SemiinvariantReport,
    /// Exceptionality verdict.
    pub verdict: ExceptionalityVerdict,
    /// Reid–Tai data; absent with reflections or for the trivial group.
    pub ages: Option<ReidTai>,
}

/// Knobs for [`analyze`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeOptions {
    /// Highest semiinvariant degree reported; at least `dim` is always used.
    pub max_degree: usize,
    /// Compute explicit semiinvariant bases for every reported degree.
    pub with_basis: bool,
    /// Limit on `|monomials|²·|H|` for explicit bases.
    pub work_bound: u128,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions { max_degree: 0, with_basis: true, work_bound: DEFAULT_WORK_BOUND }
    }
}

/// Full analysis of one group.
pub fn analyze(name: &str, g: &FiniteMatrixGroup, options: &AnalyzeOptions) -> Result<SingularityReport> {
    let (center, scalars) = center_and_scalars(g);
    let refl = reflections(g);
    let summary = GroupSummary {
        dim: g.dim(),
        order: g.order(),
        input_conductor: g.input_conductor(),
        conductor: g.conductor(),
        center_order: center.order(),
        scalar_order: scalars.order(),
        in_special_linear: in_special_linear(g),
        reflection_count: refl.len(),
    };
    let tag = structure_tag(g)?;
    let max_degree = options.max_degree.max(g.dim());
    let semiinvariants = semiinvariant_report(g, max_degree, options.with_basis, options.work_bound)?;
    let verdict = exceptionality_from(g, &semiinvariants, !refl.is_empty(), options.work_bound)?;
    let ages = if refl.is_empty() && g.order() > 1 { Some(reid_tai_unchecked(g)?) } else { None };
    Ok(SingularityReport { name: String::from(name), summary, tag, semiinvariants, verdict, ages })
}

/// Reports that are exceptional and canonical.
pub fn canonical_exceptional_screen(reports: &[SingularityReport]) -> Vec<&SingularityReport> {
    reports
        .iter()
        .filter(|r| r.verdict.status == VerdictStatus::Exceptional && r.ages.as_ref().is_some_and(|a| a.canonical))
        .collect()
}
