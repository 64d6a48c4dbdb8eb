//! Built-in groups with exact generators, expected invariants and
//! provenance, plus a self-check that recomputes every expected field.
//!
//! Dimension 2: `cyclic_<n>` (`diag(ζ_n, ζ_n⁻¹)`), `binary_dihedral_<n>`
//! (order `4n`) and the binary tetrahedral, octahedral and icosahedral
//! groups. Dimension 3: the Klein, Hessian, Valentiner–Wiman and
//! icosahedral groups, the Hessian subgroups of types E and F, and three
//! small nonprimitive examples.

mod hesse;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

pub use hesse::{hesse_subgroups, triangles, HesseSubgroups, TrianglePermutation};

use crate::classify::{analyze, AnalyzeOptions, SingularityReport, StructureKind, VerdictStatus};
use crate::exactnum::{field, Cyclotomic, CyclotomicField};
use crate::matgroup::{closure, SquareMatrix, DEFAULT_CLOSURE_CAP};
use crate::{Error, Result};

/// Invariants an entry is expected to have.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    /// `|G|`.
    pub order: usize,
    /// `|G / (G ∩ scalars)|`.
    pub collineation_order: usize,
    /// Determinant 1 generators.
    pub in_special_linear: bool,
    /// Number of pseudo-reflections.
    pub reflections: usize,
    /// Structural kind.
    pub kind: StructureKind,
    /// Primitive type letter (dimension 3).
    pub primitive_letter: Option<char>,
    /// Expected verdict, when the criterion applies.
    pub exceptional: Option<bool>,
    /// Degree of the lowest semiinvariant for nonexceptional entries.
    pub witness_degree: Option<usize>,
}

/// A built-in group.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// Identifier.
    pub name: String,
    /// Matrix size.
    pub dimension: usize,
    /// Conductor of the generator entries.
    pub conductor: u32,
    /// Generators.
    pub generators: Vec<SquareMatrix>,
    /// Expected invariants.
    pub expected: Expected,
    /// Where the construction comes from.
    pub provenance: String,
}

/// Names listed by `catalog list`, in a fixed order. `cyclic_<n>` and
/// `binary_dihedral_<n>` are also accepted for other `n`.
pub const PUBLISHED_NAMES: &[&str] = &[
    "cyclic_2",
    "cyclic_3",
    "cyclic_5",
    "cyclic_6",
    "binary_dihedral_2",
    "binary_dihedral_3",
    "binary_dihedral_5",
    "binary_tetrahedral",
    "binary_octahedral",
    "binary_icosahedral",
    "klein_168",
    "klein_504",
    "hessian_648",
    "f_216",
    "e_108",
    "icosahedral_60",
    "wiman_1080",
    "monomial_D_example",
    "abelian_example",
    "reducible_example",
];

/// The dimension-3 names.
pub const DIM3_NAMES: &[&str] = &[
    "klein_168",
    "klein_504",
    "hessian_648",
    "f_216",
    "e_108",
    "icosahedral_60",
    "wiman_1080",
    "monomial_D_example",
    "abelian_example",
    "reducible_example",
];

const MAX_PARAMETER: u32 = 1000;

fn lit(f: &Arc<CyclotomicField>, s: &str) -> Cyclotomic {
    Cyclotomic::parse_literal(s, f).expect("built-in literal")
}

fn mat(f: &Arc<CyclotomicField>, rows: &[&[&str]]) -> SquareMatrix {
    SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|s| lit(f, s)).collect()).collect())
        .expect("built-in matrix")
}

fn diag(f: &Arc<CyclotomicField>, d: &[&str]) -> SquareMatrix {
    SquareMatrix::diagonal(&d.iter().map(|s| lit(f, s)).collect::<Vec<_>>())
}

fn cycle3(f: &Arc<CyclotomicField>) -> SquareMatrix {
    mat(f, &[&["0", "1", "0"], &["0", "0", "1"], &["1", "0", "0"]])
}

fn expected(
    order: usize,
    collineation_order: usize,
    kind: StructureKind,
    letter: Option<char>,
    exceptional: bool,
    witness_degree: Option<usize>,
) -> Expected {
    Expected {
        order,
        collineation_order,
        in_special_linear: true,
        reflections: 0,
        kind,
        primitive_letter: letter,
        exceptional: Some(exceptional),
        witness_degree,
    }
}

fn entry(name: &str, generators: Vec<SquareMatrix>, expected: Expected, provenance: &str) -> CatalogEntry {
    CatalogEntry {
        name: name.to_string(),
        dimension: generators[0].dim(),
        conductor: generators[0].conductor(),
        generators,
        expected,
        provenance: provenance.to_string(),
    }
}

fn parameter(name: &str, prefix: &str) -> Option<u32> {
    name.strip_prefix(prefix)?.parse().ok()
}

fn binary_tetrahedral_gens() -> Vec<SquareMatrix> {
    let f = field(4).expect("valid conductor");
    vec![
        diag(&f, &["z", "-z"]),
        mat(&f, &[&["0", "1"], &["-1", "0"]]),
        mat(&f, &[&["1/2 + 1/2*z", "1/2 + 1/2*z"], &["-1/2 + 1/2*z", "1/2 - 1/2*z"]]),
    ]
}

fn klein_gens() -> Vec<SquareMatrix> {
    let f = field(7).expect("valid conductor");
    let sqrt_m7 = lit(&f, "z + z^2 + z^4 - z^3 - z^5 - z^6");
    let scale = &sqrt_m7 * &lit(&f, "1/7");
    let k = mat(
        &f,
        &[
            &["z - z^6", "z^2 - z^5", "z^4 - z^3"],
            &["z^2 - z^5", "z^4 - z^3", "z - z^6"],
            &["z^4 - z^3", "z - z^6", "z^2 - z^5"],
        ],
    )
    .scale(&scale);
    vec![diag(&f, &["z^4", "z^2", "z"]), cycle3(&f), k]
}

fn hessian_gens() -> Vec<SquareMatrix> {
    let f = field(9).expect("valid conductor");
    let inv_root = lit(&f, "z^3 - z^6").inv().expect("nonzero");
    let v = mat(&f, &[&["1", "1", "1"], &["1", "z^3", "z^6"], &["1", "z^6", "z^3"]]).scale(&inv_root);
    vec![diag(&f, &["1", "z^3", "z^6"]), cycle3(&f), v, diag(&f, &["z^2", "z^2", "z^5"])]
}

fn icosahedral_gens(n: u32) -> Vec<SquareMatrix> {
    let f = field(n).expect("valid conductor");
    let e = n / 5;
    let mu1 = format!("1/2*z^{} + 1/2*z^{}", e, 4 * e);
    let mu2 = format!("1/2*z^{} + 1/2*z^{}", 2 * e, 3 * e);
    let h = mat(
        &f,
        &[&["-1/2", &mu2, &mu1], &[&mu2, &mu1, "-1/2"], &[&mu1, "-1/2", &mu2]],
    );
    vec![cycle3(&f), diag(&f, &["1", "-1", "-1"]), h]
}

fn hesse_pair() -> Result<HesseSubgroups> {
    let g = closure(&hessian_gens(), DEFAULT_CLOSURE_CAP)?;
    hesse_subgroups(&g)
}

/// The entry with the given name.
pub fn builtin(name: &str) -> Result<CatalogEntry> {
    use StructureKind::*;
    if let Some(n) = parameter(name, "cyclic_") {
        if !(2..=MAX_PARAMETER).contains(&n) {
            return Err(Error::NoSuchEntry(name.to_string()));
        }
        let f = field(n)?;
        let g = SquareMatrix::diagonal(&[Cyclotomic::zeta_pow(&f, 1), Cyclotomic::zeta_pow(&f, -1)]);
        let scalars = if n % 2 == 0 { 2 } else { 1 };
        return Ok(entry(
            name,
            vec![g],
            expected(n as usize, n as usize / scalars, Abelian, None, false, Some(1)),
            "cyclic subgroup of SL2 (type A in dimension 2)",
        ));
    }
    if let Some(n) = parameter(name, "binary_dihedral_") {
        if !(2..=MAX_PARAMETER).contains(&n) {
            return Err(Error::NoSuchEntry(name.to_string()));
        }
        let f = field(2 * n)?;
        let d = SquareMatrix::diagonal(&[Cyclotomic::zeta_pow(&f, 1), Cyclotomic::zeta_pow(&f, -1)]);
        let j = mat(&f, &[&["0", "1"], &["-1", "0"]]);
        let order = 4 * n as usize;
        return Ok(entry(
            name,
            vec![d, j],
            expected(order, order / 2, ImprimitiveMonomial, None, false, Some(2)),
            "binary dihedral subgroup of SL2 (type D); x1*x2 is a semiinvariant",
        ));
    }
    let e = match name {
        "binary_tetrahedral" => entry(
            name,
            binary_tetrahedral_gens(),
            expected(24, 12, Primitive, None, true, None),
            "binary tetrahedral group 2T in SL2 over Q(i): quaternion units and (1+i+j+k)/2 (surface type E6)",
        ),
        "binary_octahedral" => {
            let f = field(8)?;
            let mut gens: Vec<SquareMatrix> =
                binary_tetrahedral_gens().iter().map(|g| g.embed(&f)).collect::<Result<_>>()?;
            gens.push(diag(&f, &["z", "z^7"]));
            entry(
                name,
                gens,
                expected(48, 24, Primitive, None, true, None),
                "binary octahedral group 2O in SL2: 2T together with diag(z8, z8^7) (surface type E7)",
            )
        }
        "binary_icosahedral" => {
            let f = field(5)?;
            let inv_sqrt5 = lit(&f, "1 + 2*z + 2*z^4").inv()?;
            let t = mat(&f, &[&["-z + z^4", "z^2 - z^3"], &["z^2 - z^3", "z - z^4"]]).scale(&inv_sqrt5);
            entry(
                name,
                vec![diag(&f, &["z^3", "z^2"]), t],
                expected(120, 60, Primitive, None, true, None),
                "binary icosahedral group 2I in SL2 over Q(z5), classical generators of order 5 and 4 (surface type E8)",
            )
        }
        "klein_168" => entry(
            name,
            klein_gens(),
            expected(168, 168, Primitive, Some('J'), true, None),
            "Klein's simple group of order 168 over Q(z7): diag(z^4, z^2, z), the coordinate 3-cycle and the \
             symmetric involution (-1/sqrt(-7))*(z^a - z^-a) with sqrt(-7) = z+z^2+z^4-z^3-z^5-z^6; \
             invariants of degrees 4, 6, 14, 21",
        ),
        "klein_504" => {
            let f = field(21)?;
            let mut gens: Vec<SquareMatrix> = klein_gens().iter().map(|g| g.embed(&f)).collect::<Result<_>>()?;
            gens.push(SquareMatrix::scalar(&Cyclotomic::zeta_pow(&f, 7), 3));
            entry(
                name,
                gens,
                expected(504, 168, Primitive, Some('J'), true, None),
                "the Klein group times the scalars of order 3, the central extension of order 504 in SL3",
            )
        }
        "hessian_648" => entry(
            name,
            hessian_gens(),
            expected(648, 216, Primitive, Some('G'), true, None),
            "Hessian group of order 648 in SL3 over Q(z9): the dilatation diag(1, w, w^2), the cycle (x1 x2 x3), \
             the finite Fourier matrix divided by w - w^2, and the lift z9^2*diag(1, 1, w) of order 9",
        ),
        "f_216" => {
            let h = hesse_pair()?;
            entry(
                name,
                h.f_216.generators().cloned().collect(),
                expected(216, 72, Primitive, Some('F'), true, None),
                "preimage in the Hessian group of the Klein four-group acting on the four triangles of the Hesse \
                 pencil; the first triangle is x1*x2*x3 (the source prints x1x2x2, a typo), and the other three use \
                 (x1 + x2 + w^i x3) as first factor so that all four lie in one pencil",
            )
        }
        "e_108" => {
            let h = hesse_pair()?;
            entry(
                name,
                h.e_108.generators().cloned().collect(),
                expected(108, 36, Primitive, Some('E'), false, Some(3)),
                "preimage in the Hessian group of {1, (t1 t2)(t3 t4)} acting on the four triangles of the Hesse \
                 pencil (see f_216); its degree-3 semiinvariants span x1*x2*x3 and x1^3 + x2^3 + x3^3. \
                 The symmetric functions sigma1, sigma2, sigma3 and Delta of the coordinates describe the same pencil",
            )
        }
        "icosahedral_60" => entry(
            name,
            icosahedral_gens(5),
            expected(60, 60, Primitive, Some('H'), false, Some(2)),
            "rotation group of the icosahedron in SO3 over Q(z5): coordinate 3-cycle, diag(1, -1, -1) and the \
             golden-ratio involution; x1^2 + x2^2 + x3^2 is invariant",
        ),
        "wiman_1080" => {
            let f = field(15)?;
            let mut gens = icosahedral_gens(15);
            gens.push(mat(&f, &[&["-1", "0", "0"], &["0", "0", "-z^5"], &["0", "-z^10", "0"]]));
            entry(
                name,
                gens,
                expected(1080, 360, Primitive, Some('I'), true, None),
                "Valentiner group of order 1080 (triple cover of A6) over Q(z15): the icosahedral generators together \
                 with a monomial involution with entries -w, -w^2; invariants of degrees 6, 12, 30, 45",
            )
        }
        "monomial_D_example" => {
            let f = field(9)?;
            entry(
                name,
                vec![
                    cycle3(&f),
                    mat(&f, &[&["-1", "0", "0"], &["0", "0", "-1"], &["0", "-1", "0"]]),
                    diag(&f, &["z", "z^4", "z^4"]),
                ],
                expected(162, 54, ImprimitiveMonomial, None, false, Some(3)),
                "monomial group in SL3 over Q(z9) without reflections: the 3-cycle, minus the transposition of x2 and \
                 x3, and diag(z, z^4, z^4); x1*x2*x3 is a semiinvariant",
            )
        }
        "abelian_example" => {
            let f = field(7)?;
            entry(
                name,
                vec![diag(&f, &["z", "z^2", "z^4"])],
                expected(7, 7, Abelian, None, false, Some(1)),
                "cyclic group of order 7 in SL3 acting with weights (1, 2, 4)",
            )
        }
        "reducible_example" => {
            let f = field(4)?;
            let one = Cyclotomic::one(&f);
            let gens = binary_tetrahedral_gens()
                .iter()
                .map(|g| {
                    let mut rows = g.rows();
                    for r in &mut rows {
                        r.push(Cyclotomic::zero(&f));
                    }
                    rows.push(vec![Cyclotomic::zero(&f), Cyclotomic::zero(&f), one.clone()]);
                    SquareMatrix::from_rows(rows)
                })
                .collect::<Result<_>>()?;
            entry(
                name,
                gens,
                expected(24, 24, Reducible, None, false, Some(1)),
                "binary tetrahedral group acting on the first two coordinates and trivially on the third",
            )
        }
        _ => return Err(Error::NoSuchEntry(name.to_string())),
    };
    Ok(e)
}

/// One mismatching field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    /// Field name.
    pub field: &'static str,
    /// Expected value.
    pub expected: String,
    /// Computed value.
    pub actual: String,
}

/// Outcome of verifying one entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    /// Entry name.
    pub name: String,
    /// Mismatching fields.
    pub mismatches: Vec<Mismatch>,
    /// Error that stopped the check, if any.
    pub error: Option<String>,
}

impl VerificationRecord {
    /// No mismatch and no error.
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.error.is_none()
    }
}

fn check<T: PartialEq + core::fmt::Debug>(out: &mut Vec<Mismatch>, field: &'static str, expected: T, actual: T) {
    if expected != actual {
        out.push(Mismatch { field, expected: format!("{expected:?}"), actual: format!("{actual:?}") });
    }
}

/// Recomputes every expected field of `entry`. Returns the report when the
/// group could be analyzed.
pub fn verify_entry(entry: &CatalogEntry) -> (VerificationRecord, Option<SingularityReport>) {
    let mut record = VerificationRecord { name: entry.name.clone(), mismatches: Vec::new(), error: None };
    let group = match closure(&entry.generators, DEFAULT_CLOSURE_CAP) {
        Ok(g) => g,
        Err(e) => {
            record.error = Some(format!("{e}"));
            return (record, None);
        }
    };
    let exp = &entry.expected;
    let m = &mut record.mismatches;
    check(m, "order", exp.order, group.order());
    if group.order() != exp.order {
        return (record, None);
    }
    let options = AnalyzeOptions { max_degree: 0, with_basis: false, ..AnalyzeOptions::default() };
    let report = match analyze(&entry.name, &group, &options) {
        Ok(r) => r,
        Err(e) => {
            record.error = Some(format!("{e}"));
            return (record, None);
        }
    };
    let s = &report.summary;
    let m = &mut record.mismatches;
    check(m, "collineation_order", exp.collineation_order, report.tag.collineation_order);
    check(m, "in_special_linear", exp.in_special_linear, s.in_special_linear);
    check(m, "reflections", exp.reflections, s.reflection_count);
    check(m, "kind", exp.kind, report.tag.kind);
    check(m, "primitive_letter", exp.primitive_letter, report.tag.primitive_letter);
    let status = match report.verdict.status {
        VerdictStatus::Exceptional => Some(true),
        VerdictStatus::Nonexceptional => Some(false),
        VerdictStatus::NotApplicable => None,
    };
    check(m, "exceptional", exp.exceptional, status);
    check(m, "witness_degree", exp.witness_degree, report.verdict.witness.as_ref().map(|w| w.degree));
    (record, Some(report))
}

/// Verifies every published entry; failures do not stop later entries.
pub fn verify_catalog() -> Vec<VerificationRecord> {
    PUBLISHED_NAMES
        .iter()
        .map(|name| match builtin(name) {
            Ok(e) => verify_entry(&e).0,
            Err(e) => VerificationRecord { name: name.to_string(), mismatches: Vec::new(), error: Some(format!("{e}")) },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_entries_verify() {
        for name in ["cyclic_5", "binary_dihedral_3", "binary_tetrahedral", "abelian_example", "reducible_example"] {
            let (rec, _) = verify_entry(&builtin(name).unwrap());
            assert!(rec.passed(), "{rec:?}");
        }
    }

    #[test]
    fn unknown_names() {
        assert_eq!(builtin("nope").unwrap_err(), Error::NoSuchEntry("nope".into()));
        assert!(builtin("cyclic_0").is_err());
        assert!(builtin("cyclic_x").is_err());
        assert!(builtin("binary_dihedral_1").is_err());
    }

    #[test]
    fn tampered_generator_fails_on_order() {
        let mut e = builtin("klein_168").unwrap();
        let f = e.generators[2].field().clone();
        e.generators[2] = e.generators[2].scale(&lit(&f, "-1"));
        let (rec, _) = verify_entry(&e);
        assert!(!rec.passed());
        assert!(rec.error.is_some() || rec.mismatches.iter().any(|m| m.field == "order"));
    }
}
