//! The JSON report format, schema version 1.

use excq_core::classify::{ReidTai, SingularityReport, Witness};
use excq_core::exactnum::{Cyclotomic, Rational};
use excq_core::reptheory::SemiinvariantDegree;
use excq_core::HomogeneousPolynomial;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::groupfile::GroupDescriptionFile;

pub const SCHEMA_VERSION: &str = "1";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coeff: String,
}

/// Terms in graded lexicographic order, `x1^d` first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub degree: u32,
    pub terms: Vec<TermJson>,
}

impl PolynomialJson {
    pub fn new(p: &HomogeneousPolynomial) -> Self {
        let mut terms: Vec<TermJson> =
            p.terms().map(|(e, c)| TermJson { exponents: e.to_vec(), coeff: c.to_string() }).collect();
        terms.reverse();
        PolynomialJson { degree: p.degree(), terms }
    }

    #[cfg(test)]
    pub fn to_polynomial(
        &self,
        field: &std::sync::Arc<excq_core::CyclotomicField>, num_vars: usize,
    ) -> excq_core::Result<HomogeneousPolynomial> {
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((t.exponents.clone(), Cyclotomic::parse_literal(&t.coeff, field)?)))
            .collect::<excq_core::Result<Vec<_>>>()?;
        if terms.is_empty() {
            return Ok(HomogeneousPolynomial::zero(field, num_vars, self.degree));
        }
        HomogeneousPolynomial::from_terms(field, num_vars, terms)
    }
}

fn literals(values: &[Cyclotomic]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SemiinvariantJson {
    pub polynomial: PolynomialJson,
    /// Character values on the generators, in order.
    pub character: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub degree: usize,
    pub dimension: u64,
    pub basis: Vec<SemiinvariantJson>,
}

impl DegreeJson {
    pub fn new(d: &SemiinvariantDegree) -> Self {
        DegreeJson {
            degree: d.degree,
            dimension: d.dimension,
            basis: d
                .basis
                .iter()
                .zip(&d.characters)
                .map(|(p, chi)| SemiinvariantJson { polynomial: PolynomialJson::new(p), character: literals(chi) })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummaryJson {
    pub dimension: usize,
    pub order: usize,
    pub input_conductor: u32,
    pub conductor: u32,
    pub center_order: usize,
    pub scalar_order: usize,
    pub in_special_linear: bool,
    pub reflection_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureJson {
    pub kind: String,
    pub primitive_letter: Option<String>,
    pub collineation_order: usize,
    pub transitive: Option<bool>,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub degree: usize,
    pub dimension: u64,
    pub polynomial: PolynomialJson,
    pub character: Vec<String>,
}

impl WitnessJson {
    fn new(w: &Witness) -> Self {
        WitnessJson {
            degree: w.degree,
            dimension: w.dimension,
            polynomial: PolynomialJson::new(&w.polynomial),
            character: literals(&w.character),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictJson {
    pub status: String,
    pub reason: String,
    pub witness: Option<WitnessJson>,
}

/// Rationals are written `p/q` (or `p`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgesJson {
    pub min_age: String,
    pub canonical: bool,
    pub terminal: bool,
    /// Upper bound on the minimal discrepancy, from the scalar subgroup.
    pub center_discrepancy_bound: String,
}

impl AgesJson {
    fn new(rt: &ReidTai) -> Self {
        AgesJson {
            min_age: rational(&rt.min_age),
            canonical: rt.canonical,
            terminal: rt.terminal,
            center_discrepancy_bound: rational(&rt.center_discrepancy_bound),
        }
    }
}

pub fn rational(r: &Rational) -> String {
    r.to_string()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub name: String,
    pub summary: SummaryJson,
    pub structure: StructureJson,
    pub semiinvariants: Vec<DegreeJson>,
    pub verdict: VerdictJson,
    pub ages: Option<AgesJson>,
}

impl ReportJson {
    pub fn new(r: &SingularityReport) -> Self {
        let s = &r.summary;
        ReportJson {
            name: r.name.clone(),
            summary: SummaryJson {
                dimension: s.dim,
                order: s.order,
                input_conductor: s.input_conductor,
                conductor: s.conductor,
                center_order: s.center_order,
                scalar_order: s.scalar_order,
                in_special_linear: s.in_special_linear,
                reflection_count: s.reflection_count,
            },
            structure: StructureJson {
                kind: r.tag.kind.as_str().to_string(),
                primitive_letter: r.tag.primitive_letter.map(String::from),
                collineation_order: r.tag.collineation_order,
                transitive: r.tag.transitive,
                note: r.tag.note.clone(),
            },
            semiinvariants: r.semiinvariants.degrees.iter().map(DegreeJson::new).collect(),
            verdict: VerdictJson {
                status: r.verdict.status.as_str().to_string(),
                reason: r.verdict.reason.clone(),
                witness: r.verdict.witness.as_ref().map(WitnessJson::new),
            },
            ages: r.ages.as_ref().map(AgesJson::new),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptionsJson {
    pub max_degree: usize,
    pub with_basis: bool,
}

/// Everything covered by the canonical hash.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportBody {
    pub schema_version: String,
    pub tool_version: String,
    pub input: GroupDescriptionFile,
    pub provenance: Option<String>,
    pub options: OptionsJson,
    pub report: ReportJson,
}

impl ReportBody {
    pub fn canonical_bytes(&self) -> Vec<u8> {
        serde_json::to_vec(self).expect("report bodies contain only strings, integers and booleans")
    }

    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_bytes()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
    pub cache_hit: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    #[serde(flatten)]
    pub body: ReportBody,
    pub canonical_sha256: String,
    pub timing: Timing,
}

impl ReportDocument {
    pub fn new(body: ReportBody, timing: Timing) -> Self {
        let canonical_sha256 = body.sha256();
        ReportDocument { body, canonical_sha256, timing }
    }
}
