//! Plain-text rendering.

use std::f64::consts::TAU;
use std::fmt::Write;

use excq_core::catalog::{CatalogEntry, VerificationRecord};
use excq_core::exactnum::{Cyclotomic, CyclotomicField};
use num_traits::ToPrimitive;

use crate::report::{PolynomialJson, ReportDocument, SemiinvariantJson};

/// Renders literals, optionally followed by a decimal approximation.
pub struct Literals {
    field: Option<std::sync::Arc<CyclotomicField>>,
}

impl Literals {
    pub fn new(conductor: u32, approx: bool) -> Self {
        Literals { field: approx.then(|| CyclotomicField::new(conductor).ok()).flatten() }
    }

    pub fn show(&self, lit: &str) -> String {
        let Some(field) = &self.field else { return lit.to_string() };
        match Cyclotomic::parse_literal(lit, field) {
            Ok(c) => {
                let (re, im) = approximate(&c);
                format!("{lit} [~ {}]", complex(re, im))
            }
            Err(_) => lit.to_string(),
        }
    }

    pub fn polynomial(&self, p: &PolynomialJson) -> String {
        if p.terms.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = p
            .terms
            .iter()
            .map(|t| {
                let mono: Vec<String> = t
                    .exponents
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                    .collect();
                let mono = mono.join("*");
                match (t.coeff.as_str(), mono.is_empty()) {
                    ("1", false) if self.field.is_none() => mono,
                    (_, true) => format!("({})", self.show(&t.coeff)),
                    _ => format!("({})*{mono}", self.show(&t.coeff)),
                }
            })
            .collect();
        terms.join(" + ")
    }

    fn semiinvariant(&self, s: &SemiinvariantJson) -> String {
        let chi: Vec<String> = s.character.iter().map(|c| self.show(c)).collect();
        format!("{}    character [{}]", self.polynomial(&s.polynomial), chi.join(", "))
    }
}

/// Floating-point value of an exact cyclotomic, for display only.
pub fn approximate(c: &Cyclotomic) -> (f64, f64) {
    let n = f64::from(c.conductor());
    c.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (k, q)| {
        let q = q.to_f64().unwrap_or(f64::NAN);
        let theta = TAU * k as f64 / n;
        (re + q * theta.cos(), im + q * theta.sin())
    })
}

fn complex(re: f64, im: f64) -> String {
    let clean = |x: f64| if x.abs() < 1e-12 { 0.0 } else { x };
    let (re, im) = (clean(re), clean(im));
    if im == 0.0 {
        format!("{re:.6}")
    } else {
        format!("{re:.6}{}{:.6}i", if im < 0.0 { "-" } else { "+" }, im.abs())
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn report(doc: &ReportDocument, approx: bool) -> String {
    let r = &doc.body.report;
    let s = &r.summary;
    let lits = Literals::new(s.conductor, approx);
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", r.name);
    let _ = writeln!(
        out,
        "group: dimension {}, order {}, conductor {} (input {})",
        s.dimension, s.order, s.conductor, s.input_conductor
    );
    let _ = writeln!(out, "center: order {}, scalars {}", s.center_order, s.scalar_order);
    let _ = writeln!(out, "special linear: {}; reflections: {}", yes(s.in_special_linear), s.reflection_count);
    let st = &r.structure;
    let letter = st.primitive_letter.as_deref().map(|l| format!(" (type {l})")).unwrap_or_default();
    let transitive = match st.transitive {
        Some(t) => format!(", {}", if t { "transitive" } else { "intransitive" }),
        None => String::new(),
    };
    let _ = writeln!(out, "structure: {}{letter}{transitive}, collineation order {}", st.kind, st.collineation_order);
    if let Some(note) = &st.note {
        let _ = writeln!(out, "  note: {note}");
    }
    let _ = writeln!(out, "semiinvariants:");
    for d in &r.semiinvariants {
        let _ = writeln!(out, "  degree {}: dimension {}", d.degree, d.dimension);
        for b in &d.basis {
            let _ = writeln!(out, "    {}", lits.semiinvariant(b));
        }
    }
    let _ = writeln!(out, "verdict: {}", r.verdict.status);
    let _ = writeln!(out, "  reason: {}", r.verdict.reason);
    if let Some(w) = &r.verdict.witness {
        let chi: Vec<String> = w.character.iter().map(|c| lits.show(c)).collect();
        let _ = writeln!(out, "  witness: degree {}, {} independent", w.degree, w.dimension);
        let _ = writeln!(out, "    {}    character [{}]", lits.polynomial(&w.polynomial), chi.join(", "));
    }
    match &r.ages {
        Some(a) => {
            let _ = writeln!(
                out,
                "ages: minimum {}, canonical {}, terminal {}, center discrepancy bound {} (upper bound)",
                a.min_age,
                yes(a.canonical),
                yes(a.terminal),
                a.center_discrepancy_bound
            );
        }
        None => {
            let _ = writeln!(out, "ages: not computed");
        }
    }
    if let Some(p) = &doc.body.provenance {
        let _ = writeln!(out, "provenance: {p}");
    }
    let _ = writeln!(out, "sha256: {}", doc.canonical_sha256);
    let _ = writeln!(out, "elapsed: {} ms{}", doc.timing.elapsed_ms, if doc.timing.cache_hit { " (cached)" } else { "" });
    out
}

pub fn molien(coeffs: &[u64]) -> String {
    coeffs.iter().enumerate().map(|(d, a)| format!("{d} {a}\n")).collect()
}

pub fn semiinvariants(degree: usize, dimension: u64, basis: &[SemiinvariantJson], conductor: u32, approx: bool) -> String {
    let lits = Literals::new(conductor, approx);
    let mut out = format!("degree {degree}: dimension {dimension}\n");
    for b in basis {
        let _ = writeln!(out, "  {}", lits.semiinvariant(b));
    }
    out
}

pub fn entry(e: &CatalogEntry) -> String {
    let x = &e.expected;
    let mut out = String::new();
    let _ = writeln!(out, "name: {}", e.name);
    let _ = writeln!(out, "dimension: {}, conductor: {}", e.dimension, e.conductor);
    for (k, g) in e.generators.iter().enumerate() {
        let _ = writeln!(out, "generator {k}:");
        for i in 0..g.dim() {
            let row: Vec<String> = (0..g.dim()).map(|j| g.get(i, j).to_string()).collect();
            let _ = writeln!(out, "  [{}]", row.join(", "));
        }
    }
    let _ = writeln!(out, "expected order: {}", x.order);
    let _ = writeln!(out, "expected collineation order: {}", x.collineation_order);
    let _ = writeln!(out, "expected special linear: {}", yes(x.in_special_linear));
    let _ = writeln!(out, "expected reflections: {}", x.reflections);
    let _ = writeln!(out, "expected structure: {}", x.kind.as_str());
    if let Some(l) = x.primitive_letter {
        let _ = writeln!(out, "expected primitive type: {l}");
    }
    if let Some(exc) = x.exceptional {
        let _ = writeln!(out, "expected verdict: {}", if exc { "exceptional" } else { "nonexceptional" });
    }
    if let Some(d) = x.witness_degree {
        let _ = writeln!(out, "expected witness degree: {d}");
    }
    let _ = writeln!(out, "provenance: {}", e.provenance);
    out
}

pub fn verification(records: &[VerificationRecord]) -> String {
    let mut out = String::new();
    for r in records {
        if r.passed() {
            let _ = writeln!(out, "PASS {}", r.name);
            continue;
        }
        let _ = writeln!(out, "FAIL {}", r.name);
        for m in &r.mismatches {
            let _ = writeln!(out, "  {}: expected {}, got {}", m.field, m.expected, m.actual);
        }
        if let Some(e) = &r.error {
            let _ = writeln!(out, "  error: {e}");
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn approximations_of_roots_of_unity() {
        let f = CyclotomicField::new(3).unwrap();
        let (re, im) = approximate(&Cyclotomic::zeta_pow(&f, 1));
        assert!((re + 0.5).abs() < 1e-12);
        assert!((im - 3f64.sqrt() / 2.0).abs() < 1e-12);
        assert_eq!(Literals::new(4, true).show("z"), "z [~ 0.000000+1.000000i]");
        assert_eq!(Literals::new(4, false).show("z"), "z");
    }
}
