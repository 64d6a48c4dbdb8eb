//! Group description files.
//!
//! ```json
//! {
//!   "name": "cyclic_3_diag",
//!   "dimension": 2,
//!   "conductor": 3,
//!   "generators": [[["z", "0"], ["0", "z^2"]]]
//! }
//! ```
//!
//! Entries are cyclotomic literals in which `z` is a primitive root of unity
//! of order `conductor`.

use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use excq_core::catalog::CatalogEntry;
use excq_core::exactnum::{Cyclotomic, CyclotomicField};
use excq_core::SquareMatrix;
use serde::de::{self, Deserializer};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};

/// A literal whose syntax has been checked during deserialization, so that
/// syntax errors carry the file position of the offending string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Literal(pub String);

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let probe = CyclotomicField::new(1).map_err(de::Error::custom)?;
        Cyclotomic::parse_literal(&s, &probe).map_err(|e| de::Error::custom(format!("literal {s:?}: {e}")))?;
        Ok(Literal(s))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDescriptionFile {
    pub name: String,
    pub dimension: usize,
    pub conductor: u32,
    pub generators: Vec<Vec<Vec<Literal>>>,
}

/// A group ready for analysis, with its canonical description.
#[derive(Clone, Debug)]
pub struct GroupInput {
    pub name: String,
    pub generators: Vec<SquareMatrix>,
    pub canonical: GroupDescriptionFile,
    pub provenance: Option<String>,
}

impl fmt::Display for GroupDescriptionFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serde_json::to_string(self).map_err(|_| fmt::Error)?)
    }
}

fn invalid(path: &Path, message: impl Into<String>) -> CliError {
    CliError::Invalid { path: path.to_path_buf(), message: message.into() }
}

/// Parses and validates the contents of a group description file.
pub fn parse_str(path: &Path, src: &str) -> CliResult<GroupInput> {
    let file: GroupDescriptionFile = serde_json::from_str(src).map_err(|e| CliError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        message: {
            let text = e.to_string();
            match text.rsplit_once(" at line ") {
                Some((head, _)) => head.to_string(),
                None => text,
            }
        },
    })?;
    let field = CyclotomicField::new(file.conductor).map_err(|e| invalid(path, e.to_string()))?;
    if file.dimension == 0 {
        return Err(invalid(path, "dimension must be positive"));
    }
    if file.generators.is_empty() {
        return Err(invalid(path, "at least one generator is required"));
    }
    let generators = file
        .generators
        .iter()
        .enumerate()
        .map(|(k, m)| matrix(path, &field, file.dimension, k, m))
        .collect::<CliResult<Vec<_>>>()?;
    let canonical = describe(&file.name, file.conductor, &generators);
    Ok(GroupInput { name: file.name, generators, canonical, provenance: None })
}

fn matrix(
    path: &Path,
    field: &Arc<CyclotomicField>,
    dim: usize,
    k: usize,
    rows: &[Vec<Literal>],
) -> CliResult<SquareMatrix> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        return Err(invalid(path, format!("generator {k} is not {dim}x{dim} (row lengths {shape:?})")));
    }
    let entries = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, lit)| {
                    Cyclotomic::parse_literal(&lit.0, field)
                        .map_err(|e| invalid(path, format!("generator {k}, entry ({i}, {j}): {e}")))
                })
                .collect::<CliResult<Vec<_>>>()
        })
        .collect::<CliResult<Vec<_>>>()?;
    let m = SquareMatrix::from_rows(entries).map_err(|e| invalid(path, format!("generator {k}: {e}")))?;
    if m.det().is_zero() {
        return Err(invalid(path, format!("generator {k} is singular")));
    }
    Ok(m)
}

/// Reads and validates a group description file.
pub fn load(path: &Path) -> CliResult<GroupInput> {
    let src = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: PathBuf::from(path), source })?;
    parse_str(path, &src)
}

/// The group behind a catalog entry.
pub fn from_catalog(entry: &CatalogEntry) -> GroupInput {
    GroupInput {
        name: entry.name.clone(),
        generators: entry.generators.clone(),
        canonical: describe(&entry.name, entry.conductor, &entry.generators),
        provenance: Some(entry.provenance.clone()),
    }
}

/// Canonical description: literals re-rendered from the parsed matrices.
pub fn describe(name: &str, conductor: u32, generators: &[SquareMatrix]) -> GroupDescriptionFile {
    let dimension = generators.first().map_or(0, SquareMatrix::dim);
    let generators = generators
        .iter()
        .map(|m| (0..dimension).map(|i| (0..dimension).map(|j| Literal(m.get(i, j).to_string())).collect()).collect())
        .collect();
    GroupDescriptionFile { name: name.to_string(), dimension, conductor, generators }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(src: &str) -> CliResult<GroupInput> {
        parse_str(Path::new("t.json"), src)
    }

    #[test]
    fn parses_a_diagonal_group() {
        let g = parse(r#"{"name":"c3","dimension":2,"conductor":3,"generators":[[["z","0"],["0","z^2"]]]}"#).unwrap();
        assert_eq!(g.generators.len(), 1);
        assert_eq!(g.canonical.generators[0][0][0].0, "z");
        assert_eq!(g.canonical.dimension, 2);
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let src = "{\n  \"name\": \"x\",\n  \"dimension\": 1,\n  \"conductor\": 2,\n  \"generators\": [[[\"1 +* z\"]]]\n}";
        match parse(src) {
            Err(CliError::Parse { line, column, message, .. }) => {
                assert_eq!(line, 5);
                assert!(column > 10, "{column}");
                assert!(message.contains("1 +* z"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_non_square_and_singular_generators() {
        let bad = parse(r#"{"name":"x","dimension":2,"conductor":1,"generators":[[["1","0"],["0"]]]}"#);
        assert!(matches!(bad, Err(CliError::Invalid { .. })));
        let singular = parse(r#"{"name":"x","dimension":2,"conductor":1,"generators":[[["1","1"],["1","1"]]]}"#);
        assert!(matches!(singular, Err(CliError::Invalid { .. })));
    }

    #[test]
    fn canonical_description_is_stable() {
        let a = parse(r#"{"name":"c","dimension":1,"conductor":4,"generators":[[["z"]]]}"#).unwrap();
        let b = parse(r#"{"name":"c","dimension":1,"conductor":4,"generators":[[[" z^1 "]]]}"#).unwrap();
        assert_eq!(a.canonical.to_string(), b.canonical.to_string());
    }
}
