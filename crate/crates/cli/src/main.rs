//! `excq`: exceptionality of quotient singularities by finite linear groups.

mod cache;
mod error;
mod groupfile;
mod render;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use excq_core::catalog::{builtin, verify_catalog, PUBLISHED_NAMES};
use excq_core::classify::{analyze, AnalyzeOptions};
use excq_core::matgroup::{closure, FiniteMatrixGroup, DEFAULT_CLOSURE_CAP};
use excq_core::reptheory::{molien_prefix, semiinv_basis, DEFAULT_MOLIEN_DEGREE, DEFAULT_WORK_BOUND};
use serde::Serialize;

use crate::cache::Cache;
use crate::error::{CliError, CliResult, EXIT_OK};
use crate::groupfile::GroupInput;
use crate::report::{
    DegreeJson, OptionsJson, ReportBody, ReportDocument, ReportJson, Timing, SCHEMA_VERSION, TOOL_VERSION,
};

#[derive(Parser)]
#[command(name = "excq", version, about = "Exceptionality of quotient singularities C^m/G")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Group description file (JSON).
    input: Option<PathBuf>,
    /// Built-in catalog entry instead of a file.
    #[arg(long, value_name = "NAME")]
    catalog: Option<String>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Append decimal approximations to exact values in text output.
    #[arg(long)]
    approx: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: structure, semiinvariants, verdict and ages.
    Analyze {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
        /// Report semiinvariants up to this degree (at least the dimension).
        #[arg(long, default_value_t = 0)]
        max_degree: usize,
        /// Report dimensions only; the verdict witness is still computed.
        #[arg(long)]
        no_basis: bool,
        /// Directory for cached reports.
        #[arg(long, env = "EXCQ_CACHE_DIR")]
        cache_dir: Option<PathBuf>,
    },
    /// Dimensions of invariants in degrees 0..=D.
    Molien {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
        #[arg(long, default_value_t = DEFAULT_MOLIEN_DEGREE)]
        max_degree: usize,
    },
    /// A basis of semiinvariants of one degree, with characters.
    Semiinvariants {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
        #[arg(long)]
        degree: usize,
    },
    /// Built-in groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
        #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Published entry names.
    List,
    /// Generators, expected invariants and provenance of one entry.
    Show { name: String },
    /// Recompute every expected invariant.
    Verify,
}

fn load(source: &Source) -> CliResult<GroupInput> {
    match (&source.input, &source.catalog) {
        (_, Some(name)) => Ok(groupfile::from_catalog(&builtin(name)?)),
        (Some(path), None) => groupfile::load(path),
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn group(input: &GroupInput) -> CliResult<FiniteMatrixGroup> {
    Ok(closure(&input.generators, DEFAULT_CLOSURE_CAP)?)
}

fn json<T: Serialize>(value: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(value)? + "\n")
}

fn cmd_analyze(
    source: &Source,
    output: &Output,
    max_degree: usize,
    no_basis: bool,
    cache_dir: Option<&PathBuf>,
) -> CliResult<String> {
    let start = Instant::now();
    let input = load(source)?;
    let options = OptionsJson { max_degree, with_basis: !no_basis };
    let cache = cache_dir.map(|d| Cache::open(d)).transpose()?;
    let key = Cache::key(&input.canonical, &options);
    let cached = cache.as_ref().and_then(|c| c.load(&key, &input.canonical, &options));
    let cache_hit = cached.is_some();
    let body = match cached {
        Some(body) => body,
        None => {
            let g = group(&input)?;
            let analysis = AnalyzeOptions { max_degree, with_basis: !no_basis, work_bound: DEFAULT_WORK_BOUND };
            let report = analyze(&input.name, &g, &analysis)?;
            let body = ReportBody {
                schema_version: SCHEMA_VERSION.into(),
                tool_version: TOOL_VERSION.into(),
                input: input.canonical.clone(),
                provenance: input.provenance.clone(),
                options,
                report: ReportJson::new(&report),
            };
            if let Some(c) = &cache {
                c.store(&key, &body)?;
            }
            body
        }
    };
    let timing = Timing { elapsed_ms: start.elapsed().as_millis() as u64, cache_hit };
    let doc = ReportDocument::new(body, timing);
    match output.format {
        Format::Json => json(&doc),
        Format::Text => Ok(render::report(&doc, output.approx)),
    }
}

fn cmd_molien(source: &Source, output: &Output, max_degree: usize) -> CliResult<String> {
    let g = group(&load(source)?)?;
    let coeffs = molien_prefix(&g, max_degree)?;
    match output.format {
        Format::Json => Ok(serde_json::to_string(&coeffs)? + "\n"),
        Format::Text => Ok(render::molien(&coeffs)),
    }
}

fn cmd_semiinvariants(source: &Source, output: &Output, degree: usize) -> CliResult<String> {
    let g = group(&load(source)?)?;
    let entry = DegreeJson::new(&semiinv_basis(&g, degree, DEFAULT_WORK_BOUND)?);
    match output.format {
        Format::Json => json(&entry),
        Format::Text => Ok(render::semiinvariants(entry.degree, entry.dimension, &entry.basis, g.conductor(), output.approx)),
    }
}

#[derive(Serialize)]
struct VerificationJson<'a> {
    name: &'a str,
    passed: bool,
    mismatches: Vec<[&'a str; 3]>,
    error: Option<&'a str>,
}

fn cmd_catalog(action: &CatalogAction, format: Format) -> CliResult<String> {
    match action {
        CatalogAction::List => match format {
            Format::Json => json(&PUBLISHED_NAMES),
            Format::Text => Ok(PUBLISHED_NAMES.iter().map(|n| format!("{n}\n")).collect()),
        },
        CatalogAction::Show { name } => {
            let entry = builtin(name)?;
            match format {
                Format::Json => {
                    let input = groupfile::from_catalog(&entry);
                    let x = &entry.expected;
                    json(&serde_json::json!({
                        "description": input.canonical,
                        "expected": {
                            "order": x.order,
                            "collineation_order": x.collineation_order,
                            "in_special_linear": x.in_special_linear,
                            "reflections": x.reflections,
                            "kind": x.kind.as_str(),
                            "primitive_letter": x.primitive_letter.map(String::from),
                            "exceptional": x.exceptional,
                            "witness_degree": x.witness_degree,
                        },
                        "provenance": entry.provenance,
                    }))
                }
                Format::Text => Ok(render::entry(&entry)),
            }
        }
        CatalogAction::Verify => {
            let records = verify_catalog();
            let out = match format {
                Format::Json => json(
                    &records
                        .iter()
                        .map(|r| VerificationJson {
                            name: &r.name,
                            passed: r.passed(),
                            mismatches: r
                                .mismatches
                                .iter()
                                .map(|m| [m.field, m.expected.as_str(), m.actual.as_str()])
                                .collect(),
                            error: r.error.as_deref(),
                        })
                        .collect::<Vec<_>>(),
                )?,
                Format::Text => render::verification(&records),
            };
            let failed = records.iter().filter(|r| !r.passed()).count();
            print!("{out}");
            if failed > 0 {
                return Err(CliError::VerificationFailed { failed, total: records.len() });
            }
            Ok(String::new())
        }
    }
}

fn run(cli: &Cli) -> CliResult<String> {
    match &cli.command {
        Command::Analyze { source, output, max_degree, no_basis, cache_dir } => {
            cmd_analyze(source, output, *max_degree, *no_basis, cache_dir.as_ref())
        }
        Command::Molien { source, output, max_degree } => cmd_molien(source, output, *max_degree),
        Command::Semiinvariants { source, output, degree } => cmd_semiinvariants(source, output, *degree),
        Command::Catalog { action, format } => cmd_catalog(action, *format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::from(EXIT_OK as u8)
        }
        Err(e) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
