//! Command implementations behind the `plethyst` binary. Each command renders
//! its output to a string and reports the process exit code, so the binary
//! stays a thin shell and the commands are testable in-process.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use rayon::prelude::*;
use serde_json::json;

use plethyst::plethysm::{
    first_term, monomial_expansion_with, schur_expansion_with, shape_pairs, verify_first_term_with,
};
use plethyst::{ExpansionReport, Limits, Partition};

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const CHECK_FAILED: i32 = 1;
    pub const PARSE: i32 = 2;
    pub const BOUNDS: i32 = 3;
    pub const IO: i32 = 4;
}

/// Version of the sweep report layout.
pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputBasis {
    Schur,
    Monomial,
}

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<plethyst::Error> for CliError {
    fn from(e: plethyst::Error) -> Self {
        use plethyst::Error::*;
        let code = match &e {
            BoundExceeded { .. } => exit::BOUNDS,
            Parse { .. } | InvalidPartition(_) | EmptyPartition(_) => exit::PARSE,
            _ => exit::CHECK_FAILED,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Rendered command output plus the exit code to finish with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output {
            text,
            code: exit::OK,
        }
    }
}

pub type CliResult = Result<Output, CliError>;

pub fn parse_partition(text: &str) -> Result<Partition, CliError> {
    text.parse::<Partition>().map_err(CliError::from)
}

fn to_json_text(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("report values always serialize")
}

pub fn cmd_expand(
    lambda: &str,
    mu: &str,
    basis: OutputBasis,
    format: Format,
    limits: &Limits,
) -> CliResult {
    let lambda = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    let f = match basis {
        OutputBasis::Schur => schur_expansion_with(&lambda, &mu, limits)?,
        OutputBasis::Monomial => monomial_expansion_with(&lambda, &mu, limits)?,
    };
    Ok(Output::ok(match format {
        Format::Text => f.to_string(),
        Format::Json => to_json_text(&f),
    }))
}

fn render_checks(report: &ExpansionReport) -> String {
    report
        .checks
        .iter()
        .map(|(name, ok)| format!("{name}: {}", if *ok { "pass" } else { "FAIL" }))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn cmd_first_term(
    lambda: &str,
    mu: &str,
    verify: bool,
    oracle: bool,
    format: Format,
    limits: &Limits,
) -> CliResult {
    let lambda = parse_partition(lambda)?;
    let mu = parse_partition(mu)?;
    let nu0 = first_term(&lambda, &mu)?;
    if !verify {
        return Ok(Output::ok(match format {
            Format::Text => nu0.to_string(),
            Format::Json => to_json_text(&json!({ "first_term": nu0 })),
        }));
    }
    let report = verify_first_term_with(&lambda, &mu, oracle, limits)?;
    let code = if report.passed() {
        exit::OK
    } else {
        exit::CHECK_FAILED
    };
    let text = match format {
        Format::Text => format!("{nu0}\n{}", render_checks(&report)),
        Format::Json => to_json_text(&report),
    };
    Ok(Output { text, code })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Largest `m * n` swept.
    pub max_product: usize,
    pub oracle: bool,
    pub output_path: Option<PathBuf>,
    pub format: Format,
    pub parallelism: usize,
}

impl SweepConfig {
    pub fn validate(&self, limits: &Limits) -> Result<(), CliError> {
        if self.max_product > limits.max_product {
            return Err(plethyst::Error::BoundExceeded {
                what: "--max-product",
                value: self.max_product,
                limit: limits.max_product,
            }
            .into());
        }
        if self.parallelism == 0 {
            return Err(CliError {
                code: exit::PARSE,
                message: "--jobs must be at least 1".into(),
            });
        }
        Ok(())
    }
}

/// Aggregate result of a sweep, in canonical pair order.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub max_product: usize,
    pub oracle: bool,
    pub reports: Vec<ExpansionReport>,
}

impl SweepSummary {
    pub fn failures(&self) -> impl Iterator<Item = &ExpansionReport> {
        self.reports.iter().filter(|r| !r.passed())
    }

    /// How many pairs passed each named check.
    pub fn check_totals(&self) -> BTreeMap<&str, usize> {
        let mut totals = BTreeMap::new();
        for r in &self.reports {
            for (name, ok) in &r.checks {
                *totals.entry(name.as_str()).or_insert(0) += usize::from(*ok);
            }
        }
        totals
    }

    pub fn render_text(&self) -> String {
        let failed = self.failures().count();
        let mut lines = vec![
            format!("max product: {}", self.max_product),
            format!("oracle: {}", if self.oracle { "on" } else { "off" }),
            format!("pairs: {}", self.reports.len()),
            format!("passed: {}", self.reports.len() - failed),
            format!("failed: {failed}"),
        ];
        for (name, passed) in self.check_totals() {
            lines.push(format!("  {name}: {passed}/{}", self.reports.len()));
        }
        for r in self.failures() {
            lines.push(format!(
                "counterexample: lambda={} mu={} predicted={} observed={} coefficient={} failed={}",
                r.lambda,
                r.mu,
                r.predicted_first_term,
                r.observed_first_term,
                r.first_term_coefficient,
                r.failed_checks().join(",")
            ));
        }
        lines.join("\n")
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "schema": REPORT_SCHEMA,
            "max_product": self.max_product,
            "oracle": self.oracle,
            "pairs": self.reports.len(),
            "failures": self.failures().count(),
            "reports": self.reports,
        })
    }
}

pub fn run_sweep(config: &SweepConfig, limits: &Limits) -> Result<SweepSummary, CliError> {
    config.validate(limits)?;
    let pairs = shape_pairs(config.max_product, limits)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism)
        .build()
        .map_err(|e| CliError {
            code: exit::CHECK_FAILED,
            message: format!("cannot start worker pool: {e}"),
        })?;
    let reports = pool.install(|| {
        pairs
            .par_iter()
            .map(|(lambda, mu)| verify_first_term_with(lambda, mu, config.oracle, limits))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok(SweepSummary {
        max_product: config.max_product,
        oracle: config.oracle,
        reports,
    })
}

pub fn cmd_verify_sweep(config: &SweepConfig, limits: &Limits) -> CliResult {
    let summary = run_sweep(config, limits)?;
    let rendered = match config.format {
        Format::Text => summary.render_text(),
        Format::Json => to_json_text(&summary.to_json()),
    };
    let text = match &config.output_path {
        Some(path) => {
            std::fs::write(path, format!("{rendered}\n")).map_err(|e| CliError {
                code: exit::IO,
                message: format!("cannot write {}: {e}", path.display()),
            })?;
            summary.render_text()
        }
        None => rendered,
    };
    let code = if summary.failures().next().is_none() {
        exit::OK
    } else {
        exit::CHECK_FAILED
    };
    Ok(Output { text, code })
}
