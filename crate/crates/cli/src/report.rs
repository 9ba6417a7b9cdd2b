//! Rendering of verification results as text or JSON.
//!
//! JSON output is deterministic for a fixed input and seed: field order
//! follows struct declaration and every value is an exact canonical
//! string, so identical runs are byte-identical.

use fecheck_core::atoms::Witness;
use fecheck_core::feq::{Expectation, Outcome, SuiteReport, VerifyReport};
use serde::Serialize;

#[derive(Debug, Serialize)]
pub struct WitnessDto {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

impl WitnessDto {
    pub fn from_witness(w: &Witness) -> Self {
        let input = w
            .inputs
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        WitnessDto {
            input,
            lhs: w.lhs.to_string(),
            rhs: w.rhs.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ScenarioDto {
    pub scenario: String,
    pub expected: String,
    pub actual: String,
    pub witnesses: Vec<WitnessDto>,
    pub seed: u64,
    pub samples: usize,
}

fn expectation_str(e: Expectation) -> &'static str {
    match e {
        Expectation::Pass => "pass",
        Expectation::Fail => "fail",
    }
}

impl ScenarioDto {
    pub fn from_report(r: &VerifyReport, seed: u64, samples: usize) -> Self {
        let (actual, witnesses) = match &r.outcome {
            Outcome::Pass => ("pass".to_string(), Vec::new()),
            Outcome::Fail(w) => ("fail".to_string(), vec![WitnessDto::from_witness(w)]),
            Outcome::EvalFailure { sample, error } => {
                (format!("error at {sample}: {error}"), Vec::new())
            }
        };
        ScenarioDto {
            scenario: r.name.clone(),
            expected: expectation_str(r.expected).to_string(),
            actual,
            witnesses,
            seed,
            samples,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct SuiteDto {
    pub seed: u64,
    pub samples: usize,
    pub notes: Vec<String>,
    pub scenarios: Vec<ScenarioDto>,
    pub mismatches: usize,
}

impl SuiteDto {
    pub fn from_report(report: &SuiteReport) -> Self {
        SuiteDto {
            seed: report.seed,
            samples: report.sample_count,
            notes: report.notes.clone(),
            scenarios: report
                .reports
                .iter()
                .map(|r| ScenarioDto::from_report(r, report.seed, report.sample_count))
                .collect(),
            mismatches: report.mismatches,
        }
    }
}

fn scenario_lines(r: &VerifyReport, out: &mut String) {
    let status = if r.matched() { "ok      " } else { "MISMATCH" };
    let actual = match &r.outcome {
        Outcome::Pass => "pass".to_string(),
        Outcome::Fail(_) => "fail".to_string(),
        Outcome::EvalFailure { sample, error } => format!("error at {sample}: {error}"),
    };
    out.push_str(&format!(
        "{status} {} (expected {}, got {actual})\n",
        r.name,
        expectation_str(r.expected)
    ));
    if let Outcome::Fail(w) = &r.outcome {
        let dto = WitnessDto::from_witness(w);
        out.push_str(&format!(
            "         witness: x = {}; lhs = {}; rhs = {}\n",
            dto.input, dto.lhs, dto.rhs
        ));
    }
}

/// One scenario as a text report.
pub fn render_scenario_text(r: &VerifyReport, seed: u64, samples: usize) -> String {
    let mut out = format!("seed {seed}, samples {samples}\n");
    scenario_lines(r, &mut out);
    out
}

/// A whole suite as a text report.
pub fn render_suite_text(report: &SuiteReport) -> String {
    let mut out = format!(
        "seed {}, samples {} ({} structured + {} pseudo-random)\n",
        report.seed,
        report.sample_count,
        report.sample_count - report.random_samples,
        report.random_samples
    );
    for note in &report.notes {
        out.push_str(&format!("note: {note}\n"));
    }
    for r in &report.reports {
        scenario_lines(r, &mut out);
    }
    out.push_str(&format!(
        "{} scenarios, {} mismatches\n",
        report.reports.len(),
        report.mismatches
    ));
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report DTOs always serialize");
    s.push('\n');
    s
}
