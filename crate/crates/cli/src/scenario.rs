//! Scenario files: one TOML document per check.
//!
//! ```toml
//! name = "even_power_converse"
//! lhs = "of(trace(sum((81/16)*prod(sub(t^2), sub(t^2)))), poly[0, 0, 1])"
//! rhs = "lin((3/2)*sub(t^2))^4"
//! samples = ["t", "t+1", "2", "1/t"]
//! expect = "pass"
//! ```

use anyhow::{bail, Context, Result};
use fecheck_core::exactfield::FieldElem;
use fecheck_core::feq::{Expectation, Scenario};
use serde::Deserialize;

use crate::parse::{parse_field_elem, parse_unary_fn};

#[derive(Debug, Deserialize)]
struct ScenarioDoc {
    name: String,
    lhs: String,
    rhs: String,
    samples: Vec<String>,
    expect: String,
}

/// Parses one scenario document.
pub fn scenario_from_str(text: &str) -> Result<Scenario> {
    let doc: ScenarioDoc = toml::from_str(text).context("malformed scenario document")?;
    let lhs = parse_unary_fn(&doc.lhs)
        .map_err(|e| anyhow::anyhow!("lhs: {}", e.render(&doc.lhs)))?;
    let rhs = parse_unary_fn(&doc.rhs)
        .map_err(|e| anyhow::anyhow!("rhs: {}", e.render(&doc.rhs)))?;
    let samples: Result<Vec<FieldElem>> = doc
        .samples
        .iter()
        .map(|s| {
            parse_field_elem(s).map_err(|e| anyhow::anyhow!("sample `{s}`: {}", e.render(s)))
        })
        .collect();
    let expected = match doc.expect.as_str() {
        "pass" => Expectation::Pass,
        "fail" => Expectation::Fail,
        other => bail!("expect must be `pass` or `fail`, got `{other}`"),
    };
    Ok(Scenario::new(doc.name, lhs, rhs, samples?, expected)?)
}

/// Loads a scenario from a `.feq` file.
pub fn load_scenario(path: &str) -> Result<Scenario> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read `{path}`"))?;
    scenario_from_str(&text).with_context(|| format!("in scenario file `{path}`"))
}
