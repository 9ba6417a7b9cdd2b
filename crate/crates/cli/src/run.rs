//! Command implementations behind the CLI surface.

use anyhow::{anyhow, bail, Context, Result};
use fecheck_core::exactfield::FieldElem;
use fecheck_core::feq::{builtin_suite, verify_identity, SuiteConfig};
use fecheck_core::genpoly::monomial_degree;
use fecheck_core::multiadd::{polarize, PolarizedValue, SymForm};
use fecheck_core::sample::default_samples;
use fecheck_core::structure::{hod_degree, KernelGrid};
use serde::Serialize;

use crate::parse::{
    demand_atom, demand_field, demand_form, elaborate, parse_surface, parse_unary_fn, Expr,
    ExprKind,
};
use crate::report::{
    render_scenario_text, render_suite_text, to_json, ScenarioDto, SuiteDto,
};
use crate::scenario::load_scenario;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Verify,
    Polarize { degree: usize },
    Degree,
    Rank,
    Hod,
    Suite,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

/// Everything a command run depends on; identical configs produce
/// byte-identical reports.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    /// Scenario path for `verify`, expression text otherwise.
    pub input: Option<String>,
    pub seed: u64,
    /// Pseudo-random samples added to the structured set; at least 1.
    pub samples: usize,
    pub report: ReportFormat,
    /// Degree bound for the search commands; at least 1.
    pub max_degree: usize,
}

pub struct RunOutput {
    pub rendered: String,
    pub exit_code: i32,
}

fn input<'c>(config: &'c RunConfig, what: &str) -> Result<&'c str> {
    config
        .input
        .as_deref()
        .ok_or_else(|| anyhow!("this command needs {what}"))
}

pub fn run(config: &RunConfig) -> Result<RunOutput> {
    match &config.command {
        CommandKind::Verify => run_verify(config),
        CommandKind::Polarize { degree } => run_polarize(config, *degree),
        CommandKind::Degree => run_degree(config),
        CommandKind::Rank => run_rank(config),
        CommandKind::Hod => run_hod(config),
        CommandKind::Suite => run_suite(config),
    }
}

fn run_verify(config: &RunConfig) -> Result<RunOutput> {
    let path = input(config, "a scenario file path")?;
    let scenario = load_scenario(path)?;
    let samples = scenario.samples.len();
    let report = verify_identity(&scenario);
    let exit_code = i32::from(!report.matched());
    let rendered = match config.report {
        ReportFormat::Text => render_scenario_text(&report, config.seed, samples),
        ReportFormat::Json => to_json(&ScenarioDto::from_report(&report, config.seed, samples)),
    };
    Ok(RunOutput {
        rendered,
        exit_code,
    })
}

fn run_suite(config: &RunConfig) -> Result<RunOutput> {
    let suite_config = SuiteConfig {
        seed: config.seed,
        random_samples: config.samples,
    };
    let report = builtin_suite(&suite_config)?;
    let rendered = match config.report {
        ReportFormat::Text => render_suite_text(&report),
        ReportFormat::Json => to_json(&SuiteDto::from_report(&report)),
    };
    Ok(RunOutput {
        rendered,
        exit_code: i32::from(!report.all_matched()),
    })
}

#[derive(Serialize)]
struct PolarizeTupleDto {
    increments: Vec<String>,
    value: String,
}

#[derive(Serialize)]
struct PolarizeDto {
    expression: String,
    degree: usize,
    probes: usize,
    consistent: bool,
    tuples: Vec<PolarizeTupleDto>,
    seed: u64,
    samples: usize,
}

fn run_polarize(config: &RunConfig, degree: usize) -> Result<RunOutput> {
    let src = input(config, "a function expression")?;
    let f = parse_unary_fn(src).map_err(|e| anyhow!(e.render(src)))?;
    if degree == 0 {
        bail!("--degree must be at least 1");
    }
    let points = default_samples(config.seed, config.samples);
    let (recovered, _) = polarize(&f, degree, &points)?;
    let mut consistent = true;
    let mut tuples = Vec::new();
    for window in points.windows(degree).take(3) {
        let value = match recovered.eval_checked(window)? {
            PolarizedValue::Consistent(v) => v.to_string(),
            PolarizedValue::Inconsistent(w) => {
                consistent = false;
                format!(
                    "inconsistent: {} at base {} vs {} at base {}",
                    w.value, w.base, w.reference_value, w.reference_base
                )
            }
        };
        tuples.push(PolarizeTupleDto {
            increments: window.iter().map(|y| y.to_string()).collect(),
            value,
        });
    }
    let dto = PolarizeDto {
        expression: src.to_string(),
        degree,
        probes: points.len(),
        consistent,
        tuples,
        seed: config.seed,
        samples: points.len(),
    };
    let rendered = match config.report {
        ReportFormat::Json => to_json(&dto),
        ReportFormat::Text => {
            let mut out = format!(
                "polarize {} at degree {} over {} probes: {}\n",
                dto.expression,
                dto.degree,
                dto.probes,
                if dto.consistent {
                    "consistent"
                } else {
                    "INCONSISTENT"
                }
            );
            for t in &dto.tuples {
                out.push_str(&format!(
                    "  A({}) = {}\n",
                    t.increments.join(", "),
                    t.value
                ));
            }
            out
        }
    };
    Ok(RunOutput {
        rendered,
        exit_code: i32::from(!consistent),
    })
}

#[derive(Serialize)]
struct DegreeDto {
    expression: String,
    max_degree: usize,
    degree: Option<usize>,
    seed: u64,
    samples: usize,
}

fn run_degree(config: &RunConfig) -> Result<RunOutput> {
    let src = input(config, "a function expression")?;
    let f = parse_unary_fn(src).map_err(|e| anyhow!(e.render(src)))?;
    let points = default_samples(config.seed, config.samples);
    let degree = monomial_degree(&f, config.max_degree, &points)?;
    let dto = DegreeDto {
        expression: src.to_string(),
        max_degree: config.max_degree,
        degree,
        seed: config.seed,
        samples: points.len(),
    };
    let rendered = match config.report {
        ReportFormat::Json => to_json(&dto),
        ReportFormat::Text => match dto.degree {
            Some(n) => format!("{} is a generalized monomial of degree {n}\n", dto.expression),
            None => format!(
                "{}: no monomial degree up to {} detected\n",
                dto.expression, dto.max_degree
            ),
        },
    };
    Ok(RunOutput {
        rendered,
        exit_code: 0,
    })
}

#[derive(Serialize)]
struct RankDto {
    expression: String,
    xs: Vec<String>,
    ys: Vec<String>,
    rank: usize,
    seed: u64,
    samples: usize,
}

/// Grid side used when `rank` gets no explicit grids.
const RANK_GRID_SIDE: usize = 4;

fn run_rank(config: &RunConfig) -> Result<RunOutput> {
    let src = input(config, "a form expression")?;
    let expr = parse_surface(src).map_err(|e| anyhow!(e.render(src)))?;
    let (form, xs, ys) = rank_arguments(&expr, src, config)?;
    if form.arity() != 2 {
        bail!("rank needs an arity-2 form, got arity {}", form.arity());
    }
    let grid = KernelGrid::evaluate(|x, y| form.eval(&[x.clone(), y.clone()]), &xs, &ys)?;
    let dto = RankDto {
        expression: src.to_string(),
        xs: xs.iter().map(|x| x.to_string()).collect(),
        ys: ys.iter().map(|y| y.to_string()).collect(),
        rank: grid.rank(),
        seed: config.seed,
        samples: xs.len() * ys.len(),
    };
    let rendered = match config.report {
        ReportFormat::Json => to_json(&dto),
        ReportFormat::Text => format!(
            "rank {} on a {}x{} grid: {}\n",
            dto.expression,
            dto.xs.len(),
            dto.ys.len(),
            dto.rank
        ),
    };
    Ok(RunOutput {
        rendered,
        exit_code: 0,
    })
}

/// Accepts either `rank(FORM; x1, ...; y1, ...)`, `rank(FORM)`, or a bare
/// form expression with generated grids.
fn rank_arguments(
    expr: &Expr,
    src: &str,
    config: &RunConfig,
) -> Result<(SymForm, Vec<FieldElem>, Vec<FieldElem>)> {
    let generated = || {
        let points = default_samples(config.seed, config.samples.max(RANK_GRID_SIDE));
        let xs: Vec<FieldElem> = points[..RANK_GRID_SIDE].to_vec();
        let ys: Vec<FieldElem> = points[RANK_GRID_SIDE..2 * RANK_GRID_SIDE].to_vec();
        (xs, ys)
    };
    if let ExprKind::Call { name, groups } = &expr.kind {
        if name == "rank" {
            if groups.is_empty() || groups[0].len() != 1 {
                bail!("rank expects `rank(form)` or `rank(form; xs...; ys...)`");
            }
            let form = demand_form(
                elaborate(&groups[0][0]).map_err(|e| anyhow!(e.render(src)))?,
                groups[0][0].offset,
            )
            .map_err(|e| anyhow!(e.render(src)))?;
            let (xs, ys) = match groups.len() {
                1 => generated(),
                3 => {
                    let parse_list = |items: &[Expr]| -> Result<Vec<FieldElem>> {
                        items
                            .iter()
                            .map(|item| {
                                demand_field(
                                    elaborate(item).map_err(|e| anyhow!(e.render(src)))?,
                                    item.offset,
                                )
                                .map_err(|e| anyhow!(e.render(src)))
                            })
                            .collect()
                    };
                    (parse_list(&groups[1])?, parse_list(&groups[2])?)
                }
                _ => bail!("rank expects `rank(form)` or `rank(form; xs...; ys...)`"),
            };
            return Ok((form, xs, ys));
        }
    }
    let form = demand_form(
        elaborate(expr).map_err(|e| anyhow!(e.render(src)))?,
        expr.offset,
    )
    .map_err(|e| anyhow!(e.render(src)))?;
    let (xs, ys) = generated();
    Ok((form, xs, ys))
}

#[derive(Serialize)]
struct HodDto {
    expression: String,
    value_at_one: String,
    applicable: bool,
    degree: Option<usize>,
    max_degree: usize,
    seed: u64,
    increments: Vec<String>,
}

fn run_hod(config: &RunConfig) -> Result<RunOutput> {
    let src = input(config, "an additive-map expression")?;
    let expr = parse_surface(src).map_err(|e| anyhow!(e.render(src)))?;
    // `hod(D, nmax)` embeds the bound; a bare map uses --max-degree
    let (map_expr, max_degree) = match &expr.kind {
        ExprKind::Call { name, groups } if name == "hod" => {
            if groups.len() != 1 || groups[0].len() != 2 {
                bail!("hod expects `hod(map, max_degree)`");
            }
            let bound = match &groups[0][1].kind {
                ExprKind::Int(n) => n
                    .try_into()
                    .ok()
                    .filter(|&b: &usize| b >= 1)
                    .context("hod bound must be a positive integer")?,
                _ => bail!("hod bound must be a positive integer"),
            };
            (&groups[0][0], bound)
        }
        _ => (&expr, config.max_degree),
    };
    let map = demand_atom(
        elaborate(map_expr).map_err(|e| anyhow!(e.render(src)))?,
        map_expr.offset,
    )
    .map_err(|e| anyhow!(e.render(src)))?;
    let bases = default_samples(config.seed, config.samples);
    let report = hod_degree(&map, max_degree, &bases, config.seed)?;
    let dto = HodDto {
        expression: src.to_string(),
        value_at_one: report.value_at_one.to_string(),
        applicable: report.applicable(),
        degree: report.degree,
        max_degree: report.max_degree,
        seed: report.seed,
        increments: report
            .increment_pool
            .iter()
            .map(|x| x.to_string())
            .collect(),
    };
    let rendered = match config.report {
        ReportFormat::Json => to_json(&dto),
        ReportFormat::Text => {
            if !dto.applicable {
                format!(
                    "{}: not a higher-order derivation, value at 1 is {}\n",
                    dto.expression, dto.value_at_one
                )
            } else {
                match dto.degree {
                    Some(n) => format!("{} is a derivation of order {n}\n", dto.expression),
                    None => format!(
                        "{}: no derivation order up to {} detected\n",
                        dto.expression, dto.max_degree
                    ),
                }
            }
        }
    };
    Ok(RunOutput {
        rendered,
        exit_code: 0,
    })
}
