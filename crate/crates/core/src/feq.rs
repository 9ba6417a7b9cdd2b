//! Scenario-based verification of functional-equation identities, the
//! kernel constructions behind them, and the built-in suite.
//!
//! A [`Scenario`] is a declarative check: two one-variable functions, a
//! sample set, and the verdict the identity is expected to produce.
//! Expected verdicts are part of the scenario so the suite exercises both
//! PASS and FAIL paths; counterexample scenarios are first-class.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::atoms::{AdditiveMap, Witness};
use crate::error::{Error, Result};
use crate::exactfield::{rat, FieldElem};
use crate::genpoly::{compose_fn, ClassicalPoly};
use crate::multiadd::{SymForm, UnaryFn};
use crate::sample::default_samples;
use crate::structure::certify_independent;

/// The verdict a scenario is expected to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Expectation {
    Pass,
    Fail,
}

/// A declarative identity check: `lhs(x) = rhs(x)` over the sample set.
/// Samples must avoid the poles of both sides; evaluation failures are
/// reported per scenario rather than silently skipped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scenario {
    pub name: String,
    pub lhs: UnaryFn,
    pub rhs: UnaryFn,
    pub samples: Vec<FieldElem>,
    pub expected: Expectation,
}

impl Scenario {
    pub fn new(
        name: impl Into<String>,
        lhs: UnaryFn,
        rhs: UnaryFn,
        samples: Vec<FieldElem>,
        expected: Expectation,
    ) -> Result<Self> {
        if samples.is_empty() {
            return Err(Error::EmptySamples);
        }
        Ok(Scenario {
            name: name.into(),
            lhs,
            rhs,
            samples,
            expected,
        })
    }
}

/// What actually happened when a scenario ran.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// First sample where the sides disagreed.
    Fail(Witness),
    /// First sample where a side failed to evaluate.
    EvalFailure { sample: FieldElem, error: Error },
}

/// Result of one scenario run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub name: String,
    pub expected: Expectation,
    pub outcome: Outcome,
}

impl VerifyReport {
    /// Whether the outcome agrees with the expectation; evaluation
    /// failures never match.
    pub fn matched(&self) -> bool {
        matches!(
            (&self.expected, &self.outcome),
            (Expectation::Pass, Outcome::Pass) | (Expectation::Fail, Outcome::Fail(_))
        )
    }
}

/// Runs one scenario: exact equality at every sample, first witness on
/// disagreement.
pub fn verify_identity(scenario: &Scenario) -> VerifyReport {
    let mut outcome = Outcome::Pass;
    for x in &scenario.samples {
        let lhs = match scenario.lhs.eval(x) {
            Ok(v) => v,
            Err(e) => {
                outcome = Outcome::EvalFailure {
                    sample: x.clone(),
                    error: e,
                };
                break;
            }
        };
        let rhs = match scenario.rhs.eval(x) {
            Ok(v) => v,
            Err(e) => {
                outcome = Outcome::EvalFailure {
                    sample: x.clone(),
                    error: e,
                };
                break;
            }
        };
        if lhs != rhs {
            outcome = Outcome::Fail(Witness {
                inputs: vec![x.clone()],
                lhs,
                rhs,
            });
            break;
        }
    }
    VerifyReport {
        name: scenario.name.clone(),
        expected: scenario.expected,
        outcome,
    }
}

fn lambda_dims_ok(maps: usize, lambdas: &[Vec<FieldElem>]) -> Result<()> {
    if lambdas.len() != maps || lambdas.iter().any(|row| row.len() != maps) {
        return Err(Error::MixedArity {
            expected: maps,
            got: lambdas.len(),
        });
    }
    Ok(())
}

/// Scenario: for homomorphisms φᵢ and the quadratic
/// `f = Σ λᵢⱼ φᵢφⱼ`, the map `x ↦ f(xⁿ)` equals `Σ λᵢⱼ φᵢ(x)ⁿφⱼ(x)ⁿ`.
///
/// The maps are expected to be independent homomorphisms; certify them
/// with [`certify_independent`] before trusting a PASS.
pub fn homomorphism_power_scenario(
    phis: &[AdditiveMap],
    lambdas: &[Vec<FieldElem>],
    n: u32,
    samples: Vec<FieldElem>,
) -> Result<Scenario> {
    lambda_dims_ok(phis.len(), lambdas)?;
    let k = phis.len();
    let mut form_terms = Vec::with_capacity(k * k);
    let mut rhs_terms = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let lambda = lambdas[i][j].clone();
            form_terms.push((
                lambda.clone(),
                SymForm::atom_product(vec![phis[i].clone(), phis[j].clone()])?,
            ));
            rhs_terms.push(UnaryFn::scaled(
                lambda,
                UnaryFn::product(vec![
                    UnaryFn::power(UnaryFn::atom(phis[i].clone()), n),
                    UnaryFn::power(UnaryFn::atom(phis[j].clone()), n),
                ]),
            ));
        }
    }
    let f = SymForm::sum(2, form_terms)?;
    let lhs = compose_fn(&f.trace(), &ClassicalPoly::x_power(n as usize));
    Scenario::new(
        format!("homomorphism_power_k{k}_n{n}"),
        lhs,
        UnaryFn::sum(rhs_terms),
        samples,
        Expectation::Pass,
    )
}

/// Scenario: for derivations dᵢ and the quadratic `f = Σ λᵢⱼ dᵢdⱼ`, the
/// map `x ↦ f(xⁿ)` equals `Σ λᵢⱼ n² x^(2n-2) dᵢ(x)dⱼ(x)`.
pub fn derivation_power_scenario(
    ds: &[AdditiveMap],
    lambdas: &[Vec<FieldElem>],
    n: u32,
    samples: Vec<FieldElem>,
) -> Result<Scenario> {
    lambda_dims_ok(ds.len(), lambdas)?;
    let k = ds.len();
    let n_sq = FieldElem::from_int(i64::from(n) * i64::from(n));
    let mut form_terms = Vec::with_capacity(k * k);
    let mut rhs_terms = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in 0..k {
            let lambda = lambdas[i][j].clone();
            form_terms.push((
                lambda.clone(),
                SymForm::atom_product(vec![ds[i].clone(), ds[j].clone()])?,
            ));
            rhs_terms.push(UnaryFn::scaled(
                &lambda * &n_sq,
                UnaryFn::product(vec![
                    UnaryFn::ArgPower(2 * n - 2),
                    UnaryFn::atom(ds[i].clone()),
                    UnaryFn::atom(ds[j].clone()),
                ]),
            ));
        }
    }
    let f = SymForm::sum(2, form_terms)?;
    let lhs = compose_fn(&f.trace(), &ClassicalPoly::x_power(n as usize));
    Scenario::new(
        format!("derivation_power_k{k}_n{n}"),
        lhs,
        UnaryFn::sum(rhs_terms),
        samples,
        Expectation::Pass,
    )
}

/// Ordered compositions of `total` into `parts` nonnegative summands.
fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for head in 0..=total {
        for mut tail in compositions(total - head, parts - 1) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

fn multinomial(total: usize, parts: &[usize]) -> FieldElem {
    let mut c = crate::exactfield::factorial(total);
    for &p in parts {
        c /= crate::exactfield::factorial(p);
    }
    FieldElem::from_rat(c)
}

/// Scenario: for a derivation `d` and `f(x) = dᵏ(x²)`, the map
/// `x ↦ f(xⁿ) = dᵏ(x^(2n))` expands into the multinomial sum of products
/// `d^(l₁)(x)⋯d^(l_2n)(x)` over compositions `l₁+⋯+l_2n = k` (with `d⁰`
/// the identity).
pub fn iterated_derivation_scenario(
    d: &AdditiveMap,
    k: u32,
    n: u32,
    samples: Vec<FieldElem>,
) -> Result<Scenario> {
    assert!(k >= 1 && n >= 1, "iteration and power must be positive");
    let slots = 2 * n as usize;
    let dk = AdditiveMap::iterate(d, k as usize)?;
    let lhs = compose_fn(&UnaryFn::atom(dk), &ClassicalPoly::x_power(slots));
    let mut rhs_terms = Vec::new();
    for parts in compositions(k as usize, slots) {
        let mut factors = Vec::with_capacity(slots);
        for &l in &parts {
            if l == 0 {
                factors.push(UnaryFn::arg());
            } else {
                factors.push(UnaryFn::atom(AdditiveMap::iterate(d, l)?));
            }
        }
        let coeff = multinomial(k as usize, &parts);
        let product = UnaryFn::product(factors);
        rhs_terms.push(if coeff.is_one() {
            product
        } else {
            UnaryFn::scaled(coeff, product)
        });
    }
    Scenario::new(
        format!("iterated_derivation_k{k}_n{n}"),
        lhs,
        UnaryFn::sum(rhs_terms),
        samples,
        Expectation::Pass,
    )
}

/// The two classical polynomial-equation scenarios for an additive map
/// `a` and a rational-coefficient polynomial `P` of degree at least 2:
/// commutation `a(P(x)) = P(a(x))` and the chain rule
/// `a(P(x)) = P'(x)·a(x)`. Expected verdicts are supplied by the caller.
pub fn polynomial_equation_scenarios(
    a: &AdditiveMap,
    p: &ClassicalPoly,
    expect_commutation: Expectation,
    expect_chain_rule: Expectation,
    samples: Vec<FieldElem>,
) -> Result<(Scenario, Scenario)> {
    if !p.has_rational_coefficients() {
        return Err(Error::RationalCoefficientsRequired);
    }
    let degree = p.degree().unwrap_or(0);
    assert!(degree >= 2, "polynomial scenarios need degree >= 2");
    let map_fn = UnaryFn::atom(a.clone());
    let lhs = compose_fn(&map_fn, p);
    let commutation = Scenario::new(
        format!("poly_commutation_{}_deg{degree}", a.tag()),
        lhs.clone(),
        UnaryFn::PolyOf(p.clone(), alloc::boxed::Box::new(map_fn.clone())),
        samples.clone(),
        expect_commutation,
    )?;
    let chain_rule = Scenario::new(
        format!("poly_chain_rule_{}_deg{degree}", a.tag()),
        lhs,
        UnaryFn::product(vec![p.derivative().as_fn(), map_fn]),
        samples,
        expect_chain_rule,
    )?;
    Ok((commutation, chain_rule))
}

/// The symmetric 2n-additive kernel whose trace is `f(xⁿ) - a(x)^(2n)`
/// for a bi-additive form `f`: the power-block symmetrization of `f`
/// minus the symmetrized 2n-fold product of `a`.
pub fn even_power_kernel(f: &SymForm, a: &AdditiveMap, n: usize) -> Result<SymForm> {
    assert!(n >= 1, "power must be positive");
    if f.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: f.arity(),
        });
    }
    let blocks = SymForm::power_blocks(f.clone(), vec![n, n])?;
    let product = SymForm::atom_product(vec![a.clone(); 2 * n])?;
    SymForm::sum(
        2 * n,
        vec![
            (FieldElem::one(), blocks),
            (FieldElem::from_int(-1), product),
        ],
    )
}

/// The symmetric 4-additive kernel whose trace is
/// `f(x²) - a₁(x)²a₂(x)²`: the three-way block average of `f` over pair
/// products minus the six-way symmetrized `a₁a₁a₂a₂` product.
pub fn product_square_kernel(
    f: &SymForm,
    a1: &AdditiveMap,
    a2: &AdditiveMap,
) -> Result<SymForm> {
    if f.arity() != 2 {
        return Err(Error::ArityMismatch {
            expected: 2,
            got: f.arity(),
        });
    }
    let blocks = SymForm::power_blocks(f.clone(), vec![2, 2])?;
    let product =
        SymForm::atom_product(vec![a1.clone(), a1.clone(), a2.clone(), a2.clone()])?;
    SymForm::sum(
        4,
        vec![
            (FieldElem::one(), blocks),
            (FieldElem::from_int(-1), product),
        ],
    )
}

/// Configuration of the built-in suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Pseudo-random points added to the structured sample set.
    pub random_samples: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 7,
            random_samples: 10,
        }
    }
}

/// Aggregated result of a scenario batch, ordered by scenario name.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub seed: u64,
    pub random_samples: usize,
    pub sample_count: usize,
    /// Fixture conventions worth surfacing in every report.
    pub notes: Vec<String>,
    pub reports: Vec<VerifyReport>,
    pub mismatches: usize,
}

impl SuiteReport {
    pub fn all_matched(&self) -> bool {
        self.mismatches == 0
    }
}

/// Runs scenarios and aggregates, sorted by name; rejects an empty batch.
pub fn run_scenarios(scenarios: &[Scenario], config: &SuiteConfig) -> Result<SuiteReport> {
    if scenarios.is_empty() {
        return Err(Error::EmptyScenarioSet);
    }
    let mut reports: Vec<VerifyReport> = scenarios.iter().map(verify_identity).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    let mismatches = reports.iter().filter(|r| !r.matched()).count();
    let sample_count = scenarios.iter().map(|s| s.samples.len()).max().unwrap_or(0);
    Ok(SuiteReport {
        seed: config.seed,
        random_samples: config.random_samples,
        sample_count,
        notes: suite_notes(),
        reports,
        mismatches,
    })
}

fn suite_notes() -> Vec<String> {
    vec![
        "even-power fixtures instantiate a = (3/2)*sub(t^2) and f with the matching (3/2)^4 weight".to_string(),
        "product-square fixtures normalize a1(1)*a2(1) = 1, the value the identity forces at x = 1".to_string(),
    ]
}

fn certified(maps: &[AdditiveMap], samples: &[FieldElem]) -> Result<()> {
    let verdict = certify_independent(maps, samples)?;
    if !verdict.passed() {
        return Err(Error::DependentMaps {
            rank: verdict.rank(),
            required: maps.len(),
        });
    }
    Ok(())
}

/// Builds the full built-in scenario list with seeded samples.
pub fn builtin_scenarios(config: &SuiteConfig) -> Result<Vec<Scenario>> {
    let samples = default_samples(config.seed, config.random_samples);
    let t = FieldElem::var();
    let one = FieldElem::one();
    let identity = AdditiveMap::Identity;
    let ddt = AdditiveMap::ddt();
    let der_t = AdditiveMap::derivation(t.clone());
    let sub_t2 = AdditiveMap::substitution(t.powu(2))?;
    let sub_t_plus_1 = AdditiveMap::substitution(&t + &one)?;

    let mut scenarios = Vec::new();

    // quadratic homomorphism sums under x ↦ x^n
    certified(core::slice::from_ref(&sub_t2), &samples)?;
    certified(&[identity.clone(), sub_t_plus_1.clone()], &samples)?;
    let lambda1 = vec![vec![FieldElem::from_rat(rat(3, 2))]];
    let lambda2 = vec![
        vec![one.clone(), one.clone()],
        vec![FieldElem::zero(), one.clone()],
    ];
    for n in 1..=3 {
        scenarios.push(homomorphism_power_scenario(
            core::slice::from_ref(&sub_t2),
            &lambda1,
            n,
            samples.clone(),
        )?);
        scenarios.push(homomorphism_power_scenario(
            &[identity.clone(), sub_t_plus_1.clone()],
            &lambda2,
            n,
            samples.clone(),
        )?);
    }

    // quadratic derivation sums under x ↦ x^n
    certified(&[ddt.clone(), der_t.clone()], &samples)?;
    let swap = vec![
        vec![FieldElem::zero(), one.clone()],
        vec![one.clone(), FieldElem::zero()],
    ];
    for n in 1..=3 {
        scenarios.push(derivation_power_scenario(
            core::slice::from_ref(&ddt),
            &lambda1,
            n,
            samples.clone(),
        )?);
        scenarios.push(derivation_power_scenario(
            &[ddt.clone(), der_t.clone()],
            &swap,
            n,
            samples.clone(),
        )?);
    }

    // iterated derivations of even powers
    for n in 1..=2 {
        for k in 1..=3 {
            let d = if k == 3 { &der_t } else { &ddt };
            scenarios.push(iterated_derivation_scenario(d, k, n, samples.clone())?);
        }
    }

    // classical polynomial equations
    let (commutation, _) = polynomial_equation_scenarios(
        &sub_t2,
        &ClassicalPoly::from_ints(&[1, 2, 0, 1]),
        Expectation::Pass,
        Expectation::Fail,
        samples.clone(),
    )?;
    scenarios.push(commutation);
    let (commutation, chain_rule) = polynomial_equation_scenarios(
        &ddt,
        &ClassicalPoly::x_power(2),
        Expectation::Fail,
        Expectation::Pass,
        samples.clone(),
    )?;
    scenarios.push(commutation);
    scenarios.push(chain_rule);
    let (_, chain_rule) = polynomial_equation_scenarios(
        &ddt,
        &ClassicalPoly::x_power(3),
        Expectation::Fail,
        Expectation::Pass,
        samples.clone(),
    )?;
    scenarios.push(chain_rule);
    let (_, mut chain_rule) = polynomial_equation_scenarios(
        &ddt,
        &ClassicalPoly::from_ints(&[1, 0, 1]),
        Expectation::Fail,
        Expectation::Pass,
        samples.clone(),
    )?;
    // constant term of x^2 + 1 is absorbed by the derivative on the right
    chain_rule.name = "poly_chain_rule_der_deg2_shifted".into();
    scenarios.push(chain_rule);
    let (_, chain_rule) = polynomial_equation_scenarios(
        &sub_t2,
        &ClassicalPoly::x_power(2),
        Expectation::Pass,
        Expectation::Fail,
        samples.clone(),
    )?;
    scenarios.push(chain_rule);

    // f(x^n) = a(x)^(2n): converse instances and a derivation-based
    // counterexample, plus the kernel traces they induce
    let alpha = FieldElem::from_rat(rat(3, 2));
    let a_scaled = AdditiveMap::scaled(alpha.powu(1), sub_t2.clone());
    let f_scaled = SymForm::sum(
        2,
        vec![(
            alpha.powu(4),
            SymForm::atom_product(vec![sub_t2.clone(), sub_t2.clone()])?,
        )],
    )?;
    scenarios.push(even_power_scenario(
        "even_power_converse_n1",
        &SymForm::atom_product(vec![ddt.clone(), ddt.clone()])?,
        &ddt,
        1,
        Expectation::Pass,
        samples.clone(),
    )?);
    scenarios.push(even_power_scenario(
        "even_power_converse_n2",
        &f_scaled,
        &a_scaled,
        2,
        Expectation::Pass,
        samples.clone(),
    )?);
    let f_der = SymForm::atom_product(vec![ddt.clone(), ddt.clone()])?;
    scenarios.push(even_power_scenario(
        "even_power_negative_n2",
        &f_der,
        &ddt,
        2,
        Expectation::Fail,
        samples.clone(),
    )?);
    scenarios.push(kernel_trace_scenario(
        "even_power_kernel_trace_n2",
        even_power_kernel(&f_scaled, &a_scaled, 2)?,
        Expectation::Pass,
        samples.clone(),
    )?);
    scenarios.push(kernel_trace_scenario(
        "even_power_kernel_trace_negative",
        even_power_kernel(&f_der, &ddt, 2)?,
        Expectation::Fail,
        samples.clone(),
    )?);

    // f(x^2) = a1(x)^2 a2(x)^2: converse, degenerate equal maps, and a
    // perturbed counterexample, plus kernel traces
    let a1 = AdditiveMap::scaled(FieldElem::from_int(2), identity.clone());
    let a2 = AdditiveMap::scaled(FieldElem::from_rat(rat(1, 2)), sub_t_plus_1.clone());
    let f_pair = SymForm::sum(
        2,
        vec![(
            one.clone(),
            SymForm::atom_product(vec![identity.clone(), sub_t_plus_1.clone()])?,
        )],
    )?;
    scenarios.push(product_square_scenario(
        "product_square_converse",
        &f_pair,
        &a1,
        &a2,
        Expectation::Pass,
        samples.clone(),
    )?);
    let f_equal = SymForm::atom_product(vec![sub_t2.clone(), sub_t2.clone()])?;
    scenarios.push(product_square_scenario(
        "product_square_equal_maps",
        &f_equal,
        &sub_t2,
        &sub_t2,
        Expectation::Pass,
        samples.clone(),
    )?);
    scenarios.push(product_square_scenario(
        "product_square_negative",
        &f_pair,
        &a1,
        &ddt,
        Expectation::Fail,
        samples.clone(),
    )?);
    scenarios.push(kernel_trace_scenario(
        "product_square_kernel_trace",
        product_square_kernel(&f_pair, &a1, &a2)?,
        Expectation::Pass,
        samples.clone(),
    )?);
    scenarios.push(kernel_trace_scenario(
        "product_square_kernel_trace_negative",
        product_square_kernel(&f_pair, &a1, &ddt)?,
        Expectation::Fail,
        samples,
    )?);

    Ok(scenarios)
}

/// Scenario comparing `f(xⁿ)` against `a(x)^(2n)`.
fn even_power_scenario(
    name: &str,
    f: &SymForm,
    a: &AdditiveMap,
    n: u32,
    expected: Expectation,
    samples: Vec<FieldElem>,
) -> Result<Scenario> {
    let lhs = compose_fn(&f.trace(), &ClassicalPoly::x_power(n as usize));
    let rhs = UnaryFn::power(UnaryFn::atom(a.clone()), 2 * n);
    Scenario::new(name, lhs, rhs, samples, expected)
}

/// Scenario comparing `f(x²)` against `a₁(x)²·a₂(x)²`.
fn product_square_scenario(
    name: &str,
    f: &SymForm,
    a1: &AdditiveMap,
    a2: &AdditiveMap,
    expected: Expectation,
    samples: Vec<FieldElem>,
) -> Result<Scenario> {
    let lhs = compose_fn(&f.trace(), &ClassicalPoly::x_power(2));
    let rhs = UnaryFn::product(vec![
        UnaryFn::power(UnaryFn::atom(a1.clone()), 2),
        UnaryFn::power(UnaryFn::atom(a2.clone()), 2),
    ]);
    Scenario::new(name, lhs, rhs, samples, expected)
}

/// Scenario asserting that a kernel's trace vanishes identically.
fn kernel_trace_scenario(
    name: &str,
    kernel: SymForm,
    expected: Expectation,
    samples: Vec<FieldElem>,
) -> Result<Scenario> {
    Scenario::new(
        name,
        kernel.trace(),
        UnaryFn::constant(FieldElem::zero()),
        samples,
        expected,
    )
}

/// Builds and runs every built-in scenario.
pub fn builtin_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    run_scenarios(&builtin_scenarios(config)?, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multiadd::{check_zero_trace_form, for_each_permutation, ZeroTraceVerdict};
    use crate::sample::SampleGen;

    fn t() -> FieldElem {
        FieldElem::var()
    }

    fn config() -> SuiteConfig {
        SuiteConfig::default()
    }

    #[test]
    fn syntactically_equal_sides_pass() {
        let f = UnaryFn::power(UnaryFn::atom(AdditiveMap::ddt()), 2);
        let s = Scenario::new("same", f.clone(), f, vec![t()], Expectation::Pass).unwrap();
        assert!(verify_identity(&s).matched());
    }

    #[test]
    fn mismatch_reports_first_witness() {
        let lhs = UnaryFn::atom(AdditiveMap::ddt());
        let rhs = UnaryFn::constant(FieldElem::one());
        let samples = vec![t().powu(0), t(), t().powu(2)];
        // d/dt(1) = 0 ≠ 1 already at the first sample
        let s = Scenario::new("w", lhs, rhs, samples, Expectation::Pass).unwrap();
        match verify_identity(&s).outcome {
            Outcome::Fail(w) => {
                assert!(w.inputs[0].is_one());
                assert!(w.lhs.is_zero());
            }
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn eval_failure_is_reported() {
        let lhs = UnaryFn::quotient(UnaryFn::arg(), UnaryFn::atom(AdditiveMap::ddt()));
        let s = Scenario::new(
            "bad",
            lhs,
            UnaryFn::constant(FieldElem::zero()),
            vec![FieldElem::from_int(2)],
            Expectation::Pass,
        )
        .unwrap();
        let report = verify_identity(&s);
        assert!(matches!(report.outcome, Outcome::EvalFailure { .. }));
        assert!(!report.matched());
    }

    #[test]
    fn empty_samples_rejected() {
        assert_eq!(
            Scenario::new("x", UnaryFn::arg(), UnaryFn::arg(), vec![], Expectation::Pass),
            Err(Error::EmptySamples)
        );
    }

    #[test]
    fn suite_all_verdicts_match() {
        let report = builtin_suite(&config()).unwrap();
        let failed: Vec<&VerifyReport> =
            report.reports.iter().filter(|r| !r.matched()).collect();
        assert!(failed.is_empty(), "mismatched scenarios: {failed:?}");
        assert_eq!(report.mismatches, 0);
        assert!(report.reports.len() >= 25);
        // names are sorted and unique
        for pair in report.reports.windows(2) {
            assert!(pair[0].name < pair[1].name);
        }
    }

    #[test]
    fn corrupted_fixture_is_detected_by_name() {
        let mut scenarios = builtin_scenarios(&config()).unwrap();
        let victim = scenarios
            .iter_mut()
            .find(|s| s.name == "derivation_power_k2_n3")
            .expect("fixture exists");
        victim.expected = Expectation::Fail;
        let report = run_scenarios(&scenarios, &config()).unwrap();
        assert_eq!(report.mismatches, 1);
        let mismatch = report.reports.iter().find(|r| !r.matched()).unwrap();
        assert_eq!(mismatch.name, "derivation_power_k2_n3");
    }

    #[test]
    fn empty_scenario_list_is_an_error() {
        assert_eq!(
            run_scenarios(&[], &config()),
            Err(Error::EmptyScenarioSet)
        );
    }

    #[test]
    fn iterated_derivation_small_case_by_hand() {
        // d^2(x^2) = 2 d(x)^2 + 2 x d^2(x); at x = t both sides equal 2
        let s = iterated_derivation_scenario(&AdditiveMap::ddt(), 2, 1, vec![t()]).unwrap();
        assert_eq!(s.lhs.eval(&t()).unwrap(), FieldElem::from_int(2));
        assert_eq!(s.rhs.eval(&t()).unwrap(), FieldElem::from_int(2));
        assert!(verify_identity(&s).matched());
    }

    #[test]
    fn homomorphism_membership_of_scaled_fixture() {
        // the commutation scenario's conclusion pins a(1) to 0 or 1 on
        // fixtures where it is computable
        let sub_t2 = AdditiveMap::substitution(t().powu(2)).unwrap();
        let at_one = sub_t2.eval(&FieldElem::one()).unwrap();
        assert!(at_one.is_one() || at_one.is_zero());
        let at_one = AdditiveMap::ddt().eval(&FieldElem::one()).unwrap();
        assert!(at_one.is_one() || at_one.is_zero());
    }

    #[test]
    fn even_power_kernel_matches_displayed_formula() {
        // oracle: (1/(2n)!) Σ_σ f(x_{σ(1)}⋯x_{σ(n)}, x_{σ(n+1)}⋯x_{σ(2n)})
        //         - a(x_1)⋯a(x_2n), enumerated over all permutations
        let n = 2usize;
        let f = SymForm::sum(
            2,
            vec![(
                FieldElem::from_rat(rat(3, 2)),
                SymForm::atom_product(vec![
                    AdditiveMap::ddt(),
                    AdditiveMap::substitution(t().powu(2)).unwrap(),
                ])
                .unwrap(),
            )],
        )
        .unwrap();
        let a = AdditiveMap::derivation(&t() + &FieldElem::one());
        let kernel = even_power_kernel(&f, &a, n).unwrap();
        let mut gen = SampleGen::new(113);
        for _ in 0..3 {
            let args = gen.tuple(2 * n);
            let got = kernel.eval(&args).unwrap();
            let mut sym = FieldElem::zero();
            let mut count = 0u64;
            for_each_permutation(2 * n, |perm| {
                let first = perm[..n]
                    .iter()
                    .fold(FieldElem::one(), |acc, &i| &acc * &args[i]);
                let second = perm[n..]
                    .iter()
                    .fold(FieldElem::one(), |acc, &i| &acc * &args[i]);
                sym = &sym + &f.eval(&[first, second]).unwrap();
                count += 1;
            });
            let avg = sym
                .div(&FieldElem::from_int(count as i64))
                .unwrap();
            let mut prod = FieldElem::one();
            for x in &args {
                prod = &prod * &a.eval(x).unwrap();
            }
            assert_eq!(got, &avg - &prod);
        }
    }

    #[test]
    fn product_square_kernel_matches_displayed_formula() {
        // oracle: [f(x1x4, x2x3) + f(x1x3, x2x4) + f(x1x2, x3x4)]/3 minus
        // the six a1a1a2a2 slot assignments over 6
        let f = SymForm::atom_product(vec![
            AdditiveMap::Identity,
            AdditiveMap::substitution(&t() + &FieldElem::one()).unwrap(),
        ])
        .unwrap();
        let a1 = AdditiveMap::ddt();
        let a2 = AdditiveMap::substitution(t().powu(2)).unwrap();
        let kernel = product_square_kernel(&f, &a1, &a2).unwrap();
        let mut gen = SampleGen::new(127);
        for _ in 0..3 {
            let args = gen.tuple(4);
            let got = kernel.eval(&args).unwrap();
            let pair = |i: usize, j: usize| &args[i] * &args[j];
            let three_way = &(&f.eval(&[pair(0, 3), pair(1, 2)]).unwrap()
                + &f.eval(&[pair(0, 2), pair(1, 3)]).unwrap())
                + &f.eval(&[pair(0, 1), pair(2, 3)]).unwrap();
            let f_part = three_way.div(&FieldElem::from_int(3)).unwrap();
            let a1v: Vec<FieldElem> = args.iter().map(|x| a1.eval(x).unwrap()).collect();
            let a2v: Vec<FieldElem> = args.iter().map(|x| a2.eval(x).unwrap()).collect();
            let assignments = [
                [0usize, 1, 2, 3],
                [0, 2, 1, 3],
                [1, 2, 0, 3],
                [0, 3, 1, 2],
                [1, 3, 0, 2],
                [2, 3, 0, 1],
            ];
            let mut a_part = FieldElem::zero();
            for [i, j, k, l] in assignments {
                a_part = &a_part + &(&(&a1v[i] * &a1v[j]) * &(&a2v[k] * &a2v[l]));
            }
            let a_part = a_part.div(&FieldElem::from_int(6)).unwrap();
            assert_eq!(got, &f_part - &a_part);
        }
    }

    #[test]
    fn kernel_traces_feed_zero_trace_propagation() {
        // when the converse identity holds, the kernel vanishes on tuples
        let alpha = FieldElem::from_rat(rat(3, 2));
        let phi = AdditiveMap::substitution(t().powu(2)).unwrap();
        let a = AdditiveMap::scaled(alpha.clone(), phi.clone());
        let f = SymForm::sum(
            2,
            vec![(
                alpha.powu(4),
                SymForm::atom_product(vec![phi.clone(), phi]).unwrap(),
            )],
        )
        .unwrap();
        let kernel = even_power_kernel(&f, &a, 2).unwrap();
        let points = default_samples(7, 4);
        match check_zero_trace_form(&kernel, &points[..8]).unwrap() {
            ZeroTraceVerdict::FormVanishes { tuples_checked } => assert!(tuples_checked >= 4),
            other => panic!("kernel must vanish, got {other:?}"),
        }
    }
}
