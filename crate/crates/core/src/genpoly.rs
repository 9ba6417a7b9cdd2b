//! Classical polynomials over ℚ(t), composition `x ↦ f(P(x))`,
//! homogeneous component extraction by rational scaling, and the
//! generalized-monomial degree test.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::atoms::{Verdict, Witness};
use crate::error::{Error, Result};
use crate::exactfield::{factorial, rat_int, FieldElem, Rat};
use crate::linalg;
use crate::multiadd::{delta, UnaryFn};

/// A classical polynomial with coefficients in ℚ(t), lowest degree first.
/// Canonical: trailing zero coefficients are stripped, so the leading
/// coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalPoly {
    coeffs: Vec<FieldElem>,
}

impl ClassicalPoly {
    pub fn new(mut coeffs: Vec<FieldElem>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ClassicalPoly { coeffs }
    }

    pub fn zero() -> Self {
        ClassicalPoly { coeffs: Vec::new() }
    }

    pub fn from_rats(coeffs: Vec<Rat>) -> Self {
        ClassicalPoly::new(coeffs.into_iter().map(FieldElem::from_rat).collect())
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        ClassicalPoly::new(coeffs.iter().map(|&c| FieldElem::from_int(c)).collect())
    }

    /// The monomial `x^k`.
    pub fn x_power(k: usize) -> Self {
        let mut coeffs = vec![FieldElem::zero(); k + 1];
        coeffs[k] = FieldElem::one();
        ClassicalPoly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn has_rational_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_constant())
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// The formal derivative.
    pub fn derivative(&self) -> ClassicalPoly {
        if self.coeffs.len() <= 1 {
            return ClassicalPoly::zero();
        }
        ClassicalPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| &FieldElem::from_int(i as i64) * c)
                .collect(),
        )
    }

    /// This polynomial as a one-variable function.
    pub fn as_fn(&self) -> UnaryFn {
        UnaryFn::PolyOf(self.clone(), alloc::boxed::Box::new(UnaryFn::arg()))
    }
}

impl fmt::Display for ClassicalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "poly[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// `x ↦ f(P(x))`.
pub fn compose_fn(f: &UnaryFn, p: &ClassicalPoly) -> UnaryFn {
    UnaryFn::compose_with(f.clone(), p.as_fn())
}

/// Default interpolation nodes `1, 2, …, bound+1`.
pub fn default_nodes(bound: usize) -> Vec<Rat> {
    (1..=bound as i64 + 1).map(rat_int).collect()
}

/// Degree-indexed values of the homogeneous components of `g` at the
/// sample points: `values[i][l]` is the degree-`l` component at `xs[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSplit {
    pub degree_bound: usize,
    pub xs: Vec<FieldElem>,
    pub values: Vec<Vec<FieldElem>>,
}

impl ComponentSplit {
    /// The degree-`l` component at sample index `i`.
    pub fn component(&self, i: usize, l: usize) -> &FieldElem {
        &self.values[i][l]
    }

    /// Sum of all components at sample index `i`.
    pub fn total(&self, i: usize) -> FieldElem {
        let mut acc = FieldElem::zero();
        for v in &self.values[i] {
            acc = &acc + v;
        }
        acc
    }
}

/// Splits `g` into homogeneous components of degree `0..=degree_bound`
/// under rational scaling, exactly, by solving the Vandermonde system
/// `g(r_j·x) = Σ_l c_l(x)·r_j^l` at the given nodes for each sample `x`.
///
/// Meaningful when `g(q·x)` is a polynomial of degree at most
/// `degree_bound` in the rational scale `q` for each fixed `x`; outside
/// that regime the components simply fail the downstream consistency
/// checks.
pub fn homogeneous_components(
    g: &UnaryFn,
    degree_bound: usize,
    nodes: &[Rat],
    xs: &[FieldElem],
) -> Result<ComponentSplit> {
    if nodes.len() != degree_bound + 1 {
        return Err(Error::NodeCountMismatch {
            expected: degree_bound + 1,
            got: nodes.len(),
        });
    }
    for (i, n) in nodes.iter().enumerate() {
        if n == &Rat::from_integer(0.into()) {
            return Err(Error::ZeroNode);
        }
        if nodes[i + 1..].contains(n) {
            return Err(Error::DuplicateNodes);
        }
    }
    let matrix: Vec<Vec<FieldElem>> = nodes
        .iter()
        .map(|r| {
            let mut row = Vec::with_capacity(degree_bound + 1);
            let mut p = Rat::from_integer(1.into());
            for _ in 0..=degree_bound {
                row.push(FieldElem::from_rat(p.clone()));
                p *= r;
            }
            row
        })
        .collect();
    let mut values = Vec::with_capacity(xs.len());
    for x in xs {
        let mut rhs = Vec::with_capacity(nodes.len());
        for r in nodes {
            let scaled = &FieldElem::from_rat(r.clone()) * x;
            rhs.push(g.eval(&scaled)?);
        }
        values.push(linalg::solve(matrix.clone(), rhs)?);
    }
    Ok(ComponentSplit {
        degree_bound,
        xs: xs.to_vec(),
        values,
    })
}

// Deterministic caps keeping the difference-operator checks affordable:
// every sample serves as a base point, but only this many increment
// windows and diagonal pairs are expanded per call.
const MAX_WINDOWS: usize = 2;
const MAX_BASES: usize = 8;
const MAX_PAIRS: usize = 12;

/// Tests whether `f` behaves like the trace of a symmetric n-additive
/// form: (a) the (n+1)-fold difference vanishes and (b) the n-fold
/// diagonal difference satisfies `Δⁿ_y f(x) = n!·f(y)`, both exactly at
/// samples drawn from the supplied points.
pub fn is_generalized_monomial_of_degree(
    f: &UnaryFn,
    n: usize,
    samples: &[FieldElem],
) -> Result<Verdict> {
    if samples.len() < n + 2 {
        return Err(Error::InsufficientSamples {
            needed: n + 2,
            got: samples.len(),
        });
    }
    for window in samples.windows(n + 1).take(MAX_WINDOWS) {
        let diff = delta(f, window);
        for base in samples.iter().take(MAX_BASES) {
            let v = diff.eval(base)?;
            if !v.is_zero() {
                let mut inputs = window.to_vec();
                inputs.push(base.clone());
                return Ok(Verdict::Fail(Witness {
                    inputs,
                    lhs: v,
                    rhs: FieldElem::zero(),
                }));
            }
        }
    }
    let n_fact = FieldElem::from_rat(factorial(n));
    for (i, y) in samples.iter().take(MAX_PAIRS).enumerate() {
        let x = &samples[(i + 1) % samples.len()];
        let diff = delta(f, &vec![y.clone(); n]);
        let lhs = diff.eval(x)?;
        let rhs = &n_fact * &f.eval(y)?;
        if lhs != rhs {
            return Ok(Verdict::Fail(Witness {
                inputs: vec![x.clone(), y.clone()],
                lhs,
                rhs,
            }));
        }
    }
    Ok(Verdict::Pass)
}

/// The least degree `n ≤ max_degree` at which
/// [`is_generalized_monomial_of_degree`] passes, if any.
pub fn monomial_degree(
    f: &UnaryFn,
    max_degree: usize,
    samples: &[FieldElem],
) -> Result<Option<usize>> {
    for n in 0..=max_degree {
        if is_generalized_monomial_of_degree(f, n, samples)?.passed() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atoms::AdditiveMap;
    use crate::multiadd::SymForm;
    use crate::sample::{default_samples, SampleGen};
    use alloc::vec;

    fn t() -> FieldElem {
        FieldElem::var()
    }

    fn int(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }

    fn ddt() -> AdditiveMap {
        AdditiveMap::ddt()
    }

    #[test]
    fn poly_eval_cases() {
        let p = ClassicalPoly::from_ints(&[0, 1, 1]); // x^2 + x
        assert_eq!(p.eval(&t()), &t().powu(2) + &t());
        let c = ClassicalPoly::from_ints(&[1]);
        assert!(c.eval(&t().powu(3)).is_one());
        // coefficients may live in the field: x^2 + t·x + 2 at x = t
        let p = ClassicalPoly::new(vec![int(2), t(), FieldElem::one()]);
        assert_eq!(p.eval(&t()), &(&int(2) * &t().powu(2)) + &int(2));
    }

    #[test]
    fn poly_derivative_cases() {
        assert_eq!(
            ClassicalPoly::x_power(5).derivative(),
            ClassicalPoly::new(vec![
                FieldElem::zero(),
                FieldElem::zero(),
                FieldElem::zero(),
                FieldElem::zero(),
                int(5)
            ])
        );
        assert!(ClassicalPoly::from_ints(&[3]).derivative().is_zero());
        assert_eq!(
            ClassicalPoly::from_ints(&[0, 2, 0, 1]).derivative(),
            ClassicalPoly::from_ints(&[2, 0, 3])
        );
    }

    #[test]
    fn compose_fn_cases() {
        let d = UnaryFn::atom(ddt());
        let sq = ClassicalPoly::x_power(2);
        // d(x^2) at t is 2t
        assert_eq!(compose_fn(&d, &sq).eval(&t()).unwrap(), &int(2) * &t());
        // quadratic trace under x^2 + x: d(t^2+t)^2 = (2t+1)^2
        let f = SymForm::atom_product(vec![ddt(), ddt()]).unwrap().trace();
        let p = ClassicalPoly::from_ints(&[0, 1, 1]);
        let expected = (&(&int(2) * &t()) + &FieldElem::one()).powu(2);
        assert_eq!(compose_fn(&f, &p).eval(&t()).unwrap(), expected);
        // composing with x changes nothing
        let idp = ClassicalPoly::x_power(1);
        let mut gen = SampleGen::new(131);
        for _ in 0..5 {
            let x = gen.field_elem();
            assert_eq!(compose_fn(&f, &idp).eval(&x).unwrap(), f.eval(&x).unwrap());
        }
    }

    fn quadratic_trace_under_x2_plus_x() -> UnaryFn {
        let f = SymForm::atom_product(vec![ddt(), ddt()]).unwrap().trace();
        compose_fn(&f, &ClassicalPoly::from_ints(&[0, 1, 1]))
    }

    #[test]
    fn components_of_quadratic_composition() {
        let g = quadratic_trace_under_x2_plus_x();
        let split =
            homogeneous_components(&g, 4, &default_nodes(4), &[t()]).unwrap();
        // degrees 4, 3, 2 at x = t evaluate to 4t^2, 4t, 1; the rest vanish
        assert_eq!(split.component(0, 4), &(&int(4) * &t().powu(2)));
        assert_eq!(split.component(0, 3), &(&int(4) * &t()));
        assert!(split.component(0, 2).is_one());
        assert!(split.component(0, 1).is_zero());
        assert!(split.component(0, 0).is_zero());
    }

    #[test]
    fn component_completeness_and_homogeneity() {
        let g = quadratic_trace_under_x2_plus_x();
        let xs = vec![t(), &t() + &FieldElem::one(), t().powu(2)];
        let split = homogeneous_components(&g, 4, &default_nodes(4), &xs).unwrap();
        let mut gen = SampleGen::new(137);
        for (i, x) in xs.iter().enumerate() {
            assert_eq!(split.total(i), g.eval(x).unwrap());
            for _ in 0..5 {
                let q = gen.nonzero_rat(9);
                let scaled = &FieldElem::from_rat(q.clone()) * x;
                let scaled_split =
                    homogeneous_components(&g, 4, &default_nodes(4), &[scaled]).unwrap();
                for l in 0..=4 {
                    let expected =
                        &FieldElem::from_rat(q.clone()).pow(l as i64).unwrap()
                            * split.component(i, l);
                    assert_eq!(scaled_split.component(0, l), &expected, "degree {l}");
                }
            }
        }
    }

    #[test]
    fn node_set_independence() {
        let g = quadratic_trace_under_x2_plus_x();
        let xs = vec![t(), t().powu(2)];
        let a = homogeneous_components(&g, 4, &default_nodes(4), &xs).unwrap();
        let alt: Vec<Rat> = [2i64, 3, 5, 7, 11].iter().map(|&n| rat_int(n)).collect();
        let b = homogeneous_components(&g, 4, &alt, &xs).unwrap();
        let neg: Vec<Rat> = vec![
            rat_int(-1),
            crate::exactfield::rat(1, 2),
            rat_int(3),
            rat_int(-2),
            rat_int(5),
        ];
        let c = homogeneous_components(&g, 4, &neg, &xs).unwrap();
        assert_eq!(a.values, b.values);
        assert_eq!(a.values, c.values);
    }

    #[test]
    fn component_errors() {
        let g = UnaryFn::arg();
        assert_eq!(
            homogeneous_components(&g, 2, &[rat_int(1), rat_int(1), rat_int(2)], &[t()]),
            Err(Error::DuplicateNodes)
        );
        assert_eq!(
            homogeneous_components(&g, 2, &[rat_int(0), rat_int(1), rat_int(2)], &[t()]),
            Err(Error::ZeroNode)
        );
        assert_eq!(
            homogeneous_components(&g, 2, &[rat_int(1)], &[t()]),
            Err(Error::NodeCountMismatch { expected: 3, got: 1 })
        );
    }

    #[test]
    fn constant_splits_into_degree_zero() {
        let g = UnaryFn::constant(int(5));
        let split = homogeneous_components(&g, 3, &default_nodes(3), &[t()]).unwrap();
        assert_eq!(split.component(0, 0), &int(5));
        for l in 1..=3 {
            assert!(split.component(0, l).is_zero());
        }
    }

    #[test]
    fn homogeneous_input_is_its_own_component() {
        // a trace of degree 2 is purely the degree-2 component
        let g = SymForm::atom_product(vec![ddt(), ddt()]).unwrap().trace();
        let xs = vec![t(), &t() + &FieldElem::one()];
        let split = homogeneous_components(&g, 4, &default_nodes(4), &xs).unwrap();
        for (i, x) in xs.iter().enumerate() {
            assert_eq!(split.component(i, 2), &g.eval(x).unwrap());
            for l in [0usize, 1, 3, 4] {
                assert!(split.component(i, l).is_zero());
            }
        }
    }

    #[test]
    fn top_component_is_the_power_substitution() {
        // with f a degree-n trace and monic P of degree k, the top
        // component of f(P(x)) is x ↦ F(x^k, …, x^k)
        let form = SymForm::atom_product(vec![ddt(), ddt()]).unwrap();
        let g = compose_fn(&form.trace(), &ClassicalPoly::from_ints(&[0, 1, 1]));
        let xs = vec![t(), t().powu(2), &t() + &FieldElem::one()];
        let split = homogeneous_components(&g, 4, &default_nodes(4), &xs).unwrap();
        for (i, x) in xs.iter().enumerate() {
            let expected = form.eval(&[x.powu(2), x.powu(2)]).unwrap();
            assert_eq!(split.component(i, 4), &expected);
        }
    }

    #[test]
    fn five_term_split_of_general_quadratic_composition() {
        // F(P(x), P(x)) for P = x^2 + α₁x + α₀ splits degreewise into
        // F(x²,x²) | 2F(x²,α₁x) | 2F(x²,α₀)+F(α₁x,α₁x) | 2F(α₁x,α₀) | F(α₀,α₀)
        let form = SymForm::atom_product(vec![ddt(), AdditiveMap::Identity]).unwrap();
        let alpha1 = t();
        let alpha0 = int(2);
        let p = ClassicalPoly::new(vec![alpha0.clone(), alpha1.clone(), FieldElem::one()]);
        let g = compose_fn(&form.trace(), &p);
        let xs = vec![t(), t().powu(2), &t().powu(2) + &t()];
        let split = homogeneous_components(&g, 4, &default_nodes(4), &xs).unwrap();
        let two = int(2);
        for (i, x) in xs.iter().enumerate() {
            let x2 = x.powu(2);
            let a1x = &alpha1 * x;
            let deg4 = form.eval(&[x2.clone(), x2.clone()]).unwrap();
            let deg3 = &two * &form.eval(&[x2.clone(), a1x.clone()]).unwrap();
            let deg2 = &(&two * &form.eval(&[x2.clone(), alpha0.clone()]).unwrap())
                + &form.eval(&[a1x.clone(), a1x.clone()]).unwrap();
            let deg1 = &two * &form.eval(&[a1x, alpha0.clone()]).unwrap();
            let deg0 = form.eval(&[alpha0.clone(), alpha0.clone()]).unwrap();
            assert_eq!(split.component(i, 4), &deg4);
            assert_eq!(split.component(i, 3), &deg3);
            assert_eq!(split.component(i, 2), &deg2);
            assert_eq!(split.component(i, 1), &deg1);
            assert_eq!(split.component(i, 0), &deg0);
        }
    }

    #[test]
    fn monomial_degree_detection() {
        let samples = default_samples(7, 10);
        let additive = UnaryFn::atom(ddt());
        assert!(is_generalized_monomial_of_degree(&additive, 1, &samples)
            .unwrap()
            .passed());
        assert_eq!(monomial_degree(&additive, 4, &samples).unwrap(), Some(1));
        let quadratic = SymForm::atom_product(vec![ddt(), ddt()]).unwrap().trace();
        assert_eq!(monomial_degree(&quadratic, 4, &samples).unwrap(), Some(2));
        assert_eq!(
            monomial_degree(&UnaryFn::constant(int(5)), 4, &samples).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn additive_map_fails_degree_two_via_diagonal_clause() {
        let samples = default_samples(7, 10);
        let additive = UnaryFn::atom(ddt());
        match is_generalized_monomial_of_degree(&additive, 2, &samples).unwrap() {
            Verdict::Fail(w) => {
                // the (n+1)-fold difference vanishes, so the witness comes
                // from the diagonal clause with rhs = 2!·f(y) ≠ 0
                assert!(w.lhs.is_zero());
                assert!(!w.rhs.is_zero());
            }
            Verdict::Pass => panic!("an additive map is not a quadratic monomial"),
        }
    }

    #[test]
    fn degree_composition_multiplies() {
        let samples = default_samples(7, 10);
        // degree-1 map under x^2 has degree 2
        let a = UnaryFn::atom(ddt());
        let g = compose_fn(&a, &ClassicalPoly::x_power(2));
        assert_eq!(monomial_degree(&g, 4, &samples).unwrap(), Some(2));
    }

    #[test]
    fn insufficient_samples_error() {
        let samples = vec![t(), t().powu(2)];
        assert_eq!(
            is_generalized_monomial_of_degree(&UnaryFn::arg(), 3, &samples),
            Err(Error::InsufficientSamples { needed: 5, got: 2 })
        );
    }
}
