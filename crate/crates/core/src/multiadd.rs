//! Symmetric multi-additive forms, traces, difference operators, and the
//! polarization construction.
//!
//! Forms are never expanded into a canonical basis: a [`SymForm`] is an
//! evaluable AST, and every identity about forms is checked by exact
//! evaluation at sample tuples. Power-block forms are evaluated by
//! enumerating ordered block partitions rather than all permutations,
//! which is equivalent to the full symmetrized sum (the within-block
//! orderings collapse) and keeps arity-6 evaluation cheap.

use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::atoms::{AdditiveMap, Witness};
use crate::error::{Error, Result};
use crate::exactfield::{factorial, fmt_operand, rat_int, FieldElem};
use crate::genpoly::ClassicalPoly;

/// An evaluable symmetric k-additive form ℚ(t)ᵏ → ℚ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymForm {
    /// `A(x₁,…,x_k) = a(x₁⋯x_k)`.
    PullbackProduct { arity: usize, map: AdditiveMap },
    /// `Ã(x₁,…,x_k) = (1/k!) Σ_σ Π_i aᵢ(x_{σ(i)})`.
    AtomProduct(Vec<AdditiveMap>),
    /// The power-block symmetrization of an n-ary base form with block
    /// exponents `alphas`; arity is `Σ alphas` and the trace is
    /// `x ↦ base(x^{α₁},…,x^{αₙ})`.
    PowerBlocks {
        base: Box<SymForm>,
        alphas: Vec<usize>,
    },
    /// `Σ cᵢ·Fᵢ` over forms of one shared arity.
    Sum {
        arity: usize,
        terms: Vec<(FieldElem, SymForm)>,
    },
}

impl SymForm {
    pub fn pullback(map: AdditiveMap, arity: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::EmptyForm);
        }
        Ok(SymForm::PullbackProduct { arity, map })
    }

    pub fn atom_product(maps: Vec<AdditiveMap>) -> Result<Self> {
        if maps.is_empty() {
            return Err(Error::EmptyForm);
        }
        Ok(SymForm::AtomProduct(maps))
    }

    pub fn power_blocks(base: SymForm, alphas: Vec<usize>) -> Result<Self> {
        if alphas.len() != base.arity() {
            return Err(Error::BlockCountMismatch {
                expected: base.arity(),
                got: alphas.len(),
            });
        }
        if alphas.iter().sum::<usize>() == 0 {
            return Err(Error::EmptyBlocks);
        }
        Ok(SymForm::PowerBlocks {
            base: Box::new(base),
            alphas,
        })
    }

    pub fn sum(arity: usize, terms: Vec<(FieldElem, SymForm)>) -> Result<Self> {
        for (_, form) in &terms {
            if form.arity() != arity {
                return Err(Error::MixedArity {
                    expected: arity,
                    got: form.arity(),
                });
            }
        }
        Ok(SymForm::Sum { arity, terms })
    }

    /// The zero form of the given arity.
    pub fn zero(arity: usize) -> Self {
        SymForm::Sum {
            arity,
            terms: Vec::new(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            SymForm::PullbackProduct { arity, .. } => *arity,
            SymForm::AtomProduct(maps) => maps.len(),
            SymForm::PowerBlocks { alphas, .. } => alphas.iter().sum(),
            SymForm::Sum { arity, .. } => *arity,
        }
    }

    /// Exact evaluation at an argument tuple.
    pub fn eval(&self, args: &[FieldElem]) -> Result<FieldElem> {
        if args.len() != self.arity() {
            return Err(Error::ArityMismatch {
                expected: self.arity(),
                got: args.len(),
            });
        }
        match self {
            SymForm::PullbackProduct { map, .. } => {
                let mut prod = FieldElem::one();
                for a in args {
                    prod = &prod * a;
                }
                map.eval(&prod)
            }
            SymForm::AtomProduct(maps) => {
                let k = maps.len();
                let mut values = Vec::with_capacity(k);
                for m in maps {
                    let row: Result<Vec<FieldElem>> = args.iter().map(|a| m.eval(a)).collect();
                    values.push(row?);
                }
                let total = permanent(&values);
                total.div(&FieldElem::from_rat(factorial(k)))
            }
            SymForm::PowerBlocks { base, alphas } => eval_power_blocks(base, alphas, args),
            SymForm::Sum { terms, .. } => {
                let mut acc = FieldElem::zero();
                for (c, form) in terms {
                    acc = &acc + &(c * &form.eval(args)?);
                }
                Ok(acc)
            }
        }
    }

    /// The diagonalization `x ↦ A(x,…,x)`.
    pub fn trace(&self) -> UnaryFn {
        UnaryFn::Trace(self.clone())
    }

    /// The value at `(x, …, x)`. Symmetrization collapses on a constant
    /// tuple, so this skips the permutation and partition sums; it agrees
    /// with `eval` on the diagonal exactly.
    pub fn eval_diagonal(&self, x: &FieldElem) -> Result<FieldElem> {
        match self {
            SymForm::PullbackProduct { arity, map } => map.eval(&x.powu(*arity as u32)),
            SymForm::AtomProduct(maps) => {
                let mut prod = FieldElem::one();
                for m in maps {
                    prod = &prod * &m.eval(x)?;
                }
                Ok(prod)
            }
            SymForm::PowerBlocks { base, alphas } => {
                let powered: Vec<FieldElem> =
                    alphas.iter().map(|&a| x.powu(a as u32)).collect();
                base.eval(&powered)
            }
            SymForm::Sum { terms, .. } => {
                let mut acc = FieldElem::zero();
                for (c, form) in terms {
                    acc = &acc + &(c * &form.eval_diagonal(x)?);
                }
                Ok(acc)
            }
        }
    }
}

/// `Σ_σ Π_i values[i][σ(i)]` over all permutations σ.
fn permanent(values: &[Vec<FieldElem>]) -> FieldElem {
    fn go(values: &[Vec<FieldElem>], used: &mut [bool], row: usize, partial: &FieldElem, acc: &mut FieldElem) {
        if partial.is_zero() {
            return;
        }
        if row == values.len() {
            *acc = &*acc + partial;
            return;
        }
        for col in 0..values.len() {
            if !used[col] {
                used[col] = true;
                let next = partial * &values[row][col];
                go(values, used, row + 1, &next, acc);
                used[col] = false;
            }
        }
    }
    let mut acc = FieldElem::zero();
    let mut used = vec![false; values.len()];
    go(values, &mut used, 0, &FieldElem::one(), &mut acc);
    acc
}

/// All ways to split `items` into a chosen subset of size `k` and the rest,
/// in deterministic ascending order.
fn splits(items: &[usize], k: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    if k == 0 {
        return vec![(Vec::new(), items.to_vec())];
    }
    if k > items.len() {
        return Vec::new();
    }
    let mut out = Vec::new();
    // either take items[0] or leave it
    let head = items[0];
    for (mut chosen, rest) in splits(&items[1..], k - 1) {
        chosen.insert(0, head);
        out.push((chosen, rest));
    }
    for (chosen, mut rest) in splits(&items[1..], k) {
        rest.insert(0, head);
        out.push((chosen, rest));
    }
    out
}

fn eval_power_blocks(base: &SymForm, alphas: &[usize], args: &[FieldElem]) -> Result<FieldElem> {
    fn go(
        base: &SymForm,
        alphas: &[usize],
        args: &[FieldElem],
        block: usize,
        remaining: Vec<usize>,
        prefix: &mut Vec<FieldElem>,
        acc: &mut FieldElem,
        count: &mut u64,
    ) -> Result<()> {
        if block == alphas.len() {
            *count += 1;
            *acc = &*acc + &base.eval(prefix)?;
            return Ok(());
        }
        for (chosen, rest) in splits(&remaining, alphas[block]) {
            let mut prod = FieldElem::one();
            for i in &chosen {
                prod = &prod * &args[*i];
            }
            prefix.push(prod);
            go(base, alphas, args, block + 1, rest, prefix, acc, count)?;
            prefix.pop();
        }
        Ok(())
    }

    let mut acc = FieldElem::zero();
    let mut count = 0u64;
    let indices: Vec<usize> = (0..args.len()).collect();
    let mut prefix = Vec::with_capacity(alphas.len());
    go(base, alphas, args, 0, indices, &mut prefix, &mut acc, &mut count)?;
    acc.div(&FieldElem::from_rat(rat_int(count as i64)))
}

/// The power-block form whose trace is `x ↦ base(x^{α₁},…,x^{αₙ})`.
pub fn symmetrize_powers(base: SymForm, alphas: Vec<usize>) -> Result<SymForm> {
    SymForm::power_blocks(base, alphas)
}

/// An evaluable one-variable function ℚ(t) → ℚ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnaryFn {
    Trace(SymForm),
    AtomFn(AdditiveMap),
    /// `x ↦ P(g(x))` for a classical polynomial `P`.
    PolyOf(ClassicalPoly, Box<UnaryFn>),
    /// `x ↦ outer(inner(x))`.
    Compose(Box<UnaryFn>, Box<UnaryFn>),
    Product(Vec<UnaryFn>),
    Power(Box<UnaryFn>, u32),
    Scaled(FieldElem, Box<UnaryFn>),
    Sum(Vec<UnaryFn>),
    /// Defined only where the denominator is nonzero.
    Quotient(Box<UnaryFn>, Box<UnaryFn>),
    Const(FieldElem),
    /// `x ↦ xᵏ`, with `x⁰ = 1` everywhere.
    ArgPower(u32),
}

impl UnaryFn {
    /// The identity `x ↦ x`.
    pub fn arg() -> Self {
        UnaryFn::ArgPower(1)
    }

    pub fn constant(c: FieldElem) -> Self {
        UnaryFn::Const(c)
    }

    pub fn atom(m: AdditiveMap) -> Self {
        UnaryFn::AtomFn(m)
    }

    pub fn scaled(c: FieldElem, f: UnaryFn) -> Self {
        UnaryFn::Scaled(c, Box::new(f))
    }

    /// `f^k`, folding argument powers and constants so that the canonical
    /// printed syntax re-parses to the same AST.
    pub fn power(f: UnaryFn, k: u32) -> Self {
        match f {
            UnaryFn::ArgPower(j) => UnaryFn::ArgPower(j * k),
            UnaryFn::Const(c) => UnaryFn::Const(c.powu(k)),
            other => UnaryFn::Power(Box::new(other), k),
        }
    }

    /// Flattened product; empty products collapse to the constant 1.
    pub fn product(mut factors: Vec<UnaryFn>) -> Self {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors.drain(..) {
            match f {
                UnaryFn::Product(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => UnaryFn::Const(FieldElem::one()),
            1 => flat.pop().expect("one factor"),
            _ => UnaryFn::Product(flat),
        }
    }

    /// Flattened sum; empty sums collapse to the constant 0.
    pub fn sum(mut terms: Vec<UnaryFn>) -> Self {
        let mut flat = Vec::with_capacity(terms.len());
        for f in terms.drain(..) {
            match f {
                UnaryFn::Sum(inner) => flat.extend(inner),
                other => flat.push(other),
            }
        }
        match flat.len() {
            0 => UnaryFn::Const(FieldElem::zero()),
            1 => flat.pop().expect("one term"),
            _ => UnaryFn::Sum(flat),
        }
    }

    pub fn quotient(num: UnaryFn, den: UnaryFn) -> Self {
        UnaryFn::Quotient(Box::new(num), Box::new(den))
    }

    /// `outer ∘ inner`.
    pub fn compose_with(outer: UnaryFn, inner: UnaryFn) -> Self {
        UnaryFn::Compose(Box::new(outer), Box::new(inner))
    }

    /// `a - b`.
    pub fn minus(a: UnaryFn, b: UnaryFn) -> Self {
        UnaryFn::sum(vec![a, UnaryFn::scaled(FieldElem::from_int(-1), b)])
    }

    pub fn eval(&self, x: &FieldElem) -> Result<FieldElem> {
        match self {
            UnaryFn::Trace(form) => form.eval_diagonal(x),
            UnaryFn::AtomFn(m) => m.eval(x),
            UnaryFn::PolyOf(p, g) => Ok(p.eval(&g.eval(x)?)),
            UnaryFn::Compose(outer, inner) => outer.eval(&inner.eval(x)?),
            UnaryFn::Product(fs) => {
                let mut acc = FieldElem::one();
                for f in fs {
                    acc = &acc * &f.eval(x)?;
                }
                Ok(acc)
            }
            UnaryFn::Power(f, k) => Ok(f.eval(x)?.powu(*k)),
            UnaryFn::Scaled(c, f) => Ok(c * &f.eval(x)?),
            UnaryFn::Sum(fs) => {
                let mut acc = FieldElem::zero();
                for f in fs {
                    acc = &acc + &f.eval(x)?;
                }
                Ok(acc)
            }
            UnaryFn::Quotient(num, den) => {
                let d = den.eval(x)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                num.eval(x)?.div(&d)
            }
            UnaryFn::Const(c) => Ok(c.clone()),
            UnaryFn::ArgPower(k) => Ok(x.powu(*k)),
        }
    }
}

/// The iterated additive difference `Δ_{y₁,…,y_m} f`, built as an AST and
/// evaluated on demand. The increments commute: any ordering of `ys`
/// yields a pointwise-equal function.
pub fn delta(f: &UnaryFn, ys: &[FieldElem]) -> UnaryFn {
    let mut g = f.clone();
    for y in ys {
        let shift = UnaryFn::sum(vec![UnaryFn::arg(), UnaryFn::Const(y.clone())]);
        g = UnaryFn::minus(UnaryFn::compose_with(g.clone(), shift), g);
    }
    g
}

/// The iterated multiplicative difference `g(xy) - g(x)` over the group
/// ℚ(t)ˣ; every increment must be nonzero.
pub fn delta_mult(g: &UnaryFn, ys: &[FieldElem]) -> Result<UnaryFn> {
    let mut out = g.clone();
    for y in ys {
        if y.is_zero() {
            return Err(Error::ZeroIncrement);
        }
        let dilate = UnaryFn::scaled(y.clone(), UnaryFn::arg());
        out = UnaryFn::minus(UnaryFn::compose_with(out.clone(), dilate), out);
    }
    Ok(out)
}

/// A disagreement between probe base points while recovering a form from
/// its claimed trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistency {
    pub increments: Vec<FieldElem>,
    pub base: FieldElem,
    pub value: FieldElem,
    pub reference_base: FieldElem,
    pub reference_value: FieldElem,
}

/// Value of the recovered form at one increment tuple, or the witness of
/// base-point dependence (which proves the input was not a degree-n trace).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolarizedValue {
    Consistent(FieldElem),
    Inconsistent(Inconsistency),
}

/// The n-argument function recovered from a claimed degree-n trace via
/// `(y₁,…,yₙ) ↦ Δ_{y₁,…,yₙ} f(x₀) / n!`, with every evaluation checked for
/// agreement across all probe base points.
#[derive(Clone, Debug)]
pub struct Polarized {
    f: UnaryFn,
    degree: usize,
    probes: Vec<FieldElem>,
}

/// Construction-time consistency summary over increment windows drawn
/// from the probes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolarizeReport {
    pub tuples_checked: usize,
    pub consistent: bool,
    pub first_inconsistency: Option<Inconsistency>,
}

impl Polarized {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn probes(&self) -> &[FieldElem] {
        &self.probes
    }

    /// Evaluates with full detail; `Err` only on evaluation failures.
    pub fn eval_checked(&self, ys: &[FieldElem]) -> Result<PolarizedValue> {
        if ys.len() != self.degree {
            return Err(Error::ArityMismatch {
                expected: self.degree,
                got: ys.len(),
            });
        }
        let diff = delta(&self.f, ys);
        let reference = diff.eval(&self.probes[0])?;
        for probe in &self.probes[1..] {
            let value = diff.eval(probe)?;
            if value != reference {
                return Ok(PolarizedValue::Inconsistent(Inconsistency {
                    increments: ys.to_vec(),
                    base: probe.clone(),
                    value,
                    reference_base: self.probes[0].clone(),
                    reference_value: reference,
                }));
            }
        }
        reference
            .div(&FieldElem::from_rat(factorial(self.degree)))
            .map(PolarizedValue::Consistent)
    }

    /// Evaluates the recovered form, failing if the probes disagree.
    pub fn eval(&self, ys: &[FieldElem]) -> Result<FieldElem> {
        match self.eval_checked(ys)? {
            PolarizedValue::Consistent(v) => Ok(v),
            PolarizedValue::Inconsistent(_) => Err(Error::PolarizationInconsistent),
        }
    }
}

/// Recovers the symmetric n-additive form behind a claimed degree-n trace.
///
/// Returns the evaluable recovered form together with a consistency report
/// computed over up to three increment windows drawn from the probes.
pub fn polarize(
    f: &UnaryFn,
    degree: usize,
    probes: &[FieldElem],
) -> Result<(Polarized, PolarizeReport)> {
    assert!(degree >= 1, "polarization degree must be positive");
    if probes.is_empty() {
        return Err(Error::EmptyProbes);
    }
    let polarized = Polarized {
        f: f.clone(),
        degree,
        probes: probes.to_vec(),
    };
    let mut tuples_checked = 0;
    let mut first_inconsistency = None;
    for window in probes.windows(degree).take(3) {
        tuples_checked += 1;
        if let PolarizedValue::Inconsistent(w) = polarized.eval_checked(window)? {
            first_inconsistency = Some(w);
            break;
        }
    }
    let report = PolarizeReport {
        tuples_checked,
        consistent: first_inconsistency.is_none(),
        first_inconsistency,
    };
    Ok((polarized, report))
}

/// Outcome of the zero-trace propagation check: if the trace vanishes on
/// all points, the form itself must vanish on all sampled tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZeroTraceVerdict {
    /// The precondition failed, so the propagation check was skipped.
    TraceNonzero { point: FieldElem, value: FieldElem },
    FormVanishes { tuples_checked: usize },
    FormNonzero { witness: Witness },
}

/// Checks that a form with identically-zero trace vanishes at every
/// sampled argument tuple (tuples are sliding windows over `points`).
pub fn check_zero_trace_form(form: &SymForm, points: &[FieldElem]) -> Result<ZeroTraceVerdict> {
    let k = form.arity();
    if points.len() < k {
        return Err(Error::InsufficientSamples {
            needed: k,
            got: points.len(),
        });
    }
    for p in points {
        let v = form.trace().eval(p)?;
        if !v.is_zero() {
            return Ok(ZeroTraceVerdict::TraceNonzero {
                point: p.clone(),
                value: v,
            });
        }
    }
    let mut tuples_checked = 0;
    for window in points.windows(k) {
        tuples_checked += 1;
        let v = form.eval(window)?;
        if !v.is_zero() {
            return Ok(ZeroTraceVerdict::FormNonzero {
                witness: Witness {
                    inputs: window.to_vec(),
                    lhs: v,
                    rhs: FieldElem::zero(),
                },
            });
        }
    }
    Ok(ZeroTraceVerdict::FormVanishes { tuples_checked })
}

fn level(f: &UnaryFn) -> u8 {
    match f {
        UnaryFn::Sum(_) => 0,
        UnaryFn::Product(_) | UnaryFn::Quotient(_, _) | UnaryFn::Scaled(_, _) => 1,
        UnaryFn::Power(_, _) => 2,
        UnaryFn::Const(c) => c.print_level(),
        _ => 3,
    }
}

fn write_prec(f: &UnaryFn, required: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(f) < required {
        write!(out, "(")?;
        write_unary(f, out)?;
        write!(out, ")")
    } else {
        write_unary(f, out)
    }
}

fn write_unary(f: &UnaryFn, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    match f {
        UnaryFn::Trace(form) => write!(out, "trace({form})"),
        UnaryFn::AtomFn(m) => write!(out, "{m}"),
        UnaryFn::PolyOf(p, g) => {
            write!(out, "of({p}, ")?;
            write_unary(g, out)?;
            write!(out, ")")
        }
        UnaryFn::Compose(outer, inner) => {
            write!(out, "of(")?;
            write_unary(outer, out)?;
            write!(out, ", ")?;
            write_unary(inner, out)?;
            write!(out, ")")
        }
        UnaryFn::Product(fs) => {
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    write!(out, "*")?;
                }
                write_prec(g, if i == 0 { 1 } else { 2 }, out)?;
            }
            Ok(())
        }
        UnaryFn::Power(base, k) => {
            write_prec(base, 3, out)?;
            write!(out, "^{k}")
        }
        UnaryFn::Scaled(c, g) => {
            let mut s = String::new();
            fmt_operand(c, 2, &mut s);
            write!(out, "{s}*")?;
            write_prec(g, 2, out)
        }
        UnaryFn::Sum(fs) => {
            if fs.is_empty() {
                return write!(out, "0");
            }
            for (i, g) in fs.iter().enumerate() {
                if i > 0 {
                    write!(out, "+")?;
                }
                write_prec(g, 1, out)?;
            }
            Ok(())
        }
        UnaryFn::Quotient(num, den) => {
            write_prec(num, 1, out)?;
            write!(out, "/")?;
            write_prec(den, 2, out)
        }
        UnaryFn::Const(c) => write!(out, "{c}"),
        UnaryFn::ArgPower(k) => {
            if *k == 1 {
                write!(out, "x")
            } else {
                write!(out, "x^{k}")
            }
        }
    }
}

impl fmt::Display for UnaryFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_unary(self, f)
    }
}

impl fmt::Display for SymForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymForm::PullbackProduct { arity, map } => write!(f, "pull({map}, {arity})"),
            SymForm::AtomProduct(maps) => {
                write!(f, "prod(")?;
                for (i, m) in maps.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{m}")?;
                }
                write!(f, ")")
            }
            SymForm::PowerBlocks { base, alphas } => {
                write!(f, "blocks({base}; ")?;
                for (i, a) in alphas.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
            SymForm::Sum { terms, .. } => {
                write!(f, "sum(")?;
                for (i, (c, form)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    let mut coeff = String::new();
                    fmt_operand(c, 2, &mut coeff);
                    write!(f, "{coeff}*{form}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Calls `visit` with every permutation of `0..n`; handy for checking
/// block evaluation against the full symmetrized sum.
pub fn for_each_permutation<F: FnMut(&[usize])>(n: usize, mut visit: F) {
    fn heap<F: FnMut(&[usize])>(k: usize, arr: &mut [usize], visit: &mut F) {
        if k <= 1 {
            visit(arr);
            return;
        }
        for i in 0..k {
            heap(k - 1, arr, visit);
            if k.is_multiple_of(2) {
                arr.swap(i, k - 1);
            } else {
                arr.swap(0, k - 1);
            }
        }
    }
    let mut arr: Vec<usize> = (0..n).collect();
    heap(n, &mut arr, &mut visit);
}


#[cfg(test)]
mod diagonal_tests {
    use super::*;
    use crate::sample::SampleGen;

    #[test]
    fn diagonal_matches_full_evaluation() {
        let t = FieldElem::var();
        let d = AdditiveMap::ddt();
        let sub = AdditiveMap::substitution(t.powu(2)).unwrap();
        let forms = [
            SymForm::pullback(d.clone(), 3).unwrap(),
            SymForm::atom_product(vec![d.clone(), sub.clone(), AdditiveMap::Identity]).unwrap(),
            SymForm::power_blocks(
                SymForm::atom_product(vec![d.clone(), sub]).unwrap(),
                vec![2, 1],
            )
            .unwrap(),
            SymForm::sum(
                2,
                vec![
                    (t.clone(), SymForm::pullback(d.clone(), 2).unwrap()),
                    (
                        FieldElem::from_int(-2),
                        SymForm::atom_product(vec![d.clone(), d]).unwrap(),
                    ),
                ],
            )
            .unwrap(),
        ];
        let mut gen = SampleGen::new(139);
        for form in &forms {
            for _ in 0..6 {
                let x = gen.field_elem();
                let full = form.eval(&vec![x.clone(); form.arity()]).unwrap();
                assert_eq!(form.eval_diagonal(&x).unwrap(), full, "form {form}");
            }
        }
    }
}
