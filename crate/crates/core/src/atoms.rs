//! Concrete additive functions ℚ(t) → ℚ(t) as an evaluable AST.
//!
//! The variants cover the additive maps the calculus needs: the identity,
//! derivations `x ↦ u·(d/dt)x`, substitution homomorphisms `x ↦ x(r(t))`,
//! compositions, and linear combinations with coefficients in ℚ(t).
//! Every well-formed map is additive by construction; the check functions
//! below test additivity, the Leibniz rule, and multiplicativity on
//! sample pairs, exactly.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::exactfield::{fmt_operand, FieldElem};

/// An evaluable additive map ℚ(t) → ℚ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AdditiveMap {
    Identity,
    /// `x ↦ u·(d/dt)x` — the derivation determined by its value `u` at `t`.
    Derivation(FieldElem),
    /// `x ↦ x(r(t))` — the substitution homomorphism; `r` must be
    /// nonconstant (enforced by [`AdditiveMap::substitution`]).
    Substitution(FieldElem),
    /// Left-to-right composition: `Compose([m1, m2])` is `x ↦ m2(m1(x))`.
    Compose(Vec<AdditiveMap>),
    /// `x ↦ Σ cᵢ·mᵢ(x)`; coefficients may be arbitrary field elements.
    LinComb(Vec<(FieldElem, AdditiveMap)>),
}

impl AdditiveMap {
    pub fn derivation(u: FieldElem) -> Self {
        AdditiveMap::Derivation(u)
    }

    /// Derivation with constant value 1 at `t`, i.e. d/dt itself.
    pub fn ddt() -> Self {
        AdditiveMap::Derivation(FieldElem::one())
    }

    pub fn substitution(r: FieldElem) -> Result<Self> {
        if r.is_constant() {
            return Err(Error::ConstantSubstitution);
        }
        Ok(AdditiveMap::Substitution(r))
    }

    pub fn compose(parts: Vec<AdditiveMap>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyComposition);
        }
        Ok(AdditiveMap::Compose(parts))
    }

    /// `m` composed with itself `k` times; requires `k ≥ 1`.
    pub fn iterate(m: &AdditiveMap, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::EmptyComposition);
        }
        if k == 1 {
            return Ok(m.clone());
        }
        Ok(AdditiveMap::Compose(vec![m.clone(); k]))
    }

    pub fn lin_comb(terms: Vec<(FieldElem, AdditiveMap)>) -> Self {
        AdditiveMap::LinComb(terms)
    }

    /// `c·m` as a one-term linear combination.
    pub fn scaled(c: FieldElem, m: AdditiveMap) -> Self {
        AdditiveMap::LinComb(vec![(c, m)])
    }

    pub fn eval(&self, x: &FieldElem) -> Result<FieldElem> {
        match self {
            AdditiveMap::Identity => Ok(x.clone()),
            AdditiveMap::Derivation(u) => Ok(u * &x.ddt()),
            AdditiveMap::Substitution(r) => x.compose(r),
            AdditiveMap::Compose(parts) => {
                let mut v = x.clone();
                for part in parts {
                    v = part.eval(&v)?;
                }
                Ok(v)
            }
            AdditiveMap::LinComb(terms) => {
                let mut acc = FieldElem::zero();
                for (c, m) in terms {
                    acc = &acc + &(c * &m.eval(x)?);
                }
                Ok(acc)
            }
        }
    }

    /// Short variant tag used when composing deterministic names.
    pub fn tag(&self) -> &'static str {
        match self {
            AdditiveMap::Identity => "id",
            AdditiveMap::Derivation(_) => "der",
            AdditiveMap::Substitution(_) => "sub",
            AdditiveMap::Compose(_) => "comp",
            AdditiveMap::LinComb(_) => "lin",
        }
    }
}

impl fmt::Display for AdditiveMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdditiveMap::Identity => write!(f, "id"),
            AdditiveMap::Derivation(u) => write!(f, "der({u})"),
            AdditiveMap::Substitution(r) => write!(f, "sub({r})"),
            AdditiveMap::Compose(parts) => {
                write!(f, "comp(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{p}")?;
                }
                write!(f, ")")
            }
            AdditiveMap::LinComb(terms) => {
                write!(f, "lin(")?;
                for (i, (c, m)) in terms.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    let mut coeff = alloc::string::String::new();
                    fmt_operand(c, 2, &mut coeff);
                    write!(f, "{coeff}*{m}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Exact counterexample to a checked identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub inputs: Vec<FieldElem>,
    pub lhs: FieldElem,
    pub rhs: FieldElem,
}

/// Outcome of a sample-wise identity check. `Pass` means the identity
/// held exactly at every supplied sample — evidence, not proof.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }
}

/// Checks `f(x+y) = f(x) + f(y)` at every sample pair.
pub fn check_additive_with<F>(mut f: F, samples: &[(FieldElem, FieldElem)]) -> Result<Verdict>
where
    F: FnMut(&FieldElem) -> Result<FieldElem>,
{
    assert!(!samples.is_empty(), "check needs at least one sample pair");
    for (x, y) in samples {
        let lhs = f(&(x + y))?;
        let rhs = &f(x)? + &f(y)?;
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

pub fn check_additive(m: &AdditiveMap, samples: &[(FieldElem, FieldElem)]) -> Result<Verdict> {
    check_additive_with(|x| m.eval(x), samples)
}

/// Checks the Leibniz rule `f(xy) = x·f(y) + f(x)·y` at every sample pair.
pub fn check_leibniz_with<F>(mut f: F, samples: &[(FieldElem, FieldElem)]) -> Result<Verdict>
where
    F: FnMut(&FieldElem) -> Result<FieldElem>,
{
    assert!(!samples.is_empty(), "check needs at least one sample pair");
    for (x, y) in samples {
        let lhs = f(&(x * y))?;
        let rhs = &(x * &f(y)?) + &(&f(x)? * y);
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

pub fn check_leibniz(m: &AdditiveMap, samples: &[(FieldElem, FieldElem)]) -> Result<Verdict> {
    check_leibniz_with(|x| m.eval(x), samples)
}

/// Checks multiplicativity `f(xy) = f(x)·f(y)` at every sample pair
/// (additivity is checked separately).
pub fn check_homomorphism_with<F>(mut f: F, samples: &[(FieldElem, FieldElem)]) -> Result<Verdict>
where
    F: FnMut(&FieldElem) -> Result<FieldElem>,
{
    assert!(!samples.is_empty(), "check needs at least one sample pair");
    for (x, y) in samples {
        let lhs = f(&(x * y))?;
        let rhs = &f(x)? * &f(y)?;
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

pub fn check_homomorphism(m: &AdditiveMap, samples: &[(FieldElem, FieldElem)]) -> Result<Verdict> {
    check_homomorphism_with(|x| m.eval(x), samples)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::{rat, Poly};
    use crate::sample::SampleGen;

    fn t() -> FieldElem {
        FieldElem::var()
    }

    fn sub(coeffs: &[i64]) -> AdditiveMap {
        AdditiveMap::substitution(FieldElem::from_poly(Poly::from_ints(coeffs))).unwrap()
    }

    fn pairs(seed: u64, n: usize) -> Vec<(FieldElem, FieldElem)> {
        let mut gen = SampleGen::new(seed);
        (0..n).map(|_| (gen.field_elem(), gen.field_elem())).collect()
    }

    #[test]
    fn eval_cases() {
        let t3 = t().powu(3);
        let d = AdditiveMap::ddt();
        assert_eq!(d.eval(&t3).unwrap(), &FieldElem::from_int(3) * &t().powu(2));
        let dd = AdditiveMap::iterate(&d, 2).unwrap();
        assert_eq!(dd.eval(&t3).unwrap(), &FieldElem::from_int(6) * &t());
        // sub(t^2) applied to (t+1)/t gives (t^2+1)/t^2
        let phi = sub(&[0, 0, 1]);
        let x = (&t() + &FieldElem::one()).div(&t()).unwrap();
        let expected = (&t().powu(2) + &FieldElem::one()).div(&t().powu(2)).unwrap();
        assert_eq!(phi.eval(&x).unwrap(), expected);
    }

    #[test]
    fn substitution_rejects_constants() {
        assert_eq!(
            AdditiveMap::substitution(FieldElem::from_int(2)),
            Err(Error::ConstantSubstitution)
        );
    }

    #[test]
    fn additivity_checks() {
        let ps = pairs(11, 10);
        assert!(check_additive(&AdditiveMap::Identity, &ps).unwrap().passed());
        let d = AdditiveMap::derivation(t());
        assert!(check_additive(&d, &ps).unwrap().passed());
        // the non-additive square map fails with a witness
        let verdict = check_additive_with(|x| Ok(x * x), &ps).unwrap();
        match verdict {
            Verdict::Fail(w) => assert_ne!(w.lhs, w.rhs),
            Verdict::Pass => panic!("x^2 must not look additive on generic samples"),
        }
    }

    #[test]
    fn leibniz_checks() {
        let ps = pairs(12, 10);
        let u = &t().powu(2) + &FieldElem::one();
        assert!(check_leibniz(&AdditiveMap::derivation(u), &ps).unwrap().passed());
        // substitution breaks Leibniz at (t, t): phi(t*t) = t^4 vs 2t^3
        let phi = sub(&[0, 0, 1]);
        let one_pair = vec![(t(), t())];
        match check_leibniz(&phi, &one_pair).unwrap() {
            Verdict::Fail(w) => {
                assert_eq!(w.lhs, t().powu(4));
                assert_eq!(w.rhs, &FieldElem::from_int(2) * &t().powu(3));
            }
            Verdict::Pass => panic!("substitution is not a derivation"),
        }
        // second-order derivations break Leibniz: d^2(t^2) = 2 vs 0
        let dd = AdditiveMap::iterate(&AdditiveMap::ddt(), 2).unwrap();
        match check_leibniz(&dd, &one_pair).unwrap() {
            Verdict::Fail(w) => {
                assert_eq!(w.lhs, FieldElem::from_int(2));
                assert!(w.rhs.is_zero());
            }
            Verdict::Pass => panic!("d∘d is not a first-order derivation"),
        }
    }

    #[test]
    fn homomorphism_checks() {
        let ps = pairs(13, 10);
        assert!(check_homomorphism(&sub(&[1, 2]), &ps).unwrap().passed());
        assert!(check_homomorphism(&AdditiveMap::Identity, &ps).unwrap().passed());
        let one_pair = vec![(t(), t())];
        match check_homomorphism(&AdditiveMap::ddt(), &one_pair).unwrap() {
            Verdict::Fail(w) => {
                assert_eq!(w.lhs, &FieldElem::from_int(2) * &t());
                assert!(w.rhs.is_one());
            }
            Verdict::Pass => panic!("d/dt is not multiplicative"),
        }
    }

    #[test]
    fn rational_homogeneity() {
        let mut gen = SampleGen::new(17);
        let maps = [
            AdditiveMap::Identity,
            AdditiveMap::ddt(),
            sub(&[0, 0, 1]),
            AdditiveMap::lin_comb(vec![
                (t(), AdditiveMap::ddt()),
                (FieldElem::from_rat(rat(1, 2)), AdditiveMap::Identity),
            ]),
        ];
        for m in &maps {
            for _ in 0..8 {
                let x = gen.field_elem();
                let q = FieldElem::from_rat(gen.rat(9));
                let lhs = m.eval(&(&q * &x)).unwrap();
                let rhs = &q * &m.eval(&x).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn compositions_of_derivations_kill_constants() {
        let d = AdditiveMap::derivation(&t() + &FieldElem::one());
        for k in 1..=3 {
            let dk = AdditiveMap::iterate(&d, k).unwrap();
            for c in [0i64, 1, -4, 9] {
                assert!(dk.eval(&FieldElem::from_int(c)).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn substitution_composition_law() {
        // applying sub(r1) then sub(r2) equals substituting t ↦ r1(r2(t))
        let r1 = FieldElem::from_poly(Poly::from_ints(&[0, 0, 1])); // t^2
        let r2 = FieldElem::from_poly(Poly::from_ints(&[1, 1])); // t+1
        let chained = AdditiveMap::compose(vec![
            AdditiveMap::substitution(r1.clone()).unwrap(),
            AdditiveMap::substitution(r2.clone()).unwrap(),
        ])
        .unwrap();
        let direct = AdditiveMap::substitution(r1.compose(&r2).unwrap()).unwrap();
        let mut gen = SampleGen::new(23);
        for _ in 0..10 {
            let x = gen.field_elem();
            assert_eq!(chained.eval(&x).unwrap(), direct.eval(&x).unwrap());
        }
    }

    #[test]
    fn lincomb_with_function_coefficients_is_additive() {
        let m = AdditiveMap::lin_comb(vec![
            (t().powu(2), AdditiveMap::ddt()),
            (t().inv().unwrap(), AdditiveMap::Identity),
        ]);
        assert!(check_additive(&m, &pairs(31, 12)).unwrap().passed());
    }
}
