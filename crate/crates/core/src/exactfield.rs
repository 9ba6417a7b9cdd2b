//! Exact arithmetic over ℚ and the rational-function field ℚ(t).
//!
//! `FieldElem` is the concrete model of the base field: a canonical
//! rational function in one indeterminate `t` with arbitrary-precision
//! rational coefficients. Every operation canonicalizes eagerly (gcd
//! reduction, monic denominator), so equality of values is equality of
//! representations.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational scalar. The representation kept by
/// `BigRational` is canonical: reduced, with a positive denominator.
pub type Rat = BigRational;

/// `n/d` as a [`Rat`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n!` as a [`Rat`].
pub fn factorial(n: usize) -> Rat {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Rat::from_integer(acc)
}

/// Dense univariate polynomial over ℚ, coefficients stored lowest degree
/// first. Canonical: the vector is empty for the zero polynomial, and the
/// last coefficient is nonzero otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial (its degree is treated as
    /// a distinguished minus-infinity marker, never an integer).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg_i(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms (all stored terms are nonzero).
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat_int(i as i64))
                .collect(),
        )
    }

    pub fn eval_rat(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at a field element; used by substitution.
    pub fn eval_elem(&self, x: &FieldElem) -> FieldElem {
        let mut acc = FieldElem::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + &FieldElem::from_rat(c.clone());
        }
        acc
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.deg_i();
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); (self.deg_i() - dd + 1).max(0) as usize];
        while rem.len() as isize > dd {
            let k = rem.len() - 1 - dd as usize;
            let factor = rem.last().unwrap() / &lead;
            if !factor.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    let v = &rem[k + i] - &(dc * &factor);
                    rem[k + i] = v;
                }
                quo[k] = factor;
            }
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(quo), Poly::new(rem))
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divrem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    ///
    /// Runs the primitive polynomial remainder sequence over ℤ, which
    /// keeps intermediate coefficients small; naive Euclid over ℚ blows
    /// up on the degrees the difference operators produce.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() {
            return b.clone().into_monic();
        }
        if b.is_zero() {
            return a.clone().into_monic();
        }
        let mut u = int_primitive(a.int_coeffs());
        let mut v = int_primitive(b.int_coeffs());
        if u.len() < v.len() {
            core::mem::swap(&mut u, &mut v);
        }
        while !v.is_empty() {
            let r = int_primitive(int_prem(u, &v));
            u = v;
            v = r;
        }
        Poly::new(u.into_iter().map(Rat::from_integer).collect()).into_monic()
    }

    /// The coefficients scaled by the common denominator, as integers.
    fn int_coeffs(&self) -> Vec<BigInt> {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = num_integer::Integer::lcm(&lcm, c.denom());
        }
        self.coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect()
    }

    /// A least common multiple (monic unless zero).
    pub fn lcm(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::zero();
        }
        let g = Poly::gcd(a, b);
        (&a.div_exact(&g) * b).into_monic()
    }

    fn into_monic(self) -> Poly {
        match self.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.recip();
                self.scale(&inv)
            }
            _ => self,
        }
    }
}

/// Content-normalized integer coefficients with a positive leading term;
/// empty stays empty.
fn int_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    if v.is_empty() {
        return v;
    }
    let mut content = BigInt::zero();
    for c in &v {
        content = num_integer::Integer::gcd(&content, c);
    }
    if v.last().unwrap().is_negative() {
        content = -content;
    }
    if !content.is_one() {
        for c in &mut v {
            *c /= &content;
        }
    }
    v
}

/// Pseudo-remainder of `u` by nonzero `v` over ℤ: repeatedly scales `u`
/// by the leading coefficient of `v` and cancels the top term.
fn int_prem(mut u: Vec<BigInt>, v: &[BigInt]) -> Vec<BigInt> {
    let lv = v.last().expect("divisor is nonzero").clone();
    while u.len() >= v.len() {
        let lu = u.last().expect("trimmed").clone();
        let k = u.len() - v.len();
        for c in &mut u {
            *c *= &lv;
        }
        for (i, vc) in v.iter().enumerate() {
            u[k + i] -= &lu * vc;
        }
        while u.last().is_some_and(|c| c.is_zero()) {
            u.pop();
        }
    }
    u
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        Poly::new(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &out[i + j] + &(a * b);
                out[i + j] = v;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if i == 1 {
                    write!(f, "t")?;
                } else {
                    write!(f, "t^{i}")?;
                }
            }
        }
        Ok(())
    }
}

/// A canonical rational function in `t` over ℚ: `num/den` with
/// `gcd(num, den) = 1`, a monic nonzero denominator, and zero stored
/// as `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElem {
    num: Poly,
    den: Poly,
}

impl FieldElem {
    /// Builds `num/den` in canonical form.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: Poly, den: Poly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return FieldElem {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        if den.is_one() {
            return FieldElem { num, den };
        }
        let g = Poly::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g), den.div_exact(&g))
        };
        let lead = den.leading().unwrap().clone();
        if !lead.is_one() {
            let inv = lead.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        FieldElem { num, den }
    }

    pub fn zero() -> Self {
        FieldElem {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        FieldElem {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        FieldElem {
            num: Poly::var(),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        FieldElem {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> Self {
        FieldElem::from_poly(Poly::constant(c))
    }

    pub fn from_int(n: i64) -> Self {
        FieldElem::from_rat(rat_int(n))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.as_rat().is_some()
    }

    /// The value as a rational scalar, if constant.
    pub fn as_rat(&self) -> Option<Rat> {
        if !self.den.is_one() {
            return None;
        }
        match self.num.degree() {
            None => Some(Rat::zero()),
            Some(0) => Some(self.num.coeff(0)),
            _ => None,
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &FieldElem) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// `self^k` for a nonnegative exponent; `x^0 = 1` for every `x`.
    pub fn powu(&self, k: u32) -> Self {
        let mut acc = FieldElem::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `self^k`; negative exponents require a nonzero base.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k >= 0 {
            Ok(self.powu(k as u32))
        } else {
            Ok(self.inv()?.powu((-k) as u32))
        }
    }

    /// The model derivation d/dt, by the quotient rule.
    pub fn ddt(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let den = &self.den * &self.den;
        Self::reduced(num, den)
    }

    /// Substitution `t ↦ r`, i.e. the value `self(r(t))`.
    ///
    /// Defined for every nonconstant `r`; a constant `r` must avoid the
    /// poles of `self`.
    pub fn compose(&self, r: &FieldElem) -> Result<Self> {
        let den = self.den.eval_elem(r);
        if den.is_zero() {
            return Err(Error::CompositionUndefined);
        }
        let num = self.num.eval_elem(r);
        num.div(&den)
    }

    /// Printing precedence of the canonical form: 3 for an atomic token
    /// (`t`, `t^k`, nonnegative integer), 1 for anything already carrying
    /// `*`, `/`, or a leading sign, 0 for a sum of terms.
    pub(crate) fn print_level(&self) -> u8 {
        if self.den.is_one() {
            if self.num.term_count() > 1 {
                return 0;
            }
            match self.num.degree() {
                None => 3,
                Some(d) => {
                    let c = self.num.coeff(d);
                    if d == 0 {
                        if c.is_integer() && !c.is_negative() {
                            3
                        } else {
                            1
                        }
                    } else if c.is_one() {
                        3
                    } else {
                        1
                    }
                }
            }
        } else {
            1
        }
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: &FieldElem) -> FieldElem {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        FieldElem::reduced(num, den)
    }
}

impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: &FieldElem) -> FieldElem {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        FieldElem::reduced(num, den)
    }
}

impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: &FieldElem) -> FieldElem {
        FieldElem::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        if self.num.term_count() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if self.den.term_count() > 1 {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

/// Renders an element as an operand inside a larger expression, adding
/// parentheses whenever its own syntax binds looser than `level`.
pub(crate) fn fmt_operand(e: &FieldElem, level: u8, out: &mut String) {
    use core::fmt::Write;
    if e.print_level() < level {
        let _ = write!(out, "({e})");
    } else {
        let _ = write!(out, "{e}");
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn t() -> FieldElem {
        FieldElem::var()
    }

    fn int(n: i64) -> FieldElem {
        FieldElem::from_int(n)
    }

    #[test]
    fn add_cases() {
        // t/1 + 1/t = (t^2+1)/t
        let lhs = &t() + &t().inv().unwrap();
        let expected =
            FieldElem::new(Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[0, 1])).unwrap();
        assert_eq!(lhs, expected);
        // x + 0 = x
        let x = FieldElem::new(Poly::from_ints(&[3, 1]), Poly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(&x + &FieldElem::zero(), x);
        // 1/2 + 1/3 = 5/6
        let sum = &FieldElem::from_rat(rat(1, 2)) + &FieldElem::from_rat(rat(1, 3));
        assert_eq!(sum, FieldElem::from_rat(rat(5, 6)));
    }

    #[test]
    fn mul_inv_pow_cases() {
        assert!((&t() * &t().inv().unwrap()).is_one());
        let sq = (&t() + &int(1)).powu(2);
        assert_eq!(sq, FieldElem::from_poly(Poly::from_ints(&[1, 2, 1])));
        // (t^2-1)/(t+1) reduces to t-1, so its inverse is 1/(t-1)
        let x = FieldElem::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[1, 1])).unwrap();
        assert_eq!(x, FieldElem::from_poly(Poly::from_ints(&[-1, 1])));
        let expected =
            FieldElem::new(Poly::from_ints(&[1]), Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(x.inv().unwrap(), expected);
        assert_eq!(FieldElem::zero().inv(), Err(Error::DivisionByZero));
        assert!(x.pow(0).unwrap().is_one());
        assert_eq!(x.pow(-2).unwrap(), x.inv().unwrap().powu(2));
    }

    #[test]
    fn ddt_cases() {
        let t2 = t().powu(2);
        assert_eq!(t2.ddt(), &int(2) * &t());
        let inv_t = t().inv().unwrap();
        let expected = FieldElem::new(Poly::from_ints(&[-1]), Poly::from_ints(&[0, 0, 1])).unwrap();
        assert_eq!(inv_t.ddt(), expected);
        assert!(FieldElem::from_rat(rat(7, 3)).ddt().is_zero());
    }

    #[test]
    fn compose_cases() {
        let t2 = t().powu(2);
        let shift = &t() + &int(1);
        assert_eq!(
            t2.compose(&shift).unwrap(),
            FieldElem::from_poly(Poly::from_ints(&[1, 2, 1]))
        );
        let inv_t = t().inv().unwrap();
        assert_eq!(inv_t.compose(&t2).unwrap(), t2.inv().unwrap());
        // pole hit: 1/(t-1) at the constant 1
        let x = FieldElem::new(Poly::one(), Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(x.compose(&int(1)), Err(Error::CompositionUndefined));
        // a constant away from the poles is fine
        assert_eq!(x.compose(&int(2)), Ok(int(1)));
        assert_eq!(t2.compose(&int(3)), Ok(int(9)));
    }

    #[test]
    fn display_canonical() {
        use alloc::format;
        let x = FieldElem::new(Poly::from_ints(&[1, 0, 1]), Poly::from_ints(&[-3, 2])).unwrap();
        // denominator is made monic: (t^2+1)/(2t-3) = (1/2 t^2 + 1/2)/(t - 3/2)
        assert_eq!(format!("{x}"), "(1/2*t^2+1/2)/(t-3/2)");
        assert_eq!(format!("{}", t().inv().unwrap()), "1/t");
        assert_eq!(format!("{}", FieldElem::zero()), "0");
        assert_eq!(format!("{}", &int(0) - &t()), "-t");
    }

    #[test]
    fn zero_degree_is_none() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(Poly::one().degree(), Some(0));
    }

    #[test]
    fn gcd_lcm() {
        let a = Poly::from_ints(&[-1, 0, 1]); // t^2-1
        let b = Poly::from_ints(&[1, 1]); // t+1
        assert_eq!(Poly::gcd(&a, &b), b);
        assert_eq!(Poly::lcm(&a, &b), a);
        assert!(Poly::gcd(&Poly::zero(), &Poly::zero()).is_zero());
    }

    prop_compose! {
        fn arb_poly(max_len: usize)(coeffs in prop::collection::vec(-9i64..=9, 0..max_len)) -> Poly {
            Poly::from_ints(&coeffs)
        }
    }

    prop_compose! {
        fn arb_elem()(num in arb_poly(4), den in arb_poly(4).prop_filter("nonzero", |p| !p.is_zero())) -> FieldElem {
            FieldElem::new(num, den).unwrap()
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn field_axioms(a in arb_elem(), b in arb_elem(), c in arb_elem()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &(-&a), FieldElem::zero());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().unwrap()).is_one());
            }
        }

        #[test]
        fn leibniz_exact(a in arb_elem(), b in arb_elem()) {
            let lhs = (&a * &b).ddt();
            let rhs = &(&a * &b.ddt()) + &(&a.ddt() * &b);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn compose_is_homomorphism(a in arb_elem(), b in arb_elem()) {
            // fixed nonconstant substitution target
            let r = FieldElem::from_poly(Poly::from_ints(&[1, 0, 2]));
            let prod = (&a * &b).compose(&r).unwrap();
            prop_assert_eq!(prod, &a.compose(&r).unwrap() * &b.compose(&r).unwrap());
            let sum = (&a + &b).compose(&r).unwrap();
            prop_assert_eq!(sum, &a.compose(&r).unwrap() + &b.compose(&r).unwrap());
        }

        #[test]
        fn canonical_equality(a in arb_elem(), b in arb_elem()) {
            prop_assert_eq!((&a - &b).is_zero(), a == b);
        }

        #[test]
        fn divrem_invariant(a in arb_poly(6), b in arb_poly(4).prop_filter("nonzero", |p| !p.is_zero())) {
            let (q, r) = a.divrem(&b);
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree().is_none_or(|rd| rd < b.degree().unwrap()));
        }
    }
}
