//! Deterministic generation of sample points in ℚ(t).
//!
//! Verdicts produced by the check functions are only meaningful when the
//! sample sets are reproducible, so everything here is driven by an
//! explicit seed. Generated elements have numerator/denominator degree at
//! most 3 and coefficient height at most 9, which keeps exact arithmetic
//! fast while staying generic.

use alloc::vec;
use alloc::vec::Vec;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exactfield::{rat, rat_int, FieldElem, Poly, Rat};

const MAX_DEGREE: usize = 3;
const MAX_HEIGHT: i64 = 9;

/// Seeded generator of bounded-height field elements.
pub struct SampleGen {
    rng: ChaCha8Rng,
}

impl SampleGen {
    pub fn new(seed: u64) -> Self {
        SampleGen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.rng.next_u64() % span) as i64
    }

    /// A rational with numerator and denominator bounded by `height`.
    pub fn rat(&mut self, height: i64) -> Rat {
        let num = self.int_in(-height, height);
        let den = self.int_in(1, height);
        rat(num, den)
    }

    /// A nonzero small-height rational.
    pub fn nonzero_rat(&mut self, height: i64) -> Rat {
        loop {
            let r = self.rat(height);
            if r != rat_int(0) {
                return r;
            }
        }
    }

    pub fn poly(&mut self, max_degree: usize, height: i64) -> Poly {
        let len = self.int_in(0, max_degree as i64 + 1) as usize;
        let coeffs: Vec<i64> = (0..len).map(|_| self.int_in(-height, height)).collect();
        Poly::from_ints(&coeffs)
    }

    fn nonzero_poly(&mut self, max_degree: usize, height: i64) -> Poly {
        loop {
            let p = self.poly(max_degree, height);
            if !p.is_zero() {
                return p;
            }
        }
    }

    /// A random canonical rational function.
    pub fn field_elem(&mut self) -> FieldElem {
        let num = self.poly(MAX_DEGREE, MAX_HEIGHT);
        let den = self.nonzero_poly(MAX_DEGREE, MAX_HEIGHT);
        FieldElem::new(num, den).expect("denominator is nonzero")
    }

    pub fn nonzero_field_elem(&mut self) -> FieldElem {
        loop {
            let x = self.field_elem();
            if !x.is_zero() {
                return x;
            }
        }
    }

    pub fn nonconstant_field_elem(&mut self) -> FieldElem {
        loop {
            let x = self.field_elem();
            if !x.is_constant() {
                return x;
            }
        }
    }

    /// A tuple of `k` nonzero elements.
    pub fn tuple(&mut self, k: usize) -> Vec<FieldElem> {
        (0..k).map(|_| self.nonzero_field_elem()).collect()
    }

    /// A nonzero low-degree element: usually a polynomial of degree at
    /// most 2 with height at most 5, occasionally a simple pole. Iterated
    /// difference operators stay cheap on such inputs, which matters for
    /// high-arity checks; full-height elements make intermediate degrees
    /// explode under products of shifted arguments.
    pub fn light_elem(&mut self) -> FieldElem {
        if self.int_in(0, 5) == 0 {
            let a = self.int_in(-4, 4);
            let mut c = 0;
            while c == 0 {
                c = self.int_in(-5, 5);
            }
            return FieldElem::new(Poly::from_ints(&[c]), Poly::from_ints(&[a, 1]))
                .expect("t+a is nonzero");
        }
        loop {
            let p = self.poly(2, 5);
            if !p.is_zero() {
                return FieldElem::from_poly(p);
            }
        }
    }

    /// A tuple of `k` light elements.
    pub fn light_tuple(&mut self, k: usize) -> Vec<FieldElem> {
        (0..k).map(|_| self.light_elem()).collect()
    }
}

/// The fixed structured sample set: small polynomials and simple rational
/// functions that exercise constants, powers, and poles.
pub fn structured_samples() -> Vec<FieldElem> {
    let t = FieldElem::var();
    let one = FieldElem::one();
    vec![
        t.clone(),
        &t + &one,
        &t - &one,
        t.powu(2),
        &FieldElem::from_int(2) * &t,
        t.inv().expect("t is nonzero"),
        &t.powu(2) + &one,
        FieldElem::from_int(2),
        FieldElem::from_rat(rat(1, 2)),
        t.powu(3),
    ]
}

/// The structured set plus `random_count` seeded pseudo-random nonzero
/// elements, deduplicated while preserving order.
pub fn default_samples(seed: u64, random_count: usize) -> Vec<FieldElem> {
    let mut out = structured_samples();
    let mut gen = SampleGen::new(seed);
    let mut added = 0;
    let mut attempts = 0;
    while added < random_count && attempts < random_count * 50 + 100 {
        attempts += 1;
        let x = gen.nonzero_field_elem();
        if !out.contains(&x) {
            out.push(x);
            added += 1;
        }
    }
    out
}
