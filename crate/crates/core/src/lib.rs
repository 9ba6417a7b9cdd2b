//! Exact calculus for additive maps and symmetric multi-additive forms
//! over the rational-function field ℚ(t).
//!
//! The crate is organised around a small tower:
//!
//! * [`exactfield`] — canonical arithmetic in ℚ(t), the computable model
//!   of the base field;
//! * [`atoms`] — evaluable additive maps ℚ(t) → ℚ(t) (identity,
//!   derivations, substitution homomorphisms, compositions, linear
//!   combinations) with additivity/Leibniz/homomorphism checkers;
//! * [`multiadd`] — symmetric k-additive forms, traces, additive and
//!   multiplicative difference operators, polarization, and power-block
//!   symmetrization;
//! * [`genpoly`] — classical polynomials over ℚ(t), homogeneous component
//!   extraction by rational scaling, and the generalized-monomial degree
//!   test;
//! * [`structure`] — exact grid ranks, independence certification, and
//!   the higher-order-derivation degree probe;
//! * [`feq`] — scenario-based identity verification and the built-in
//!   verification suite.
//!
//! Everything is exact; a PASS verdict means an identity held at every
//! supplied sample point, which is evidence, not proof. All values are
//! immutable after construction and every operation is pure, so values
//! can be shared freely across threads.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod atoms;
pub mod error;
pub mod exactfield;
pub mod feq;
pub mod genpoly;
mod linalg;
pub mod multiadd;
pub mod sample;
pub mod structure;

pub use error::{Error, Result};
pub use exactfield::{FieldElem, Poly, Rat};
