//! Finite-rank detection for kernels, linear-independence certification,
//! and the higher-order-derivation degree probe.
//!
//! All verdicts here are desk-scale evidence from exact values on finite
//! grids: a decomposable kernel has uniformly bounded grid rank, and a
//! derivation of order n has an identically vanishing multiplicative
//! difference of order n+1, so exact agreement on generic samples is
//! strong evidence while disagreement is a proof of failure.

use alloc::vec::Vec;

use crate::atoms::AdditiveMap;
use crate::error::{Error, Result};
use crate::exactfield::FieldElem;
use crate::linalg;
use crate::multiadd::{delta_mult, UnaryFn};
use crate::sample::SampleGen;

/// Exact values of a two-argument kernel on a finite grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelGrid {
    xs: Vec<FieldElem>,
    ys: Vec<FieldElem>,
    values: Vec<Vec<FieldElem>>,
}

impl KernelGrid {
    /// Evaluates `kernel` at every grid pair.
    pub fn evaluate<K>(mut kernel: K, xs: &[FieldElem], ys: &[FieldElem]) -> Result<Self>
    where
        K: FnMut(&FieldElem, &FieldElem) -> Result<FieldElem>,
    {
        if xs.is_empty() || ys.is_empty() {
            return Err(Error::EmptySamples);
        }
        let mut values = Vec::with_capacity(xs.len());
        for x in xs {
            let mut row = Vec::with_capacity(ys.len());
            for y in ys {
                row.push(kernel(x, y)?);
            }
            values.push(row);
        }
        Ok(KernelGrid {
            xs: xs.to_vec(),
            ys: ys.to_vec(),
            values,
        })
    }

    pub fn xs(&self) -> &[FieldElem] {
        &self.xs
    }

    pub fn ys(&self) -> &[FieldElem] {
        &self.ys
    }

    pub fn value(&self, i: usize, j: usize) -> &FieldElem {
        &self.values[i][j]
    }

    /// Exact rank of the value matrix over ℚ(t).
    pub fn rank(&self) -> usize {
        linalg::field_rank(&self.values)
    }

    /// The grid restricted to its first `rows`×`cols` corner.
    pub fn corner(&self, rows: usize, cols: usize) -> KernelGrid {
        KernelGrid {
            xs: self.xs[..rows.min(self.xs.len())].to_vec(),
            ys: self.ys[..cols.min(self.ys.len())].to_vec(),
            values: self.values[..rows.min(self.values.len())]
                .iter()
                .map(|row| row[..cols.min(row.len())].to_vec())
                .collect(),
        }
    }
}

/// Exact rank over ℚ(t) of the kernel's value matrix on the grid.
pub fn kernel_rank<K>(kernel: K, xs: &[FieldElem], ys: &[FieldElem]) -> Result<usize>
where
    K: FnMut(&FieldElem, &FieldElem) -> Result<FieldElem>,
{
    Ok(KernelGrid::evaluate(kernel, xs, ys)?.rank())
}

/// Outcome of a linear-independence certification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IndependenceVerdict {
    Independent { rank: usize },
    Dependent { rank: usize, required: usize },
}

impl IndependenceVerdict {
    pub fn passed(&self) -> bool {
        matches!(self, IndependenceVerdict::Independent { .. })
    }

    pub fn rank(&self) -> usize {
        match self {
            IndependenceVerdict::Independent { rank } => *rank,
            IndependenceVerdict::Dependent { rank, .. } => *rank,
        }
    }
}

/// Certifies that no nontrivial rational linear combination of the maps
/// vanishes on the sample points.
///
/// Independence is taken over the constant scalars ℚ, the computable
/// stand-in for the scalar field of the codomain: over ℚ(t) itself every
/// derivation is a multiple of d/dt, so the constant-scalar notion is the
/// one under which families such as `der(1), der(t)` are independent.
/// The value matrix is flattened to ℚ-coordinates and eliminated exactly.
pub fn certify_independent(
    maps: &[AdditiveMap],
    xs: &[FieldElem],
) -> Result<IndependenceVerdict> {
    if maps.is_empty() {
        return Err(Error::EmptySamples);
    }
    if xs.len() < maps.len() {
        return Err(Error::GridTooSmall {
            maps: maps.len(),
            points: xs.len(),
        });
    }
    let mut rows = Vec::with_capacity(maps.len());
    for m in maps {
        let row: Result<Vec<FieldElem>> = xs.iter().map(|x| m.eval(x)).collect();
        rows.push(row?);
    }
    let rank = linalg::rational_span_rank(&rows);
    if rank == maps.len() {
        Ok(IndependenceVerdict::Independent { rank })
    } else {
        Ok(IndependenceVerdict::Dependent {
            rank,
            required: maps.len(),
        })
    }
}

/// How many increment windows the degree probe expands per order.
const HOD_WINDOWS: usize = 2;

/// Report of the higher-order-derivation degree probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HodReport {
    /// The map's value at 1; a derivation of any order sends 1 to 0.
    pub value_at_one: FieldElem,
    /// Least order `n` with a vanishing multiplicative difference of
    /// order n+1 of `D/id`, if one exists within the bound.
    pub degree: Option<usize>,
    pub max_degree: usize,
    /// Seed behind the increment pool, recorded for reproducibility.
    pub seed: u64,
    pub increment_pool: Vec<FieldElem>,
}

impl HodReport {
    /// Whether the probe found derivation-of-order-n behaviour at all.
    pub fn applicable(&self) -> bool {
        self.value_at_one.is_zero()
    }
}

/// Probes the least `n ≤ max_degree` such that the multiplicative
/// difference of `D/id` of order n+1 vanishes at every sampled base point
/// for every increment window, with the order-n difference witnessed
/// nonzero (orders are searched from below, so the preceding order always
/// supplies the witness). Requires `D(1) = 0`; a nonzero value at 1 is
/// reported instead of a degree.
///
/// Increments come from a seeded pool of nonzero bounded-height elements;
/// the zero map is reported as degree 0.
pub fn hod_degree(
    map: &AdditiveMap,
    max_degree: usize,
    bases: &[FieldElem],
    seed: u64,
) -> Result<HodReport> {
    let bases: Vec<FieldElem> = bases.iter().filter(|x| !x.is_zero()).cloned().collect();
    if bases.is_empty() {
        return Err(Error::EmptySamples);
    }
    // A rational-constant increment c satisfies (D/id)(cx) = (D/id)(x) for
    // every additive D, so constants can never separate orders; the pool
    // is drawn nonconstant.
    let mut gen = SampleGen::new(seed);
    let pool: Vec<FieldElem> = (0..max_degree + HOD_WINDOWS + 1)
        .map(|_| gen.nonconstant_field_elem())
        .collect();
    let value_at_one = map.eval(&FieldElem::one())?;
    if !value_at_one.is_zero() {
        return Ok(HodReport {
            value_at_one,
            degree: None,
            max_degree,
            seed,
            increment_pool: pool,
        });
    }
    let ratio = UnaryFn::quotient(UnaryFn::atom(map.clone()), UnaryFn::arg());
    let mut degree = None;
    'orders: for n in 0..=max_degree {
        for window in pool.windows(n + 1).take(HOD_WINDOWS) {
            let diff = delta_mult(&ratio, window)?;
            for base in &bases {
                if !diff.eval(base)?.is_zero() {
                    continue 'orders;
                }
            }
        }
        degree = Some(n);
        break;
    }
    Ok(HodReport {
        value_at_one,
        degree,
        max_degree,
        seed,
        increment_pool: pool,
    })
}

/// Grid-rank evidence for the decomposability of `(x₁,…,x_k) ↦ a(x₁⋯x_k)`,
/// taken on bivariate slices `K(x, y) = a(x·y·m)` over tail products `m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposabilityReport {
    pub k: usize,
    /// `(tail product, grid rank)` per sampled tail.
    pub per_tail: Vec<(FieldElem, usize)>,
    pub max_rank: usize,
    /// Whether dropping the last grid row and column leaves every tail's
    /// rank unchanged — the saturation signal for finite rank.
    pub rank_saturated: bool,
}

/// Desk-scale decomposability evidence: uniformly low slice rank across
/// tails indicates a decomposable pullback, growth up to the grid size
/// does not. One-sided by nature; it never proves decomposability.
pub fn pullback_decomposable(
    map: &AdditiveMap,
    k: usize,
    xs: &[FieldElem],
    ys: &[FieldElem],
) -> Result<DecomposabilityReport> {
    assert!(k >= 2, "pullback slices need k >= 2");
    if xs.is_empty() || ys.is_empty() {
        return Err(Error::EmptySamples);
    }
    if xs.iter().chain(ys).any(FieldElem::is_zero) {
        return Err(Error::ZeroIncrement);
    }
    let mut tails = Vec::new();
    if k == 2 {
        tails.push(FieldElem::one());
    } else {
        for window in xs.windows(k - 2).take(3) {
            let mut prod = FieldElem::one();
            for w in window {
                prod = &prod * w;
            }
            tails.push(prod);
        }
        if tails.is_empty() {
            return Err(Error::InsufficientSamples {
                needed: k - 2,
                got: xs.len(),
            });
        }
    }
    let mut per_tail = Vec::with_capacity(tails.len());
    let mut max_rank = 0;
    let mut rank_saturated = true;
    for tail in tails {
        let grid = KernelGrid::evaluate(|x, y| map.eval(&(&(x * y) * &tail)), xs, ys)?;
        let rank = grid.rank();
        let inner = grid.corner(xs.len() - 1, ys.len() - 1);
        if !inner.xs().is_empty() && inner.rank() != rank {
            rank_saturated = false;
        }
        max_rank = max_rank.max(rank);
        per_tail.push((tail, rank));
    }
    Ok(DecomposabilityReport {
        k,
        per_tail,
        max_rank,
        rank_saturated,
    })
}
