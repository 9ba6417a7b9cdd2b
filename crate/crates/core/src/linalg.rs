//! Exact linear algebra over ℚ(t) and ℚ.
//!
//! Rank computation clears denominators row by row and then runs
//! fraction-free (Bareiss) elimination over ℚ[t], so intermediate entries
//! stay polynomial and every division is exact. The small dense solver
//! used for interpolation works directly over the field.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactfield::{FieldElem, Poly, Rat};

/// Exact rank over ℚ(t) of a matrix of field elements.
pub fn field_rank(rows: &[Vec<FieldElem>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    // Scaling a row by a nonzero element preserves the row space.
    let cleared: Vec<Vec<Poly>> = rows
        .iter()
        .map(|row| {
            let mut lcm = Poly::one();
            for e in row {
                lcm = Poly::lcm(&lcm, e.den());
            }
            row.iter()
                .map(|e| e.num() * &lcm.div_exact(e.den()))
                .collect()
        })
        .collect();
    poly_rank(cleared)
}

/// Fraction-free elimination over ℚ[t]; every division by the previous
/// pivot is exact (a Sylvester determinant identity).
fn poly_rank(mut m: Vec<Vec<Poly>>) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut prev = Poly::one();
    let mut pivot_row = 0;
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        for i in pivot_row + 1..rows {
            for j in col + 1..cols {
                let num = &(&m[pivot_row][col] * &m[i][j]) - &(&m[i][col] * &m[pivot_row][j]);
                m[i][j] = num.div_exact(&prev);
            }
            m[i][col] = Poly::zero();
        }
        prev = m[pivot_row][col].clone();
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Rank of the ℚ-span of the rows, with entries in ℚ(t).
///
/// Column-wise denominator clearing (a ℚ-linear injection applied
/// uniformly down each column) turns entries into polynomials, whose
/// coefficient vectors are then eliminated over ℚ.
pub fn rational_span_rank(rows: &[Vec<FieldElem>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut cleared: Vec<Vec<Poly>> = vec![Vec::with_capacity(cols); rows.len()];
    let mut widths = Vec::with_capacity(cols);
    for j in 0..cols {
        let mut lcm = Poly::one();
        for row in rows {
            lcm = Poly::lcm(&lcm, row[j].den());
        }
        let mut width = 0;
        for (i, row) in rows.iter().enumerate() {
            let p = row[j].num() * &lcm.div_exact(row[j].den());
            width = width.max(p.coeffs().len());
            cleared[i].push(p);
        }
        widths.push(width.max(1));
    }
    let flat: Vec<Vec<Rat>> = cleared
        .iter()
        .map(|row| {
            let mut out = Vec::new();
            for (j, p) in row.iter().enumerate() {
                for k in 0..widths[j] {
                    out.push(p.coeff(k));
                }
            }
            out
        })
        .collect();
    rational_rank(flat)
}

fn rational_rank(mut m: Vec<Vec<Rat>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut pivot_row = 0;
    let mut rank = 0;
    for col in 0..cols {
        let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, found);
        let inv = m[pivot_row][col].recip();
        for j in col..cols {
            let v = &m[pivot_row][j] * &inv;
            m[pivot_row][j] = v;
        }
        for i in pivot_row + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col].clone();
            for j in col..cols {
                let v = &m[i][j] - &(&factor * &m[pivot_row][j]);
                m[i][j] = v;
            }
        }
        rank += 1;
        pivot_row += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

/// Solves the square system `a·c = b` over ℚ(t) by exact Gaussian
/// elimination.
pub fn solve(mut a: Vec<Vec<FieldElem>>, mut b: Vec<FieldElem>) -> Result<Vec<FieldElem>> {
    let n = a.len();
    debug_assert!(a.iter().all(|row| row.len() == n) && b.len() == n);
    for col in 0..n {
        let Some(found) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Err(Error::SingularSystem);
        };
        a.swap(col, found);
        b.swap(col, found);
        let inv = a[col][col].inv().expect("pivot is nonzero");
        for j in col..n {
            a[col][j] = &a[col][j] * &inv;
        }
        b[col] = &b[col] * &inv;
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let factor = a[i][col].clone();
            for j in col..n {
                a[i][j] = &a[i][j] - &(&factor * &a[col][j]);
            }
            b[i] = &b[i] - &(&factor * &b[col]);
        }
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::SampleGen;
    use alloc::vec;

    // Division-based elimination over the field, as an independent rank
    // oracle for the fraction-free route.
    fn gaussian_rank(mut m: Vec<Vec<FieldElem>>) -> usize {
        if m.is_empty() || m[0].is_empty() {
            return 0;
        }
        let rows = m.len();
        let cols = m[0].len();
        let mut pivot_row = 0;
        let mut rank = 0;
        for col in 0..cols {
            let Some(found) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(pivot_row, found);
            let inv = m[pivot_row][col].inv().expect("nonzero pivot");
            for j in col..cols {
                m[pivot_row][j] = &m[pivot_row][j] * &inv;
            }
            for i in pivot_row + 1..rows {
                if m[i][col].is_zero() {
                    continue;
                }
                let factor = m[i][col].clone();
                for j in col..cols {
                    m[i][j] = &m[i][j] - &(&factor * &m[pivot_row][j]);
                }
            }
            rank += 1;
            pivot_row += 1;
            if pivot_row == rows {
                break;
            }
        }
        rank
    }

    #[test]
    fn bareiss_agrees_with_gaussian_on_random_matrices() {
        let mut gen = SampleGen::new(41);
        for case in 0..20usize {
            let rows = 1 + case % 4;
            let cols = 1 + (case / 4) % 4;
            let m: Vec<Vec<FieldElem>> = (0..rows)
                .map(|_| (0..cols).map(|_| gen.field_elem()).collect())
                .collect();
            assert_eq!(field_rank(&m), gaussian_rank(m.clone()), "matrix {m:?}");
        }
    }

    #[test]
    fn rank_detects_proportional_rows_over_field_but_not_over_q() {
        let t = FieldElem::var();
        let row1 = vec![FieldElem::one(), t.clone(), t.powu(2)];
        let row2: Vec<FieldElem> = row1.iter().map(|e| &t * e).collect();
        let m = vec![row1, row2];
        // t·row1 is a ℚ(t)-multiple of row1 but not a ℚ-multiple
        assert_eq!(field_rank(&m), 1);
        assert_eq!(rational_span_rank(&m), 2);
    }

    #[test]
    fn solve_roundtrip() {
        let mut gen = SampleGen::new(43);
        for _ in 0..8 {
            let n = 3;
            let a: Vec<Vec<FieldElem>> = (0..n)
                .map(|_| (0..n).map(|_| gen.field_elem()).collect())
                .collect();
            if gaussian_rank(a.clone()) < n {
                continue;
            }
            let x: Vec<FieldElem> = (0..n).map(|_| gen.field_elem()).collect();
            let b: Vec<FieldElem> = (0..n)
                .map(|i| {
                    let mut acc = FieldElem::zero();
                    for j in 0..n {
                        acc = &acc + &(&a[i][j] * &x[j]);
                    }
                    acc
                })
                .collect();
            assert_eq!(solve(a, b).unwrap(), x);
        }
    }

    #[test]
    fn singular_system_is_reported() {
        let t = FieldElem::var();
        let a = vec![
            vec![FieldElem::one(), t.clone()],
            vec![t.powu(0), t.clone()],
        ];
        let b = vec![FieldElem::one(), FieldElem::zero()];
        assert_eq!(solve(a, b), Err(Error::SingularSystem));
    }

    #[test]
    fn zero_matrix_rank() {
        let z = vec![vec![FieldElem::zero(); 3]; 2];
        assert_eq!(field_rank(&z), 0);
        assert_eq!(rational_span_rank(&z), 0);
    }
}
