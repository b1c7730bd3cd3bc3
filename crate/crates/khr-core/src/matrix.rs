//! Exact dense linear algebra: rank and kernels over a field, Smith normal
//! form over the integers with minimal-magnitude pivoting.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ring::{Coeff, FieldCoeff, Int};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Debug)]
pub struct Mat<R> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<R>,
}

impl<R: Coeff> Mat<R> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![R::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = R::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c);
            data.extend(row);
        }
        Mat { rows: r, cols: c, data }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, rhs: &Mat<R>) -> Mat<R> {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.clone() * b.clone();
                    out[(i, j)] = out[(i, j)].clone() + prod;
                }
            }
        }
        out
    }

    /// Horizontal concatenation `[self | rhs]`.
    pub fn hcat(&self, rhs: &Mat<R>) -> Mat<R> {
        assert_eq!(self.rows, rhs.rows);
        let mut out = Mat::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                out[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> Mat<R> {
        let mut out = Mat::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                out[(i, jj)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat<R> {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (ii, &i) in rows.iter().enumerate() {
            for (jj, &j) in cols.iter().enumerate() {
                out[(ii, jj)] = self[(i, j)].clone();
            }
        }
        out
    }
}

impl<R> core::ops::Index<(usize, usize)> for Mat<R> {
    type Output = R;
    fn index(&self, (i, j): (usize, usize)) -> &R {
        &self.data[i * self.cols + j]
    }
}

impl<R> core::ops::IndexMut<(usize, usize)> for Mat<R> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut R {
        &mut self.data[i * self.cols + j]
    }
}

/// Row echelon elimination over a field; returns the rank and leaves the
/// matrix in echelon form with recorded pivot columns.
fn echelonize<F: FieldCoeff>(m: &mut Mat<F>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| !m[(i, col)].is_zero()) else {
            continue;
        };
        if p != row {
            for j in 0..m.cols {
                let a = m[(p, j)].clone();
                let b = m[(row, j)].clone();
                m[(p, j)] = b;
                m[(row, j)] = a;
            }
        }
        let inv = m[(row, col)].recip();
        for j in col..m.cols {
            m[(row, j)] = m[(row, j)].clone() * inv.clone();
        }
        for i in 0..m.rows {
            if i == row || m[(i, col)].is_zero() {
                continue;
            }
            let factor = m[(i, col)].clone();
            for j in col..m.cols {
                let delta = factor.clone() * m[(row, j)].clone();
                m[(i, j)] = m[(i, j)].clone() - delta;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank<F: FieldCoeff>(m: &Mat<F>) -> usize {
    let mut work = m.clone();
    echelonize(&mut work).len()
}

/// Basis of the right kernel, as columns of the returned matrix.
pub fn kernel_basis<F: FieldCoeff>(m: &Mat<F>) -> Mat<F> {
    let mut work = m.clone();
    let pivots = echelonize(&mut work);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    let mut out = Mat::zeros(m.cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        out[(fc, k)] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            out[(pc, k)] = -work[(r, fc)].clone();
        }
    }
    out
}

/// Invariant factors of an integer matrix (nonzero diagonal of the Smith
/// normal form, in divisibility order). Pivots are chosen with minimal
/// absolute value to limit entry growth.
pub fn smith_invariant_factors(m: &Mat<Int>) -> Vec<Int> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut factors: Vec<Int> = Vec::new();
    let mut k = 0;
    while k < rows.min(cols) {
        // minimal nonzero entry in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                match &pivot {
                    Some(&(pi, pj)) if a[(pi, pj)].abs() <= a[(i, j)].abs() => {}
                    _ => pivot = Some((i, j)),
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        swap_rows(&mut a, k, pi);
        swap_cols(&mut a, k, pj);
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if a[(i, k)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&a[(i, k)], &a[(k, k)]);
                if !q.is_zero() {
                    for j in k..cols {
                        let delta = q.clone() * a[(k, j)].clone();
                        a[(i, j)] = a[(i, j)].clone() - delta;
                    }
                }
                if !a[(i, k)].is_zero() {
                    // remainder smaller than pivot: swap it up and restart
                    swap_rows(&mut a, k, i);
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if a[(k, j)].is_zero() {
                    continue;
                }
                let q = rounded_quotient(&a[(k, j)], &a[(k, k)]);
                if !q.is_zero() {
                    for i in k..rows {
                        let delta = q.clone() * a[(i, k)].clone();
                        a[(i, j)] = a[(i, j)].clone() - delta;
                    }
                }
                if !a[(k, j)].is_zero() {
                    swap_cols(&mut a, k, j);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        // pivot now divides its row/col complement; enforce divisibility of
        // the remaining block
        let mut adjusted = false;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if !(a[(i, j)].clone() % a[(k, k)].clone()).is_zero() {
                    // add row i to row k and redo the elimination for this pivot
                    for jj in k..cols {
                        let v = a[(i, jj)].clone();
                        a[(k, jj)] = a[(k, jj)].clone() + v;
                    }
                    adjusted = true;
                    break 'scan;
                }
            }
        }
        if adjusted {
            continue;
        }
        factors.push(a[(k, k)].abs());
        k += 1;
    }
    factors
}

fn swap_rows(a: &mut Mat<Int>, r1: usize, r2: usize) {
    if r1 == r2 {
        return;
    }
    for j in 0..a.cols {
        let x = a[(r1, j)].clone();
        let y = a[(r2, j)].clone();
        a[(r1, j)] = y;
        a[(r2, j)] = x;
    }
}

fn swap_cols(a: &mut Mat<Int>, c1: usize, c2: usize) {
    if c1 == c2 {
        return;
    }
    for i in 0..a.rows {
        let x = a[(i, c1)].clone();
        let y = a[(i, c2)].clone();
        a[(i, c1)] = y;
        a[(i, c2)] = x;
    }
}

/// Quotient rounding toward the nearest integer, so the remainder has
/// magnitude at most |d|/2.
fn rounded_quotient(n: &Int, d: &Int) -> Int {
    let (mut q, r) = n.div_rem(d);
    let two_r = r.abs() * Int::from(2);
    if two_r > d.abs() {
        if (r.is_negative()) == (d.is_negative()) {
            q += Int::one();
        } else {
            q -= Int::one();
        }
    }
    q
}

/// Rank over the rationals of an integer matrix, via its invariant factors.
pub fn integer_rank(m: &Mat<Int>) -> usize {
    smith_invariant_factors(m).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat_int, Rat};

    fn imat(rows: &[&[i64]]) -> Mat<Int> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Int::from(v)).collect())
                .collect(),
        )
    }

    fn qmat(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| rat_int(v)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_and_kernel() {
        let m = qmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(rank(&m), 2);
        let k = kernel_basis(&m);
        assert_eq!(k.cols, 1);
        assert!(m.mul(&k).is_zero());
    }

    #[test]
    fn snf_small() {
        let m = imat(&[&[2, 4, 4], &[-6, 6, 12], &[10, 4, 16]]);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![Int::from(2), Int::from(2), Int::from(156)]);
    }

    #[test]
    fn snf_known() {
        let m = imat(&[
            &[-6, 111, -36, 6],
            &[5, -672, 210, 74],
            &[0, -255, 81, 24],
            &[-7, 255, -81, -10],
        ]);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![Int::from(1), Int::from(3), Int::from(21)]);
    }

    #[test]
    fn snf_divisibility_chain() {
        let m = imat(&[&[2, 0], &[0, 3]]);
        let f = smith_invariant_factors(&m);
        assert_eq!(f, vec![Int::from(1), Int::from(6)]);
    }
}
