//! Exact determinants and linear solves.
//!
//! Everything here is fraction-free where it matters: determinants over
//! integral domains use Bareiss elimination, and rational systems are
//! scaled row-wise to integer systems before elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{Poly, Ring};

/// A ring in which exact quotients can be taken.
pub trait ExactRing: Ring {
    /// `self / d`, assuming `d` divides `self`.
    fn div_exact(&self, d: &Self) -> Self;
}

impl ExactRing for BigInt {
    fn div_exact(&self, d: &Self) -> Self {
        let (q, r) = self.div_rem(d);
        debug_assert!(r.is_zero(), "inexact integer division");
        q
    }
}

impl ExactRing for BigRational {
    fn div_exact(&self, d: &Self) -> Self {
        self / d
    }
}

impl ExactRing for Poly<BigInt> {
    fn div_exact(&self, d: &Self) -> Self {
        Poly::div_exact(self, d)
    }
}

/// Bareiss fraction-free determinant of a square matrix.
pub fn bareiss_det<R: ExactRing>(mut m: Vec<Vec<R>>) -> R {
    let n = m.len();
    if n == 0 {
        return R::one();
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return R::zero(),
            }
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..n {
                let v = pivot.clone() * row[j].clone() - lead.clone() * pivot_row[j].clone();
                row[j] = v.div_exact(&prev);
            }
            row[k] = R::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Gaussian elimination over a field.
pub fn gauss_det<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    let mut det = F::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return F::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det = det * pivot.clone();
        let inv = F::one() / pivot;
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            if row[k].is_zero() {
                continue;
            }
            let f = row[k].clone() * inv.clone();
            for j in k + 1..n {
                row[j] = row[j].clone() - f.clone() * pivot_row[j].clone();
            }
            row[k] = F::zero();
        }
    }
    det
}

/// Solves the (possibly overdetermined) system `a x = b` exactly.
///
/// Each row is scaled to integers, the augmented matrix is reduced with
/// Bareiss elimination, and the triangular part is back-substituted over
/// the rationals. Requires full column rank; surplus rows must be consistent.
pub fn solve_exact(a: &[Vec<BigRational>], b: &[BigRational]) -> Result<Vec<BigRational>> {
    let rows = a.len();
    let n = a.first().map_or(0, Vec::len);
    assert_eq!(rows, b.len());
    if rows < n {
        return Err(Error::RankDeficient {
            rank: rows,
            unknowns: n,
        });
    }
    let mut m: Vec<Vec<BigInt>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| integer_row(row.iter().chain(std::iter::once(rhs))))
        .collect();

    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..rows).find(|&i| !m[i][k].is_zero()) else {
            return Err(Error::RankDeficient { rank: k, unknowns: n });
        };
        m.swap(k, p);
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        let pivot = &pivot_row[k];
        for row in tail.iter_mut() {
            let lead = row[k].clone();
            for j in k + 1..=n {
                let v = pivot * &row[j] - &lead * &pivot_row[j];
                row[j] = v.div_exact(&prev);
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    if m[n..].iter().any(|row| !row[n].is_zero()) {
        return Err(Error::Inconsistent);
    }

    let mut x = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        let mut acc = BigRational::from_integer(m[k][n].clone());
        for j in k + 1..n {
            acc -= BigRational::from_integer(m[k][j].clone()) * &x[j];
        }
        x[k] = acc / BigRational::from_integer(m[k][k].clone());
    }
    Ok(x)
}

fn integer_row<'a>(entries: impl Iterator<Item = &'a BigRational> + Clone) -> Vec<BigInt> {
    let l = entries
        .clone()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    entries
        .map(|q| q.numer() * (&l / q.denom()))
        .collect()
}
