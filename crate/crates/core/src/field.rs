//! Scalar fields in which characters are evaluated.
//!
//! The evaluation pipeline is generic over [`Field`]. Two exact fields ship:
//! the rationals ([`Rational`]) for numeric specialization points, and the
//! univariate rational functions ([`RatFunc`]) for one-parameter points.

use std::fmt;
use std::ops::Div;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::linalg::{bareiss_det, gauss_det};
use crate::poly::{Poly, RatFunc, Ring};

pub type Rational = BigRational;

pub trait Field: Ring + Div<Output = Self> + fmt::Debug + Send + Sync {
    fn from_i64(n: i64) -> Self;

    fn from_rational(q: &Rational) -> Self;

    fn pow_i64(&self, e: i64) -> Self {
        let base = if e < 0 {
            Self::one() / self.clone()
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * sq.clone();
            }
            e >>= 1;
            if e > 0 {
                sq = sq.clone() * sq;
            }
        }
        acc
    }

    /// Determinant of a square matrix.
    fn determinant(rows: Vec<Vec<Self>>) -> Self {
        gauss_det(rows)
    }

    /// `det(u_j^{e_i})` for nonnegative exponents.
    fn power_determinant(u: &[Self], exps: &[u32]) -> Self {
        let rows = exps
            .iter()
            .map(|&e| u.iter().map(|v| v.pow_i64(e as i64)).collect())
            .collect();
        Self::determinant(rows)
    }
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    /// Clears denominators column by column and runs Bareiss over `Z`.
    fn determinant(rows: Vec<Vec<Self>>) -> Self {
        let n = rows.len();
        if n == 0 {
            return Self::one();
        }
        let scales: Vec<BigInt> = (0..n)
            .map(|j| rows.iter().fold(BigInt::one(), |l, r| l.lcm(r[j].denom())))
            .collect();
        let ints: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(&scales)
                    .map(|(q, s)| q.numer() * (s / q.denom()))
                    .collect()
            })
            .collect();
        let total: BigInt = scales.iter().product();
        BigRational::new(bareiss_det(ints), total)
    }

    /// Scales column `j` by `b_j^E` so that entry `(i, j)` is `a_j^{e_i} b_j^{E - e_i}`.
    fn power_determinant(u: &[Self], exps: &[u32]) -> Self {
        let top = exps.iter().copied().max().unwrap_or(0);
        let cols: Vec<Vec<BigInt>> = u
            .iter()
            .map(|q| {
                let a = integer_powers(q.numer(), top);
                let b = integer_powers(q.denom(), top);
                exps.iter()
                    .map(|&e| &a[e as usize] * &b[(top - e) as usize])
                    .collect()
            })
            .collect();
        let ints: Vec<Vec<BigInt>> = (0..exps.len())
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let total: BigInt = u.iter().map(|q| num_traits::pow(q.denom().clone(), top as usize)).product();
        BigRational::new(bareiss_det(ints), total)
    }
}

fn integer_powers(base: &BigInt, top: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(top as usize + 1);
    out.push(BigInt::one());
    for k in 0..top as usize {
        let next = &out[k] * base;
        out.push(next);
    }
    out
}

impl Field for RatFunc {
    fn from_i64(n: i64) -> Self {
        RatFunc::constant(Rational::from_i64(n))
    }

    fn from_rational(q: &Rational) -> Self {
        RatFunc::constant(q.clone())
    }

    /// Brings each column over a common polynomial denominator, scales to
    /// integer coefficients, and runs Bareiss over `Z[x]`.
    fn determinant(rows: Vec<Vec<Self>>) -> Self {
        let n = rows.len();
        if n == 0 {
            return Self::one();
        }
        let mut cols: Vec<Vec<Poly<BigInt>>> = Vec::with_capacity(n);
        let mut scale = RatFunc::one();
        for j in 0..n {
            let mut common: Poly<BigRational> = Poly::one();
            for r in &rows {
                let d = r[j].denom();
                if common == *d || d.is_one() {
                    continue;
                }
                let g = common.gcd(d);
                common = &common * &d.div_rem(&g).0;
            }
            let lifted: Vec<Poly<BigRational>> = rows
                .iter()
                .map(|r| {
                    let cofactor = common.div_rem(r[j].denom()).0;
                    r[j].numer() * &cofactor
                })
                .collect();
            let m = lifted.iter().fold(BigInt::one(), |l, p| {
                p.coeffs().iter().fold(l, |l, c| l.lcm(c.denom()))
            });
            let mq = BigRational::from_integer(m.clone());
            cols.push(
                lifted
                    .iter()
                    .map(|p| p.map(|c| (c * &mq).to_integer()))
                    .collect(),
            );
            scale = scale * RatFunc::new(Poly::one(), common.scale(&mq));
        }
        let ints: Vec<Vec<Poly<BigInt>>> = (0..n)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect();
        let det = bareiss_det(ints);
        RatFunc::from_poly(Poly::from_integer_poly(&det)) * scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn rational_determinant_with_denominators() {
        let m = vec![
            vec![q(1, 2), q(1, 3)],
            vec![q(1, 5), q(1, 7)],
        ];
        // 1/14 - 1/15 = 1/210
        assert_eq!(Rational::determinant(m.clone()), q(1, 210));
        assert_eq!(gauss_det(m), q(1, 210));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(q(2, 3).pow_i64(-3), q(27, 8));
        assert_eq!(q(5, 1).pow_i64(0), q(1, 1));
    }

    #[test]
    fn ratfunc_determinant_agrees_with_gauss() {
        let x = RatFunc::x();
        let u = RatFunc::laurent_monomial(q(1, 720), -1);
        let m: Vec<Vec<RatFunc>> = (0..4)
            .map(|e| {
                vec![
                    RatFunc::from_i64(2).pow_i64(e),
                    RatFunc::from_i64(3).pow_i64(e),
                    x.pow_i64(e),
                    u.pow_i64(e),
                ]
            })
            .collect();
        assert_eq!(RatFunc::determinant(m.clone()), gauss_det(m));
    }

    #[test]
    fn power_determinant_is_vandermonde() {
        let u = vec![q(1, 2), q(-3, 1), q(5, 7), q(4, 1)];
        let mut vdm = q(1, 1);
        for i in 0..4 {
            for j in i + 1..4 {
                vdm *= &u[i] - &u[j];
            }
        }
        assert_eq!(Rational::power_determinant(&u, &[3, 2, 1, 0]), vdm);
        let generic: Rational = gauss_det(
            [5u32, 3, 1, 0]
                .iter()
                .map(|&e| u.iter().map(|v| v.pow_i64(e as i64)).collect())
                .collect(),
        );
        assert_eq!(Rational::power_determinant(&u, &[5, 3, 1, 0]), generic);
    }
}
