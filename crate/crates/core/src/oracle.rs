//! Brute-force representation theory for `A_1 .. A_3`, sharing nothing with
//! the alternant pipeline beyond the weight type.
//!
//! Weights are handled as exponent vectors `(e_1, .., e_{n+1})` of
//! `u_1 .. u_{n+1}`; positive roots are `e_i - e_j` for `i < j`, and the
//! Euclidean form on these vectors is the invariant form up to a term that
//! is constant on any weight system.

use std::collections::{BTreeMap, HashMap};

use crate::alternant::SpecPoint;
use crate::cartan::{AlgebraId, DynkinWeight, Family};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::tensor::{Decomposition, Entry, Provenance};

pub const MAX_RANK: usize = 3;
pub const MAX_DIM: u128 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub highest: DynkinWeight,
    pub weights: BTreeMap<DynkinWeight, u64>,
}

impl WeightSystem {
    pub fn total(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn multiplicity(&self, w: &DynkinWeight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }
}

fn check_small(w: &DynkinWeight) -> Result<()> {
    let alg = w.algebra();
    if alg.family() != Family::A || alg.rank() > MAX_RANK {
        return Err(Error::WrongAlgebra {
            expected: format!("A_n with n <= {MAX_RANK}"),
            got: alg,
        });
    }
    w.ensure_dominant()
}

fn exponents(labels: &[i64]) -> Vec<i64> {
    let mut e = vec![0i64; labels.len() + 1];
    for j in (0..labels.len()).rev() {
        e[j] = e[j + 1] + labels[j];
    }
    e
}

fn labels_of(e: &[i64]) -> Vec<i64> {
    e.windows(2).map(|p| p[0] - p[1]).collect()
}

/// Increases along every positive root.
fn height(e: &[i64]) -> i64 {
    let n = e.len() as i64;
    e.iter().enumerate().map(|(j, v)| (n - 1 - j as i64) * v).sum()
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Product formula over pairs of exponents.
pub fn oracle_dim(w: &DynkinWeight) -> u128 {
    let e = exponents(w.labels());
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            num *= (e[i] - e[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
        }
    }
    num / den
}

/// Whether sorted `e` is majorized by `top` (both of the same total).
fn majorized(e: &[i64], top: &[i64]) -> bool {
    let mut s = e.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    let (mut a, mut b) = (0, 0);
    s.iter().zip(top).all(|(x, y)| {
        a += x;
        b += y;
        a <= b
    })
}

fn compositions(total: i64, parts: usize) -> Vec<Vec<i64>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Multiplicities keyed by exponent vector, via Freudenthal's recursion.
fn freudenthal_exponents(labels: &[i64]) -> HashMap<Vec<i64>, u64> {
    let top = exponents(labels);
    let parts = top.len();
    let total: i64 = top.iter().sum();
    let rho: Vec<i64> = (0..parts as i64).rev().collect();
    let shifted = |e: &[i64]| -> Vec<i64> { e.iter().zip(&rho).map(|(a, b)| a + b).collect() };
    let top_rho = shifted(&top);
    let top_norm = dot(&top_rho, &top_rho);

    let mut candidates: Vec<Vec<i64>> = compositions(total, parts)
        .into_iter()
        .filter(|e| majorized(e, &top))
        .collect();
    candidates.sort_by_key(|e| std::cmp::Reverse(height(e)));

    let mut mult: HashMap<Vec<i64>, u64> = HashMap::new();
    for mu in candidates {
        if mu == top {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum: i64 = 0;
        for i in 0..parts {
            for j in i + 1..parts {
                let mut up = mu.clone();
                loop {
                    up[i] += 1;
                    up[j] -= 1;
                    match mult.get(&up) {
                        Some(&m) => sum += m as i64 * (up[i] - up[j]),
                        None => break,
                    }
                }
            }
        }
        let mu_rho = shifted(&mu);
        let gap = top_norm - dot(&mu_rho, &mu_rho);
        assert!(gap > 0, "weight {mu:?} not strictly below the top");
        assert_eq!((2 * sum) % gap, 0, "non-integral multiplicity at {mu:?}");
        let m = 2 * sum / gap;
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    mult
}

pub fn freudenthal(w: &DynkinWeight) -> Result<WeightSystem> {
    check_small(w)?;
    let d = oracle_dim(w);
    if d > MAX_DIM {
        return Err(Error::TooLarge(d));
    }
    let weights = freudenthal_exponents(w.labels())
        .into_iter()
        .map(|(e, m)| (DynkinWeight::with_labels(w.algebra(), labels_of(&e)), m))
        .collect();
    Ok(WeightSystem {
        highest: w.clone(),
        weights,
    })
}

/// `Σ_μ m(μ) u^μ` over the weight system of `w`.
pub fn char_brute<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    check_small(w)?;
    let d = oracle_dim(w);
    if d > MAX_DIM {
        return Err(Error::TooLarge(d));
    }
    let parts = w.algebra().rank() + 1;
    if p.len() != parts {
        return Err(Error::PointLength {
            expected: parts,
            got: p.len(),
        });
    }
    let mut terms: Vec<(Vec<i64>, u64)> = freudenthal_exponents(w.labels()).into_iter().collect();
    terms.sort();
    Ok(terms.into_iter().fold(F::zero(), |acc, (e, m)| {
        let mono = e
            .iter()
            .zip(p.coords())
            .fold(F::from_i64(m as i64), |acc, (&k, u)| acc * u.pow_i64(k));
        acc + mono
    }))
}

/// Convolves the two weight systems and peels off irreducibles from the top.
pub fn tensor_brute(l: &DynkinWeight, l2: &DynkinWeight) -> Result<Decomposition> {
    check_small(l)?;
    check_small(l2)?;
    if l.algebra() != l2.algebra() {
        return Err(Error::AlgebraMismatch(l.algebra(), l2.algebra()));
    }
    for w in [l, l2] {
        let d = oracle_dim(w);
        if d > MAX_DIM {
            return Err(Error::TooLarge(d));
        }
    }
    let a = freudenthal_exponents(l.labels());
    let b = freudenthal_exponents(l2.labels());
    let mut remainder: HashMap<Vec<i64>, i64> = HashMap::new();
    for (ea, ma) in &a {
        for (eb, mb) in &b {
            let e: Vec<i64> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *remainder.entry(e).or_default() += (ma * mb) as i64;
        }
    }

    let mut entries = Vec::new();
    let mut dim_rhs: u128 = 0;
    loop {
        remainder.retain(|_, m| *m != 0);
        if let Some((e, _)) = remainder.iter().find(|(_, &m)| m < 0) {
            return Err(Error::NegativeRemainder(labels_of(e)));
        }
        let Some(peak) = remainder
            .keys()
            .max_by(|x, y| height(x).cmp(&height(y)).then_with(|| x.cmp(y)))
            .cloned()
        else {
            break;
        };
        let mult = remainder[&peak];
        let labels = labels_of(&peak);
        let shift = *peak.last().expect("nonempty");
        for (e, m) in freudenthal_exponents(&labels) {
            let key: Vec<i64> = e.iter().map(|v| v + shift).collect();
            *remainder.entry(key).or_default() -= mult * m as i64;
        }
        let weight = DynkinWeight::with_labels(l.algebra(), labels);
        dim_rhs += oracle_dim(&weight) * mult as u128;
        entries.push(Entry {
            weight,
            mult: mult as u64,
        });
    }

    let provenance = Provenance {
        backend: "oracle".into(),
        seed: 0,
        points: 0,
        held_out: 0,
        candidates: entries.len(),
        attempts: 1,
    };
    let mut d = Decomposition::from_multiplicities((l.clone(), l2.clone()), entries, provenance)?;
    d.dim_lhs = oracle_dim(l) * oracle_dim(l2);
    d.dim_rhs = dim_rhs;
    Ok(d)
}

/// All dominant weights of `algebra` with label sum at most `max_sum`.
pub fn dominant_weights_up_to(algebra: AlgebraId, max_sum: i64) -> Vec<DynkinWeight> {
    let n = algebra.rank();
    (0..=max_sum)
        .flat_map(|s| compositions(s, n))
        .map(|l| DynkinWeight::with_labels(algebra, l))
        .collect()
}
