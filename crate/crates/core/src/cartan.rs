//! Root-system and weight-lattice data for `A_n` (n ≤ 7) and `E7`.
//!
//! Weights are integer Dynkin labels. The E7 node ordering is the one under
//! which the embedded coset words reproduce the reference orbit; it is
//! recovered by [`crate::coset72::infer_e7_labeling`] and cached here.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    E7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AlgebraId {
    family: Family,
    rank: usize,
}

impl AlgebraId {
    pub const E7: AlgebraId = AlgebraId {
        family: Family::E7,
        rank: 7,
    };
    pub const A7: AlgebraId = AlgebraId {
        family: Family::A,
        rank: 7,
    };

    pub fn a(rank: usize) -> Result<Self> {
        if (1..=7).contains(&rank) {
            Ok(AlgebraId {
                family: Family::A,
                rank,
            })
        } else {
            Err(Error::InvalidRank { family: "A", rank })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_e7(self) -> bool {
        self.family == Family::E7
    }
}

impl fmt::Display for AlgebraId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A{}", self.rank),
            Family::E7 => write!(f, "E7"),
        }
    }
}

impl FromStr for AlgebraId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.trim().to_ascii_lowercase();
        if lower == "e7" {
            return Ok(AlgebraId::E7);
        }
        match lower.strip_prefix('a').map(str::parse::<usize>) {
            Some(Ok(rank)) => AlgebraId::a(rank),
            _ => Err(Error::InvalidRank {
                family: "unknown",
                rank: 0,
            }),
        }
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinWeight {
    algebra: AlgebraId,
    labels: Vec<i64>,
}

impl DynkinWeight {
    pub fn new(algebra: AlgebraId, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != algebra.rank() {
            return Err(Error::LabelLength {
                algebra,
                expected: algebra.rank(),
                got: labels.len(),
            });
        }
        Ok(DynkinWeight { algebra, labels })
    }

    pub fn zero(algebra: AlgebraId) -> Self {
        DynkinWeight {
            algebra,
            labels: vec![0; algebra.rank()],
        }
    }

    /// The `i`-th fundamental weight, 1-based.
    pub fn fundamental(algebra: AlgebraId, i: usize) -> Result<Self> {
        if !(1..=algebra.rank()).contains(&i) {
            return Err(Error::IndexOutOfRange {
                index: i,
                rank: algebra.rank(),
            });
        }
        let mut w = Self::zero(algebra);
        w.labels[i - 1] = 1;
        Ok(w)
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn into_labels(self) -> Vec<i64> {
        self.labels
    }

    pub fn is_dominant(&self) -> bool {
        self.labels.iter().all(|&c| c >= 0)
    }

    pub fn is_strictly_dominant(&self) -> bool {
        self.labels.iter().all(|&c| c >= 1)
    }

    pub fn ensure_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.labels.clone()))
        }
    }

    pub fn ensure_strictly_dominant(&self) -> Result<()> {
        if self.is_strictly_dominant() {
            Ok(())
        } else {
            Err(Error::NotStrictlyDominant(self.labels.clone()))
        }
    }

    pub fn add(&self, other: &DynkinWeight) -> Result<DynkinWeight> {
        same_algebra(self, other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &DynkinWeight) -> Result<DynkinWeight> {
        same_algebra(self, other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &DynkinWeight, f: impl Fn(i64, i64) -> i64) -> DynkinWeight {
        DynkinWeight {
            algebra: self.algebra,
            labels: self
                .labels
                .iter()
                .zip(&other.labels)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub(crate) fn with_labels(algebra: AlgebraId, labels: Vec<i64>) -> Self {
        debug_assert_eq!(labels.len(), algebra.rank());
        DynkinWeight { algebra, labels }
    }

    pub(crate) fn labels_mut(&mut self) -> &mut [i64] {
        &mut self.labels
    }
}

impl fmt::Display for DynkinWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub(crate) fn same_algebra(a: &DynkinWeight, b: &DynkinWeight) -> Result<()> {
    if a.algebra == b.algebra {
        Ok(())
    } else {
        Err(Error::AlgebraMismatch(a.algebra, b.algebra))
    }
}

/// Symmetric Cartan matrix of a simply-laced algebra, with its exact inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
    inverse: Vec<Vec<Rational64>>,
}

impl CartanMatrix {
    /// Panics if `entries` is singular; callers only build Cartan matrices.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Self {
        let inverse = invert(&entries).expect("Cartan matrix must be invertible");
        CartanMatrix { entries, inverse }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// 0-based.
    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    /// The simple root `alpha_i` (0-based) in weight coordinates.
    pub fn root_row(&self, i: usize) -> &[i64] {
        &self.entries[i]
    }

    pub fn inverse(&self) -> &[Vec<Rational64>] {
        &self.inverse
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Diagonal 2, off-diagonal in {0, -1}.
    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let e = self.entries[i][j];
                if i == j {
                    e == 2
                } else {
                    e == 0 || e == -1
                }
            })
        })
    }

    /// 0-based neighbours of node `i` in the Dynkin diagram.
    pub fn neighbors(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.rank()).filter(move |&j| j != i && self.entries[i][j] != 0)
    }

    /// Simple-root coordinates `C^{-1} labels`.
    pub fn root_coordinates(&self, labels: &[i64]) -> Vec<Rational64> {
        self.inverse
            .iter()
            .map(|row| {
                row.iter()
                    .zip(labels)
                    .fold(Rational64::zero(), |acc, (r, &c)| acc + r * c)
            })
            .collect()
    }

    /// Invariant form on weights, normalized so roots have length^2 = 2.
    pub fn inner_product(&self, a: &[i64], b: &[i64]) -> Rational64 {
        self.root_coordinates(a)
            .iter()
            .zip(b)
            .fold(Rational64::zero(), |acc, (r, &c)| acc + r * c)
    }
}

fn invert(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational64>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&v| Rational64::from_integer(v))
                .chain((0..n).map(|j| {
                    if i == j {
                        Rational64::one()
                    } else {
                        Rational64::zero()
                    }
                }))
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let inv = a[k][k].recip();
        for v in a[k].iter_mut() {
            *v *= inv;
        }
        for i in 0..n {
            if i != k && !a[i][k].is_zero() {
                let f = a[i][k];
                for j in 0..2 * n {
                    let t = a[k][j];
                    a[i][j] -= f * t;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// Tridiagonal Cartan matrix of `A_n`.
pub fn a_series_entries(rank: usize) -> Vec<Vec<i64>> {
    (0..rank)
        .map(|i| {
            (0..rank)
                .map(|j| match i.abs_diff(j) {
                    0 => 2,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Standard E7 Cartan matrix in Bourbaki order (chain 1-3-4-5-6-7, node 2 on node 4).
pub fn e7_bourbaki_entries() -> Vec<Vec<i64>> {
    let edges = [(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)];
    let mut m = vec![vec![0i64; 7]; 7];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (a, b) in edges {
        m[a - 1][b - 1] = -1;
        m[b - 1][a - 1] = -1;
    }
    m
}

pub fn cartan_matrix(algebra: AlgebraId) -> &'static CartanMatrix {
    static A_SERIES: OnceLock<Vec<CartanMatrix>> = OnceLock::new();
    static E7: OnceLock<CartanMatrix> = OnceLock::new();
    match algebra.family() {
        Family::A => {
            let all = A_SERIES.get_or_init(|| {
                (1..=7)
                    .map(|n| CartanMatrix::from_entries(a_series_entries(n)))
                    .collect()
            });
            &all[algebra.rank() - 1]
        }
        Family::E7 => E7.get_or_init(|| {
            crate::coset72::infer_e7_labeling()
                .expect("embedded coset table is inconsistent with the reference orbit")
        }),
    }
}

pub fn weyl_vector(algebra: AlgebraId) -> DynkinWeight {
    DynkinWeight::with_labels(algebra, vec![1; algebra.rank()])
}

/// `w + rho` for dominant `w`.
pub fn strict_shift(w: &DynkinWeight) -> Result<DynkinWeight> {
    w.ensure_dominant()?;
    w.add(&weyl_vector(w.algebra()))
}

/// Exponents of `mu_1..mu_{n+1}` for an `A_n` weight, defined up to a common shift.
#[derive(Debug, Clone, Eq)]
pub struct OrthoWeight {
    exps: Vec<i64>,
}

impl OrthoWeight {
    pub fn new(exps: Vec<i64>) -> Self {
        OrthoWeight { exps }
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// Representative with minimal exponent zero.
    pub fn canonical(&self) -> Vec<i64> {
        let min = self.exps.iter().copied().min().unwrap_or(0);
        self.exps.iter().map(|e| e - min).collect()
    }

    pub fn is_nonincreasing(&self) -> bool {
        self.exps.windows(2).all(|p| p[0] >= p[1])
    }

    pub fn is_strictly_decreasing(&self) -> bool {
        self.exps.windows(2).all(|p| p[0] > p[1])
    }
}

impl PartialEq for OrthoWeight {
    fn eq(&self, other: &Self) -> bool {
        self.exps.len() == other.exps.len() && self.canonical() == other.canonical()
    }
}

/// `lambda_i = mu_1 + ... + mu_i`, so exponent `j` is the tail sum of labels from `j`.
pub fn to_ortho(w: &DynkinWeight) -> Result<OrthoWeight> {
    if w.algebra().family() != Family::A {
        return Err(Error::WrongAlgebra {
            expected: "A_n".into(),
            got: w.algebra(),
        });
    }
    let n = w.labels().len();
    let mut exps = vec![0i64; n + 1];
    for j in (0..n).rev() {
        exps[j] = exps[j + 1] + w.labels()[j];
    }
    Ok(OrthoWeight { exps })
}

pub fn a7_to_ortho(w: &DynkinWeight) -> Result<OrthoWeight> {
    if w.algebra() != AlgebraId::A7 {
        return Err(Error::WrongAlgebra {
            expected: "A7".into(),
            got: w.algebra(),
        });
    }
    to_ortho(w)
}

/// Rows: images of the E7 fundamental weights in A7 Dynkin labels.
pub const E7_TO_A7: [[i64; 7]; 7] = [
    [0, 1, 0, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 1, 0],
    [0, 0, 1, 0, 1, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 1],
];

pub fn e7_to_a7(w: &DynkinWeight) -> Result<DynkinWeight> {
    if !w.algebra().is_e7() {
        return Err(Error::WrongAlgebra {
            expected: "E7".into(),
            got: w.algebra(),
        });
    }
    Ok(DynkinWeight::with_labels(AlgebraId::A7, embed_labels(w.labels())))
}

pub(crate) fn embed_labels(labels: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; 7];
    for (c, row) in labels.iter().zip(E7_TO_A7.iter()) {
        if *c == 0 {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row) {
            *o += c * r;
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dominance {
    Below,
    Equal,
    Above,
    Incomparable,
}

/// `a` is below `b` when `b - a` is a nonnegative integer combination of simple roots.
pub fn dominance_compare(a: &DynkinWeight, b: &DynkinWeight) -> Result<Dominance> {
    same_algebra(a, b)?;
    if a == b {
        return Ok(Dominance::Equal);
    }
    let cartan = cartan_matrix(a.algebra());
    let diff = b.sub(a)?;
    let coords = cartan.root_coordinates(diff.labels());
    if !coords.iter().all(|c| c.is_integer()) {
        return Ok(Dominance::Incomparable);
    }
    if coords.iter().all(|c| !c.is_negative()) {
        Ok(Dominance::Below)
    } else if coords.iter().all(|c| !c.is_positive()) {
        Ok(Dominance::Above)
    } else {
        Ok(Dominance::Incomparable)
    }
}

/// Height of `b - a` in simple roots, if `a <= b` in the root order.
pub fn depth_below(a: &DynkinWeight, b: &DynkinWeight) -> Option<i64> {
    let cartan = cartan_matrix(a.algebra());
    let diff = b.sub(a).ok()?;
    let coords = cartan.root_coordinates(diff.labels());
    if coords.iter().all(|c| c.is_integer() && !c.is_negative()) {
        Some(coords.iter().map(|c| c.to_integer()).sum())
    } else {
        None
    }
}

impl Dominance {
    pub fn as_ordering(self) -> Option<Ordering> {
        match self {
            Dominance::Below => Some(Ordering::Less),
            Dominance::Equal => Some(Ordering::Equal),
            Dominance::Above => Some(Ordering::Greater),
            Dominance::Incomparable => None,
        }
    }
}
