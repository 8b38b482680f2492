//! Subdominant weights and tensor coupling coefficients.
//!
//! `ch(Λ) ch(Λ') = Σ_θ t_θ ch(θ)` holds identically, so evaluating both sides
//! at enough points gives an exact linear system in the unknown `t_θ`, one
//! per dominant `θ ≤ Λ + Λ'`.

use std::collections::{BTreeSet, HashSet, VecDeque};

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::alternant::{PointSampler, SpecPoint};
use crate::cartan::{depth_below, same_algebra, AlgebraId, DynkinWeight};
use crate::e7char::{dim, positive_roots, CharacterEvaluator};
use crate::error::{Error, Result};
use crate::field::Rational;
use crate::linalg::solve_exact;

/// Dominant weights strictly below `top` in the root order.
///
/// Any two comparable dominant weights are joined by a chain of dominant
/// weights whose consecutive differences are positive roots, so the search
/// never leaves the dominant chamber.
pub fn subdominants(top: &DynkinWeight) -> Result<Vec<DynkinWeight>> {
    top.ensure_dominant()?;
    let roots = positive_roots(top.algebra());
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(top.labels().to_vec());
    let mut queue = VecDeque::from([top.labels().to_vec()]);
    let mut found = Vec::new();
    while let Some(cur) = queue.pop_front() {
        for r in roots.roots() {
            let next: Vec<i64> = cur.iter().zip(r.labels()).map(|(a, b)| a - b).collect();
            if next.iter().all(|&c| c >= 0) && seen.insert(next.clone()) {
                found.push(DynkinWeight::with_labels(top.algebra(), next.clone()));
                queue.push_back(next);
            }
        }
    }
    sort_below(top, &mut found);
    Ok(found)
}

/// By depth below `top`, then labels.
fn sort_below(top: &DynkinWeight, ws: &mut [DynkinWeight]) {
    ws.sort_by_cached_key(|w| (depth_below(w, top).unwrap_or(i64::MAX), w.labels().to_vec()));
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Entry {
    pub weight: DynkinWeight,
    pub mult: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub backend: String,
    pub seed: u64,
    /// Points used in the solve.
    pub points: usize,
    pub held_out: usize,
    pub candidates: usize,
    pub attempts: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub lhs: (DynkinWeight, DynkinWeight),
    /// Constituents with positive multiplicity, highest first.
    pub entries: Vec<Entry>,
    /// Candidates that turned out to have multiplicity zero.
    pub zero_candidates: Vec<DynkinWeight>,
    pub dim_lhs: u128,
    pub dim_rhs: u128,
    pub provenance: Provenance,
}

impl Decomposition {
    pub fn algebra(&self) -> AlgebraId {
        self.lhs.0.algebra()
    }

    pub fn top(&self) -> DynkinWeight {
        self.lhs.0.add(&self.lhs.1).expect("same algebra")
    }

    pub fn multiplicity(&self, w: &DynkinWeight) -> u64 {
        self.entries
            .iter()
            .find(|e| &e.weight == w)
            .map_or(0, |e| e.mult)
    }

    /// Multiset of constituents, independent of order and provenance.
    pub fn multiset(&self) -> BTreeSet<(Vec<i64>, u64)> {
        self.entries
            .iter()
            .map(|e| (e.weight.labels().to_vec(), e.mult))
            .collect()
    }

    pub fn dims_agree(&self) -> bool {
        self.dim_lhs == self.dim_rhs
    }

    /// Builds a decomposition from multiplicities, computing dimensions.
    pub fn from_multiplicities(
        lhs: (DynkinWeight, DynkinWeight),
        mut entries: Vec<Entry>,
        provenance: Provenance,
    ) -> Result<Self> {
        same_algebra(&lhs.0, &lhs.1)?;
        let top = lhs.0.add(&lhs.1)?;
        entries.retain(|e| e.mult > 0);
        entries.sort_by_cached_key(|e| {
            (
                depth_below(&e.weight, &top).unwrap_or(i64::MAX),
                e.weight.labels().to_vec(),
            )
        });
        let dim_lhs = dim(&lhs.0)? * dim(&lhs.1)?;
        let dim_rhs = entries
            .iter()
            .map(|e| Ok(dim(&e.weight)? * e.mult as u128))
            .sum::<Result<u128>>()?;
        Ok(Decomposition {
            lhs,
            entries,
            zero_candidates: Vec::new(),
            dim_lhs,
            dim_rhs,
            provenance,
        })
    }
}

const MAX_ATTEMPTS: usize = 6;
pub const HELD_OUT_POINTS: usize = 3;

/// One row of the system: candidate characters and the product of the two factors.
struct Row {
    chars: Vec<Rational>,
    product: Rational,
}

fn evaluate_row(
    algebra: AlgebraId,
    point: &SpecPoint<Rational>,
    lhs: &(DynkinWeight, DynkinWeight),
    candidates: &[DynkinWeight],
) -> Result<Option<Row>> {
    let eval = match CharacterEvaluator::new(algebra, point) {
        Ok(e) => e,
        Err(Error::SingularPoint) => return Ok(None),
        Err(e) => return Err(e),
    };
    let chars = candidates
        .par_iter()
        .map(|c| eval.character(c))
        .collect::<Result<Vec<_>>>()?;
    let product = eval.character(&lhs.0)? * eval.character(&lhs.1)?;
    Ok(Some(Row { chars, product }))
}

/// Draws points in order until `count` nonsingular rows are collected.
fn collect_rows(
    algebra: AlgebraId,
    sampler: &mut PointSampler,
    lhs: &(DynkinWeight, DynkinWeight),
    candidates: &[DynkinWeight],
    count: usize,
) -> Result<Vec<Row>> {
    let mut rows = Vec::with_capacity(count);
    while rows.len() < count {
        let batch: Vec<SpecPoint<Rational>> =
            (0..count - rows.len()).map(|_| sampler.next_point()).collect();
        let evaluated = batch
            .par_iter()
            .map(|p| evaluate_row(algebra, p, lhs, candidates))
            .collect::<Result<Vec<_>>>()?;
        rows.extend(evaluated.into_iter().flatten());
    }
    Ok(rows)
}

fn residual(row: &Row, coeffs: &[Rational]) -> Rational {
    let rhs: Rational = row.chars.iter().zip(coeffs).map(|(c, t)| c * t).sum();
    &row.product - rhs
}

/// Coupling coefficients of `R(Λ) ⊗ R(Λ')`.
pub fn tensor_decompose(l: &DynkinWeight, l2: &DynkinWeight, seed: u64) -> Result<Decomposition> {
    same_algebra(l, l2)?;
    l.ensure_dominant()?;
    l2.ensure_dominant()?;
    let algebra = l.algebra();
    let top = l.add(l2)?;
    let mut candidates = vec![top.clone()];
    candidates.extend(subdominants(&top)?);
    let m = candidates.len();
    let lhs = (l.clone(), l2.clone());

    let mut sampler = PointSampler::for_algebra(algebra, seed);
    let extra = m.div_ceil(4);
    let mut rows = collect_rows(algebra, &mut sampler, &lhs, &candidates, m + extra)?;
    let mut attempts = 1;
    let coeffs = loop {
        let a: Vec<Vec<Rational>> = rows.iter().map(|r| r.chars.clone()).collect();
        let b: Vec<Rational> = rows.iter().map(|r| r.product.clone()).collect();
        match solve_exact(&a, &b) {
            Ok(x) => break x,
            Err(Error::RankDeficient { .. }) if attempts < MAX_ATTEMPTS => {
                attempts += 1;
                rows.extend(collect_rows(algebra, &mut sampler, &lhs, &candidates, extra)?);
            }
            Err(e) => return Err(e),
        }
    };

    let held = collect_rows(algebra, &mut sampler, &lhs, &candidates, HELD_OUT_POINTS)?;
    if let Some(i) = held.iter().position(|r| !residual(r, &coeffs).is_zero()) {
        return Err(Error::HeldOutMismatch(i));
    }

    let mut entries = Vec::new();
    let mut zeros = Vec::new();
    for (w, t) in candidates.iter().zip(&coeffs) {
        if !t.is_integer() {
            return Err(Error::NonIntegerSolution {
                weight: w.labels().to_vec(),
                value: t.to_string(),
            });
        }
        if t.is_negative() {
            return Err(Error::NegativeCoefficient {
                weight: w.labels().to_vec(),
                value: t.to_string(),
            });
        }
        match t.to_integer().to_u64() {
            Some(0) => zeros.push(w.clone()),
            Some(mult) => entries.push(Entry {
                weight: w.clone(),
                mult,
            }),
            None => return Err(Error::Overflow("multiplicity")),
        }
    }
    if coeffs[0] != Rational::from_integer(1.into()) {
        return Err(Error::TopMultiplicity(coeffs[0].to_string()));
    }

    let provenance = Provenance {
        backend: "rational".into(),
        seed,
        points: rows.len(),
        held_out: held.len(),
        candidates: m,
        attempts,
    };
    let mut d = Decomposition::from_multiplicities(lhs, entries, provenance)?;
    d.zero_candidates = zeros;
    if !d.dims_agree() {
        return Err(Error::DimensionMismatch {
            lhs: d.dim_lhs,
            rhs: d.dim_rhs,
        });
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub trials: usize,
    pub seed: u64,
    /// Largest `|ch(Λ) ch(Λ') - Σ t ch(θ)|` over the trial points, as a reduced fraction.
    pub max_residual: String,
    pub dim_lhs: u128,
    pub dim_rhs: u128,
}

impl VerificationReport {
    pub fn residual_zero(&self) -> bool {
        self.max_residual == "0"
    }

    pub fn passed(&self) -> bool {
        self.residual_zero() && self.dim_lhs == self.dim_rhs
    }
}

/// Keeps verification points disjoint from the stream a solve with the same seed uses.
const VERIFY_STREAM: u64 = 0x9e37_79b9_7f4a_7c15;

pub fn verify_decomposition(d: &Decomposition, trials: usize, seed: u64) -> Result<VerificationReport> {
    let algebra = d.algebra();
    let weights: Vec<DynkinWeight> = d.entries.iter().map(|e| e.weight.clone()).collect();
    let coeffs: Vec<Rational> = d
        .entries
        .iter()
        .map(|e| Rational::from_integer(e.mult.into()))
        .collect();
    let mut sampler = PointSampler::for_algebra(algebra, seed ^ VERIFY_STREAM);
    let rows = collect_rows(algebra, &mut sampler, &d.lhs, &weights, trials)?;
    let max = rows
        .iter()
        .map(|r| residual(r, &coeffs).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    let dim_lhs = dim(&d.lhs.0)? * dim(&d.lhs.1)?;
    let dim_rhs = d
        .entries
        .iter()
        .map(|e| Ok(dim(&e.weight)? * e.mult as u128))
        .sum::<Result<u128>>()?;
    Ok(VerificationReport {
        trials,
        seed,
        max_residual: max.to_string(),
        dim_lhs,
        dim_rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::cartan_matrix;

    fn w(alg: AlgebraId, l: &[i64]) -> DynkinWeight {
        DynkinWeight::new(alg, l.to_vec()).unwrap()
    }

    /// Box search in simple-root coordinates, independent of the chain argument.
    fn subdominants_by_box(top: &DynkinWeight) -> BTreeSet<Vec<i64>> {
        let c = cartan_matrix(top.algebra());
        let n = c.rank();
        let bound: Vec<i64> = c
            .root_coordinates(top.labels())
            .iter()
            .map(|r| r.floor().to_integer())
            .collect();
        let mut out = BTreeSet::new();
        let mut k = vec![0i64; n];
        loop {
            if k.iter().any(|&v| v != 0) {
                let labels: Vec<i64> = (0..n)
                    .map(|j| top.labels()[j] - (0..n).map(|i| k[i] * c.entry(i, j)).sum::<i64>())
                    .collect();
                if labels.iter().all(|&v| v >= 0) {
                    out.insert(labels);
                }
            }
            let mut i = 0;
            while i < n {
                k[i] += 1;
                if k[i] <= bound[i] {
                    break;
                }
                k[i] = 0;
                i += 1;
            }
            if i == n {
                return out;
            }
        }
    }

    #[test]
    fn subdominant_examples() {
        let a2 = AlgebraId::a(2).unwrap();
        let s = subdominants(&w(a2, &[1, 1])).unwrap();
        assert_eq!(s, vec![w(a2, &[0, 0])]);
        let top = w(a2, &[3, 0]);
        assert!(!subdominants(&top).unwrap().contains(&top));
        assert!(subdominants(&w(a2, &[-1, 0])).is_err());
    }

    #[test]
    fn subdominants_match_box_search() {
        let a3 = AlgebraId::a(3).unwrap();
        for l in [[2, 1, 3], [0, 4, 0], [1, 0, 1], [3, 3, 0]] {
            let top = w(a3, &l);
            let chain: BTreeSet<Vec<i64>> = subdominants(&top)
                .unwrap()
                .into_iter()
                .map(DynkinWeight::into_labels)
                .collect();
            assert_eq!(chain, subdominants_by_box(&top), "{l:?}");
        }
        let top = w(AlgebraId::E7, &[0, 0, 1, 1, 0, 0, 0]);
        let chain: BTreeSet<Vec<i64>> = subdominants(&top)
            .unwrap()
            .into_iter()
            .map(DynkinWeight::into_labels)
            .collect();
        assert_eq!(chain, subdominants_by_box(&top));
    }

    #[test]
    fn small_decompositions() {
        let a2 = AlgebraId::a(2).unwrap();
        let d = tensor_decompose(&w(a2, &[1, 0]), &w(a2, &[0, 1]), 0).unwrap();
        assert_eq!(
            d.multiset(),
            BTreeSet::from([(vec![1, 1], 1), (vec![0, 0], 1)])
        );
        assert_eq!((d.dim_lhs, d.dim_rhs), (9, 9));
        let d = tensor_decompose(&w(a2, &[2, 1]), &DynkinWeight::zero(a2), 3).unwrap();
        assert_eq!(d.multiset(), BTreeSet::from([(vec![2, 1], 1)]));
        let d = tensor_decompose(&w(a2, &[1, 1]), &w(a2, &[1, 1]), 5).unwrap();
        assert_eq!(
            d.multiset(),
            BTreeSet::from([
                (vec![2, 2], 1),
                (vec![3, 0], 1),
                (vec![0, 3], 1),
                (vec![1, 1], 2),
                (vec![0, 0], 1)
            ])
        );
        assert_eq!(d.entries[0].weight, w(a2, &[2, 2]));
    }

    #[test]
    fn verification_detects_corruption() {
        let a3 = AlgebraId::a(3).unwrap();
        let d = tensor_decompose(&w(a3, &[1, 0, 1]), &w(a3, &[0, 1, 0]), 1).unwrap();
        let r = verify_decomposition(&d, 5, 2).unwrap();
        assert!(r.passed(), "{r:?}");
        let mut bad = d.clone();
        bad.entries[0].mult += 1;
        let r = verify_decomposition(&bad, 5, 2).unwrap();
        assert!(!r.residual_zero() && !r.passed());
    }

    #[test]
    fn mismatched_algebras() {
        let a2 = AlgebraId::a(2).unwrap();
        assert!(matches!(
            tensor_decompose(&DynkinWeight::zero(a2), &DynkinWeight::zero(AlgebraId::A7), 0),
            Err(Error::AlgebraMismatch(..))
        ));
    }
}
