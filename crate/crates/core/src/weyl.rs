//! Weyl group actions on Dynkin-label weights.

use std::collections::{BTreeSet, HashSet};

use crate::cartan::{cartan_matrix, AlgebraId, CartanMatrix, DynkinWeight, Family};
use crate::error::{Error, Result};

/// A product of simple reflections, applied right to left.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylWord {
    algebra: AlgebraId,
    indices: Vec<usize>,
}

impl WeylWord {
    /// `indices` are 1-based.
    pub fn new(algebra: AlgebraId, indices: Vec<usize>) -> Result<Self> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > algebra.rank()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                rank: algebra.rank(),
            });
        }
        Ok(WeylWord { algebra, indices })
    }

    pub fn identity(algebra: AlgebraId) -> Self {
        WeylWord {
            algebra,
            indices: Vec::new(),
        }
    }

    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedWeight {
    pub weight: DynkinWeight,
    pub sign: i64,
}

/// In-place `sigma_i` with 0-based `i`.
pub(crate) fn reflect_labels(cartan: &CartanMatrix, i: usize, labels: &mut [i64]) {
    let k = labels[i];
    if k == 0 {
        return;
    }
    for (l, a) in labels.iter_mut().zip(cartan.root_row(i)) {
        *l -= k * a;
    }
}

pub(crate) fn apply_indices(cartan: &CartanMatrix, indices: &[usize], labels: &mut [i64]) {
    for &i in indices.iter().rev() {
        reflect_labels(cartan, i - 1, labels);
    }
}

/// `sigma_i(w) = w - <w, alpha_i> alpha_i`, `i` 1-based.
pub fn simple_reflect(i: usize, w: &DynkinWeight) -> Result<DynkinWeight> {
    let rank = w.algebra().rank();
    if i == 0 || i > rank {
        return Err(Error::IndexOutOfRange { index: i, rank });
    }
    let mut out = w.clone();
    reflect_labels(cartan_matrix(w.algebra()), i - 1, out.labels_mut());
    Ok(out)
}

pub fn apply_word(word: &WeylWord, w: &DynkinWeight) -> Result<DynkinWeight> {
    if word.algebra() != w.algebra() {
        return Err(Error::AlgebraMismatch(word.algebra(), w.algebra()));
    }
    let mut out = w.clone();
    apply_indices(cartan_matrix(w.algebra()), word.indices(), out.labels_mut());
    Ok(out)
}

pub fn word_sign(word: &WeylWord) -> i64 {
    if word.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dominantized {
    pub dominant: DynkinWeight,
    pub sign: i64,
    /// False when the orbit meets a wall, in which case its alternant vanishes.
    pub regular: bool,
}

pub fn dominantize(w: &DynkinWeight) -> Dominantized {
    let cartan = cartan_matrix(w.algebra());
    let mut out = w.clone();
    let mut sign = 1;
    while let Some(i) = out.labels().iter().position(|&c| c < 0) {
        reflect_labels(cartan, i, out.labels_mut());
        sign = -sign;
    }
    let regular = out.is_strictly_dominant();
    Dominantized {
        dominant: out,
        sign,
        regular,
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Order of the Weyl group of a connected simply-laced diagram on `nodes`.
fn component_order(cartan: &CartanMatrix, nodes: &[usize]) -> u64 {
    let k = nodes.len() as u64;
    let inside = |j: &usize| nodes.contains(j);
    let degree = |i: usize| cartan.neighbors(i).filter(inside).count();
    let Some(&branch) = nodes.iter().find(|&&i| degree(i) >= 3) else {
        return factorial(k + 1);
    };
    let mut arms: Vec<usize> = cartan
        .neighbors(branch)
        .filter(inside)
        .map(|start| {
            let (mut prev, mut cur, mut len) = (branch, start, 1);
            while let Some(next) = cartan
                .neighbors(cur)
                .filter(inside)
                .find(|&j| j != prev)
            {
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => (1u64 << (k - 1)) * factorial(k),
        [1, 2, 2] => 51_840,
        [1, 2, 3] => 2_903_040,
        other => panic!("unexpected Dynkin arms {other:?}"),
    }
}

/// Connected components of the subdiagram on `nodes` (0-based).
fn components(cartan: &CartanMatrix, nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for &start in nodes {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in cartan.neighbors(i) {
                if nodes.contains(&j) && seen.insert(j) {
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

pub(crate) fn parabolic_order(cartan: &CartanMatrix, nodes: &[usize]) -> u64 {
    components(cartan, nodes)
        .iter()
        .map(|c| component_order(cartan, c))
        .product()
}

pub fn weyl_group_order(algebra: AlgebraId) -> u64 {
    match algebra.family() {
        Family::A => factorial(algebra.rank() as u64 + 1),
        Family::E7 => 2_903_040,
    }
}

pub fn stabilizer_order(w: &DynkinWeight) -> Result<u64> {
    w.ensure_dominant()?;
    let zeros: Vec<usize> = (0..w.labels().len())
        .filter(|&i| w.labels()[i] == 0)
        .collect();
    Ok(parabolic_order(cartan_matrix(w.algebra()), &zeros))
}

pub fn orbit_size(w: &DynkinWeight) -> Result<u64> {
    Ok(weyl_group_order(w.algebra()) / stabilizer_order(w)?)
}

/// All orbit elements, sorted.
pub fn enumerate_orbit(w: &DynkinWeight, cap: u64) -> Result<Vec<DynkinWeight>> {
    let size = orbit_size(w)?;
    if size > cap {
        return Err(Error::OrbitTooLarge { size, cap });
    }
    let cartan = cartan_matrix(w.algebra());
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    seen.insert(w.labels().to_vec());
    let mut frontier = vec![w.labels().to_vec()];
    while let Some(cur) = frontier.pop() {
        for i in 0..cur.len() {
            if cur[i] == 0 {
                continue;
            }
            let mut next = cur.clone();
            reflect_labels(cartan, i, &mut next);
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let sorted: BTreeSet<Vec<i64>> = seen.into_iter().collect();
    Ok(sorted
        .into_iter()
        .map(|l| DynkinWeight::with_labels(w.algebra(), l))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cartan::weyl_vector;

    fn a2() -> AlgebraId {
        AlgebraId::a(2).unwrap()
    }

    fn w(alg: AlgebraId, l: &[i64]) -> DynkinWeight {
        DynkinWeight::new(alg, l.to_vec()).unwrap()
    }

    #[test]
    fn reflections() {
        let rho = weyl_vector(a2());
        assert_eq!(simple_reflect(1, &rho).unwrap().labels(), &[-1, 2]);
        let fixed = w(a2(), &[0, 3]);
        assert_eq!(simple_reflect(1, &fixed).unwrap(), fixed);
        assert!(simple_reflect(3, &rho).is_err());
        assert!(simple_reflect(0, &rho).is_err());
        let top = w(AlgebraId::E7, &[1, 1, 2, 2, 1, 1, 1]);
        let r = simple_reflect(3, &top).unwrap();
        let row = cartan_matrix(AlgebraId::E7).root_row(2);
        for j in 0..7 {
            assert_eq!(r.labels()[j], top.labels()[j] - 2 * row[j]);
        }
    }

    #[test]
    fn words() {
        let top = w(AlgebraId::E7, &[1, 1, 2, 2, 1, 1, 1]);
        let id = WeylWord::identity(AlgebraId::E7);
        assert_eq!(apply_word(&id, &top).unwrap(), top);
        let ii = WeylWord::new(AlgebraId::E7, vec![5, 5]).unwrap();
        assert_eq!(apply_word(&ii, &top).unwrap(), top);
        let s2 = WeylWord::new(AlgebraId::E7, vec![3, 2]).unwrap();
        let img = crate::cartan::e7_to_a7(&apply_word(&s2, &top).unwrap()).unwrap();
        assert_eq!(img.labels(), &[2, 2, 8, 1, 1, 5, 1]);
        assert!(apply_word(&s2, &weyl_vector(AlgebraId::A7)).is_err());
        assert!(WeylWord::new(AlgebraId::E7, vec![8]).is_err());
    }

    #[test]
    fn signs() {
        assert_eq!(word_sign(&WeylWord::identity(AlgebraId::E7)), 1);
        assert_eq!(word_sign(&WeylWord::new(AlgebraId::E7, vec![3]).unwrap()), -1);
        let s36 = WeylWord::new(AlgebraId::E7, vec![3, 2, 1, 4, 3, 2, 5, 4, 3, 6, 5, 4]).unwrap();
        assert_eq!(word_sign(&s36), 1);
    }

    #[test]
    fn dominantize_examples() {
        let rho = weyl_vector(a2());
        let d = dominantize(&rho);
        assert_eq!((d.dominant.clone(), d.sign, d.regular), (rho.clone(), 1, true));
        let d = dominantize(&w(a2(), &[-1, 2]));
        assert_eq!((d.dominant, d.sign, d.regular), (rho, -1, true));
        let d = dominantize(&w(a2(), &[-1, 1]));
        assert!(!d.regular);
        assert_eq!(d.dominant.labels(), &[1, 0]);
    }

    #[test]
    fn orbit_sizes() {
        let e = w(AlgebraId::E7, &[1, 2, 3, 4, 5, 6, 7]);
        assert_eq!(orbit_size(&e).unwrap(), 2_903_040);
        assert_eq!(orbit_size(&weyl_vector(AlgebraId::A7)).unwrap(), 40_320);
        assert_eq!(orbit_size(&DynkinWeight::zero(AlgebraId::E7)).unwrap(), 1);
        assert_eq!(orbit_size(&DynkinWeight::zero(AlgebraId::A7)).unwrap(), 1);
        assert!(orbit_size(&w(a2(), &[-1, 0])).is_err());
        // 56 and 133 are the two smallest E7 orbits through fundamental weights
        let sizes: Vec<u64> = (1..=7)
            .map(|i| orbit_size(&DynkinWeight::fundamental(AlgebraId::E7, i).unwrap()).unwrap())
            .collect();
        assert!(sizes.contains(&56) && sizes.contains(&126));
    }

    #[test]
    fn orbit_enumeration() {
        let orbit = enumerate_orbit(&w(a2(), &[1, 0]), 10).unwrap();
        let labels: Vec<&[i64]> = orbit.iter().map(|o| o.labels()).collect();
        assert_eq!(labels, vec![&[-1, 1][..], &[0, -1], &[1, 0]]);
        assert_eq!(enumerate_orbit(&DynkinWeight::zero(a2()), 1).unwrap().len(), 1);
        assert_eq!(
            enumerate_orbit(&weyl_vector(AlgebraId::A7), 50_000).unwrap().len(),
            40_320
        );
        assert!(matches!(
            enumerate_orbit(&weyl_vector(AlgebraId::E7), 1_000_000),
            Err(Error::OrbitTooLarge { size: 2_903_040, .. })
        ));
        for i in 1..=7 {
            let f = DynkinWeight::fundamental(AlgebraId::E7, i).unwrap();
            let size = orbit_size(&f).unwrap();
            if size <= 20_000 {
                assert_eq!(enumerate_orbit(&f, 20_000).unwrap().len() as u64, size);
            }
        }
    }
}
