//! E7 alternants as signed sums of 72 A7 alternants, characters, positive
//! roots and the Weyl dimension formula.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::alternant::{a7_alternant_unchecked, schur_eval, SpecPoint};
use crate::cartan::{cartan_matrix, weyl_vector, AlgebraId, DynkinWeight, Family};
use crate::coset72::orbit_decompose;
use crate::error::{Error, Result};
use crate::field::Field;

fn require_e7(w: &DynkinWeight) -> Result<()> {
    if w.algebra().is_e7() {
        Ok(())
    } else {
        Err(Error::WrongAlgebra {
            expected: "E7".into(),
            got: w.algebra(),
        })
    }
}

/// `sum_s sign_s A_{A7}(nu_s)` over the 72 coset images of `w`.
pub fn e7_alternant_eval<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    require_e7(w)?;
    p.ensure_len(w.algebra())?;
    let terms = orbit_decompose(w)?;
    let values: Vec<F> = terms
        .par_iter()
        .map(|t| a7_alternant_unchecked(t.weight.labels(), p))
        .collect();
    Ok(values
        .into_iter()
        .zip(&terms)
        .fold(F::zero(), |acc, (v, t)| if t.sign > 0 { acc + v } else { acc - v }))
}

/// `A_{E7}(w) / A_{A7}(rho)`, i.e. the signed sum of the 72 A7 characters
/// `ch(nu_s - rho)`. This is the normalization in which the E7 alternant is
/// a Laurent polynomial of lowest degree.
pub fn e7_alternant_normalized<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    let a7 = crate::alternant::alternant_eval(&weyl_vector(AlgebraId::A7), p)?;
    if a7.is_zero() {
        return Err(Error::SingularPoint);
    }
    Ok(e7_alternant_eval(w, p)? / a7)
}

pub fn e7_char_eval<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    require_e7(w)?;
    w.ensure_dominant()?;
    let rho = weyl_vector(AlgebraId::E7);
    let den = e7_alternant_eval(&rho, p)?;
    if den.is_zero() {
        return Err(Error::SingularPoint);
    }
    Ok(e7_alternant_eval(&w.add(&rho)?, p)? / den)
}

/// Alternant of any supported algebra at a strictly dominant weight.
pub fn alternant<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    match w.algebra().family() {
        Family::A => crate::alternant::alternant_eval(w, p),
        Family::E7 => e7_alternant_eval(w, p),
    }
}

/// Character of the irreducible representation with highest weight `w`.
pub fn character<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    match w.algebra().family() {
        Family::A => schur_eval(w, p),
        Family::E7 => e7_char_eval(w, p),
    }
}

/// Characters at one point, sharing the `A(rho)` denominator.
pub struct CharacterEvaluator<'a, F> {
    algebra: AlgebraId,
    point: &'a SpecPoint<F>,
    denominator: F,
}

impl<'a, F: Field> CharacterEvaluator<'a, F> {
    pub fn new(algebra: AlgebraId, point: &'a SpecPoint<F>) -> Result<Self> {
        let denominator = alternant(&weyl_vector(algebra), point)?;
        if denominator.is_zero() {
            return Err(Error::SingularPoint);
        }
        Ok(CharacterEvaluator {
            algebra,
            point,
            denominator,
        })
    }

    pub fn denominator(&self) -> &F {
        &self.denominator
    }

    pub fn character(&self, w: &DynkinWeight) -> Result<F> {
        if w.algebra() != self.algebra {
            return Err(Error::AlgebraMismatch(self.algebra, w.algebra()));
        }
        w.ensure_dominant()?;
        let shifted = w.add(&weyl_vector(self.algebra))?;
        Ok(alternant(&shifted, self.point)? / self.denominator.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRootSet {
    algebra: AlgebraId,
    /// Simple-root coordinates.
    coords: Vec<Vec<i64>>,
    roots: Vec<DynkinWeight>,
}

impl PositiveRootSet {
    pub fn algebra(&self) -> AlgebraId {
        self.algebra
    }

    /// Weight-coordinate representations.
    pub fn roots(&self) -> &[DynkinWeight] {
        &self.roots
    }

    pub fn simple_root_coords(&self) -> &[Vec<i64>] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn highest(&self) -> &DynkinWeight {
        self.roots.last().expect("nonempty")
    }
}

/// Closure of the simple roots: `beta + alpha_i` is a root exactly when `(beta, alpha_i) = -1`.
pub fn positive_roots(algebra: AlgebraId) -> PositiveRootSet {
    let cartan = cartan_matrix(algebra);
    let n = algebra.rank();
    let mut coords: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut level_start = 0;
    while level_start < coords.len() {
        let level_end = coords.len();
        for k in level_start..level_end {
            for i in 0..n {
                let pairing: i64 = (0..n).map(|j| coords[k][j] * cartan.entry(j, i)).sum();
                if pairing == -1 {
                    let mut next = coords[k].clone();
                    next[i] += 1;
                    if !coords[level_end..].contains(&next) {
                        coords.push(next);
                    }
                }
            }
        }
        level_start = level_end;
    }
    let roots = coords
        .iter()
        .map(|c| {
            let labels = (0..n)
                .map(|j| (0..n).map(|i| c[i] * cartan.entry(i, j)).sum())
                .collect();
            DynkinWeight::with_labels(algebra, labels)
        })
        .collect();
    PositiveRootSet {
        algebra,
        coords,
        roots,
    }
}

/// Weyl dimension formula.
pub fn dim(w: &DynkinWeight) -> Result<u128> {
    w.ensure_dominant()?;
    let roots = positive_roots(w.algebra());
    let mut acc = BigRational::one();
    for c in roots.simple_root_coords() {
        let height: i64 = c.iter().sum();
        let pairing: i64 = c.iter().zip(w.labels()).map(|(ci, li)| ci * (li + 1)).sum();
        acc *= BigRational::new(BigInt::from(pairing), BigInt::from(height));
    }
    debug_assert!(acc.is_integer() && !acc.is_zero());
    acc.to_integer().to_u128().ok_or(Error::Overflow("dimension"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alternant::{paper_point_1param, random_point};
    use crate::field::Rational;
    use crate::poly::RatFunc;

    #[test]
    fn root_counts() {
        let a2 = positive_roots(AlgebraId::a(2).unwrap());
        assert_eq!(a2.len(), 3);
        assert_eq!(
            a2.simple_root_coords(),
            &[vec![1, 0], vec![0, 1], vec![1, 1]]
        );
        assert_eq!(positive_roots(AlgebraId::A7).len(), 28);
        let e7 = positive_roots(AlgebraId::E7);
        assert_eq!(e7.len(), 63);
        assert_eq!(2 * e7.len() + 7, 133);
        let c = cartan_matrix(AlgebraId::E7);
        for r in e7.roots() {
            assert_eq!(c.inner_product(r.labels(), r.labels()), 2.into());
        }
        // the highest root is the adjoint highest weight
        assert_eq!(dim(e7.highest()).unwrap(), 133);
    }

    #[test]
    fn dimensions() {
        assert_eq!(dim(&DynkinWeight::zero(AlgebraId::E7)).unwrap(), 1);
        assert_eq!(dim(&DynkinWeight::fundamental(AlgebraId::A7, 1).unwrap()).unwrap(), 8);
        assert_eq!(dim(&weyl_vector(AlgebraId::A7)).unwrap(), 1 << 28);
        let mut e7_fund: Vec<u128> = (1..=7)
            .map(|i| dim(&DynkinWeight::fundamental(AlgebraId::E7, i).unwrap()).unwrap())
            .collect();
        e7_fund.sort_unstable();
        assert_eq!(e7_fund, vec![56, 133, 912, 1539, 8645, 27664, 365750]);
        assert_eq!(dim(&weyl_vector(AlgebraId::E7)).unwrap(), 1 << 63);
        assert!(dim(&DynkinWeight::new(AlgebraId::E7, vec![-1, 0, 0, 0, 0, 0, 0]).unwrap()).is_err());
    }

    #[test]
    fn e7_alternant_nonzero_and_antisymmetric() {
        let rho = weyl_vector(AlgebraId::E7);
        for seed in 0..10 {
            assert!(!e7_alternant_eval(&rho, &random_point(seed)).unwrap().is_zero());
        }
        let p = random_point(42);
        let a = e7_alternant_eval(&rho, &p).unwrap();
        let b = e7_alternant_eval(&rho, &p.swapped(0, 1)).unwrap();
        assert_eq!(a, -b);
    }

    #[test]
    fn trivial_character() {
        let p = random_point(9);
        let one: Rational = e7_char_eval(&DynkinWeight::zero(AlgebraId::E7), &p).unwrap();
        assert!(one.is_one());
        assert!(e7_char_eval(&DynkinWeight::zero(AlgebraId::A7), &p).is_err());
    }

    #[test]
    fn fundamental_character_one_param() {
        // (1/(144 x)) (3*7*17 + 5*25841 x + 2^4*3^3*5*7*17 x^2)
        let l1 = DynkinWeight::fundamental(AlgebraId::E7, 1).unwrap();
        let ch: RatFunc = e7_char_eval(&l1, &paper_point_1param()).unwrap();
        let q = |n: i64| Rational::from_integer(n.into());
        let expect = RatFunc::laurent_monomial(q(357) / q(144), -1)
            + RatFunc::constant(q(5 * 25841) / q(144))
            + RatFunc::laurent_monomial(q(16 * 27 * 5 * 7 * 17) / q(144), 1);
        assert_eq!(ch, expect);
    }
}
