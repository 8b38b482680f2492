//! Specialization points and `A_n` alternants as generalized Vandermonde
//! determinants.

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cartan::{a7_to_ortho, to_ortho, weyl_vector, AlgebraId, DynkinWeight, Family};
use crate::error::{Error, Result};
use crate::field::{Field, Rational};
use crate::poly::RatFunc;

/// Values of the formal exponentials `u_I = e^{mu_I}`, with product one and
/// pairwise distinct entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SpecPoint<F> {
    u: Vec<F>,
}

impl<F: Field> SpecPoint<F> {
    pub fn new(u: Vec<F>) -> Result<Self> {
        if u.len() < 2 {
            return Err(Error::DegeneratePoint("fewer than two coordinates".into()));
        }
        if let Some(i) = u.iter().position(Zero::is_zero) {
            return Err(Error::DegeneratePoint(format!("u{} is zero", i + 1)));
        }
        for i in 0..u.len() {
            for j in i + 1..u.len() {
                if u[i] == u[j] {
                    return Err(Error::DegeneratePoint(format!(
                        "u{} coincides with u{}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let product = u.iter().cloned().fold(F::one(), |acc, v| acc * v);
        if !product.is_one() {
            return Err(Error::DegeneratePoint("product of coordinates is not 1".into()));
        }
        Ok(SpecPoint { u })
    }

    pub fn coords(&self) -> &[F] {
        &self.u
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    /// The point with `u_i` and `u_j` exchanged (0-based).
    pub fn swapped(&self, i: usize, j: usize) -> Self {
        let mut u = self.u.clone();
        u.swap(i, j);
        SpecPoint { u }
    }

    /// Number of coordinates an algebra's characters are evaluated on.
    pub fn required_len(algebra: AlgebraId) -> usize {
        match algebra.family() {
            Family::A => algebra.rank() + 1,
            Family::E7 => 8,
        }
    }

    pub(crate) fn ensure_len(&self, algebra: AlgebraId) -> Result<()> {
        let expected = Self::required_len(algebra);
        if self.u.len() == expected {
            Ok(())
        } else {
            Err(Error::PointLength {
                expected,
                got: self.u.len(),
            })
        }
    }
}

impl SpecPoint<Rational> {
    /// Substitutes `x = x0` into a one-parameter point.
    pub fn from_specialized(p: &SpecPoint<RatFunc>, x0: &Rational) -> Result<Self> {
        let u = p
            .coords()
            .iter()
            .map(|f| f.eval(x0).ok_or(Error::SingularPoint))
            .collect::<Result<Vec<_>>>()?;
        SpecPoint::new(u)
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `u = (1, 2, 3, 4, 5, 6, x, 1/(720 x))`.
pub fn paper_point_1param() -> SpecPoint<RatFunc> {
    let mut u: Vec<RatFunc> = (1..=6).map(RatFunc::from_i64).collect();
    u.push(RatFunc::x());
    u.push(RatFunc::laurent_monomial(Rational::new(1.into(), 720.into()), -1));
    SpecPoint::new(u).expect("one-parameter point is admissible")
}

/// `u = (1, 2, 3, 4, x0, y0, z0, 1/(24 x0 y0 z0))`.
pub fn paper_point_3param(x0: &Rational, y0: &Rational, z0: &Rational) -> Result<SpecPoint<Rational>> {
    let denom = int(24) * x0 * y0 * z0;
    if denom.is_zero() {
        return Err(Error::DegeneratePoint("a parameter is zero".into()));
    }
    let mut u: Vec<Rational> = (1..=4).map(int).collect();
    u.extend([x0.clone(), y0.clone(), z0.clone(), denom.recip()]);
    SpecPoint::new(u)
}

/// Largest absolute numerator and denominator of sampled coordinates.
pub const SAMPLE_BOUND: i64 = 64;

/// Deterministic stream of admissible rational points.
#[derive(Debug, Clone)]
pub struct PointSampler {
    len: usize,
    rng: ChaCha8Rng,
}

impl PointSampler {
    pub fn new(len: usize, seed: u64) -> Self {
        assert!(len >= 2, "points need at least two coordinates");
        PointSampler {
            len,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn for_algebra(algebra: AlgebraId, seed: u64) -> Self {
        Self::new(SpecPoint::<Rational>::required_len(algebra), seed)
    }

    fn small_rational(&mut self) -> Rational {
        loop {
            let n = self.rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
            if n != 0 {
                let d = self.rng.gen_range(1..=SAMPLE_BOUND);
                return Rational::new(n.into(), d.into());
            }
        }
    }

    pub fn next_point(&mut self) -> SpecPoint<Rational> {
        loop {
            let mut u: Vec<Rational> = (0..self.len - 1).map(|_| self.small_rational()).collect();
            let product = u.iter().fold(Rational::one(), |acc, v| acc * v);
            u.push(product.recip());
            if let Ok(p) = SpecPoint::new(u) {
                return p;
            }
        }
    }
}

impl Iterator for PointSampler {
    type Item = SpecPoint<Rational>;

    fn next(&mut self) -> Option<Self::Item> {
        Some(self.next_point())
    }
}

/// An eight-coordinate point drawn deterministically from `seed`.
pub fn random_point(seed: u64) -> SpecPoint<Rational> {
    PointSampler::new(8, seed).next_point()
}

/// Shift-canonical exponents of a strictly dominant `A_n` weight.
pub(crate) fn alternant_exponents(w: &DynkinWeight) -> Result<Vec<u32>> {
    w.ensure_strictly_dominant()?;
    let ortho = to_ortho(w)?;
    Ok(ortho.canonical().into_iter().map(|e| e as u32).collect())
}

/// `det(u_j^{e_i})` for the exponents of `w`.
pub fn alternant_eval<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    p.ensure_len(w.algebra())?;
    let exps = alternant_exponents(w)?;
    Ok(F::power_determinant(p.coords(), &exps))
}

/// Alternant of an A7 weight given by its labels, skipping validation.
pub(crate) fn a7_alternant_unchecked<F: Field>(labels: &[i64], p: &SpecPoint<F>) -> F {
    let w = DynkinWeight::with_labels(AlgebraId::A7, labels.to_vec());
    let exps: Vec<u32> = a7_to_ortho(&w)
        .expect("A7 weight")
        .canonical()
        .into_iter()
        .map(|e| e as u32)
        .collect();
    F::power_determinant(p.coords(), &exps)
}

/// Schur function `A(w + rho) / A(rho)`.
pub fn schur_eval<F: Field>(w: &DynkinWeight, p: &SpecPoint<F>) -> Result<F> {
    w.ensure_dominant()?;
    let rho = weyl_vector(w.algebra());
    let num = alternant_eval(&w.add(&rho)?, p)?;
    let den = alternant_eval(&rho, p)?;
    if den.is_zero() {
        return Err(Error::SingularPoint);
    }
    Ok(num / den)
}
