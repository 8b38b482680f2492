//! Exact characters and tensor-product multiplicities for `A_n` (n ≤ 7) and `E7`.
//!
//! E7 alternants are evaluated as signed sums of 72 A7 alternants, one per
//! coset of `W(A7)` in `W(E7)`, each an 8×8 generalized Vandermonde
//! determinant at a point `u_1 .. u_8` with unit product. Coupling
//! coefficients of `R(Λ) ⊗ R(Λ')` come from exact linear solves over sampled
//! points.
//!
//! ```
//! use e7tensor::{dim, AlgebraId, DynkinWeight};
//!
//! let l1 = DynkinWeight::fundamental(AlgebraId::A7, 1).unwrap();
//! assert_eq!(dim(&l1).unwrap(), 8);
//! ```

pub mod alternant;
pub mod cartan;
pub mod coset72;
pub mod e7char;
pub mod error;
pub mod field;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod tensor;
pub mod weyl;

pub use alternant::{
    alternant_eval, paper_point_1param, paper_point_3param, random_point, schur_eval,
    PointSampler, SpecPoint,
};
pub use cartan::{
    a7_to_ortho, cartan_matrix, dominance_compare, e7_to_a7, strict_shift, weyl_vector,
    AlgebraId, CartanMatrix, Dominance, DynkinWeight, Family, OrthoWeight,
};
pub use coset72::{coset_words, infer_e7_labeling, orbit_decompose, validate_table, CosetTable};
pub use e7char::{
    character, dim, e7_alternant_eval, e7_alternant_normalized, e7_char_eval, positive_roots,
};
pub use error::{Error, Result};
pub use field::{Field, Rational};
pub use poly::{Poly, RatFunc};
pub use tensor::{subdominants, tensor_decompose, verify_decomposition, Decomposition};
pub use weyl::{apply_word, dominantize, enumerate_orbit, orbit_size, simple_reflect, WeylWord};

/// Point with exact rational coordinates.
pub type QPoint = SpecPoint<Rational>;
/// One-parameter point with coordinates in `Q(x)`.
pub type PolyPoint = SpecPoint<RatFunc>;
