//! Weighted projective spaces over finite fields.
//!
//! Point enumeration for `P(a_0, ..., a_m)(F_q)`, zero counting for weighted
//! homogeneous polynomials, the brute-force maximum `e_q(d; a)`, the line
//! geometry of `P(1, a_1, a_2)`, and weighted projective Reed–Muller codes
//! with exact parameters.

pub mod arith;
pub mod codes;
pub mod delorme;
pub mod error;
pub mod family;
pub mod field;
pub mod lines;
pub mod poly;
pub mod search;
pub mod space;
pub mod suites;
pub mod zeros;

pub use error::{Error, Result};
pub use field::{make_field, FieldCtx, FieldElement};
pub use poly::{Monomial, Polynomial, WeightedPolynomial};
pub use space::{WeightSystem, WeightedPoint};
