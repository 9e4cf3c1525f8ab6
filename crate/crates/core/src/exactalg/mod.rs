//! Exact scalars, matrices, subspaces and polynomials. Nothing in the engine
//! uses floating point.

mod matrix;
mod poly;
mod scalar;

pub use matrix::{mat_kernel, subspace_intersect, subspace_leq, ExactMatrix, Subspace};
pub use poly::{Coeff, Poly, PolyQ, RatPoly};
pub use scalar::{rat, FieldTag, QuadExt5, Rational, Scalar};
