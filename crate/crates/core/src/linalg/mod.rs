//! Exact linear algebra over ℚ and F_p.

mod mat;
mod reduce;
mod scalar;
mod subspace;

pub use mat::{kron_all, tensor_permutation, Mat};
pub use reduce::{inverse, kernel, rank, reduce, solve, Reduction};
pub use scalar::{FieldSpec, Rational, Scalar};
pub use subspace::{induced_map, subquotient_dim, Subquotient, Subspace};
