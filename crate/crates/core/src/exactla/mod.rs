//! Exact scalars over ℚ and 𝔽_p, dense matrices, canonical subspaces.

mod mat;
pub mod poly;
mod rational;
mod scalar;
mod sparse;
mod subspace;

pub use mat::Mat;
pub use rational::Rational;
pub use scalar::{FieldSpec, Scalar};
pub use sparse::SparseSystem;
pub use subspace::{kernel_basis, rref, subspace_ops, Subspace, SubspaceOps};

