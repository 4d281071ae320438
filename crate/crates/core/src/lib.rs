//! Finite-dimensional coalgebras, their dual algebras and modules, maximal
//! rings of quotients and covering coalgebras, all by exact linear algebra
//! over ℚ or 𝔽_p.

pub mod alg;
pub mod coalg;
pub mod error;
pub mod exactla;
pub mod exec;
pub mod fdmod;
pub mod json;
pub mod props;
pub mod quiver;
pub mod quotient;

pub use alg::Algebra;
pub use coalg::Coalgebra;
pub use error::{Error, Result};
pub use fdmod::{FDModule, ModuleMap, Side, Submodule};
pub use exactla::{FieldSpec, Mat, Scalar, Subspace};
pub use quiver::{parse_quiver, Quiver};
