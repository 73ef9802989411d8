//! Exact scalar fields, named-basis spaces, sparse multilinear maps, kernels
//! and finite algebras.

mod algebra;
mod map;
mod matrix;
mod scalar;
mod space;

pub use algebra::{AlgebraError, FiniteAlgebra};
pub use map::{map_equal, MapError, MultiLinearMap};
pub use matrix::{Echelon, Matrix};
pub use scalar::{scalar_arith, ArithOp, Poly, Scalar, ScalarError};
pub use space::{labels, BasisSpace, Label, LinearForm, SpaceError, Tensor, TensorVec};

/// A basis of the kernel of `m`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.kernel_basis()
}
