//! Exact scalar arithmetic and dense linear algebra over Q and F_p.

mod echelon;
mod matrix;
mod scalar;

pub use echelon::{
    inverse, nullspace, rank, rank_factor, rref, solve_linear, tensor_quotient, Echelon, QuotientSpace, Subspace,
};
pub use matrix::{vec_ops, Matrix};
pub use scalar::{Field, Rat, Scalar, ScalarJson};
