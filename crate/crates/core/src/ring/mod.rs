//! Exact coefficient arithmetic and linear algebra.

mod laurent;
mod matrix;
mod snf;

pub use laurent::{Exponent, LaurentPoly, Var, NVARS};
pub use matrix::RingMatrix;
pub use snf::{
    smith_decomposition, smith_normal_form, smith_normal_form_dense, SnfDecomposition, SnfResult,
};
