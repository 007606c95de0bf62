//! Virtual braids, self-distributive structures, their braidings and homology,
//! all in exact arithmetic.

#![allow(clippy::needless_range_loop)]

pub mod action;
pub mod braid;
pub mod cli;
pub mod error;
pub mod freeshelf;
pub mod gsd;
pub mod homology;
pub mod linrep;
pub mod ring;
pub mod sdstruct;
pub mod tensor;

pub use error::{Error, Result};
