//! Braids, configurations of labelled points in the unit square, and the
//! 2-category-like structure built from them over a braided monoidal category.

pub mod bmc;
pub mod braid;
pub mod config;
pub mod equiv;
pub mod error;
pub mod laws;
pub mod sigma;
pub mod words;

pub use error::{Error, Result};
