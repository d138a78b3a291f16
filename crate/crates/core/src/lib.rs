//! Exact combinatorics for unipotent characters of finite classical groups
//! and principal-block membership checks.
//!
//! * [`arith`]: integer polynomials, cyclotomic polynomials, orders, parameter bundles
//! * [`partitions`]: β-sets, e-cores and quotients, hook-formula degrees for `GL_n(±r)`
//! * [`symbols`]: symbols, hooks and cohooks, twists, classical degrees, tabulated cores
//! * [`blocks`]: block distribution of unipotent labels and witness searches
//! * [`chartab`]: exact character tables and central-character block computations

pub mod arith;
pub mod blocks;
pub mod chartab;
pub mod error;
pub mod label;
pub mod partitions;
pub mod symbols;

pub use error::{Error, Result};
