//! Exact-arithmetic library for enumerating algebraic numbers of bounded
//! degree and height, certifying height computations, constructing entire
//! transcendental series with controlled algebraic values, and exercising the
//! quantitative machinery (Siegel lemma, Schwarz lemma, Liouville inequality)
//! behind counting bounds for algebraic values of analytic functions.
//!
//! All arithmetic is exact (big integers and rationals); real quantities that
//! cannot be represented exactly are carried as certified enclosures with
//! adaptive precision escalation. No floating point enters any verdict.

pub mod census;
pub mod cli;
pub mod error;
pub mod faberforge;
pub mod heights;
pub mod polynum;
pub mod transmachine;

pub use error::{Error, Result};
