//! Exact arithmetic for W-invariant characters attached to a simple root
//! system and a prime p: Weyl characters via Freudenthal's recursion, Brauer
//! multiplication and good-filtration tests in the character ring, the
//! affine Weyl group in the alcove model with Kazhdan-Lusztig polynomials,
//! quantum Steinberg quotients, and minimal characters with the good
//! Steinberg multiplication property.
//!
//! All arithmetic is exact (integers and integer-scaled rationals); no
//! floating point is used anywhere.

pub mod affine;
pub mod alcove;
pub mod characters;
pub mod error;
pub mod kl;
pub mod rootdata;
pub mod steinberg;
pub mod weight;

pub use affine::AffineContext;


pub use error::Error;

pub use rootdata::{CartanFamily, RootSystem, TypeLabel};

pub use weight::Weight;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
