//! Alternating and reverse alternating involutions avoiding patterns:
//! enumeration, bijections, closed-form counts and a verification harness.

pub mod bijections;
pub mod error;
pub mod formulas;
pub mod generate;
pub mod harness;
pub mod pattern;
pub mod perm;

pub use error::{Error, Result};
pub use generate::{ClassSpec, Enumerator, Family};
pub use pattern::Pattern;
pub use perm::Permutation;

/// Generating functions over 128-bit integers.
pub type Gf = formulas::RationalGf<i128>;
/// Generating functions over arbitrary-precision integers.
pub type BigGf = formulas::RationalGf<num_bigint::BigInt>;
