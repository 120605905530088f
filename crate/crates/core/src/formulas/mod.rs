//! Closed forms, generating functions and the table of counting statements.
//!
//! Everything is generic over the scalar type so that counts can be
//! computed in machine integers or, past their range, in `BigInt`.

use std::fmt::{Debug, Display};

use num_traits::{FromPrimitive, Num, ToPrimitive};

pub mod gf;
pub mod sequences;
pub mod table;

pub use gf::RationalGf;
pub use sequences::{fibonacci, motzkin, motzkin_numbers, power_of_two};
pub use table::{
    expected_connected_count, expected_count, lookup, series, theorem, theorems, Case, Formula, Parity, Series,
    Statistic, Status, Theorem,
};

/// An exact integer scalar.
pub trait Count: Clone + Num + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync {}

impl<T> Count for T where T: Clone + Num + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync {}
