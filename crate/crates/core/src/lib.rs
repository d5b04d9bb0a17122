//! Exact computations around Weyl groups, rational Cherednik algebras and
//! diagonal coinvariants.
//!
//! Everything here is exact: coefficients are rationals over
//! arbitrary-precision integers and no floating point appears on any path.
//! The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]
#![allow(clippy::needless_range_loop, clippy::manual_is_multiple_of)]

extern crate alloc;

pub mod algebra;
pub mod character;
pub mod cherednik;
pub mod coinvariant;
mod error;
pub mod report;
pub mod root_system;
pub mod series;
pub mod type_b;

pub use error::{Error, Result};
