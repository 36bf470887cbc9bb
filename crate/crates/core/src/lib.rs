//! Exact computation of unit groups and exponent lattices for commutative
//! rings that are finitely generated as modules over the integers.
//!
//! The crate is `no_std` and needs only `alloc`. Everything is exact except
//! the log-embedding heuristics used to *find* candidate relations between
//! units of number fields; those candidates are always verified exactly.

#![no_std]
#![allow(clippy::needless_range_loop, clippy::too_many_arguments, clippy::type_complexity, clippy::wrong_self_convention)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod context;
pub mod decompose;
pub mod error;
pub mod explat;
pub mod fieldalg;
pub mod finitezalg;
pub mod grobner;
pub mod intlat;
pub mod linalg;
pub mod nfunits;
pub mod oracle;
pub mod poly;
pub mod unitgrp;
pub mod upoly;
#[cfg(test)]
pub(crate) mod testutil;

pub use context::Context;
pub use error::{Error, Result};
