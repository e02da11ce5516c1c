//! Finite abstract simplicial complexes represented as disjoint unions of
//! wildcard rows.
//!
//! A [`Row`] is a width-`w` pattern over the symbols `0`, `1`, `2` and numbered
//! bubbles. An `E` bubble means "at least one 1 among these positions", an `N`
//! bubble means "at least one 0 among these positions". A [`Partition`] is a
//! list of pairwise disjoint rows, and most of this crate is about producing
//! partitions of a complex (or of its complementary set filter) and reading
//! counts, optima, links and frequent-set statistics off them.
//!
//! Positions are 1-based in every public API, matching the usual tabular
//! notation. The crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod complex;
pub mod constraints;
mod error;
pub mod face;
pub mod fsm;
pub mod partition;
pub mod poly;
pub mod rows;

pub mod counting;

pub use complex::{FacetFamily, NonfaceFamily};
pub use constraints::{Constraint, Partition};
pub use error::{Error, Result};
pub use face::{FaceSet, GroundSet};
pub use poly::{CountVector, Poly};
pub use rows::{Kind, Row, Symbol};
