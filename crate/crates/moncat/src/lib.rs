//! Workbench for finite strict monoidal categories.
//!
//! The kernel (`fincat`) represents a category as explicit tables. On top
//! of it sit the centralizer/center constructions (`constructions`),
//! universal-property colimit search and colimit inheritance (`colimits`),
//! comonoid enumeration with cofree-object search (`comonoids`), and the
//! braid and ribbon braid categories with a decidable word problem
//! (`braid`). `catalog` holds the standard example categories and the
//! independent oracles used to cross-check results.

pub mod braid;
pub mod catalog;
pub mod colimits;
pub mod comonoids;
pub mod constructions;
pub mod error;
pub mod fincat;

pub use error::{Error, Result};
