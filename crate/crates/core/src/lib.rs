//! Twisted conjugacy in finite groups and their direct products.

pub mod catalog;
pub mod endo_spec;
pub mod error;
pub mod finite_group;
pub mod hom_engine;
pub mod perm;
pub mod product_matrix;
pub mod report;
pub mod spectra;
pub mod structure;
pub mod twisted;
pub mod verify;
pub mod zdirectsum;
mod union_find;

pub use error::{Error, Result};
