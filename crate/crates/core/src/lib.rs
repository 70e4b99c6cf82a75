//! Exact arithmetic for the Al-Salam-Carlitz q-Charlier polynomials and their
//! combinatorial models.

pub mod algebra;
pub mod charlier;
pub mod classical;
pub mod config;
pub mod error;
pub mod linearization;
pub mod moments;
pub mod partitions;
pub mod perm;
pub mod tableaux;
pub mod verify;

pub use algebra::{LaurentPoly, TriPoly};
pub use error::{Error, Result};
