//! Linearization of products of three q-Charlier polynomials: the
//! involution chain, its fixed points, and the closed formulas.

pub mod formulas;
pub mod involutions;
pub mod properties;
pub mod psi;
pub mod q1;
pub mod wpsr;
pub mod wtilde;

pub use involutions::{phi, phi1, phi2, phi3, phi4, phi5, Step};
pub use psi::{psi_i, psi_i_inverse, psi_s, psi_s_inverse};
pub use wpsr::{wpsr_verify, WpsrFailure, WpsrReport};
