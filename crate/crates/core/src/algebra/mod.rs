//! Exact polynomial arithmetic and the q-number tower.

pub mod laurent;
pub mod monomial;
pub mod qnumbers;
pub mod tripoly;

pub use laurent::LaurentPoly;
pub use monomial::{MonomialSum, SignedMonomial};
pub use qnumbers::{
    binomial, qbinomial, qfactorial, qint, qstirling1, qstirling2, qstirling2_alternating,
};
pub use tripoly::{TermEntry, TriPoly};
