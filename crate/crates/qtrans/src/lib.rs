//! Exact transition matrices between symmetric and quasisymmetric bases with
//! a Hall-Littlewood parameter t.
//!
//! The crate computes, over the ring of integer polynomials in t, the change
//! of basis matrices among the symmetric bases m (monomial), s (Schur),
//! P and Q (Hall-Littlewood) and the quasisymmetric bases M (monomial),
//! F (fundamental), G (a t-analogue of F), S (quasisymmetric Schur) and
//! K (peak functions), together with the combinatorial machinery behind the
//! entries: compositions and partitions, semistandard and starred tableaux,
//! composition tableaux, charge, special rim-hook tableaux and tournament
//! matrices. A brute-force oracle expands the Hall-Littlewood P functions
//! from their raw definition so every formula can be cross-checked.

pub mod ctab;
pub mod error;
pub mod indexset;
pub mod kernels;
pub mod oracle;
pub mod tableaux;
pub mod tpoly;
pub mod transition;
pub mod verify;

pub use error::{Error, Result};
pub use tpoly::TPoly;
