//! Exact-arithmetic toolkit for Calabi-Yau type differential operators.
//!
//! The crate computes Frobenius bases at a point of maximal unipotent
//! monodromy, mirror maps, Yukawa couplings and instanton numbers; checks
//! the fourth- and fifth-order Calabi-Yau conditions; moves between a
//! fourth-order operator and its fifth-order Wronskian lift (and back via
//! the Yang pullback); constructs Hadamard-product and hypergeometric
//! operator families; converts between difference and differential
//! operators; and classifies recursions by the discriminant of the
//! quadratic factor of their leading coefficient.
//!
//! All arithmetic is exact: rationals, polynomials, rational functions
//! and truncated (log-)power series. No floating point anywhere.

pub mod error;
pub mod catalog;
pub mod cystruct;
pub mod diffops;
pub mod exact;
pub mod families;
pub mod frobenius;
pub mod opalg;
pub mod textio;

pub use error::{Error, Result};
