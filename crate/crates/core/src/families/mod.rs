//! Constructors for the cataloged operator families: Hadamard products
//! of the special second-order types, binomial lifts of third-order
//! equations, balanced hypergeometric quintics and the closed form of
//! their pullbacks, the double-sum solution identity, Hadamard-square
//! recursions, and the closed-form coefficient oracles.

pub mod hadamard;
pub mod hyper5;
pub mod sequences;
pub mod squares;
pub mod theorem;

pub use hadamard::{
    binom_lift_third, deg2_second_order, hadamard_2x2, hadamard_product_operator,
    hyper_second_order, solution_sequence,
};
pub use hyper5::{hypergeometric_quintic, pullback_closed_form, HyperQuinticSpec};
pub use sequences::{binom_int, binom_rat, harmonic, pochhammer, psi_diff, sequence_oracle, ORACLE_NAMES};
pub use squares::{hadamard_square_recursion, u_poly};
pub use theorem::theorem_solution_check;
