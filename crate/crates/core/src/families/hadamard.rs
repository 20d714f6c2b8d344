//! Hadamard-product operator constructions for the special second-order
//! factors, the binomial lift of third-order equations, and annihilator
//! fitting for products of two holonomic sequences.

use crate::error::{Error, Result};
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::frobenius::series_annihilator;
use crate::opalg::ThetaOperator;

/// theta^2 - x Q(theta), the hypergeometric second-order type.
pub fn hyper_second_order(q: &Poly) -> Result<ThetaOperator> {
    if q.degree() != Some(2) {
        return Err(Error::Domain("Q must be a quadratic".into()));
    }
    Ok(ThetaOperator::new(vec![Poly::monomial(Var::Theta, Rat::one(), 2), -q]))
}

/// theta^2 - x (a theta^2 + a theta + b) - c x^2 (theta + 1)^2, the
/// second-degree second-order type.
pub fn deg2_second_order(a: &Rat, b: &Rat, c: &Rat) -> ThetaOperator {
    let p = Poly::from_coeffs(Var::Theta, vec![b.clone(), a.clone(), a.clone()]);
    let tp1_sq = Poly::from_linear_factors(Var::Theta, &vec![Rat::one(); 2]);
    ThetaOperator::new(vec![
        Poly::monomial(Var::Theta, Rat::one(), 2),
        -&p,
        tp1_sq.scale(&(-c)),
    ])
}

/// The closed-form Hadamard product of a second-degree operator
/// (P(theta), c) with a hypergeometric operator Q(theta):
///   theta^4 - x P(theta) Q(theta) - c x^2 Q(theta) Q(theta + 1).
pub fn hadamard_2x2(p: &Poly, c: &Rat, q: &Poly) -> Result<ThetaOperator> {
    if p.degree().map(|d| d > 2).unwrap_or(false) {
        return Err(Error::Domain("P must have degree at most 2".into()));
    }
    if q.degree() != Some(2) {
        return Err(Error::Domain("Q must be a quadratic".into()));
    }
    let q_shift = q.shift_arg(&Rat::one());
    Ok(ThetaOperator::new(vec![
        Poly::monomial(Var::Theta, Rat::one(), 4),
        -&(p * q),
        (&(q * &q_shift)).scale(&(-c)),
    ]))
}

/// The binomial lift of a third-order equation (P(n), c):
///   theta^4 - x (2 theta + 1)^2 P(theta) + c x^2 (theta+1)^2 (2 theta+1) (2 theta+3).
pub fn binom_lift_third(p: &Poly, c: &Rat) -> Result<ThetaOperator> {
    if p.degree() != Some(2) {
        return Err(Error::Domain("P must be a quadratic".into()));
    }
    let two_t_1 = Poly::from_ints(Var::Theta, &[1, 2]);
    let two_t_3 = Poly::from_ints(Var::Theta, &[3, 2]);
    let tp1_sq = Poly::from_linear_factors(Var::Theta, &vec![Rat::one(); 2]);
    Ok(ThetaOperator::new(vec![
        Poly::monomial(Var::Theta, Rat::one(), 4),
        -&(&(&two_t_1 * &two_t_1) * p),
        (&(&tp1_sq * &two_t_1) * &two_t_3).scale(c),
    ]))
}

/// Coefficient sequence A_0 ... A_n of the analytic solution of a MUM
/// operator, by the holonomic recursion.
pub fn solution_sequence(l: &ThetaOperator, n: usize) -> Result<Vec<Rat>> {
    let s = crate::frobenius::power_series_solution(l, n)?;
    Ok(s.coeffs().to_vec())
}

/// Fit an annihilator of the termwise product of the analytic solutions
/// of two operators, searching orders up to 4 and degrees up to `d_max`.
pub fn hadamard_product_operator(
    left: &ThetaOperator,
    right: &ThetaOperator,
    d_max: usize,
) -> Result<ThetaOperator> {
    let mut d = 4usize.min(d_max);
    loop {
        let terms = (4 + 1) * (d + 1) + 10 + 5;
        let a = solution_sequence(left, terms)?;
        let b = solution_sequence(right, terms)?;
        let prod: Vec<Rat> = a.iter().zip(&b).map(|(x, y)| x * y).collect();
        if let Some(op) = series_annihilator(&prod, 4, d)? {
            return Ok(op);
        }
        if d >= d_max {
            return Err(Error::Structural(format!(
                "no order-4 annihilator of the Hadamard product with degree <= {}",
                d_max
            )));
        }
        d = (d + 2).min(d_max);
    }
}
