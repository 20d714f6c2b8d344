//! The Yang pullback: back from an order-5 CY operator to the order-4
//! operator whose Wronskian lift it is, normalized so that its analytic
//! solution is x^3 y_0 exp(-3/10 integral b_4).

use super::conditions::{cy5_check, monic_b};
use crate::error::{Error, Result};
use crate::exact::rat::Rat;
use crate::exact::ratfun::RatFun;
use crate::frobenius::mum_check;
use crate::opalg::{monic_to_theta, MonicOperator, ThetaOperator};

/// The pullback coefficients:
///   c3 = 8/5 b4
///   c2 = 1/2 b3 + 7/5 b4' + 19/25 b4^2
///   c1 = -3/5 b2 + 7/5 b3' + 19/25 b3 b4
///   c0 = -1/4 b1 + 1/10 b2' + 1/25 b2 b4 + 9/40 b3'' + 1/16 b3^2
///        + 1/25 b3 b4' + 23/100 b3' b4 + 9/250 b3 b4^2
pub fn pullback_coefficients(
    b4: &RatFun,
    b3: &RatFun,
    b2: &RatFun,
    b1: &RatFun,
) -> [RatFun; 4] {
    let c3 = b4.scale(&Rat::frac(8, 5));
    let c2 = &(&b3.scale(&Rat::frac(1, 2)) + &b4.derivative().scale(&Rat::frac(7, 5)))
        + &b4.pow(2).scale(&Rat::frac(19, 25));
    let c1 = &(&b2.scale(&Rat::frac(-3, 5)) + &b3.derivative().scale(&Rat::frac(7, 5)))
        + &(b3 * b4).scale(&Rat::frac(19, 25));
    let b3p = b3.derivative();
    let mut c0 = b1.scale(&Rat::frac(-1, 4));
    c0 = &c0 + &b2.derivative().scale(&Rat::frac(1, 10));
    c0 = &c0 + &(b2 * b4).scale(&Rat::frac(1, 25));
    c0 = &c0 + &b3p.derivative().scale(&Rat::frac(9, 40));
    c0 = &c0 + &b3.pow(2).scale(&Rat::frac(1, 16));
    c0 = &c0 + &(b3 * &b4.derivative()).scale(&Rat::frac(1, 25));
    c0 = &c0 + &(&b3p * b4).scale(&Rat::frac(23, 100));
    c0 = &c0 + &(b3 * &b4.pow(2)).scale(&Rat::frac(9, 250));
    [c3, c2, c1, c0]
}

/// Triangular inversion of [`pullback_coefficients`]: recover
/// b_4 ... b_1 from c_3 ... c_0.
pub fn pullback_inverse(c: &[RatFun; 4]) -> [RatFun; 4] {
    let [c3, c2, c1, c0] = c;
    let b4 = c3.scale(&Rat::frac(5, 8));
    let b3 = (&(c2 - &b4.derivative().scale(&Rat::frac(7, 5)))
        - &b4.pow(2).scale(&Rat::frac(19, 25)))
        .scale(&Rat::from_int(2));
    let b2 = (&(c1 - &b3.derivative().scale(&Rat::frac(7, 5)))
        - &(&b3 * &b4).scale(&Rat::frac(19, 25)))
        .scale(&Rat::frac(-5, 3));
    // c0 = -1/4 b1 + (b1-free part)
    let zero = RatFun::zero(b4.var());
    let [_, _, _, c0_free] = pullback_coefficients(&b4, &b3, &b2, &zero);
    let b1 = (c0 - &c0_free).scale(&Rat::from_int(-4));
    [b4, b3, b2, b1]
}

/// The Yang pullback of a MUM order-5 operator satisfying the fifth-order
/// CY condition.
pub fn yang_pullback(l: &ThetaOperator) -> Result<ThetaOperator> {
    if !mum_check(l) {
        return Err(Error::Precondition("pullback requires a MUM operator".into()));
    }
    if !cy5_check(l)? {
        return Err(Error::Precondition(
            "pullback requires the fifth-order CY condition U = 0".into(),
        ));
    }
    let [b4, b3, b2, b1, _b0] = monic_b(l)?;
    let [c3, c2, c1, c0] = pullback_coefficients(&b4, &b3, &b2, &b1);
    let m = MonicOperator::new(vec![c0, c1, c2, c3]);
    // Multiplying the solution by x^{5/2} is the substitution
    // theta -> theta - 5/2.
    let pulled = monic_to_theta(&m).theta_shift(&Rat::frac(-5, 2));
    if !mum_check(&pulled) {
        return Err(Error::Internal("pullback did not produce a MUM operator".into()));
    }
    Ok(pulled)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pullback_of_theta5_is_theta4() {
        assert_eq!(yang_pullback(&ThetaOperator::theta_pow(5)).unwrap(), ThetaOperator::theta_pow(4));
    }

    #[test]
    fn pullback_rejects_non_cy() {
        use crate::exact::poly::{Poly, Var};
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 5),
            Poly::monomial(Var::Theta, Rat::one(), 4),
        ]);
        assert!(yang_pullback(&l).is_err());
    }

    #[test]
    fn round_trip_theta4() {
        use super::super::lift::wronskian_lift;
        let l = ThetaOperator::theta_pow(4);
        let lifted = wronskian_lift(&l).unwrap();
        assert_eq!(yang_pullback(&lifted).unwrap(), l);
    }
}
