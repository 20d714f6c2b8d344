//! The fourth-order (CY2) and fifth-order Calabi-Yau conditions, as exact
//! rational-function identities on the monic coefficients.

use crate::error::{Error, Result};
use crate::exact::rat::Rat;
use crate::exact::ratfun::RatFun;
use crate::opalg::{theta_to_monic, ThetaOperator};

/// Monic coefficients a_3 ... a_0 of an order-4 operator.
pub fn monic_a(l: &ThetaOperator) -> Result<[RatFun; 4]> {
    if l.order() != 4 {
        return Err(Error::Domain(format!("expected order 4, got {}", l.order())));
    }
    let m = theta_to_monic(l);
    Ok([m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0)])
}

/// Monic coefficients b_4 ... b_0 of an order-5 operator.
pub fn monic_b(l: &ThetaOperator) -> Result<[RatFun; 5]> {
    if l.order() != 5 {
        return Err(Error::Domain(format!("expected order 5, got {}", l.order())));
    }
    let m = theta_to_monic(l);
    Ok([m.coeff(4), m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0)])
}

/// a_1 = 1/2 a_2 a_3 - 1/8 a_3^3 + a_2' - 3/4 a_3 a_3' - 1/2 a_3''.
pub fn cy2_residual(a3: &RatFun, a2: &RatFun, a1: &RatFun) -> RatFun {
    let a3p = a3.derivative();
    let rhs = &(&(&(a2 * a3).scale(&Rat::frac(1, 2)) - &a3.pow(3).scale(&Rat::frac(1, 8)))
        + &(&a2.derivative() - &(a3 * &a3p).scale(&Rat::frac(3, 4))))
        - &a3p.derivative().scale(&Rat::frac(1, 2));
    a1 - &rhs
}

/// Exact test of the CY2 condition on an order-4 operator.
pub fn cy2_check(l: &ThetaOperator) -> Result<bool> {
    let [a3, a2, a1, _a0] = monic_a(l)?;
    Ok(cy2_residual(&a3, &a2, &a1).is_zero())
}

/// U = -b_2 + 3/2 b_3' + 3/5 b_3 b_4 - b_4'' - 6/5 b_4 b_4' - 4/25 b_4^3.
pub fn u_residual(b4: &RatFun, b3: &RatFun, b2: &RatFun) -> RatFun {
    let b4p = b4.derivative();
    &(&(&(-b2) + &b3.derivative().scale(&Rat::frac(3, 2)))
        + &(&(b3 * b4).scale(&Rat::frac(3, 5)) - &b4p.derivative()))
        - &(&(b4 * &b4p).scale(&Rat::frac(6, 5)) + &b4.pow(3).scale(&Rat::frac(4, 25)))
}

/// Exact test of the fifth-order condition U = 0 on an order-5 operator.
pub fn cy5_check(l: &ThetaOperator) -> Result<bool> {
    let [b4, b3, b2, _b1, _b0] = monic_b(l)?;
    Ok(u_residual(&b4, &b3, &b2).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{Poly, Var};

    #[test]
    fn theta4_satisfies_cy2() {
        assert!(cy2_check(&ThetaOperator::theta_pow(4)).unwrap());
    }

    #[test]
    fn theta4_plus_x_keeps_cy2() {
        // Adding x * 1 only perturbs the D^0 coefficient, which the
        // condition does not see.
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 4),
            Poly::one(Var::Theta),
        ]);
        assert!(cy2_check(&l).unwrap());
    }

    #[test]
    fn perturbed_third_derivative_fails_cy2() {
        // theta^4 + x theta^3 changes a_3 and breaks the identity.
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 4),
            Poly::monomial(Var::Theta, Rat::one(), 3),
        ]);
        assert!(!cy2_check(&l).unwrap());
    }

    #[test]
    fn theta5_satisfies_cy5() {
        assert!(cy5_check(&ThetaOperator::theta_pow(5)).unwrap());
    }

    #[test]
    fn theta5_minus_x_keeps_cy5() {
        // The b_0 perturbation is invisible to U.
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 5),
            -&Poly::one(Var::Theta),
        ]);
        assert!(cy5_check(&l).unwrap());
    }

    #[test]
    fn perturbed_fourth_derivative_fails_cy5() {
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 5),
            Poly::monomial(Var::Theta, Rat::one(), 4),
        ]);
        assert!(!cy5_check(&l).unwrap());
    }

    #[test]
    fn wrong_order_is_domain_error() {
        assert!(cy2_check(&ThetaOperator::theta_pow(5)).is_err());
        assert!(cy5_check(&ThetaOperator::theta_pow(4)).is_err());
    }
}
