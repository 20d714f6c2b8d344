//! Monic d/dx-form operators and conversion to and from theta form via
//! Stirling numbers.

use super::theta::ThetaOperator;
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::exact::ratfun::RatFun;
use crate::exact::stirling::{first_kind_row, second_kind_row};
use num_bigint::BigInt;
use std::fmt;

/// d^k/dx^k + a_{k-1} d^{k-1}/dx^{k-1} + ... + a_0, with rational-function
/// coefficients; the leading 1 is implicit.
#[derive(Clone, PartialEq, Eq)]
pub struct MonicOperator {
    /// coeffs[j] multiplies d^j/dx^j for j = 0 .. k-1.
    coeffs: Vec<RatFun>,
}

impl MonicOperator {
    pub fn new(coeffs: Vec<RatFun>) -> Self {
        assert!(!coeffs.is_empty());
        MonicOperator { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of d^j/dx^j (the implicit leading coefficient included).
    pub fn coeff(&self, j: usize) -> RatFun {
        if j == self.order() {
            RatFun::one(Var::X)
        } else {
            self.coeffs[j].clone()
        }
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }
}

impl fmt::Debug for MonicOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.order())?;
        for j in (0..self.order()).rev() {
            if !self.coeffs[j].is_zero() {
                write!(f, " + ({})*D^{}", self.coeffs[j], j)?;
            }
        }
        Ok(())
    }
}

/// Polynomial coefficients of L in the d/dx basis:
/// L = sum_j c_j(x) d^j/dx^j with c_j(x) = sum_{i,n} P_i[n] S(n,j) x^{i+j}.
pub fn theta_to_d_polys(l: &ThetaOperator) -> Vec<Poly> {
    let k = l.order();
    let mut c: Vec<Poly> = vec![Poly::zero(Var::X); k + 1];
    for (i, p) in l.theta_polys().iter().enumerate() {
        for (n, coeff) in p.coeffs().iter().enumerate() {
            if coeff.is_zero() {
                continue;
            }
            let row = second_kind_row(n as u32);
            for (j, s) in row.iter().enumerate() {
                if *s == 0 {
                    continue;
                }
                let contrib = coeff * &Rat::from_bigint(BigInt::from(*s));
                let mono = Poly::monomial(Var::X, contrib, i + j);
                c[j] = &c[j] + &mono;
            }
        }
    }
    c
}

/// Expand to the d/dx basis and divide by the leading coefficient.
pub fn theta_to_monic(l: &ThetaOperator) -> MonicOperator {
    assert!(!l.is_zero(), "cannot normalize the zero operator");
    let c = theta_to_d_polys(l);
    let k = c.len() - 1;
    let lead = RatFun::from_poly(c[k].clone());
    let coeffs = (0..k)
        .map(|j| &RatFun::from_poly(c[j].clone()) / &lead)
        .collect();
    MonicOperator::new(coeffs)
}

/// Clear a list of d/dx-basis rational-function coefficients to a
/// canonical theta-form operator. The list index is the derivative order;
/// the operator is sum_j coeffs[j] d^j/dx^j.
pub fn dform_to_theta(coeffs: &[RatFun]) -> ThetaOperator {
    let nonzero: Vec<usize> = (0..coeffs.len()).filter(|&j| !coeffs[j].is_zero()).collect();
    if nonzero.is_empty() {
        return ThetaOperator::zero();
    }
    let mut den = Poly::one(Var::X);
    for &j in &nonzero {
        den = den.lcm(coeffs[j].denominator());
    }
    // After clearing denominators we still need x-valuation >= j on the
    // coefficient of d^j/dx^j so that x^m d^j = x^{m-j} theta-falling.
    let mut shift = 0i64;
    for &j in &nonzero {
        let p = &(&RatFun::from_poly(den.clone()) * &coeffs[j]);
        let poly = p.as_poly().expect("denominator cleared").clone();
        let need = j as i64 - poly.valuation() as i64;
        shift = shift.max(need);
    }
    let mut polys: Vec<Poly> = Vec::new();
    for &j in &nonzero {
        let p = &RatFun::from_poly(den.mul_var_pow(shift as usize)) * &coeffs[j];
        let poly = p.as_poly().expect("denominator cleared").clone();
        // x^m d^j/dx^j = x^{m-j} * theta (theta-1) ... (theta-j+1)
        let falling = falling_factorial(j);
        for (m, cm) in poly.coeffs().iter().enumerate() {
            if cm.is_zero() {
                continue;
            }
            let grade = m - j; // valuation guarantee makes this non-negative
            if polys.len() <= grade {
                polys.resize(grade + 1, Poly::zero(Var::Theta));
            }
            polys[grade] = &polys[grade] + &falling.scale(cm);
        }
    }
    ThetaOperator::new(polys)
}

/// theta (theta - 1) ... (theta - j + 1); equals sum s(j, m) theta^m with
/// first-kind Stirling coefficients.
fn falling_factorial(j: usize) -> Poly {
    let row = first_kind_row(j as u32);
    Poly::from_coeffs(
        Var::Theta,
        row.iter().map(|&v| Rat::from_bigint(BigInt::from(v))).collect(),
    )
}

/// Inverse of [`theta_to_monic`] up to canonicalization.
pub fn monic_to_theta(m: &MonicOperator) -> ThetaOperator {
    let mut coeffs: Vec<RatFun> = m.coeffs().to_vec();
    coeffs.push(RatFun::one(Var::X));
    dform_to_theta(&coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv_x(c: i64, k: usize) -> RatFun {
        RatFun::var_pow_inv(Var::X, Rat::from_int(c), k)
    }

    #[test]
    fn theta4_monic_coefficients() {
        let m = theta_to_monic(&ThetaOperator::theta_pow(4));
        assert_eq!(m.order(), 4);
        assert_eq!(m.coeff(3), inv_x(6, 1));
        assert_eq!(m.coeff(2), inv_x(7, 2));
        assert_eq!(m.coeff(1), inv_x(1, 3));
        assert!(m.coeff(0).is_zero());
    }

    #[test]
    fn theta5_monic_coefficients() {
        let m = theta_to_monic(&ThetaOperator::theta_pow(5));
        assert_eq!(m.coeff(4), inv_x(10, 1));
        assert_eq!(m.coeff(3), inv_x(25, 2));
        assert_eq!(m.coeff(2), inv_x(15, 3));
        assert_eq!(m.coeff(1), inv_x(1, 4));
        assert!(m.coeff(0).is_zero());
    }

    #[test]
    fn theta2_monic() {
        let m = theta_to_monic(&ThetaOperator::theta_pow(2));
        assert_eq!(m.coeff(1), inv_x(1, 1));
        assert!(m.coeff(0).is_zero());
    }

    #[test]
    fn monic_round_trip_theta4() {
        let m = MonicOperator::new(vec![
            RatFun::zero(Var::X),
            inv_x(1, 3),
            inv_x(7, 2),
            inv_x(6, 1),
        ]);
        assert_eq!(monic_to_theta(&m), ThetaOperator::theta_pow(4));
    }

    #[test]
    fn d_plus_zero_clears_to_theta() {
        // D alone: x*D = theta
        let m = MonicOperator::new(vec![RatFun::zero(Var::X)]);
        assert_eq!(monic_to_theta(&m), ThetaOperator::theta_pow(1));
    }

    #[test]
    fn round_trip_on_degree_two_quartic() {
        // The pullback quartic of the (1/2,...,1/2) quintic.
        let l = ThetaOperator::new(vec![
            Poly::from_ints(Var::Theta, &[0, 0, 0, 0, 1]),
            Poly::from_ints(Var::Theta, &[624, 2816, 4864, 4096, 2048]).scale(&Rat::from_int(-1)),
            Poly::from_linear_factors(Var::Theta, &vec![Rat::one(); 4])
                .scale(&Rat::from_int(1 << 20)),
        ]);
        let m = theta_to_monic(&l);
        assert_eq!(monic_to_theta(&m), l);
    }
}
