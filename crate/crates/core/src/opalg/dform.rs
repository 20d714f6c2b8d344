//! Operators in the d/dx basis with rational-function coefficients, and
//! Euclidean right division over that field.

use super::monic::{dform_to_theta, theta_to_d_polys};
use super::theta::ThetaOperator;
use crate::error::{Error, Result};
use crate::exact::poly::Var;
use crate::exact::ratfun::RatFun;
use std::fmt;

/// sum_j coeffs[j] d^j/dx^j, not necessarily monic.
#[derive(Clone, PartialEq, Eq)]
pub struct DOperator {
    coeffs: Vec<RatFun>,
}

impl DOperator {
    pub fn zero() -> Self {
        DOperator { coeffs: Vec::new() }
    }

    pub fn new(coeffs: Vec<RatFun>) -> Self {
        let mut op = DOperator { coeffs };
        op.trim();
        op
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(c) if c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> RatFun {
        self.coeffs.get(j).cloned().unwrap_or_else(|| RatFun::zero(Var::X))
    }

    pub fn coeffs(&self) -> &[RatFun] {
        &self.coeffs
    }

    /// The exact d/dx-basis form of a theta operator, with polynomial
    /// coefficients.
    pub fn from_theta(l: &ThetaOperator) -> Self {
        if l.is_zero() {
            return DOperator::zero();
        }
        DOperator::new(
            theta_to_d_polys(l).into_iter().map(RatFun::from_poly).collect(),
        )
    }

    pub fn from_monic(m: &super::monic::MonicOperator) -> Self {
        let mut coeffs: Vec<RatFun> = m.coeffs().to_vec();
        coeffs.push(RatFun::one(Var::X));
        DOperator { coeffs }
    }

    pub fn to_theta(&self) -> ThetaOperator {
        dform_to_theta(&self.coeffs)
    }

    pub fn scale(&self, c: &RatFun) -> DOperator {
        DOperator::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, rhs: &DOperator) -> DOperator {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DOperator::new((0..n).map(|j| &self.coeff(j) + &rhs.coeff(j)).collect())
    }

    pub fn sub(&self, rhs: &DOperator) -> DOperator {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DOperator::new((0..n).map(|j| &self.coeff(j) - &rhs.coeff(j)).collect())
    }

    /// Noncommutative product using D^i a(x) = sum_t C(i,t) a^{(t)} D^{i-t}.
    pub fn mul(&self, rhs: &DOperator) -> DOperator {
        if self.is_zero() || rhs.is_zero() {
            return DOperator::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![RatFun::zero(Var::X); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                // a D^i * b D^j = a * sum_t C(i,t) b^{(t)} D^{i+j-t}
                let mut deriv = b.clone();
                let mut binom = 1i64;
                for t in 0..=i {
                    if t > 0 {
                        binom = binom * (i as i64 - t as i64 + 1) / t as i64;
                        deriv = deriv.derivative();
                    }
                    let c = &(a * &deriv)
                        * &RatFun::constant(Var::X, crate::exact::rat::Rat::from_int(binom));
                    out[i + j - t] = &out[i + j - t] + &c;
                }
            }
        }
        DOperator::new(out)
    }
}

impl fmt::Debug for DOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if !c.is_zero() {
                write!(f, "({})*D^{} ", c, j)?;
            }
        }
        Ok(())
    }
}

/// Result of right division: L = quotient * divisor + remainder.
pub struct RightDivision {
    pub quotient: DOperator,
    pub remainder: DOperator,
    /// remainder == 0
    pub exact: bool,
    /// Canonical theta form of the quotient when the division is exact.
    pub quotient_theta: Option<ThetaOperator>,
}

/// Euclidean right division in the d/dx basis over the rational-function
/// field.
pub fn weyl_right_divide(l: &ThetaOperator, r: &ThetaOperator) -> Result<RightDivision> {
    if r.is_zero() {
        return Err(Error::Domain("division by the zero operator".into()));
    }
    let ld = DOperator::from_theta(l);
    let rd = DOperator::from_theta(r);
    let rdeg = rd.order().unwrap();
    let rlead = rd.coeff(rdeg);
    let mut rem = ld;
    let mut quo = DOperator::zero();
    while let Some(deg) = rem.order() {
        if deg < rdeg {
            break;
        }
        let factor = &rem.coeff(deg) / &rlead;
        let mut mono = vec![RatFun::zero(Var::X); deg - rdeg + 1];
        mono[deg - rdeg] = factor;
        let t = DOperator::new(mono);
        rem = rem.sub(&t.mul(&rd));
        quo = quo.add(&t);
    }
    let exact = rem.is_zero();
    let quotient_theta = if exact { Some(quo.to_theta()) } else { None };
    Ok(RightDivision { quotient: quo, remainder: rem, exact, quotient_theta })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Poly;

    fn tp(coeffs: &[i64]) -> Poly {
        Poly::from_ints(Var::Theta, coeffs)
    }

    #[test]
    fn division_with_zero_remainder() {
        // (theta^2 + theta) / (theta + 1) = theta
        let l = ThetaOperator::new(vec![tp(&[0, 1, 1])]);
        let r = ThetaOperator::new(vec![tp(&[1, 1])]);
        let d = weyl_right_divide(&l, &r).unwrap();
        assert!(d.exact);
        assert_eq!(d.quotient_theta.unwrap(), ThetaOperator::theta_pow(1));
    }

    #[test]
    fn division_with_constant_remainder() {
        // theta^2 = (theta - 1)(theta + 1) + 1
        let l = ThetaOperator::theta_pow(2);
        let r = ThetaOperator::new(vec![tp(&[1, 1])]);
        let d = weyl_right_divide(&l, &r).unwrap();
        assert!(!d.exact);
        assert_eq!(d.remainder.order(), Some(0));
        assert!(!d.remainder.coeff(0).is_zero());
    }

    #[test]
    fn division_identity_holds() {
        let l = ThetaOperator::new(vec![
            tp(&[0, 0, 0, 1]),
            tp(&[2, 5, 1]),
            tp(&[7]),
        ]);
        let r = ThetaOperator::new(vec![tp(&[0, 1]), tp(&[3, 1])]);
        let d = weyl_right_divide(&l, &r).unwrap();
        let back = d.quotient.mul(&DOperator::from_theta(&r)).add(&d.remainder);
        assert_eq!(back, DOperator::from_theta(&l));
        if let Some(ord) = d.remainder.order() {
            assert!(ord < r.order());
        }
    }

    #[test]
    fn multiplication_matches_weyl_product() {
        // Check D-form multiplication against theta-form Weyl product.
        let a = ThetaOperator::new(vec![tp(&[0, 1]), tp(&[2, 3])]);
        let b = ThetaOperator::new(vec![tp(&[1, 0, 1]), tp(&[5])]);
        let via_theta = a.weyl_mul(&b);
        let via_d = DOperator::from_theta(&a).mul(&DOperator::from_theta(&b));
        // Both sides are the same operator up to a left rational-function
        // factor; compare canonical theta forms.
        assert_eq!(via_d.to_theta(), via_theta);
    }
}
