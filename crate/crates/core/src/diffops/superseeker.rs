//! Shift-invariant classification of recursions by the quadratic factor
//! of the leading coefficient: strip fourth-power linear factors, then
//! key on (a, D, b mod 2a) of the remaining integer quadratic.

use super::diffop::DifferenceOperator;
use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rat::Rat;
use crate::opalg::ThetaOperator;
use num_bigint::BigInt;

/// Signature of an integer quadratic a n^2 + b n + c, invariant under
/// integer shifts n -> n + s.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadraticSignature {
    /// Content-one integer quadratic with positive leading coefficient.
    pub quadratic: Poly,
    pub a: BigInt,
    pub discriminant: BigInt,
    /// b reduced mod 2a into [0, 2a).
    pub b_canonical: BigInt,
}

impl QuadraticSignature {
    /// Build from any rational quadratic.
    pub fn from_quadratic(q: &Poly) -> Result<QuadraticSignature> {
        if q.degree() != Some(2) {
            return Err(Error::NoSignature(format!(
                "expected a quadratic, got degree {:?}",
                q.degree()
            )));
        }
        let mut q = q.scale(&q.content().recip());
        if q.leading().unwrap().is_negative() {
            q = -&q;
        }
        let a = q.coeff(2).numer().clone();
        let b = q.coeff(1).numer().clone();
        let c = q.coeff(0).numer().clone();
        let discriminant = &b * &b - BigInt::from(4) * &a * &c;
        let two_a = BigInt::from(2) * &a;
        let b_canonical = ((&b % &two_a) + &two_a) % &two_a;
        Ok(QuadraticSignature { quadratic: q, a, discriminant, b_canonical })
    }

    /// Shift-invariant equality.
    pub fn matches(&self, other: &QuadraticSignature) -> bool {
        self.a == other.a
            && self.discriminant == other.discriminant
            && self.b_canonical == other.b_canonical
    }
}

/// Strip every rational linear factor of multiplicity >= 4 from the
/// leading recursion coefficient and classify the remaining quadratic.
pub fn superseeker_signature(r: &DifferenceOperator) -> Result<QuadraticSignature> {
    let lead = r.leading();
    if lead.is_zero() {
        return Err(Error::NoSignature("zero leading coefficient".into()));
    }
    let mut reduced = lead.clone();
    for (root, mult) in lead.rational_roots() {
        if mult >= 4 {
            let factor = Poly::from_coeffs(lead.var(), vec![-&root, Rat::one()]);
            for _ in 0..mult {
                let (q, rem) = reduced.div_rem(&factor);
                debug_assert!(rem.is_zero());
                reduced = q;
            }
        }
    }
    QuadraticSignature::from_quadratic(&reduced).map_err(|_| {
        Error::NoSignature(format!(
            "residual factor of the leading coefficient is not quadratic: {}",
            reduced
        ))
    })
}

/// Signature of a differential operator through its recursion dual.
pub fn superseeker_signature_of_de(l: &ThetaOperator) -> Result<QuadraticSignature> {
    superseeker_signature(&super::convert::de_to_diff(l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Var;

    fn quad(a: i64, b: i64, c: i64) -> Poly {
        Poly::from_ints(Var::N, &[c, b, a])
    }

    #[test]
    fn discriminants_from_table_rows() {
        let s = QuadraticSignature::from_quadratic(&quad(77, -209, 142)).unwrap();
        assert_eq!(s.discriminant, BigInt::from(-55));
        let s = QuadraticSignature::from_quadratic(&quad(288, -936, 773)).unwrap();
        assert_eq!(s.discriminant, BigInt::from(-14400));
        let s = QuadraticSignature::from_quadratic(&quad(44, -88, 43)).unwrap();
        assert_eq!(s.discriminant, BigInt::from(176));
    }

    #[test]
    fn shift_invariance() {
        let q = quad(77, -209, 142);
        let s1 = QuadraticSignature::from_quadratic(&q).unwrap();
        for shift in [-3i64, 1, 2, 5] {
            let s2 =
                QuadraticSignature::from_quadratic(&q.shift_arg(&Rat::from_int(shift))).unwrap();
            assert!(s1.matches(&s2), "shift {}", shift);
        }
    }

    #[test]
    fn strips_fourth_power_factor() {
        // (n+2)^4 * Q0(n+2)
        let q0_shift = quad(77, -209, 142).shift_arg(&Rat::from_int(2));
        let lin = Poly::from_ints(Var::N, &[2, 1]);
        let lead = &(&(&lin * &lin) * &(&lin * &lin)) * &q0_shift;
        let r = DifferenceOperator::new(vec![Poly::one(Var::N), Poly::zero(Var::N), lead]);
        let sig = superseeker_signature(&r).unwrap();
        let table = QuadraticSignature::from_quadratic(&quad(77, -209, 142)).unwrap();
        assert!(sig.matches(&table));
    }

    #[test]
    fn non_quadratic_residual_reports_no_signature() {
        let r = DifferenceOperator::new(vec![
            Poly::one(Var::N),
            Poly::from_ints(Var::N, &[1, 1, 1, 1]),
        ]);
        assert!(matches!(superseeker_signature(&r), Err(Error::NoSignature(_))));
    }
}
