//! Hypergeometric fifth-order operators
//! theta^5 - c x (theta + a_1) ... (theta + a_5) with the balanced
//! parameter pattern, and the closed form of their pullback quartic.

use crate::error::{Error, Result};
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::opalg::ThetaOperator;

/// Parameters of a balanced hypergeometric quintic: a_1 = 1/2,
/// a_2 + a_3 = 1, a_4 + a_5 = 1; alpha = a_2 - 1/2, beta = a_4 - 1/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperQuinticSpec {
    pub a2: Rat,
    pub a4: Rat,
    pub c: Rat,
}

impl HyperQuinticSpec {
    pub fn new(a2: Rat, a4: Rat, c: Rat) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::Domain("c must be nonzero".into()));
        }
        Ok(HyperQuinticSpec { a2, a4, c })
    }

    pub fn alpha(&self) -> Rat {
        &self.a2 - &Rat::frac(1, 2)
    }

    pub fn beta(&self) -> Rat {
        &self.a4 - &Rat::frac(1, 2)
    }

    pub fn parameters(&self) -> [Rat; 5] {
        [
            Rat::frac(1, 2),
            self.a2.clone(),
            &Rat::one() - &self.a2,
            self.a4.clone(),
            &Rat::one() - &self.a4,
        ]
    }
}

/// theta^5 - c x prod (theta + a_j), canonical.
pub fn hypergeometric_quintic(spec: &HyperQuinticSpec) -> ThetaOperator {
    let prod = Poly::from_linear_factors(Var::Theta, &spec.parameters());
    ThetaOperator::new(vec![
        Poly::monomial(Var::Theta, Rat::one(), 5),
        prod.scale(&(-&spec.c)),
    ])
}

/// The closed form of the pullback quartic:
///   theta^4
///   - c x { 2 (theta+1/2)^4 + 1/2 (7/2 - alpha^2 - beta^2) (theta+1/2)^2
///           + 1/16 - 1/4 (alpha^2 + 1/4)(beta^2 + 1/4) }
///   + c^2 x^2 (theta + 1 +- (alpha +- beta)/2)   [all four sign choices]
pub fn pullback_closed_form(alpha: &Rat, beta: &Rat, c: &Rat) -> ThetaOperator {
    let half = Rat::frac(1, 2);
    let quarter = Rat::frac(1, 4);
    let a2 = alpha * alpha;
    let b2 = beta * beta;
    let t_half_sq = Poly::from_linear_factors(Var::Theta, &vec![half.clone(); 2]);
    let t_half_4 = &t_half_sq * &t_half_sq;
    let mid = &(&Rat::frac(7, 2) - &a2) - &b2;
    let constant = &Rat::frac(1, 16)
        - &(&quarter * &(&(&a2 + &quarter) * &(&b2 + &quarter)));
    let bracket = &(&t_half_4.scale(&Rat::from_int(2)) + &t_half_sq.scale(&(&half * &mid)))
        + &Poly::constant(Var::Theta, constant);
    let sum_half = &(alpha + beta) / &Rat::from_int(2);
    let diff_half = &(alpha - beta) / &Rat::from_int(2);
    let shifts = [
        &Rat::one() + &sum_half,
        &Rat::one() - &sum_half,
        &Rat::one() + &diff_half,
        &Rat::one() - &diff_half,
    ];
    let quartic = Poly::from_linear_factors(Var::Theta, &shifts);
    ThetaOperator::new(vec![
        Poly::monomial(Var::Theta, Rat::one(), 4),
        bracket.scale(&(-c)),
        quartic.scale(&(c * c)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cystruct::cy5_check;

    fn spec_tilde3() -> HyperQuinticSpec {
        HyperQuinticSpec::new(Rat::frac(1, 2), Rat::frac(1, 2), Rat::from_int(1024)).unwrap()
    }

    #[test]
    fn tilde3_quintic_canonical_form() {
        let l = hypergeometric_quintic(&spec_tilde3());
        // theta^5 - 32 x (2 theta + 1)^5 after content normalization
        let mut f = Poly::one(Var::Theta);
        for _ in 0..5 {
            f = &f * &Poly::from_ints(Var::Theta, &[1, 2]);
        }
        let expect = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 5),
            f.scale(&Rat::from_int(-32)),
        ]);
        assert_eq!(l, expect);
    }

    #[test]
    fn balanced_quintics_satisfy_cy5() {
        for (a2, a4, c) in [
            (Rat::frac(1, 5), Rat::frac(2, 5), Rat::from_int(12500)),
            (Rat::frac(1, 2), Rat::frac(1, 2), Rat::from_int(1024)),
            (Rat::frac(1, 12), Rat::frac(5, 12), Rat::from_int(11943936)),
        ] {
            let l = hypergeometric_quintic(&HyperQuinticSpec::new(a2, a4, c).unwrap());
            assert!(cy5_check(&l).unwrap());
        }
    }

    #[test]
    fn closed_form_tilde3() {
        let got = pullback_closed_form(&Rat::zero(), &Rat::zero(), &Rat::from_int(1024));
        let expect = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 4),
            Poly::from_ints(Var::Theta, &[624, 2816, 4864, 4096, 2048]).scale(&Rat::from_int(-1)),
            Poly::from_linear_factors(Var::Theta, &vec![Rat::one(); 4])
                .scale(&Rat::from_int(1 << 20)),
        ]);
        assert_eq!(got, expect);
    }
}
