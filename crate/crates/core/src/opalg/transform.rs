//! Gauge transformation of a fourth-order monic operator: conjugation by
//! a factor f with logarithmic derivative r = f'/f, so that the new
//! operator annihilates f * y whenever the old one annihilates y.

use super::monic::MonicOperator;
use crate::error::{Error, Result};
use crate::exact::rat::Rat;
use crate::exact::ratfun::RatFun;

/// Derivative ratios of f in terms of r = f'/f:
///   f''/f  = r' + r^2
///   f'''/f = r'' + 3 r r' + r^3
///   f''''/f = r''' + 4 r r'' + 3 (r')^2 + 6 r^2 r' + r^4
pub fn f_ratios(r: &RatFun) -> [RatFun; 4] {
    let r1 = r.derivative();
    let r2 = r1.derivative();
    let r3 = r2.derivative();
    let f1 = r.clone();
    let f2 = &r1 + &(r * r);
    let f3 = &(&r2 + &(&(r * &r1).scale(&Rat::from_int(3))) ) + &r.pow(3);
    let f4 = &(&(&r3 + &(r * &r2).scale(&Rat::from_int(4)))
        + &(&(&r1 * &r1).scale(&Rat::from_int(3)) + &(&(r * r) * &r1).scale(&Rat::from_int(6))))
        + &r.pow(4);
    [f1, f2, f3, f4]
}

/// Transform u = f * y with r = f'/f:
///   c3 = 4 f'/f + a3
///   c2 = 6 f''/f + 3 a3 f'/f + a2
///   c1 = 4 f'''/f + 3 a3 f''/f + 2 a2 f'/f + a1
///   c0 = f''''/f + a3 f'''/f + a2 f''/f + a1 f'/f + a0
pub fn gauge_transform(m: &MonicOperator, r: &RatFun) -> Result<MonicOperator> {
    if m.order() != 4 {
        return Err(Error::Domain(format!(
            "gauge transform is defined for order 4, got order {}",
            m.order()
        )));
    }
    let [f1, f2, f3, f4] = f_ratios(r);
    let a3 = m.coeff(3);
    let a2 = m.coeff(2);
    let a1 = m.coeff(1);
    let a0 = m.coeff(0);
    let c3 = &f1.scale(&Rat::from_int(4)) + &a3;
    let c2 = &(&f2.scale(&Rat::from_int(6)) + &(&a3 * &f1).scale(&Rat::from_int(3))) + &a2;
    let c1 = &(&(&f3.scale(&Rat::from_int(4)) + &(&a3 * &f2).scale(&Rat::from_int(3)))
        + &(&a2 * &f1).scale(&Rat::from_int(2)))
        + &a1;
    let c0 = &(&(&(&f4 + &(&a3 * &f3)) + &(&a2 * &f2)) + &(&a1 * &f1)) + &a0;
    Ok(MonicOperator::new(vec![c0, c1, c2, c3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::gauge::gauge_series;
    use crate::exact::poly::{Poly, Var};
    use crate::exact::series::PowerSeries;

    #[test]
    fn zero_ratio_is_identity() {
        use super::super::monic::theta_to_monic;
        use super::super::theta::ThetaOperator;
        let m = theta_to_monic(&ThetaOperator::theta_pow(4));
        let t = gauge_transform(&m, &RatFun::zero(Var::X)).unwrap();
        assert_eq!(t, m);
    }

    #[test]
    fn ratio_identities_as_series() {
        // For polynomial r, f = exp(integral r) satisfies f''/f = r' + r^2
        // and the higher analogues, checked as truncated series.
        let r = RatFun::from_poly(Poly::from_ints(Var::X, &[1, -2, 3]));
        let order = 14;
        let f = gauge_series(&r, &Rat::one(), order).unwrap();
        assert!(f.rho.is_zero());
        let u = f.unit;
        let [_, f2, f3, f4] = f_ratios(&r);
        let ratio = |k: usize| {
            let mut d = u.clone();
            for _ in 0..k {
                d = d.derivative();
            }
            d.div_unit(&u.truncate(order - k))
        };
        let to_series = |rf: &RatFun, ord: usize| {
            let (val, s) = crate::exact::gauge::laurent_expand(rf, ord);
            assert!(val >= 0);
            let mut out = PowerSeries::zero(ord);
            for e in 0..=ord {
                let src = e as i64 - val;
                if src >= 0 && src <= ord as i64 {
                    out.set_coeff(e, s.coeff(src as usize));
                }
            }
            out
        };
        assert_eq!(ratio(2), to_series(&f2, order - 2));
        assert_eq!(ratio(3), to_series(&f3, order - 3));
        assert_eq!(ratio(4), to_series(&f4, order - 4));
    }
}
