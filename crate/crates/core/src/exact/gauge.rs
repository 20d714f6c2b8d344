//! Laurent expansion of rational functions and exponential gauge factors
//! exp(lambda * integral of r), stored as x^rho times a unit series.

use super::logseries::LogSeries;
use super::rat::Rat;
use super::ratfun::RatFun;
use super::series::PowerSeries;
use crate::error::{Error, Result};

/// x^rho * unit(x) with unit(0) = 1 (or unit = 0 for the zero factor).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GaugeSeries {
    pub rho: Rat,
    pub unit: PowerSeries,
}

impl GaugeSeries {
    /// View as a log-series; only integer exponents embed.
    pub fn to_log_series(&self) -> Result<LogSeries> {
        let rho = self.rho.to_i64().ok_or_else(|| {
            Error::Domain(format!("gauge exponent {} is not an integer", self.rho))
        })?;
        Ok(LogSeries::from_series(self.unit.clone()).mul_x_pow(rho))
    }
}

/// Expand a rational function as x^valuation * series with nonzero
/// constant term (or (0, 0) for the zero function). The series carries
/// coefficients for its first `order + 1` exponents.
pub fn laurent_expand(r: &RatFun, order: usize) -> (i64, PowerSeries) {
    if r.is_zero() {
        return (0, PowerSeries::zero(order));
    }
    let nval = r.numerator().valuation();
    let dval = r.denominator().valuation();
    let num = r.numerator().div_var_pow(nval);
    let den = r.denominator().div_var_pow(dval);
    let ns = PowerSeries::from_poly(&num, order);
    let ds = PowerSeries::from_poly(&den, order);
    (nval as i64 - dval as i64, ns.div_unit(&ds))
}

/// exp(lambda * integral r dx) for a rational function r with at worst a
/// simple pole at the origin: rho = lambda * residue, and the unit part
/// integrates the regular remainder termwise.
pub fn gauge_series(r: &RatFun, lambda: &Rat, order: usize) -> Result<GaugeSeries> {
    if r.is_zero() || lambda.is_zero() {
        return Ok(GaugeSeries { rho: Rat::zero(), unit: PowerSeries::one(order) });
    }
    let (val, expansion) = laurent_expand(r, order + 1);
    if val < -1 {
        return Err(Error::UnsupportedSingularity(format!(
            "pole of order {} at the origin (only simple poles are supported)",
            -val
        )));
    }
    // Regular part of r as a series exact to x^{order - 1}; integration
    // then carries it to x^{order}.
    let reg_order = order.max(1) - 1;
    let mut regular = PowerSeries::zero(reg_order);
    let residue;
    if val == -1 {
        residue = expansion.coeff(0);
        for e in 0..=reg_order {
            regular.set_coeff(e, expansion.coeff(e + 1));
        }
    } else {
        residue = Rat::zero();
        for e in 0..=reg_order {
            let src = e as i64 - val;
            if src >= 0 {
                regular.set_coeff(e, expansion.coeff(src as usize));
            }
        }
    }
    let unit = regular.integrate().scale(lambda).truncate(order).exp();
    Ok(GaugeSeries { rho: lambda * &residue, unit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::{Poly, Var};

    fn over_x(c: i64, k: usize) -> RatFun {
        RatFun::var_pow_inv(Var::X, Rat::from_int(c), k)
    }

    #[test]
    fn laurent_of_inverse_x() {
        let r = over_x(1, 1);
        let (val, s) = laurent_expand(&r, 5);
        assert_eq!(val, -1);
        assert_eq!(s, PowerSeries::one(5));
    }

    #[test]
    fn laurent_of_geometric_tail() {
        // x^2/(1-x) -> (2, [1,1,1,...])
        let r = RatFun::new(
            Poly::monomial(Var::X, Rat::one(), 2),
            Poly::from_ints(Var::X, &[1, -1]),
        );
        let (val, s) = laurent_expand(&r, 4);
        assert_eq!(val, 2);
        assert_eq!(s, PowerSeries::from_fn(4, |_| Rat::one()));
    }

    #[test]
    fn gauge_of_simple_pole() {
        // exp(integral 1/x) = x
        let g = gauge_series(&over_x(1, 1), &Rat::one(), 8).unwrap();
        assert_eq!(g.rho, Rat::one());
        assert_eq!(g.unit, PowerSeries::one(8));
    }

    #[test]
    fn gauge_of_theta4_third_coefficient() {
        // a3 of theta^4 is 6/x; exp(-1/2 integral) = x^{-3}
        let g = gauge_series(&over_x(6, 1), &Rat::frac(-1, 2), 8).unwrap();
        assert_eq!(g.rho, Rat::from_int(-3));
        assert_eq!(g.unit, PowerSeries::one(8));
    }

    #[test]
    fn gauge_of_regular_function() {
        // exp(integral 1/(1-x)) = exp(-log(1-x)) = 1/(1-x)
        let r = RatFun::new(Poly::one(Var::X), Poly::from_ints(Var::X, &[1, -1]));
        let g = gauge_series(&r, &Rat::one(), 8).unwrap();
        assert_eq!(g.rho, Rat::zero());
        assert_eq!(g.unit, PowerSeries::from_fn(8, |_| Rat::one()));
    }

    #[test]
    fn double_pole_rejected() {
        assert!(gauge_series(&over_x(1, 2), &Rat::one(), 5).is_err());
    }

    #[test]
    fn log_derivative_recovers_input() {
        // For r with a simple pole, d/dx of gauge_series(r, lambda) divided
        // by itself equals lambda * r: rho = lambda * residue and the unit's
        // logarithmic derivative is the regular part of lambda * r.
        let r = RatFun::new(
            Poly::from_ints(Var::X, &[3, 0, 1]),
            Poly::from_ints(Var::X, &[0, 2, 1]),
        );
        let lambda = Rat::frac(2, 5);
        let order = 10;
        let g = gauge_series(&r, &lambda, order).unwrap();
        let (val, exp) = laurent_expand(&r, order);
        assert_eq!(val, -1);
        assert_eq!(&lambda * &exp.coeff(0), g.rho);
        let unit_logderiv = g.unit.derivative().div_unit(&g.unit.truncate(order - 1));
        let reg = PowerSeries::from_fn(order - 1, |e| exp.coeff(e + 1)).scale(&lambda);
        assert_eq!(&reg - &unit_logderiv, PowerSeries::zero(order - 1));
    }
}
