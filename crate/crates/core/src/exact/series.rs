//! Truncated power series with exact rational coefficients.
//!
//! A series stores its coefficients for x^0 ... x^M densely; M is the
//! truncation order. Binary operations truncate to the smaller operand
//! order, differentiation loses one order, integration gains one.

use super::poly::Poly;
use super::rat::Rat;
use crate::error::{Error, Result};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// The series order used when nothing else is requested.
pub const DEFAULT_ORDER: usize = 20;

#[derive(Clone, PartialEq, Eq)]
pub struct PowerSeries {
    /// Exactly order + 1 entries, including trailing zeros.
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn zero(order: usize) -> Self {
        PowerSeries { coeffs: vec![Rat::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn x(order: usize) -> Self {
        let mut s = PowerSeries::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// Build from the given coefficients, padded with zeros to `order`.
    pub fn from_coeffs(coeffs: Vec<Rat>, order: usize) -> Self {
        let mut c = coeffs;
        c.resize(order + 1, Rat::zero());
        PowerSeries { coeffs: c }
    }

    pub fn from_fn(order: usize, f: impl Fn(usize) -> Rat) -> Self {
        PowerSeries { coeffs: (0..=order).map(f).collect() }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        PowerSeries::from_coeffs(p.coeffs().to_vec(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, e: usize) -> Rat {
        self.coeffs.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, e: usize, c: Rat) {
        assert!(e < self.coeffs.len());
        self.coeffs[e] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncate(&self, order: usize) -> PowerSeries {
        let mut c = self.coeffs.clone();
        c.truncate(order + 1);
        c.resize(order + 1, Rat::zero());
        PowerSeries { coeffs: c }
    }

    pub fn scale(&self, c: &Rat) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Coefficient-wise application of theta = x d/dx (no order loss).
    pub fn theta(&self) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(e, c)| &Rat::from_int(e as i64) * c)
                .collect(),
        }
    }

    /// d/dx, exact to one order less.
    pub fn derivative(&self) -> PowerSeries {
        if self.order() == 0 {
            return PowerSeries::zero(0);
        }
        PowerSeries {
            coeffs: (1..self.coeffs.len())
                .map(|e| &Rat::from_int(e as i64) * &self.coeffs[e])
                .collect(),
        }
    }

    /// Antiderivative with constant 0, exact to one order more.
    pub fn integrate(&self) -> PowerSeries {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Rat::zero());
        for (e, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c / &Rat::from_int(e as i64 + 1));
        }
        PowerSeries { coeffs }
    }

    /// Reciprocal; requires a nonzero constant term.
    pub fn invert(&self) -> PowerSeries {
        let c0 = self.coeff(0);
        assert!(!c0.is_zero(), "series inversion requires a unit");
        let order = self.order();
        let mut inv = vec![Rat::zero(); order + 1];
        let c0i = c0.recip();
        inv[0] = c0i.clone();
        for n in 1..=order {
            let mut acc = Rat::zero();
            for k in 1..=n {
                acc += &(&self.coeffs[k] * &inv[n - k]);
            }
            inv[n] = &(-acc) * &c0i;
        }
        PowerSeries { coeffs: inv }
    }

    /// Quotient by a unit series.
    pub fn div_unit(&self, rhs: &PowerSeries) -> PowerSeries {
        self * &rhs.invert()
    }

    /// exp of a series with zero constant term, same order.
    pub fn exp(&self) -> PowerSeries {
        assert!(self.coeff(0).is_zero(), "exp requires zero constant term");
        let order = self.order();
        // E' = u' E, solved coefficient by coefficient.
        let mut e = vec![Rat::zero(); order + 1];
        e[0] = Rat::one();
        for n in 1..=order {
            let mut acc = Rat::zero();
            for k in 1..=n {
                let factor = &Rat::from_int(k as i64) * &self.coeffs[k];
                acc += &(&factor * &e[n - k]);
            }
            e[n] = &acc / &Rat::from_int(n as i64);
        }
        PowerSeries { coeffs: e }
    }

    /// log of a series with constant term 1, same order.
    pub fn log(&self) -> PowerSeries {
        assert!(self.coeff(0).is_one(), "log requires constant term 1");
        // (log u)' = u'/u, integrated termwise.
        let order = self.order();
        if order == 0 {
            return PowerSeries::zero(0);
        }
        self.derivative().div_unit(&self.truncate(order - 1)).integrate()
    }

    /// Substitution self(inner); inner must have zero constant term.
    pub fn compose(&self, inner: &PowerSeries) -> PowerSeries {
        assert!(inner.coeff(0).is_zero(), "composition requires inner valuation >= 1");
        let order = self.order().min(inner.order());
        let mut acc = PowerSeries::zero(order);
        let inner_t = inner.truncate(order);
        for c in self.coeffs.iter().take(order + 1).rev() {
            acc = &acc * &inner_t;
            let v = &acc.coeff(0) + c;
            acc.set_coeff(0, v);
        }
        acc
    }

    /// Power with integer exponent; negative exponents require a unit.
    pub fn pow_i64(&self, e: i64) -> PowerSeries {
        let base = if e < 0 { self.invert() } else { self.clone() };
        let mut acc = PowerSeries::one(self.order());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            k >>= 1;
            if k > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// Compositional inverse of a series with s(0) = 0, s'(0) = 1.
    pub fn reversion(&self) -> Result<PowerSeries> {
        if !self.coeff(0).is_zero() || !self.coeff(1).is_one() {
            return Err(Error::Precondition(
                "series reversion requires s(0) = 0 and s'(0) = 1".into(),
            ));
        }
        if self.order() < 2 {
            return Err(Error::Precondition(
                "series reversion requires truncation order >= 2".into(),
            ));
        }
        let order = self.order();
        // Solve s(g(x)) = x one coefficient at a time: an error of e at x^n
        // in s(g) is cancelled by subtracting e x^n from g.
        let mut g = PowerSeries::x(order);
        for n in 2..=order {
            let composed = self.compose(&g);
            let e = composed.coeff(n);
            if !e.is_zero() {
                let v = &g.coeff(n) - &e;
                g.set_coeff(n, v);
            }
        }
        Ok(g)
    }

    /// First exponent (up to the shared known order) where the two series
    /// differ; None when they agree everywhere both are known.
    pub fn first_difference(&self, other: &PowerSeries) -> Option<usize> {
        let order = self.order().min(other.order());
        (0..=order).find(|&e| self.coeff(e) != other.coeff(e))
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            write!(f, "{}*x^{}", c, e)?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(order, |e| &self.coeffs[e] + &rhs.coeffs[e])
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        PowerSeries::from_fn(order, |e| &self.coeffs[e] - &rhs.coeffs[e])
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] += &(a * b);
            }
        }
        PowerSeries { coeffs }
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

/// Termwise (Hadamard) product of two series.
pub fn hadamard_series(a: &PowerSeries, b: &PowerSeries) -> PowerSeries {
    let order = a.order().min(b.order());
    PowerSeries::from_fn(order, |e| &a.coeff(e) * &b.coeff(e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn geometric(order: usize) -> PowerSeries {
        PowerSeries::from_fn(order, |_| Rat::one())
    }

    #[test]
    fn invert_geometric() {
        // 1/(1-x) * (1-x) = 1
        let g = geometric(10);
        let one_minus_x = PowerSeries::from_coeffs(vec![Rat::one(), Rat::from_int(-1)], 10);
        assert_eq!(&g * &one_minus_x, PowerSeries::one(10));
        assert_eq!(one_minus_x.invert(), g);
    }

    #[test]
    fn exp_log_round_trip() {
        let s = PowerSeries::from_coeffs(
            vec![Rat::zero(), Rat::one(), Rat::frac(1, 3), Rat::frac(-2, 7)],
            12,
        );
        let e = s.exp();
        assert_eq!(e.coeff(0), Rat::one());
        assert_eq!(e.log(), s);
    }

    #[test]
    fn reversion_of_x_plus_x_squared() {
        let mut s = PowerSeries::zero(6);
        s.set_coeff(1, Rat::one());
        s.set_coeff(2, Rat::one());
        let g = s.reversion().unwrap();
        // x - x^2 + 2x^3 - 5x^4 + 14x^5 - 42x^6
        let expect = PowerSeries::from_coeffs(
            vec![
                Rat::zero(),
                Rat::one(),
                Rat::from_int(-1),
                Rat::from_int(2),
                Rat::from_int(-5),
                Rat::from_int(14),
                Rat::from_int(-42),
            ],
            6,
        );
        assert_eq!(g, expect);
        assert_eq!(s.compose(&g), PowerSeries::x(6));
        assert_eq!(g.compose(&s), PowerSeries::x(6));
    }

    #[test]
    fn reversion_rejects_unnormalized() {
        let s = PowerSeries::from_coeffs(vec![Rat::zero(), Rat::from_int(2)], 5);
        assert!(s.reversion().is_err());
    }

    #[test]
    fn order_bookkeeping() {
        let a = PowerSeries::one(10);
        let b = PowerSeries::one(7);
        assert_eq!((&a + &b).order(), 7);
        assert_eq!(a.derivative().order(), 9);
        assert_eq!(a.integrate().order(), 11);
    }
}
