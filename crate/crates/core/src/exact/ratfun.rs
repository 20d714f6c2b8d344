//! Rational functions: quotients of polynomials, kept reduced with a
//! monic denominator.

use super::poly::{Poly, Var};
use super::rat::Rat;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct RatFun {
    num: Poly,
    den: Poly,
}

impl RatFun {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        assert_eq!(num.var(), den.var(), "variable mismatch");
        let mut r = RatFun { num, den };
        r.reduce();
        r
    }

    pub fn zero(var: Var) -> Self {
        RatFun { num: Poly::zero(var), den: Poly::one(var) }
    }

    pub fn one(var: Var) -> Self {
        RatFun { num: Poly::one(var), den: Poly::one(var) }
    }

    pub fn from_poly(p: Poly) -> Self {
        let var = p.var();
        RatFun { num: p, den: Poly::one(var) }
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        RatFun::from_poly(Poly::constant(var, c))
    }

    /// c / v^k, handy for the ubiquitous 1/x powers.
    pub fn var_pow_inv(var: Var, c: Rat, k: usize) -> Self {
        RatFun { num: Poly::constant(var, c), den: Poly::monomial(var, Rat::one(), k) }
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one(self.den.var());
            return;
        }
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) {
            let (nq, nr) = self.num.div_rem(&g);
            let (dq, dr) = self.den.div_rem(&g);
            debug_assert!(nr.is_zero() && dr.is_zero());
            self.num = nq;
            self.den = dq;
        }
        let lead = self.den.leading().unwrap().clone();
        if !lead.is_one() {
            self.den = self.den.scale(&lead.recip());
            self.num = self.num.scale(&lead.recip());
        }
    }

    pub fn var(&self) -> Var {
        self.num.var()
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_poly(&self) -> Option<&Poly> {
        if self.den.degree() == Some(0) {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn derivative(&self) -> RatFun {
        let n = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        let d = &self.den * &self.den;
        RatFun::new(n, d)
    }

    pub fn recip(&self) -> RatFun {
        assert!(!self.is_zero(), "division by zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Rat) -> RatFun {
        RatFun { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn pow(&self, e: u32) -> RatFun {
        let mut acc = RatFun::one(self.var());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Valuation at the origin: ord_0(num) - ord_0(den). Zero input
    /// reports 0.
    pub fn valuation_at_zero(&self) -> i64 {
        if self.is_zero() {
            return 0;
        }
        self.num.valuation() as i64 - self.den.valuation() as i64
    }

    pub fn eval(&self, at: &Rat) -> Option<Rat> {
        let d = self.den.eval(at);
        if d.is_zero() {
            None
        } else {
            Some(&self.num.eval(at) / &d)
        }
    }
}

impl fmt::Debug for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;
    fn add(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFun {
    type Output = RatFun;
    fn sub(self, rhs: &RatFun) -> RatFun {
        RatFun::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFun {
    type Output = RatFun;
    fn mul(self, rhs: &RatFun) -> RatFun {
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RatFun {
    type Output = RatFun;
    fn div(self, rhs: &RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun { num: -&self.num, den: self.den.clone() }
    }
}
