//! Dense univariate polynomials over the rationals.
//!
//! Every polynomial carries a variable tag (`x`, `T` for the Euler
//! operator, or `n` for recursion indices). Mixing variables in a binary
//! operation is a programming error and panics.

use super::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Variable tag for polynomials.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Var {
    X,
    /// The Euler operator x d/dx, spelled `T` in text form.
    Theta,
    N,
}

impl Var {
    pub fn symbol(self) -> &'static str {
        match self {
            Var::X => "x",
            Var::Theta => "T",
            Var::N => "n",
        }
    }
}

/// Dense polynomial, lowest degree first. The zero polynomial stores no
/// coefficients; otherwise the highest stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    var: Var,
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn one(var: Var) -> Self {
        Poly::constant(var, Rat::one())
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        let mut p = Poly { var, coeffs: vec![c] };
        p.trim();
        p
    }

    /// The variable itself.
    pub fn gen(var: Var) -> Self {
        Poly { var, coeffs: vec![Rat::zero(), Rat::one()] }
    }

    pub fn from_coeffs(var: Var, coeffs: Vec<Rat>) -> Self {
        let mut p = Poly { var, coeffs };
        p.trim();
        p
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Poly::from_coeffs(var, coeffs.iter().map(|&c| Rat::from_int(c)).collect())
    }

    /// Monomial c * v^e.
    pub fn monomial(var: Var, c: Rat, e: usize) -> Self {
        if c.is_zero() {
            return Poly::zero(var);
        }
        let mut coeffs = vec![Rat::zero(); e + 1];
        coeffs[e] = c;
        Poly { var, coeffs }
    }

    /// Product of (v + r) over the given roots' negatives, i.e. the monic
    /// polynomial with the given linear shifts.
    pub fn from_linear_factors(var: Var, shifts: &[Rat]) -> Self {
        let mut p = Poly::one(var);
        for s in shifts {
            let factor = Poly::from_coeffs(var, vec![s.clone(), Rat::one()]);
            p = &p * &factor;
        }
        p
    }

    fn trim(&mut self) {
        while let Some(c) = self.coeffs.last() {
            if c.is_zero() {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn var(&self) -> Var {
        self.var
    }

    /// Rebinds the variable tag without touching coefficients.
    pub fn with_var(&self, var: Var) -> Self {
        Poly { var, coeffs: self.coeffs.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> Rat {
        self.coeffs.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Substitution of another polynomial for the variable; the result
    /// carries the inner polynomial's variable tag.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero(inner.var);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(inner.var, c.clone());
        }
        acc
    }

    /// p(v + c): shift of the argument.
    pub fn shift_arg(&self, c: &Rat) -> Poly {
        let shifted = Poly::from_coeffs(self.var, vec![c.clone(), Rat::one()]);
        self.compose(&shifted)
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(e, c)| &Rat::from_int(e as i64) * c)
            .collect();
        Poly::from_coeffs(self.var, coeffs)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.var);
        }
        Poly::from_coeffs(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiply by v^e.
    pub fn mul_var_pow(&self, e: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![Rat::zero(); e];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { var: self.var, coeffs }
    }

    /// Number of leading zero coefficients (valuation at 0); zero
    /// polynomial reports 0.
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    /// Divide by v^k; panics if not divisible.
    pub fn div_var_pow(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        assert!(self.valuation() >= k, "not divisible by {}^{}", self.var.symbol(), k);
        Poly::from_coeffs(self.var, self.coeffs[k..].to_vec())
    }

    /// Euclidean division: self = q * d + r with deg r < deg d.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert_eq!(self.var, d.var, "variable mismatch");
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.degree().unwrap();
        let dl = d.leading().unwrap().clone();
        let mut rem = self.clone();
        let mut q = Poly::zero(self.var);
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let c = rem.leading().unwrap() / &dl;
            let shift = rd - dd;
            let t = Poly::monomial(self.var, c, shift);
            rem = &rem - &(&t * d);
            q = &q + &t;
        }
        (q, rem)
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.var);
        }
        let g = self.gcd(other);
        let (q, r) = self.div_rem(&g);
        debug_assert!(r.is_zero());
        (&q * other).monic()
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Greatest common divisor of all numerators over lcm of denominators:
    /// the positive rational c such that self / c is integral and primitive.
    pub fn content(&self) -> Rat {
        if self.is_zero() {
            return Rat::one();
        }
        let den = Rat::denominator_lcm(&self.coeffs);
        let scaled: Vec<Rat> = self.coeffs.iter().map(|c| c * &Rat::from_bigint(den.clone())).collect();
        let num = Rat::numerator_gcd(&scaled);
        Rat::from_big(num.abs(), den)
    }

    /// All rational roots with multiplicities, found by the rational root
    /// theorem on the primitive integer form.
    pub fn rational_roots(&self) -> Vec<(Rat, usize)> {
        let mut result = Vec::new();
        if self.is_zero() {
            return result;
        }
        let mut p = self.scale(&self.content().recip());
        // x = 0 roots
        let val = p.valuation();
        if val > 0 {
            result.push((Rat::zero(), val));
            p = p.div_var_pow(val);
        }
        if p.degree() == Some(0) {
            return result;
        }
        let lead = p.leading().unwrap().numer().clone();
        let cons = p.coeff(0).numer().clone();
        let mut candidates: Vec<Rat> = Vec::new();
        for pd in divisors(&cons) {
            for qd in divisors(&lead) {
                let r = Rat::from_big(pd.clone(), qd.clone());
                if !candidates.contains(&r) {
                    candidates.push(r.clone());
                }
                let rn = -&r;
                if !candidates.contains(&rn) {
                    candidates.push(rn);
                }
            }
        }
        for cand in candidates {
            let mut mult = 0;
            while p.eval(&cand).is_zero() {
                let lin = Poly::from_coeffs(self.var, vec![-&cand, Rat::one()]);
                let (q, r) = p.div_rem(&lin);
                debug_assert!(r.is_zero());
                p = q;
                mult += 1;
            }
            if mult > 0 {
                result.push((cand, mult));
            }
        }
        result
    }
}

/// Positive divisors of |n|; empty for n = 0.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    if n.is_zero() {
        return Vec::new();
    }
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    loop {
        let d2 = &d * &d;
        if d2 > n {
            break;
        }
        if (&n % &d).is_zero() {
            small.push(d.clone());
            if d2 != n {
                large.push(&n / &d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let v = self.var.symbol();
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", sign)?;
            }
            let unit_coeff = mag.is_one() && e > 0;
            if !unit_coeff {
                write!(f, "{}", mag)?;
            }
            if e > 0 {
                if !unit_coeff {
                    write!(f, "*")?;
                }
                write!(f, "{}", v)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::from_coeffs(self.var, coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(&self.coeff(i) - &rhs.coeff(i));
        }
        Poly::from_coeffs(self.var, coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(self.var, coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(Var::X, coeffs)
    }

    #[test]
    fn arithmetic_and_trim() {
        let a = p(&[1, 2, 1]);
        let b = p(&[-1, 0, 1]);
        assert_eq!(&a - &a, Poly::zero(Var::X));
        assert_eq!((&a * &b).degree(), Some(4));
        assert_eq!(p(&[0, 0, 0]).degree(), None);
    }

    #[test]
    fn division_and_gcd() {
        // (x+1)^2 (x-2) and (x+1)(x+3)
        let a = &p(&[1, 2, 1]) * &p(&[-2, 1]);
        let b = &p(&[1, 1]) * &p(&[3, 1]);
        let g = a.gcd(&b);
        assert_eq!(g, p(&[1, 1]));
        let (q, r) = a.div_rem(&b);
        assert!(r.degree().unwrap_or(0) < b.degree().unwrap());
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn shift_and_eval() {
        let q = Poly::from_ints(Var::N, &[142, -209, 77]);
        assert_eq!(q.eval(&Rat::from_int(2)), Rat::from_int(32));
        let shifted = q.shift_arg(&Rat::from_int(2));
        assert_eq!(shifted, Poly::from_ints(Var::N, &[32, 99, 77]));
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // (2x+1)^4 (x-3)
        let f = &Poly::from_linear_factors(Var::X, &[Rat::frac(1, 2)]).scale(&Rat::from_int(2)) // 2x+1
            .clone() * &Poly::one(Var::X);
        let f4 = &(&(&f * &f) * &(&f * &f)) * &p(&[-3, 1]);
        let mut roots = f4.rational_roots();
        roots.sort_by(|a, b| a.0.cmp(&b.0));
        assert_eq!(roots, vec![(Rat::frac(-1, 2), 4), (Rat::from_int(3), 1)]);
    }

    #[test]
    fn content_of_rational_poly() {
        let f = Poly::from_coeffs(Var::X, vec![Rat::frac(3, 2), Rat::frac(9, 4)]);
        assert_eq!(f.content(), Rat::frac(3, 4));
        let prim = f.scale(&f.content().recip());
        assert_eq!(prim, p(&[2, 3]));
    }
}
