//! Difference operators sum_i q_i(n) N^i with polynomial coefficients,
//! where (N f)(n) = f(n + 1) and N q(n) = q(n + 1) N.

use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use std::fmt;

#[derive(Clone, PartialEq, Eq)]
pub struct DifferenceOperator {
    /// coeffs[i] multiplies N^i; coefficients stand to the left of the
    /// shifts. The top coefficient is nonzero.
    coeffs: Vec<Poly>,
}

impl DifferenceOperator {
    pub fn zero() -> Self {
        DifferenceOperator { coeffs: Vec::new() }
    }

    pub fn new(coeffs: Vec<Poly>) -> Self {
        let mut op = DifferenceOperator { coeffs };
        op.trim();
        op
    }

    fn trim(&mut self) {
        while matches!(self.coeffs.last(), Some(p) if p.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Order r: the highest power of the shift N.
    pub fn order(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Degree: the maximum degree of the q_i.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().filter_map(Poly::degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, i: usize) -> Poly {
        self.coeffs.get(i).cloned().unwrap_or_else(|| Poly::zero(Var::N))
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn leading(&self) -> Poly {
        self.coeff(self.order())
    }

    /// Normalize to integer content-one coefficients with positive leading
    /// coefficient of the first nonzero q_i.
    pub fn canonical(&self) -> DifferenceOperator {
        use num_traits::Signed;
        if self.is_zero() {
            return self.clone();
        }
        let all: Vec<Rat> =
            self.coeffs.iter().flat_map(|p| p.coeffs().iter().cloned()).collect();
        let den = Rat::denominator_lcm(&all);
        let scaled: Vec<Rat> = all.iter().map(|c| c * &Rat::from_bigint(den.clone())).collect();
        let num = Rat::numerator_gcd(&scaled);
        let content = Rat::from_big(num.abs(), den);
        let mut coeffs: Vec<Poly> = self.coeffs.iter().map(|p| p.scale(&content.recip())).collect();
        if let Some(first) = coeffs.iter().find(|p| !p.is_zero()) {
            if first.leading().map(|l| l.is_negative()).unwrap_or(false) {
                for p in &mut coeffs {
                    *p = -&*p;
                }
            }
        }
        DifferenceOperator { coeffs }
    }

    /// Noncommutative product: (A(n) N^i)(B(n) N^j) = A(n) B(n+i) N^{i+j}.
    pub fn mul(&self, rhs: &DifferenceOperator) -> DifferenceOperator {
        if self.is_zero() || rhs.is_zero() {
            return DifferenceOperator::zero();
        }
        let mut out = vec![Poly::zero(Var::N); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let shifted = b.shift_arg(&Rat::from_int(i as i64));
                out[i + j] = &out[i + j] + &(a * &shifted);
            }
        }
        DifferenceOperator::new(out)
    }

    pub fn add(&self, rhs: &DifferenceOperator) -> DifferenceOperator {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DifferenceOperator::new((0..n).map(|i| &self.coeff(i) + &rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &DifferenceOperator) -> DifferenceOperator {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        DifferenceOperator::new((0..n).map(|i| &self.coeff(i) - &rhs.coeff(i)).collect())
    }
}

impl fmt::Debug for DifferenceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for DifferenceOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{}", p)?;
            } else if i == 1 {
                write!(f, "({})*N", p)?;
            } else {
                write!(f, "({})*N^{}", p, i)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shift_rule() {
        // N * n = (n + 1) N
        let n_poly = DifferenceOperator::new(vec![Poly::gen(Var::N)]);
        let shift = DifferenceOperator::new(vec![Poly::zero(Var::N), Poly::one(Var::N)]);
        let prod = shift.mul(&n_poly);
        let expect =
            DifferenceOperator::new(vec![Poly::zero(Var::N), Poly::from_ints(Var::N, &[1, 1])]);
        assert_eq!(prod, expect);
    }
}
