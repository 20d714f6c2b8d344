//! Frobenius bases at a point of maximal unipotent monodromy.
//!
//! The coefficients A_n(eps) of sum A_n(eps) x^{n+eps} are computed as
//! truncated polynomials mod eps^k from the recursion
//! sum_i P_i(n - i + eps) A_{n-i}(eps) = 0 with A_0 = 1; the solution
//! y_j collects the eps^j coefficient, expanded into log powers.

use crate::error::{Error, Result};
use crate::exact::logseries::LogSeries;
use crate::exact::poly::Poly;
use crate::exact::rat::Rat;
use crate::exact::series::PowerSeries;
use crate::opalg::ThetaOperator;

/// True iff the indicial polynomial is a scalar multiple of theta^k, so
/// that all local exponents at the origin are zero.
pub fn mum_check(l: &ThetaOperator) -> bool {
    if l.is_zero() {
        return false;
    }
    let p0 = l.indicial();
    match p0.degree() {
        Some(k) if k == l.order() => (0..k).all(|j| p0.coeff(j).is_zero()),
        _ => false,
    }
}

/// If the indicial polynomial is a scalar multiple of (theta + s)^k for a
/// rational s, return s; MUM operators report 0.
pub fn indicial_shift(l: &ThetaOperator) -> Option<Rat> {
    let p0 = l.indicial();
    let k = p0.degree()?;
    if k != l.order() || k == 0 {
        return None;
    }
    let lead = p0.leading().unwrap();
    // (theta + s)^k has theta^{k-1} coefficient k*s.
    let s = &(&p0.coeff(k - 1) / lead) / &Rat::from_int(k as i64);
    let model = Poly::from_linear_factors(p0.var(), &vec![s.clone(); k]).scale(lead);
    if model == p0 {
        Some(s)
    } else {
        None
    }
}

/// The Frobenius solutions y_0 ... y_{k-1} of a MUM operator, all exact
/// through x^order.
#[derive(Clone, Debug)]
pub struct FrobeniusBasis {
    pub operator: ThetaOperator,
    pub solutions: Vec<LogSeries>,
    pub order: usize,
}

impl FrobeniusBasis {
    pub fn y(&self, j: usize) -> &LogSeries {
        &self.solutions[j]
    }

    /// The analytic solution as a plain power series.
    pub fn y0_series(&self) -> PowerSeries {
        self.solutions[0].to_power_series().expect("y0 is log-free")
    }
}

/// Polynomials mod eps^k, dense.
#[derive(Clone, Debug)]
struct EpsPoly {
    c: Vec<Rat>,
}

impl EpsPoly {
    fn zero(k: usize) -> Self {
        EpsPoly { c: vec![Rat::zero(); k] }
    }

    fn one(k: usize) -> Self {
        let mut e = EpsPoly::zero(k);
        e.c[0] = Rat::one();
        e
    }

    /// p(n + eps) truncated mod eps^k.
    fn from_poly_at(p: &Poly, n: i64, k: usize) -> Self {
        let shifted = p.shift_arg(&Rat::from_int(n));
        let mut e = EpsPoly::zero(k);
        for j in 0..k {
            e.c[j] = shifted.coeff(j);
        }
        e
    }

    fn add_assign(&mut self, rhs: &EpsPoly) {
        for (a, b) in self.c.iter_mut().zip(&rhs.c) {
            *a += b;
        }
    }

    fn mul(&self, rhs: &EpsPoly) -> EpsPoly {
        let k = self.c.len();
        let mut out = EpsPoly::zero(k);
        for i in 0..k {
            if self.c[i].is_zero() {
                continue;
            }
            for j in 0..k - i {
                if rhs.c[j].is_zero() {
                    continue;
                }
                out.c[i + j] += &(&self.c[i] * &rhs.c[j]);
            }
        }
        out
    }

    /// Multiplicative inverse mod eps^k; requires nonzero constant term.
    fn invert(&self) -> EpsPoly {
        let k = self.c.len();
        assert!(!self.c[0].is_zero(), "eps-polynomial not invertible");
        let c0i = self.c[0].recip();
        let mut inv = EpsPoly::zero(k);
        inv.c[0] = c0i.clone();
        for n in 1..k {
            let mut acc = Rat::zero();
            for t in 1..=n {
                acc += &(&self.c[t] * &inv.c[n - t]);
            }
            inv.c[n] = &(-acc) * &c0i;
        }
        inv
    }

    fn neg(&self) -> EpsPoly {
        EpsPoly { c: self.c.iter().map(|v| -v).collect() }
    }
}

/// Compute the Frobenius basis of a MUM operator through x^order.
pub fn frobenius_basis(l: &ThetaOperator, order: usize) -> Result<FrobeniusBasis> {
    if !mum_check(l) {
        return Err(Error::Precondition(
            "operator is not MUM: indicial polynomial is not a scalar multiple of theta^k".into(),
        ));
    }
    let k = l.order();
    let d = l.degree();
    let mut a: Vec<EpsPoly> = Vec::with_capacity(order + 1);
    a.push(EpsPoly::one(k));
    for n in 1..=order as i64 {
        let mut rhs = EpsPoly::zero(k);
        for i in 1..=d.min(n as usize) {
            let p = l.poly(i);
            if p.is_zero() {
                continue;
            }
            let factor = EpsPoly::from_poly_at(&p, n - i as i64, k);
            rhs.add_assign(&factor.mul(&a[(n - i as i64) as usize]));
        }
        let p0 = EpsPoly::from_poly_at(&l.indicial(), n, k);
        a.push(p0.invert().mul(&rhs.neg()));
    }
    // y_j = sum_{l <= j} (sum_n A_n^{(j-l)} x^n) log^l / l!
    let mut solutions = Vec::with_capacity(k);
    for j in 0..k {
        let mut parts = Vec::with_capacity(j + 1);
        for part_l in 0..=j {
            let coeff_index = j - part_l;
            parts.push(PowerSeries::from_fn(order, |n| a[n].c[coeff_index].clone()));
        }
        solutions.push(LogSeries::from_parts(0, parts));
    }
    Ok(FrobeniusBasis { operator: l.clone(), solutions, order })
}

/// The unique power-series solution y = 1 + O(x) of an operator whose
/// indicial polynomial vanishes at 0 but at no positive integer.
pub fn power_series_solution(l: &ThetaOperator, order: usize) -> Result<PowerSeries> {
    let p0 = l.indicial();
    if !p0.eval(&Rat::zero()).is_zero() {
        return Err(Error::Precondition("indicial polynomial does not vanish at 0".into()));
    }
    let d = l.degree();
    let mut a: Vec<Rat> = Vec::with_capacity(order + 1);
    a.push(Rat::one());
    for n in 1..=order as i64 {
        let p0n = p0.eval(&Rat::from_int(n));
        if p0n.is_zero() {
            return Err(Error::Precondition(format!(
                "indicial polynomial vanishes at n = {}: power-series solution not determined",
                n
            )));
        }
        let mut rhs = Rat::zero();
        for i in 1..=d.min(n as usize) {
            let p = l.poly(i);
            if p.is_zero() {
                continue;
            }
            rhs += &(&p.eval(&Rat::from_int(n - i as i64)) * &a[(n - i as i64) as usize]);
        }
        a.push(&(-rhs) / &p0n);
    }
    Ok(PowerSeries::from_coeffs(a, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Var;

    #[test]
    fn mum_examples() {
        assert!(mum_check(&ThetaOperator::theta_pow(4)));
        // theta (theta-1)^3 + x is not MUM
        let bad = ThetaOperator::new(vec![
            &Poly::gen(Var::Theta) * &Poly::from_linear_factors(Var::Theta, &vec![Rat::from_int(-1); 3]),
            Poly::one(Var::Theta),
        ]);
        assert!(!mum_check(&bad));
    }

    #[test]
    fn theta4_basis_is_pure_logs() {
        let b = frobenius_basis(&ThetaOperator::theta_pow(4), 8).unwrap();
        assert_eq!(b.solutions.len(), 4);
        assert_eq!(b.y0_series(), PowerSeries::one(8));
        // y_2 = log^2 x / 2: top part 1, lower parts 0
        let y2 = b.y(2);
        assert_eq!(y2.part(2), PowerSeries::one(8));
        assert!(y2.part(1).is_zero());
        assert!(y2.part(0).is_zero());
    }

    #[test]
    fn basis_is_annihilated() {
        // The lift of the quartic with alpha = beta = 0, c = 1024.
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 5),
            Poly::from_linear_factors(Var::Theta, &vec![Rat::frac(1, 2); 5])
                .scale(&Rat::from_int(-1024)),
        ]);
        let b = frobenius_basis(&l, 10).unwrap();
        for y in &b.solutions {
            assert_eq!(l.apply(y).residual_valuation(), None);
        }
        // sub-leading parts vanish at x = 0
        for j in 1..5 {
            for part_l in 0..j {
                assert!(b.y(j).part(part_l).coeff(0).is_zero());
            }
        }
    }

    #[test]
    fn indicial_shift_detection() {
        let l = ThetaOperator::theta_pow(4).theta_shift(&Rat::from_int(3));
        assert_eq!(indicial_shift(&l), Some(Rat::from_int(3)));
        assert_eq!(indicial_shift(&ThetaOperator::theta_pow(4)), Some(Rat::zero()));
    }

    #[test]
    fn power_series_solution_of_geometric() {
        let l = ThetaOperator::new(vec![
            Poly::gen(Var::Theta),
            -&Poly::from_ints(Var::Theta, &[1, 1]),
        ]);
        let s = power_series_solution(&l, 9).unwrap();
        assert_eq!(s, PowerSeries::from_fn(9, |_| Rat::one()));
    }
}
