//! The double-sum solution identity for the pullback quartic: with
//! y_0 its analytic solution,
//!   (1 - c x) y_0^2 = sum_n (cx)^n sum_k prod_j (a_j)_k (a_j)_{n-k}
//!       / (k!^5 (n-k)!^5) * [1 + (2k - n)(-5 H_k + sum_j psi-diffs)]

use super::hyper5::{pullback_closed_form, HyperQuinticSpec};
use super::sequences::{harmonic, pochhammer, psi_diff};
use crate::cystruct::IdentityReport;
use crate::error::Result;
use crate::exact::rat::Rat;
use crate::exact::series::PowerSeries;
use crate::frobenius::frobenius_basis;

/// Evaluate the double sum exactly to x^order (coefficients of (cx)^n
/// scaled by c^n).
fn double_sum(spec: &HyperQuinticSpec, order: usize) -> PowerSeries {
    let a = spec.parameters();
    let mut coeffs = Vec::with_capacity(order + 1);
    for n in 0..=(order as i64) {
        let mut sum = Rat::zero();
        for k in 0..=n {
            let mut num = Rat::one();
            for aj in &a {
                num = &num * &(&pochhammer(aj, k) * &pochhammer(aj, n - k));
            }
            let mut fact = Rat::one();
            for i in 1..=k {
                fact = &fact * &Rat::from_int(i);
            }
            for i in 1..=(n - k) {
                fact = &fact * &Rat::from_int(i);
            }
            let denom = fact.pow(5);
            let mut bracket_sum = &harmonic(k) * &Rat::from_int(-5);
            for aj in &a {
                bracket_sum = &bracket_sum + &psi_diff(aj, k);
            }
            let bracket = &Rat::one() + &(&Rat::from_int(2 * k - n) * &bracket_sum);
            sum = &sum + &(&(&num / &denom) * &bracket);
        }
        coeffs.push(&sum * &spec.c.pow(n));
    }
    PowerSeries::from_coeffs(coeffs, order)
}

/// Check (1 - c x) y_0^2 = double sum through x^order for the pullback
/// quartic with the given parameters.
pub fn theorem_solution_check(spec: &HyperQuinticSpec, order: usize) -> Result<IdentityReport> {
    let quartic = pullback_closed_form(&spec.alpha(), &spec.beta(), &spec.c);
    let basis = frobenius_basis(&quartic, order)?;
    let y0 = basis.y0_series();
    let one_minus_cx =
        PowerSeries::from_coeffs(vec![Rat::one(), -&spec.c], order);
    let lhs = &(&y0 * &y0) * &one_minus_cx;
    let rhs = double_sum(spec, order);
    let diff = &lhs - &rhs;
    let rv = diff.valuation().map(|v| v as i64);
    Ok(IdentityReport {
        id: "THEOREM-Y0".into(),
        pass: rv.is_none(),
        residual_valuation: rv,
    })
}
