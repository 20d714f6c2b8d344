//! The difference / differential correspondence on generating functions:
//! a recursion sum_i q_i(n) A_{n+i} = 0 (n >= 0, A_{<0} = 0) matches the
//! operator L = sum_i x^{r-i} q_i(theta - i), whose application to
//! sum A_n x^n has support below x^r only.

use super::diffop::DifferenceOperator;
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::exact::series::PowerSeries;
use crate::opalg::ThetaOperator;

/// L = sum_i x^{r-i} q_i(theta - i).
pub fn diff_to_de(r: &DifferenceOperator) -> ThetaOperator {
    if r.is_zero() {
        return ThetaOperator::zero();
    }
    let ord = r.order();
    let mut polys = vec![Poly::zero(Var::Theta); ord + 1];
    for i in 0..=ord {
        let q = r.coeff(i);
        if q.is_zero() {
            continue;
        }
        let shifted = q.shift_arg(&Rat::from_int(-(i as i64))).with_var(Var::Theta);
        polys[ord - i] = shifted;
    }
    ThetaOperator::new(polys)
}

/// Inverse direction: r = degree(L), q_{r-j}(n) = P_j(n + r - j).
pub fn de_to_diff(l: &ThetaOperator) -> DifferenceOperator {
    if l.is_zero() {
        return DifferenceOperator::zero();
    }
    let r = l.degree();
    let mut coeffs = vec![Poly::zero(Var::N); r + 1];
    for j in 0..=r {
        let p = l.poly(j);
        if p.is_zero() {
            continue;
        }
        coeffs[r - j] = p.shift_arg(&Rat::from_int((r - j) as i64)).with_var(Var::N);
    }
    DifferenceOperator::new(coeffs).canonical()
}

/// The boundary coefficients [x^m](L y) for m < r, where y has the given
/// leading coefficients; all higher coefficients vanish when the sequence
/// satisfies the recursion.
pub fn boundary_defect(l: &ThetaOperator, seq: &[Rat]) -> Vec<Rat> {
    let r = l.degree();
    if r == 0 {
        return Vec::new();
    }
    let order = (r - 1).min(seq.len().saturating_sub(1));
    let y = crate::exact::logseries::LogSeries::from_series(PowerSeries::from_coeffs(
        seq[..=order].to_vec(),
        order,
    ));
    let image = l.apply(&y);
    (0..r as i64)
        .map(|m| {
            let e = m - image.xpow();
            if e < 0 || e as usize > image.order() {
                Rat::zero()
            } else {
                image.part(0).coeff(e as usize)
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_recursion_converts() {
        // A_{n+1} = 2 A_n, i.e. N - 2 -> 1 - 2x
        let r = DifferenceOperator::new(vec![
            Poly::from_ints(Var::N, &[-2]),
            Poly::one(Var::N),
        ]);
        let l = diff_to_de(&r);
        let expect = ThetaOperator::new(vec![
            Poly::one(Var::Theta),
            Poly::from_ints(Var::Theta, &[-2]),
        ]);
        assert_eq!(l, expect);
        // boundary: [x^0] (1 - 2x) * 1/(1-2x) = A_0
        let seq: Vec<Rat> = (0..5).map(|k| Rat::from_int(1 << k)).collect();
        assert_eq!(boundary_defect(&l, &seq), vec![Rat::one()]);
        assert_eq!(de_to_diff(&l), r.canonical());
    }

    #[test]
    fn theta_k_converts_to_point_recursion() {
        let l = ThetaOperator::theta_pow(3);
        let r = de_to_diff(&l);
        assert_eq!(r.order(), 0);
        assert_eq!(r.coeff(0), Poly::monomial(Var::N, Rat::one(), 3));
        assert_eq!(diff_to_de(&r), l);
    }

    #[test]
    fn round_trip_random_operator() {
        let l = ThetaOperator::new(vec![
            Poly::from_ints(Var::Theta, &[0, 0, 3, 1]),
            Poly::from_ints(Var::Theta, &[1, -5]),
            Poly::from_ints(Var::Theta, &[7, 0, 2]),
        ]);
        assert_eq!(diff_to_de(&de_to_diff(&l)), l);
    }
}
