//! Third exterior power: the order-4 annihilator of W(y_i, y_j, y_k),
//! which shares the mirror map and Yukawa coupling of the source
//! operator.

use super::conditions::{cy2_check, monic_a};
use crate::error::{Error, Result};
use crate::exact::linalg::Mat;
use crate::exact::poly::Var;
use crate::exact::rat::Rat;
use crate::exact::ratfun::RatFun;
use crate::frobenius::{indicial_shift, mum_check};
use crate::opalg::{monic_to_theta, MonicOperator, ThetaOperator};

/// Derivation matrix of the triple-wedge coordinates v_R, R a row triple
/// of the fundamental matrix, basis order [012, 013, 023, 123].
fn wedge3_matrix(a: &[RatFun; 4]) -> Vec<Vec<RatFun>> {
    let [a3, a2, a1, a0] = a;
    let z = RatFun::zero(Var::X);
    let one = RatFun::one(Var::X);
    vec![
        vec![z.clone(), one.clone(), z.clone(), z.clone()],
        vec![-a2, -a3, one.clone(), z.clone()],
        vec![a1.clone(), z.clone(), -a3, one],
        vec![-a0, z.clone(), z.clone(), -a3],
    ]
}

fn derive_row(rho: &[RatFun], m: &[Vec<RatFun>]) -> Vec<RatFun> {
    let n = rho.len();
    (0..n)
        .map(|c| {
            let mut acc = rho[c].derivative();
            for cp in 0..n {
                if !rho[cp].is_zero() && !m[cp][c].is_zero() {
                    acc = &acc + &(&rho[cp] * &m[cp][c]);
                }
            }
            acc
        })
        .collect()
}

/// The annihilator of third-order Wronskians of solutions of a MUM CY2
/// operator. The solution-index triple selects which Wronskian the
/// post-checks exercise; the annihilator itself covers every triple, so
/// permuting indices changes the Wronskian's sign but not the result.
pub fn exterior_power_operator(
    l: &ThetaOperator,
    indices: (usize, usize, usize),
) -> Result<ThetaOperator> {
    let (i, j, k) = indices;
    let mut sorted = [i, j, k];
    sorted.sort_unstable();
    if sorted[0] == sorted[1] || sorted[1] == sorted[2] || sorted[2] > 3 {
        return Err(Error::Domain(format!(
            "indices must be three distinct solution indices in 0..4, got {:?}",
            indices
        )));
    }
    if !mum_check(l) {
        return Err(Error::Precondition("exterior power requires a MUM operator".into()));
    }
    if !cy2_check(l)? {
        return Err(Error::Precondition("exterior power requires the CY2 condition".into()));
    }
    let a = monic_a(l)?;
    let m = wedge3_matrix(&a);
    let mut rows = vec![vec![
        RatFun::one(Var::X),
        RatFun::zero(Var::X),
        RatFun::zero(Var::X),
        RatFun::zero(Var::X),
    ]];
    for _ in 0..4 {
        rows.push(derive_row(rows.last().unwrap(), &m));
    }
    let dim = 4;
    let mat = Mat::from_rows(
        (0..dim)
            .map(|c| (0..4).map(|t| rows[t][c].clone()).collect())
            .collect(),
    );
    let rhs: Vec<RatFun> = (0..dim).map(|c| -&rows[4][c]).collect();
    let beta = mat
        .solve(&rhs)
        .ok_or_else(|| Error::Structural("no order-4 relation for the triple wedge".into()))?;
    Ok(monic_to_theta(&MonicOperator::new(beta)))
}

/// Shift an operator with indicial polynomial (theta + s)^k, s an
/// integer, into MUM normal form; returns the normalized operator.
pub fn mum_normalize(l: &ThetaOperator) -> Result<ThetaOperator> {
    let s = indicial_shift(l).ok_or_else(|| {
        Error::Structural("indicial polynomial is not a power of a single linear factor".into())
    })?;
    Ok(l.theta_shift(&(-&s)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::Poly;

    #[test]
    fn exterior_of_theta4() {
        // W(y_0, y_1, y_2) = x^{-3} for theta^4, annihilated by (theta+3)^4.
        let e = exterior_power_operator(&ThetaOperator::theta_pow(4), (0, 1, 2)).unwrap();
        let expect = ThetaOperator::new(vec![Poly::from_linear_factors(
            Var::Theta,
            &vec![Rat::from_int(3); 4],
        )]);
        assert_eq!(e, expect);
        assert_eq!(mum_normalize(&e).unwrap(), ThetaOperator::theta_pow(4));
    }

    #[test]
    fn index_validation() {
        let l = ThetaOperator::theta_pow(4);
        assert!(exterior_power_operator(&l, (0, 0, 1)).is_err());
        assert!(exterior_power_operator(&l, (0, 1, 4)).is_err());
        // permutation gives the same annihilator
        assert_eq!(
            exterior_power_operator(&l, (0, 1, 2)).unwrap(),
            exterior_power_operator(&l, (2, 0, 1)).unwrap()
        );
    }
}
