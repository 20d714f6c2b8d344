//! The Wronskian lift: the order-5 side of the pullback correspondence.
//!
//! Two constructions live here. `wedge_square_annihilator` is the direct
//! one: the minimal order-5 operator annihilating x W(y, z) over solution
//! pairs of the given quartic, from the exterior square of its companion
//! system; its b_4 ... b_1 satisfy the a/b bridge with the input's own
//! monic coefficients. `wronskian_lift` is the inverse of the Yang
//! pullback: it recovers b_4 ... b_1 by inverting the pullback formulas,
//! then takes b_0 from the exterior-square nullspace of the associated
//! quartic a_from_b(b). The two differ by a rational gauge twist unless
//! the input is theta^4 itself; only the second closes the round trips
//! with `yang_pullback`.

use super::bridge::a_from_b;
use super::conditions::{cy2_check, monic_a, u_residual};
use super::pullback::pullback_inverse;
use crate::error::{Error, Result};
use crate::exact::linalg::Mat;
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::exact::ratfun::RatFun;
use crate::frobenius::mum_check;
use crate::opalg::{monic_to_theta, theta_to_monic, MonicOperator, ThetaOperator};

/// Derivation matrix of the wedge coordinates e_{ij} = y_i z_j - y_j z_i
/// (indices are derivative orders), basis order
/// [e01, e02, e03, e12, e13, e23]: (e_c)' = sum_{c'} M[c][c'] e_{c'}.
fn wedge2_matrix(a: &[RatFun; 4]) -> Vec<Vec<RatFun>> {
    let [a3, a2, a1, a0] = a;
    let z = RatFun::zero(Var::X);
    let one = RatFun::one(Var::X);
    vec![
        vec![z.clone(), one.clone(), z.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), one.clone(), one.clone(), z.clone(), z.clone()],
        vec![-a1, -a2, -a3, z.clone(), one.clone(), z.clone()],
        vec![z.clone(), z.clone(), z.clone(), z.clone(), one.clone(), z.clone()],
        vec![a0.clone(), z.clone(), z.clone(), -a2, -a3, one],
        vec![z.clone(), a0.clone(), z.clone(), a1.clone(), z.clone(), -a3],
    ]
}

/// rho_{m+1}[c] = rho_m[c]' + sum_{c'} rho_m[c'] M[c'][c].
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

/// The monic order-5 relation satisfied by s = x e01 over the wedge of
/// the order-4 system with the given monic coefficients.
fn wedge_relation(a: &[RatFun; 4]) -> Result<MonicOperator> {
    let m = wedge2_matrix(a);
    let zero = RatFun::zero(Var::X);
    let mut rows = vec![vec![
        RatFun::from_poly(Poly::gen(Var::X)),
        zero.clone(),
        zero.clone(),
        zero.clone(),
        zero.clone(),
        zero,
    ]];
    for _ in 0..5 {
        let next = derive_row(rows.last().unwrap(), &m);
        rows.push(next);
    }
    let dim = 6;
    let mat = Mat::from_rows(
        (0..dim)
            .map(|c| (0..5).map(|t| rows[t][c].clone()).collect())
            .collect(),
    );
    let rhs: Vec<RatFun> = (0..dim).map(|c| -&rows[5][c]).collect();
    let b = mat.solve(&rhs).ok_or_else(|| {
        Error::Structural("no order-5 relation for the wedge of this operator".into())
    })?;
    Ok(MonicOperator::new(b))
}

/// The minimal annihilator of x W(y, z) over solution pairs of `l`
/// itself. Its monic b_4 ... b_1 equal b_from_a of `l`'s coefficients.
pub fn wedge_square_annihilator(l: &ThetaOperator) -> Result<ThetaOperator> {
    if !mum_check(l) {
        return Err(Error::Precondition("wedge square requires a MUM operator".into()));
    }
    if !cy2_check(l)? {
        return Err(Error::Precondition("wedge square requires the CY2 condition".into()));
    }
    let a = monic_a(l)?;
    Ok(monic_to_theta(&wedge_relation(&a)?))
}

/// The order-5 operator whose Yang pullback is `l`: b_4 ... b_1 from the
/// inverted pullback formulas, b_0 from the exterior square of the
/// associated quartic.
pub fn wronskian_lift(l: &ThetaOperator) -> Result<ThetaOperator> {
    if !mum_check(l) {
        return Err(Error::Precondition("wronskian lift requires a MUM operator".into()));
    }
    if !cy2_check(l)? {
        return Err(Error::Precondition("wronskian lift requires the CY2 condition".into()));
    }
    // Undo the theta -> theta - 5/2 shift and read off the c-coefficients.
    let unshifted = l.theta_shift(&Rat::frac(5, 2));
    let m = theta_to_monic(&unshifted);
    let c = [m.coeff(3), m.coeff(2), m.coeff(1), m.coeff(0)];
    let [b4, b3, b2, b1] = pullback_inverse(&c);
    if !u_residual(&b4, &b3, &b2).is_zero() {
        return Err(Error::Structural(
            "recovered coefficients violate the fifth-order condition U = 0".into(),
        ));
    }
    let a = a_from_b(&b4, &b3, &b2, &b1);
    let relation = wedge_relation(&a)?;
    // The wedge of the associated quartic must reproduce the inverted
    // coefficients; only b_0 is new information.
    if relation.coeff(4) != b4
        || relation.coeff(3) != b3
        || relation.coeff(2) != b2
        || relation.coeff(1) != b1
    {
        return Err(Error::Internal(
            "wedge relation disagrees with the inverted pullback coefficients".into(),
        ));
    }
    Ok(monic_to_theta(&relation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cystruct::bridge::b_from_a;

    #[test]
    fn lift_of_theta4_is_theta5() {
        assert_eq!(
            wronskian_lift(&ThetaOperator::theta_pow(4)).unwrap(),
            ThetaOperator::theta_pow(5)
        );
        assert_eq!(
            wedge_square_annihilator(&ThetaOperator::theta_pow(4)).unwrap(),
            ThetaOperator::theta_pow(5)
        );
    }

    #[test]
    fn non_cy_operator_is_rejected() {
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 4),
            Poly::monomial(Var::Theta, Rat::one(), 3),
        ]);
        assert!(wronskian_lift(&l).is_err());
        assert!(wedge_square_annihilator(&l).is_err());
    }

    #[test]
    fn wedge_square_matches_bridge_coefficients() {
        // On a degree-2 CY quartic the direct wedge annihilator carries
        // exactly the b's of the bridge applied to the quartic itself.
        let l = crate::textio::parse_operator(
            "T^4 - 4*x*(2*T+1)^2*(3*T^2+3*T+1) - 16*x^2*(2*T+1)*(2*T+3)*(4*T+3)*(4*T+5)",
        )
        .unwrap();
        let w = wedge_square_annihilator(&l).unwrap();
        let [a3, a2, a1, a0] = monic_a(&l).unwrap();
        let expect = b_from_a(&a3, &a2, &a1, &a0);
        let got = crate::cystruct::monic_b(&w).unwrap();
        assert_eq!(got[0], expect[0]);
        assert_eq!(got[1], expect[1]);
        assert_eq!(got[2], expect[2]);
        assert_eq!(got[3], expect[3]);
        assert!(crate::cystruct::cy5_check(&w).unwrap());
    }
}
