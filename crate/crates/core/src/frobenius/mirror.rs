//! Mirror map, Yukawa coupling, instanton numbers, and the K(q)
//! equivalence relation.

use super::basis::{frobenius_basis, mum_check, FrobeniusBasis};
use crate::error::{Error, Result};
use crate::exact::logseries::{log_wronskian, LogSeries};
use crate::exact::rat::Rat;
use crate::exact::series::PowerSeries;
use crate::opalg::ThetaOperator;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

/// Mirror coordinates and invariants of a MUM operator.
#[derive(Clone, Debug)]
pub struct MirrorData {
    /// q(x)/x, a unit series.
    pub q_over_x: PowerSeries,
    /// Inverse mirror map x(q) as a series in q.
    pub x_of_q: PowerSeries,
    /// Yukawa coupling coefficients c_1 ... c_M with K(q) = 1 + sum c_m q^m.
    pub k_coeffs: Vec<Rat>,
    /// Instanton numbers N_1 ... N_M.
    pub instantons: Vec<Rat>,
    /// Least positive integer c with c * N_k integral for the stored k.
    pub normalizer: BigInt,
}

impl MirrorData {
    /// q(x) = x * q_over_x as a series.
    pub fn q_series(&self) -> PowerSeries {
        let order = self.q_over_x.order();
        let mut q = PowerSeries::zero(order + 1);
        for e in 0..=order {
            q.set_coeff(e + 1, self.q_over_x.coeff(e));
        }
        q
    }
}

fn empty_mirror(order: usize) -> MirrorData {
    MirrorData {
        q_over_x: PowerSeries::one(order),
        x_of_q: PowerSeries::x(order),
        k_coeffs: Vec::new(),
        instantons: Vec::new(),
        normalizer: BigInt::one(),
    }
}

/// q = exp(y1/y0) from a precomputed basis.
pub fn mirror_from_basis(basis: &FrobeniusBasis) -> Result<MirrorData> {
    let order = basis.order;
    let y0 = basis.y0_series();
    // y1 = y0 log x + v with v(0) = 0; sigma = v / y0
    let v = basis.y(1).part(0);
    let sigma = v.div_unit(&y0);
    let q_over_x = sigma.exp();
    let mut md = empty_mirror(order);
    let q = {
        let mut q = PowerSeries::zero(order);
        for e in 1..=order {
            q.set_coeff(e, q_over_x.coeff(e - 1));
        }
        q
    };
    md.q_over_x = q_over_x.truncate(order);
    md.x_of_q = q.reversion()?;
    Ok(md)
}

/// Mirror map of a MUM operator, exact through x^order.
pub fn mirror_map(l: &ThetaOperator, order: usize) -> Result<MirrorData> {
    if !mum_check(l) {
        return Err(Error::Precondition("mirror map requires a MUM operator".into()));
    }
    if l.order() < 2 {
        return Err(Error::Precondition("mirror map requires order >= 2".into()));
    }
    let basis = frobenius_basis(l, order)?;
    mirror_from_basis(&basis)
}

/// The Yukawa coupling K(q) = (q d/dq)^2 (y2/y0) recomposed in q,
/// computed through the Wronskian form x y0^2 W(w0, w1) / w0^3 which
/// stays in power-series arithmetic.
pub fn yukawa_from_basis(basis: &FrobeniusBasis) -> Result<MirrorData> {
    if basis.operator.order() != 4 {
        return Err(Error::Precondition("Yukawa coupling requires an order-4 operator".into()));
    }
    let order = basis.order;
    let y0 = basis.y0_series();
    let w0 = wedge(basis.y(0), basis.y(1))?;
    let w1 = wedge(basis.y(0), basis.y(2))?;
    let u = log_wronskian(&[w0.clone(), w1])?;
    let w0s = w0.to_power_series()?; // unit, w0(0) = 1
    // K in the x coordinate: x y0^2 u / w0^3
    let kx_log = u.mul_series(&(&y0 * &y0)).mul_x_pow(1);
    if !kx_log.is_log_free() {
        return Err(Error::Domain(
            "Yukawa coupling has logarithmic terms; operator is not of CY type".into(),
        ));
    }
    let kx = kx_log.to_power_series()?.div_unit(&w0s.pow_i64(3));
    let mut md = mirror_from_basis(basis)?;
    let kq = kx.compose(&md.x_of_q.truncate(order));
    debug_assert!(kq.coeff(0).is_one(), "K(0) = 1 by Frobenius normalization");
    md.k_coeffs = (1..=kq.order()).map(|m| kq.coeff(m)).collect();
    Ok(md)
}

/// x W(y_i, y_j): the wedge solutions of the lifted operator.
fn wedge(a: &LogSeries, b: &LogSeries) -> Result<LogSeries> {
    Ok(log_wronskian(&[a.clone(), b.clone()])?.mul_x_pow(1))
}

/// Yukawa coupling of a MUM order-4 operator with K-coefficients through
/// q^order.
pub fn yukawa_coupling(l: &ThetaOperator, order: usize) -> Result<MirrorData> {
    if !mum_check(l) {
        return Err(Error::Precondition("Yukawa coupling requires a MUM operator".into()));
    }
    if l.order() != 4 {
        return Err(Error::Precondition("Yukawa coupling requires an order-4 operator".into()));
    }
    // One spare order so that the q-recomposition is exact through q^order.
    let basis = frobenius_basis(l, order + 1)?;
    let mut md = yukawa_from_basis(&basis)?;
    md.k_coeffs.truncate(order);
    Ok(md)
}

/// Moebius function on small integers.
fn moebius(n: u64) -> i64 {
    let mut n = n;
    let mut factors = 0;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            factors += 1;
        }
        p += 1;
    }
    if n > 1 {
        factors += 1;
    }
    if factors % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Instanton numbers from Yukawa coefficients: inverting
/// c_m = sum_{d | m} d^3 N_d gives N_m = m^{-3} sum_{d | m} mu(m/d) c_d.
/// Returns (N_1 ... N_M, normalizer).
pub fn instanton_numbers(k_coeffs: &[Rat]) -> (Vec<Rat>, BigInt) {
    let m_max = k_coeffs.len();
    let mut n = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let mut acc = Rat::zero();
        for d in 1..=m {
            if m % d == 0 {
                let mu = moebius((m / d) as u64);
                if mu != 0 {
                    acc += &(&Rat::from_int(mu) * &k_coeffs[d - 1]);
                }
            }
        }
        n.push(&acc / &Rat::from_int((m * m * m) as i64));
    }
    let mut c = BigInt::one();
    for v in &n {
        c = c.lcm(v.denom());
    }
    (n, c)
}

/// Recompose Yukawa coefficients from instanton numbers (round-trip check).
pub fn k_from_instantons(instantons: &[Rat]) -> Vec<Rat> {
    let m_max = instantons.len();
    (1..=m_max)
        .map(|m| {
            let mut acc = Rat::zero();
            for d in 1..=m {
                if m % d == 0 {
                    acc += &(&Rat::from_int((d * d * d) as i64) * &instantons[d - 1]);
                }
            }
            acc
        })
        .collect()
}

/// Two operators are equivalent when their Yukawa couplings agree; the
/// comparison depth is the number of q-coefficients checked.
pub fn equivalent_k(l1: &ThetaOperator, l2: &ThetaOperator, order: usize) -> Result<bool> {
    let k1 = yukawa_coupling(l1, order)?;
    let k2 = yukawa_coupling(l2, order)?;
    Ok(k1.k_coeffs == k2.k_coeffs)
}

/// Orientation-aware comparison: Some(1) when K's agree exactly, Some(-1)
/// when they agree after q -> -q (the operators differ by x -> -x scale),
/// None otherwise.
pub fn equivalent_k_orientation(
    l1: &ThetaOperator,
    l2: &ThetaOperator,
    order: usize,
) -> Result<Option<i8>> {
    let k1 = yukawa_coupling(l1, order)?;
    let k2 = yukawa_coupling(l2, order)?;
    if k1.k_coeffs == k2.k_coeffs {
        return Ok(Some(1));
    }
    let flipped: Vec<Rat> = k1
        .k_coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { -c } else { c.clone() })
        .collect();
    if flipped == k2.k_coeffs {
        Ok(Some(-1))
    } else {
        Ok(None)
    }
}

/// The transformation (f, g) with y0_B(x) = f(x) * y0_A(g(x)), built from
/// the mirror maps: g = q_A^{-1} compose q_B and f = y0_B / (y0_A of g).
/// Verifies the same relation for y1 before returning.
pub fn equivalence_transformation(
    l_a: &ThetaOperator,
    l_b: &ThetaOperator,
    order: usize,
) -> Result<(PowerSeries, PowerSeries)> {
    if equivalent_k_orientation(l_a, l_b, order.min(12))?.is_none() {
        return Err(Error::Precondition(
            "operators are not K(q)-equivalent (in either orientation); no transformation exists"
                .into(),
        ));
    }
    let basis_a = frobenius_basis(l_a, order)?;
    let basis_b = frobenius_basis(l_b, order)?;
    let ma = mirror_from_basis(&basis_a)?;
    let mb = mirror_from_basis(&basis_b)?;
    let g = ma.x_of_q.compose(&mb.q_series().truncate(order));
    let y0a_of_g = basis_a.y0_series().compose(&g);
    let f = basis_b.y0_series().div_unit(&y0a_of_g);
    // y1 compatibility: y1_B = f * (y1_A of g)
    let y1a_of_g = basis_a.y(1).compose(&g);
    let lhs = basis_b.y(1);
    let rhs = y1a_of_g.mul_series(&f);
    if !(lhs - &rhs).residual_valuation().is_none() {
        return Err(Error::Internal(
            "mirror-map transformation failed the y1 compatibility check".into(),
        ));
    }
    Ok((f, g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta4_mirror_is_trivial() {
        let md = mirror_map(&ThetaOperator::theta_pow(4), 10).unwrap();
        assert_eq!(md.q_over_x, PowerSeries::one(10));
        assert_eq!(md.x_of_q, PowerSeries::x(10));
    }

    #[test]
    fn theta4_yukawa_is_one() {
        let md = yukawa_coupling(&ThetaOperator::theta_pow(4), 8).unwrap();
        assert!(md.k_coeffs.iter().all(Rat::is_zero));
    }

    #[test]
    fn instantons_of_trivial_coupling() {
        let (n, c) = instanton_numbers(&vec![Rat::zero(); 10]);
        assert!(n.iter().all(Rat::is_zero));
        assert_eq!(c, BigInt::one());
    }

    #[test]
    fn first_instanton_equals_first_coefficient() {
        let k = vec![Rat::from_int(575), Rat::from_int(5), Rat::frac(1, 3)];
        let (n, _) = instanton_numbers(&k);
        assert_eq!(n[0], Rat::from_int(575));
        // round trip
        assert_eq!(k_from_instantons(&n), k);
    }

    #[test]
    fn operator_equivalent_to_itself() {
        let l = ThetaOperator::theta_pow(4);
        assert!(equivalent_k(&l, &l, 6).unwrap());
    }

    #[test]
    fn self_transformation_is_identity() {
        use crate::exact::poly::{Poly, Var};
        // tilde-3 quartic
        let l = ThetaOperator::new(vec![
            Poly::monomial(Var::Theta, Rat::one(), 4),
            Poly::from_ints(Var::Theta, &[624, 2816, 4864, 4096, 2048]).scale(&Rat::from_int(-1)),
            Poly::from_linear_factors(Var::Theta, &vec![Rat::one(); 4]).scale(&Rat::from_int(1 << 20)),
        ]);
        let (f, g) = equivalence_transformation(&l, &l, 8).unwrap();
        assert_eq!(f, PowerSeries::one(8));
        assert_eq!(g, PowerSeries::x(8));
    }
}
