//! Fitting a theta-form annihilator to a coefficient sequence by exact
//! nullspace computation.

use crate::error::{Error, Result};
use crate::exact::linalg::Mat;
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::opalg::ThetaOperator;

const GUARD_TERMS: usize = 10;

/// Smallest (order, then degree) operator with nonzero indicial part that
/// annihilates sum seq_n x^n through every available term; None when no
/// operator within the bounds exists.
///
/// Requires len(seq) >= (k_max + 1) (d_max + 1) + 10 so the fit is
/// overdetermined.
pub fn series_annihilator(
    seq: &[Rat],
    k_max: usize,
    d_max: usize,
) -> Result<Option<ThetaOperator>> {
    let needed = (k_max + 1) * (d_max + 1) + GUARD_TERMS;
    if seq.len() < needed {
        return Err(Error::Precondition(format!(
            "series annihilator needs at least {} terms for bounds ({}, {}), got {}",
            needed,
            k_max,
            d_max,
            seq.len()
        )));
    }
    for k in 1..=k_max {
        for d in 1..=d_max {
            if let Some(op) = try_fit(seq, k, d) {
                return Ok(Some(op));
            }
        }
    }
    Ok(None)
}

/// One (k, d) fit: unknowns c_{i,j} for P_i = sum_j c_{i,j} theta^j; the
/// x^m coefficient of L y gives sum_i P_i(m - i) seq_{m-i} = 0.
fn try_fit(seq: &[Rat], k: usize, d: usize) -> Option<ThetaOperator> {
    let cols = (d + 1) * (k + 1);
    let rows: Vec<Vec<Rat>> = (0..seq.len())
        .map(|m| {
            let mut row = vec![Rat::zero(); cols];
            for i in 0..=d.min(m) {
                let n = (m - i) as i64;
                let s = &seq[m - i];
                if s.is_zero() {
                    continue;
                }
                let mut npow = Rat::one();
                for j in 0..=k {
                    row[i * (k + 1) + j] = &npow * s;
                    npow = &npow * &Rat::from_int(n);
                }
            }
            row
        })
        .collect();
    let basis = Mat::from_rows(rows).nullspace();
    let candidate = basis.into_iter().find(|v| {
        // nonzero indicial block
        v[..k + 1].iter().any(|c| !c.is_zero())
    })?;
    let polys: Vec<Poly> = (0..=d)
        .map(|i| Poly::from_coeffs(Var::Theta, candidate[i * (k + 1)..(i + 1) * (k + 1)].to_vec()))
        .collect();
    let op = ThetaOperator::new(polys);
    // The nullspace search can return an operator of smaller true order
    // than k when a lower fit also embeds at this size; accept only exact
    // size so the (k, d) ordering stays meaningful.
    if op.order() == k {
        Some(op)
    } else {
        None
    }
}
