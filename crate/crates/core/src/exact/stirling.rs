//! Stirling numbers, defined operationally by the change of basis between
//! powers of theta and x^j d^j/dx^j:
//!
//!   theta^n       = sum_{j=1}^{n} S(n,j) x^j d^j/dx^j
//!   x^n d^n/dx^n  = sum_{j=1}^{n} s(n,j) theta^j
//!
//! S is the second kind, s the (signed) first kind; the two matrices are
//! mutually inverse.

use super::rat::Rat;
use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StirlingKind {
    First,
    Second,
}

/// Stirling number with 1 <= j <= n enforced.
pub fn stirling(kind: StirlingKind, n: u32, j: u32) -> Result<Rat> {
    if j < 1 || j > n {
        return Err(Error::Domain(format!(
            "stirling index out of range: need 1 <= j <= n, got n = {}, j = {}",
            n, j
        )));
    }
    Ok(match kind {
        StirlingKind::Second => Rat::from_bigint(second_kind_row(n)[j as usize].clone().into()),
        StirlingKind::First => Rat::from_bigint(first_kind_row(n)[j as usize].clone().into()),
    })
}

/// Row n of S(n, j) for j = 0..=n, via S(n,j) = S(n-1,j-1) + j S(n-1,j).
pub fn second_kind_row(n: u32) -> Vec<i128> {
    let mut row = vec![1i128];
    for _ in 1..=n {
        let mut next = vec![0i128; row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] += (j as i128) * v;
        }
        row = next;
    }
    row
}

/// Row n of the signed first kind: coefficients of the falling factorial
/// theta (theta - 1) ... (theta - n + 1).
pub fn first_kind_row(n: u32) -> Vec<i128> {
    let mut row = vec![1i128];
    for k in 0..n {
        // multiply by (theta - k)
        let mut next = vec![0i128; row.len() + 1];
        for (j, v) in row.iter().enumerate() {
            next[j + 1] += v;
            next[j] -= (k as i128) * v;
        }
        row = next;
    }
    row
}
