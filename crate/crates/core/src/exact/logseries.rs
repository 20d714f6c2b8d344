//! Truncated logarithmic Laurent series:
//!
//!   y = x^v * sum_{j=0}^{J} u_j(x) * log(x)^j / j!
//!
//! with power-series parts u_j sharing one truncation order. The global
//! x-power v keeps differentiation closed (d/dx log x = 1/x) without
//! giving up dense exact storage. Coefficients are known exactly for the
//! exponent window x^v ... x^{v + order}.

use super::rat::Rat;
use super::series::PowerSeries;
use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct LogSeries {
    xpow: i64,
    /// parts[j] multiplies log(x)^j / j!; all parts share one order.
    parts: Vec<PowerSeries>,
}

impl LogSeries {
    pub fn from_series(s: PowerSeries) -> Self {
        LogSeries { xpow: 0, parts: vec![s] }
    }

    pub fn from_parts(xpow: i64, parts: Vec<PowerSeries>) -> Self {
        assert!(!parts.is_empty());
        let order = parts[0].order();
        assert!(parts.iter().all(|p| p.order() == order), "parts must share order");
        let mut s = LogSeries { xpow, parts };
        s.trim();
        s
    }

    pub fn zero(order: usize) -> Self {
        LogSeries { xpow: 0, parts: vec![PowerSeries::zero(order)] }
    }

    pub fn one(order: usize) -> Self {
        LogSeries { xpow: 0, parts: vec![PowerSeries::one(order)] }
    }

    /// log(x) as a log-series.
    pub fn log_x(order: usize) -> Self {
        LogSeries { xpow: 0, parts: vec![PowerSeries::zero(order), PowerSeries::one(order)] }
    }

    fn trim(&mut self) {
        while self.parts.len() > 1 && self.parts.last().unwrap().is_zero() {
            self.parts.pop();
        }
    }

    pub fn xpow(&self) -> i64 {
        self.xpow
    }

    pub fn order(&self) -> usize {
        self.parts[0].order()
    }

    /// Largest j with a nonzero part, 0 for log-free series.
    pub fn log_degree(&self) -> usize {
        self.parts.iter().rposition(|p| !p.is_zero()).unwrap_or(0)
    }

    pub fn parts(&self) -> &[PowerSeries] {
        &self.parts
    }

    pub fn part(&self, j: usize) -> PowerSeries {
        self.parts.get(j).cloned().unwrap_or_else(|| PowerSeries::zero(self.order()))
    }

    pub fn is_log_free(&self) -> bool {
        self.parts.iter().skip(1).all(PowerSeries::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(PowerSeries::is_zero)
    }

    /// The log-free content as a plain power series; requires xpow >= 0
    /// (the x-shift is folded into the coefficients) and no log terms.
    pub fn to_power_series(&self) -> Result<PowerSeries> {
        if !self.is_log_free() {
            return Err(Error::Domain("series has logarithmic terms".into()));
        }
        if self.xpow < 0 {
            let val = self.parts[0].valuation();
            match val {
                None => return Ok(PowerSeries::zero(self.order())),
                Some(v) if (v as i64) >= -self.xpow => {}
                _ => {
                    return Err(Error::Domain(format!(
                        "series has a pole of order {} at the origin",
                        -(self.xpow + self.parts[0].valuation().unwrap_or(0) as i64)
                    )))
                }
            }
        }
        // Coefficients are known for exponents xpow ..= xpow + order; a
        // negative x-power therefore shortens the usable window.
        let order = (self.order() as i64 + self.xpow.min(0)) as usize;
        let shifted = PowerSeries::from_fn(order, |e| {
            let src = e as i64 - self.xpow;
            if src < 0 {
                Rat::zero()
            } else {
                self.parts[0].coeff(src as usize)
            }
        });
        Ok(shifted)
    }

    pub fn truncate(&self, order: usize) -> LogSeries {
        LogSeries {
            xpow: self.xpow,
            parts: self.parts.iter().map(|p| p.truncate(order)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> LogSeries {
        LogSeries { xpow: self.xpow, parts: self.parts.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn mul_x_pow(&self, k: i64) -> LogSeries {
        LogSeries { xpow: self.xpow + k, parts: self.parts.clone() }
    }

    /// Multiply by a plain power series (x-power 0).
    pub fn mul_series(&self, s: &PowerSeries) -> LogSeries {
        let mut r = LogSeries {
            xpow: self.xpow,
            parts: self.parts.iter().map(|p| p * s).collect(),
        };
        r.trim();
        r
    }

    /// Divide by a unit power series.
    pub fn div_unit(&self, s: &PowerSeries) -> LogSeries {
        self.mul_series(&s.invert())
    }

    /// Align two series to a common x-power and order for coefficient-wise
    /// combination.
    fn aligned(&self, other: &LogSeries) -> (LogSeries, LogSeries) {
        let v = self.xpow.min(other.xpow);
        let top = (self.xpow + self.order() as i64).min(other.xpow + other.order() as i64);
        let order = (top - v) as usize;
        (self.realign(v, order), other.realign(v, order))
    }

    fn realign(&self, v: i64, order: usize) -> LogSeries {
        let d = (self.xpow - v) as usize;
        let parts = self
            .parts
            .iter()
            .map(|p| {
                PowerSeries::from_fn(order, |e| {
                    if e < d {
                        Rat::zero()
                    } else {
                        p.coeff(e - d)
                    }
                })
            })
            .collect();
        LogSeries { xpow: v, parts }
    }

    /// theta = x d/dx; exact, keeps order and x-power window.
    pub fn theta(&self) -> LogSeries {
        let order = self.order();
        let v = Rat::from_int(self.xpow);
        let mut parts = Vec::with_capacity(self.parts.len());
        for j in 0..self.parts.len() {
            let base = &self.parts[j].scale(&v) + &self.parts[j].theta();
            let carry = if j + 1 < self.parts.len() {
                self.parts[j + 1].clone()
            } else {
                PowerSeries::zero(order)
            };
            parts.push(&base + &carry);
        }
        let mut r = LogSeries { xpow: self.xpow, parts };
        r.trim();
        r
    }

    /// d/dx = x^{-1} theta.
    pub fn derivative(&self) -> LogSeries {
        self.theta().mul_x_pow(-1)
    }

    /// Substitute x -> g(x), where g = x * (unit). log x becomes
    /// log g = log x + log(g/x).
    pub fn compose(&self, g: &PowerSeries) -> LogSeries {
        assert!(
            g.coeff(0).is_zero() && g.coeff(1).is_one(),
            "inner series must be x + O(x^2)"
        );
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        // g = x * unit
        let unit = PowerSeries::from_fn(order, |e| {
            if e + 1 <= order {
                g.coeff(e + 1)
            } else {
                Rat::zero()
            }
        });
        let s = unit.log(); // log(g/x), zero constant term... requires unit(0) = 1
        let composed: Vec<PowerSeries> = self.parts.iter().map(|p| p.compose(&g)).collect();
        // (L + s)^m / m! = sum_t L^t/t! * s^{m-t}/(m-t)!
        let jmax = self.parts.len();
        let mut spow = vec![PowerSeries::one(order)];
        for k in 1..jmax {
            let prev = &spow[k - 1];
            let mut next = prev * &s;
            next = next.scale(&Rat::frac(1, k as i64));
            spow.push(next);
        }
        let mut parts = Vec::with_capacity(jmax);
        for t in 0..jmax {
            let mut acc = PowerSeries::zero(order);
            for m in t..jmax {
                acc = &acc + &(&composed[m] * &spow[m - t]);
            }
            parts.push(acc);
        }
        let unit_pow = unit.pow_i64(self.xpow);
        let mut r = LogSeries { xpow: self.xpow, parts };
        r = r.mul_series(&unit_pow);
        r.trim();
        // log(g/x) and (g/x)^v are exact only to order - 1: the top
        // coefficient would need g one order further.
        r.truncate(order.saturating_sub(1))
    }

    /// Exponent of the first nonzero known coefficient of self, or None
    /// when every known coefficient vanishes.
    pub fn residual_valuation(&self) -> Option<i64> {
        let order = self.order();
        for e in 0..=order {
            if self.parts.iter().any(|p| !p.coeff(e).is_zero()) {
                return Some(self.xpow + e as i64);
            }
        }
        None
    }

    /// True when self equals other for every exponent <= `through`,
    /// comparing only exponents both sides know.
    pub fn agrees_through(&self, other: &LogSeries, through: i64) -> bool {
        let diff = self - other;
        match diff.residual_valuation() {
            None => true,
            Some(v) => v > through,
        }
    }
}

impl fmt::Debug for LogSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{} * [", self.xpow)?;
        for (j, p) in self.parts.iter().enumerate() {
            if j > 0 {
                write!(f, " ; L^{}/{}! ", j, j)?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, "]")
    }
}

impl Add for &LogSeries {
    type Output = LogSeries;
    fn add(self, rhs: &LogSeries) -> LogSeries {
        let (a, b) = self.aligned(rhs);
        let jmax = a.parts.len().max(b.parts.len());
        let mut parts = Vec::with_capacity(jmax);
        for j in 0..jmax {
            parts.push(&a.part(j) + &b.part(j));
        }
        let mut r = LogSeries { xpow: a.xpow, parts };
        r.trim();
        r
    }
}

impl Sub for &LogSeries {
    type Output = LogSeries;
    fn sub(self, rhs: &LogSeries) -> LogSeries {
        self + &(-rhs)
    }
}

impl Neg for &LogSeries {
    type Output = LogSeries;
    fn neg(self) -> LogSeries {
        LogSeries { xpow: self.xpow, parts: self.parts.iter().map(|p| -p).collect() }
    }
}

impl Mul for &LogSeries {
    type Output = LogSeries;
    fn mul(self, rhs: &LogSeries) -> LogSeries {
        let order = self.order().min(rhs.order());
        let ja = self.parts.len();
        let jb = rhs.parts.len();
        let jmax = ja + jb - 1;
        let mut parts = vec![PowerSeries::zero(order); jmax];
        for j in 0..ja {
            if self.parts[j].is_zero() {
                continue;
            }
            for k in 0..jb {
                if rhs.parts[k].is_zero() {
                    continue;
                }
                // L^j/j! * L^k/k! = C(j+k, j) L^{j+k}/(j+k)!
                let c = binomial_rat(j + k, j);
                let prod = (&self.parts[j].truncate(order) * &rhs.parts[k].truncate(order)).scale(&c);
                parts[j + k] = &parts[j + k] + &prod;
            }
        }
        let mut r = LogSeries { xpow: self.xpow + rhs.xpow, parts };
        r.trim();
        r
    }
}

fn binomial_rat(n: usize, k: usize) -> Rat {
    let mut acc = Rat::one();
    for i in 0..k {
        acc = &acc * &Rat::frac((n - i) as i64, (i + 1) as i64);
    }
    acc
}

/// Wronskian determinant W(s_1, ..., s_p) = det(d^i/dx^i s_j) computed in
/// log-series arithmetic via memoized Laplace expansion.
pub fn log_wronskian(solutions: &[LogSeries]) -> Result<LogSeries> {
    let p = solutions.len();
    if p == 0 {
        return Err(Error::Precondition("wronskian of an empty list".into()));
    }
    let order = solutions[0].order();
    if solutions.iter().any(|s| s.order() != order) {
        return Err(Error::Precondition(
            "wronskian inputs must share one truncation order".into(),
        ));
    }
    // rows[i][j] = d^i/dx^i of solution j
    let mut rows: Vec<Vec<LogSeries>> = vec![solutions.to_vec()];
    for i in 1..p {
        let prev = &rows[i - 1];
        rows.push(prev.iter().map(LogSeries::derivative).collect());
    }
    let full_mask: u32 = (1 << p) - 1;
    let mut memo: HashMap<u32, LogSeries> = HashMap::new();
    Ok(det_minor(&rows, full_mask, p, order, &mut memo))
}

/// Determinant of the minor using the first `k` rows and the columns in
/// `mask`, expanding along row k-1.
fn det_minor(
    rows: &[Vec<LogSeries>],
    mask: u32,
    k: usize,
    order: usize,
    memo: &mut HashMap<u32, LogSeries>,
) -> LogSeries {
    if k == 0 {
        return LogSeries::one(order);
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let mut acc: Option<LogSeries> = None;
    let mut pos = 0usize;
    for c in 0..rows[0].len() {
        if mask & (1 << c) == 0 {
            continue;
        }
        let sub = det_minor(rows, mask & !(1 << c), k - 1, order, memo);
        let mut term = &rows[k - 1][c] * &sub;
        if (k - 1 + pos) % 2 == 1 {
            term = -&term;
        }
        acc = Some(match acc {
            None => term,
            Some(a) => &a + &term,
        });
        pos += 1;
    }
    let det = acc.unwrap();
    memo.insert(mask, det.clone());
    det
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wronskian_of_single_solution_is_itself() {
        let y = LogSeries::log_x(8);
        assert_eq!(log_wronskian(&[y.clone()]).unwrap(), y);
    }

    #[test]
    fn wronskian_of_one_and_log() {
        // W(1, log x) = 1/x
        let one = LogSeries::one(8);
        let l = LogSeries::log_x(8);
        let w = log_wronskian(&[one, l]).unwrap();
        let expect = LogSeries::one(8).mul_x_pow(-1);
        assert_eq!((&w - &expect).residual_valuation(), None);
    }

    #[test]
    fn wronskian_is_alternating() {
        let a = LogSeries::from_series(PowerSeries::from_fn(8, |e| Rat::from_int(1 + e as i64)));
        let b = LogSeries::log_x(8);
        let w1 = log_wronskian(&[a.clone(), b.clone()]).unwrap();
        let w2 = log_wronskian(&[b.clone(), a.clone()]).unwrap();
        assert_eq!((&w1 + &w2).residual_valuation(), None);
        let wr = log_wronskian(&[a.clone(), a]).unwrap();
        assert_eq!(wr.residual_valuation(), None);
    }

    #[test]
    fn derivative_of_log_is_inverse_x() {
        let l = LogSeries::log_x(6);
        let d = l.derivative();
        let expect = LogSeries::one(6).mul_x_pow(-1);
        assert_eq!((&d - &expect).residual_valuation(), None);
    }

    #[test]
    fn mul_tracks_log_factorial_normalization() {
        // (L) * (L) = 2 * L^2/2!
        let l = LogSeries::log_x(5);
        let sq = &l * &l;
        assert_eq!(sq.part(2), PowerSeries::constant(Rat::from_int(2), 5));
    }

    #[test]
    fn compose_with_identity_is_identity() {
        let y = LogSeries::from_parts(
            -1,
            vec![
                PowerSeries::from_fn(7, |e| Rat::from_int(e as i64 + 2)),
                PowerSeries::one(7),
            ],
        );
        let x = PowerSeries::x(7);
        let c = y.compose(&x);
        assert_eq!((&c - &y).residual_valuation(), None);
    }

    #[test]
    fn theta_on_plain_series_matches_series_theta() {
        let s = PowerSeries::from_fn(6, |e| Rat::from_int((e * e) as i64 + 1));
        let ls = LogSeries::from_series(s.clone());
        assert_eq!(ls.theta().part(0), s.theta());
    }
}
