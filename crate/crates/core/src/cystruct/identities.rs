//! The Wronskian identity suite of a fourth-order CY operator: the ten
//! 2x2 identities between the lifted basis w_0 ... w_4 and products of
//! the y_j, the four third-order identities W(y_i, y_j, y_k) = f y_m, the
//! ten third-order and five fourth-order w-identities, the double
//! Wronskian square, and the second-derivative form equivalent to CY2.

use super::conditions::{cy2_check, monic_a};
use crate::error::{Error, Result};
use crate::exact::gauge::gauge_series;
use crate::exact::logseries::{log_wronskian, LogSeries};
use crate::exact::rat::Rat;
use crate::frobenius::{frobenius_basis, mum_check};
use crate::opalg::ThetaOperator;

/// Outcome of one identity check. `residual_valuation` is the exponent of
/// the first nonzero coefficient of LHS - RHS (None when the difference
/// vanishes through the whole verification window).
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub id: String,
    pub pass: bool,
    pub residual_valuation: Option<i64>,
}

fn report(id: &str, lhs: &LogSeries, rhs: &LogSeries, through: i64) -> IdentityReport {
    let diff = lhs - rhs;
    let rv = diff.residual_valuation();
    IdentityReport {
        id: id.to_string(),
        pass: match rv {
            None => true,
            Some(v) => v > through,
        },
        residual_valuation: rv,
    }
}

/// Divide by a log-free Laurent unit series.
fn div_laurent(num: &LogSeries, den: &LogSeries) -> Result<LogSeries> {
    if !den.is_log_free() {
        return Err(Error::Domain("division by a series with logarithmic terms".into()));
    }
    let p = den.part(0);
    let val = p
        .valuation()
        .ok_or_else(|| Error::Domain("division by the zero series".into()))?;
    let order = p.order() - val;
    let unit = crate::exact::series::PowerSeries::from_fn(order, |e| p.coeff(e + val));
    Ok(num
        .mul_x_pow(-(den.xpow() + val as i64))
        .div_unit(&unit))
}

/// The lifted Frobenius basis w_0 ... w_4 of an order-4 basis, with the
/// conventional 1/2 prefactors on w_3 and w_4.
pub fn lifted_basis(y: &[LogSeries]) -> Result<[LogSeries; 5]> {
    let w = |a: &LogSeries, b: &LogSeries| -> Result<LogSeries> {
        Ok(log_wronskian(&[a.clone(), b.clone()])?.mul_x_pow(1))
    };
    let half = Rat::frac(1, 2);
    Ok([
        w(&y[0], &y[1])?,
        w(&y[0], &y[2])?,
        w(&y[0], &y[3])?,
        w(&y[1], &y[3])?.scale(&half),
        w(&y[2], &y[3])?.scale(&half),
    ])
}

struct Suite {
    y: Vec<LogSeries>,
    w: [LogSeries; 5],
    /// f = exp(-1/2 integral a_3) as a log-series (x^rho * unit).
    f: LogSeries,
    through: i64,
    reports: Vec<IdentityReport>,
}

impl Suite {
    fn rhs_products(&self, fpow: u32, xshift: i64, terms: &[(Rat, usize, usize)]) -> LogSeries {
        let order = self.y[0].order();
        let mut acc = LogSeries::zero(order);
        for (c, a, b) in terms {
            acc = &acc + &(&self.y[*a] * &self.y[*b]).scale(c);
        }
        let mut base = LogSeries::one(order);
        for _ in 0..fpow {
            base = &base * &self.f;
        }
        (&acc * &base).mul_x_pow(xshift)
    }

    fn check(&mut self, id: &str, lhs: &LogSeries, rhs: &LogSeries) {
        self.reports.push(report(id, lhs, rhs, self.through));
    }
}

/// Run every identity on a MUM order-4 operator satisfying CY2; the
/// reports compare coefficients through x^order.
pub fn verify_identities(l: &ThetaOperator, order: usize) -> Result<Vec<IdentityReport>> {
    if !mum_check(l) {
        return Err(Error::Precondition("identity suite requires a MUM operator".into()));
    }
    if !cy2_check(l)? {
        return Err(Error::Precondition("identity suite requires the CY2 condition".into()));
    }
    verify_identities_unchecked(l, order)
}

/// The same suite without the CY2 gate, for exhibiting how identities
/// fail on non-CY operators.
pub fn verify_identities_unchecked(
    l: &ThetaOperator,
    order: usize,
) -> Result<Vec<IdentityReport>> {
    if !mum_check(l) {
        return Err(Error::Precondition("identity suite requires a MUM operator".into()));
    }
    if l.order() != 4 {
        return Err(Error::Precondition("identity suite requires order 4".into()));
    }
    // Three derivative losses inside 4x4 Wronskians; keep margin.
    let work = order + 6;
    let basis = frobenius_basis(l, work)?;
    let [a3, _, _, _] = monic_a(l)?;
    let f = gauge_series(&a3, &Rat::frac(-1, 2), work)?.to_log_series()?;
    let y = basis.solutions.clone();
    let w = lifted_basis(&y)?;
    let mut s = Suite { y, w, f, through: order as i64, reports: Vec::new() };

    let half = Rat::frac(1, 2);
    let quarter = Rat::frac(1, 4);
    let one = Rat::one();

    // 2x2 identities: W(w_i, w_j) = x^2 f * (bilinear in y).
    let w2_table: [(usize, usize, Vec<(Rat, usize, usize)>); 10] = [
        (0, 1, vec![(one.clone(), 0, 0)]),
        (0, 2, vec![(one.clone(), 0, 1)]),
        (0, 3, vec![(half.clone(), 1, 1)]),
        (0, 4, vec![(half.clone(), 1, 2), (-&half, 0, 3)]),
        (1, 2, vec![(one.clone(), 0, 2)]),
        (1, 3, vec![(half.clone(), 1, 2), (half.clone(), 0, 3)]),
        (1, 4, vec![(half.clone(), 2, 2)]),
        (2, 3, vec![(half.clone(), 1, 3)]),
        (2, 4, vec![(half.clone(), 2, 3)]),
        (3, 4, vec![(quarter.clone(), 3, 3)]),
    ];
    for (n, (i, j, terms)) in w2_table.iter().enumerate() {
        let lhs = log_wronskian(&[s.w[*i].clone(), s.w[*j].clone()])?;
        let rhs = s.rhs_products(1, 2, terms);
        s.check(&format!("W2-{:02}", n + 1), &lhs, &rhs);
    }

    // W(y_i, y_j, y_k) = f y_m.
    let p3_table: [(usize, usize, usize, usize); 4] =
        [(0, 1, 2, 0), (0, 1, 3, 1), (0, 2, 3, 2), (1, 2, 3, 3)];
    for (n, (i, j, k, m)) in p3_table.iter().enumerate() {
        let lhs = log_wronskian(&[s.y[*i].clone(), s.y[*j].clone(), s.y[*k].clone()])?;
        let rhs = &s.y[*m] * &s.f;
        s.check(&format!("P3-{:02}", n + 1), &lhs, &rhs);
    }

    // 3x3 identities: W(w_i, w_j, w_k) = x^3 f^2 * (bilinear in y).
    let w3_table: [(usize, usize, usize, Vec<(Rat, usize, usize)>); 10] = [
        (0, 1, 2, vec![(one.clone(), 0, 0)]),
        (0, 1, 3, vec![(one.clone(), 0, 1)]),
        (0, 1, 4, vec![(one.clone(), 0, 2)]),
        (0, 2, 3, vec![(half.clone(), 1, 1)]),
        (0, 2, 4, vec![(half.clone(), 0, 3), (half.clone(), 1, 2)]),
        (0, 3, 4, vec![(half.clone(), 1, 3)]),
        (1, 2, 3, vec![(half.clone(), 1, 2), (-&half, 0, 3)]),
        (1, 2, 4, vec![(half.clone(), 2, 2)]),
        (1, 3, 4, vec![(half.clone(), 2, 3)]),
        (2, 3, 4, vec![(quarter.clone(), 3, 3)]),
    ];
    for (n, (i, j, k, terms)) in w3_table.iter().enumerate() {
        let lhs = log_wronskian(&[s.w[*i].clone(), s.w[*j].clone(), s.w[*k].clone()])?;
        let rhs = s.rhs_products(2, 3, terms);
        s.check(&format!("W3-{:02}", n + 1), &lhs, &rhs);
    }

    // 4x4 identities: W of four w's = x^3 f^3 w_m.
    let w4_table: [( [usize; 4], usize); 5] = [
        ([0, 1, 2, 3], 0),
        ([0, 1, 2, 4], 1),
        ([0, 1, 3, 4], 2),
        ([0, 2, 3, 4], 3),
        ([1, 2, 3, 4], 4),
    ];
    for (n, (idx, m)) in w4_table.iter().enumerate() {
        let cols: Vec<LogSeries> = idx.iter().map(|&i| s.w[i].clone()).collect();
        let lhs = log_wronskian(&cols)?;
        let mut rhs = &s.w[*m] * &s.f;
        rhs = &rhs * &s.f;
        rhs = (&rhs * &s.f).mul_x_pow(3);
        s.check(&format!("W4-{:02}", n + 1), &lhs, &rhs);
    }

    // Double Wronskian square: u = W(w_0, w_1) = x^2 y_0^2 f.
    {
        let lhs = log_wronskian(&[s.w[0].clone(), s.w[1].clone()])?;
        let rhs = s.rhs_products(1, 2, &[(one.clone(), 0, 0)]);
        s.check("U-SQUARE", &lhs, &rhs);
    }

    // The two determinant expressions for w_2 agree.
    {
        let alt = log_wronskian(&[s.y[1].clone(), s.y[2].clone()])?.mul_x_pow(1);
        let w2 = s.w[2].clone();
        s.check("W2-ALT", &w2, &alt);
    }

    // CY2 in second-derivative form:
    //   d^2/dt^2 (y_2/y_0) = f / (y_0^2 (dt/dx)^3), t = y_1/y_0.
    {
        let y0s = s.y[0].to_power_series()?;
        let t = s.y[1].div_unit(&y0s);
        let tp = t.derivative(); // Laurent unit x^{-1}(1 + ...)
        let f2 = {
            let big_f = s.y[2].div_unit(&y0s);
            let f1 = div_laurent(&big_f.derivative(), &tp)?;
            div_laurent(&f1.derivative(), &tp)?
        };
        let tp3 = &(&tp * &tp) * &tp;
        let den = tp3.mul_series(&(&y0s * &y0s));
        let rhs = div_laurent(&s.f, &den)?;
        s.check("CY2-EQUIV", &f2, &rhs);
    }

    Ok(s.reports)
}
