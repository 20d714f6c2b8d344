//! Rendering operators back to text: the human-readable theta style and
//! the versioned machine record.

use crate::diffops::DifferenceOperator;
use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::exact::rat::Rat;
use crate::opalg::ThetaOperator;
use std::str::FromStr;

/// Output style for operators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Style {
    /// `T^4 + x*(...) + x^2*(...)`
    Theta,
    /// Line-oriented `CYOP 1` record with coefficient rows.
    Machine,
}

impl FromStr for Style {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "theta" | "text" => Ok(Style::Theta),
            "machine" => Ok(Style::Machine),
            other => Err(Error::Domain(format!("unknown style {:?}", other))),
        }
    }
}

fn grade_term(symbol: &str, i: usize, p: &Poly) -> String {
    if i == 0 {
        format!("{}", p)
    } else if i == 1 {
        format!("{}*({})", symbol, p)
    } else {
        format!("{}^{}*({})", symbol, i, p)
    }
}

fn render_graded(symbol: &str, polys: &[Poly]) -> String {
    let mut out = String::new();
    for (i, p) in polys.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&grade_term(symbol, i, p));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Theta-style text; parses back to the same canonical operator.
pub fn render_theta(l: &ThetaOperator) -> String {
    render_graded("x", l.theta_polys())
}

/// Machine record:
/// ```text
/// CYOP 1
/// order k degree d
/// <d+1 lines of k+1 space-separated rationals, constant term first>
/// ```
pub fn render_machine(l: &ThetaOperator) -> String {
    let k = l.order();
    let d = l.degree();
    let mut out = format!("CYOP 1\norder {} degree {}\n", k, d);
    for i in 0..=d {
        let p = l.poly(i);
        let row: Vec<String> = (0..=k).map(|j| p.coeff(j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse a machine record back into an operator.
pub fn parse_machine(text: &str) -> Result<ThetaOperator> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or(Error::Parse { pos: 0, msg: "empty record".into() })?;
    if header.trim() != "CYOP 1" {
        return Err(Error::Parse { pos: 0, msg: "expected 'CYOP 1' header".into() });
    }
    let dims = lines.next().ok_or(Error::Parse { pos: 0, msg: "missing dimensions".into() })?;
    let parts: Vec<&str> = dims.split_whitespace().collect();
    let (k, d) = match parts.as_slice() {
        ["order", k, "degree", d] => (
            k.parse::<usize>().map_err(|_| Error::Parse { pos: 0, msg: "bad order".into() })?,
            d.parse::<usize>().map_err(|_| Error::Parse { pos: 0, msg: "bad degree".into() })?,
        ),
        _ => return Err(Error::Parse { pos: 0, msg: "expected 'order k degree d'".into() }),
    };
    let mut polys = Vec::with_capacity(d + 1);
    for i in 0..=d {
        let line = lines.next().ok_or(Error::Parse {
            pos: 0,
            msg: format!("missing coefficient line {}", i),
        })?;
        let coeffs: Result<Vec<Rat>> = line.split_whitespace().map(Rat::from_str).collect();
        let coeffs = coeffs?;
        if coeffs.len() != k + 1 {
            return Err(Error::Parse {
                pos: 0,
                msg: format!("expected {} coefficients on line {}, got {}", k + 1, i, coeffs.len()),
            });
        }
        polys.push(Poly::from_coeffs(crate::exact::poly::Var::Theta, coeffs));
    }
    Ok(ThetaOperator::new(polys))
}

/// Difference-operator text with coefficients left of the shifts.
pub fn render_diffop(r: &DifferenceOperator) -> String {
    let mut out = String::new();
    for (i, p) in r.coeffs().iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        match i {
            0 => out.push_str(&format!("{}", p)),
            1 => out.push_str(&format!("({})*N", p)),
            _ => out.push_str(&format!("({})*N^{}", p, i)),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Machine record for difference operators (`CYREC 1`).
pub fn render_diffop_machine(r: &DifferenceOperator) -> String {
    let ord = r.order();
    let deg = r.degree();
    let mut out = format!("CYREC 1\norder {} degree {}\n", ord, deg);
    for i in 0..=ord {
        let p = r.coeff(i);
        let row: Vec<String> = (0..=deg).map(|j| p.coeff(j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
