//! Recursive-descent parser and evaluator for operator text.
//!
//! Grammar (no implicit multiplication, '^' binds tightest, unary minus
//! allowed):
//!   expr   := term (('+' | '-') term)*
//!   term   := factor (('*' | '/') factor)*
//!   factor := '-' factor | primary ('^' INT)?
//!   primary := INT | SYMBOL | '(' expr ')'
//!
//! The same grammar serves the differential algebra (symbols `T`, `x`,
//! with T x = x T + x) and the difference algebra (symbols `n`, `N`,
//! with N n = n N + N). Division is only defined between scalars, so
//! rational literals like 3/10 parse while division by an operator is
//! rejected with a position.

use super::lexer::{tokenize, Tok, Token};
use crate::diffops::DifferenceOperator;
use crate::error::{Error, Result};
use crate::exact::poly::{Poly, Var};
use crate::exact::rat::Rat;
use crate::opalg::theta::weyl_mul_raw;
use crate::opalg::ThetaOperator;
use num_traits::ToPrimitive;

/// Which noncommutative algebra the text denotes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum AlgebraKind {
    /// Polynomials in theta with x-power grading: P(theta) x = x P(theta+1).
    Differential,
    /// Polynomials in n with shift grading: N q(n) = q(n+1) N.
    Difference,
}

impl AlgebraKind {
    fn symbols(self) -> [char; 2] {
        match self {
            AlgebraKind::Differential => ['T', 'x'],
            AlgebraKind::Difference => ['n', 'N'],
        }
    }

    fn poly_var(self) -> Var {
        match self {
            AlgebraKind::Differential => Var::Theta,
            AlgebraKind::Difference => Var::N,
        }
    }
}

/// Ungraded operator value: coefficient polynomials per power of the
/// grading symbol (x or N).
#[derive(Clone, Debug)]
struct Value {
    kind: AlgebraKind,
    coeffs: Vec<Poly>,
}

impl Value {
    fn scalar(kind: AlgebraKind, c: Rat) -> Value {
        Value { kind, coeffs: vec![Poly::constant(kind.poly_var(), c)] }
    }

    fn primary_symbol(kind: AlgebraKind) -> Value {
        Value { kind, coeffs: vec![Poly::gen(kind.poly_var())] }
    }

    fn grading_symbol(kind: AlgebraKind) -> Value {
        let var = kind.poly_var();
        Value { kind, coeffs: vec![Poly::zero(var), Poly::one(var)] }
    }

    fn as_scalar(&self) -> Option<Rat> {
        if self.coeffs.len() > 1 {
            return None;
        }
        match self.coeffs.first() {
            None => Some(Rat::zero()),
            Some(p) => {
                if p.is_zero() {
                    Some(Rat::zero())
                } else if p.degree() == Some(0) {
                    Some(p.coeff(0))
                } else {
                    None
                }
            }
        }
    }

    fn add(&self, rhs: &Value) -> Value {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let var = self.kind.poly_var();
        let get = |v: &Value, i: usize| v.coeffs.get(i).cloned().unwrap_or_else(|| Poly::zero(var));
        Value {
            kind: self.kind,
            coeffs: (0..n).map(|i| &get(self, i) + &get(rhs, i)).collect(),
        }
    }

    fn neg(&self) -> Value {
        Value { kind: self.kind, coeffs: self.coeffs.iter().map(|p| -p).collect() }
    }

    fn mul(&self, rhs: &Value) -> Value {
        let coeffs = match self.kind {
            AlgebraKind::Differential => weyl_mul_raw(&self.coeffs, &rhs.coeffs),
            AlgebraKind::Difference => {
                // (A_i N^i)(B_j N^j) = A_i B_j(n + i) N^{i+j}
                if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
                    Vec::new()
                } else {
                    let var = self.kind.poly_var();
                    let mut out =
                        vec![Poly::zero(var); self.coeffs.len() + rhs.coeffs.len() - 1];
                    for (i, a) in self.coeffs.iter().enumerate() {
                        if a.is_zero() {
                            continue;
                        }
                        for (j, b) in rhs.coeffs.iter().enumerate() {
                            if b.is_zero() {
                                continue;
                            }
                            let shifted = b.shift_arg(&Rat::from_int(i as i64));
                            out[i + j] = &out[i + j] + &(a * &shifted);
                        }
                    }
                    out
                }
            }
        };
        Value { kind: self.kind, coeffs }
    }

    fn pow(&self, e: u32) -> Value {
        let mut acc = Value::scalar(self.kind, Rat::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    kind: AlgebraKind,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at]
    }

    fn advance(&mut self) -> Token {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Value> {
        let mut acc = self.term()?;
        loop {
            match self.peek().tok {
                Tok::Plus => {
                    self.advance();
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.advance();
                    acc = acc.add(&self.term()?.neg());
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Value> {
        let mut acc = self.factor()?;
        loop {
            match self.peek().tok {
                Tok::Star => {
                    self.advance();
                    acc = acc.mul(&self.factor()?);
                }
                Tok::Slash => {
                    let pos = self.peek().pos;
                    self.advance();
                    let rhs = self.factor()?;
                    let num = acc.as_scalar();
                    let den = rhs.as_scalar();
                    match (num, den) {
                        (Some(_), Some(d)) if d.is_zero() => {
                            return Err(Error::Parse { pos, msg: "division by zero".into() })
                        }
                        (Some(n), Some(d)) => {
                            acc = Value::scalar(self.kind, &n / &d);
                        }
                        _ => {
                            return Err(Error::Parse {
                                pos,
                                msg: "division is only defined between rational constants"
                                    .into(),
                            })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Value> {
        if self.peek().tok == Tok::Minus {
            self.advance();
            return Ok(self.factor()?.neg());
        }
        let base = self.primary()?;
        if self.peek().tok == Tok::Caret {
            let pos = self.peek().pos;
            self.advance();
            match self.advance() {
                Token { tok: Tok::Int(e), .. } => {
                    let e = e.to_u32().ok_or(Error::Parse {
                        pos,
                        msg: "exponent does not fit in 32 bits".into(),
                    })?;
                    return Ok(base.pow(e));
                }
                Token { pos, .. } => {
                    return Err(Error::Parse {
                        pos,
                        msg: "expected a non-negative integer exponent after '^'".into(),
                    })
                }
            }
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Value> {
        let [sym1, sym2] = self.kind.symbols();
        let t = self.advance();
        match t.tok {
            Tok::Int(n) => Ok(Value::scalar(self.kind, Rat::from_bigint(n))),
            Tok::Sym(c) if c == sym1 => Ok(Value::primary_symbol(self.kind)),
            Tok::Sym(c) if c == sym2 => Ok(Value::grading_symbol(self.kind)),
            Tok::LParen => {
                let inner = self.expr()?;
                match self.advance() {
                    Token { tok: Tok::RParen, .. } => Ok(inner),
                    Token { pos, .. } => {
                        Err(Error::Parse { pos, msg: "expected ')'".into() })
                    }
                }
            }
            _ => Err(Error::Parse {
                pos: t.pos,
                msg: format!(
                    "expected a number, '{}', '{}', or '(' here",
                    sym1, sym2
                ),
            }),
        }
    }

    fn finish(&mut self) -> Result<()> {
        let t = self.peek();
        if t.tok == Tok::End {
            Ok(())
        } else {
            Err(Error::Parse {
                pos: t.pos,
                msg: "trailing input after a complete expression".into(),
            })
        }
    }
}

fn parse_value(text: &str, kind: AlgebraKind) -> Result<Value> {
    let tokens = tokenize(text, &kind.symbols())?;
    let mut p = Parser { tokens, at: 0, kind };
    let v = p.expr()?;
    p.finish()?;
    Ok(v)
}

/// Parse differential-operator text into canonical theta form.
pub fn parse_operator(text: &str) -> Result<ThetaOperator> {
    let v = parse_value(text, AlgebraKind::Differential)?;
    Ok(ThetaOperator::new(v.coeffs))
}

/// Parse difference-operator text (symbols n and N).
pub fn parse_diffop(text: &str) -> Result<DifferenceOperator> {
    let v = parse_value(text, AlgebraKind::Difference)?;
    Ok(DifferenceOperator::new(v.coeffs).canonical())
}

/// Parse polynomial text in n (no shift symbol allowed).
pub fn parse_n_poly(text: &str) -> Result<Poly> {
    let v = parse_value(text, AlgebraKind::Difference)?;
    if v.coeffs.len() > 1 {
        return Err(Error::Parse {
            pos: 0,
            msg: "expected a polynomial in n without the shift N".into(),
        });
    }
    Ok(v.coeffs.into_iter().next().unwrap_or_else(|| Poly::zero(Var::N)))
}
