//! Tokenizer for the operator grammar.

use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Int(BigInt),
    Sym(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: usize,
}

pub fn tokenize(text: &str, symbols: &[char]) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let pos = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Int(text[start..i].parse::<BigInt>().unwrap()),
                    pos,
                });
                continue;
            }
            c if symbols.contains(&c) => Tok::Sym(c),
            other => {
                return Err(Error::Parse {
                    pos,
                    msg: format!(
                        "unexpected character {:?} (expected a number, {}, an operator, or parentheses)",
                        other,
                        symbols.iter().map(|s| format!("'{}'", s)).collect::<Vec<_>>().join(" or ")
                    ),
                })
            }
        };
        out.push(Token { tok, pos });
        i += 1;
    }
    out.push(Token { tok: Tok::End, pos: bytes.len() });
    Ok(out)
}
