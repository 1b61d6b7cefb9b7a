//! Tokenizer and parser for the textual forms accepted by the crate.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! sum   := act (('+' | '-') act)*
//! act   := prod ('.' act)?          right-associative operator application
//! prod  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ('^' '-'? INT)?
//! atom  := INT | IDENT | IDENT '[' raw ']' | '(' sum ')'
//! ```
//!
//! Bracket contents are kept raw (`T[s0.s1]`, `M[1,-2]`, `v[r+1]`) and
//! interpreted by whichever evaluator consumes the tree.

use crate::error::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Sym(String),
    Indexed(String, String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Act(Box<Expr>, Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Bracket(String),
    Op(char),
}

fn tokenize(input: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = input.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |pos: usize, m: &str| Error::Parse {
        input: input.to_string(),
        pos,
        message: m.to_string(),
    };
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let v: BigInt = input[start..i].parse().map_err(|_| err(start, "bad integer"))?;
            out.push((start, Tok::Int(v)));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push((start, Tok::Ident(input[start..i].to_string())));
        } else if c == '[' {
            let start = i;
            let mut depth = 0usize;
            let mut j = i;
            loop {
                if j >= bytes.len() {
                    return Err(err(start, "unclosed '['"));
                }
                match bytes[j] {
                    b'[' => depth += 1,
                    b']' => {
                        depth -= 1;
                        if depth == 0 {
                            break;
                        }
                    }
                    _ => {}
                }
                j += 1;
            }
            out.push((start, Tok::Bracket(input[start + 1..j].trim().to_string())));
            i = j + 1;
        } else if "+-*/^.()".contains(c) {
            out.push((i, Tok::Op(c)));
            i += 1;
        } else {
            return Err(err(i, &format!("unexpected character {c:?}")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    input: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, m: impl Into<String>) -> Error {
        let pos = self
            .toks
            .get(self.pos)
            .map(|t| t.0)
            .unwrap_or(self.input.len());
        Error::Parse {
            input: self.input.to_string(),
            pos,
            message: m.into(),
        }
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn eat_op(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut lhs = self.act()?;
        loop {
            if self.eat_op('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.act()?));
            } else if self.eat_op('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.act()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn act(&mut self) -> Result<Expr> {
        let lhs = self.prod()?;
        if self.eat_op('.') {
            let rhs = self.act()?;
            return Ok(Expr::Act(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn prod(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat_op('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat_op('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_op('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat_op('^') {
            let neg = self.eat_op('-');
            let k = match self.peek() {
                Some(Tok::Int(v)) => i64::try_from(v.clone()).map_err(|_| self.err("exponent too large"))?,
                _ => return Err(self.err("expected integer exponent")),
            };
            self.pos += 1;
            return Ok(Expr::Pow(Box::new(base), if neg { -k } else { k }));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                if let Some(Tok::Bracket(raw)) = self.peek().cloned() {
                    self.pos += 1;
                    return Ok(Expr::Indexed(name, raw));
                }
                Ok(Expr::Sym(name))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat_op(')') {
                    return Err(self.err("expected ')'"));
                }
                Ok(e)
            }
            Some(t) => Err(self.err(format!("unexpected token {t:?}"))),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

/// Parses a complete expression.
pub fn parse(input: &str) -> Result<Expr> {
    let toks = tokenize(input)?;
    let mut p = Parser { input, toks, pos: 0 };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

/// Evaluates a bracket index such as `r+1`, `-2`, or `2*r` given values for
/// the named integers.
pub fn eval_index(raw: &str, vars: &[(&str, i64)]) -> Result<i64> {
    fn go(e: &Expr, vars: &[(&str, i64)]) -> std::result::Result<i64, String> {
        Ok(match e {
            Expr::Int(v) => i64::try_from(v.clone()).map_err(|_| "index too large".to_string())?,
            Expr::Sym(s) => vars
                .iter()
                .find(|(n, _)| n == s)
                .map(|(_, v)| *v)
                .ok_or_else(|| format!("unknown index symbol {s:?}"))?,
            Expr::Neg(a) => -go(a, vars)?,
            Expr::Add(a, b) => go(a, vars)? + go(b, vars)?,
            Expr::Sub(a, b) => go(a, vars)? - go(b, vars)?,
            Expr::Mul(a, b) => go(a, vars)? * go(b, vars)?,
            _ => return Err("unsupported index expression".to_string()),
        })
    }
    let e = parse(raw)?;
    go(&e, vars).map_err(|message| Error::Parse {
        input: raw.to_string(),
        pos: 0,
        message,
    })
}

/// Splits bracket contents on a separator at nesting depth zero.
pub fn split_top(raw: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in raw.char_indices() {
        match c {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(raw[start..i].trim());
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    let last = raw[start..].trim();
    if !(last.is_empty() && out.is_empty()) {
        out.push(last);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse("-q^2*q0 + 1").unwrap();
        let want = Expr::Add(
            Box::new(Expr::Mul(
                Box::new(Expr::Neg(Box::new(Expr::Pow(Box::new(Expr::Sym("q".into())), 2)))),
                Box::new(Expr::Sym("q0".into())),
            )),
            Box::new(Expr::Int(1.into())),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn brackets_are_raw() {
        assert_eq!(
            parse("T[s0.s1]").unwrap(),
            Expr::Indexed("T".into(), "s0.s1".into())
        );
        assert!(matches!(parse("e_r . v[r+1]").unwrap(), Expr::Act(..)));
    }

    #[test]
    fn index_arithmetic() {
        assert_eq!(eval_index("r+1", &[("r", 3)]).unwrap(), 4);
        assert_eq!(eval_index("-2*n", &[("n", 8)]).unwrap(), -16);
        assert_eq!(split_top("1, -2,3", ','), vec!["1", "-2", "3"]);
        assert!(split_top("", ',').is_empty());
    }

    #[test]
    fn errors_carry_position() {
        match parse("q + ") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }
}
