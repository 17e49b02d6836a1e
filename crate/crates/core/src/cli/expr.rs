//! The input language for triangles.
//!
//! ```text
//! sum     := term (('+' | '-') term)*
//! term    := power ('*' power)*
//! power   := postfix ('^' INT)?
//! postfix := primary ('.translate' '(' list ')')*
//! primary := NUMBER | TYPE | 'Finf' | 'I' '(' INT ';' list ')' | 'Chap' '(' NUMBER ')'
//!          | 'LS' '(' NUMBER ',' NUMBER ')' | '(' sum ')'
//! ```
//!
//! `TYPE` is `A3`, `C4`, `E6`, `G2`, `I2(7)`, … and juxtaposed names such as
//! `A1H3` mean products. Numbers are integers, `n/d`, or decimals, with an
//! optional leading `-`.

use crate::coxeter::IrreducibleType;
use crate::exactmath::{parse_rational, Rational};
use num_traits::{Signed, Zero};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(Rational),
    Type(IrreducibleType),
    Finf,
    Virtual { l: u32, s: Vec<Rational> },
    Chap(Rational),
    LambdaS(Rational, Rational),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Translate(Box<Expr>, Vec<Rational>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Ident(String),
    Sym(char),
    Translate,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = src.as_bytes();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'.' && i + 1 < b.len() && b[i + 1].is_ascii_digit()) {
                i += 1;
            }
            if i + 1 < b.len() && b[i] == b'/' && b[i + 1].is_ascii_digit() {
                i += 1;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((start, Tok::Num(src[start..i].to_string())));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < b.len() && b[i].is_ascii_alphanumeric() {
                i += 1;
            }
            out.push((start, Tok::Ident(src[start..i].to_string())));
        } else if c == '.' {
            let rest = &src[i + 1..];
            if rest.starts_with("translate") {
                out.push((i, Tok::Translate));
                i += 1 + "translate".len();
            } else {
                return Err(ParseError { offset: i, message: "expected `.translate`".into() });
            }
        } else if "+-*^(),;".contains(c) {
            out.push((i, Tok::Sym(c)));
            i += 1;
        } else {
            return Err(ParseError { offset: i, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), message: message.into() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn peek_sym(&self, c: char) -> bool {
        self.peek() == Some(&Tok::Sym(c))
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek_sym(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.peek_sym('+') {
                self.pos += 1;
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.peek_sym('-') {
                self.pos += 1;
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.power()?;
        while self.peek_sym('*') {
            self.pos += 1;
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
        }
        Ok(lhs)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.postfix()?;
        if !self.peek_sym('^') {
            return Ok(base);
        }
        self.pos += 1;
        let k = self.uint()?;
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn postfix(&mut self) -> Result<Expr, ParseError> {
        let mut e = self.primary()?;
        while self.peek() == Some(&Tok::Translate) {
            self.pos += 1;
            self.expect('(')?;
            let s = self.list()?;
            self.expect(')')?;
            e = Expr::Translate(Box::new(e), s);
        }
        Ok(e)
    }

    fn uint(&mut self) -> Result<u32, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => match n.parse::<u32>() {
                Ok(k) => {
                    self.pos += 1;
                    Ok(k)
                }
                Err(_) => self.err(format!("expected a nonnegative integer, found `{n}`")),
            },
            _ => self.err("expected a nonnegative integer"),
        }
    }

    fn number(&mut self) -> Result<Rational, ParseError> {
        let neg = self.peek_sym('-');
        if neg {
            self.pos += 1;
        }
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                let q = parse_rational(&n).ok_or_else(|| ParseError { offset: self.offset(), message: format!("bad number `{n}`") })?;
                if q.denom().is_zero() {
                    return self.err("zero denominator");
                }
                self.pos += 1;
                Ok(if neg { -q } else { q })
            }
            _ => self.err("expected a number"),
        }
    }

    fn list(&mut self) -> Result<Vec<Rational>, ParseError> {
        let mut v = Vec::new();
        if self.peek_sym(')') {
            return Ok(v);
        }
        v.push(self.number()?);
        while self.peek_sym(',') {
            self.pos += 1;
            v.push(self.number()?);
        }
        Ok(v)
    }

    fn args(&mut self, name: &str, n: usize) -> Result<Vec<Rational>, ParseError> {
        self.expect('(')?;
        let start = self.offset();
        let v = self.list()?;
        if v.len() != n {
            return Err(ParseError { offset: start, message: format!("{name} expects {n} argument(s), got {}", v.len()) });
        }
        self.expect(')')?;
        Ok(v)
    }

    fn primary(&mut self) -> Result<Expr, ParseError> {
        let at = self.offset();
        match self.peek().cloned() {
            Some(Tok::Num(_)) => Ok(Expr::Num(self.number()?)),
            Some(Tok::Sym('-')) => Ok(Expr::Num(self.number()?)),
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.sum()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(id)) => {
                self.pos += 1;
                match id.as_str() {
                    "Finf" => Ok(Expr::Finf),
                    "Chap" => Ok(Expr::Chap(self.args("Chap", 1)?.remove(0))),
                    "LS" => {
                        let mut v = self.args("LS", 2)?;
                        let s = v.pop().unwrap();
                        Ok(Expr::LambdaS(v.pop().unwrap(), s))
                    }
                    "I" => {
                        self.expect('(')?;
                        let l = self.uint()?;
                        let s = if self.peek_sym(';') {
                            self.pos += 1;
                            self.list()?
                        } else {
                            Vec::new()
                        };
                        self.expect(')')?;
                        Ok(Expr::Virtual { l, s })
                    }
                    "I2" => {
                        let p = self.args("I2", 1)?.remove(0);
                        if !p.is_integer() || !p.is_positive() {
                            return Err(ParseError { offset: at, message: format!("I2 expects a positive integer, got {p}") });
                        }
                        let p: u32 = p.to_integer().try_into().map_err(|_| ParseError { offset: at, message: "I2 parameter too large".into() })?;
                        Ok(Expr::Type(IrreducibleType::I2(p)))
                    }
                    _ => type_word(&id).map_err(|message| ParseError { offset: at, message }),
                }
            }
            Some(t) => self.err(format!("unexpected token {}", describe(&t))),
            None => self.err("unexpected end of input"),
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Num(n) => format!("`{n}`"),
        Tok::Ident(i) => format!("`{i}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::Translate => "`.translate`".into(),
    }
}

/// `A3`, or a juxtaposition like `A1H3` read as a product.
fn type_word(id: &str) -> Result<Expr, String> {
    let b = id.as_bytes();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < b.len() {
        let letter = b[i] as char;
        let start = i + 1;
        let mut j = start;
        while j < b.len() && b[j].is_ascii_digit() {
            j += 1;
        }
        if !letter.is_ascii_uppercase() || j == start {
            return Err(format!("unknown type name `{id}`"));
        }
        let n: u32 = id[start..j].parse().map_err(|_| format!("unknown type name `{id}`"))?;
        let t = IrreducibleType::family(letter, n).map_err(|_| format!("unknown type name `{}`", &id[i..j]))?;
        parts.push(Expr::Type(t));
        i = j;
    }
    let mut it = parts.into_iter();
    let first = it.next().ok_or_else(|| format!("unknown type name `{id}`"))?;
    Ok(it.fold(first, |acc, e| Expr::Mul(Box::new(acc), Box::new(e))))
}

pub fn parse(src: &str) -> Result<Expr, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, pos: 0, end: src.len() };
    let e = p.sum()?;
    if p.pos != p.toks.len() {
        let t = describe(&p.toks[p.pos].1);
        return p.err(format!("unexpected token {t}"));
    }
    Ok(e)
}

fn list_text(v: &[Rational]) -> String {
    v.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ")
}

// binding strength: 0 sum, 1 term, 2 power, 3 postfix/primary
fn level(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 0,
        Expr::Mul(..) => 1,
        Expr::Pow(..) => 2,
        Expr::Num(q) if q.is_negative() => 1,
        _ => 3,
    }
}

fn write_at(f: &mut fmt::Formatter<'_>, e: &Expr, min: u8) -> fmt::Result {
    if level(e) < min {
        write!(f, "({e})")
    } else {
        write!(f, "{e}")
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Type(t) => write!(f, "{t}"),
            Expr::Finf => f.write_str("Finf"),
            Expr::Virtual { l, s } if s.is_empty() => write!(f, "I({l})"),
            Expr::Virtual { l, s } => write!(f, "I({l}; {})", list_text(s)),
            Expr::Chap(h) => write!(f, "Chap({h})"),
            Expr::LambdaS(l, s) => write!(f, "LS({l}, {s})"),
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                write_at(f, a, 0)?;
                f.write_str(if matches!(self, Expr::Add(..)) { " + " } else { " - " })?;
                write_at(f, b, 1)
            }
            Expr::Mul(a, b) => {
                write_at(f, a, 1)?;
                f.write_str("*")?;
                write_at(f, b, 2)
            }
            Expr::Pow(a, k) => {
                write_at(f, a, 3)?;
                write!(f, "^{k}")
            }
            Expr::Translate(a, s) => {
                write_at(f, a, 3)?;
                write!(f, ".translate({})", list_text(s))
            }
        }
    }
}
