//! Tokens and polynomial expressions shared by every text format: ring
//! specs, presentations, morphisms and the theory DSL.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use thiserror::Error;

use crate::poly::Poly;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at {line}:{col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(&'static str),
    Newline,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::Sym(s) => write!(f, "`{s}`"),
            Tok::Newline => write!(f, "end of line"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub line: usize,
    pub col: usize,
}

// Longest first.
const SYMBOLS: &[&str] = &[
    "=>", "\\/", "/\\", "->", "..", "(", ")", "[", "]", ",", "=", "+", "-", "*", "^", ":", "@",
    "/", ";",
];

/// Splits `src` into tokens. `#` starts a comment running to end of line.
pub fn tokenize(src: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    for (lno, line) in src.lines().enumerate() {
        let line_no = lno + 1;
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            if c == '#' {
                break;
            }
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n: BigInt = text.parse().expect("digits");
                out.push(Token { tok: Tok::Int(n), line: line_no, col });
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                out.push(Token { tok: Tok::Ident(text), line: line_no, col });
                continue;
            }
            let rest: String = chars[i..].iter().take(2).collect();
            let sym = SYMBOLS.iter().find(|s| rest.starts_with(**s));
            match sym {
                Some(s) => {
                    out.push(Token { tok: Tok::Sym(s), line: line_no, col });
                    i += s.chars().count();
                }
                None => {
                    return Err(ParseError::new(line_no, col, format!("unexpected character `{c}`")))
                }
            }
        }
        out.push(Token { tok: Tok::Newline, line: line_no, col: chars.len() + 1 });
    }
    Ok(out)
}

/// Unevaluated polynomial expression. Kept as a tree so that schema
/// templates can mention a cursor variable that is substituted later.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Int(BigInt),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn prec(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Int(n) if n.is_negative() => 0,
            Expr::Int(_) | Expr::Var(_) => 5,
        }
    }

    fn write_prec(&self, min: u8, out: &mut String) {
        let wrap = self.prec() < min;
        if wrap {
            out.push('(');
        }
        match self {
            Expr::Int(n) => out.push_str(&n.to_string()),
            Expr::Var(v) => out.push_str(v),
            Expr::Neg(e) => {
                out.push('-');
                e.write_prec(3, out);
            }
            Expr::Add(a, b) => {
                a.write_prec(1, out);
                out.push('+');
                b.write_prec(2, out);
            }
            Expr::Sub(a, b) => {
                a.write_prec(1, out);
                out.push('-');
                b.write_prec(2, out);
            }
            Expr::Mul(a, b) => {
                a.write_prec(2, out);
                out.push('*');
                b.write_prec(3, out);
            }
            Expr::Pow(a, b) => {
                a.write_prec(5, out);
                out.push('^');
                b.write_prec(5, out);
            }
        }
        if wrap {
            out.push(')');
        }
    }

    /// Identifiers mentioned anywhere in the expression.
    pub fn idents(&self, out: &mut Vec<String>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(v) => {
                if !out.contains(v) {
                    out.push(v.clone())
                }
            }
            Expr::Neg(e) => e.idents(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Pow(a, b) => {
                a.idents(out);
                b.idents(out);
            }
        }
    }

    /// Evaluates to a polynomial; `resolve` maps identifiers to polynomials
    /// (a variable, or a constant for schema cursors).
    pub fn to_poly(
        &self,
        resolve: &mut dyn FnMut(&str) -> Result<Poly, String>,
    ) -> Result<Poly, String> {
        Ok(match self {
            Expr::Int(n) => Poly::constant(n.clone()),
            Expr::Var(v) => resolve(v)?,
            Expr::Neg(e) => -&e.to_poly(resolve)?,
            Expr::Add(a, b) => &a.to_poly(resolve)? + &b.to_poly(resolve)?,
            Expr::Sub(a, b) => &a.to_poly(resolve)? - &b.to_poly(resolve)?,
            Expr::Mul(a, b) => &a.to_poly(resolve)? * &b.to_poly(resolve)?,
            Expr::Pow(a, b) => {
                let base = a.to_poly(resolve)?;
                let e = b.to_poly(resolve)?;
                let k = e
                    .constant_value()
                    .filter(|k| !k.is_negative())
                    .and_then(|k| k.to_u32())
                    .ok_or_else(|| "exponent must be a nonnegative integer constant".to_string())?;
                base.pow(k)
            }
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.write_prec(0, &mut s);
        f.write_str(&s)
    }
}

/// Recursive-descent cursor over a token vector.
pub struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

impl Parser {
    pub fn new(src: &str) -> Result<Self, ParseError> {
        Ok(Parser { toks: tokenize(src)?, pos: 0 })
    }

    pub fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    pub fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    pub fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn error(&self, msg: impl Into<String>) -> ParseError {
        let (line, col) = match self.toks.get(self.pos) {
            Some(t) => (t.line, t.col),
            None => self.toks.last().map(|t| (t.line, t.col + 1)).unwrap_or((1, 1)),
        };
        ParseError::new(line, col, msg)
    }

    pub fn at_end(&self) -> bool {
        self.toks[self.pos..].iter().all(|t| t.tok == Tok::Newline)
    }

    pub fn skip_newlines(&mut self) {
        while self.peek() == Some(&Tok::Newline) {
            self.pos += 1;
        }
    }

    pub fn is_sym(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Sym(x)) if *x == s)
    }

    pub fn is_ident(&self, s: &str) -> bool {
        matches!(self.peek(), Some(Tok::Ident(x)) if x == s)
    }

    pub fn eat_sym(&mut self, s: &str) -> bool {
        if self.is_sym(s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn eat_ident(&mut self, s: &str) -> bool {
        if self.is_ident(s) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    pub fn expect_sym(&mut self, s: &str) -> Result<(), ParseError> {
        if self.eat_sym(s) {
            Ok(())
        } else {
            Err(self.unexpected(&format!("`{s}`")))
        }
    }

    pub fn expect_ident(&mut self) -> Result<String, ParseError> {
        match self.peek() {
            Some(Tok::Ident(s)) => {
                let s = s.clone();
                self.pos += 1;
                Ok(s)
            }
            _ => Err(self.unexpected("identifier")),
        }
    }

    pub fn expect_int(&mut self) -> Result<BigInt, ParseError> {
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = n.clone();
                self.pos += 1;
                Ok(n)
            }
            _ => Err(self.unexpected("integer")),
        }
    }

    pub fn unexpected(&self, wanted: &str) -> ParseError {
        match self.peek() {
            Some(t) => self.error(format!("expected {wanted}, found {t}")),
            None => self.error(format!("expected {wanted}, found end of input")),
        }
    }

    /// `expr := term (('+'|'-') term)*`
    pub fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat_sym("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat_sym("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat_sym("*") {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat_sym("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        let base = self.atom()?;
        if self.eat_sym("^") {
            let exp = self.atom()?;
            return Ok(Expr::Pow(Box::new(base), Box::new(exp)));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(Expr::Int(n))
            }
            Some(Tok::Ident(s)) => {
                self.pos += 1;
                Ok(Expr::Var(s))
            }
            Some(Tok::Sym("(")) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect_sym(")")?;
                Ok(e)
            }
            _ => Err(self.unexpected("polynomial term")),
        }
    }
}

/// Parses a standalone expression, rejecting trailing input.
pub fn parse_expr(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser::new(src)?;
    let e = p.expr()?;
    if !p.at_end() {
        return Err(p.unexpected("end of expression"));
    }
    Ok(e)
}

/// Parses a polynomial whose identifiers are looked up in `names`
/// (position = variable index).
pub fn parse_poly(src: &str, names: &[String]) -> Result<Poly, ParseError> {
    let e = parse_expr(src)?;
    expr_to_poly(&e, names).map_err(|m| ParseError::new(1, 1, m))
}

pub fn expr_to_poly(e: &Expr, names: &[String]) -> Result<Poly, String> {
    e.to_poly(&mut |id: &str| match names.iter().position(|n| n == id) {
        Some(i) => Ok(Poly::var(i as u32)),
        None => Err(format!("unknown variable `{id}`")),
    })
}

/// Splits `src` on `sep` at parenthesis/bracket depth zero.
pub fn split_top_level(src: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in src.char_indices() {
        match c {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&src[start..i]);
                start = i + c.len_utf8();
            }
            _ => {}
        }
    }
    parts.push(&src[start..]);
    parts
}
