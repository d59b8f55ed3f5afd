//! The sentence language for arithmetic axioms.
//!
//! ```text
//! theory t_id:
//! @nontrivial (1=0) => false
//! @domain forall x,y (x*y=0) => (x=0) \/ (y=0)
//! for n in 1..: @reduced forall x (x^n=0) => (x=0)
//! ```
//!
//! A `for n in a..[b]:` header turns the line into a schema whose cursor
//! `n` may appear inside polynomials (as a coefficient or exponent).

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::syntax::{Expr, ParseError, Parser, Tok};

const KEYWORDS: &[&str] = &["forall", "exists", "true", "false", "theory", "for", "in"];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Equation {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Equation {
    /// `lhs - rhs`, or just `lhs` when the right side is the literal 0.
    pub fn difference(&self) -> Expr {
        match &self.rhs {
            Expr::Int(n) if n == &BigInt::from(0) => self.lhs.clone(),
            rhs => Expr::Sub(Box::new(self.lhs.clone()), Box::new(rhs.clone())),
        }
    }
}

impl fmt::Display for Equation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}={}", self.lhs, self.rhs)
    }
}

/// `exists ys (g1=0 /\ ...)`; no equations means `true`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Disjunct {
    pub exists: Vec<String>,
    pub eqs: Vec<Equation>,
}

/// `forall xs (f1=0 /\ ...) => D1 \/ ... \/ Dk`. An empty antecedent is
/// `true`, an empty consequent is `false`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sentence {
    pub vars: Vec<String>,
    pub antecedent: Vec<Equation>,
    pub consequent: Vec<Disjunct>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Schema {
    pub cursor: String,
    pub start: u32,
    pub end: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Item {
    pub label: Option<String>,
    pub schema: Option<Schema>,
    pub sentence: Sentence,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Theory {
    pub name: Option<String>,
    pub items: Vec<Item>,
}

fn write_conj(eqs: &[Equation], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if eqs.is_empty() {
        return f.write_str("true");
    }
    f.write_str("(")?;
    for (i, e) in eqs.iter().enumerate() {
        if i > 0 {
            f.write_str(" /\\ ")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(")")
}

impl fmt::Display for Disjunct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.exists.is_empty() {
            write!(f, "exists {} ", self.exists.join(","))?;
        }
        write_conj(&self.eqs, f)
    }
}

impl fmt::Display for Sentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.vars.is_empty() {
            write!(f, "forall {} ", self.vars.join(","))?;
        }
        write_conj(&self.antecedent, f)?;
        f.write_str(" => ")?;
        if self.consequent.is_empty() {
            return f.write_str("false");
        }
        for (i, d) in self.consequent.iter().enumerate() {
            if i > 0 {
                f.write_str(" \\/ ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = &self.schema {
            write!(f, "for {} in {}..", s.cursor, s.start)?;
            if let Some(e) = s.end {
                write!(f, "{e}")?;
            }
            f.write_str(": ")?;
        }
        if let Some(l) = &self.label {
            write!(f, "@{l} ")?;
        }
        write!(f, "{}", self.sentence)
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(n) = &self.name {
            writeln!(f, "theory {n}:")?;
        }
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        Ok(())
    }
}

impl Sentence {
    /// Replaces the identifier `cursor` by the integer `k` everywhere.
    pub fn instantiate(&self, cursor: &str, k: u32) -> Sentence {
        let eqs = |v: &[Equation]| -> Vec<Equation> {
            v.iter()
                .map(|e| Equation { lhs: subst(&e.lhs, cursor, k), rhs: subst(&e.rhs, cursor, k) })
                .collect()
        };
        Sentence {
            vars: self.vars.clone(),
            antecedent: eqs(&self.antecedent),
            consequent: self
                .consequent
                .iter()
                .map(|d| Disjunct { exists: d.exists.clone(), eqs: eqs(&d.eqs) })
                .collect(),
        }
    }

    fn check_scopes(&self, cursor: Option<&str>) -> Result<(), String> {
        let distinct = |names: &[String], what: &str| -> Result<(), String> {
            for (i, n) in names.iter().enumerate() {
                if KEYWORDS.contains(&n.as_str()) {
                    return Err(format!("`{n}` is a keyword"));
                }
                if names[..i].contains(n) {
                    return Err(format!("{what} variable `{n}` listed twice"));
                }
                if Some(n.as_str()) == cursor {
                    return Err(format!("`{n}` is the schema cursor"));
                }
            }
            Ok(())
        };
        distinct(&self.vars, "universal")?;
        let bound = |e: &Equation, scope: &[String]| -> Result<(), String> {
            let mut ids = Vec::new();
            e.lhs.idents(&mut ids);
            e.rhs.idents(&mut ids);
            match ids.iter().find(|id| !scope.contains(id) && Some(id.as_str()) != cursor) {
                Some(id) => Err(format!("unbound variable `{id}`")),
                None => Ok(()),
            }
        };
        for e in &self.antecedent {
            bound(e, &self.vars)?;
        }
        for d in &self.consequent {
            distinct(&d.exists, "existential")?;
            if let Some(v) = d.exists.iter().find(|v| self.vars.contains(v)) {
                return Err(format!("existential `{v}` shadows a universal variable"));
            }
            let mut scope = self.vars.clone();
            scope.extend(d.exists.iter().cloned());
            for e in &d.eqs {
                bound(e, &scope)?;
            }
        }
        Ok(())
    }
}

fn subst(e: &Expr, cursor: &str, k: u32) -> Expr {
    let b = |x: &Expr| Box::new(subst(x, cursor, k));
    match e {
        Expr::Var(v) if v == cursor => Expr::Int(BigInt::from(k)),
        Expr::Int(_) | Expr::Var(_) => e.clone(),
        Expr::Neg(a) => Expr::Neg(b(a)),
        Expr::Add(x, y) => Expr::Add(b(x), b(y)),
        Expr::Sub(x, y) => Expr::Sub(b(x), b(y)),
        Expr::Mul(x, y) => Expr::Mul(b(x), b(y)),
        Expr::Pow(x, y) => Expr::Pow(b(x), b(y)),
    }
}

fn varlist(p: &mut Parser) -> Result<Vec<String>, ParseError> {
    let mut out = vec![p.expect_ident()?];
    while p.eat_sym(",") {
        out.push(p.expect_ident()?);
    }
    Ok(out)
}

/// `"true" | group ("/\" group)*` where a group is
/// `"(" equation ("/\" equation)* ")"`.
fn conj(p: &mut Parser) -> Result<Vec<Equation>, ParseError> {
    if p.eat_ident("true") {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    loop {
        p.expect_sym("(")?;
        loop {
            let lhs = p.expr()?;
            p.expect_sym("=")?;
            let rhs = p.expr()?;
            out.push(Equation { lhs, rhs });
            if !p.eat_sym("/\\") {
                break;
            }
        }
        p.expect_sym(")")?;
        if !p.eat_sym("/\\") {
            return Ok(out);
        }
    }
}

fn sentence(p: &mut Parser) -> Result<Sentence, ParseError> {
    let vars = if p.eat_ident("forall") { varlist(p)? } else { Vec::new() };
    let antecedent = conj(p)?;
    p.expect_sym("=>")?;
    let mut consequent = Vec::new();
    if !p.eat_ident("false") {
        loop {
            let exists = if p.eat_ident("exists") { varlist(p)? } else { Vec::new() };
            consequent.push(Disjunct { exists, eqs: conj(p)? });
            if !p.eat_sym("\\/") {
                break;
            }
        }
    }
    Ok(Sentence { vars, antecedent, consequent })
}

fn small_int(p: &mut Parser) -> Result<u32, ParseError> {
    let at = p.error("");
    p.expect_int()?
        .to_u32()
        .ok_or_else(|| ParseError::new(at.line, at.col, "schema bound out of range"))
}

fn item(p: &mut Parser) -> Result<Item, ParseError> {
    let start = p.error("");
    let schema = if p.eat_ident("for") {
        let cursor = p.expect_ident()?;
        if !p.eat_ident("in") {
            return Err(p.unexpected("`in`"));
        }
        let from = small_int(p)?;
        p.expect_sym("..")?;
        let end = if matches!(p.peek(), Some(Tok::Int(_))) { Some(small_int(p)?) } else { None };
        p.expect_sym(":")?;
        Some(Schema { cursor, start: from, end })
    } else {
        None
    };
    let label = if p.eat_sym("@") { Some(p.expect_ident()?) } else { None };
    let s = sentence(p)?;
    s.check_scopes(schema.as_ref().map(|s| s.cursor.as_str()))
        .map_err(|m| ParseError::new(start.line, start.col, m))?;
    Ok(Item { label, schema, sentence: s })
}

fn end_of_line(p: &mut Parser) -> Result<(), ParseError> {
    match p.peek() {
        None => Ok(()),
        Some(Tok::Newline) => {
            p.skip_newlines();
            Ok(())
        }
        Some(_) => Err(p.unexpected("end of line")),
    }
}

/// Parses a theory file: an optional `theory <name>:` header followed by
/// one item per line.
pub fn parse_theory(src: &str) -> Result<Theory, ParseError> {
    let mut p = Parser::new(src)?;
    p.skip_newlines();
    let mut name = None;
    if p.eat_ident("theory") {
        name = Some(p.expect_ident()?);
        p.expect_sym(":")?;
        end_of_line(&mut p)?;
    }
    let mut items = Vec::new();
    while !p.at_end() {
        items.push(item(&mut p)?);
        end_of_line(&mut p)?;
    }
    Ok(Theory { name, items })
}

/// Parses a single sentence (no schema header or label).
pub fn parse_sentence(src: &str) -> Result<Sentence, ParseError> {
    let mut p = Parser::new(src)?;
    let it = item(&mut p)?;
    if it.schema.is_some() || it.label.is_some() {
        return Err(ParseError::new(1, 1, "expected a bare sentence"));
    }
    if !p.at_end() {
        return Err(p.unexpected("end of sentence"));
    }
    Ok(it.sentence)
}
