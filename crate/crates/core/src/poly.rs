//! Sparse multivariate polynomials with arbitrary-precision integer
//! coefficients, optionally reduced modulo a positive integer `n`.
//!
//! The term map is keyed by [`Monomial`], so two equal polynomials always
//! have identical representations and `==` is ring equality.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::finring::{Elem, FiniteRing};

/// Variable index. User-facing names live in a separate symbol table.
pub type Var = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("modulus mismatch: {0:?} vs {1:?}")]
    ModulusMismatch(Option<BigInt>, Option<BigInt>),
    #[error("variable x{0} has no assigned value")]
    UnassignedVariable(Var),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading coefficient {0} is not invertible modulo {1}")]
    NotInvertible(BigInt, BigInt),
    #[error("modulus must be positive, got {0}")]
    BadModulus(BigInt),
}

/// A power product `x_i1^e1 * ... * x_ik^ek`, stored sorted by variable with
/// no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn from_exponents(iter: impl IntoIterator<Item = (Var, u32)>) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in iter {
            *map.entry(v).or_default() += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.0.binary_search_by_key(&v, |&(w, _)| w) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_var(&self) -> Option<Var> {
        self.0.last().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (None, Some(&y)) => {
                    out.push(y);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial(out)
    }

    /// True if `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `self / other`, if exact.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial(
            self.0
                .iter()
                .map(|&(v, e)| (v, e - other.exponent(v)))
                .filter(|&(_, e)| e > 0)
                .collect(),
        ))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let vars: BTreeSet<Var> = self.0.iter().chain(other.0.iter()).map(|&(v, _)| v).collect();
        Monomial(vars.into_iter().map(|v| (v, self.exponent(v).max(other.exponent(v)))).collect())
    }

    fn shifted(&self, offset: Var) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v + offset, e)).collect())
    }

    fn write(&self, names: &dyn Fn(Var) -> String, out: &mut String) {
        for (k, &(v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                out.push('*');
            }
            out.push_str(&names(v));
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    GrLex,
}

/// Monomial order with an explicit variable priority. Variables listed in
/// `priority` come first (most significant first); all others follow in
/// increasing index order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    priority: Vec<Var>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, priority: Vec::new() }
    }

    pub fn grlex() -> Self {
        MonomialOrder { kind: OrderKind::GrLex, priority: Vec::new() }
    }

    /// Panics if `priority` repeats a variable.
    pub fn with_priority(kind: OrderKind, priority: Vec<Var>) -> Self {
        let set: BTreeSet<_> = priority.iter().collect();
        assert_eq!(set.len(), priority.len(), "variable priority repeats a variable");
        MonomialOrder { kind, priority }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn priority(&self) -> &[Var] {
        &self.priority
    }

    pub fn rank(&self, v: Var) -> u64 {
        match self.priority.iter().position(|&w| w == v) {
            Some(i) => i as u64,
            None => self.priority.len() as u64 + v as u64,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.kind == OrderKind::GrLex {
            match a.degree().cmp(&b.degree()) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        let ranked = |m: &Monomial| {
            let mut r: Vec<(u64, u32)> = m.0.iter().map(|&(v, e)| (self.rank(v), e)).collect();
            r.sort_unstable();
            r
        };
        let (ra, rb) = (ranked(a), ranked(b));
        let (mut i, mut j) = (0, 0);
        loop {
            match (ra.get(i), rb.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(x, ex)), Some(&(y, ey))) => {
                    if x < y {
                        return Ordering::Greater;
                    }
                    if y < x {
                        return Ordering::Less;
                    }
                    match ex.cmp(&ey) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        o => return o,
                    }
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Pow(u32),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
    modulus: Option<BigInt>,
}

impl Default for Poly {
    fn default() -> Self {
        Poly::zero()
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new(), modulus: None }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::term(c, Monomial::one())
    }

    pub fn var(v: Var) -> Self {
        Poly::term(1, Monomial::var(v))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms, modulus: None }
    }

    pub fn from_terms(iter: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in iter {
            p.add_term(m, c);
        }
        p
    }

    /// Reinterprets the coefficients in Z/n.
    pub fn with_modulus(&self, n: impl Into<BigInt>) -> Result<Poly, PolyError> {
        let n = n.into();
        if !n.is_positive() {
            return Err(PolyError::BadModulus(n));
        }
        let mut p = Poly { terms: BTreeMap::new(), modulus: Some(n) };
        for (m, c) in &self.terms {
            p.add_term(m.clone(), c.clone());
        }
        Ok(p)
    }

    /// Forgets the modulus, keeping the canonical residues as integers.
    pub fn lift(&self) -> Poly {
        Poly { terms: self.terms.clone(), modulus: None }
    }

    pub fn modulus(&self) -> Option<&BigInt> {
        self.modulus.as_ref()
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        let reduce = |c: BigInt| match &self.modulus {
            Some(n) => c.mod_floor(n),
            None => c,
        };
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                let c = reduce(c);
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                let s = reduce(slot.get() + c);
                if s.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value if the polynomial is constant.
    pub fn constant_value(&self) -> Option<BigInt> {
        if self.is_zero() {
            return Some(BigInt::zero());
        }
        if self.is_constant() {
            return self.terms.get(&Monomial::one()).cloned();
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.0.iter().map(|&(v, _)| v)).collect()
    }

    pub fn max_var(&self) -> Option<Var> {
        self.terms.keys().filter_map(Monomial::max_var).max()
    }

    /// Terms sorted from largest to smallest under `ord`.
    pub fn sorted_terms(&self, ord: &MonomialOrder) -> Vec<(Monomial, BigInt)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (m.clone(), c.clone())).collect();
        v.sort_by(|a, b| ord.cmp(&b.0, &a.0));
        v
    }

    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    fn check_modulus(&self, other: &Poly) -> Result<(), PolyError> {
        if self.modulus != other.modulus {
            return Err(PolyError::ModulusMismatch(self.modulus.clone(), other.modulus.clone()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_modulus(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_modulus(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.check_modulus(other)?;
        let mut out = Poly { terms: BTreeMap::new(), modulus: self.modulus.clone() };
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one();
        if let Some(n) = &self.modulus {
            result = result.with_modulus(n.clone()).expect("positive modulus");
        }
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Checked ring operation.
    pub fn arith(a: &Poly, b: &Poly, op: ArithOp) -> Result<Poly, PolyError> {
        match op {
            ArithOp::Add => a.checked_add(b),
            ArithOp::Sub => a.checked_sub(b),
            ArithOp::Mul => a.checked_mul(b),
            ArithOp::Pow(k) => Ok(a.pow(k)),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        let mut out = Poly { terms: BTreeMap::new(), modulus: self.modulus.clone() };
        for (m, d) in &self.terms {
            out.add_term(m.clone(), d * c);
        }
        out
    }

    pub fn mul_term(&self, c: &BigInt, mono: &Monomial) -> Poly {
        let mut out = Poly { terms: BTreeMap::new(), modulus: self.modulus.clone() };
        for (m, d) in &self.terms {
            out.add_term(m.mul(mono), d * c);
        }
        out
    }

    /// Renumbers every variable `v` to `v + offset`.
    pub fn shift_vars(&self, offset: Var) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.shifted(offset), c.clone())).collect(),
            modulus: self.modulus.clone(),
        }
    }

    /// Image under the homomorphism sending `v` to `assign(v)`.
    pub fn substitute_with(
        &self,
        assign: &dyn Fn(Var) -> Option<Poly>,
    ) -> Result<Poly, PolyError> {
        let mut cache: BTreeMap<Var, Poly> = BTreeMap::new();
        for v in self.vars() {
            let img = assign(v).ok_or(PolyError::UnassignedVariable(v))?;
            self.check_modulus(&img)?;
            cache.insert(v, img);
        }
        let mut out = Poly { terms: BTreeMap::new(), modulus: self.modulus.clone() };
        if let Some(n) = &self.modulus {
            out = out.with_modulus(n.clone())?;
        }
        for (m, c) in &self.terms {
            let mut t = Poly::constant(c.clone());
            if let Some(n) = &self.modulus {
                t = t.with_modulus(n.clone())?;
            }
            for &(v, e) in &m.0 {
                t = &t * &cache[&v].pow(e);
            }
            out = &out + &t;
        }
        Ok(out)
    }

    pub fn substitute(&self, assign: &BTreeMap<Var, Poly>) -> Result<Poly, PolyError> {
        self.substitute_with(&|v| assign.get(&v).cloned())
    }

    /// Substitution by a list: variable `i` goes to `images[i]`.
    pub fn substitute_list(&self, images: &[Poly]) -> Result<Poly, PolyError> {
        self.substitute_with(&|v| images.get(v as usize).cloned())
    }

    /// Value at `point` (indexed by variable) in the finite ring `ring`;
    /// integer coefficients go through the canonical map Z -> A.
    pub fn evaluate(&self, ring: &FiniteRing, point: &[Elem]) -> Result<Elem, PolyError> {
        let mut acc = ring.zero();
        for (m, c) in &self.terms {
            let mut t = ring.from_bigint(c);
            for &(v, e) in &m.0 {
                let x = *point.get(v as usize).ok_or(PolyError::UnassignedVariable(v))?;
                t = ring.mul(t, ring.pow(x, e as u64));
            }
            acc = ring.add(acc, t);
        }
        Ok(acc)
    }

    /// Multivariate division. Returns `(quotients, remainder)` with
    /// `self = sum q_i d_i + r` and no term of `r` divisible by a leading
    /// term of a divisor. Over Z a term is only divided when the leading
    /// coefficient divides it exactly; over Z/n the leading coefficient must
    /// be invertible.
    pub fn divide(
        &self,
        divisors: &[Poly],
        ord: &MonomialOrder,
    ) -> Result<(Vec<Poly>, Poly), PolyError> {
        for d in divisors {
            self.check_modulus(d)?;
            if d.is_zero() {
                return Err(PolyError::DivisionByZero);
            }
        }
        let blank = || Poly { terms: BTreeMap::new(), modulus: self.modulus.clone() };
        let mut quotients: Vec<Poly> = divisors.iter().map(|_| blank()).collect();
        let mut rem = blank();
        let mut p = self.clone();
        let leads: Vec<(Monomial, BigInt)> = divisors
            .iter()
            .map(|d| {
                let (m, c) = d.leading_term(ord).expect("nonzero");
                (m.clone(), c.clone())
            })
            .collect();
        while let Some((lm, lc)) = p.leading_term(ord).map(|(m, c)| (m.clone(), c.clone())) {
            let mut divided = false;
            for (i, (dm, dc)) in leads.iter().enumerate() {
                let Some(mono) = lm.div(dm) else { continue };
                let factor = match &self.modulus {
                    Some(n) => {
                        let inv = mod_inverse(dc, n)
                            .ok_or_else(|| PolyError::NotInvertible(dc.clone(), n.clone()))?;
                        (&lc * inv).mod_floor(n)
                    }
                    None => {
                        if !lc.is_multiple_of(dc) {
                            continue;
                        }
                        &lc / dc
                    }
                };
                let t = blank().plus_term(mono.clone(), factor.clone());
                quotients[i] = &quotients[i] + &t;
                p = &p - &divisors[i].mul_term(&factor, &mono);
                divided = true;
                break;
            }
            if !divided {
                let t = blank().plus_term(lm.clone(), lc.clone());
                rem = &rem + &t;
                p = &p - &t;
            }
        }
        Ok((quotients, rem))
    }

    fn plus_term(mut self, m: Monomial, c: BigInt) -> Poly {
        self.add_term(m, c);
        self
    }

    /// Content (gcd of coefficients), positive; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Renders with the given variable names; variables without a name
    /// print as `x<index>`.
    pub fn to_string_with(&self, names: &[String]) -> String {
        let name = |v: Var| {
            names.get(v as usize).cloned().unwrap_or_else(|| format!("x{v}"))
        };
        self.render(&name)
    }

    fn render(&self, names: &dyn Fn(Var) -> String) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let ord = MonomialOrder::grlex();
        let mut out = String::new();
        for (k, (m, c)) in self.sorted_terms(&ord).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if neg {
                out.push('-');
            } else if k > 0 {
                out.push('+');
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                m.write(names, &mut out);
            }
        }
        out
    }

    pub fn to_u64_coeffs(&self) -> Option<Vec<(Monomial, u64)>> {
        self.terms.iter().map(|(m, c)| c.to_u64().map(|c| (m.clone(), c))).collect()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&[]))
    }
}

pub(crate) fn mod_inverse(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(n).extended_gcd(n);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(n))
    } else {
        None
    }
}

// Operator sugar. These panic on a modulus mismatch; use `Poly::arith` or
// the `checked_*` methods where tags can differ.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("modulus mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("modulus mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("modulus mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&BigInt::from(-1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_poly;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn p(src: &str) -> Poly {
        parse_poly(src, &names(&["x", "y", "z", "t", "u", "v"])).unwrap()
    }

    #[test]
    fn binomial_square() {
        let s = p("x+y");
        assert_eq!(&s * &s, p("x^2+2*x*y+y^2"));
        assert_eq!(Poly::arith(&s, &s, ArithOp::Mul).unwrap(), s.pow(2));
    }

    #[test]
    fn additive_identity_and_expansion() {
        let a = p("x^2+1");
        assert_eq!(&a + &Poly::zero(), a);
        // (x^2+1)(x-1) = x^3 - x^2 + x - 1, coefficientwise by distributivity.
        assert_eq!(&a * &p("x-1"), p("x^3-x^2+x-1"));
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = p("x").with_modulus(5).unwrap();
        let b = p("x");
        assert!(matches!(
            Poly::arith(&a, &b, ArithOp::Add),
            Err(PolyError::ModulusMismatch(..))
        ));
        let c = p("3*x+4").with_modulus(5).unwrap();
        assert_eq!(&a + &c, p("4*x+4").with_modulus(5).unwrap());
        assert_eq!((&c * &c).to_string(), "4*x0^2+4*x0+1");
    }

    #[test]
    fn substitution_examples() {
        let mut m = BTreeMap::new();
        m.insert(0, p("t"));
        m.insert(1, p("t"));
        assert!(p("x-y").substitute(&m).unwrap().is_zero());
        let mut m = BTreeMap::new();
        m.insert(0, p("x+1"));
        assert_eq!(p("x^2").substitute(&m).unwrap(), p("x^2+2*x+1"));
        let mut m = BTreeMap::new();
        m.insert(0, p("u+v"));
        m.insert(1, p("u-v"));
        assert_eq!(p("x*y").substitute(&m).unwrap(), p("u^2-v^2"));
        assert_eq!(
            p("x*z").substitute(&BTreeMap::new()),
            Err(PolyError::UnassignedVariable(0))
        );
    }

    #[test]
    fn evaluation_examples() {
        let z5 = FiniteRing::zmod(5).unwrap();
        let z3 = FiniteRing::zmod(3).unwrap();
        assert_eq!(p("x^2+1").evaluate(&z5, &[Elem(2)]).unwrap(), Elem(0));
        assert_eq!(p("x^2+1").evaluate(&z3, &[Elem(1)]).unwrap(), Elem(2));
        assert_eq!(Poly::zero().evaluate(&z3, &[]).unwrap(), z3.zero());
        assert!(p("y").evaluate(&z3, &[Elem(1)]).is_err());
    }

    #[test]
    fn division_examples() {
        let lex = MonomialOrder::lex();
        let (q, r) = p("x^2").divide(&[p("x")], &lex).unwrap();
        assert_eq!((q, r), (vec![p("x")], Poly::zero()));
        let (q, r) = p("x^2+1").divide(&[p("x")], &lex).unwrap();
        assert_eq!((q, r), (vec![p("x")], Poly::one()));
        let f = p("x^2*y+x*y^2+y^2");
        let ds = [p("x*y-1"), p("y^2-1")];
        let (q, r) = f.divide(&ds, &lex).unwrap();
        assert_eq!(q, vec![p("x+y"), Poly::one()]);
        assert_eq!(r, p("x+y+1"));
        assert_eq!(f.divide(&[], &lex).unwrap(), (vec![], f.clone()));
        assert_eq!(f.divide(&[Poly::zero()], &lex), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn display_is_parseable() {
        for src in ["x^2+2*x*y+y^2", "-x+1", "3*x*y^2-7", "0"] {
            assert_eq!(p(src).to_string_with(&names(&["x", "y"])), src);
        }
    }

    #[test]
    fn orders() {
        let lex = MonomialOrder::lex();
        let grlex = MonomialOrder::grlex();
        let x = Monomial::var(0);
        let y2 = Monomial::from_exponents([(1, 2)]);
        assert_eq!(lex.cmp(&x, &y2), Ordering::Greater);
        assert_eq!(grlex.cmp(&x, &y2), Ordering::Less);
        let rev = MonomialOrder::with_priority(OrderKind::Lex, vec![1, 0]);
        assert_eq!(rev.cmp(&x, &Monomial::var(1)), Ordering::Less);
        assert_eq!(lex.cmp(&Monomial::one(), &x), Ordering::Less);
    }
}
