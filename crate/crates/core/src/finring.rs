//! Explicit finite commutative rings: `Z/n`, `GF(p^k)` and finite products.
//!
//! Elements are indices `0..card` in a canonical order:
//! residues for `Z/n`, base-`p` digit strings (constant coefficient least
//! significant) for `GF(p^k)`, and mixed radix with the first factor most
//! significant for products. Index order is the enumeration order used
//! throughout the crate.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::syntax::{self, split_top_level};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("invalid ring spec `{spec}`: {msg}")]
    Spec { spec: String, msg: String },
    #[error("modulus {0} is reducible over F_{1}")]
    Reducible(String, u32),
    #[error("ring is too large ({0} elements)")]
    TooLarge(u128),
    #[error("ring axiom `{0}` fails")]
    Axiom(String),
    #[error("cannot parse `{text}` as an element of {ring}")]
    Element { text: String, ring: String },
    #[error("hom search over {candidates} candidates exceeds budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Elem(pub u32);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Zmod(u32),
    /// `modulus` holds `c_0..c_k` with `c_k = 1`.
    Gf { p: u32, k: u32, modulus: Vec<u32> },
    Product(Vec<FiniteRing>),
}

struct Inner {
    spec: RingSpec,
    card: u32,
    one: Elem,
    tables: Option<(Vec<u32>, Vec<u32>)>,
}

/// A finite commutative unital ring. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteRing(Arc<Inner>);

const TABLE_LIMIT: u32 = 256;

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.spec {
            RingSpec::Zmod(n) => write!(f, "Z/{n}"),
            RingSpec::Gf { p, k, modulus } => {
                write!(f, "GF({})", (*p as u64).pow(*k))?;
                if *k > 1 {
                    write!(f, ": {}", render_dense(modulus, *p, "t"))?;
                }
                Ok(())
            }
            RingSpec::Product(fs) => {
                for (i, r) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if matches!(r.spec(), RingSpec::Product(_)) || r.is_gf_ext() {
                        write!(f, "({r})")?;
                    } else {
                        write!(f, "{r}")?;
                    }
                }
                if fs.is_empty() {
                    write!(f, "Z/1")?;
                }
                Ok(())
            }
        }
    }
}

fn render_dense(coeffs: &[u32], _p: u32, var: &str) -> String {
    let mut out = String::new();
    for (d, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !out.is_empty() {
            out.push('+');
        }
        match (d, c) {
            (0, c) => out.push_str(&c.to_string()),
            (1, 1) => out.push_str(var),
            (1, c) => out.push_str(&format!("{c}*{var}")),
            (d, 1) => out.push_str(&format!("{var}^{d}")),
            (d, c) => out.push_str(&format!("{c}*{var}^{d}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl FiniteRing {
    fn build(spec: RingSpec) -> Result<Self, RingError> {
        let card: u128 = match &spec {
            RingSpec::Zmod(n) => *n as u128,
            RingSpec::Gf { p, k, .. } => (*p as u128).pow(*k),
            RingSpec::Product(fs) => fs.iter().map(|r| r.card() as u128).product(),
        };
        if card > u32::MAX as u128 / 2 {
            return Err(RingError::TooLarge(card));
        }
        let card = card as u32;
        let one = match &spec {
            RingSpec::Zmod(n) => Elem(1 % n),
            RingSpec::Gf { .. } => Elem(1),
            RingSpec::Product(fs) => encode_product(fs, &fs.iter().map(|r| r.one()).collect::<Vec<_>>()),
        };
        let mut inner = Inner { spec, card, one, tables: None };
        if card <= TABLE_LIMIT {
            let mut add = Vec::with_capacity((card * card) as usize);
            let mut mul = Vec::with_capacity((card * card) as usize);
            for a in 0..card {
                for b in 0..card {
                    add.push(structural_add(&inner.spec, Elem(a), Elem(b)).0);
                    mul.push(structural_mul(&inner.spec, Elem(a), Elem(b)).0);
                }
            }
            inner.tables = Some((add, mul));
        }
        Ok(FiniteRing(Arc::new(inner)))
    }

    /// `Z/n` for `n >= 1`; `Z/1` is the trivial ring.
    pub fn zmod(n: u32) -> Result<Self, RingError> {
        if n == 0 {
            return Err(RingError::Spec { spec: "Z/0".into(), msg: "modulus must be >= 1".into() });
        }
        Self::build(RingSpec::Zmod(n))
    }

    /// `GF(p^k)`. With `modulus = None` the first irreducible monic
    /// polynomial in index order is used.
    pub fn gf(p: u32, k: u32, modulus: Option<Vec<u32>>) -> Result<Self, RingError> {
        let spec_txt = format!("GF({p}^{k})");
        if !is_prime(p as u64) {
            return Err(RingError::Spec { spec: spec_txt, msg: format!("{p} is not prime") });
        }
        if k == 0 {
            return Err(RingError::Spec { spec: spec_txt, msg: "degree must be >= 1".into() });
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != k as usize + 1 || m[k as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(RingError::Spec {
                        spec: spec_txt,
                        msg: format!("modulus must be monic of degree {k} with coefficients below {p}"),
                    });
                }
                if !is_irreducible(&m, p) {
                    return Err(RingError::Reducible(render_dense(&m, p, "t"), p));
                }
                m
            }
            None => default_modulus(p, k),
        };
        Self::build(RingSpec::Gf { p, k, modulus })
    }

    pub fn product(factors: Vec<FiniteRing>) -> Result<Self, RingError> {
        Self::build(RingSpec::Product(factors))
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    fn is_gf_ext(&self) -> bool {
        matches!(self.spec(), RingSpec::Gf { k, .. } if *k > 1)
    }

    pub fn card(&self) -> u32 {
        self.0.card
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.card()).map(Elem)
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        self.0.one
    }

    pub fn is_trivial(&self) -> bool {
        self.card() == 1
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some((add, _)) => Elem(add[(a.0 * self.0.card + b.0) as usize]),
            None => structural_add(&self.0.spec, a, b),
        }
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.tables {
            Some((_, mul)) => Elem(mul[(a.0 * self.0.card + b.0) as usize]),
            None => structural_mul(&self.0.spec, a, b),
        }
    }

    pub fn neg(&self, a: Elem) -> Elem {
        structural_neg(&self.0.spec, a)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut result = self.one();
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        result
    }

    /// Image of an integer under the canonical map Z -> A.
    pub fn from_i64(&self, n: i64) -> Elem {
        self.from_bigint(&BigInt::from(n))
    }

    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &self.0.spec {
            RingSpec::Zmod(m) => Elem(n.mod_floor(&BigInt::from(*m)).to_u32().expect("residue")),
            RingSpec::Gf { p, .. } => Elem(n.mod_floor(&BigInt::from(*p)).to_u32().expect("residue")),
            RingSpec::Product(fs) => {
                let parts: Vec<Elem> = fs.iter().map(|r| r.from_bigint(n)).collect();
                encode_product(fs, &parts)
            }
        }
    }

    /// Multiplicative inverse, if any.
    pub fn inverse(&self, a: Elem) -> Option<Elem> {
        match &self.0.spec {
            RingSpec::Zmod(n) => {
                let e = (a.0 as i64).extended_gcd(&(*n as i64));
                (e.gcd == 1 && *n > 1).then(|| Elem(e.x.rem_euclid(*n as i64) as u32))
                    .or_else(|| (*n == 1).then_some(Elem(0)))
            }
            RingSpec::Gf { p, k, .. } => {
                if a.0 == 0 {
                    return None;
                }
                // a^(q-2) in the multiplicative group of order q-1
                let q = (*p as u64).pow(*k);
                Some(self.pow(a, q - 2))
            }
            RingSpec::Product(fs) => {
                let parts = decode_product(fs, a);
                let inv: Option<Vec<Elem>> =
                    fs.iter().zip(parts).map(|(r, x)| r.inverse(x)).collect();
                inv.map(|v| encode_product(fs, &v))
            }
        }
    }

    /// Components of a product element; `None` for non-products.
    pub fn components(&self, a: Elem) -> Option<Vec<Elem>> {
        match &self.0.spec {
            RingSpec::Product(fs) => Some(decode_product(fs, a)),
            _ => None,
        }
    }

    pub fn factors(&self) -> &[FiniteRing] {
        match &self.0.spec {
            RingSpec::Product(fs) => fs,
            _ => &[],
        }
    }

    pub fn from_components(&self, parts: &[Elem]) -> Elem {
        match &self.0.spec {
            RingSpec::Product(fs) => encode_product(fs, parts),
            _ => panic!("from_components on a non-product ring"),
        }
    }

    /// Exhaustive check of the commutative unital ring axioms.
    pub fn verify_axioms(&self) -> Result<(), RingError> {
        let els: Vec<Elem> = self.elements().collect();
        let (z, o) = (self.zero(), self.one());
        for &a in &els {
            if self.add(a, z) != a {
                return Err(RingError::Axiom("additive identity".into()));
            }
            if self.mul(a, o) != a {
                return Err(RingError::Axiom("multiplicative identity".into()));
            }
            if self.add(a, self.neg(a)) != z {
                return Err(RingError::Axiom("additive inverse".into()));
            }
            for &b in &els {
                if self.add(a, b) != self.add(b, a) {
                    return Err(RingError::Axiom("additive commutativity".into()));
                }
                if self.mul(a, b) != self.mul(b, a) {
                    return Err(RingError::Axiom("multiplicative commutativity".into()));
                }
                for &c in &els {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        return Err(RingError::Axiom("additive associativity".into()));
                    }
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return Err(RingError::Axiom("multiplicative associativity".into()));
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return Err(RingError::Axiom("distributivity".into()));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn characteristic(&self) -> u64 {
        let mut acc = self.zero();
        for n in 1..=self.card() as u64 {
            acc = self.add(acc, self.one());
            if acc == self.zero() {
                return n;
            }
        }
        unreachable!("finite rings have positive characteristic")
    }

    pub fn units(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.inverse(a).is_some()).collect()
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        self.elements().filter(|&a| self.mul(a, a) == a).collect()
    }

    pub fn is_field(&self) -> bool {
        !self.is_trivial() && self.elements().skip(1).all(|a| self.inverse(a).is_some())
    }

    /// A pair of nonzero elements with zero product, if one exists.
    pub fn zero_divisor_witness(&self) -> Option<(Elem, Elem)> {
        for a in self.elements().skip(1) {
            for b in self.elements().skip(1) {
                if self.mul(a, b) == self.zero() {
                    return Some((a, b));
                }
            }
        }
        None
    }

    pub fn is_domain(&self) -> bool {
        !self.is_trivial() && self.zero_divisor_witness().is_none()
    }

    pub fn query(&self, q: RingQuery) -> QueryAnswer {
        match q {
            RingQuery::Characteristic => QueryAnswer::Number(self.characteristic()),
            RingQuery::Units => QueryAnswer::Elements(self.units()),
            RingQuery::Idempotents => QueryAnswer::Elements(self.idempotents()),
            RingQuery::Elements => QueryAnswer::Elements(self.elements().collect()),
            RingQuery::IsField => QueryAnswer::Bool { value: self.is_field(), witness: None },
            RingQuery::IsDomain => {
                let w = self.zero_divisor_witness();
                QueryAnswer::Bool { value: !self.is_trivial() && w.is_none(), witness: w }
            }
        }
    }

    pub fn format_elem(&self, a: Elem) -> String {
        match &self.0.spec {
            RingSpec::Zmod(_) => a.0.to_string(),
            RingSpec::Gf { p, k, .. } => {
                if *k == 1 {
                    a.0.to_string()
                } else {
                    render_dense(&gf_digits(a, *p, *k), *p, "t")
                }
            }
            RingSpec::Product(fs) => {
                let parts = decode_product(fs, a);
                let inner: Vec<String> =
                    fs.iter().zip(parts).map(|(r, x)| r.format_elem(x)).collect();
                format!("({})", inner.join(","))
            }
        }
    }

    /// JSON rendering: integers for prime-field and `Z/n` elements, strings
    /// otherwise.
    pub fn elem_json(&self, a: Elem) -> serde_json::Value {
        match &self.0.spec {
            RingSpec::Zmod(_) | RingSpec::Gf { k: 1, .. } => serde_json::Value::from(a.0),
            _ => serde_json::Value::from(self.format_elem(a)),
        }
    }

    /// Parses an element written as [`FiniteRing::format_elem`] prints it.
    pub fn parse_elem(&self, text: &str) -> Result<Elem, RingError> {
        let err = || RingError::Element { text: text.to_string(), ring: self.to_string() };
        let t = text.trim();
        match &self.0.spec {
            RingSpec::Zmod(_) => {
                let n: BigInt = t.parse().map_err(|_| err())?;
                Ok(self.from_bigint(&n))
            }
            RingSpec::Gf { p, k, modulus } => {
                let e = syntax::parse_expr(t).map_err(|_| err())?;
                let mut ids = Vec::new();
                e.idents(&mut ids);
                if ids.len() > 1 {
                    return Err(err());
                }
                let poly = syntax::expr_to_poly(&e, &ids).map_err(|_| err())?;
                let mut coeffs = vec![0u32; poly.total_degree() as usize + 1];
                for (m, c) in poly.terms() {
                    coeffs[m.degree() as usize] = c.mod_floor(&BigInt::from(*p)).to_u32().unwrap();
                }
                let reduced = poly_rem(&coeffs, modulus, *p);
                let mut digits = reduced;
                digits.resize(*k as usize, 0);
                Ok(gf_encode(&digits, *p))
            }
            RingSpec::Product(fs) => {
                let inner = t
                    .strip_prefix('(')
                    .and_then(|s| s.strip_suffix(')'))
                    .ok_or_else(err)?;
                let parts = split_top_level(inner, ',');
                if parts.len() != fs.len() {
                    return Err(err());
                }
                let els: Result<Vec<Elem>, _> =
                    fs.iter().zip(parts).map(|(r, s)| r.parse_elem(s)).collect();
                Ok(encode_product(fs, &els?))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingQuery {
    Characteristic,
    Units,
    Idempotents,
    IsField,
    IsDomain,
    Elements,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QueryAnswer {
    Number(u64),
    Elements(Vec<Elem>),
    Bool { value: bool, witness: Option<(Elem, Elem)> },
}

fn encode_product(fs: &[FiniteRing], parts: &[Elem]) -> Elem {
    let mut idx: u64 = 0;
    for (r, x) in fs.iter().zip(parts) {
        idx = idx * r.card() as u64 + x.0 as u64;
    }
    Elem(idx as u32)
}

fn decode_product(fs: &[FiniteRing], a: Elem) -> Vec<Elem> {
    let mut out = vec![Elem(0); fs.len()];
    let mut idx = a.0;
    for (i, r) in fs.iter().enumerate().rev() {
        out[i] = Elem(idx % r.card());
        idx /= r.card();
    }
    out
}

fn gf_digits(a: Elem, p: u32, k: u32) -> Vec<u32> {
    let mut idx = a.0;
    (0..k)
        .map(|_| {
            let d = idx % p;
            idx /= p;
            d
        })
        .collect()
}

fn gf_encode(digits: &[u32], p: u32) -> Elem {
    Elem(digits.iter().rev().fold(0u32, |acc, &d| acc * p + d))
}

fn structural_add(spec: &RingSpec, a: Elem, b: Elem) -> Elem {
    match spec {
        RingSpec::Zmod(n) => Elem(((a.0 as u64 + b.0 as u64) % *n as u64) as u32),
        RingSpec::Gf { p, k, .. } => {
            let (x, y) = (gf_digits(a, *p, *k), gf_digits(b, *p, *k));
            let s: Vec<u32> = x.iter().zip(&y).map(|(u, v)| (u + v) % p).collect();
            gf_encode(&s, *p)
        }
        RingSpec::Product(fs) => {
            let (x, y) = (decode_product(fs, a), decode_product(fs, b));
            let s: Vec<Elem> = fs.iter().zip(x.iter().zip(&y)).map(|(r, (u, v))| r.add(*u, *v)).collect();
            encode_product(fs, &s)
        }
    }
}

fn structural_neg(spec: &RingSpec, a: Elem) -> Elem {
    match spec {
        RingSpec::Zmod(n) => Elem((*n - a.0 % *n) % *n),
        RingSpec::Gf { p, k, .. } => {
            let x = gf_digits(a, *p, *k);
            gf_encode(&x.iter().map(|u| (p - u) % p).collect::<Vec<_>>(), *p)
        }
        RingSpec::Product(fs) => {
            let x = decode_product(fs, a);
            let s: Vec<Elem> = fs.iter().zip(x).map(|(r, u)| r.neg(u)).collect();
            encode_product(fs, &s)
        }
    }
}

fn structural_mul(spec: &RingSpec, a: Elem, b: Elem) -> Elem {
    match spec {
        RingSpec::Zmod(n) => Elem(((a.0 as u64 * b.0 as u64) % *n as u64) as u32),
        RingSpec::Gf { p, k, modulus } => {
            let (x, y) = (gf_digits(a, *p, *k), gf_digits(b, *p, *k));
            let mut prod = vec![0u64; 2 * *k as usize];
            for (i, u) in x.iter().enumerate() {
                for (j, v) in y.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + *u as u64 * *v as u64) % *p as u64;
                }
            }
            let prod: Vec<u32> = prod.into_iter().map(|c| c as u32).collect();
            let mut r = poly_rem(&prod, modulus, *p);
            r.resize(*k as usize, 0);
            gf_encode(&r, *p)
        }
        RingSpec::Product(fs) => {
            let (x, y) = (decode_product(fs, a), decode_product(fs, b));
            let s: Vec<Elem> = fs.iter().zip(x.iter().zip(&y)).map(|(r, (u, v))| r.mul(*u, *v)).collect();
            encode_product(fs, &s)
        }
    }
}

/// Remainder of dense `f` by monic dense `m` over F_p (trailing zeros trimmed).
fn poly_rem(f: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r: Vec<u64> = f.iter().map(|&c| c as u64 % p as u64).collect();
    let dm = m.len() - 1;
    let p64 = p as u64;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                let sub = lead * c as u64 % p64;
                r[shift + i] = (r[shift + i] + p64 - sub) % p64;
            }
        }
        r.pop();
    }
    let mut out: Vec<u32> = r.into_iter().map(|c| c as u32).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Exhaustive factor search: `f` (monic, dense) has no monic factor of
/// degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let mut g: Vec<u32> = gf_digits(Elem(idx as u32), p, d as u32);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn default_modulus(p: u32, k: u32) -> Vec<u32> {
    let count = (p as u64).pow(k);
    for idx in 0..count {
        let mut m = gf_digits(Elem(idx as u32), p, k);
        m.push(1);
        if is_irreducible(&m, p) {
            return m;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut k, mut r) = (0u32, q);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p as u32, k))
}

/// Parses a ring spec: `Z/<n>`, `GF(<q>)` optionally followed by
/// `: <monic poly in one variable>`, `F_<q>` as a synonym of `GF(<q>)`,
/// and left-associative products `<spec> x <spec>`. Rings of at most 256
/// elements are checked against the ring axioms exhaustively.
pub fn make_ring(spec: &str) -> Result<FiniteRing, RingError> {
    let ring = parse_ring(spec)?;
    if ring.card() <= TABLE_LIMIT {
        ring.verify_axioms()?;
    }
    Ok(ring)
}

fn parse_ring(spec: &str) -> Result<FiniteRing, RingError> {
    let parts = split_product(spec);
    if parts.len() > 1 {
        let mut acc = parse_ring(parts[0])?;
        for part in &parts[1..] {
            acc = FiniteRing::product(vec![acc, parse_ring(part)?])?;
        }
        return Ok(acc);
    }
    let s = spec.trim();
    let bad = |msg: &str| RingError::Spec { spec: spec.to_string(), msg: msg.to_string() };
    if let Some(inner) = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        if split_top_level(inner, ')').len() == 1 || balanced(inner) {
            return parse_ring(inner);
        }
    }
    if let Some(n) = s.strip_prefix("Z/") {
        let n: i64 = n.trim().parse().map_err(|_| bad("expected an integer modulus"))?;
        if n <= 0 {
            return Err(bad("modulus must be >= 1"));
        }
        return FiniteRing::zmod(u32::try_from(n).map_err(|_| bad("modulus too large"))?);
    }
    let (q_txt, modulus_txt) = if let Some(rest) = s.strip_prefix("GF(") {
        let close = rest.find(')').ok_or_else(|| bad("missing `)`"))?;
        let tail = rest[close + 1..].trim();
        let modulus = match tail.strip_prefix(':') {
            Some(m) => Some(m.trim()),
            None if tail.is_empty() => None,
            None => return Err(bad("unexpected text after GF(q)")),
        };
        (&rest[..close], modulus)
    } else if let Some(rest) = s.strip_prefix("F_") {
        (rest, None)
    } else {
        return Err(bad("expected Z/n, GF(q) or a product"));
    };
    let q: u64 = q_txt.trim().parse().map_err(|_| bad("expected an integer field size"))?;
    let (p, k) = prime_power(q).ok_or_else(|| bad("field size must be a prime power"))?;
    let modulus = match modulus_txt {
        None => None,
        Some(txt) => {
            let e = syntax::parse_expr(txt).map_err(|e| bad(&e.msg))?;
            let mut ids = Vec::new();
            e.idents(&mut ids);
            if ids.len() > 1 {
                return Err(bad("modulus must be a polynomial in one variable"));
            }
            let poly = syntax::expr_to_poly(&e, &ids).map_err(|m| bad(&m))?;
            let deg = poly.total_degree() as usize;
            let mut dense = vec![0u32; deg + 1];
            for (m, c) in poly.terms() {
                dense[m.degree() as usize] = c.mod_floor(&BigInt::from(p)).to_u32().unwrap();
            }
            Some(dense)
        }
    };
    FiniteRing::gf(p, k, modulus).map_err(|e| match e {
        RingError::Spec { msg, .. } => RingError::Spec { spec: spec.to_string(), msg },
        other => other,
    })
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

/// Splits on whitespace-delimited `x` separators that are followed by the
/// start of a ring spec, at parenthesis depth zero.
fn split_product(spec: &str) -> Vec<&str> {
    let bytes = spec.as_bytes();
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut i = 0;
    while i < bytes.len() {
        match bytes[i] {
            b'(' => depth += 1,
            b')' => depth -= 1,
            b'x' if depth == 0
                && i > 0
                && bytes[i - 1].is_ascii_whitespace()
                && i + 1 < bytes.len()
                && bytes[i + 1].is_ascii_whitespace() =>
            {
                let rest = spec[i + 1..].trim_start();
                if rest.starts_with("Z/") || rest.starts_with("GF") || rest.starts_with("F_") || rest.starts_with('(') {
                    parts.push(&spec[start..i]);
                    start = i + 1;
                }
            }
            _ => {}
        }
        i += 1;
    }
    parts.push(&spec[start..]);
    parts
}

/// A unital ring homomorphism between finite rings, stored as its graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingHom {
    pub dom: FiniteRing,
    pub cod: FiniteRing,
    pub map: Vec<Elem>,
    pub injective: bool,
    pub surjective: bool,
}

impl RingHom {
    /// Wraps a graph; the hom laws are not checked (see [`RingHom::is_hom`]).
    pub fn from_map(dom: &FiniteRing, cod: &FiniteRing, map: Vec<Elem>) -> Self {
        let mut seen = vec![false; cod.card() as usize];
        let mut distinct = 0;
        for x in &map {
            if !seen[x.0 as usize] {
                seen[x.0 as usize] = true;
                distinct += 1;
            }
        }
        RingHom {
            dom: dom.clone(),
            cod: cod.clone(),
            injective: distinct == map.len(),
            surjective: distinct == cod.card() as usize,
            map,
        }
    }

    pub fn identity(a: &FiniteRing) -> Self {
        Self::from_map(a, a, a.elements().collect())
    }

    pub fn apply(&self, a: Elem) -> Elem {
        self.map[a.0 as usize]
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &RingHom) -> RingHom {
        assert_eq!(self.cod, other.dom, "composing homs with mismatched rings");
        let map = self.map.iter().map(|&x| other.apply(x)).collect();
        Self::from_map(&self.dom, &other.cod, map)
    }

    /// Projection of a product ring onto factor `i`.
    pub fn projection(product: &FiniteRing, i: usize) -> RingHom {
        let target = product.factors()[i].clone();
        let map = product
            .elements()
            .map(|a| product.components(a).expect("product ring")[i])
            .collect();
        Self::from_map(product, &target, map)
    }

    pub fn kernel(&self) -> Vec<Elem> {
        self.dom.elements().filter(|&a| self.apply(a) == self.cod.zero()).collect()
    }

    /// Exhaustive check that the map preserves 0, 1, + and *.
    pub fn is_hom(&self) -> bool {
        let (a, b) = (&self.dom, &self.cod);
        if self.apply(a.zero()) != b.zero() || self.apply(a.one()) != b.one() {
            return false;
        }
        a.elements().all(|x| {
            a.elements().all(|y| {
                self.apply(a.add(x, y)) == b.add(self.apply(x), self.apply(y))
                    && self.apply(a.mul(x, y)) == b.mul(self.apply(x), self.apply(y))
            })
        })
    }
}

#[derive(Clone, Copy, Debug)]
enum Deriv {
    Zero,
    One,
    Gen(usize),
    Add(Elem, Elem),
    Mul(Elem, Elem),
}

/// Ring generators of `a` with a derivation of every element from them.
struct GenPlan {
    gens: Vec<Elem>,
    order: Vec<(Elem, Deriv)>,
}

fn generator_plan(a: &FiniteRing) -> GenPlan {
    let n = a.card() as usize;
    let mut known = vec![false; n];
    let mut order: Vec<(Elem, Deriv)> = Vec::new();
    let mut gens = Vec::new();
    let mut queue: Vec<Elem> = Vec::new();
    let push = |x: Elem, d: Deriv, known: &mut Vec<bool>, order: &mut Vec<(Elem, Deriv)>, queue: &mut Vec<Elem>| {
        if !known[x.0 as usize] {
            known[x.0 as usize] = true;
            order.push((x, d));
            queue.push(x);
        }
    };
    push(a.zero(), Deriv::Zero, &mut known, &mut order, &mut queue);
    push(a.one(), Deriv::One, &mut known, &mut order, &mut queue);
    loop {
        while let Some(x) = queue.pop() {
            let snapshot: Vec<Elem> = order.iter().map(|(e, _)| *e).collect();
            for y in snapshot {
                push(a.add(x, y), Deriv::Add(x, y), &mut known, &mut order, &mut queue);
                push(a.mul(x, y), Deriv::Mul(x, y), &mut known, &mut order, &mut queue);
            }
        }
        match known.iter().position(|k| !k) {
            None => break,
            Some(i) => {
                let g = Elem(i as u32);
                push(g, Deriv::Gen(gens.len()), &mut known, &mut order, &mut queue);
                gens.push(g);
            }
        }
    }
    GenPlan { gens, order }
}

/// All unital ring homomorphisms `a -> b`, in lexicographic order of the
/// images of a fixed set of ring generators of `a`.
pub fn ring_homs(a: &FiniteRing, b: &FiniteRing, budget: u64) -> Result<Vec<RingHom>, RingError> {
    let plan = generator_plan(a);
    let r = plan.gens.len();
    let candidates = (b.card() as u128).checked_pow(r as u32).unwrap_or(u128::MAX);
    if candidates > budget as u128 {
        return Err(RingError::BudgetExceeded { candidates, budget });
    }
    let mut out = Vec::new();
    let mut images = vec![Elem(0); r];
    for idx in 0..candidates as u64 {
        let mut rest = idx;
        for slot in images.iter_mut().rev() {
            *slot = Elem((rest % b.card() as u64) as u32);
            rest /= b.card() as u64;
        }
        let mut map = vec![Elem(0); a.card() as usize];
        let mut consistent = true;
        for &(x, d) in &plan.order {
            let v = match d {
                Deriv::Zero => b.zero(),
                Deriv::One => b.one(),
                Deriv::Gen(i) => images[i],
                Deriv::Add(u, w) => b.add(map[u.0 as usize], map[w.0 as usize]),
                Deriv::Mul(u, w) => b.mul(map[u.0 as usize], map[w.0 as usize]),
            };
            // 0 and 1 coincide in the trivial ring
            if matches!(d, Deriv::One) && x == a.zero() && v != b.zero() {
                consistent = false;
                break;
            }
            map[x.0 as usize] = v;
        }
        if !consistent {
            continue;
        }
        let hom = RingHom::from_map(a, b, map);
        if hom.is_hom() {
            out.push(hom);
        }
    }
    Ok(out)
}
