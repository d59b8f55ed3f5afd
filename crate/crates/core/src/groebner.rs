//! Gröbner bases over Q, Z/p and Z.
//!
//! Over Q the engine is fraction-free and keeps primitive integer
//! polynomials with positive leading coefficient. Over Z/p bases are monic.
//! Over Z the engine computes strong bases from S-polynomials and
//! G-polynomials with Euclidean (floor) reduction of coefficients.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::finring::is_prime;
use crate::poly::{mod_inverse, Monomial, MonomialOrder, OrderKind, Poly, Var};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GbError {
    #[error("groebner budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
}

/// Limits for a single basis computation. Exceeding any of them aborts the
/// computation with [`GbError::BudgetExceeded`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbBudget {
    pub max_basis: usize,
    pub max_degree: u32,
    pub max_coeff_bits: u64,
    pub max_reductions: u64,
}

impl Default for GbBudget {
    fn default() -> Self {
        GbBudget { max_basis: 400, max_degree: 64, max_coeff_bits: 4096, max_reductions: 2_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Rationals,
    /// Z/p for a prime p.
    Fp(u32),
    Integers,
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Domain::Rationals => write!(f, "Q"),
            Domain::Fp(p) => write!(f, "Z/{p}"),
            Domain::Integers => write!(f, "Z"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Membership {
    Proved,
    Refuted,
}

impl Membership {
    pub fn from_bool(b: bool) -> Self {
        if b {
            Membership::Proved
        } else {
            Membership::Refuted
        }
    }

    pub fn holds(self) -> bool {
        self == Membership::Proved
    }
}

/// Dense sort key: for grlex the total degree followed by the exponents in
/// variable-priority order; for lex just the exponents.
struct Keyer {
    vars: Vec<Var>,
    graded: bool,
}

impl Keyer {
    fn new(ord: &MonomialOrder, nvars: Var) -> Self {
        let mut vars: Vec<Var> = (0..nvars).collect();
        vars.sort_by_key(|&v| ord.rank(v));
        Keyer { vars, graded: ord.kind() == OrderKind::GrLex }
    }

    fn key(&self, m: &Monomial) -> Vec<u32> {
        let mut k = Vec::with_capacity(self.vars.len() + 1);
        if self.graded {
            k.push(m.degree());
        }
        k.extend(self.vars.iter().map(|&v| m.exponent(v)));
        k
    }
}

#[derive(Clone, Debug)]
struct Term {
    key: Vec<u32>,
    mono: Monomial,
    coeff: BigInt,
}

/// Terms in strictly decreasing order.
type Terms = Vec<Term>;

struct Engine<'a> {
    keyer: Keyer,
    domain: Domain,
    budget: &'a GbBudget,
    reductions: u64,
}

impl<'a> Engine<'a> {
    fn new(ord: &MonomialOrder, domain: Domain, budget: &'a GbBudget, polys: &[&Poly]) -> Result<Self, GbError> {
        if let Domain::Fp(p) = domain {
            if !is_prime(p as u64) {
                return Err(GbError::NotPrime(p));
            }
        }
        let mut nvars = 0;
        for p in polys {
            if let Some(v) = p.max_var() {
                nvars = nvars.max(v + 1);
            }
        }
        for &v in ord.priority() {
            nvars = nvars.max(v + 1);
        }
        Ok(Engine { keyer: Keyer::new(ord, nvars), domain, budget, reductions: 0 })
    }

    fn modulus(&self) -> Option<BigInt> {
        match self.domain {
            Domain::Fp(p) => Some(BigInt::from(p)),
            _ => None,
        }
    }

    fn import(&self, p: &Poly) -> Terms {
        let m = self.modulus();
        let mut t: Terms = p
            .terms()
            .filter_map(|(mono, c)| {
                let c = match &m {
                    Some(n) => c.mod_floor(n),
                    None => c.clone(),
                };
                (!c.is_zero()).then(|| Term { key: self.keyer.key(mono), mono: mono.clone(), coeff: c })
            })
            .collect();
        t.sort_by(|a, b| b.key.cmp(&a.key));
        t
    }

    fn export(&self, t: &Terms) -> Poly {
        Poly::from_terms(t.iter().map(|x| (x.mono.clone(), x.coeff.clone())))
    }

    fn check_size(&self, t: &Terms) -> Result<(), GbError> {
        for x in t {
            if x.mono.degree() > self.budget.max_degree {
                return Err(GbError::BudgetExceeded(format!(
                    "degree {} exceeds max_degree = {}",
                    x.mono.degree(),
                    self.budget.max_degree
                )));
            }
            if x.coeff.bits() > self.budget.max_coeff_bits {
                return Err(GbError::BudgetExceeded(format!(
                    "coefficient of {} bits exceeds max_coeff_bits = {}",
                    x.coeff.bits(),
                    self.budget.max_coeff_bits
                )));
            }
        }
        Ok(())
    }

    fn tick(&mut self) -> Result<(), GbError> {
        self.reductions += 1;
        if self.reductions > self.budget.max_reductions {
            return Err(GbError::BudgetExceeded(format!(
                "more than max_reductions = {} reduction steps",
                self.budget.max_reductions
            )));
        }
        Ok(())
    }

    /// `a*f - c*mono*g`.
    fn axpy(&self, a: &BigInt, f: &Terms, c: &BigInt, mono: &Monomial, g: &Terms) -> Terms {
        let m = self.modulus();
        let norm = |x: BigInt| match &m {
            Some(n) => x.mod_floor(n),
            None => x,
        };
        let shifted: Terms = g
            .iter()
            .map(|t| {
                let mm = t.mono.mul(mono);
                Term { key: self.keyer.key(&mm), mono: mm, coeff: -(c * &t.coeff) }
            })
            .collect();
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < f.len() || j < shifted.len() {
            let ord = match (f.get(i), shifted.get(j)) {
                (Some(x), Some(y)) => x.key.cmp(&y.key),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    let c = norm(a * &f[i].coeff);
                    if !c.is_zero() {
                        out.push(Term { coeff: c, ..f[i].clone() });
                    }
                    i += 1;
                }
                Ordering::Less => {
                    let c = norm(shifted[j].coeff.clone());
                    if !c.is_zero() {
                        out.push(Term { coeff: c, ..shifted[j].clone() });
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = norm(a * &f[i].coeff + &shifted[j].coeff);
                    if !c.is_zero() {
                        out.push(Term { coeff: c, ..f[i].clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Positive leading coefficient; primitive over Q; monic over Z/p.
    fn normalize(&self, mut t: Terms) -> Terms {
        let Some(lead) = t.first() else { return t };
        match self.domain {
            Domain::Fp(p) => {
                let n = BigInt::from(p);
                let inv = mod_inverse(&lead.coeff, &n).expect("nonzero mod prime");
                for x in &mut t {
                    x.coeff = (&x.coeff * &inv).mod_floor(&n);
                }
            }
            Domain::Rationals => {
                let mut g = t.iter().fold(BigInt::zero(), |g, x| g.gcd(&x.coeff));
                if lead.coeff.is_negative() {
                    g = -g;
                }
                for x in &mut t {
                    x.coeff = &x.coeff / &g;
                }
            }
            Domain::Integers => {
                if lead.coeff.is_negative() {
                    for x in &mut t {
                        x.coeff = -x.coeff.clone();
                    }
                }
            }
        }
        t
    }

    /// Full reduction of every term of `f` by `basis`. With `exact`, integer
    /// reduction only fires when the leading coefficient divides the term.
    fn reduce(&mut self, mut f: Terms, basis: &[Terms], exact: bool) -> Result<Terms, GbError> {
        let mut idx = 0;
        while idx < f.len() {
            let mut changed = false;
            for g in basis {
                let lead = &g[0];
                let Some(q) = f[idx].mono.div(&lead.mono) else { continue };
                let c = f[idx].coeff.clone();
                self.tick()?;
                match self.domain {
                    Domain::Fp(p) => {
                        let n = BigInt::from(p);
                        let factor = (&c * mod_inverse(&lead.coeff, &n).expect("monic")).mod_floor(&n);
                        f = self.axpy(&BigInt::one(), &f, &factor, &q, g);
                    }
                    Domain::Rationals => {
                        let d = c.gcd(&lead.coeff);
                        let (a, b) = (&lead.coeff / &d, &c / &d);
                        f = self.axpy(&a, &f, &b, &q, g);
                        // keep coefficients small
                        f = self.primitive_keep_sign(f);
                    }
                    Domain::Integers => {
                        let factor = if exact {
                            if !c.is_multiple_of(&lead.coeff) {
                                continue;
                            }
                            &c / &lead.coeff
                        } else {
                            c.div_floor(&lead.coeff)
                        };
                        if factor.is_zero() {
                            continue;
                        }
                        f = self.axpy(&BigInt::one(), &f, &factor, &q, g);
                    }
                }
                self.check_size(&f)?;
                changed = true;
                break;
            }
            if !changed {
                idx += 1;
            }
        }
        Ok(f)
    }

    fn primitive_keep_sign(&self, mut t: Terms) -> Terms {
        let g = t.iter().fold(BigInt::zero(), |g, x| g.gcd(&x.coeff));
        if g > BigInt::one() {
            for x in &mut t {
                x.coeff = &x.coeff / &g;
            }
        }
        t
    }

    fn s_poly(&self, f: &Terms, g: &Terms) -> Terms {
        let (lf, lg) = (&f[0], &g[0]);
        let m = lf.mono.lcm(&lg.mono);
        let l = lf.coeff.lcm(&lg.coeff);
        let a = &l / &lf.coeff;
        let b = &l / &lg.coeff;
        let f1 = self.axpy(&BigInt::zero(), &Vec::new(), &-a, &m.div(&lf.mono).unwrap(), f);
        self.axpy(&BigInt::one(), &f1, &b, &m.div(&lg.mono).unwrap(), g)
    }

    /// Bezout combination of the leading terms; `None` when one leading
    /// coefficient divides the other.
    fn g_poly(&self, f: &Terms, g: &Terms) -> Option<Terms> {
        let (lf, lg) = (&f[0], &g[0]);
        if lg.coeff.is_multiple_of(&lf.coeff) || lf.coeff.is_multiple_of(&lg.coeff) {
            return None;
        }
        let e = lf.coeff.extended_gcd(&lg.coeff);
        let m = lf.mono.lcm(&lg.mono);
        let f1 = self.axpy(&BigInt::zero(), &Vec::new(), &-e.x, &m.div(&lf.mono).unwrap(), f);
        Some(self.axpy(&BigInt::one(), &f1, &-e.y, &m.div(&lg.mono).unwrap(), g))
    }

    fn is_unit(&self, t: &Terms) -> bool {
        t.len() == 1
            && t[0].mono.is_one()
            && match self.domain {
                Domain::Integers => t[0].coeff.abs().is_one(),
                _ => true,
            }
    }

    fn buchberger(&mut self, gens: &[Poly]) -> Result<Vec<Terms>, GbError> {
        let mut basis: Vec<Terms> = Vec::new();
        for g in gens {
            let t = self.normalize(self.import(g));
            if !t.is_empty() {
                self.check_size(&t)?;
                basis.push(t);
            }
        }
        if let Some(u) = basis.iter().find(|t| self.is_unit(t)) {
            return Ok(vec![self.normalize(u.clone())]);
        }
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for j in 0..basis.len() {
            for i in 0..j {
                pairs.push((i, j));
            }
        }
        let over_field = self.domain != Domain::Integers;
        while !pairs.is_empty() {
            // normal strategy: smallest lcm degree, then earliest pair
            let best = (0..pairs.len())
                .min_by_key(|&k| {
                    let (i, j) = pairs[k];
                    (basis[i][0].mono.lcm(&basis[j][0].mono).degree(), j, i)
                })
                .unwrap();
            let (i, j) = pairs.remove(best);
            let (mi, mj) = (&basis[i][0].mono, &basis[j][0].mono);
            let coprime = mi.lcm(mj) == mi.mul(mj);
            let mut candidates = Vec::new();
            if !(over_field && coprime) {
                candidates.push(self.s_poly(&basis[i], &basis[j]));
            }
            if !over_field {
                if let Some(g) = self.g_poly(&basis[i], &basis[j]) {
                    candidates.push(g);
                }
            }
            for c in candidates {
                let r = self.reduce(c, &basis, false)?;
                if r.is_empty() {
                    continue;
                }
                let r = self.normalize(r);
                if self.is_unit(&r) {
                    return Ok(vec![r]);
                }
                basis.push(r);
                if basis.len() > self.budget.max_basis {
                    return Err(GbError::BudgetExceeded(format!(
                        "basis grew beyond max_basis = {}",
                        self.budget.max_basis
                    )));
                }
                let n = basis.len() - 1;
                for k in 0..n {
                    pairs.push((k, n));
                }
            }
        }
        self.finalize(basis)
    }

    fn finalize(&mut self, basis: Vec<Terms>) -> Result<Vec<Terms>, GbError> {
        let ints = self.domain == Domain::Integers;
        let divides = |h: &Terms, g: &Terms| {
            h[0].mono.divides(&g[0].mono) && (!ints || g[0].coeff.is_multiple_of(&h[0].coeff))
        };
        let mut keep: Vec<Terms> = Vec::new();
        for (k, g) in basis.iter().enumerate() {
            let redundant = basis.iter().enumerate().any(|(l, h)| {
                l != k && divides(h, g) && (!divides(g, h) || l < k)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        for k in 0..keep.len() {
            let others: Vec<Terms> =
                keep.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, t)| t.clone()).collect();
            let r = self.reduce(keep[k].clone(), &others, ints)?;
            keep[k] = self.normalize(r);
        }
        keep.sort_by(|a, b| b[0].key.cmp(&a[0].key).then_with(|| a[0].coeff.cmp(&b[0].coeff)));
        Ok(keep)
    }
}

/// A reduced Gröbner basis (strong over Z).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GBasis {
    pub domain: Domain,
    pub order: MonomialOrder,
    pub gens: Vec<Poly>,
    budget: GbBudget,
}

impl GBasis {
    pub fn is_unit_ideal(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_constant() && {
            let c = self.gens[0].constant_value().unwrap();
            match self.domain {
                Domain::Integers => c.abs().is_one(),
                _ => !c.is_zero(),
            }
        }
    }

    /// Normal form of `p`. Over Q the result is primitive with positive
    /// leading coefficient (normal forms over a field are defined up to a
    /// unit).
    pub fn normal_form(&self, p: &Poly) -> Result<Poly, GbError> {
        let refs: Vec<&Poly> = self.gens.iter().chain(std::iter::once(p)).collect();
        let mut e = Engine::new(&self.order, self.domain, &self.budget, &refs)?;
        let basis: Vec<Terms> = self.gens.iter().map(|g| e.import(g)).collect();
        let f = e.import(p);
        let r = e.reduce(f, &basis, false)?;
        let r = match self.domain {
            Domain::Integers => r,
            _ => e.normalize(r),
        };
        Ok(e.export(&r))
    }

    pub fn contains(&self, p: &Poly) -> Result<bool, GbError> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Post-hoc check that every S-polynomial (and G-polynomial over Z)
    /// reduces to zero.
    pub fn is_groebner(&self) -> Result<bool, GbError> {
        let refs: Vec<&Poly> = self.gens.iter().collect();
        let mut e = Engine::new(&self.order, self.domain, &self.budget, &refs)?;
        let basis: Vec<Terms> = self.gens.iter().map(|g| e.import(g)).collect();
        for j in 0..basis.len() {
            for i in 0..j {
                let s = e.s_poly(&basis[i], &basis[j]);
                if !e.reduce(s, &basis, false)?.is_empty() {
                    return Ok(false);
                }
                if self.domain == Domain::Integers {
                    if let Some(g) = e.g_poly(&basis[i], &basis[j]) {
                        if !e.reduce(g, &basis, false)?.is_empty() {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        Ok(true)
    }
}

pub fn gbasis(gens: &[Poly], ord: &MonomialOrder, domain: Domain, budget: &GbBudget) -> Result<GBasis, GbError> {
    let lifted: Vec<Poly> = gens.iter().map(Poly::lift).collect();
    let refs: Vec<&Poly> = lifted.iter().collect();
    let mut e = Engine::new(ord, domain, budget, &refs)?;
    let basis = e.buchberger(&lifted)?;
    Ok(GBasis {
        domain,
        order: ord.clone(),
        gens: basis.iter().map(|t| e.export(t)).collect(),
        budget: budget.clone(),
    })
}

pub fn ideal_member(
    q: &Poly,
    gens: &[Poly],
    ord: &MonomialOrder,
    domain: Domain,
    budget: &GbBudget,
) -> Result<Membership, GbError> {
    let gb = gbasis(gens, ord, domain, budget)?;
    Ok(Membership::from_bool(gb.contains(&q.lift())?))
}

/// Radical membership over Q (`p = 0`) or Z/p via a fresh variable `y` and
/// the test `1 ∈ (gens, q*y - 1)`.
pub fn radical_member(q: &Poly, gens: &[Poly], p: u32, budget: &GbBudget) -> Result<Membership, GbError> {
    let domain = if p == 0 { Domain::Rationals } else { Domain::Fp(p) };
    let fresh = gens
        .iter()
        .chain(std::iter::once(q))
        .filter_map(Poly::max_var)
        .max()
        .map_or(0, |v| v + 1);
    let mut all: Vec<Poly> = gens.iter().map(Poly::lift).collect();
    all.push(&(&q.lift() * &Poly::var(fresh)) - &Poly::one());
    let gb = gbasis(&all, &MonomialOrder::grlex(), domain, budget)?;
    Ok(Membership::from_bool(gb.is_unit_ideal()))
}

/// Generators of `(gens) ∩ K[keep]` over a field, via lex with the
/// eliminated variables first.
pub fn eliminate(gens: &[Poly], keep: &[Var], domain: Domain, budget: &GbBudget) -> Result<Vec<Poly>, GbError> {
    let ord = elimination_order(gens, keep);
    let gb = gbasis(gens, &ord, domain, budget)?;
    Ok(gb
        .gens
        .into_iter()
        .filter(|g| g.vars().iter().all(|v| keep.contains(v)))
        .collect())
}

/// Lex order ranking every variable of `gens` outside `keep` above `keep`.
pub fn elimination_order(gens: &[Poly], keep: &[Var]) -> MonomialOrder {
    let mut all: Vec<Var> = gens.iter().flat_map(|g| g.vars()).collect();
    all.sort_unstable();
    all.dedup();
    let mut priority: Vec<Var> = all.iter().copied().filter(|v| !keep.contains(v)).collect();
    let mut kept: Vec<Var> = keep.to_vec();
    kept.sort_unstable();
    kept.dedup();
    priority.extend(kept);
    MonomialOrder::with_priority(OrderKind::Lex, priority)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_poly;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn polys(src: &[&str], vars: &[&str]) -> Vec<Poly> {
        src.iter().map(|s| parse_poly(s, &names(vars)).unwrap()).collect()
    }

    fn b() -> GbBudget {
        GbBudget::default()
    }

    #[test]
    fn single_monomial() {
        let g = polys(&["x"], &["x"]);
        let gb = gbasis(&g, &MonomialOrder::lex(), Domain::Rationals, &b()).unwrap();
        assert_eq!(gb.gens, g);
    }

    #[test]
    fn unit_over_q_but_not_over_z() {
        let g = polys(&["x^2+1", "x-1"], &["x"]);
        let q = gbasis(&g, &MonomialOrder::lex(), Domain::Rationals, &b()).unwrap();
        assert_eq!(q.gens, vec![Poly::one()]);
        let z = gbasis(&g, &MonomialOrder::lex(), Domain::Integers, &b()).unwrap();
        assert_eq!(z.gens, polys(&["x-1", "2"], &["x"]));
        assert!(z.is_groebner().unwrap());
        assert_eq!(
            ideal_member(&Poly::one(), &g, &MonomialOrder::lex(), Domain::Integers, &b()).unwrap(),
            Membership::Refuted
        );
    }

    #[test]
    fn membership_examples() {
        let x = names(&["x", "y"]);
        let q = parse_poly("x^2-1", &x).unwrap();
        let g = polys(&["x-1"], &["x", "y"]);
        assert!(ideal_member(&q, &g, &MonomialOrder::lex(), Domain::Rationals, &b()).unwrap().holds());
        let y = parse_poly("y", &x).unwrap();
        let g = polys(&["x"], &["x", "y"]);
        assert!(!ideal_member(&y, &g, &MonomialOrder::lex(), Domain::Rationals, &b()).unwrap().holds());
    }

    #[test]
    fn radical_examples() {
        let x = names(&["x"]);
        let sq = polys(&["x^2"], &["x"]);
        assert!(radical_member(&parse_poly("x", &x).unwrap(), &sq, 0, &b()).unwrap().holds());
        assert!(!radical_member(&parse_poly("x+1", &x).unwrap(), &sq, 0, &b()).unwrap().holds());
        let i = polys(&["x^2+1"], &["x"]);
        assert!(!radical_member(&Poly::one(), &i, 3, &b()).unwrap().holds());
    }

    #[test]
    fn elimination_examples() {
        let v = ["x", "y", "t", "z"];
        assert!(eliminate(&polys(&["x-y"], &v), &[1], Domain::Rationals, &b()).unwrap().is_empty());
        assert!(eliminate(&polys(&["z*(y-x)-1"], &v), &[0, 1], Domain::Rationals, &b()).unwrap().is_empty());
        let cubic = eliminate(&polys(&["x-t^2", "y-t^3"], &v), &[0, 1], Domain::Rationals, &b()).unwrap();
        let expected = parse_poly("y^2-x^3", &names(&v)).unwrap();
        assert_eq!(cubic.len(), 1);
        assert!(cubic[0] == expected || cubic[0] == -&expected);
    }

    #[test]
    fn fp_bases_are_monic() {
        let g = polys(&["2*x*y-1", "x^2+y"], &["x", "y"]);
        let gb = gbasis(&g, &MonomialOrder::grlex(), Domain::Fp(5), &b()).unwrap();
        assert!(gb.is_groebner().unwrap());
        for p in &gb.gens {
            assert_eq!(p.leading_term(&gb.order).unwrap().1, &BigInt::one());
        }
        assert!(matches!(gbasis(&g, &MonomialOrder::grlex(), Domain::Fp(6), &b()), Err(GbError::NotPrime(6))));
    }

    #[test]
    fn integer_strong_basis() {
        let g = polys(&["2*x*y", "3*y^2", "6*x+y"], &["x", "y"]);
        let gb = gbasis(&g, &MonomialOrder::grlex(), Domain::Integers, &b()).unwrap();
        assert!(gb.is_groebner().unwrap());
        for p in &g {
            assert!(gb.contains(p).unwrap());
        }
    }

    #[test]
    fn budget_is_reported() {
        let g = polys(&["x^3-y^2", "x*y^2-x-1", "y^5-x^2*y+3"], &["x", "y"]);
        let tiny = GbBudget { max_reductions: 3, ..GbBudget::default() };
        assert!(matches!(
            gbasis(&g, &MonomialOrder::grlex(), Domain::Rationals, &tiny),
            Err(GbError::BudgetExceeded(_))
        ));
    }
}
