//! Finitely presented rings `Z[x1..xn]/(p1..pm)`, primitive morphisms
//! between them and the finite colimits built from them.

use std::fmt;

use serde::Serialize;

use crate::finring::{Elem, FiniteRing};
use crate::groebner::{self, Domain, GbBudget};
use crate::poly::{MonomialOrder, OrderKind, Poly, Var};
use crate::syntax::{self, split_top_level, ParseError};
use crate::{Budget, Error, Result};

/// A finitely presented ring. Presentations are compared syntactically;
/// isomorphism of presented rings is never decided.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    pub names: Vec<String>,
    pub relations: Vec<Poly>,
    pub label: Option<String>,
}

impl Presentation {
    /// Panics if a relation mentions a variable outside `names`.
    pub fn new(names: Vec<String>, relations: Vec<Poly>) -> Self {
        for r in &relations {
            if let Some(v) = r.max_var() {
                assert!((v as usize) < names.len(), "relation uses variable {v} beyond the presentation");
            }
        }
        Presentation { names, relations, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// The integers: no variables, no relations.
    pub fn integers() -> Self {
        Presentation::new(Vec::new(), Vec::new())
    }

    /// The trivial ring `Z[]/(1)`.
    pub fn trivial() -> Self {
        Presentation::new(Vec::new(), vec![Poly::one()])
    }

    /// `Z[names]` with no relations.
    pub fn free(names: &[&str]) -> Self {
        Presentation::new(names.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    /// Same ring data, ignoring the label.
    pub fn same_as(&self, other: &Presentation) -> bool {
        self.names.len() == other.names.len() && self.relations == other.relations
    }

    pub fn parse(src: &str) -> Result<Self> {
        // 1-based column of a subslice of `src`
        let col = |sub: &str| sub.as_ptr() as usize - src.as_ptr() as usize + 1;
        let s = src.trim();
        let (label, body) = match s.strip_prefix("ring ") {
            Some(rest) => {
                let (name, body) = rest
                    .split_once('=')
                    .ok_or_else(|| ParseError::new(1, 1, "expected `ring <name> = Z[...]`"))?;
                (Some(name.trim().to_string()), body.trim())
            }
            None => (None, s),
        };
        let rest = body
            .strip_prefix("Z[")
            .ok_or_else(|| ParseError::new(1, col(body), format!("expected `Z[` in `{body}`")))?;
        let close = rest.find(']').ok_or_else(|| ParseError::new(1, col(body), "missing `]`"))?;
        let names: Vec<String> = rest[..close]
            .split(',')
            .map(|v| v.trim().to_string())
            .filter(|v| !v.is_empty())
            .collect();
        for (i, n) in names.iter().enumerate() {
            let ok = n.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
            if !ok || names[..i].contains(n) {
                return Err(ParseError::new(1, col(rest), format!("bad or repeated variable name `{n}`")).into());
            }
        }
        let tail = rest[close + 1..].trim();
        let mut relations = Vec::new();
        if !tail.is_empty() {
            let inner = tail
                .strip_prefix('/')
                .map(str::trim)
                .and_then(|t| t.strip_prefix('('))
                .and_then(|t| t.strip_suffix(')'))
                .ok_or_else(|| ParseError::new(1, col(tail), "expected `/(relations)` after the variables"))?;
            if !inner.trim().is_empty() {
                for part in split_top_level(inner, ',') {
                    let rel = syntax::parse_poly(part, &names).map_err(|mut e| {
                        e.col += col(part) - 1;
                        e
                    })?;
                    relations.push(rel);
                }
            }
        }
        let mut p = Presentation::new(names, relations);
        p.label = label;
        Ok(p)
    }

    fn body(&self) -> String {
        let mut s = format!("Z[{}]", self.names.join(","));
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|r| r.to_string_with(&self.names)).collect();
            s.push_str(&format!("/({})", rels.join(",")));
        }
        s
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.label {
            Some(l) => write!(f, "ring {l} = {}", self.body()),
            None => f.write_str(&self.body()),
        }
    }
}

/// Strength of what is known about a morphism's well-definedness (or
/// surjectivity). Ordered from weakest to strongest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verification {
    Refuted,
    Unknown,
    Assumed,
    Proved,
}

impl fmt::Display for Verification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verification::Refuted => "refuted",
            Verification::Unknown => "unknown",
            Verification::Assumed => "assumed",
            Verification::Proved => "proved",
        })
    }
}

/// A ring map `dom -> cod` given by the images of the domain variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimMorphism {
    pub dom: Presentation,
    pub cod: Presentation,
    pub images: Vec<Poly>,
    pub verification: Verification,
}

impl PrimMorphism {
    pub fn new(dom: Presentation, cod: Presentation, images: Vec<Poly>) -> Result<Self> {
        if images.len() != dom.nvars() {
            return Err(Error::invalid(format!(
                "{} images given for {} domain variables",
                images.len(),
                dom.nvars()
            )));
        }
        for im in &images {
            if im.modulus().is_some() {
                return Err(Error::invalid("morphism images must have integer coefficients"));
            }
            if let Some(v) = im.max_var() {
                if v as usize >= cod.nvars() {
                    return Err(Error::invalid(format!("image mentions variable {v} outside the codomain")));
                }
            }
        }
        Ok(PrimMorphism { dom, cod, images, verification: Verification::Unknown })
    }

    /// A morphism whose well-definedness is taken on trust.
    pub fn assumed(dom: Presentation, cod: Presentation, images: Vec<Poly>) -> Result<Self> {
        let mut m = Self::new(dom, cod, images)?;
        m.verification = Verification::Assumed;
        Ok(m)
    }

    pub fn identity(p: &Presentation) -> Self {
        PrimMorphism {
            dom: p.clone(),
            cod: p.clone(),
            images: (0..p.nvars() as Var).map(Poly::var).collect(),
            verification: Verification::Proved,
        }
    }

    /// The quotient map `P -> P/(extra)` on the same variables.
    pub fn canonical_quotient(p: &Presentation, extra: Vec<Poly>) -> Self {
        let mut rels = p.relations.clone();
        rels.extend(extra);
        let cod = Presentation::new(p.names.clone(), rels);
        PrimMorphism {
            dom: p.clone(),
            images: (0..p.nvars() as Var).map(Poly::var).collect(),
            cod,
            verification: Verification::Proved,
        }
    }

    /// The normal morphism `Z[x]/(f) -> Z[x,y]/(f,g)` fixing `x`. The `y`
    /// variables are numbered after the `x` variables.
    pub fn normal(xs: &[String], f: Vec<Poly>, ys: &[String], g: Vec<Poly>) -> Self {
        let dom = Presentation::new(xs.to_vec(), f.clone());
        let mut names = xs.to_vec();
        names.extend(ys.iter().cloned());
        let mut rels = f;
        rels.extend(g);
        let cod = Presentation::new(names, rels);
        PrimMorphism {
            images: (0..xs.len() as Var).map(Poly::var).collect(),
            dom,
            cod,
            verification: Verification::Proved,
        }
    }

    /// Named morphisms: `e` (equality), `i` (inequality), `o` (order as a
    /// square difference), `s` (strict order) and `dN` (N-adic divisibility).
    pub fn builtin(name: &str) -> Result<Self> {
        let xy = Presentation::free(&["x", "y"]);
        let cod = |rel: &str| -> Result<Presentation> {
            Presentation::parse(&format!("Z[x,y,z]/({rel})"))
        };
        let (cod, label) = match name {
            "e" => (Presentation::parse("Z[x,y]/(x-y)")?, "e"),
            "i" => (cod("z*(y-x)-1")?, "i"),
            "o" => (cod("z^2-y+x")?, "o"),
            "s" => (cod("z^2*(x-y)-1")?, "s"),
            other => {
                let p: u32 = other
                    .strip_prefix('d')
                    .and_then(|n| n.parse().ok())
                    .filter(|&p| crate::finring::is_prime(p as u64))
                    .ok_or_else(|| Error::invalid(format!("unknown builtin morphism `{other}`")))?;
                let rel = if p == 2 {
                    "z^3*(x^3+2*y^3)-1".to_string()
                } else {
                    format!("z^2*(x^2+{p}*y^2)-1")
                };
                let m = PrimMorphism::normal(
                    &xy.names,
                    Vec::new(),
                    &["z".to_string()],
                    vec![syntax::parse_poly(&rel, &["x".into(), "y".into(), "z".into()])?],
                );
                return Ok(PrimMorphism { cod: m.cod.with_label(format!("d{p}")), ..m });
            }
        };
        let images = vec![Poly::var(0), Poly::var(1)];
        Ok(PrimMorphism { dom: xy, cod: cod.with_label(label), images, verification: Verification::Proved })
    }

    /// Parses `<pres> -> <pres> [via x -> poly, ...]` or `builtin:<name>`.
    /// Without `via`, each domain variable maps to the codomain variable of
    /// the same name.
    pub fn parse(src: &str) -> Result<Self> {
        let s = src.trim();
        if let Some(name) = s.strip_prefix("builtin:") {
            return Self::builtin(name.trim());
        }
        let (head, via) = match s.split_once(" via ") {
            Some((h, v)) => (h, Some(v)),
            None => (s, None),
        };
        let arrow = head
            .find("->")
            .ok_or_else(|| ParseError::new(1, 1, "expected `<presentation> -> <presentation>`"))?;
        let dom = Presentation::parse(&head[..arrow])?;
        let cod = Presentation::parse(&head[arrow + 2..])?;
        let mut images: Vec<Option<Poly>> = vec![None; dom.nvars()];
        match via {
            Some(v) => {
                for part in split_top_level(v, ',') {
                    let (var, img) = part
                        .split_once("->")
                        .ok_or_else(|| ParseError::new(1, 1, format!("expected `var -> poly` in `{part}`")))?;
                    let i = dom
                        .names
                        .iter()
                        .position(|n| n == var.trim())
                        .ok_or_else(|| Error::invalid(format!("`{}` is not a domain variable", var.trim())))?;
                    images[i] = Some(syntax::parse_poly(img, &cod.names)?);
                }
            }
            None => {
                for (i, n) in dom.names.iter().enumerate() {
                    if let Some(j) = cod.names.iter().position(|m| m == n) {
                        images[i] = Some(Poly::var(j as Var));
                    }
                }
            }
        }
        let images: Vec<Poly> = images
            .into_iter()
            .enumerate()
            .map(|(i, im)| im.ok_or_else(|| Error::invalid(format!("no image for `{}`", dom.names[i]))))
            .collect::<Result<_>>()?;
        PrimMorphism::new(dom, cod, images)
    }

    /// `images` rendered as `x -> poly` pairs in codomain names.
    pub fn images_text(&self) -> Vec<String> {
        self.dom
            .names
            .iter()
            .zip(&self.images)
            .map(|(n, im)| format!("{n} -> {}", im.to_string_with(&self.cod.names)))
            .collect()
    }

    pub fn is_identity_on_variables(&self) -> bool {
        self.dom.nvars() <= self.cod.nvars()
            && self.images.iter().enumerate().all(|(i, im)| *im == Poly::var(i as Var))
    }
}

impl fmt::Display for PrimMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.dom.body(), self.cod.body())?;
        if !self.images.is_empty() {
            write!(f, " via {}", self.images_text().join(", "))?;
        }
        Ok(())
    }
}

/// `n ∘ m`: first `m`, then `n`.
pub fn compose(m: &PrimMorphism, n: &PrimMorphism) -> Result<PrimMorphism> {
    if !m.cod.same_as(&n.dom) {
        return Err(Error::invalid("codomain of the first morphism is not the domain of the second"));
    }
    let images = m
        .images
        .iter()
        .map(|im| im.substitute_list(&n.images))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(PrimMorphism {
        dom: m.dom.clone(),
        cod: n.cod.clone(),
        images,
        verification: m.verification.min(n.verification),
    })
}

/// Appends primes to names of `second` that collide with `first`.
fn disjoint_names(first: &[String], second: &[String]) -> Vec<String> {
    let mut taken: Vec<String> = first.to_vec();
    let mut out = Vec::with_capacity(second.len());
    for n in second {
        let mut cand = n.clone();
        while taken.contains(&cand) {
            cand.push('\'');
        }
        taken.push(cand.clone());
        out.push(cand);
    }
    out
}

fn shift_injection(p: &Presentation, target: &Presentation, offset: Var) -> PrimMorphism {
    PrimMorphism {
        dom: p.clone(),
        cod: target.clone(),
        images: (0..p.nvars() as Var).map(|v| Poly::var(v + offset)).collect(),
        verification: Verification::Proved,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub apex: Presentation,
    pub in_q: PrimMorphism,
    pub in_r: PrimMorphism,
}

/// Pushout of `m: P -> Q` and `a: P -> R`: the variables of `Q` followed by
/// those of `R`, with the relations of both and `m(x) = a(x)` for every
/// variable `x` of `P` (trivial identifications are skipped).
pub fn pushout(m: &PrimMorphism, a: &PrimMorphism) -> Result<Pushout> {
    if !m.dom.same_as(&a.dom) {
        return Err(Error::invalid("pushout of morphisms with different domains"));
    }
    let off = m.cod.nvars() as Var;
    let mut names = m.cod.names.clone();
    names.extend(disjoint_names(&m.cod.names, &a.cod.names));
    let mut rels = m.cod.relations.clone();
    rels.extend(a.cod.relations.iter().map(|r| r.shift_vars(off)));
    for (u, v) in m.images.iter().zip(&a.images) {
        let d = u - &v.shift_vars(off);
        if !d.is_zero() {
            rels.push(d);
        }
    }
    let apex = Presentation::new(names, rels);
    let in_q = shift_injection(&m.cod, &apex, 0);
    let in_r = shift_injection(&a.cod, &apex, off);
    Ok(Pushout { apex, in_q, in_r })
}

/// Coequalizer `Q -> Q/(u(x) - v(x))` of parallel `u, v: P -> Q`.
pub fn coequalizer(u: &PrimMorphism, v: &PrimMorphism) -> Result<PrimMorphism> {
    if !u.dom.same_as(&v.dom) || !u.cod.same_as(&v.cod) {
        return Err(Error::invalid("coequalizer of non-parallel morphisms"));
    }
    let extra: Vec<Poly> = u
        .images
        .iter()
        .zip(&v.images)
        .map(|(a, b)| a - b)
        .filter(|d| !d.is_zero())
        .collect();
    Ok(PrimMorphism::canonical_quotient(&u.cod, extra))
}

/// Tensor product over Z of two presentations, with the two injections.
pub fn tensor_presentations(p: &Presentation, r: &Presentation) -> Pushout {
    let z = Presentation::integers();
    let to_p = PrimMorphism::new(z.clone(), p.clone(), Vec::new()).expect("Z is initial");
    let to_r = PrimMorphism::new(z, r.clone(), Vec::new()).expect("Z is initial");
    pushout(&to_p, &to_r).expect("common domain Z")
}

/// `m ⊗ n : P⊗R -> Q⊗S`.
pub fn tensor(m: &PrimMorphism, n: &PrimMorphism) -> PrimMorphism {
    let dom = tensor_presentations(&m.dom, &n.dom).apex;
    let cod = tensor_presentations(&m.cod, &n.cod).apex;
    let off = m.cod.nvars() as Var;
    let mut images = m.images.clone();
    images.extend(n.images.iter().map(|p| p.shift_vars(off)));
    PrimMorphism { dom, cod, images, verification: m.verification.min(n.verification) }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramObject {
    pub pres: Presentation,
    /// A point of `pres` in the diagram's ring.
    pub anchor: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramArrow {
    pub src: usize,
    pub tgt: usize,
    /// `u: pres[src] -> pres[tgt]` with `anchor[tgt] ∘ u = anchor[src]`.
    pub morphism: PrimMorphism,
}

/// A finite diagram in the category of elements of a finite ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    pub ring: FiniteRing,
    pub objects: Vec<DiagramObject>,
    pub arrows: Vec<DiagramArrow>,
}

impl Diagram {
    /// Checks that anchors are points and that every arrow is compatible.
    pub fn new(ring: FiniteRing, objects: Vec<DiagramObject>, arrows: Vec<DiagramArrow>) -> Result<Self> {
        for (k, o) in objects.iter().enumerate() {
            if !crate::points::is_point(&o.pres, &ring, &o.anchor)? {
                return Err(Error::invalid(format!("anchor of object {k} is not a point")));
            }
        }
        for (k, a) in arrows.iter().enumerate() {
            let (Some(s), Some(t)) = (objects.get(a.src), objects.get(a.tgt)) else {
                return Err(Error::invalid(format!("arrow {k} refers to a missing object")));
            };
            if !a.morphism.dom.same_as(&s.pres) || !a.morphism.cod.same_as(&t.pres) {
                return Err(Error::invalid(format!("arrow {k} does not match its objects")));
            }
            if crate::points::precompose(&a.morphism, &ring, &t.anchor)? != s.anchor {
                return Err(Error::invalid(format!("arrow {k} does not respect the anchors")));
            }
        }
        Ok(Diagram { ring, objects, arrows })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Colimit {
    pub apex: Presentation,
    pub injections: Vec<PrimMorphism>,
}

/// Colimit of the presentations of a diagram: the tensor product of all
/// objects with `i_a(x) = i_b(u(x))` for every arrow `u: a -> b`.
pub fn colimit(d: &Diagram) -> Result<Colimit> {
    let mut names: Vec<String> = Vec::new();
    let mut rels: Vec<Poly> = Vec::new();
    let mut offsets = Vec::with_capacity(d.objects.len());
    for o in &d.objects {
        let off = names.len() as Var;
        offsets.push(off);
        let fresh = disjoint_names(&names, &o.pres.names);
        names.extend(fresh);
        rels.extend(o.pres.relations.iter().map(|r| r.shift_vars(off)));
    }
    for a in &d.arrows {
        let (os, ot) = (offsets[a.src], offsets[a.tgt]);
        for (k, im) in a.morphism.images.iter().enumerate() {
            let rel = &Poly::var(os + k as Var) - &im.shift_vars(ot);
            if !rel.is_zero() {
                rels.push(rel);
            }
        }
    }
    let apex = Presentation::new(names, rels);
    let injections = d
        .objects
        .iter()
        .zip(&offsets)
        .map(|(o, &off)| shift_injection(&o.pres, &apex, off))
        .collect();
    Ok(Colimit { apex, injections })
}

/// Which engines `verify_well_defined` may use.
#[derive(Clone, Debug)]
pub struct VerifyTools {
    pub finite: Vec<FiniteRing>,
    pub field_refute: bool,
    pub int_prove: bool,
    pub budget: Budget,
}

impl Default for VerifyTools {
    fn default() -> Self {
        VerifyTools { finite: Vec::new(), field_refute: true, int_prove: true, budget: Budget::default() }
    }
}

/// Outcome of a well-definedness check, with a finite witness when refuted
/// at a point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WellDefined {
    pub status: Verification,
    pub witness: Option<(FiniteRing, Vec<Elem>, usize)>,
}

/// Decides (three-valued) whether every relation of the domain maps into
/// the ideal of the codomain's relations. Returns the morphism with the
/// status recorded.
pub fn verify_well_defined(m: &PrimMorphism, tools: &VerifyTools) -> (PrimMorphism, WellDefined) {
    let pushed: Vec<Poly> = m
        .dom
        .relations
        .iter()
        .map(|r| r.substitute_list(&m.images).expect("images cover the domain"))
        .collect();
    let done = |status, witness| {
        let mut out = m.clone();
        out.verification = status;
        (out, WellDefined { status, witness })
    };
    for b in &tools.finite {
        let Ok(points) = crate::points::enumerate(&m.cod, b, &tools.budget) else { continue };
        for pt in points {
            for (k, r) in pushed.iter().enumerate() {
                if r.evaluate(b, &pt).expect("point covers codomain") != b.zero() {
                    return done(Verification::Refuted, Some((b.clone(), pt, k)));
                }
            }
        }
    }
    if pushed.iter().all(Poly::is_zero) {
        return done(Verification::Proved, None);
    }
    let ord = MonomialOrder::grlex();
    if tools.int_prove {
        if let Ok(gb) = groebner::gbasis(&m.cod.relations, &ord, Domain::Integers, &tools.budget.groebner) {
            let all = pushed.iter().map(|r| gb.contains(r)).collect::<std::result::Result<Vec<bool>, _>>();
            if let Ok(v) = all {
                if v.iter().all(|&b| b) {
                    return done(Verification::Proved, None);
                }
            }
        }
    }
    if tools.field_refute {
        if let Ok(gb) = groebner::gbasis(&m.cod.relations, &ord, Domain::Rationals, &tools.budget.groebner) {
            for r in &pushed {
                if let Ok(false) = gb.contains(r) {
                    return done(Verification::Refuted, None);
                }
            }
        }
    }
    done(Verification::Unknown, None)
}

/// Three-valued surjectivity of the ring map presented by `m`.
pub fn is_surjective(m: &PrimMorphism, budget: &GbBudget) -> Verification {
    let n = m.cod.nvars() as Var;
    let hit = |v: Var| m.images.iter().any(|im| *im == Poly::var(v));
    if (0..n).all(hit) {
        return Verification::Proved;
    }
    // tag variables t_i = n + i stand for the images
    let mut gens = m.cod.relations.clone();
    for (i, im) in m.images.iter().enumerate() {
        gens.push(&Poly::var(n + i as Var) - im);
    }
    let mut priority: Vec<Var> = (0..n).collect();
    priority.extend((0..m.images.len() as Var).map(|i| n + i));
    let ord = MonomialOrder::with_priority(OrderKind::Lex, priority);
    let only_tags = |p: &Poly| p.vars().iter().all(|&v| v >= n);
    if let Ok(gb) = groebner::gbasis(&gens, &ord, Domain::Integers, budget) {
        let nfs: std::result::Result<Vec<Poly>, _> = (0..n).map(|v| gb.normal_form(&Poly::var(v))).collect();
        if let Ok(nfs) = nfs {
            if nfs.iter().all(only_tags) {
                return Verification::Proved;
            }
        }
    }
    if let Ok(gb) = groebner::gbasis(&gens, &ord, Domain::Rationals, budget) {
        for v in 0..n {
            if let Ok(nf) = gb.normal_form(&Poly::var(v)) {
                if !only_tags(&nf) {
                    return Verification::Refuted;
                }
            }
        }
    }
    Verification::Unknown
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> Presentation {
        Presentation::parse(s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let p = pres("ring P = Z[x,y]/(x*y, x^2+1)");
        assert_eq!(p.nvars(), 2);
        assert_eq!(p.to_string(), "ring P = Z[x,y]/(x*y,x^2+1)");
        assert_eq!(pres(&p.to_string()), p);
        assert_eq!(pres("ring ONE = Z[]/(1)").relations, vec![Poly::one()]);
        assert_eq!(pres("Z[]"), Presentation::integers());
        assert!(Presentation::parse("Z[x,x]").is_err());
        assert!(Presentation::parse("Z[x]/(y)").is_err());
    }

    #[test]
    fn compose_examples() {
        let m = PrimMorphism::parse("Z[x] -> Z[t] via x -> t").unwrap();
        let n = PrimMorphism::parse("Z[t] -> Z[u] via t -> u^2").unwrap();
        let c = compose(&m, &n).unwrap();
        assert_eq!(c.images_text(), vec!["x -> u^2"]);
        let id = PrimMorphism::identity(&m.dom);
        assert_eq!(compose(&id, &m).unwrap().images, m.images);
        assert_eq!(compose(&m, &PrimMorphism::identity(&m.cod)).unwrap().images, m.images);
        let k = PrimMorphism::parse("Z[a,b] -> Z[c] via a -> c, b -> c").unwrap();
        assert!(compose(&n, &k).is_err());
    }

    #[test]
    fn pushout_relations() {
        let base = pres("Z[x]");
        let m = PrimMorphism::canonical_quotient(&base, vec![pres("Z[x]/(x^2+1)").relations[0].clone()]);
        let a = PrimMorphism::canonical_quotient(&base, vec![pres("Z[x]/(x-1)").relations[0].clone()]);
        let po = pushout(&m, &a).unwrap();
        assert_eq!(po.apex.to_string(), "Z[x,x']/(x^2+1,x'-1,x-x')");
    }

    #[test]
    fn coequalizer_examples() {
        let q = pres("Z[s,t]");
        let u = PrimMorphism::parse("Z[x] -> Z[s,t] via x -> s").unwrap();
        let v = PrimMorphism::parse("Z[x] -> Z[s,t] via x -> t").unwrap();
        assert_eq!(coequalizer(&u, &v).unwrap().cod.to_string(), "Z[s,t]/(s-t)");
        assert!(coequalizer(&u, &u).unwrap().cod.same_as(&q));
    }

    #[test]
    fn well_definedness() {
        let tools = VerifyTools { finite: vec![FiniteRing::zmod(8).unwrap()], ..VerifyTools::default() };
        let q = PrimMorphism::canonical_quotient(&pres("Z[x]"), vec![pres("Z[x]/(x^2+x+7)").relations[0].clone()]);
        assert_eq!(verify_well_defined(&q, &tools).1.status, Verification::Proved);
        let bad = PrimMorphism::parse("Z[x]/(x^2) -> Z[x]").unwrap();
        let (_, wd) = verify_well_defined(&bad, &tools);
        assert_eq!(wd.status, Verification::Refuted);
        assert!(wd.witness.is_some());
        let no_finite = VerifyTools::default();
        assert_eq!(verify_well_defined(&bad, &no_finite).1.status, Verification::Refuted);
        let ok = PrimMorphism::parse("Z[x]/(2*x) -> Z[y]/(2*y) via x -> y").unwrap();
        assert_eq!(verify_well_defined(&ok, &tools).1.status, Verification::Proved);
        // 1 = 0 in Z[x]/(x^2+1, x-1, ...) over Q but not over Z
        let subtle = PrimMorphism::parse("Z[]/(2) -> Z[x]/(x^2+1,x-1)").unwrap();
        assert_eq!(verify_well_defined(&subtle, &no_finite).1.status, Verification::Proved);
        let subtle = PrimMorphism::parse("Z[]/(1) -> Z[x]/(x^2+1,x-1)").unwrap();
        let st = verify_well_defined(&subtle, &no_finite).1.status;
        assert_eq!(st, Verification::Unknown);
    }

    #[test]
    fn surjectivity() {
        let b = GbBudget::default();
        let q = PrimMorphism::canonical_quotient(&pres("Z[x,y]"), vec![pres("Z[x,y]/(x*y)").relations[0].clone()]);
        assert_eq!(is_surjective(&q, &b), Verification::Proved);
        assert_eq!(is_surjective(&PrimMorphism::builtin("e").unwrap(), &b), Verification::Proved);
        assert_eq!(is_surjective(&PrimMorphism::builtin("i").unwrap(), &b), Verification::Refuted);
        let sq = PrimMorphism::parse("Z[x] -> Z[t]/(t^2-t) via x -> t^2").unwrap();
        assert_eq!(is_surjective(&sq, &b), Verification::Proved);
    }

    #[test]
    fn builtin_morphisms() {
        for n in ["e", "i", "o", "s", "d2", "d3", "d5"] {
            let m = PrimMorphism::builtin(n).unwrap();
            assert_eq!(m.dom.nvars(), 2);
        }
        assert!(PrimMorphism::builtin("d4").is_err());
        assert_eq!(
            PrimMorphism::builtin("d2").unwrap().cod.relations[0].to_string_with(&["x".into(), "y".into(), "z".into()]),
            "x^3*z^3+2*y^3*z^3-1"
        );
    }
}
