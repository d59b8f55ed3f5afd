//! Points of presentations in finite rings and the sets built from them.
//!
//! A point of `P = Z[x1..xn]/(p1..pm)` in a finite ring `A` is a tuple in
//! `A^n` killing every relation; all enumerations run in lexicographic
//! order of element indices, so every result is deterministic.

mod categories;
mod cocones;
mod crad;
mod purity;
mod setexpr;
mod zariski;

use std::collections::BTreeSet;

use crate::finring::{Elem, FiniteRing};
use crate::fpring::{PrimMorphism, Presentation};
use crate::poly::Poly;
use crate::{Budget, Error, Result};

pub use categories::{category_membership, CategoryKind, CategoryStatus, CategoryVerdict};
pub use cocones::{cocones, realises};
pub use crad::{crad_member, gc_check, CradResult, GcEntry, GcReport};
pub use purity::{purity_check, PurityReport};
pub use setexpr::{eval_setexpr, SetClass, SetExpr};
pub use zariski::{zariski_closure, AffineContext};

/// A polynomial prepared for repeated evaluation in one ring.
#[derive(Clone, Debug)]
pub(crate) struct CompiledPoly {
    terms: Vec<(Elem, Vec<(usize, u32)>)>,
    /// Number of leading variables that must be assigned before evaluation.
    pub(crate) arity: usize,
}

impl CompiledPoly {
    /// Variables `>= nx` are parameters with the given values.
    pub(crate) fn new(p: &Poly, ring: &FiniteRing, nx: usize, params: &[Elem]) -> Result<Self> {
        let mut terms = Vec::new();
        let mut arity = 0;
        for (m, c) in p.terms() {
            let mut coeff = ring.from_bigint(c);
            let mut vars = Vec::new();
            for &(v, e) in m.factors() {
                let v = v as usize;
                if v < nx {
                    vars.push((v, e));
                    arity = arity.max(v + 1);
                } else {
                    let val = *params
                        .get(v - nx)
                        .ok_or_else(|| Error::invalid(format!("no value for parameter {}", v - nx)))?;
                    coeff = ring.mul(coeff, ring.pow(val, e as u64));
                }
            }
            if coeff != ring.zero() {
                terms.push((coeff, vars));
            }
        }
        Ok(CompiledPoly { terms, arity })
    }

    pub(crate) fn eval(&self, ring: &FiniteRing, x: &[Elem]) -> Elem {
        let mut acc = ring.zero();
        for (c, vars) in &self.terms {
            let mut t = *c;
            for &(v, e) in vars {
                t = ring.mul(t, ring.pow(x[v], e as u64));
            }
            acc = ring.add(acc, t);
        }
        acc
    }
}

/// All `x ∈ A^nvars` with `c(x) = target` for every constraint, in
/// lexicographic order. Each constraint is checked as soon as its variables
/// are assigned.
pub(crate) fn search(
    ring: &FiniteRing,
    nvars: usize,
    constraints: &[(CompiledPoly, Elem)],
    budget: &Budget,
) -> Result<Vec<Vec<Elem>>> {
    search_limited(ring, nvars, constraints, budget, usize::MAX)
}

/// As [`search`], stopping after `limit` solutions.
pub(crate) fn search_limited(
    ring: &FiniteRing,
    nvars: usize,
    constraints: &[(CompiledPoly, Elem)],
    budget: &Budget,
    limit: usize,
) -> Result<Vec<Vec<Elem>>> {
    budget.check_tuples(ring.card() as u64, nvars)?;
    let mut by_depth: Vec<Vec<usize>> = vec![Vec::new(); nvars + 1];
    for (k, (c, _)) in constraints.iter().enumerate() {
        by_depth[c.arity].push(k);
    }
    let ok_at = |depth: usize, x: &[Elem]| {
        by_depth[depth].iter().all(|&k| constraints[k].0.eval(ring, x) == constraints[k].1)
    };
    let mut out = Vec::new();
    let mut x = vec![ring.zero(); nvars];
    if !ok_at(0, &x) {
        return Ok(out);
    }
    if nvars == 0 {
        out.push(x);
        return Ok(out);
    }
    let card = ring.card();
    // iterative depth-first search; x[depth] is the next candidate slot
    let mut depth = 0usize;
    let mut next = vec![0u32; nvars];
    loop {
        if next[depth] == card {
            next[depth] = 0;
            if depth == 0 {
                break;
            }
            depth -= 1;
            continue;
        }
        x[depth] = Elem(next[depth]);
        next[depth] += 1;
        if !ok_at(depth + 1, &x) {
            continue;
        }
        if depth + 1 == nvars {
            out.push(x.clone());
            if out.len() >= limit {
                break;
            }
        } else {
            depth += 1;
        }
    }
    Ok(out)
}

/// The raw point tuples of `pres` in `ring`.
pub fn enumerate(pres: &Presentation, ring: &FiniteRing, budget: &Budget) -> Result<Vec<Vec<Elem>>> {
    let cs = pres
        .relations
        .iter()
        .map(|r| Ok((CompiledPoly::new(r, ring, pres.nvars(), &[])?, ring.zero())))
        .collect::<Result<Vec<_>>>()?;
    search(ring, pres.nvars(), &cs, budget)
}

pub fn is_point(pres: &Presentation, ring: &FiniteRing, values: &[Elem]) -> Result<bool> {
    if values.len() != pres.nvars() || values.iter().any(|v| v.0 >= ring.card()) {
        return Ok(false);
    }
    for r in &pres.relations {
        if r.evaluate(ring, values)? != ring.zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A finite set of points of one presentation in one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    pub ring: FiniteRing,
    pub pres: Presentation,
    pub members: BTreeSet<Vec<Elem>>,
    pub provenance: Option<String>,
}

impl PointSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, p: &[Elem]) -> bool {
        self.members.contains(p)
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Points rendered with [`FiniteRing::format_elem`].
    pub fn render(&self) -> Vec<Vec<String>> {
        self.members.iter().map(|p| p.iter().map(|&e| self.ring.format_elem(e)).collect()).collect()
    }
}

/// `hom(P, A)`.
pub fn homs(pres: &Presentation, ring: &FiniteRing, budget: &Budget) -> Result<PointSet> {
    Ok(PointSet {
        ring: ring.clone(),
        pres: pres.clone(),
        members: enumerate(pres, ring, budget)?.into_iter().collect(),
        provenance: None,
    })
}

/// `b ∘ m` for a point `b` of the codomain of `m`.
pub fn precompose(m: &PrimMorphism, ring: &FiniteRing, b: &[Elem]) -> Result<Vec<Elem>> {
    if !is_point(&m.cod, ring, b)? {
        return Err(Error::invalid("not a point of the codomain"));
    }
    Ok(precompose_unchecked(m, ring, b))
}

pub(crate) fn precompose_unchecked(m: &PrimMorphism, ring: &FiniteRing, b: &[Elem]) -> Vec<Elem> {
    m.images.iter().map(|im| im.evaluate(ring, b).expect("point covers codomain")).collect()
}

/// `∃_m A`: the image of `A_Q` under precomposition with `m: P -> Q`.
pub fn exists_set(m: &PrimMorphism, ring: &FiniteRing, budget: &Budget) -> Result<PointSet> {
    let members = enumerate(&m.cod, ring, budget)?
        .iter()
        .map(|b| precompose_unchecked(m, ring, b))
        .collect();
    Ok(PointSet { ring: ring.clone(), pres: m.dom.clone(), members, provenance: Some(format!("exists[{m}]")) })
}

/// Whether `a ∈ ∃_m A`, by a constrained search over the codomain.
pub fn in_exists(m: &PrimMorphism, ring: &FiniteRing, a: &[Elem], budget: &Budget) -> Result<bool> {
    let nq = m.cod.nvars();
    let mut cs = Vec::new();
    for r in &m.cod.relations {
        cs.push((CompiledPoly::new(r, ring, nq, &[])?, ring.zero()));
    }
    for (im, &v) in m.images.iter().zip(a) {
        cs.push((CompiledPoly::new(im, ring, nq, &[])?, v));
    }
    Ok(!search_limited(ring, nq, &cs, budget, 1)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::make_ring;

    fn pres(s: &str) -> Presentation {
        Presentation::parse(s).unwrap()
    }

    #[test]
    fn hom_counts() {
        let b = Budget::default();
        let p = pres("Z[x]/(x^2+1)");
        let z5 = make_ring("Z/5").unwrap();
        let pts = homs(&p, &z5, &b).unwrap();
        assert_eq!(pts.render(), vec![vec!["2"], vec!["3"]]);
        assert!(homs(&p, &make_ring("Z/3").unwrap(), &b).unwrap().is_empty());
        for spec in ["Z/1", "Z/6", "GF(4)"] {
            assert_eq!(homs(&Presentation::integers(), &make_ring(spec).unwrap(), &b).unwrap().len(), 1);
        }
        assert_eq!(homs(&Presentation::trivial(), &z5, &b).unwrap().len(), 0);
        assert_eq!(homs(&Presentation::trivial(), &make_ring("Z/1").unwrap(), &b).unwrap().len(), 1);
    }

    #[test]
    fn equality_and_inequality_sets() {
        let b = Budget::default();
        let z3 = make_ring("Z/3").unwrap();
        let e = PrimMorphism::builtin("e").unwrap();
        let diag = exists_set(&e, &z3, &b).unwrap();
        assert_eq!(diag.len(), 3);
        assert!(diag.members.iter().all(|p| p[0] == p[1]));
        let gf4 = make_ring("GF(4)").unwrap();
        let off = exists_set(&PrimMorphism::builtin("i").unwrap(), &gf4, &b).unwrap();
        assert_eq!(off.len(), 12);
        assert!(off.members.iter().all(|p| p[0] != p[1]));
        let id = PrimMorphism::identity(&pres("Z[x,y]/(x*y)"));
        assert_eq!(exists_set(&id, &z3, &b).unwrap().members, homs(&id.dom, &z3, &b).unwrap().members);
        assert!(in_exists(&e, &z3, &[Elem(1), Elem(1)], &b).unwrap());
        assert!(!in_exists(&e, &z3, &[Elem(1), Elem(2)], &b).unwrap());
    }

    #[test]
    fn precompose_examples() {
        let z5 = make_ring("Z/5").unwrap();
        let e = PrimMorphism::builtin("e").unwrap();
        assert_eq!(precompose(&e, &z5, &[Elem(2), Elem(2)]).unwrap(), vec![Elem(2), Elem(2)]);
        assert!(precompose(&e, &z5, &[Elem(2), Elem(3)]).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let tight = Budget { max_tuples: 100, ..Budget::default() };
        let p = pres("Z[x,y,z]");
        assert!(homs(&p, &make_ring("Z/5").unwrap(), &tight).unwrap_err().is_budget());
    }
}
