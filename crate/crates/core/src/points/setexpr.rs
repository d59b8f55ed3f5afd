use std::collections::BTreeSet;

use serde::Serialize;

use super::{enumerate, exists_set, homs, precompose_unchecked, PointSet};
use crate::finring::{Elem, FiniteRing};
use crate::fpring::{pushout, tensor_presentations, PrimMorphism, Presentation};
use crate::{Budget, Error, Result};

/// Closure-tree description of a subset of `A_P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetExpr {
    Full(Presentation),
    /// Image of a subset of `A_Q` under `m: P -> Q`.
    Exists(PrimMorphism, Box<SetExpr>),
    Union(Box<SetExpr>, Box<SetExpr>),
    Intersection(Box<SetExpr>, Box<SetExpr>),
    Complement(Box<SetExpr>),
    /// `{a ⊗ b : a ∈ left, b ∈ right}` as points of the pushout of
    /// `f: R -> P` and `g: R -> Q`.
    FiberedProduct { left: Box<SetExpr>, right: Box<SetExpr>, f: PrimMorphism, g: PrimMorphism },
    /// `{a : a ⊗ param ∈ inner}` where `inner` lives on `P ⊗ Q` and `param`
    /// is a point of `Q`.
    AddParameter { inner: Box<SetExpr>, left: Presentation, right: Presentation, param: Vec<Elem> },
}

/// Arithmetic sets use neither complements nor parameters; positively
/// definable sets may use parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SetClass {
    Arithmetic,
    PositivelyDefinable,
    Definable,
}

impl SetExpr {
    pub fn full(p: &Presentation) -> Self {
        SetExpr::Full(p.clone())
    }

    pub fn exists(m: &PrimMorphism) -> Self {
        SetExpr::Exists(m.clone(), Box::new(SetExpr::Full(m.cod.clone())))
    }

    pub fn union(a: SetExpr, b: SetExpr) -> Self {
        SetExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn intersection(a: SetExpr, b: SetExpr) -> Self {
        SetExpr::Intersection(Box::new(a), Box::new(b))
    }

    pub fn complement(a: SetExpr) -> Self {
        SetExpr::Complement(Box::new(a))
    }

    /// The presentation whose points the expression describes.
    pub fn ambient(&self) -> Presentation {
        match self {
            SetExpr::Full(p) => p.clone(),
            SetExpr::Exists(m, _) => m.dom.clone(),
            SetExpr::Union(a, _) | SetExpr::Intersection(a, _) | SetExpr::Complement(a) => a.ambient(),
            SetExpr::FiberedProduct { f, g, .. } => pushout(f, g).expect("checked on evaluation").apex,
            SetExpr::AddParameter { left, .. } => left.clone(),
        }
    }

    pub fn class(&self) -> SetClass {
        match self {
            SetExpr::Full(_) => SetClass::Arithmetic,
            SetExpr::Exists(_, a) => a.class(),
            SetExpr::Union(a, b) | SetExpr::Intersection(a, b) => a.class().max(b.class()),
            SetExpr::FiberedProduct { left, right, .. } => left.class().max(right.class()),
            SetExpr::Complement(_) => SetClass::Definable,
            SetExpr::AddParameter { inner, .. } => inner.class().max(SetClass::PositivelyDefinable),
        }
    }
}

fn same_space(a: &PointSet, b: &PointSet) -> Result<()> {
    if !a.pres.same_as(&b.pres) {
        return Err(Error::invalid("set operation on points of different presentations"));
    }
    Ok(())
}

/// Evaluates the expression extensionally in `ring`.
pub fn eval_setexpr(s: &SetExpr, ring: &FiniteRing, budget: &Budget) -> Result<PointSet> {
    let mut out = match s {
        SetExpr::Full(p) => homs(p, ring, budget)?,
        SetExpr::Exists(m, inner) => {
            let sub = eval_setexpr(inner, ring, budget)?;
            if !sub.pres.same_as(&m.cod) {
                return Err(Error::invalid("existential over a set of the wrong presentation"));
            }
            if matches!(**inner, SetExpr::Full(_)) {
                exists_set(m, ring, budget)?
            } else {
                let members = sub.members.iter().map(|b| precompose_unchecked(m, ring, b)).collect();
                PointSet { ring: ring.clone(), pres: m.dom.clone(), members, provenance: None }
            }
        }
        SetExpr::Union(a, b) => {
            let (x, y) = (eval_setexpr(a, ring, budget)?, eval_setexpr(b, ring, budget)?);
            same_space(&x, &y)?;
            PointSet { members: x.members.union(&y.members).cloned().collect(), ..x }
        }
        SetExpr::Intersection(a, b) => {
            let (x, y) = (eval_setexpr(a, ring, budget)?, eval_setexpr(b, ring, budget)?);
            same_space(&x, &y)?;
            PointSet { members: x.members.intersection(&y.members).cloned().collect(), ..x }
        }
        SetExpr::Complement(a) => {
            let x = eval_setexpr(a, ring, budget)?;
            let all = homs(&x.pres, ring, budget)?;
            PointSet { members: all.members.difference(&x.members).cloned().collect(), ..x }
        }
        SetExpr::FiberedProduct { left, right, f, g } => {
            let po = pushout(f, g)?;
            let (x, y) = (eval_setexpr(left, ring, budget)?, eval_setexpr(right, ring, budget)?);
            if !x.pres.same_as(&f.cod) || !y.pres.same_as(&g.cod) {
                return Err(Error::invalid("fibered product factors do not match the morphisms"));
            }
            let mut members = BTreeSet::new();
            for a in &x.members {
                let fa = precompose_unchecked(f, ring, a);
                for b in &y.members {
                    if precompose_unchecked(g, ring, b) == fa {
                        let mut ab = a.clone();
                        ab.extend_from_slice(b);
                        members.insert(ab);
                    }
                }
            }
            PointSet { ring: ring.clone(), pres: po.apex, members, provenance: None }
        }
        SetExpr::AddParameter { inner, left, right, param } => {
            let tensor = tensor_presentations(left, right).apex;
            let y = eval_setexpr(inner, ring, budget)?;
            if !y.pres.same_as(&tensor) {
                return Err(Error::invalid("parameterised set is not on the tensor product"));
            }
            if !super::is_point(right, ring, param)? {
                return Err(Error::invalid("parameter is not a point"));
            }
            let members = enumerate(left, ring, budget)?
                .into_iter()
                .filter(|a| {
                    let mut ab = a.clone();
                    ab.extend_from_slice(param);
                    y.members.contains(&ab)
                })
                .collect();
            PointSet { ring: ring.clone(), pres: left.clone(), members, provenance: None }
        }
    };
    out.provenance = Some(format!("{:?}", s.class()).to_lowercase());
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::make_ring;

    #[test]
    fn boolean_laws_and_classes() {
        let b = Budget::default();
        let z3 = make_ring("Z/3").unwrap();
        let e = SetExpr::exists(&PrimMorphism::builtin("e").unwrap());
        assert_eq!(e.class(), SetClass::Arithmetic);
        let empty = SetExpr::intersection(e.clone(), SetExpr::complement(e.clone()));
        assert_eq!(empty.class(), SetClass::Definable);
        assert!(eval_setexpr(&empty, &z3, &b).unwrap().is_empty());
        let all = SetExpr::union(e.clone(), SetExpr::exists(&PrimMorphism::builtin("i").unwrap()));
        assert_eq!(eval_setexpr(&all, &z3, &b).unwrap().len(), 9);
    }

    #[test]
    fn fibered_product_over_integers() {
        let b = Budget::default();
        let z2 = make_ring("Z/2").unwrap();
        let e = PrimMorphism::builtin("e").unwrap();
        let zx = Presentation::free(&["x"]);
        let z = Presentation::integers();
        let f = PrimMorphism::new(z.clone(), e.dom.clone(), vec![]).unwrap();
        let g = PrimMorphism::new(z, zx.clone(), vec![]).unwrap();
        let fp = SetExpr::FiberedProduct {
            left: Box::new(SetExpr::exists(&e)),
            right: Box::new(SetExpr::full(&zx)),
            f,
            g,
        };
        let s = eval_setexpr(&fp, &z2, &b).unwrap();
        assert_eq!(s.pres.nvars(), 3);
        assert_eq!(s.len(), 4);
        let proj: BTreeSet<Vec<Elem>> = s.members.iter().map(|p| p[..2].to_vec()).collect();
        assert_eq!(proj, eval_setexpr(&SetExpr::exists(&e), &z2, &b).unwrap().members);
        assert_eq!(fp.class(), SetClass::Arithmetic);
    }

    #[test]
    fn parameters() {
        let b = Budget::default();
        let z5 = make_ring("Z/5").unwrap();
        let e = PrimMorphism::builtin("e").unwrap();
        let x = Presentation::free(&["x"]);
        let y = Presentation::free(&["y"]);
        let s = SetExpr::AddParameter {
            inner: Box::new(SetExpr::exists(&e)),
            left: x,
            right: y,
            param: vec![Elem(3)],
        };
        assert_eq!(s.class(), SetClass::PositivelyDefinable);
        assert_eq!(eval_setexpr(&s, &z5, &b).unwrap().render(), vec![vec!["3"]]);
    }
}
