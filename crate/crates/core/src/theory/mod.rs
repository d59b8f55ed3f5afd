//! Arithmetic axioms `[P, F]` and theories, checked over finite rings.
//!
//! `A ⊨ [P, F]` when every point of `P` in `A` lies in `∃_m A` for some
//! `m ∈ F`. Sentences of the DSL become normal axioms.

mod builtin;
mod dsl;

use std::collections::BTreeSet;
use std::fmt;

pub use builtin::{builtin, BUILTIN_NAMES};
pub use dsl::{parse_sentence, parse_theory, Disjunct, Equation, Item, Schema, Sentence, Theory};

use crate::finring::{Elem, FiniteRing};
use crate::fpring::{colimit, is_surjective, pushout, Diagram, Presentation, PrimMorphism, Verification};
use crate::groebner::GbBudget;
use crate::points::{cocones, enumerate, exists_set, in_exists, realises};
use crate::poly::Poly;
use crate::syntax::expr_to_poly;
use crate::{Budget, Error, Result};

/// A finite set of primitive morphisms out of one presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArithFormula {
    pub dom: Presentation,
    pub morphisms: Vec<PrimMorphism>,
}

impl ArithFormula {
    pub fn new(dom: Presentation, morphisms: Vec<PrimMorphism>) -> Result<Self> {
        if let Some(k) = morphisms.iter().position(|m| !m.dom.same_as(&dom)) {
            return Err(Error::invalid(format!("member {k} of the formula has a different domain")));
        }
        Ok(ArithFormula { dom, morphisms })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axiom {
    pub pres: Presentation,
    pub formula: ArithFormula,
    pub name: Option<String>,
    /// The sentence this axiom was built from, if any.
    pub source: Option<Sentence>,
}

impl Axiom {
    pub fn new(pres: Presentation, morphisms: Vec<PrimMorphism>, name: Option<String>) -> Result<Self> {
        let formula = ArithFormula::new(pres.clone(), morphisms)?;
        Ok(Axiom { pres, formula, name, source: None })
    }

    /// The normal axiom of a sentence: the antecedent presents `P`, each
    /// disjunct gives the normal morphism adding its existential variables
    /// and equations.
    pub fn from_sentence(s: &Sentence, name: Option<String>) -> Result<Self> {
        let polys = |eqs: &[Equation], names: &[String]| -> Result<Vec<Poly>> {
            eqs.iter()
                .map(|e| expr_to_poly(&e.difference(), names).map_err(Error::invalid))
                .collect()
        };
        let f = polys(&s.antecedent, &s.vars)?;
        let pres = Presentation::new(s.vars.clone(), f.clone());
        let mut morphisms = Vec::with_capacity(s.consequent.len());
        for d in &s.consequent {
            let mut names = s.vars.clone();
            names.extend(d.exists.iter().cloned());
            let g = polys(&d.eqs, &names)?;
            morphisms.push(PrimMorphism::normal(&s.vars, f.clone(), &d.exists, g));
        }
        let mut ax = Axiom::new(pres, morphisms, name)?;
        ax.source = Some(s.clone());
        Ok(ax)
    }

    pub fn morphisms(&self) -> &[PrimMorphism] {
        &self.formula.morphisms
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| self.to_string())
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(s) = &self.source {
            return write!(f, "{s}");
        }
        let ms: Vec<String> = self.formula.morphisms.iter().map(|m| m.to_string()).collect();
        write!(f, "[{}, {{{}}}]", self.pres, ms.join("; "))
    }
}

impl Theory {
    /// All axioms with schemas expanded for cursor values up to `bound`.
    /// Unlabelled items are named by their position.
    pub fn axioms(&self, bound: u32) -> Result<Vec<Axiom>> {
        let mut out = Vec::new();
        for (i, item) in self.items.iter().enumerate() {
            let base = item.label.clone().unwrap_or_else(|| format!("axiom{}", i + 1));
            match &item.schema {
                None => out.push(Axiom::from_sentence(&item.sentence, Some(base))?),
                Some(s) => {
                    let last = s.end.map_or(bound, |e| e.min(bound));
                    for k in s.start..=last {
                        let inst = item.sentence.instantiate(&s.cursor, k);
                        out.push(Axiom::from_sentence(&inst, Some(format!("{base}[{}={k}]", s.cursor)))?);
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Outcome of `A ⊨ χ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatReport {
    pub ring: FiniteRing,
    pub axiom: String,
    pub holds: bool,
    /// A point of `A_P` outside every `∃_m A`.
    pub witness: Option<Vec<Elem>>,
    /// In verbose mode, for each point the index of the first member
    /// realising it.
    pub realizers: Option<Vec<(Vec<Elem>, usize)>>,
    pub points_checked: usize,
}

/// Decides `A ⊨ χ` by enumerating `A_P` in lexicographic order. The
/// witness, if any, is the first failing point and is re-checked against
/// the full image sets.
pub fn satisfies(a: &FiniteRing, axiom: &Axiom, verbose: bool, budget: &Budget) -> Result<SatReport> {
    let points = enumerate(&axiom.pres, a, budget)?;
    let mut realizers = verbose.then(Vec::new);
    let mut witness = None;
    let mut checked = 0;
    for p in &points {
        checked += 1;
        let mut hit = None;
        for (k, m) in axiom.morphisms().iter().enumerate() {
            if in_exists(m, a, p, budget)? {
                hit = Some(k);
                break;
            }
        }
        match hit {
            Some(k) => {
                if let Some(r) = realizers.as_mut() {
                    r.push((p.clone(), k));
                }
            }
            None => {
                witness = Some(p.clone());
                break;
            }
        }
    }
    if let Some(w) = &witness {
        for m in axiom.morphisms() {
            if exists_set(m, a, budget)?.contains(w) {
                return Err(Error::Bug(format!("witness re-check failed for {}", axiom.label())));
            }
        }
    }
    Ok(SatReport {
        ring: a.clone(),
        axiom: axiom.label(),
        holds: witness.is_none(),
        witness,
        realizers,
        points_checked: checked,
    })
}

/// One report per axiom of `t` expanded up to `bound`.
pub fn satisfies_theory(a: &FiniteRing, t: &Theory, bound: u32, budget: &Budget) -> Result<Vec<SatReport>> {
    t.axioms(bound)?.iter().map(|ax| satisfies(a, ax, false, budget)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Every member surjective; the weakest verdict among the members.
    pub universal: Verification,
    pub horn: bool,
    pub negative: bool,
}

pub fn classify(axiom: &Axiom, budget: &GbBudget) -> Classification {
    let universal = axiom
        .morphisms()
        .iter()
        .map(|m| is_surjective(m, budget))
        .min()
        .unwrap_or(Verification::Proved);
    let n = axiom.morphisms().len();
    Classification { universal, horn: n <= 1, negative: n == 0 }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantReport {
    /// `∃_n B ∩ ∃_m B = ∅` in every ring of the family; relative to that
    /// family only.
    pub holds: bool,
    /// Per ring, the first common point if any.
    pub common: Vec<(FiniteRing, Option<Vec<Elem>>)>,
}

/// Whether `n` lies in the resultant of `m` relative to `family`.
pub fn resultant_member(
    n: &PrimMorphism,
    m: &PrimMorphism,
    family: &[FiniteRing],
    budget: &Budget,
) -> Result<ResultantReport> {
    if !n.dom.same_as(&m.dom) {
        return Err(Error::invalid("resultant of morphisms with different domains"));
    }
    let mut common = Vec::with_capacity(family.len());
    for b in family {
        let en = exists_set(n, b, budget)?;
        let em = exists_set(m, b, budget)?;
        let first = en.members.intersection(&em.members).next().cloned();
        if first.is_none() {
            // independent pointwise re-check of disjointness
            for p in enumerate(&m.dom, b, budget)? {
                if in_exists(n, b, &p, budget)? && in_exists(m, b, &p, budget)? {
                    return Err(Error::Bug(format!("disjointness re-check failed over {b}")));
                }
            }
        }
        common.push((b.clone(), first));
    }
    Ok(ResultantReport { holds: common.iter().all(|(_, c)| c.is_none()), common })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverRing {
    pub ring: FiniteRing,
    pub exact: bool,
    /// In the complement of `∃_m B` but in no `∃_n B`.
    pub uncovered: Vec<Vec<Elem>>,
    /// In some `∃_n B` but also in `∃_m B`.
    pub overlapping: Vec<Vec<Elem>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverReport {
    pub exact: bool,
    pub per_ring: Vec<CoverRing>,
}

/// Whether `B_P - ∃_m B = ∪_{n ∈ xs} ∃_n B` in every ring of the family.
pub fn complement_cover(
    m: &PrimMorphism,
    xs: &[PrimMorphism],
    family: &[FiniteRing],
    budget: &Budget,
) -> Result<CoverReport> {
    if xs.iter().any(|n| !n.dom.same_as(&m.dom)) {
        return Err(Error::invalid("cover members must share the domain of m"));
    }
    let mut per_ring = Vec::with_capacity(family.len());
    for b in family {
        let all: BTreeSet<Vec<Elem>> = enumerate(&m.dom, b, budget)?.into_iter().collect();
        let em = exists_set(m, b, budget)?.members;
        let mut union = BTreeSet::new();
        for n in xs {
            union.extend(exists_set(n, b, budget)?.members);
        }
        let complement: BTreeSet<Vec<Elem>> = all.difference(&em).cloned().collect();
        let uncovered: Vec<Vec<Elem>> = complement.difference(&union).cloned().collect();
        let overlapping: Vec<Vec<Elem>> = union.intersection(&em).cloned().collect();
        per_ring.push(CoverRing {
            ring: b.clone(),
            exact: uncovered.is_empty() && overlapping.is_empty(),
            uncovered,
            overlapping,
        });
    }
    Ok(CoverReport { exact: per_ring.iter().all(|r| r.exact), per_ring })
}

/// `[P*, {m_k*}]`: `P*` is the colimit of the diagram and `m_k*` the
/// pushout of `m_k` along the injection of its anchor object.
pub fn change_of_basis(xs: &[(PrimMorphism, usize)], d: &Diagram) -> Result<Axiom> {
    let col = colimit(d)?;
    let mut members = Vec::with_capacity(xs.len());
    for (k, (m, obj)) in xs.iter().enumerate() {
        let inj = col
            .injections
            .get(*obj)
            .ok_or_else(|| Error::invalid(format!("anchor of member {k} is not an object of the diagram")))?;
        if !m.dom.same_as(&d.objects[*obj].pres) {
            return Err(Error::invalid(format!("member {k} does not start at its anchor object")));
        }
        members.push(pushout(inj, m)?.in_q);
    }
    Axiom::new(col.apex, members, None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamorReport {
    pub axiom_holds: bool,
    pub cocones_realise: bool,
    pub agree: bool,
    /// A cocone realising none of the pairs.
    pub counter_cocone: Option<Vec<Vec<Elem>>>,
    pub cocones: usize,
}

/// Compares `B ⊨ [P*, {m_k*}]` with "every cocone of the diagram with
/// vertex `B` realises some `(m_k, a_k)`".
pub fn diamor_check(
    xs: &[(PrimMorphism, usize)],
    d: &Diagram,
    b: &FiniteRing,
    budget: &Budget,
) -> Result<DiamorReport> {
    let axiom = change_of_basis(xs, d)?;
    let axiom_holds = satisfies(b, &axiom, false, budget)?.holds;
    let cs = cocones(d, b, budget)?;
    let mut counter = None;
    'outer: for c in &cs {
        for (m, obj) in xs {
            if realises(c, *obj, m, b, budget)? {
                continue 'outer;
            }
        }
        counter = Some(c.clone());
        break;
    }
    let cocones_realise = counter.is_none();
    Ok(DiamorReport {
        axiom_holds,
        cocones_realise,
        agree: axiom_holds == cocones_realise,
        counter_cocone: counter,
        cocones: cs.len(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConsequenceReport {
    /// The axiom holds in every model of the theory among the family.
    pub holds: bool,
    pub models: Vec<FiniteRing>,
    pub counterexample: Option<SatReport>,
}

/// Family-relative consequence: never a claim of derivability.
pub fn family_consequence(
    t: &Theory,
    bound: u32,
    axiom: &Axiom,
    family: &[FiniteRing],
    budget: &Budget,
) -> Result<ConsequenceReport> {
    let axioms = t.axioms(bound)?;
    let mut models = Vec::new();
    for b in family {
        let mut model = true;
        for ax in &axioms {
            if !satisfies(b, ax, false, budget)?.holds {
                model = false;
                break;
            }
        }
        if !model {
            continue;
        }
        models.push(b.clone());
        let r = satisfies(b, axiom, false, budget)?;
        if !r.holds {
            return Ok(ConsequenceReport { holds: false, models, counterexample: Some(r) });
        }
    }
    Ok(ConsequenceReport { holds: true, models, counterexample: None })
}

/// The pairs `(k, a)` with `a ∈ A_P` not realised by `ms[k]`, in order.
pub fn negative_diagram(a: &FiniteRing, ms: &[PrimMorphism], budget: &Budget) -> Result<Vec<(usize, Vec<Elem>)>> {
    let mut out = Vec::new();
    for (k, m) in ms.iter().enumerate() {
        let image = exists_set(m, a, budget)?;
        for p in enumerate(&m.dom, a, budget)? {
            if !image.contains(&p) {
                out.push((k, p));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::make_ring;
    use crate::fpring::DiagramObject;

    fn ax(src: &str) -> Axiom {
        Axiom::from_sentence(&parse_sentence(src).unwrap(), None).unwrap()
    }

    #[test]
    fn sentences_become_normal_axioms() {
        let a = ax("true => (6=0)");
        assert_eq!(a.pres.nvars(), 0);
        assert_eq!(a.morphisms()[0].cod.relations, vec![Poly::constant(6)]);
        let a = ax("forall x (x=0) => false");
        assert_eq!(a.pres.relations, vec![Poly::var(0)]);
        assert!(a.morphisms().is_empty());
        let a = ax("forall x,y (x*y=0) => (x=0) \\/ (y=0)");
        assert_eq!(a.morphisms().len(), 2);
        assert_eq!(a.morphisms()[1].cod.relations.len(), 2);
    }

    #[test]
    fn satisfaction_examples() {
        let b = Budget::default();
        let z6 = make_ring("Z/6").unwrap();
        let r = satisfies(&z6, &ax("forall x,y (x*y=0) => (x=0) \\/ (y=0)"), false, &b).unwrap();
        assert_eq!(r.witness, Some(vec![Elem(2), Elem(3)]));
        let z1 = make_ring("Z/1").unwrap();
        let to_one = PrimMorphism::new(Presentation::integers(), Presentation::trivial(), vec![]).unwrap();
        let a = Axiom::new(Presentation::integers(), vec![to_one], None).unwrap();
        assert!(satisfies(&z1, &a, false, &b).unwrap().holds);
        let r = satisfies(&make_ring("GF(3)").unwrap(), &ax("forall x true => (x=0) \\/ exists y (x*y-1=0)"), true, &b)
            .unwrap();
        assert!(r.holds);
        assert_eq!(r.realizers.unwrap().iter().map(|(_, k)| *k).collect::<Vec<_>>(), vec![0, 1, 1]);
    }

    #[test]
    fn classification() {
        let gb = GbBudget::default();
        let c = classify(&ax("forall x,y (x*y=0) => (x=0) \\/ (y=0)"), &gb);
        assert_eq!((c.universal, c.horn, c.negative), (Verification::Proved, false, false));
        let c = classify(&ax("forall x (x^2=0) => (x=0)"), &gb);
        assert_eq!((c.universal, c.horn), (Verification::Proved, true));
        let c = classify(&ax("forall x true => (x=0) \\/ exists y (x*y-1=0)"), &gb);
        assert_eq!(c.universal, Verification::Refuted);
        assert!(classify(&ax("(1=0) => false"), &gb).negative);
    }

    #[test]
    fn resultants_and_covers() {
        let b = Budget::default();
        let fam: Vec<FiniteRing> = ["GF(2)", "GF(3)", "GF(4)", "GF(5)"].iter().map(|s| make_ring(s).unwrap()).collect();
        let e = PrimMorphism::builtin("e").unwrap();
        let i = PrimMorphism::builtin("i").unwrap();
        assert!(resultant_member(&i, &e, &fam, &b).unwrap().holds);
        assert!(!resultant_member(&e, &e, &fam[..1], &b).unwrap().holds);
        assert!(complement_cover(&e, &[i], &fam, &b).unwrap().exact);
        let r = complement_cover(&e, &[], &fam[..1], &b).unwrap();
        assert_eq!(r.per_ring[0].uncovered, vec![vec![Elem(0), Elem(1)], vec![Elem(1), Elem(0)]]);
    }

    #[test]
    fn change_of_basis_over_a_point() {
        let b = Budget::default();
        let z = Presentation::integers();
        let d = Diagram::new(make_ring("Z/4").unwrap(), vec![DiagramObject { pres: z.clone(), anchor: vec![] }], vec![])
            .unwrap();
        let m = PrimMorphism::parse("Z[] -> Z[y]/(y^2+1)").unwrap();
        let xs = vec![(m, 0)];
        let f2 = diamor_check(&xs, &d, &make_ring("GF(2)").unwrap(), &b).unwrap();
        assert!(f2.agree && f2.axiom_holds);
        let f3 = diamor_check(&xs, &d, &make_ring("GF(3)").unwrap(), &b).unwrap();
        assert!(f3.agree && !f3.axiom_holds);
    }

    #[test]
    fn negative_diagram_entries_avoid_their_images() {
        let b = Budget::default();
        let z4 = make_ring("Z/4").unwrap();
        let ms = vec![PrimMorphism::builtin("e").unwrap(), PrimMorphism::parse("Z[x] -> Z[x,y]/(y^2-x)").unwrap()];
        let neg = negative_diagram(&z4, &ms, &b).unwrap();
        assert!(neg.contains(&(1, vec![Elem(2)])));
        for (k, p) in neg {
            assert!(!in_exists(&ms[k], &z4, &p, &b).unwrap());
        }
    }
}
