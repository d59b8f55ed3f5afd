use super::{enumerate, in_exists, precompose_unchecked};
use crate::finring::{Elem, FiniteRing};
use crate::fpring::{Diagram, PrimMorphism};
use crate::{Budget, Error, Result};

/// All cocones of the diagram with vertex `b`: one point `g_k` of each
/// object such that `g_tgt ∘ u = g_src` for every arrow `u`. Cocones are
/// listed in lexicographic order of the concatenated points.
pub fn cocones(d: &Diagram, b: &FiniteRing, budget: &Budget) -> Result<Vec<Vec<Vec<Elem>>>> {
    let per_object: Vec<Vec<Vec<Elem>>> =
        d.objects.iter().map(|o| enumerate(&o.pres, b, budget)).collect::<Result<_>>()?;
    let total: u128 = per_object.iter().map(|v| v.len() as u128).product();
    if total > budget.max_tuples as u128 {
        return Err(Error::Budget(format!("{total} candidate cocones exceed max_tuples")));
    }
    let mut out = Vec::new();
    let mut choice: Vec<Vec<Elem>> = Vec::with_capacity(d.objects.len());
    extend(d, b, &per_object, &mut choice, &mut out);
    Ok(out)
}

fn extend(
    d: &Diagram,
    b: &FiniteRing,
    per_object: &[Vec<Vec<Elem>>],
    choice: &mut Vec<Vec<Elem>>,
    out: &mut Vec<Vec<Vec<Elem>>>,
) {
    let k = choice.len();
    if k == per_object.len() {
        out.push(choice.clone());
        return;
    }
    for g in &per_object[k] {
        choice.push(g.clone());
        // arrows whose endpoints are both chosen and one of them is k
        let ok = d.arrows.iter().all(|a| {
            if a.src.max(a.tgt) != k {
                return true;
            }
            precompose_unchecked(&a.morphism, b, &choice[a.tgt]) == choice[a.src]
        });
        if ok {
            extend(d, b, per_object, choice, out);
        }
        choice.pop();
    }
}

/// Whether the cocone realises `(m, a)` where `a` is the anchor of object
/// `object`: its leg at that object lies in `∃_m B`.
pub fn realises(
    cocone: &[Vec<Elem>],
    object: usize,
    m: &PrimMorphism,
    b: &FiniteRing,
    budget: &Budget,
) -> Result<bool> {
    let leg = cocone.get(object).ok_or_else(|| Error::invalid("anchor object outside the diagram"))?;
    in_exists(m, b, leg, budget)
}
