use serde::Serialize;

use crate::finring::{ring_homs, Elem, FiniteRing, RingHom};
use crate::{Budget, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CategoryKind {
    /// Some hom into a member of the family.
    Continues,
    /// An injective hom into a member of the family.
    Embeds,
    /// An injective hom into a product of at most `k` members.
    Special,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CategoryStatus {
    Found,
    Refuted,
    NotFoundAtBound,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryVerdict {
    pub status: CategoryStatus,
    /// Family indices and homs whose product map is the witness.
    pub witness: Vec<(usize, RingHom)>,
    pub reason: String,
}

impl CategoryVerdict {
    fn found(witness: Vec<(usize, RingHom)>, reason: impl Into<String>) -> Self {
        CategoryVerdict { status: CategoryStatus::Found, witness, reason: reason.into() }
    }

    fn refuted(reason: impl Into<String>) -> Self {
        CategoryVerdict { status: CategoryStatus::Refuted, witness: Vec::new(), reason: reason.into() }
    }

    /// The product ring of the witness factors and the induced map into it,
    /// verified to be an injective hom when the verdict is `Found`.
    pub fn product_map(&self, a: &FiniteRing) -> Result<Option<RingHom>> {
        if self.witness.is_empty() {
            return Ok(None);
        }
        let factors: Vec<FiniteRing> = self.witness.iter().map(|(_, f)| f.cod.clone()).collect();
        let target = FiniteRing::product(factors)?;
        let map: Vec<Elem> = a
            .elements()
            .map(|x| {
                let parts: Vec<Elem> = self.witness.iter().map(|(_, f)| f.apply(x)).collect();
                target.from_components(&parts)
            })
            .collect();
        let mut seen = map.clone();
        seen.sort();
        seen.dedup();
        let hom = RingHom {
            dom: a.clone(),
            cod: target.clone(),
            injective: seen.len() == map.len(),
            surjective: seen.len() == target.card() as usize,
            map,
        };
        Ok(Some(hom))
    }
}

/// Membership of `a` in the category generated by `family` in one of three
/// senses; `bound` caps the number of product factors for
/// [`CategoryKind::Special`].
pub fn category_membership(
    a: &FiniteRing,
    family: &[FiniteRing],
    kind: CategoryKind,
    bound: usize,
    budget: &Budget,
) -> Result<CategoryVerdict> {
    match kind {
        CategoryKind::Continues => {
            for (k, b) in family.iter().enumerate() {
                if let Some(f) = ring_homs(a, b, budget.max_hom_candidates)?.into_iter().next() {
                    return Ok(CategoryVerdict::found(vec![(k, f)], "hom found"));
                }
            }
            Ok(CategoryVerdict::refuted("no hom into any member"))
        }
        CategoryKind::Embeds => {
            let mut reasons = Vec::new();
            for (k, b) in family.iter().enumerate() {
                if b.card() < a.card() {
                    reasons.push(format!("|{b}| < |{a}|"));
                    continue;
                }
                if let Some(f) = ring_homs(a, b, budget.max_hom_candidates)?.into_iter().find(|f| f.injective) {
                    return Ok(CategoryVerdict::found(vec![(k, f)], "injective hom found"));
                }
                reasons.push(format!("no injective hom into {b}"));
            }
            Ok(CategoryVerdict::refuted(if reasons.is_empty() { "empty family".into() } else { reasons.join("; ") }))
        }
        CategoryKind::Special => {
            let mut all: Vec<(usize, RingHom)> = Vec::new();
            for (k, b) in family.iter().enumerate() {
                for f in ring_homs(a, b, budget.max_hom_candidates)? {
                    all.push((k, f));
                }
            }
            let kernel_mask = |f: &RingHom| -> Vec<bool> { a.elements().map(|x| f.apply(x) == f.cod.zero()).collect() };
            let masks: Vec<Vec<bool>> = all.iter().map(|(_, f)| kernel_mask(f)).collect();
            let common = |idx: &[usize]| -> bool {
                // true when the kernels meet only in 0
                a.elements().skip(1).all(|x| idx.iter().any(|&i| !masks[i][x.0 as usize]))
            };
            let everything: Vec<usize> = (0..all.len()).collect();
            if !common(&everything) {
                return Ok(CategoryVerdict::refuted("the kernels of all homs meet in a nonzero element"));
            }
            // smallest combinations first, lexicographic within a size
            for size in 1..=bound.min(all.len()) {
                let mut idx: Vec<usize> = (0..size).collect();
                loop {
                    if common(&idx) {
                        let w = idx.iter().map(|&i| all[i].clone()).collect();
                        return Ok(CategoryVerdict::found(w, format!("embeds into a product of {size}")));
                    }
                    let mut i = size;
                    while i > 0 && idx[i - 1] == all.len() - size + i - 1 {
                        i -= 1;
                    }
                    if i == 0 {
                        break;
                    }
                    idx[i - 1] += 1;
                    for j in i..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                }
            }
            Ok(CategoryVerdict {
                status: CategoryStatus::NotFoundAtBound,
                witness: Vec::new(),
                reason: format!("no embedding into a product of at most {bound} members"),
            })
        }
    }
}
