//! Filters on finite index sets and reduced products of finite rings.
//!
//! On a finite index set every filter is principal: it consists of the
//! supersets of its least element `S0`, and the reduced product is the
//! product of the factors indexed by `S0`.

use std::collections::BTreeSet;

use crate::finring::{ring_homs, Elem, FiniteRing, RingHom};
use crate::theory::{satisfies, Axiom};
use crate::{Budget, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Filter {
    pub index: BTreeSet<usize>,
    pub gens: Vec<BTreeSet<usize>>,
    /// The least member, the intersection of the generators.
    pub min: BTreeSet<usize>,
}

/// The filter on `index` generated by `gens`. No generators gives the
/// trivial filter `{I}`.
pub fn make_filter(index: &[usize], gens: &[Vec<usize>]) -> Result<Filter> {
    let index: BTreeSet<usize> = index.iter().copied().collect();
    if index.is_empty() {
        return Err(Error::invalid("empty index set"));
    }
    let gens: Vec<BTreeSet<usize>> = gens.iter().map(|g| g.iter().copied().collect()).collect();
    let mut min = index.clone();
    for g in &gens {
        if !g.is_subset(&index) {
            return Err(Error::invalid(format!("generator {g:?} is not a subset of the index set")));
        }
        min = min.intersection(g).copied().collect();
    }
    if min.is_empty() {
        return Err(Error::invalid("improper filter: the generators have empty intersection"));
    }
    Ok(Filter { index, gens, min })
}

impl Filter {
    pub fn contains(&self, s: &BTreeSet<usize>) -> bool {
        s.is_subset(&self.index) && self.min.is_subset(s)
    }

    /// Ultrafilters on a finite set are the principal ones at a point.
    pub fn is_ultra(&self) -> bool {
        self.min.len() == 1
    }

    /// Every member, ordered by size then lexicographically.
    pub fn members(&self) -> Vec<BTreeSet<usize>> {
        let rest: Vec<usize> = self.index.difference(&self.min).copied().collect();
        let mut out: Vec<BTreeSet<usize>> = (0u64..1 << rest.len())
            .map(|mask| {
                let mut s = self.min.clone();
                s.extend(rest.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x));
                s
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// Upward closure, closure under intersection and properness, checked
    /// over every subset of the index set.
    pub fn laws_hold(&self) -> bool {
        let items: Vec<usize> = self.index.iter().copied().collect();
        let all: Vec<BTreeSet<usize>> = (0u64..1 << items.len())
            .map(|mask| items.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &x)| x).collect())
            .collect();
        let members: Vec<&BTreeSet<usize>> = all.iter().filter(|s| self.contains(s)).collect();
        let upward = members.iter().all(|s| all.iter().filter(|t| s.is_subset(t)).all(|t| self.contains(t)));
        let meets = members
            .iter()
            .all(|s| members.iter().all(|t| self.contains(&s.intersection(t).copied().collect())));
        let gens = self.gens.iter().all(|g| self.contains(g));
        upward && meets && gens && self.contains(&self.index) && !self.contains(&BTreeSet::new())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedProduct {
    /// `family[k]` is the factor at the `k`-th smallest index.
    pub family: Vec<FiniteRing>,
    pub filter: Filter,
    /// The product over `S0`, factors in index order.
    pub carrier: FiniteRing,
}

pub fn reduced_product(family: &[FiniteRing], filter: &Filter) -> Result<ReducedProduct> {
    if family.len() != filter.index.len() {
        return Err(Error::invalid(format!(
            "{} factors for an index set of size {}",
            family.len(),
            filter.index.len()
        )));
    }
    let carrier = product_over(family, &filter.index, &filter.min)?;
    Ok(ReducedProduct { family: family.to_vec(), filter: filter.clone(), carrier })
}

fn position(index: &BTreeSet<usize>, i: usize) -> usize {
    index.iter().position(|&x| x == i).expect("index in the filter's index set")
}

fn product_over(family: &[FiniteRing], index: &BTreeSet<usize>, s: &BTreeSet<usize>) -> Result<FiniteRing> {
    let fs = s.iter().map(|&i| family[position(index, i)].clone()).collect();
    Ok(FiniteRing::product(fs)?)
}

/// Projection of `pt = ∏_T` onto `ps = ∏_S`, `S ⊆ T`.
fn restriction(pt: &FiniteRing, ps: &FiniteRing, t: &BTreeSet<usize>, s: &BTreeSet<usize>) -> RingHom {
    let keep: Vec<usize> = t.iter().enumerate().filter(|(_, i)| s.contains(i)).map(|(k, _)| k).collect();
    let map = pt
        .elements()
        .map(|x| {
            let c = pt.components(x).expect("product");
            ps.from_components(&keep.iter().map(|&k| c[k]).collect::<Vec<_>>())
        })
        .collect();
    RingHom::from_map(pt, ps, map)
}

impl ReducedProduct {
    /// `∏_{i ∈ s} A_i`.
    pub fn sub_product(&self, s: &BTreeSet<usize>) -> Result<FiniteRing> {
        product_over(&self.family, &self.filter.index, s)
    }

    /// The restriction `∏_T -> ∏_S` for `S ⊆ T`.
    pub fn transition(&self, t: &BTreeSet<usize>, s: &BTreeSet<usize>) -> Result<RingHom> {
        if !s.is_subset(t) {
            return Err(Error::invalid("transition maps go from a set to a subset"));
        }
        Ok(restriction(&self.sub_product(t)?, &self.sub_product(s)?, t, s))
    }

    /// For an ultrafilter at `i`, the isomorphism of the carrier onto
    /// `A_i`, verified to be a bijective hom.
    pub fn ultra_isomorphism(&self) -> Result<Option<RingHom>> {
        if !self.filter.is_ultra() {
            return Ok(None);
        }
        let f = RingHom::projection(&self.carrier, 0);
        if !(f.injective && f.surjective && f.is_hom()) {
            return Err(Error::invalid("projection of a one-factor product is not an isomorphism"));
        }
        Ok(Some(f))
    }
}

/// Result of chasing the directed system of projections over the filter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColimitCheck {
    pub classes: usize,
    pub carrier_card: u32,
    /// Each class meets `∏_{S0}` exactly once and the induced operations
    /// agree with the carrier's.
    pub isomorphic: bool,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// Builds the colimit of `(∏_T)_{T ∈ filter}` along the projections as a
/// quotient of the disjoint union and compares it with the carrier.
pub fn colimit_check(rp: &ReducedProduct) -> Result<ColimitCheck> {
    let members = rp.filter.members();
    let rings: Vec<FiniteRing> = members.iter().map(|s| rp.sub_product(s)).collect::<Result<_>>()?;
    let mut offset = Vec::with_capacity(rings.len());
    let mut total = 0usize;
    for r in &rings {
        offset.push(total);
        total += r.card() as usize;
    }
    let mut parent: Vec<usize> = (0..total).collect();
    for (a, t) in members.iter().enumerate() {
        for (b, s) in members.iter().enumerate() {
            if a == b || !s.is_subset(t) {
                continue;
            }
            let pi = restriction(&rings[a], &rings[b], t, s);
            for x in rings[a].elements() {
                let (u, v) = (find(&mut parent, offset[a] + x.0 as usize), find(&mut parent, offset[b] + pi.apply(x).0 as usize));
                parent[u] = v;
            }
        }
    }
    let roots: BTreeSet<usize> = (0..total).map(|x| find(&mut parent, x)).collect();
    // members[0] is S0
    let carrier = &rings[0];
    let mut rep_of_root: Vec<Option<Elem>> = vec![None; total];
    let mut isomorphic = true;
    for x in carrier.elements() {
        let r = find(&mut parent, x.0 as usize);
        if rep_of_root[r].replace(x).is_some() {
            isomorphic = false;
        }
    }
    isomorphic &= carrier.card() as usize == roots.len();
    if isomorphic {
        // operations computed in any stage agree with the carrier
        'stages: for (a, r) in rings.iter().enumerate() {
            let rep: Vec<Elem> = r
                .elements()
                .map(|x| rep_of_root[find(&mut parent, offset[a] + x.0 as usize)].expect("every class meets S0"))
                .collect();
            for x in r.elements() {
                for y in r.elements() {
                    let (rx, ry) = (rep[x.0 as usize], rep[y.0 as usize]);
                    if rep[r.add(x, y).0 as usize] != carrier.add(rx, ry)
                        || rep[r.mul(x, y).0 as usize] != carrier.mul(rx, ry)
                    {
                        isomorphic = false;
                        break 'stages;
                    }
                }
            }
        }
    }
    Ok(ColimitCheck { classes: roots.len(), carrier_card: rp.carrier.card(), isomorphic })
}

/// First bijective hom `a -> b` in enumeration order.
pub fn find_isomorphism(a: &FiniteRing, b: &FiniteRing, budget: &Budget) -> Result<Option<RingHom>> {
    if a.card() != b.card() {
        return Ok(None);
    }
    Ok(ring_homs(a, b, budget.max_hom_candidates)?.into_iter().find(|f| f.injective && f.surjective))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservationReport {
    pub factors_model: Vec<bool>,
    pub product_models: bool,
    pub product_witness: Option<Vec<Elem>>,
    /// Whether preservation is guaranteed: the filter is ultra or the
    /// axiom is Horn, and every factor over `S0` models it.
    pub expected: bool,
    /// Guaranteed preservation failed. Always a bug.
    pub violation: bool,
}

pub fn preservation_check(axiom: &Axiom, family: &[FiniteRing], filter: &Filter, budget: &Budget) -> Result<PreservationReport> {
    let rp = reduced_product(family, filter)?;
    let factors_model =
        family.iter().map(|a| Ok(satisfies(a, axiom, false, budget)?.holds)).collect::<Result<Vec<bool>>>()?;
    let r = satisfies(&rp.carrier, axiom, false, budget)?;
    let over_min = filter.min.iter().all(|&i| factors_model[position(&filter.index, i)]);
    let horn = axiom.morphisms().len() <= 1;
    let expected = over_min && (filter.is_ultra() || horn);
    Ok(PreservationReport {
        factors_model,
        product_models: r.holds,
        violation: expected && !r.holds,
        product_witness: r.witness,
        expected,
    })
}
