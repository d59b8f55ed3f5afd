use super::zariski::AffineContext;
use crate::finring::{ring_homs, Elem, FiniteRing};
use crate::poly::Poly;
use crate::{Budget, Result};

/// Outcome of a relative-radical membership test. On failure the witness
/// names the ring (index into the family), the hom (as its graph) and the
/// zero at which `q` does not vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CradResult {
    pub holds: bool,
    pub witness: Option<(usize, Vec<Elem>, Vec<Elem>)>,
    pub homs_checked: usize,
}

/// `q ∈ crad_C(I)`, decided extensionally: for every `B` in `family`, every
/// ring hom `f: A -> B` and every zero `b` of `I` pushed along `f`, `q`
/// pushed along `f` vanishes at `b`. An empty family gives `true`.
pub fn crad_member(
    q: &Poly,
    ideal: &[Poly],
    ctx: &AffineContext,
    family: &[FiniteRing],
    budget: &Budget,
) -> Result<CradResult> {
    let mut homs_checked = 0;
    for (k, b) in family.iter().enumerate() {
        for f in ring_homs(&ctx.ring, b, budget.max_hom_candidates)? {
            homs_checked += 1;
            let up = ctx.push(&f)?;
            let zeros = up.zero_set(ideal, budget)?;
            for z in zeros {
                if up.eval(q, &z)? != b.zero() {
                    return Ok(CradResult { holds: false, witness: Some((k, f.map.clone(), z)), homs_checked });
                }
            }
        }
    }
    Ok(CradResult { holds: true, witness: None, homs_checked })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcEntry {
    pub q: Poly,
    /// `q ∈ I(Z(I))` over `A` itself.
    pub vanishing: bool,
    /// `q ∈ crad_C(I)`.
    pub crad: bool,
    pub crad_witness: Option<(usize, Vec<Elem>, Vec<Elem>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcReport {
    pub zeros: Vec<Vec<Elem>>,
    pub entries: Vec<GcEntry>,
    pub consistent: bool,
}

/// Compares `I(Z(I))` with `crad_C(I)` on each test polynomial.
pub fn gc_check(
    ctx: &AffineContext,
    family: &[FiniteRing],
    ideal: &[Poly],
    qs: &[Poly],
    budget: &Budget,
) -> Result<GcReport> {
    let zeros = ctx.zero_set(ideal, budget)?;
    let mut entries = Vec::with_capacity(qs.len());
    for q in qs {
        let vanishing = ctx.vanishes(q, &zeros)?;
        let c = crad_member(q, ideal, ctx, family, budget)?;
        entries.push(GcEntry { q: q.clone(), vanishing, crad: c.holds, crad_witness: c.witness });
    }
    let consistent = entries.iter().all(|e| e.vanishing == e.crad);
    Ok(GcReport { zeros, entries, consistent })
}
