use super::zariski::AffineContext;
use super::{in_exists, is_point};
use crate::finring::{Elem, RingHom};
use crate::fpring::PrimMorphism;
use crate::poly::{Poly, Var};
use crate::{Budget, Error, Result};

/// Both phrasings of the pure / existentially closed condition at one
/// instance `(m, a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PurityReport {
    /// `f ∘ a ∈ ∃_m B`.
    pub image_in_exists: bool,
    /// `a ∈ ∃_m A`.
    pub in_exists: bool,
    pub pure_violation: bool,
    /// `Z_f(I) ≠ ∅` for the system of `m` with parameter `a`.
    pub zeros_above: bool,
    /// `Z(I) ≠ ∅` over `A`.
    pub zeros_below: bool,
    pub ec_violation: bool,
}

impl PurityReport {
    pub fn phrasings_agree(&self) -> bool {
        self.pure_violation == self.ec_violation
    }
}

/// Checks `f⁻¹(∃_m B) = ∃_m A` at the point `a` of `dom(m)`, once through
/// images of point sets and once through zero sets of the system
/// `rel(Q) = 0, m(x) = a` with `a` as coefficients.
pub fn purity_check(f: &RingHom, m: &PrimMorphism, a: &[Elem], budget: &Budget) -> Result<PurityReport> {
    let (ra, rb) = (&f.dom, &f.cod);
    if !is_point(&m.dom, ra, a)? {
        return Err(Error::invalid("parameter is not a point of the domain"));
    }
    let fa: Vec<Elem> = a.iter().map(|&x| f.apply(x)).collect();
    let image_in_exists = in_exists(m, rb, &fa, budget)?;
    let in_exists_a = in_exists(m, ra, a, budget)?;

    let nq = m.cod.nvars() as Var;
    let mut system = m.cod.relations.clone();
    for (i, im) in m.images.iter().enumerate() {
        system.push(im - &Poly::var(nq + i as Var));
    }
    let below = AffineContext::with_params(ra, nq as usize, a.to_vec());
    let above = below.push(f)?;
    let zeros_above = !above.zero_set(&system, budget)?.is_empty();
    let zeros_below = !below.zero_set(&system, budget)?.is_empty();

    Ok(PurityReport {
        image_in_exists,
        in_exists: in_exists_a,
        pure_violation: image_in_exists && !in_exists_a,
        zeros_above,
        zeros_below,
        ec_violation: zeros_above && !zeros_below,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finring::{make_ring, ring_homs};
    use crate::fpring::Presentation;

    #[test]
    fn adjoining_a_square_root_of_minus_one() {
        let b = Budget::default();
        let f3 = make_ring("GF(3)").unwrap();
        let gf9 = make_ring("GF(9)").unwrap();
        let f = &ring_homs(&f3, &gf9, 100).unwrap()[0];
        let m = PrimMorphism::parse("Z[] -> Z[x]/(x^2+1)").unwrap();
        let r = purity_check(f, &m, &[], &b).unwrap();
        assert!(r.pure_violation && r.ec_violation);
        let id = RingHom::identity(&f3);
        let r = purity_check(&id, &m, &[], &b).unwrap();
        assert!(!r.pure_violation && r.phrasings_agree());
    }

    #[test]
    fn identity_is_pure() {
        let b = Budget::default();
        let z2 = make_ring("Z/2").unwrap();
        let id = RingHom::identity(&z2);
        let m = PrimMorphism::builtin("i").unwrap();
        for a in [[0, 0], [0, 1], [1, 0], [1, 1]] {
            let a = [Elem(a[0]), Elem(a[1])];
            let r = purity_check(&id, &m, &a, &b).unwrap();
            assert!(!r.pure_violation && !r.ec_violation);
        }
        let bad = purity_check(&id, &PrimMorphism::identity(&Presentation::parse("Z[x]/(x-1)").unwrap()), &[Elem(0)], &b);
        assert!(bad.is_err());
    }
}
