use num_bigint::BigInt;
use num_traits::Zero;

use super::{search, CompiledPoly};
use crate::finring::{Elem, FiniteRing, RingHom, RingSpec};
use crate::linalg::{hermite, lattice_contains, FieldEchelon};
use crate::poly::Poly;
use crate::{Budget, Error, Result};

/// Polynomials over a finite ring `A` in variables `x0..x{nx-1}`: integer
/// polynomials whose variables `>= nx` are parameters with fixed values in
/// `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineContext {
    pub ring: FiniteRing,
    pub nx: usize,
    pub params: Vec<Elem>,
}

impl AffineContext {
    pub fn new(ring: &FiniteRing, nx: usize) -> Self {
        AffineContext { ring: ring.clone(), nx, params: Vec::new() }
    }

    pub fn with_params(ring: &FiniteRing, nx: usize, params: Vec<Elem>) -> Self {
        AffineContext { ring: ring.clone(), nx, params }
    }

    /// Base change along `f: A -> B`: parameters are pushed through `f`.
    pub fn push(&self, f: &RingHom) -> Result<AffineContext> {
        if f.dom != self.ring {
            return Err(Error::invalid("hom does not start at the coefficient ring"));
        }
        Ok(AffineContext { ring: f.cod.clone(), nx: self.nx, params: self.params.iter().map(|&a| f.apply(a)).collect() })
    }

    pub fn eval(&self, p: &Poly, x: &[Elem]) -> Result<Elem> {
        Ok(CompiledPoly::new(p, &self.ring, self.nx, &self.params)?.eval(&self.ring, x))
    }

    /// `Z(I) ⊆ A^nx`, in lexicographic order.
    pub fn zero_set(&self, polys: &[Poly], budget: &Budget) -> Result<Vec<Vec<Elem>>> {
        let cs = polys
            .iter()
            .map(|p| Ok((CompiledPoly::new(p, &self.ring, self.nx, &self.params)?, self.ring.zero())))
            .collect::<Result<Vec<_>>>()?;
        search(&self.ring, self.nx, &cs, budget)
    }

    /// Whether `q` vanishes at every listed point (vacuously on no points).
    pub fn vanishes(&self, q: &Poly, points: &[Vec<Elem>]) -> Result<bool> {
        let c = CompiledPoly::new(q, &self.ring, self.nx, &self.params)?;
        Ok(points.iter().all(|x| c.eval(&self.ring, x) == self.ring.zero()))
    }
}

fn monomial_values(ring: &FiniteRing, a: &[Elem], degree: u32) -> Vec<Elem> {
    let mut row = vec![ring.one()];
    for &x in a {
        let powers: Vec<Elem> = (0..degree).map(|e| ring.pow(x, e as u64)).collect();
        row = row.iter().flat_map(|&r| powers.iter().map(move |&p| (r, p))).map(|(r, p)| ring.mul(r, p)).collect();
    }
    row
}

/// Points of `A^nx` at which every polynomial of per-variable degree
/// `< degree` vanishing on `e` also vanishes. Over a finite field the
/// default degree is `|A|`, giving the Zariski closure `Z(I(E))`; over
/// `Z/n` a degree bound is required.
pub fn zariski_closure(
    ring: &FiniteRing,
    nx: usize,
    e: &[Vec<Elem>],
    degree: Option<u32>,
    budget: &Budget,
) -> Result<Vec<Vec<Elem>>> {
    budget.check_tuples(ring.card() as u64, nx)?;
    let is_field = ring.is_field();
    let degree = match (degree, is_field) {
        (Some(d), _) => d,
        (None, true) => ring.card(),
        (None, false) => {
            return Err(Error::invalid(format!("closure over the non-field {ring} needs a degree bound")))
        }
    };
    let width = (degree as u64).checked_pow(nx as u32).unwrap_or(u64::MAX);
    if width > 4096 {
        return Err(Error::Budget(format!("{width} monomials in the closure computation")));
    }
    let all = search(ring, nx, &[], budget)?;
    let rows: Vec<Vec<Elem>> = e.iter().map(|a| monomial_values(ring, a, degree)).collect();
    if is_field {
        let ech = FieldEchelon::new(ring, &rows);
        return Ok(all.into_iter().filter(|a| ech.contains(&monomial_values(ring, a, degree))).collect());
    }
    let RingSpec::Zmod(n) = *ring.spec() else {
        return Err(Error::invalid(format!("closure over {ring} is not supported")));
    };
    // (Z/n)-span membership is membership in the lattice spanned by the
    // lifted rows together with n Z^k
    let k = width as usize;
    let mut lattice: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|x| BigInt::from(x.0)).collect()).collect();
    for j in 0..k {
        let mut v = vec![BigInt::zero(); k];
        v[j] = BigInt::from(n);
        lattice.push(v);
    }
    let h = hermite(&lattice, k);
    Ok(all
        .into_iter()
        .filter(|a| {
            let v: Vec<BigInt> = monomial_values(ring, a, degree).iter().map(|x| BigInt::from(x.0)).collect();
            lattice_contains(&h, &v)
        })
        .collect())
}
