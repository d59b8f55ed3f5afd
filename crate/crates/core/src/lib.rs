//! Finitely presented commutative rings, primitive morphisms and arithmetic
//! theories, made executable over explicit finite rings.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`]: sparse multivariate polynomials over Z and Z/n.
//! * [`finring`]: explicit finite commutative rings and hom enumeration.
//! * [`fpring`]: presentations `Z[x..]/(p..)`, primitive morphisms, pushouts,
//!   coequalizers and finite colimits.
//! * [`groebner`]: ideal membership over Q, Z/p and Z (strong bases).
//! * [`points`]: point sets `hom(P, A)`, images of primitive morphisms,
//!   zero sets, closures, relative radicals and the element-category cocones.
//! * [`theory`]: arithmetic axioms and theories, the sentence DSL and
//!   satisfaction over finite rings.
//! * [`products`]: filters on finite index sets and reduced products.
//! * [`cli`]: the command-line driver producing versioned JSON reports.

pub mod budget;
pub mod cli;
pub mod error;
pub mod finring;
pub mod fpring;
pub mod groebner;
pub mod linalg;
pub mod points;
pub mod poly;
pub mod products;
pub mod syntax;
pub mod theory;

pub use budget::Budget;
pub use error::{Error, Result};
pub use finring::{Elem, FiniteRing, RingHom};
pub use fpring::{Presentation, PrimMorphism, Verification};
pub use poly::{Monomial, MonomialOrder, Poly, Var};
