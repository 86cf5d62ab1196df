//! Interchangeable ways of computing Gromov–Witten coefficients.

use crate::cartan::CorootVec;
use crate::coeffring::Scalar;
use crate::error::Result;
use crate::peterson::Peterson;
use crate::weyl::WeylElt;

/// A source of `c_{u,v}^{w,λ}`.
pub trait GwRoute: Send + Sync {
    fn name(&self) -> &'static str;
    fn gw(&self, pet: &Peterson, u: &WeylElt, v: &WeylElt, w: &WeylElt, lambda: &CorootVec) -> Result<Scalar>;
}

/// Products of quantum Schubert polynomials.
struct QuantumRoute;

impl GwRoute for QuantumRoute {
    fn name(&self) -> &'static str {
        "quantum"
    }

    fn gw(&self, pet: &Peterson, u: &WeylElt, v: &WeylElt, w: &WeylElt, lambda: &CorootVec) -> Result<Scalar> {
        Ok(pet.qr.gw_coefficient(u, v, w, lambda))
    }
}

/// `j`-coefficients of the affine Grassmannian.
struct AffineRoute;

impl GwRoute for AffineRoute {
    fn name(&self) -> &'static str {
        "affine"
    }

    fn gw(&self, pet: &Peterson, u: &WeylElt, v: &WeylElt, w: &WeylElt, lambda: &CorootVec) -> Result<Scalar> {
        pet.gw_from_j(u, v, w, lambda)
    }
}

pub fn gw_routes() -> Vec<Box<dyn GwRoute>> {
    vec![Box::new(QuantumRoute), Box::new(AffineRoute)]
}

pub fn gw_route(name: &str) -> Option<Box<dyn GwRoute>> {
    gw_routes().into_iter().find(|r| r.name() == name)
}
