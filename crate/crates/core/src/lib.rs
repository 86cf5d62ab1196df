//! Exact Schubert calculus for flag varieties and the affine Grassmannian.

pub mod cartan;
pub mod coeffring;
pub mod error;
pub mod linalg;
pub mod nilhecke;
pub mod parabolic;
pub mod peterson;
pub mod qbruhat;
pub mod routes;
pub mod quantum;
pub mod verify;
pub mod weyl;

pub use cartan::{AffineRoot, CartanType, CorootVec, RootSystem, RootVec, WeightVec};
pub use error::{Error, Result};
pub use weyl::{AffineElt, CoverKind, CoverRecord, WeylElt};
