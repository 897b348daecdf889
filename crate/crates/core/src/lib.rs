//! Exact computer algebra for divisible formal weight enumerators.
//!
//! The crate builds the enumerator families for `q = 2, 4, 4/3` (and the
//! `q = 2`, `c = 4` family generated by the extended Hamming and degree-12
//! enumerators), computes their zeta polynomials two independent ways and
//! checks bounds, differential identities, functional equations and the
//! location of zeta zeros.

pub mod error;
pub mod families;
pub mod homopoly;
pub mod linalg;
pub mod matgroup;
pub mod scalar;
pub mod upoly;
pub mod zeta;

pub use error::{Error, Result};
pub use families::{Family, FamilySpec};
pub use homopoly::{HomPoly, Mat2, WeightProfile};
pub use scalar::{QuadElem, Rational};
pub use upoly::UPoly;
pub use zeta::{RhReport, ZetaPoly};
