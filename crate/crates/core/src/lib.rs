pub mod asymptotic;
pub mod cells;
pub mod coxeter;
pub mod error;
pub mod hecke;
pub mod homology;
pub mod kostant;
pub mod poly;

pub use coxeter::{CartanType, CoxeterSystem, Element, GenSet};
pub use error::{Error, Result};
pub use hecke::{Basis, HeckeElt, KlTable};
pub use poly::{Coefficient, LaurentPoly};

/// Laurent polynomials with machine-integer coefficients.
pub type Poly = LaurentPoly<i64>;
/// Laurent polynomials with arbitrary-precision coefficients.
pub type BigPoly = LaurentPoly<num_bigint::BigInt>;
