//! Exact-arithmetic verification engine for the MV cd-structure on proper
//! modulus pairs, instantiated over one-dimensional ambient spaces.
//!
//! Every ambient component is a copy of the projective line over the
//! rationals, possibly with finitely many closed points deleted. On top of
//! that curve model the crate builds modulus pairs, admissible morphisms,
//! canonical fiber products, off-diagonal decompositions of interior-etale
//! covers, MV-squares with their Nisnevich witnesses, and finite
//! correspondences with Mayer-Vietoris lifts. All arithmetic is exact: big
//! rationals, univariate and bivariate polynomials, factorization and
//! Newton-Puiseux branch expansions. There is no floating point anywhere.

pub mod algebra;
pub mod battery;
pub mod curve;
pub mod error;
pub mod od;
pub mod pairs;
pub mod scenario;
pub mod squares;
pub mod transfers;


pub use error::{Error, Result};
