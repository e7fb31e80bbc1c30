//! Exact arithmetic substrate: big rationals, univariate and bivariate
//! polynomials over the rationals, factorization, resultants and
//! Newton-Puiseux branch expansion.

pub mod algext;
pub mod bifactor;
pub mod bipoly;
pub mod factor;
pub mod puiseux;
pub mod rat;
pub mod unipoly;

pub use bipoly::BiPoly;
pub use rat::Rat;
pub use unipoly::UniPoly;
