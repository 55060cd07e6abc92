//! Exact coefficient fields and polynomial algebra.

pub mod coeff;
pub mod ext;
pub mod poly;
pub mod rat;
pub mod uni;

pub use coeff::Coeff;
pub use ext::Ext;
pub use poly::{affine_substitute, compose_poly_ratfunc, gradient, Mono, Poly, RatFunc, Var};
pub use rat::{rat, rat_from_str, rat_int, rat_to_string, Rat};
