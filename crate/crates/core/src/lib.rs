//! Exact symbolic kernel for resolving ideals of the form
//! `I2(Xt_ij) + <g-entries of X*Y>` over the rationals: sparse polynomial
//! arithmetic, a Buchberger engine with ideal-level oracles, the complex
//! builders (Koszul, Eagon-Northcott, tensor, mapping cone, minimalization)
//! and the Betti-number bookkeeping, all with no floating point anywhere.

pub mod betti;
pub mod complex;
pub mod constructions;
pub mod groebner;
pub mod ring;

pub use ring::{Monomial, MonomialOrder, Polynomial, Var};
