//! Exact sparse multivariate polynomial arithmetic over the rationals,
//! with lexicographic monomial orders given by variable priority lists.

mod monomial;
mod order;
mod parse;
mod polynomial;

pub use monomial::Monomial;
pub use order::MonomialOrder;
pub use parse::{parse_polynomial, ParseError};
pub use polynomial::{coeff_int, normal_form, reduce, s_polynomial, Coeff, Polynomial};

use serde::{Deserialize, Serialize};
use std::fmt;

/// A variable of the ambient polynomial ring.
///
/// `Elim` is an auxiliary variable used internally by elimination orders
/// (ideal intersection); it never appears in user-facing polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    Elim,
    X(u8, u8),
    Y(u8),
}

impl Var {
    pub fn x(i: u8, j: u8) -> Var {
        Var::X(i, j)
    }

    /// The entry x[i,j] of a generic symmetric matrix, canonicalized to i <= j.
    pub fn x_sym(i: u8, j: u8) -> Var {
        if i <= j {
            Var::X(i, j)
        } else {
            Var::X(j, i)
        }
    }

    pub fn y(k: u8) -> Var {
        Var::Y(k)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Elim => write!(f, "t"),
            Var::X(i, j) => write!(f, "x[{},{}]", i, j),
            Var::Y(k) => write!(f, "y[{}]", k),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum RingError {
    #[error("variable {0} does not appear in the monomial order")]
    UnknownVariable(String),
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
}

#[cfg(test)]
mod tests;
