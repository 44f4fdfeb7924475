//! Exact computation of the asymptotic order `nubar_I`, integral and
//! fractional closures of monomial ideals, Lojasiewicz exponents, Newton
//! polygons and plane-branch invariants, each carried by a checkable
//! certificate.

pub mod arcs;
pub mod branch;
pub mod cli;
pub mod closure;
pub mod error;
pub mod ideal;
mod linalg;
pub mod lp;
pub mod order;
pub mod polygon;
pub mod polyhedra;
pub mod rational;
mod report;

pub use error::{Error, Result};
pub use ideal::{ExponentVector, MonomialIdeal, PolynomialQ};
pub use rational::{Extended, Rational};
