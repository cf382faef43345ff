//! Ideals of noncommutative polynomials over the rationals.
//!
//! The crate computes two-sided and right Groebner bases in the free algebra,
//! intersections of two-sided and one-sided ideals, homogeneous parts with
//! respect to integer matrix gradings and monomial parts of right ideals. The
//! [`prover`] module strings these together into workflows for operator
//! identities and emits cofactor certificates that can be re-checked with
//! nothing but polynomial arithmetic.

pub mod error;
pub mod freealg;
pub mod grading;
pub mod groebner;
pub mod intersect;
pub mod monpart;
pub mod ordering;
pub mod prover;
pub mod quiver;

pub use error::{Error, Result};
pub use freealg::{Alphabet, Coeff, Monomial, Poly, Ring, Term, Var};
pub use ordering::MonomialOrder;
