//! Positivity obstructions for link diagrams.
//!
//! This crate decides, from a single link diagram, whether the Jones
//! polynomial rules out the existence of *any* positive diagram for the
//! underlying link.  The pipeline:
//!
//! 1. parse or generate an oriented diagram ([`diagram`]),
//! 2. compute the Kauffman bracket / Jones polynomial by state-sum
//!    enumeration ([`statesum`]) and the HOMFLY/Conway polynomials by skein
//!    recursion ([`skein`]),
//! 3. classify the positive-diagram combinatorics through the A-state graph
//!    ([`stategraph`]),
//! 4. combine degree data into a positivity verdict ([`obstruct`]).
//!
//! Polynomial arithmetic lives in [`poly`]; the bundled example knots used
//! throughout the test suite are in [`knots`].
//!
//! # Conventions
//!
//! * Crossing sign: positive when the under-strand crosses right-to-left as
//!   seen along the over-strand (counterclockwise quarter-turn from over-out
//!   to under-out).
//! * Kauffman bracket: `<D> = sum_states A^(#A - #B) (-A^2 - A^-2)^(|s|-1)`,
//!   Jones via `f(D) = (-A)^(-3w) <D>` and `A -> t^(-1/4)`.
//! * HOMFLY: `alpha P(+) - alpha^-1 P(-) = z P(0)` with `P(unknot) = 1`; the
//!   Conway polynomial is `alpha -> 1`, and `V(t)` is `alpha -> t^-1`,
//!   `z -> t^(1/2) - t^(-1/2)`.
//!
//! With these conventions the positive trefoil has `V = t + t^3 - t^4`,
//! `P = 2 alpha^-2 - alpha^-4 + alpha^-2 z^2` and `nabla = 1 + z^2`.

#![forbid(unsafe_code)]

pub mod diagram;
pub mod knots;
pub(crate) mod unionfind;
pub mod obstruct;
pub mod poly;
pub mod skein;
pub mod stategraph;
pub mod statesum;

pub use diagram::Diagram;
pub use poly::{LaurentPoly1, LaurentPoly2, Var};
