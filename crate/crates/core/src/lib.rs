//! Iwasawa λ-invariants of cyclotomic Z₂-extensions of imaginary quadratic
//! fields and of their Fermat-prime analogues.
//!
//! The crate has two independent routes to λ:
//!
//! * closed formulas ([`lambda`]) driven by prime splitting in the tower
//!   ([`splitting`]) and the Riemann–Hurwitz relation for `Z/p`-extensions;
//! * an analytic oracle ([`oracle`]) that computes 2-adic valuations of
//!   relative class numbers `h⁻` along the tower from generalized Bernoulli
//!   numbers, using exact cyclotomic arithmetic ([`characters`]).
//!
//! [`cohomology`] is a general engine for `H¹`, `H²` and the Herbrand exponent
//! of finitely generated modules over a cyclic p-group; [`arith`] holds the
//! integer machinery underneath everything.

pub mod arith;
pub mod characters;
pub mod cohomology;
pub mod error;
pub mod lambda;
pub mod oracle;
pub mod splitting;

pub use error::{Error, Result};
