//! Real forms of Danielewski surfaces `xy = p(z)` and of the complex tori
//! `(𝔸¹∖{0})²` and `𝔸¹×(𝔸¹∖{0})`, computed exactly over cyclotomic fields.

pub mod arith;
pub mod autgroup;
pub mod classify;
pub mod error;
pub mod invariants;
pub mod poly;
pub mod sample;
pub mod verify;

pub use arith::{CycloNum, Rational, RootOfUnity};
pub use error::{Error, Result};
pub use poly::{LaurentPoly, MultiPoly, UniPoly};
