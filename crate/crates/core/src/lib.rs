//! Knot invariants for braid closures and pretzel diagrams, and a certifier
//! that replays the obstruction to Seifert fibered surgery on the pretzel
//! knots `P(p, q, q)`.
//!
//! The crate is organised bottom-up:
//!
//! * [`poly`] and [`linalg`] provide exact arithmetic (sparse Laurent
//!   polynomials, integer determinants, signatures of symmetric matrices).
//! * [`braid`] handles braid words, the Garside normal form and the braid
//!   families used by the certifier.
//! * [`diagram`] holds oriented PD-code diagrams, Seifert circles and the
//!   Goeritz / Gordon–Litherland signature.
//! * [`invariants`] has closed-form invariants and certified interval bounds.
//! * [`homfly`] computes HOMFLY polynomials through the Hecke algebra trace.
//! * [`certify`] assembles the per-slope exclusion certificates.

pub mod braid;
pub mod certify;
pub mod diagram;
pub mod error;
pub mod homfly;
pub mod invariants;
pub mod linalg;
pub mod poly;

pub use braid::{BraidWord, GarsideNormalForm, Permutation, PermutationBraid};
pub use diagram::{Crossing, GoeritzData, LinkDiagram};
pub use error::{Error, Result};
pub use invariants::{IntInterval, InvariantRecord};
pub use poly::{LaurentPoly1, LaurentPoly2};
