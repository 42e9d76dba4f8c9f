//! Betti diagrams of stable and lex-segment monomial ideals, their greedy
//! Boij-Söderberg decompositions, and checkers for the structural results
//! relating the decomposition of a lex ideal `L = x a + J` to those of its
//! colon ideals.
//!
//! All arithmetic is exact.

pub mod betti;
pub mod cli;
pub mod decompose;
pub mod enumerate;
pub mod error;
pub mod ideal;
pub mod monomial;
pub mod pure_diagram;
pub mod verify;

pub use betti::{ek_betti, mapping_cone_betti, proj_dim, quotient_diagram, regularity, BettiDiagram};
pub use decompose::{bs_decompose, Decomposition, LengthFilter, Summand};
pub use error::{Error, Result};
pub use ideal::{MonomialIdeal, XSplit};
pub use monomial::Monomial;
pub use pure_diagram::{seq_leq, top_degree_sequence, DegreeSequence, PureDiagram};

/// Exact rational numbers over arbitrary-precision integers.
pub type Rational = num_rational::BigRational;
