//! k-shellability of simplicial complexes and graphs, the expansion functor on
//! complexes and monomial ideals, and Stanley decompositions of face rings
//! built from k-shelling orders.
//!
//! Vertices are addressed by dense indices into a [`Universe`] and faces are
//! `u128` bitsets, so a complex has at most 128 vertices. Labels only matter
//! at the I/O boundary.

pub mod cli;
pub mod complex;
pub mod error;
pub mod expansion;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod shelling;
pub mod stanley;

pub use complex::{Complex, Face, Universe, MAX_VERTICES};
pub use error::{Error, Result};
pub use expansion::ExpansionVector;
pub use graph::Graph;
pub use ideal::{Monomial, MonomialIdeal};
pub use shelling::{SearchOptions, ShellingOrder};
