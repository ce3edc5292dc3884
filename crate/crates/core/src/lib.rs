//! Preferred extended Dynkin diagrams of contragredient Lie superalgebras and
//! the push-the-button calculus on their Vogan superdiagrams.
//!
//! [`catalog`] builds the diagrams with their a-labels and root coordinates;
//! [`engine`] works with circlings: admissibility, presses, orbits,
//! reduction, diagram symmetries and the real-form equivalence decision.
//! [`payload`] holds the JSON documents shared by the command line and the
//! HTTP service.

pub mod catalog;
pub mod diagram;
pub mod engine;
pub mod error;
pub mod family;
pub mod iso;
pub mod payload;
pub mod realization;

pub use diagram::{Color, Diagram, Edge, Longer, Node, NodeId};
pub use error::{Error, Result};
pub use family::{list_families, Family, FamilySpec, Parity};
pub use realization::RootRealization;

/// Exact rational scalar used by every realization check.
pub type Rational = num_rational::Ratio<i64>;
