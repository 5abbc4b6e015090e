//! Monomial ideals, their gradients, and the homological invariants used to
//! study them: graded Betti numbers, regularity, linear quotients, vertex
//! splittings, polymatroidal structure, and Kruskal–Katona shadows.

pub mod betti;
pub mod binom;
pub mod caps;
pub mod complex;
pub mod cycle;
pub mod error;
pub mod families;
pub mod format;
pub mod gradient;
pub mod graph;
pub mod ideal;
pub mod kruskal;
pub mod linalg;
pub mod monomial;
pub mod random;
pub mod structure;
pub mod verify;

pub use complex::{Chain, Face, SimplicialComplex};
pub use error::{Error, Result};
pub use gradient::{gradient, gradient_via_colon, iterated_gradient};
pub use ideal::{GeneratorStats, MonomialIdeal};
pub use monomial::Monomial;
pub use betti::{BettiTable, Convention, Engine};
pub use structure::{QuotientOrder, SplitWitness};
pub use graph::SimpleGraph;
