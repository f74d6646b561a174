//! Finite-depth workbench for topological automata over free monoids.
//!
//! A language L ⊆ A* is viewed as a point χ_L of the Cantor space
//! {0,1}^{A*}, on which A* acts on the right by `(f·a)(w) = f(aw)`. The
//! closure of the orbit of χ_L is the state space of the minimal
//! topological automaton of L, and the closure of its transition monoid in
//! the topology of pointwise convergence is the enveloping syntactic monoid.
//! For rational L both objects are finite and are the usual minimal DFA and
//! syntactic monoid; for arbitrary decidable L this crate works with their
//! depth-bounded and context-bounded finite shadows.

pub mod error;
pub mod language;
pub mod monoid;
pub mod recognition;
pub mod shift;
pub mod topology;

pub use error::{Error, Result};
