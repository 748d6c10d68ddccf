//! # wahull
//!
//! Weighted automata over the rationals, cost register automata, and the
//! Zariski-style invariants connecting them: linear/affine hulls, register
//! minimization, and the state/register tradeoff.
//!
//! All arithmetic is exact rational arithmetic; equality tests on series,
//! subspaces and invariants are exact decisions, never approximations.

pub mod error;
pub mod invariant;
pub mod linalg;
pub mod wa;
pub mod zariski;

pub use error::{Error, Result};
pub use invariant::{InvariantOptions, InvariantReport};
pub use linalg::{Matrix, Scalar, Subspace};
pub use wa::{WeightedAutomaton, Word};
pub use zariski::{AffineComponent, Mode, ZSet};
