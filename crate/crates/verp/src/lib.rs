//! Exact combinatorics of `GL(X)` in the Verlinde category `Ver_p`.
//!
//! The modules build on each other in this order: [`fusion`] for the simple
//! objects `L_1..L_{p-1}`, [`alcove`] for `Ver_p(GL_n)`, [`superweight`] and
//! [`diagram`] for `GL(L_m|L_n)` labels and their circular weight diagrams,
//! [`translation`] and [`loop_module`] for the functors `F_i`, `E_i`,
//! [`caps`] for projectives and lowest weights, [`serganova`] for the
//! classical comparison, and [`borel`] for relabeling between Borels.

pub mod alcove;
pub mod borel;
pub mod caps;
pub mod cli;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod fusion;
pub mod loop_module;
pub mod selfcheck;
pub mod serganova;
pub mod superweight;
pub mod translation;

pub use error::{Error, Result};
