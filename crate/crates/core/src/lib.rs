//! Exact-arithmetic Gauss-Jordan elimination with a closed-form
//! cross-check: every pivot, every intermediate entry, and every
//! operation matrix the step-by-step engine produces can be predicted
//! as a quotient of minors of the original matrix, and this crate
//! computes both sides and compares them entry by entry.
//!
//! - [`rational`] and [`matrix`]: exact rationals and dense 1-indexed
//!   matrices.
//! - [`minors`]: submatrices, minors, and two independent determinant
//!   oracles (cofactor expansion and fraction-free elimination).
//! - [`engine`]: the elimination itself, materializing every operation
//!   matrix G_q and every state A^(q).
//! - [`formulas`]: minor-quotient predictions and entrywise
//!   verification reports.
//! - [`arrange`]: row/column rearrangement guaranteeing non-zero,
//!   dominant pivots, plus the predicates that check it.

pub mod arrange;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod matrix;
pub mod minors;
pub mod rational;

pub use error::{Error, Result};
pub use matrix::{IndexList, Matrix};
pub use rational::Rational;
