//! Completely regular codes in the n-dimensional rectangular grid.
//!
//! A code `C` in the grid graph on `Z^n` is completely regular when its
//! distance partition `C_0 = C, C_1, ..., C_rho` is an equitable partition
//! with a tridiagonal parameter matrix. This crate provides:
//!
//! - finite realizations of the grid and its quotients ([`lattice`]),
//! - parameter-matrix algebra and exact verification of periodic codes on
//!   quotient tori ([`codes`]),
//! - generators for the classical code families ([`constructions`]),
//! - an exact 0-1 feasibility solver for grid-ball coloring problems
//!   ([`feasibility`]),
//! - enumeration and classification drivers that combine the above
//!   ([`classify`]).
//!
//! Everything is exact integer arithmetic; there are no tolerances anywhere.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod classify;
pub mod codes;
pub mod constructions;
pub mod feasibility;
pub mod lattice;

pub use codes::{ParamMatrix, PartialMatrix, PeriodicCode, Verdict};
pub use feasibility::{Assignment, Budget, FeasibilityProblem, LpMode, SolveResult};
pub use lattice::{BallGraph, QuotientGraph, Word};
