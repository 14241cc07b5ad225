//! Finite element laboratory for the Poisson problem `-Δu = f`, `u = 0` on
//! the boundary, with P1 Lagrange, Crouzeix-Raviart and lowest-order
//! Raviart-Thomas elements on anisotropic triangulations.

#![allow(clippy::needless_range_loop, clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod assembly;
pub mod error;
pub mod experiment;
pub mod geometry;
pub mod linalg;
pub mod mesh;
pub mod solvers;
pub mod spaces;

pub use error::{FemError, Result};
