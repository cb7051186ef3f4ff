//! Cut finite element method for two-dimensional linear elasticity.
//!
//! The computational domain is described by piecewise-linear boundary loops
//! embedded in a structured background grid. Elements intersecting the domain
//! form the active mesh; integration on cut elements uses divergence-theorem
//! quadrature over the exact intersection, Dirichlet conditions are imposed
//! weakly by Nitsche's method, and a face-based ghost penalty restores the
//! conditioning lost to small cuts.
//!
//! The crate is `no_std` (with `alloc`): it contains only the geometry,
//! quadrature, assembly and solver kernels. File formats and the command-line
//! front end live in the companion `cutfem-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod fibre;
pub mod forms;
pub mod geometry;
pub mod linalg;
pub mod mesh;
pub mod quadrature;
pub mod scenarios;
pub mod space;

mod float;

pub use error::Error;
pub use geometry::{BoundaryRep, BoundaryTag, CutRegion, Point2, PointLocation, Vec2};

/// Result alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
