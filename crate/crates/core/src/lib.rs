//! PDE-constrained shape optimization by an H¹ shape-gradient flow on a fixed
//! background grid.
//!
//! The evolving domain is bounded by a closed periodic cubic spline through
//! moving control points. At every time step the state, adjoint, and velocity
//! equations are solved with Q_k elements on the cells of a uniform grid that
//! intersect the domain, stabilized by a ghost penalty on the interior edges
//! near the boundary. The velocity is the H¹ Riesz representative of the
//! negative distributed shape derivative, and the control points advance by a
//! semi-implicit Euler step.
//!
//! Module layout:
//!
//! - [`spline`] — closed cubic spline boundaries (fit, evaluate, membership,
//!   resampling),
//! - [`mesh`] — uniform background grid and cut/inside/outside classification,
//! - [`quad`] — Gauss rules, quadtree cut-cell rules, edge rules,
//! - [`basis`] — tensor Lagrange reference element,
//! - [`sparse`] — CSR matrices, preconditioned CG, dense fallback,
//! - [`fem`] — dof maps, stabilized operator assembly, field evaluation,
//! - [`flow`] — one optimization step and the time loop,
//! - [`problems`] — benchmark problems, level plans, error metrics,
//! - [`validate`] — independent oracles (sub-sampled areas, finite
//!   differences, manufactured rates).
//!
//! The crate is `no_std`-compatible (with `alloc`); enable the `libm` feature
//! instead of the default `std` feature for builds without the standard
//! library.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("cutflow-core needs a math backend: enable the `std` or `libm` feature");

pub mod basis;
pub mod error;
pub mod fem;
pub mod flow;
pub mod geometry;
mod math;
pub mod mesh;
pub mod problems;
pub mod quad;
pub mod sparse;
pub mod spline;
pub mod validate;

pub use error::Error;
pub use geometry::{Rect, Vec2};
pub use spline::{ClosedSpline, ControlPolygon};

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
