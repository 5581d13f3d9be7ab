//! Bounded-degree plane spanners.
//!
//! Three constructions of plane spanners with maximum degree 3:
//!
//! * [`convex`]: points in convex position, stretch at most `(3 + 4 pi) / 3`
//!   (`pi + 1` for centrally symmetric sets);
//! * [`grid`]: vertices of a non-uniform rectangular grid, stretch at most
//!   `3 sqrt 2`;
//! * [`steiner`]: any plane `t`-spanner turned into a degree-3 plane
//!   `(t + epsilon)`-spanner using at most `7n - 12` Steiner points.
//!
//! [`verify`] holds the brute-force oracles every construction is checked
//! against, and [`bounds`] numerically certifies the two analytic bounds
//! behind the convex-position result.

pub mod bounds;
pub mod convex;
pub mod error;
pub mod gen;
pub mod geom;
pub mod graph;
pub mod grid;
pub mod io;
pub mod steiner;
pub mod svg;
pub mod verify;

pub use error::{Error, Result};
pub use geom::{Point, PointSet};
pub use graph::GeometricGraph;
pub use grid::Grid;
