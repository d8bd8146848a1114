//! Angle-monotone path machinery on non-obtuse plane triangulations.
//!
//! A path in a straight-line plane graph is *angle-monotone of width `w`*
//! if all of its edge vectors fit in one closed angular wedge of width `w`.
//! On a triangulation whose internal angles are all at most `w`, every
//! ordered vertex pair is joined by such a path. This crate implements the
//! machinery around that fact:
//!
//! * [`geom`] — planar/spatial vector algebra, angles, wedges, hulls.
//! * [`graph`] — validated plane triangulations and their exterior-ray
//!   augmentation.
//! * [`paths`] — reachability sweeps, upper/lower envelopes, critical
//!   angles, pairwise path extraction, monotonicity verification.
//! * [`spanning`] — per-angle spanning trees, spanning trees of 45°-grid
//!   graphs, an exhaustive spanning-tree existence oracle, a certified
//!   counterexample instance, and the quadrant spanning forest.
//! * [`cap`] — convex caps, projection distortion, forest lifting,
//!   edge unfolding, overlap and radial-monotonicity checks.
//! * [`gen`] — seeded generators for test triangulations and caps.
//! * [`io`] / [`svg`] — graph JSON, mesh OFF, and SVG figure output.

pub mod cap;
pub mod gen;
pub mod geom;
pub mod graph;
pub mod io;
pub mod paths;
pub mod spanning;
pub mod svg;

pub use geom::{Angle, GeomError, Point2, Point3, Polygon2, Vec2, Vec3};
pub use graph::{AugmentedGraph, GraphError, PlaneGraph, Ray};
pub use paths::{CriticalAngles, EnvelopeKind, EnvelopePath, ReachSet, Region};
pub use spanning::{OracleOutcome, RootedTree, SpanningForest};
