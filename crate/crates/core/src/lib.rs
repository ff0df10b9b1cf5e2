//! Fan-shaped n-set Venn diagrams built from shaped trigonometric curves.
//!
//! Each set boundary is a sine (or cosine) wave with a per-curve amplitude
//! `λ(i)`, shaped by `sgn(s)·|s|^p`, and wrapped around the unit circle by
//! treating the abscissa as a polar angle. The crate covers the whole
//! pipeline:
//!
//! - [`curves`]: boundary evaluation, decay schemes, sampling and projection.
//! - [`regions`]: rasterized region census, connected components, the
//!   independent-family / Venn / simplicity checks and area statistics.
//! - [`labels`]: Gray-code radial slots, centroid, visual center, erosion
//!   and the longest-chord label heuristic.
//! - [`edwards`]: Edwards' spherical cogwheel construction and its
//!   projections, used as the comparison baseline.
//! - [`render`]: deterministic SVG output.
//! - [`data`]: set-membership ingestion and per-region counts.
//! - [`diagram`]: the end-to-end pipelines tying these together.
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod curves;
pub mod data;
pub mod diagram;
pub mod edwards;
mod error;
pub mod geometry;
pub mod labels;
pub mod params;
pub mod presets;
pub mod regions;
pub mod render;

pub use curves::{CurveSpec, DecayScheme, SampledBoundary, Variant};
pub use error::{Error, Result};
pub use diagram::{CogwheelPlanar, FanDiagram};
pub use geometry::Point;
pub use regions::{DiagramReport, RasterGrid, RegionComponent, RegionMask};
