//! Region census of a diagram: rasterized membership masks, connected
//! components, the independent-family / Venn / simplicity predicates and
//! region-area statistics.

mod components;
mod contour;
mod even_odd;
mod mask;
mod raster;
mod report;
mod simplicity;
mod stats;

pub use components::{extract_components, CellSet, RegionComponent};
pub use contour::trace_outlines;
pub use even_odd::{classify_by_even_odd, rasterize_even_odd};
pub use mask::RegionMask;
pub use raster::{
    classify_point, classify_strip, rasterize, strip_census, GridGeometry, GridSource, RasterGrid,
    DEFAULT_EXTENT, DEFAULT_FRAME_RADIUS, MIN_RESOLUTION,
};
pub use report::{
    assess, default_tiny_threshold, verify, verify_curves, DiagramReport, Simplicity, TinyRegion,
};
pub use simplicity::{check_simplicity, SimplicityDetail, SimplicityVerdict};
pub use stats::{area_stats, log_histogram, AreaStats, Histogram, HISTOGRAM_BINS};
