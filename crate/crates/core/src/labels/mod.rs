//! Label placement: a ring of radial slots ordered by the curves' sign
//! changes, and in-region labels placed on the longest chord through the
//! visual center of the eroded region.

mod gray;
mod plan;
mod shape;

pub use gray::{gray_order, radial_slots, sign_mask, sign_sweep, GrayOrder};
pub use plan::{
    plan_labels, primary_components, radial_anchors, LabelConfig, LabelEntry, LabelPlan,
    RadialAnchor, Strategy, DEFAULT_CANVAS_PX, DEFAULT_DIRECTIONS, DEFAULT_EROSION_FRACTION,
    DEFAULT_MIN_CLEARANCE_PX, RADIAL_RADIUS,
};
pub use shape::{
    centroid, erode_to_fraction, longest_segment, upright_degrees, visual_center, Chord,
    VisualCenter,
};
