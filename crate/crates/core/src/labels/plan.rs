use super::gray::radial_slots;
use super::shape::{erode_to_fraction, longest_segment, upright_degrees, visual_center};
use crate::curves::Variant;
use crate::error::Result;
use crate::geometry::Point;
use crate::regions::{RegionComponent, RegionMask, DEFAULT_EXTENT};
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::collections::BTreeMap;

/// Radius of the ring of radial labels.
pub const RADIAL_RADIUS: f64 = 1.06;
pub const DEFAULT_EROSION_FRACTION: f64 = 0.5;
pub const DEFAULT_DIRECTIONS: usize = 90;
/// Smallest clearance for in-region labels, in pixels of a
/// [`DEFAULT_CANVAS_PX`] render.
pub const DEFAULT_MIN_CLEARANCE_PX: f64 = 8.0;
pub const DEFAULT_CANVAS_PX: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Strategy {
    Radial,
    VisualCenter,
    Segment,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabelConfig {
    /// World units.
    pub min_clearance: f64,
    pub erosion_fraction: f64,
    pub directions: usize,
}

impl LabelConfig {
    /// Defaults for a canvas of `canvas_px` showing `[-extent, extent]²`.
    pub fn for_canvas(extent: f64, canvas_px: usize) -> Self {
        Self {
            min_clearance: DEFAULT_MIN_CLEARANCE_PX * 2.0 * extent / canvas_px as f64,
            erosion_fraction: DEFAULT_EROSION_FRACTION,
            directions: DEFAULT_DIRECTIONS,
        }
    }
}

impl Default for LabelConfig {
    fn default() -> Self {
        Self::for_canvas(DEFAULT_EXTENT, DEFAULT_CANVAS_PX)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LabelEntry {
    pub anchor: Point,
    /// Degrees in (-90, 90].
    pub rotation_deg: f64,
    pub strategy: Strategy,
    /// Room along the text direction, world units.
    pub max_chord: f64,
    /// Room across the text direction (half-height), world units.
    pub clearance: f64,
    /// Chord endpoints for [`Strategy::Segment`].
    pub chord: Option<(Point, Point)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LabelPlan {
    pub n: usize,
    pub entries: BTreeMap<RegionMask, LabelEntry>,
}

impl Serialize for LabelPlan {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(rename_all = "camelCase")]
        struct Entry<'a> {
            mask: String,
            anchor: &'a Point,
            rotation_deg: f64,
            strategy: Strategy,
            max_chord: f64,
            clearance: f64,
            #[serde(skip_serializing_if = "Option::is_none")]
            chord: Option<[Point; 2]>,
        }
        let entries: Vec<Entry> = self
            .entries
            .iter()
            .map(|(m, e)| Entry {
                mask: m.to_bit_string(self.n),
                anchor: &e.anchor,
                rotation_deg: e.rotation_deg,
                strategy: e.strategy,
                max_chord: e.max_chord,
                clearance: e.clearance,
                chord: e.chord.map(|(a, b)| [a, b]),
            })
            .collect();
        let mut st = s.serialize_struct("LabelPlan", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

/// Anchor on the radial ring.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RadialAnchor {
    /// Radians.
    pub angle: f64,
    pub radius: f64,
    pub point: Point,
    /// Angular width of the slot, radians.
    pub width: f64,
}

/// One anchor per mask on the circle of radius [`RADIAL_RADIUS`], at the
/// midpoint of the mask's sign-constancy interval.
pub fn radial_anchors(variant: Variant, n: usize) -> BTreeMap<RegionMask, RadialAnchor> {
    let width = std::f64::consts::TAU / (1u64 << n) as f64;
    radial_slots(variant, n)
        .into_iter()
        .map(|(m, angle)| {
            (
                m,
                RadialAnchor {
                    angle,
                    radius: RADIAL_RADIUS,
                    point: Point::from_polar(RADIAL_RADIUS, angle),
                    width,
                },
            )
        })
        .collect()
}

/// The largest component of each mask; ties keep the first.
pub fn primary_components(components: &[RegionComponent]) -> BTreeMap<RegionMask, &RegionComponent> {
    let mut out: BTreeMap<RegionMask, &RegionComponent> = BTreeMap::new();
    for c in components {
        match out.get(&c.mask) {
            Some(prev) if prev.cell_count() >= c.cell_count() => {}
            _ => {
                out.insert(c.mask, c);
            }
        }
    }
    out
}

fn segment_entry(c: &RegionComponent, config: &LabelConfig) -> Result<LabelEntry> {
    let eroded = erode_to_fraction(c, config.erosion_fraction)?;
    let vc = visual_center(&eroded);
    let chord = longest_segment(&eroded, vc.point, config.directions)?;
    Ok(LabelEntry {
        anchor: chord.midpoint(),
        rotation_deg: chord.angle_deg,
        strategy: Strategy::Segment,
        max_chord: chord.length,
        clearance: vc.clearance,
        chord: Some((chord.p1, chord.p2)),
    })
}

fn radial_entry(a: &RadialAnchor, outer_radius: f64) -> LabelEntry {
    LabelEntry {
        anchor: a.point,
        rotation_deg: upright_degrees(a.angle.to_degrees()),
        strategy: Strategy::Radial,
        max_chord: (outer_radius - a.radius).max(0.0),
        clearance: 0.5 * a.radius * a.width,
        chord: None,
    }
}

/// Label plan for the primary component of every mask.
///
/// Regions with visual-center clearance of at least `min_clearance` get a
/// chord label inside the region. Others get a radial slot when `radial`
/// names the fan variant, and a horizontal label at the visual center
/// otherwise.
pub fn plan_labels(
    n: usize,
    components: &[RegionComponent],
    radial: Option<Variant>,
    config: &LabelConfig,
) -> Result<LabelPlan> {
    let primaries: Vec<(RegionMask, &RegionComponent)> =
        primary_components(components).into_iter().collect();
    let slots = radial.map(|v| radial_anchors(v, n));
    let outer_radius = crate::regions::DEFAULT_FRAME_RADIUS;
    let entries: Result<Vec<(RegionMask, LabelEntry)>> = primaries
        .par_iter()
        .map(|&(m, c)| {
            let vc = visual_center(c);
            let entry = if vc.clearance >= config.min_clearance {
                segment_entry(c, config)?
            } else if let Some(a) = slots.as_ref().and_then(|s| s.get(&m)) {
                radial_entry(a, outer_radius)
            } else {
                LabelEntry {
                    anchor: vc.point,
                    rotation_deg: 0.0,
                    strategy: Strategy::VisualCenter,
                    max_chord: 2.0 * vc.clearance,
                    clearance: vc.clearance,
                    chord: None,
                }
            };
            Ok((m, entry))
        })
        .collect();
    Ok(LabelPlan {
        n,
        entries: entries?.into_iter().collect(),
    })
}
