use super::components::{extract_components, RegionComponent};
use super::mask::RegionMask;
use super::raster::{GridSource, RasterGrid};
use super::simplicity::{check_simplicity, SimplicityVerdict};
use crate::curves::{CurveSpec, SampledBoundary};
use crate::error::{Error, Result};
use crate::geometry::Point;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;
use std::collections::BTreeMap;

/// Verdict of the simplicity check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    NotSimple,
    /// Crossings could not be separated at the sampling density.
    Unknown,
}

impl Simplicity {
    pub fn as_bool(self) -> Option<bool> {
        match self {
            Simplicity::Simple => Some(true),
            Simplicity::NotSimple => Some(false),
            Simplicity::Unknown => None,
        }
    }
}

impl From<SimplicityVerdict> for Simplicity {
    fn from(v: SimplicityVerdict) -> Self {
        match v {
            SimplicityVerdict::Simple => Simplicity::Simple,
            SimplicityVerdict::NotSimple => Simplicity::NotSimple,
            SimplicityVerdict::Unknown => Simplicity::Unknown,
        }
    }
}

impl Serialize for Simplicity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.as_bool() {
            Some(b) => s.serialize_bool(b),
            None => s.serialize_str("unknown"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TinyRegion {
    pub mask: RegionMask,
    pub area: f64,
    pub cells: usize,
}

/// Verification verdicts and per-mask census of one diagram.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagramReport {
    pub n: usize,
    pub resolution: usize,
    pub tiny_threshold: f64,
    pub is_independent_family: bool,
    pub is_venn: bool,
    pub is_simple: Simplicity,
    /// Components at or above the tiny threshold, for every mask.
    pub components_per_mask: BTreeMap<RegionMask, usize>,
    /// Normalized area of every mask (all of its components).
    pub areas: BTreeMap<RegionMask, f64>,
    pub tiny_regions: Vec<TinyRegion>,
    /// Masks with a component reaching the raster edge.
    pub outer_masks: Vec<RegionMask>,
}

impl DiagramReport {
    pub fn empty_masks(&self) -> Vec<RegionMask> {
        self.areas
            .iter()
            .filter(|(_, &a)| a <= 0.0)
            .map(|(&m, _)| m)
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

impl Serialize for DiagramReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let key = |m: &RegionMask| m.to_bit_string(self.n);
        let per_mask: BTreeMap<String, usize> = self
            .components_per_mask
            .iter()
            .map(|(m, c)| (key(m), *c))
            .collect();
        let areas: BTreeMap<String, f64> =
            self.areas.iter().map(|(m, a)| (key(m), *a)).collect();
        #[derive(Serialize)]
        struct Tiny {
            mask: String,
            area: f64,
            cells: usize,
        }
        let tiny: Vec<Tiny> = self
            .tiny_regions
            .iter()
            .map(|t| Tiny {
                mask: key(&t.mask),
                area: t.area,
                cells: t.cells,
            })
            .collect();
        let outer: Vec<String> = self.outer_masks.iter().map(key).collect();

        let mut st = s.serialize_struct("DiagramReport", 10)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("resolution", &self.resolution)?;
        st.serialize_field("tinyThreshold", &self.tiny_threshold)?;
        st.serialize_field("isIndependentFamily", &self.is_independent_family)?;
        st.serialize_field("isVenn", &self.is_venn)?;
        st.serialize_field("isSimple", &self.is_simple)?;
        st.serialize_field("componentsPerMask", &per_mask)?;
        st.serialize_field("areas", &areas)?;
        st.serialize_field("tinyRegions", &tiny)?;
        st.serialize_field("outerMasks", &outer)?;
        st.end()
    }
}

/// Four cells of the grid's frame disk.
pub fn default_tiny_threshold(grid: &RasterGrid) -> f64 {
    4.0 / grid.frame_cell_count().max(1) as f64
}

/// Verifies a fan diagram from its raster and sampled boundaries.
pub fn verify(
    spec: &CurveSpec,
    grid: &RasterGrid,
    boundaries: &[SampledBoundary],
    tiny_threshold: f64,
) -> Result<DiagramReport> {
    match grid.source() {
        GridSource::Spec(s) if s == spec => {}
        _ => {
            return Err(Error::ContractViolation(
                "grid was not rasterized from this spec".into(),
            ))
        }
    }
    if boundaries.len() != spec.n() || boundaries.iter().enumerate().any(|(i, b)| b.index != i) {
        return Err(Error::ContractViolation(format!(
            "expected boundaries 0..{} in order",
            spec.n()
        )));
    }
    let components = extract_components(grid);
    let curves: Vec<Vec<Point>> = boundaries.iter().map(|b| b.projected.clone()).collect();
    Ok(assess(grid, &components, &curves, tiny_threshold))
}

/// Verifies a diagram given as closed polylines rasterized by any backend.
pub fn verify_curves(
    grid: &RasterGrid,
    curves: &[Vec<Point>],
    tiny_threshold: f64,
) -> Result<DiagramReport> {
    if curves.len() != grid.n() {
        return Err(Error::ContractViolation(format!(
            "{} curves for a {}-set grid",
            curves.len(),
            grid.n()
        )));
    }
    let components = extract_components(grid);
    Ok(assess(grid, &components, curves, tiny_threshold))
}

/// Builds the report from precomputed components.
pub fn assess(
    grid: &RasterGrid,
    components: &[RegionComponent],
    curves: &[Vec<Point>],
    tiny_threshold: f64,
) -> DiagramReport {
    let n = grid.n();
    let mut components_per_mask: BTreeMap<RegionMask, usize> =
        RegionMask::all_masks(n).map(|m| (m, 0)).collect();
    let mut areas: BTreeMap<RegionMask, f64> =
        RegionMask::all_masks(n).map(|m| (m, 0.0)).collect();
    let mut tiny_regions = Vec::new();
    let mut outer = std::collections::BTreeSet::new();
    for c in components {
        *areas.get_mut(&c.mask).expect("mask in range") += c.area;
        if c.touches_border {
            outer.insert(c.mask);
        }
        if c.area < tiny_threshold {
            tiny_regions.push(TinyRegion {
                mask: c.mask,
                area: c.area,
                cells: c.cell_count(),
            });
        } else {
            *components_per_mask.get_mut(&c.mask).expect("mask in range") += 1;
        }
    }
    let is_independent_family = areas.values().all(|&a| a > 0.0);
    let is_venn = is_independent_family && components_per_mask.values().all(|&c| c == 1);

    let tolerance = 2.0 * grid.geometry().cell_size();
    let detail = check_simplicity(curves, tolerance, grid.geometry().extent);

    DiagramReport {
        n,
        resolution: grid.resolution(),
        tiny_threshold,
        is_independent_family,
        is_venn,
        is_simple: detail.verdict.into(),
        components_per_mask,
        areas,
        tiny_regions,
        outer_masks: outer.into_iter().collect(),
    }
}
