//! End-to-end pipelines: spec or cogwheel → raster → components → report.

use crate::curves::{sample_all, CurveSpec, SampledBoundary, DEFAULT_SAMPLES_PER_FLIP};
use crate::edwards::{
    build_cogwheel, rasterize_projection, stereographic_project, CogwheelDiagram,
    StereoProjection, StereoVariant, DEFAULT_SAMPLES_PER_RADIAN,
};
use crate::error::Result;
use crate::geometry::Point;
use crate::labels::{plan_labels, LabelConfig, LabelPlan};
use crate::regions::{
    assess, default_tiny_threshold, extract_components, rasterize, DiagramReport, RasterGrid,
    RegionComponent,
};

/// A rasterized and verified fan diagram.
#[derive(Debug, Clone)]
pub struct FanDiagram {
    pub spec: CurveSpec,
    pub boundaries: Vec<SampledBoundary>,
    pub grid: RasterGrid,
    pub components: Vec<RegionComponent>,
    pub report: DiagramReport,
}

impl FanDiagram {
    pub fn build(spec: &CurveSpec, resolution: usize) -> Result<Self> {
        let boundaries = sample_all(spec, DEFAULT_SAMPLES_PER_FLIP)?;
        let grid = rasterize(spec, resolution)?;
        let components = extract_components(&grid);
        let curves: Vec<Vec<Point>> = boundaries.iter().map(|b| b.projected.clone()).collect();
        let report = assess(&grid, &components, &curves, default_tiny_threshold(&grid));
        Ok(Self {
            spec: spec.clone(),
            boundaries,
            grid,
            components,
            report,
        })
    }

    pub fn curves(&self) -> Vec<Vec<Point>> {
        self.boundaries.iter().map(|b| b.projected.clone()).collect()
    }

    pub fn plan(&self, config: &LabelConfig) -> Result<LabelPlan> {
        plan_labels(self.spec.n(), &self.components, Some(self.spec.variant()), config)
    }
}

/// A stereographically projected cogwheel diagram, rasterized by even-odd
/// containment and verified.
#[derive(Debug, Clone)]
pub struct CogwheelPlanar {
    pub diagram: CogwheelDiagram,
    pub projection: StereoProjection,
    pub grid: RasterGrid,
    pub components: Vec<RegionComponent>,
    pub report: DiagramReport,
}

impl CogwheelPlanar {
    pub fn build(
        n: usize,
        sides: &[usize],
        variant: StereoVariant,
        resolution: usize,
    ) -> Result<Self> {
        let diagram = build_cogwheel(n, sides)?;
        let projection = stereographic_project(&diagram, variant, DEFAULT_SAMPLES_PER_RADIAN)?;
        let grid = rasterize_projection(&projection.curves, resolution)?;
        let components = extract_components(&grid);
        let report = assess(
            &grid,
            &components,
            &projection.curves,
            default_tiny_threshold(&grid),
        );
        Ok(Self {
            diagram,
            projection,
            grid,
            components,
            report,
        })
    }

    /// Half-width of the raster window.
    pub fn extent(&self) -> f64 {
        self.grid.geometry().extent
    }

    pub fn plan(&self, config: &LabelConfig) -> Result<LabelPlan> {
        plan_labels(self.diagram.n, &self.components, None, config)
    }
}
