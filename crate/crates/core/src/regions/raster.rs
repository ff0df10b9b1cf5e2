use super::mask::RegionMask;
use crate::curves::CurveSpec;
use crate::error::{Error, Result};
use crate::geometry::Point;
use rayon::prelude::*;
use std::collections::BTreeSet;
use std::f64::consts::PI;

/// Smallest resolution accepted by [`rasterize`].
pub const MIN_RESOLUTION: usize = 256;
/// Half-width of the square raster of a fan diagram; covers the radius-2
/// bound with a margin.
pub const DEFAULT_EXTENT: f64 = 2.1;
/// Radius of the disk used as the area denominator of a fan diagram.
pub const DEFAULT_FRAME_RADIUS: f64 = 2.0;

/// Square cell grid over `[-extent, extent]²`. Row 0 is the bottom row
/// (`y = -extent`), column 0 the left column.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridGeometry {
    pub resolution: usize,
    pub extent: f64,
}

impl GridGeometry {
    pub fn new(resolution: usize, extent: f64) -> Self {
        Self { resolution, extent }
    }

    pub fn cell_size(&self) -> f64 {
        2.0 * self.extent / self.resolution as f64
    }

    pub fn cell_center(&self, row: usize, col: usize) -> Point {
        let h = self.cell_size();
        Point::new(
            -self.extent + (col as f64 + 0.5) * h,
            -self.extent + (row as f64 + 0.5) * h,
        )
    }

    /// Cell containing `p`, if inside the grid. Cells are half-open.
    pub fn cell_of(&self, p: Point) -> Option<(usize, usize)> {
        let h = self.cell_size();
        let c = ((p.x + self.extent) / h).floor();
        let r = ((p.y + self.extent) / h).floor();
        let res = self.resolution as f64;
        if c >= 0.0 && r >= 0.0 && c < res && r < res {
            Some((r as usize, c as usize))
        } else {
            None
        }
    }

    /// Continuous cell coordinates `(row, col)` of `p`; cell `(r, c)` spans
    /// `[r, r+1) × [c, c+1)`.
    pub fn to_cell_coords(&self, p: Point) -> (f64, f64) {
        let h = self.cell_size();
        ((p.y + self.extent) / h, (p.x + self.extent) / h)
    }

    pub fn from_cell_coords(&self, row: f64, col: f64) -> Point {
        let h = self.cell_size();
        Point::new(-self.extent + col * h, -self.extent + row * h)
    }
}

/// Where the masks of a grid came from.
#[derive(Debug, Clone, PartialEq)]
pub enum GridSource {
    Spec(CurveSpec),
    Curves,
    Synthetic,
}

/// One region mask per cell.
#[derive(Debug, Clone)]
pub struct RasterGrid {
    n: usize,
    geometry: GridGeometry,
    frame_radius: f64,
    cells: Vec<RegionMask>,
    source: GridSource,
}

impl RasterGrid {
    /// Builds a grid from explicit masks in row-major order (fixtures and
    /// external backends).
    pub fn from_masks(
        n: usize,
        geometry: GridGeometry,
        frame_radius: f64,
        cells: Vec<RegionMask>,
        source: GridSource,
    ) -> Result<Self> {
        let res = geometry.resolution;
        if cells.len() != res * res {
            return Err(Error::ContractViolation(format!(
                "expected {} cells, got {}",
                res * res,
                cells.len()
            )));
        }
        if n > 31 || cells.iter().any(|m| m.0 >> n != 0) {
            return Err(Error::ContractViolation(format!(
                "mask outside the {n}-set range"
            )));
        }
        Ok(Self {
            n,
            geometry,
            frame_radius,
            cells,
            source,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn geometry(&self) -> GridGeometry {
        self.geometry
    }

    pub fn resolution(&self) -> usize {
        self.geometry.resolution
    }

    pub fn frame_radius(&self) -> f64 {
        self.frame_radius
    }

    pub fn source(&self) -> &GridSource {
        &self.source
    }

    pub fn cells(&self) -> &[RegionMask] {
        &self.cells
    }

    pub fn get(&self, row: usize, col: usize) -> RegionMask {
        self.cells[row * self.geometry.resolution + col]
    }

    /// Cells whose centers lie in the frame disk; the normalized-area
    /// denominator.
    pub fn frame_cell_count(&self) -> usize {
        let res = self.geometry.resolution;
        let r2 = self.frame_radius * self.frame_radius;
        (0..res)
            .map(|row| {
                (0..res)
                    .filter(|&col| {
                        let p = self.geometry.cell_center(row, col);
                        p.dot(p) <= r2
                    })
                    .count()
            })
            .sum()
    }

    /// Set of masks that occupy at least one cell.
    pub fn census(&self) -> BTreeSet<RegionMask> {
        let mut seen = vec![false; 1 << self.n];
        for m in &self.cells {
            seen[m.0 as usize] = true;
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(m, _)| RegionMask(m as u32))
            .collect()
    }
}

/// Mask of a point under the radial rule: bit `i` is set iff
/// `|p| < 1 + f_i(θ(p))`. The origin lies in every set.
pub fn classify_point(spec: &CurveSpec, point: Point) -> RegionMask {
    let r = point.norm();
    if r == 0.0 {
        return RegionMask::all(spec.n());
    }
    let angle_ht = point.angle() / PI;
    let x_ht = spec.variant().abscissa_for_angle(angle_ht);
    let mut mask = RegionMask::EMPTY;
    for i in 0..spec.n() {
        if r < 1.0 + spec.eval_half_turns(i, x_ht) {
            mask = mask.with(i);
        }
    }
    mask
}

/// Classifies every cell center of a `resolution²` grid over
/// `[-2.1, 2.1]²`.
pub fn rasterize(spec: &CurveSpec, resolution: usize) -> Result<RasterGrid> {
    if resolution < MIN_RESOLUTION {
        return Err(Error::invalid(
            "resolution",
            format!("must be >= {MIN_RESOLUTION}, got {resolution}"),
        ));
    }
    let geometry = GridGeometry::new(resolution, DEFAULT_EXTENT);
    let mut cells = vec![RegionMask::EMPTY; resolution * resolution];
    cells
        .par_chunks_mut(resolution)
        .enumerate()
        .for_each(|(row, out)| {
            for (col, slot) in out.iter_mut().enumerate() {
                *slot = classify_point(spec, geometry.cell_center(row, col));
            }
        });
    RasterGrid::from_masks(
        spec.n(),
        geometry,
        DEFAULT_FRAME_RADIUS,
        cells,
        GridSource::Spec(spec.clone()),
    )
}

/// Mask of a strip point `(x, y)` (x in half-turns): bit `i` iff
/// `y < f_i(x)`.
pub fn classify_strip(spec: &CurveSpec, x_ht: f64, y: f64) -> RegionMask {
    let mut mask = RegionMask::EMPTY;
    for i in 0..spec.n() {
        if y < spec.eval_half_turns(i, x_ht) {
            mask = mask.with(i);
        }
    }
    mask
}

/// Masks found on a `resolution²` raster of the unprojected strip
/// (domain × `[-1, 1]`).
pub fn strip_census(spec: &CurveSpec, resolution: usize) -> BTreeSet<RegionMask> {
    let (t0, t1) = spec.variant().domain_half_turns();
    let n = spec.n();
    let rows: Vec<Vec<bool>> = (0..resolution)
        .into_par_iter()
        .map(|row| {
            let y = -1.0 + (row as f64 + 0.5) * 2.0 / resolution as f64;
            let mut seen = vec![false; 1 << n];
            for col in 0..resolution {
                let x = t0 + (col as f64 + 0.5) * (t1 - t0) / resolution as f64;
                seen[classify_strip(spec, x, y).0 as usize] = true;
            }
            seen
        })
        .collect();
    let mut out = BTreeSet::new();
    for seen in rows {
        for (m, s) in seen.into_iter().enumerate() {
            if s {
                out.insert(RegionMask(m as u32));
            }
        }
    }
    out
}
