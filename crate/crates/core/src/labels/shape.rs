//! Raster shape measures of a single region: centroid, visual center,
//! erosion and the longest chord through a point.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::regions::{CellSet, RegionComponent};
use serde::Serialize;

/// Mean of the cell centers. Not necessarily inside the region.
pub fn centroid(component: &RegionComponent) -> Point {
    let mut acc = Point::ORIGIN;
    let mut k = 0usize;
    for (r, c) in component.cells.iter() {
        acc = acc + component.cell_center(r, c);
        k += 1;
    }
    assert!(k > 0, "centroid of an empty component");
    acc * (1.0 / k as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VisualCenter {
    pub point: Point,
    pub cell: (usize, usize),
    /// Distance from the cell center to the nearest cell center outside the
    /// region, in world units.
    pub clearance: f64,
}

/// The set's bounding box grown by one cell on each side, as a row-major
/// membership bitmap. Returns `(row0, col0, rows, cols, bits)` where
/// `row0`/`col0` may be -1.
fn padded(cells: &CellSet) -> (isize, isize, usize, usize, Vec<bool>) {
    let (r0, c0, rows, cols) = cells.bounds();
    let (pr0, pc0) = (r0 as isize - 1, c0 as isize - 1);
    let (prows, pcols) = (rows + 2, cols + 2);
    let mut bits = vec![false; prows * pcols];
    for (r, c) in cells.iter() {
        let rr = (r as isize - pr0) as usize;
        let cc = (c as isize - pc0) as usize;
        bits[rr * pcols + cc] = true;
    }
    (pr0, pc0, prows, pcols, bits)
}

/// 1-D squared distance transform of `f` (lower envelope of parabolas).
/// Infinite entries are not sites.
fn edt_1d(f: &[f64], out: &mut [f64], v: &mut Vec<usize>, z: &mut Vec<f64>) {
    v.clear();
    z.clear();
    for q in 0..f.len() {
        if f[q].is_infinite() {
            continue;
        }
        let mut s = f64::NEG_INFINITY;
        while let Some(&p) = v.last() {
            s = ((f[q] + (q * q) as f64) - (f[p] + (p * p) as f64)) / (2.0 * (q - p) as f64);
            if s <= *z.last().expect("paired with v") {
                v.pop();
                z.pop();
                s = f64::NEG_INFINITY;
            } else {
                break;
            }
        }
        v.push(q);
        z.push(s);
    }
    let mut k = 0;
    for (q, slot) in out.iter_mut().enumerate() {
        if v.is_empty() {
            *slot = f64::INFINITY;
            continue;
        }
        while k + 1 < v.len() && z[k + 1] < q as f64 {
            k += 1;
        }
        let d = q as f64 - v[k] as f64;
        *slot = d * d + f[v[k]];
    }
}

/// Exact squared Euclidean distance (in cells) from every cell of a bitmap
/// to the nearest unset cell.
pub(crate) fn squared_edt(rows: usize, cols: usize, bits: &[bool]) -> Vec<f64> {
    let mut d = vec![0.0; rows * cols];
    let mut v = Vec::new();
    let mut z = Vec::new();
    // Columns: distance along the column to the nearest unset cell.
    let mut f = vec![0.0; rows];
    let mut out = vec![0.0; rows];
    for c in 0..cols {
        for r in 0..rows {
            f[r] = if bits[r * cols + c] { f64::INFINITY } else { 0.0 };
        }
        edt_1d(&f, &mut out, &mut v, &mut z);
        for r in 0..rows {
            d[r * cols + c] = out[r];
        }
    }
    let mut out = vec![0.0; cols];
    for r in 0..rows {
        let row = &d[r * cols..(r + 1) * cols].to_vec();
        edt_1d(row, &mut out, &mut v, &mut z);
        d[r * cols..(r + 1) * cols].copy_from_slice(&out);
    }
    d
}

/// Center of the largest inscribed disk, to cell precision. Ties go to the
/// lowest `(row, col)`.
pub fn visual_center(component: &RegionComponent) -> VisualCenter {
    assert!(!component.cells.is_empty(), "visual center of an empty component");
    let (pr0, pc0, rows, cols, bits) = padded(&component.cells);
    let d = squared_edt(rows, cols, &bits);
    let mut best = (f64::NEG_INFINITY, 0usize);
    for (k, &dk) in d.iter().enumerate() {
        if bits[k] && dk > best.0 {
            best = (dk, k);
        }
    }
    let row = (pr0 + (best.1 / cols) as isize) as usize;
    let col = (pc0 + (best.1 % cols) as isize) as usize;
    VisualCenter {
        point: component.cell_center(row, col),
        cell: (row, col),
        clearance: best.0.sqrt() * component.geometry.cell_size(),
    }
}

/// City-block distance (in cells) to the nearest unset cell; two-pass chamfer.
fn l1_distance(rows: usize, cols: usize, bits: &[bool]) -> Vec<u32> {
    let big = (rows + cols) as u32;
    let mut d: Vec<u32> = bits.iter().map(|&b| if b { big } else { 0 }).collect();
    for r in 0..rows {
        for c in 0..cols {
            let k = r * cols + c;
            if r > 0 {
                d[k] = d[k].min(d[k - cols] + 1);
            }
            if c > 0 {
                d[k] = d[k].min(d[k - 1] + 1);
            }
        }
    }
    for r in (0..rows).rev() {
        for c in (0..cols).rev() {
            let k = r * cols + c;
            if r + 1 < rows {
                d[k] = d[k].min(d[k + cols] + 1);
            }
            if c + 1 < cols {
                d[k] = d[k].min(d[k + 1] + 1);
            }
        }
    }
    d
}

/// Repeated 4-neighborhood erosion until at most `fraction` of the cells
/// remain, stopping one step early if the next step would empty the set.
pub fn erode_to_fraction(component: &RegionComponent, fraction: f64) -> Result<RegionComponent> {
    if !(fraction > 0.0 && fraction <= 1.0) {
        return Err(Error::invalid(
            "fraction",
            format!("must be in (0, 1], got {fraction}"),
        ));
    }
    let original = component.cells.len();
    if original == 0 || original as f64 <= fraction * original as f64 {
        return Ok(component.clone());
    }
    let (pr0, pc0, rows, cols, bits) = padded(&component.cells);
    let d = l1_distance(rows, cols, &bits);
    // After k steps exactly the cells with d > k remain.
    let max_d = d.iter().copied().max().unwrap_or(0) as usize;
    let mut hist = vec![0usize; max_d + 1];
    for (&v, &b) in d.iter().zip(&bits) {
        if b {
            hist[v as usize] += 1;
        }
    }
    let target = fraction * original as f64;
    let mut remaining = original;
    let mut steps = 0;
    while remaining as f64 > target {
        let next = remaining - hist[steps + 1];
        if next == 0 {
            break;
        }
        remaining = next;
        steps += 1;
    }
    if steps == 0 {
        return Ok(component.clone());
    }
    let keep: Vec<(usize, usize)> = d
        .iter()
        .enumerate()
        .filter(|(_, &v)| v as usize > steps)
        .map(|(k, _)| {
            (
                (pr0 + (k / cols) as isize) as usize,
                (pc0 + (k % cols) as isize) as usize,
            )
        })
        .collect();
    Ok(component.with_cells(CellSet::from_cells(keep)))
}

/// A chord of a region through a given point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Chord {
    pub p1: Point,
    pub p2: Point,
    pub length: f64,
    /// Direction of `p2 - p1` in degrees, folded into (-90, 90].
    pub angle_deg: f64,
}

impl Chord {
    pub fn midpoint(&self) -> Point {
        self.p1.lerp(self.p2, 0.5)
    }
}

/// Distance (in cells) from `start` along unit direction `dir` to the
/// boundary of the connected run of set cells containing `start`.
/// Coordinates are `(x = col, y = row)` in cell units.
fn ray_exit(cells: &CellSet, start: (f64, f64), dir: (f64, f64)) -> f64 {
    let (mut cx, mut cy) = (start.0.floor() as isize, start.1.floor() as isize);
    let step_x: isize = if dir.0 > 0.0 { 1 } else { -1 };
    let step_y: isize = if dir.1 > 0.0 { 1 } else { -1 };
    let next_boundary = |p: f64, c: isize, s: isize| if s > 0 { (c + 1) as f64 - p } else { p - c as f64 };
    let mut t_max_x = if dir.0 == 0.0 {
        f64::INFINITY
    } else {
        next_boundary(start.0, cx, step_x) / dir.0.abs()
    };
    let mut t_max_y = if dir.1 == 0.0 {
        f64::INFINITY
    } else {
        next_boundary(start.1, cy, step_y) / dir.1.abs()
    };
    let dt_x = if dir.0 == 0.0 { f64::INFINITY } else { 1.0 / dir.0.abs() };
    let dt_y = if dir.1 == 0.0 { f64::INFINITY } else { 1.0 / dir.1.abs() };
    loop {
        let inside = |x: isize, y: isize| cells.contains(y, x);
        if t_max_x < t_max_y {
            if !inside(cx + step_x, cy) {
                return t_max_x;
            }
            cx += step_x;
            t_max_x += dt_x;
        } else if t_max_y < t_max_x {
            if !inside(cx, cy + step_y) {
                return t_max_y;
            }
            cy += step_y;
            t_max_y += dt_y;
        } else {
            // Exact corner: all three cells ahead must be present.
            if !(inside(cx + step_x, cy) && inside(cx, cy + step_y) && inside(cx + step_x, cy + step_y)) {
                return t_max_x;
            }
            cx += step_x;
            cy += step_y;
            t_max_x += dt_x;
            t_max_y += dt_y;
        }
    }
}

/// Folds a direction angle (degrees) into (-90, 90].
pub fn upright_degrees(deg: f64) -> f64 {
    let mut a = deg.rem_euclid(180.0);
    if a > 90.0 {
        a -= 180.0;
    }
    a
}

/// Longest chord through `anchor` among `directions` evenly spaced angles
/// in [0, π). Endpoints are pulled in by a hair so they stay inside.
/// Equal lengths keep the smaller angle.
pub fn longest_segment(
    component: &RegionComponent,
    anchor: Point,
    directions: usize,
) -> Result<Chord> {
    if directions < 8 {
        return Err(Error::invalid(
            "directions",
            format!("must be >= 8, got {directions}"),
        ));
    }
    if !component.contains_point(anchor) {
        return Err(Error::ContractViolation(format!(
            "anchor ({}, {}) is outside the region",
            anchor.x, anchor.y
        )));
    }
    let g = component.geometry;
    let h = g.cell_size();
    let (row, col) = g.to_cell_coords(anchor);
    let mut best: Option<(f64, f64, f64, f64)> = None; // (length, angle, t_minus, t_plus)
    for k in 0..directions {
        let a = k as f64 * std::f64::consts::PI / directions as f64;
        let (dx, dy) = (a.cos(), a.sin());
        let shrink = |t: f64| (t * (1.0 - 1e-9) - 1e-9).max(0.0);
        let tp = shrink(ray_exit(&component.cells, (col, row), (dx, dy)));
        let tm = shrink(ray_exit(&component.cells, (col, row), (-dx, -dy)));
        let len = tp + tm;
        if best.is_none_or(|b| len > b.0) {
            best = Some((len, a, tm, tp));
        }
    }
    let (len, a, tm, tp) = best.expect("directions >= 8");
    let d = Point::new(a.cos(), a.sin());
    Ok(Chord {
        p1: anchor - d * (tm * h),
        p2: anchor + d * (tp * h),
        length: len * h,
        angle_deg: upright_degrees(a.to_degrees()),
    })
}
