//! Even-odd (ray casting) containment for arbitrary closed polylines.
//!
//! Edge convention: an edge `a → b` crosses the horizontal line through `p`
//! iff `(a.y > p.y) != (b.y > p.y)` (half-open in y), and the crossing counts
//! iff it lies strictly to the right of `p`. A point exactly on a left or
//! bottom edge is therefore inside, one on a right or top edge outside. The
//! scanline rasterizer below uses the identical predicate, so both agree cell
//! for cell.

use super::mask::RegionMask;
use super::raster::{GridGeometry, GridSource, RasterGrid};
use crate::error::Result;
use crate::geometry::Point;
use rayon::prelude::*;

#[inline]
fn crossing_x(a: Point, b: Point, y: f64) -> f64 {
    a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y)
}

fn inside(curve: &[Point], p: Point) -> bool {
    let mut odd = false;
    for w in curve.windows(2) {
        let (a, b) = (w[0], w[1]);
        if (a.y > p.y) != (b.y > p.y) && p.x < crossing_x(a, b, p.y) {
            odd = !odd;
        }
    }
    odd
}

/// Bit `i` is set iff `point` is inside closed polyline `curves[i]` by
/// even-odd parity. Each polyline must repeat its first point at the end.
pub fn classify_by_even_odd(curves: &[Vec<Point>], point: Point) -> RegionMask {
    let mut mask = RegionMask::EMPTY;
    for (i, c) in curves.iter().enumerate() {
        if inside(c, point) {
            mask = mask.with(i);
        }
    }
    mask
}

/// Scanline rasterization of the even-odd masks of `curves` on a square grid.
pub fn rasterize_even_odd(
    curves: &[Vec<Point>],
    geometry: GridGeometry,
    frame_radius: f64,
) -> Result<RasterGrid> {
    let res = geometry.resolution;
    let h = geometry.cell_size();
    let row_y = |row: usize| -geometry.extent + (row as f64 + 0.5) * h;

    // Per curve, the edges bucketed by the rows whose center line they cross.
    let mut buckets: Vec<Vec<Vec<(Point, Point)>>> = Vec::with_capacity(curves.len());
    for c in curves {
        let mut rows: Vec<Vec<(Point, Point)>> = vec![Vec::new(); res];
        for w in c.windows(2) {
            let (a, b) = (w[0], w[1]);
            let (lo, hi) = if a.y < b.y { (a.y, b.y) } else { (b.y, a.y) };
            // Rows with lo <= y_row < hi are candidates; the exact test is
            // repeated per row.
            let first = (((lo + geometry.extent) / h) - 0.5).floor().max(0.0);
            let last = (((hi + geometry.extent) / h) - 0.5).ceil().min(res as f64 - 1.0);
            if !(first.is_finite() && last.is_finite()) || last < 0.0 || first > res as f64 - 1.0 {
                continue;
            }
            for row in first as usize..=last as usize {
                rows[row].push((a, b));
            }
        }
        buckets.push(rows);
    }

    let mut cells = vec![RegionMask::EMPTY; res * res];
    cells.par_chunks_mut(res).enumerate().for_each(|(row, out)| {
        let y = row_y(row);
        let mut xs: Vec<f64> = Vec::new();
        for (i, rows) in buckets.iter().enumerate() {
            xs.clear();
            for &(a, b) in &rows[row] {
                if (a.y > y) != (b.y > y) {
                    xs.push(crossing_x(a, b, y));
                }
            }
            if xs.is_empty() {
                continue;
            }
            xs.sort_by(|u, v| u.total_cmp(v));
            // Inside iff an odd number of crossings lies strictly right of x.
            let mut k = 0;
            for (col, slot) in out.iter_mut().enumerate() {
                let x = -geometry.extent + (col as f64 + 0.5) * h;
                while k < xs.len() && xs[k] <= x {
                    k += 1;
                }
                if (xs.len() - k) % 2 == 1 {
                    *slot = slot.with(i);
                }
            }
        }
    });
    RasterGrid::from_masks(curves.len(), geometry, frame_radius, cells, GridSource::Curves)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle(center: Point, r: f64, k: usize) -> Vec<Point> {
        let mut v: Vec<Point> = (0..k)
            .map(|j| center + Point::from_polar(r, j as f64 * std::f64::consts::TAU / k as f64))
            .collect();
        v.push(v[0]);
        v
    }

    fn square(x0: f64, y0: f64, s: f64) -> Vec<Point> {
        vec![
            Point::new(x0, y0),
            Point::new(x0 + s, y0),
            Point::new(x0 + s, y0 + s),
            Point::new(x0, y0 + s),
            Point::new(x0, y0),
        ]
    }

    #[test]
    fn unit_circle_containment() {
        let c = vec![circle(Point::ORIGIN, 1.0, 256)];
        assert_eq!(classify_by_even_odd(&c, Point::ORIGIN), RegionMask(1));
        assert_eq!(classify_by_even_odd(&c, Point::new(3.0, 0.0)), RegionMask::EMPTY);
    }

    #[test]
    fn disjoint_squares() {
        let c = vec![square(0.0, 0.0, 1.0), square(2.0, 0.0, 1.0)];
        assert_eq!(classify_by_even_odd(&c, Point::new(0.5, 0.5)), RegionMask(0b01));
        assert_eq!(classify_by_even_odd(&c, Point::new(2.5, 0.5)), RegionMask(0b10));
    }

    #[test]
    fn edge_points_follow_half_open_rule() {
        let c = vec![square(0.0, 0.0, 1.0)];
        // left and bottom edges inside, right and top outside
        assert_eq!(classify_by_even_odd(&c, Point::new(0.0, 0.5)), RegionMask(1));
        assert_eq!(classify_by_even_odd(&c, Point::new(0.5, 0.0)), RegionMask(1));
        assert_eq!(classify_by_even_odd(&c, Point::new(1.0, 0.5)), RegionMask::EMPTY);
        assert_eq!(classify_by_even_odd(&c, Point::new(0.5, 1.0)), RegionMask::EMPTY);
    }

    #[test]
    fn scanline_matches_point_queries() {
        let curves = vec![
            circle(Point::new(0.2, -0.1), 1.1, 97),
            circle(Point::new(-0.3, 0.4), 0.7, 13),
            square(-1.0, -1.0, 1.3),
        ];
        let g = GridGeometry::new(120, 2.1);
        let grid = rasterize_even_odd(&curves, g, 2.0).unwrap();
        for row in 0..120 {
            for col in 0..120 {
                let p = g.cell_center(row, col);
                assert_eq!(grid.get(row, col), classify_by_even_odd(&curves, p), "{row},{col}");
            }
        }
    }
}
