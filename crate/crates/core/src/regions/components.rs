use super::contour::trace_outlines;
use super::mask::RegionMask;
use super::raster::{GridGeometry, RasterGrid};
use crate::geometry::Point;
use rayon::prelude::*;


/// A set of grid cells stored as a bitmap over its bounding box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellSet {
    row0: usize,
    col0: usize,
    rows: usize,
    cols: usize,
    bits: Vec<bool>,
    count: usize,
}

impl CellSet {
    pub fn from_cells<I: IntoIterator<Item = (usize, usize)>>(cells: I) -> Self {
        let cells: Vec<(usize, usize)> = cells.into_iter().collect();
        if cells.is_empty() {
            return Self::empty();
        }
        let row0 = cells.iter().map(|c| c.0).min().unwrap();
        let col0 = cells.iter().map(|c| c.1).min().unwrap();
        let row1 = cells.iter().map(|c| c.0).max().unwrap();
        let col1 = cells.iter().map(|c| c.1).max().unwrap();
        let rows = row1 - row0 + 1;
        let cols = col1 - col0 + 1;
        let mut bits = vec![false; rows * cols];
        let mut count = 0;
        for (r, c) in cells {
            let slot = &mut bits[(r - row0) * cols + (c - col0)];
            if !*slot {
                *slot = true;
                count += 1;
            }
        }
        Self {
            row0,
            col0,
            rows,
            cols,
            bits,
            count,
        }
    }

    pub fn empty() -> Self {
        Self {
            row0: 0,
            col0: 0,
            rows: 0,
            cols: 0,
            bits: Vec::new(),
            count: 0,
        }
    }

    /// Builds a set from a bitmap whose top-left cell is `(row0, col0)`.
    pub fn from_bitmap(row0: usize, col0: usize, rows: usize, cols: usize, bits: Vec<bool>) -> Self {
        assert_eq!(bits.len(), rows * cols);
        let cells: Vec<(usize, usize)> = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(k, _)| (row0 + k / cols, col0 + k % cols))
            .collect();
        Self::from_cells(cells)
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    /// `(row0, col0, rows, cols)` of the bounding box.
    pub fn bounds(&self) -> (usize, usize, usize, usize) {
        (self.row0, self.col0, self.rows, self.cols)
    }

    pub fn contains(&self, row: isize, col: isize) -> bool {
        let r = row - self.row0 as isize;
        let c = col - self.col0 as isize;
        if r < 0 || c < 0 || r >= self.rows as isize || c >= self.cols as isize {
            return false;
        }
        self.bits[r as usize * self.cols + c as usize]
    }

    /// Cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (self.row0 + k / self.cols, self.col0 + k % self.cols))
    }

    pub fn is_subset_of(&self, other: &CellSet) -> bool {
        self.iter()
            .all(|(r, c)| other.contains(r as isize, c as isize))
    }

    /// Number of 4-connected pieces.
    pub fn piece_count(&self) -> usize {
        let mut seen = vec![false; self.bits.len()];
        let mut pieces = 0;
        let mut stack = Vec::new();
        for start in 0..self.bits.len() {
            if !self.bits[start] || seen[start] {
                continue;
            }
            pieces += 1;
            seen[start] = true;
            stack.push(start);
            while let Some(k) = stack.pop() {
                let (r, c) = (k / self.cols, k % self.cols);
                let mut visit = |nr: usize, nc: usize| {
                    let nk = nr * self.cols + nc;
                    if self.bits[nk] && !seen[nk] {
                        seen[nk] = true;
                        stack.push(nk);
                    }
                };
                if r > 0 {
                    visit(r - 1, c);
                }
                if r + 1 < self.rows {
                    visit(r + 1, c);
                }
                if c > 0 {
                    visit(r, c - 1);
                }
                if c + 1 < self.cols {
                    visit(r, c + 1);
                }
            }
        }
        pieces
    }
}

/// One connected component of a mask.
#[derive(Debug, Clone)]
pub struct RegionComponent {
    pub mask: RegionMask,
    pub cells: CellSet,
    /// Fraction of the frame-disk cell count.
    pub area: f64,
    /// Outer boundary, counter-clockwise, world coordinates, closed.
    pub outline: Vec<Point>,
    /// Inner boundaries (clockwise), if the component has holes.
    pub holes: Vec<Vec<Point>>,
    /// The component reaches the edge of the raster.
    pub touches_border: bool,
    pub geometry: GridGeometry,
    /// Normalization denominator used for `area`.
    pub frame_cells: usize,
}

impl RegionComponent {
    pub fn from_cells(
        mask: RegionMask,
        cells: CellSet,
        geometry: GridGeometry,
        frame_cells: usize,
    ) -> Self {
        let (outline, holes) = outlines_in_world(&cells, geometry);
        let res = geometry.resolution;
        let (r0, c0, rows, cols) = cells.bounds();
        let touches_border = !cells.is_empty()
            && (r0 == 0 || c0 == 0 || r0 + rows == res || c0 + cols == res);
        let area = cells.len() as f64 / frame_cells.max(1) as f64;
        Self {
            mask,
            cells,
            area,
            outline,
            holes,
            touches_border,
            geometry,
            frame_cells,
        }
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cell_center(&self, row: usize, col: usize) -> Point {
        self.geometry.cell_center(row, col)
    }

    /// Whether the world point falls in one of the component's cells.
    pub fn contains_point(&self, p: Point) -> bool {
        match self.geometry.cell_of(p) {
            Some((r, c)) => self.cells.contains(r as isize, c as isize),
            None => false,
        }
    }

    /// Same component restricted to a subset of its cells; the outline and
    /// area are recomputed.
    pub fn with_cells(&self, cells: CellSet) -> Self {
        Self::from_cells(self.mask, cells, self.geometry, self.frame_cells)
    }
}


fn outlines_in_world(cells: &CellSet, geometry: GridGeometry) -> (Vec<Point>, Vec<Vec<Point>>) {
    let mut loops = trace_outlines(cells);
    if loops.is_empty() {
        return (Vec::new(), Vec::new());
    }
    let to_world = |ring: Vec<(f64, f64)>| -> Vec<Point> {
        ring.into_iter()
            .map(|(r, c)| geometry.from_cell_coords(r, c))
            .collect()
    };
    // trace_outlines puts the outer ring first.
    let outer = to_world(loops.remove(0));
    let holes = loops.into_iter().map(to_world).collect();
    (outer, holes)
}

/// 4-connected component labeling of every mask in the grid.
///
/// Components come out in row-major order of their first cell; areas are
/// normalized by the number of cells inside the grid's frame disk.
pub fn extract_components(grid: &RasterGrid) -> Vec<RegionComponent> {
    let res = grid.resolution();
    let cells = grid.cells();
    let mut label = vec![u32::MAX; res * res];
    let mut members: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut masks = Vec::new();
    let mut stack = Vec::new();

    for start in 0..res * res {
        if label[start] != u32::MAX {
            continue;
        }
        let id = members.len() as u32;
        let mask = cells[start];
        let mut list = Vec::new();
        label[start] = id;
        stack.push(start);
        while let Some(k) = stack.pop() {
            let (r, c) = (k / res, k % res);
            list.push((r, c));
            let mut visit = |nk: usize| {
                if label[nk] == u32::MAX && cells[nk] == mask {
                    label[nk] = id;
                    stack.push(nk);
                }
            };
            if r > 0 {
                visit(k - res);
            }
            if r + 1 < res {
                visit(k + res);
            }
            if c > 0 {
                visit(k - 1);
            }
            if c + 1 < res {
                visit(k + 1);
            }
        }
        members.push(list);
        masks.push(mask);
    }

    let frame_cells = grid.frame_cell_count();
    let geometry = grid.geometry();
    members
        .into_par_iter()
        .zip(masks)
        .map(|(list, mask)| {
            RegionComponent::from_cells(mask, CellSet::from_cells(list), geometry, frame_cells)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regions::raster::{GridSource, RasterGrid};
    use crate::regions::{rasterize_even_odd, GridGeometry};

    #[test]
    fn unit_circle_has_inside_and_outside() {
        let mut c: Vec<Point> = (0..400)
            .map(|j| Point::from_polar(1.0, j as f64 * std::f64::consts::TAU / 400.0))
            .collect();
        c.push(c[0]);
        let grid = rasterize_even_odd(&[c], GridGeometry::new(256, 2.1), 2.0).unwrap();
        let comps = extract_components(&grid);
        assert_eq!(comps.len(), 2);
        let inside = comps.iter().find(|c| c.mask == RegionMask(1)).unwrap();
        assert!((inside.area - 0.25).abs() < 0.01, "{}", inside.area);
        assert!(!inside.touches_border);
        assert!(comps.iter().any(|c| c.mask == RegionMask(0) && c.touches_border));
    }

    #[test]
    fn checkerboard_components() {
        // 8x8 squares of 32 cells each on a 256 grid.
        let res = 256;
        let cells: Vec<RegionMask> = (0..res * res)
            .map(|k| {
                let (r, c) = (k / res / 32, k % res / 32);
                RegionMask(((r + c) % 2) as u32)
            })
            .collect();
        let grid = RasterGrid::from_masks(
            1,
            GridGeometry::new(res, 2.1),
            2.0,
            cells,
            GridSource::Synthetic,
        )
        .unwrap();
        let comps = extract_components(&grid);
        assert_eq!(comps.len(), 64);
        assert!(comps.iter().all(|c| c.cell_count() == 32 * 32));
    }

    #[test]
    fn cellset_membership_and_pieces() {
        let s = CellSet::from_cells([(3, 3), (3, 4), (5, 5)]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(3, 4));
        assert!(!s.contains(4, 4));
        assert!(!s.contains(-1, 0));
        assert_eq!(s.piece_count(), 2);
        assert_eq!(s.bounds(), (3, 3, 3, 3));
    }
}
