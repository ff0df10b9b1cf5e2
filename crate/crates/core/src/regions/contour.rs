//! Marching-squares outlines of a cell set.
//!
//! The lattice is formed by cell centers; contour vertices sit on midpoints
//! between neighboring centers. Saddles keep diagonal cells apart, matching
//! the 4-connectivity used for labeling.

use super::components::CellSet;
use std::collections::HashMap;

// Edge midpoints of the lattice square whose bottom-left corner is the
// center (r, c), in doubled center-index coordinates (2x, 2y).
const BOTTOM: (i64, i64) = (1, 0);
const RIGHT: (i64, i64) = (2, 1);
const TOP: (i64, i64) = (1, 2);
const LEFT: (i64, i64) = (0, 1);

// Oriented segments (inside on the left) per corner case; bit 1 = bottom-left,
// 2 = bottom-right, 4 = top-right, 8 = top-left.
fn segments(case: u8) -> &'static [((i64, i64), (i64, i64))] {
    match case {
        1 => &[(BOTTOM, LEFT)],
        2 => &[(RIGHT, BOTTOM)],
        3 => &[(RIGHT, LEFT)],
        4 => &[(TOP, RIGHT)],
        5 => &[(BOTTOM, LEFT), (TOP, RIGHT)],
        6 => &[(TOP, BOTTOM)],
        7 => &[(TOP, LEFT)],
        8 => &[(LEFT, TOP)],
        9 => &[(BOTTOM, TOP)],
        10 => &[(RIGHT, BOTTOM), (LEFT, TOP)],
        11 => &[(RIGHT, TOP)],
        12 => &[(LEFT, RIGHT)],
        13 => &[(BOTTOM, RIGHT)],
        14 => &[(LEFT, BOTTOM)],
        _ => &[],
    }
}

/// Closed outlines of `cells` as `(row, col)` pairs in continuous cell
/// coordinates (cell `(r, c)` spans `[r, r+1) × [c, c+1)`).
///
/// The outer ring (counter-clockwise in the col/row plane) comes first,
/// followed by hole rings (clockwise). Each ring repeats its first vertex and
/// has collinear vertices removed.
pub fn trace_outlines(cells: &CellSet) -> Vec<Vec<(f64, f64)>> {
    if cells.is_empty() {
        return Vec::new();
    }
    let (row0, col0, rows, cols) = cells.bounds();
    let (row0, col0) = (row0 as isize, col0 as isize);
    let inside = |r: isize, c: isize| cells.contains(r, c);

    let mut next: HashMap<(i64, i64), (i64, i64)> = HashMap::new();
    for r in row0 - 1..row0 + rows as isize {
        for c in col0 - 1..col0 + cols as isize {
            let case = inside(r, c) as u8
                | (inside(r, c + 1) as u8) << 1
                | (inside(r + 1, c + 1) as u8) << 2
                | (inside(r + 1, c) as u8) << 3;
            for &(a, b) in segments(case) {
                let base = (2 * c as i64, 2 * r as i64);
                let from = (base.0 + a.0, base.1 + a.1);
                let to = (base.0 + b.0, base.1 + b.1);
                next.insert(from, to);
            }
        }
    }

    // Walk loops from the smallest unvisited key for a deterministic result.
    let mut keys: Vec<(i64, i64)> = next.keys().copied().collect();
    keys.sort_unstable_by_key(|&(x, y)| (y, x));
    let mut visited: HashMap<(i64, i64), bool> = HashMap::with_capacity(keys.len());
    let mut rings: Vec<(f64, Vec<(f64, f64)>)> = Vec::new();
    for start in keys {
        if visited.contains_key(&start) {
            continue;
        }
        let mut ring = vec![start];
        visited.insert(start, true);
        let mut cur = next[&start];
        while cur != start {
            visited.insert(cur, true);
            ring.push(cur);
            cur = next[&cur];
        }
        let ring = drop_collinear(ring);
        let area2: i64 = (0..ring.len())
            .map(|k| {
                let a = ring[k];
                let b = ring[(k + 1) % ring.len()];
                a.0 * b.1 - a.1 * b.0
            })
            .sum();
        // doubled center-index (2x, 2y) -> cell coords (row, col) = (y/2 + 0.5, x/2 + 0.5)
        let mut pts: Vec<(f64, f64)> = ring
            .iter()
            .map(|&(x2, y2)| (y2 as f64 * 0.5 + 0.5, x2 as f64 * 0.5 + 0.5))
            .collect();
        pts.push(pts[0]);
        rings.push((area2 as f64 / 8.0, pts));
    }
    // Outer ring: the counter-clockwise ring of largest area.
    let outer = rings
        .iter()
        .enumerate()
        .filter(|(_, (a, _))| *a > 0.0)
        .max_by(|x, y| x.1 .0.total_cmp(&y.1 .0))
        .map(|(k, _)| k)
        .unwrap_or(0);
    let first = rings.remove(outer).1;
    let mut out = vec![first];
    out.extend(rings.into_iter().map(|(_, r)| r));
    out
}

fn drop_collinear(ring: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    let n = ring.len();
    if n < 4 {
        return ring;
    }
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        let prev = ring[(k + n - 1) % n];
        let cur = ring[k];
        let nxt = ring[(k + 1) % n];
        let cross = (cur.0 - prev.0) * (nxt.1 - cur.1) - (cur.1 - prev.1) * (nxt.0 - cur.0);
        if cross != 0 {
            out.push(cur);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{signed_area, Point};

    fn area(ring: &[(f64, f64)]) -> f64 {
        let pts: Vec<Point> = ring.iter().map(|&(r, c)| Point::new(c, r)).collect();
        signed_area(&pts[..pts.len() - 1])
    }

    #[test]
    fn single_cell_is_a_diamond() {
        let rings = trace_outlines(&CellSet::from_cells([(4, 7)]));
        assert_eq!(rings.len(), 1);
        assert_eq!(rings[0].len(), 5);
        assert!((area(&rings[0]) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn square_outline_area() {
        let cells = (0..10).flat_map(|r| (0..10).map(move |c| (r + 5, c + 5)));
        let rings = trace_outlines(&CellSet::from_cells(cells));
        assert_eq!(rings.len(), 1);
        // 10x10 cells, contour through edge midpoints of the outer ring of
        // centers: 100 - 4 * 0.5 * 0.25 * 2 ... = (9 + 1)^2 - 4 * 0.125
        assert!((area(&rings[0]) - 99.5).abs() < 1e-12, "{}", area(&rings[0]));
        for &(r, c) in &rings[0] {
            assert!((4.5..=15.5).contains(&r) && (4.5..=15.5).contains(&c));
        }
    }

    #[test]
    fn ring_has_hole() {
        let cells = (0..7).flat_map(|r| (0..7).map(move |c| (r, c)))
            .filter(|&(r, c)| !(2..5).contains(&r) || !(2..5).contains(&c));
        let rings = trace_outlines(&CellSet::from_cells(cells));
        assert_eq!(rings.len(), 2);
        assert!(area(&rings[0]) > 0.0);
        assert!(area(&rings[1]) < 0.0);
    }

    #[test]
    fn diagonal_cells_stay_apart() {
        let rings = trace_outlines(&CellSet::from_cells([(0, 0), (1, 1)]));
        assert_eq!(rings.len(), 2);
    }
}
