//! Numerical simplicity check: no point of the plane lies on three or more
//! boundaries.
//!
//! All pairwise crossings of the projected polylines are computed and
//! clustered at a tolerance `τ` (a few raster cells). A cluster touching at
//! least three distinct boundaries is a triple point if its crossings also
//! coincide at a tight tolerance; if they are merely close, the sampling does
//! not separate them and the verdict is unknown.

use crate::geometry::{segment_intersection, Point, SegmentHit};
use std::collections::{BTreeSet, HashMap};

/// Crossings closer than this are treated as the same point.
pub const TIGHT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityVerdict {
    Simple,
    NotSimple,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct SimplicityDetail {
    pub verdict: SimplicityVerdict,
    /// Number of pairwise crossings found.
    pub crossings: usize,
    /// Centers of clusters that touch three or more boundaries.
    pub multi_points: Vec<(Point, Vec<usize>)>,
    /// Centers of clusters that are ambiguous at this tolerance.
    pub ambiguous: Vec<(Point, Vec<usize>)>,
}

struct Crossing {
    p: Point,
    curves: (usize, usize),
}

fn bucket_key(p: Point, size: f64) -> (i64, i64) {
    ((p.x / size).floor() as i64, (p.y / size).floor() as i64)
}

/// Pairwise crossings of closed polylines, restricted to `[-clip, clip]²`.
fn crossings(curves: &[Vec<Point>], clip: f64, bucket: f64) -> Vec<Crossing> {
    // Spatial hash of segments.
    let mut grid: HashMap<(i64, i64), Vec<(usize, usize)>> = HashMap::new();
    for (ci, c) in curves.iter().enumerate() {
        for s in 0..c.len().saturating_sub(1) {
            let (a, b) = (c[s], c[s + 1]);
            let (x0, x1) = (a.x.min(b.x), a.x.max(b.x));
            let (y0, y1) = (a.y.min(b.y), a.y.max(b.y));
            if x1 < -clip || x0 > clip || y1 < -clip || y0 > clip {
                continue;
            }
            let k0 = bucket_key(Point::new(x0.max(-clip), y0.max(-clip)), bucket);
            let k1 = bucket_key(Point::new(x1.min(clip), y1.min(clip)), bucket);
            for kx in k0.0..=k1.0 {
                for ky in k0.1..=k1.1 {
                    grid.entry((kx, ky)).or_default().push((ci, s));
                }
            }
        }
    }
    let mut keys: Vec<_> = grid.keys().copied().collect();
    keys.sort_unstable();
    let lower_left = |c: &[Point], s: usize| -> Point {
        let (a, b) = (c[s], c[s + 1]);
        Point::new(a.x.min(b.x).max(-clip), a.y.min(b.y).max(-clip))
    };
    let mut out = Vec::new();
    for key in keys {
        let segs = &grid[&key];
        for x in 0..segs.len() {
            for y in x + 1..segs.len() {
                let (ci, si) = segs[x];
                let (cj, sj) = segs[y];
                if ci == cj {
                    continue;
                }
                // Test each pair once: in the bucket holding the lower-left
                // corner of the overlap of both bounding boxes.
                let la = lower_left(&curves[ci], si);
                let lb = lower_left(&curves[cj], sj);
                if bucket_key(Point::new(la.x.max(lb.x), la.y.max(lb.y)), bucket) != key {
                    continue;
                }
                let a = &curves[ci];
                let b = &curves[cj];
                let pair = (ci.min(cj), ci.max(cj));
                match segment_intersection(a[si], a[si + 1], b[sj], b[sj + 1]) {
                    SegmentHit::None => {}
                    SegmentHit::Point(p) => out.push(Crossing { p, curves: pair }),
                    SegmentHit::Overlap(p, q) => {
                        out.push(Crossing { p, curves: pair });
                        out.push(Crossing { p: q, curves: pair });
                    }
                }
            }
        }
    }
    out
}

/// Single-linkage clusters of points at distance `tol`.
fn cluster(points: &[Point], tol: f64) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..points.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (k, &p) in points.iter().enumerate() {
        grid.entry(bucket_key(p, tol)).or_default().push(k);
    }
    for (k, &p) in points.iter().enumerate() {
        let (kx, ky) = bucket_key(p, tol);
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(list) = grid.get(&(kx + dx, ky + dy)) {
                    for &j in list {
                        if j > k && points[j].dist(p) <= tol {
                            let (a, b) = (find(&mut parent, k), find(&mut parent, j));
                            if a != b {
                                parent[a.max(b)] = a.min(b);
                            }
                        }
                    }
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for k in 0..points.len() {
        let r = find(&mut parent, k);
        groups.entry(r).or_default().push(k);
    }
    let mut out: Vec<Vec<usize>> = groups.into_values().collect();
    out.sort_unstable_by_key(|g| g[0]);
    out
}

fn curves_of(xs: &[Crossing], members: &[usize]) -> Vec<usize> {
    let mut set = BTreeSet::new();
    for &k in members {
        set.insert(xs[k].curves.0);
        set.insert(xs[k].curves.1);
    }
    set.into_iter().collect()
}

fn centroid(xs: &[Crossing], members: &[usize]) -> Point {
    let mut acc = Point::ORIGIN;
    for &k in members {
        acc = acc + xs[k].p;
    }
    acc * (1.0 / members.len() as f64)
}

/// Checks closed polylines for points shared by three or more of them.
///
/// `tolerance` is the clustering distance (two raster cells in [`verify`]);
/// `clip` limits the search to `[-clip, clip]²`.
///
/// [`verify`]: crate::regions::verify
pub fn check_simplicity(curves: &[Vec<Point>], tolerance: f64, clip: f64) -> SimplicityDetail {
    let bucket = tolerance.max(clip / 512.0);
    let xs = crossings(curves, clip, bucket);
    let points: Vec<Point> = xs.iter().map(|c| c.p).collect();
    let mut multi_points = Vec::new();
    let mut ambiguous = Vec::new();
    for group in cluster(&points, tolerance) {
        let involved = curves_of(&xs, &group);
        if involved.len() < 3 {
            continue;
        }
        let sub_points: Vec<Point> = group.iter().map(|&k| points[k]).collect();
        let mut genuine = false;
        for sub in cluster(&sub_points, TIGHT_TOLERANCE) {
            let members: Vec<usize> = sub.iter().map(|&j| group[j]).collect();
            let c = curves_of(&xs, &members);
            if c.len() >= 3 {
                multi_points.push((centroid(&xs, &members), c));
                genuine = true;
            }
        }
        if !genuine {
            ambiguous.push((centroid(&xs, &group), involved));
        }
    }
    let verdict = if !multi_points.is_empty() {
        SimplicityVerdict::NotSimple
    } else if !ambiguous.is_empty() {
        SimplicityVerdict::Unknown
    } else {
        SimplicityVerdict::Simple
    };
    SimplicityDetail {
        verdict,
        crossings: xs.len(),
        multi_points,
        ambiguous,
    }
}
