//! Edwards' spherical cogwheel diagrams.
//!
//! Curves 0..3 are the equator and the two great circles through the poles
//! in the planes `y = 0` and `x = 0`. Cogwheel `j` is cut by a prism with
//! `m = sides[j]` faces whose normals sit at azimuths `k·2π/m`: face `k`
//! meets the sphere in a small circle of angular radius `π/m` centered on
//! the equator, and the wheel takes the northern half of circle `k` for even
//! `k` and the southern half for odd `k`. Neighboring half circles meet on
//! the equator at azimuth `(k + 1/2)·2π/m`.
//!
//! The spherical arrangement is projected to the plane either orthogonally
//! onto the equatorial disk or stereographically.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::regions::{rasterize_even_odd, GridGeometry, RasterGrid};
use serde::Serialize;
use std::f64::consts::{PI, TAU};

pub type Vec3 = [f64; 3];

/// Tilt applied to the projection pole when a curve passes through it.
pub const POLE_TILT: f64 = 1e-3;
/// Azimuth of the tilt direction.
pub const POLE_TILT_AZIMUTH: f64 = PI / 8.0;
/// Default sampling density in points per radian of spherical arc length.
pub const DEFAULT_SAMPLES_PER_RADIAN: usize = 2048;
/// Frame radius relative to the largest bounded curve image.
pub const FRAME_MARGIN: f64 = 1.05;

const CHAIN_GAP: f64 = 1e-9;

fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize(a: Vec3) -> Vec3 {
    let l = dot(a, a).sqrt();
    [a[0] / l, a[1] / l, a[2] / l]
}

fn dist3(a: Vec3, b: Vec3) -> f64 {
    let d = [a[0] - b[0], a[1] - b[1], a[2] - b[2]];
    dot(d, d).sqrt()
}

/// Orthonormal pair spanning the plane normal to `u`: `(ẑ × u, u × (ẑ × u))`
/// normalized, or `(x̂, ŷ)` when `u` is the z axis.
fn plane_basis(u: Vec3) -> (Vec3, Vec3) {
    let z = [0.0, 0.0, 1.0];
    let c = cross(z, u);
    let e1 = if dot(c, c) < 1e-24 {
        [1.0, 0.0, 0.0]
    } else {
        normalize(c)
    };
    let e2 = cross(u, e1);
    (e1, e2)
}

/// Arc of the circle `{ cos ρ·u + sin ρ·(cos t·e1 + sin t·e2) }` for `t`
/// from `start` to `end` (either direction).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SphericalArc {
    pub axis: Vec3,
    pub angular_radius: f64,
    pub start: f64,
    pub end: f64,
}

impl SphericalArc {
    pub fn point(&self, t: f64) -> Vec3 {
        let (e1, e2) = plane_basis(self.axis);
        let (c, s) = (self.angular_radius.cos(), self.angular_radius.sin());
        let (ct, st) = (t.cos(), t.sin());
        let mut q = [0.0; 3];
        for k in 0..3 {
            q[k] = c * self.axis[k] + s * (ct * e1[k] + st * e2[k]);
        }
        q
    }

    pub fn length(&self) -> f64 {
        (self.end - self.start).abs() * self.angular_radius.sin()
    }

    /// True if the whole circle carrying this arc passes within `tol` of `p`.
    fn circle_meets(&self, p: Vec3, tol: f64) -> bool {
        (dot(self.axis, p).clamp(-1.0, 1.0).acos() - self.angular_radius).abs() < tol
    }

    fn sample(&self, per_radian: usize) -> Vec<Vec3> {
        let k = ((self.length() * per_radian as f64).ceil() as usize).max(16);
        (0..=k)
            .map(|j| {
                let t = if j == k {
                    self.end
                } else {
                    self.start + (self.end - self.start) * j as f64 / k as f64
                };
                self.point(t)
            })
            .collect()
    }
}

/// A closed chain of arcs on the unit sphere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SphericalCurve {
    pub index: usize,
    pub arcs: Vec<SphericalArc>,
}

impl SphericalCurve {
    fn great_circle(index: usize, axis: Vec3) -> Self {
        Self {
            index,
            arcs: vec![SphericalArc {
                axis,
                angular_radius: PI / 2.0,
                start: 0.0,
                end: TAU,
            }],
        }
    }

    fn cogwheel(index: usize, m: usize) -> Self {
        let rho = PI / m as f64;
        let arcs = (0..m)
            .map(|k| {
                let phi = k as f64 * TAU / m as f64;
                let axis = [phi.cos(), phi.sin(), 0.0];
                // t = π is the western equator point, t = 0 / 2π the eastern;
                // π/2 is the northern apex, 3π/2 the southern.
                let (start, end) = if k % 2 == 0 { (PI, 0.0) } else { (PI, TAU) };
                SphericalArc {
                    axis,
                    angular_radius: rho,
                    start,
                    end,
                }
            })
            .collect();
        Self { index, arcs }
    }

    /// Largest gap between consecutive arc endpoints, including the wrap.
    pub fn chain_gap(&self) -> f64 {
        let k = self.arcs.len();
        (0..k)
            .map(|j| {
                let a = &self.arcs[j];
                let b = &self.arcs[(j + 1) % k];
                dist3(a.point(a.end), b.point(b.start))
            })
            .fold(0.0, f64::max)
    }

    /// Dense closed polyline on the sphere; the first point is repeated last.
    pub fn sample(&self, per_radian: usize) -> Vec<Vec3> {
        let mut out: Vec<Vec3> = Vec::new();
        for arc in &self.arcs {
            let pts = arc.sample(per_radian);
            let skip = usize::from(!out.is_empty());
            out.extend_from_slice(&pts[skip..]);
        }
        if let Some(&first) = out.first() {
            *out.last_mut().expect("non-empty") = first;
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CogwheelDiagram {
    pub n: usize,
    pub sides: Vec<usize>,
    pub curves: Vec<SphericalCurve>,
}

/// `[4, 8, 16, …]`, one entry per cogwheel curve.
pub fn default_sides(n: usize) -> Vec<usize> {
    (0..n.saturating_sub(3)).map(|j| 4usize << j).collect()
}

/// Builds the spherical diagram. Repeated entries are accepted here; they
/// produce an incomplete region census that the verifier reports.
pub fn build_cogwheel(n: usize, sides: &[usize]) -> Result<CogwheelDiagram> {
    if !(3..=crate::curves::MAX_SETS).contains(&n) {
        return Err(Error::invalid(
            "n",
            format!("must be in 3..={}, got {n}", crate::curves::MAX_SETS),
        ));
    }
    if sides.len() != n - 3 {
        return Err(Error::invalid(
            "sides",
            format!("need {} entries for n = {n}, got {}", n - 3, sides.len()),
        ));
    }
    if let Some(bad) = sides.iter().find(|&&m| m < 4 || !m.is_power_of_two()) {
        return Err(Error::invalid(
            "sides",
            format!("{bad} is not a power of two >= 4"),
        ));
    }
    let mut curves = vec![
        SphericalCurve::great_circle(0, [0.0, 0.0, 1.0]),
        SphericalCurve::great_circle(1, [0.0, 1.0, 0.0]),
        SphericalCurve::great_circle(2, [1.0, 0.0, 0.0]),
    ];
    for (j, &m) in sides.iter().enumerate() {
        curves.push(SphericalCurve::cogwheel(3 + j, m));
    }
    for c in &curves {
        let gap = c.chain_gap();
        if gap > CHAIN_GAP {
            return Err(Error::ContractViolation(format!(
                "curve {} does not close (gap {gap:e})",
                c.index
            )));
        }
    }
    Ok(CogwheelDiagram {
        n,
        sides: sides.to_vec(),
        curves,
    })
}

/// `(x, y, z) → (x, y)`.
pub fn equatorial_project(diagram: &CogwheelDiagram, per_radian: usize) -> Vec<Vec<Point>> {
    diagram
        .curves
        .iter()
        .map(|c| {
            c.sample(per_radian)
                .into_iter()
                .map(|q| Point::new(q[0], q[1]))
                .collect()
        })
        .collect()
}

/// Which side of the sphere the image plane sits on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StereoVariant {
    /// Project from the north pole onto the plane tangent at the south pole.
    Below,
    /// Project from the south pole onto the plane tangent at the north pole,
    /// mirrored in x so the result reads the same way round.
    Above,
}

/// Planar curves plus the pole actually used.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct StereoProjection {
    pub variant: StereoVariant,
    pub pole: Vec3,
    pub tilted: bool,
    pub curves: Vec<Vec<Point>>,
}

fn tilted_pole(north: bool, tilt: f64) -> Vec3 {
    let s = if north { 1.0 } else { -1.0 };
    [
        tilt.sin() * POLE_TILT_AZIMUTH.cos(),
        tilt.sin() * POLE_TILT_AZIMUTH.sin(),
        s * tilt.cos(),
    ]
}

/// Stereographic image of every curve. The pole is tilted by [`POLE_TILT`]
/// if any curve passes through it.
pub fn stereographic_project(
    diagram: &CogwheelDiagram,
    variant: StereoVariant,
    per_radian: usize,
) -> Result<StereoProjection> {
    let north = variant == StereoVariant::Below;
    let through = |p: Vec3, tol: f64| {
        diagram
            .curves
            .iter()
            .flat_map(|c| c.arcs.iter())
            .any(|a| a.circle_meets(p, tol))
    };
    let mut pole = tilted_pole(north, 0.0);
    let mut tilted = false;
    if through(pole, 1e-9) {
        pole = tilted_pole(north, POLE_TILT);
        tilted = true;
        if through(pole, 1e-2 * POLE_TILT) {
            return Err(Error::ContractViolation(
                "a curve passes through the tilted projection pole".into(),
            ));
        }
    }
    // Image plane tangent at -pole, with an in-plane basis continuous in the tilt.
    let e1 = normalize(cross([0.0, 1.0, 0.0], pole));
    let e2 = cross(pole, e1);
    let mirror = if north { 1.0 } else { -1.0 };
    let curves = diagram
        .curves
        .iter()
        .map(|c| {
            c.sample(per_radian)
                .into_iter()
                .map(|q| {
                    let k = 2.0 / (1.0 - dot(q, pole));
                    Point::new(mirror * k * dot(q, e1), k * dot(q, e2))
                })
                .collect()
        })
        .collect();
    Ok(StereoProjection {
        variant,
        pole,
        tilted,
        curves,
    })
}

/// Frame radius for projected cogwheel curves: [`FRAME_MARGIN`] times the
/// largest radius among bounded images (the two longitudes are skipped).
pub fn frame_radius(curves: &[Vec<Point>]) -> f64 {
    let r = curves
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != 1 && *i != 2)
        .flat_map(|(_, c)| c.iter())
        .map(|p| p.norm())
        .fold(0.0, f64::max);
    FRAME_MARGIN * r
}

/// Even-odd raster of projected curves on a grid spanning
/// `FRAME_MARGIN · frame` in each direction.
pub fn rasterize_projection(curves: &[Vec<Point>], resolution: usize) -> Result<RasterGrid> {
    if resolution < crate::regions::MIN_RESOLUTION {
        return Err(Error::invalid(
            "resolution",
            format!(
                "must be >= {}, got {resolution}",
                crate::regions::MIN_RESOLUTION
            ),
        ));
    }
    let frame = frame_radius(curves);
    let geometry = GridGeometry::new(resolution, FRAME_MARGIN * frame);
    rasterize_even_odd(curves, geometry, frame)
}
