//! Deterministic SVG output: filled regions, boundary strokes, rotated
//! labels and a legend. Also a PNG of the raster masks.

use crate::error::{Error, Result};
use crate::geometry::Point;
use crate::labels::{gray_order, primary_components, LabelPlan, Strategy};
use crate::regions::{RasterGrid, RegionComponent, RegionMask};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

/// Text width per character per unit font size.
pub const CHAR_WIDTH: f64 = 0.6;
/// Fraction of the available chord a label may use.
pub const CHORD_FILL: f64 = 0.9;

#[derive(Debug, Clone, PartialEq)]
pub struct RenderConfig {
    pub canvas_px: usize,
    pub stroke_width_px: f64,
    pub font_family: String,
    pub min_font_px: f64,
    pub max_font_px: f64,
    pub background: String,
    /// Decimal places for coordinates.
    pub precision: usize,
    pub legend: bool,
}

impl Default for RenderConfig {
    fn default() -> Self {
        Self {
            canvas_px: 1024,
            stroke_width_px: 1.5,
            font_family: "Helvetica, Arial, sans-serif".into(),
            min_font_px: 6.0,
            max_font_px: 28.0,
            background: "#ffffff".into(),
            precision: 2,
            legend: true,
        }
    }
}

impl RenderConfig {
    pub fn validate(&self) -> Result<()> {
        if self.canvas_px < 256 {
            return Err(Error::invalid(
                "canvas_px",
                format!("must be >= 256, got {}", self.canvas_px),
            ));
        }
        if !(self.stroke_width_px > 0.0 && self.stroke_width_px.is_finite()) {
            return Err(Error::invalid("stroke_width_px", "must be > 0"));
        }
        if !(self.min_font_px > 0.0 && self.min_font_px <= self.max_font_px) {
            return Err(Error::invalid(
                "font",
                "need 0 < min_font_px <= max_font_px",
            ));
        }
        Ok(())
    }
}

/// Everything drawn in one figure.
pub struct Scene<'a> {
    pub n: usize,
    /// Closed boundary polylines, world coordinates.
    pub curves: &'a [Vec<Point>],
    pub components: &'a [RegionComponent],
    pub plan: &'a LabelPlan,
    /// Half-width of the square world window drawn on the canvas.
    pub extent: f64,
    /// Label text per mask; the bit string when absent.
    pub texts: Option<&'a BTreeMap<RegionMask, String>>,
    pub set_names: Option<&'a [String]>,
}

/// A label that did not fit at the minimum font size.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct LabelWarning {
    pub mask: String,
    pub strategy: Strategy,
    pub font_px: f64,
    pub reason: String,
}

/// Where and how large one label was drawn.
#[derive(Debug, Clone, PartialEq)]
pub struct PlacedLabel {
    pub mask: RegionMask,
    pub text: String,
    pub font_px: f64,
    /// The nine sample points of the text box, world coordinates.
    pub box_points: [Point; 9],
    pub fits: bool,
}

#[derive(Debug, Clone)]
pub struct Rendered {
    pub svg: String,
    pub labels: Vec<PlacedLabel>,
    pub warnings: Vec<LabelWarning>,
}

/// Fill color of a mask: hue from its Gray-code rank, lightness from the
/// number of sets containing it.
pub fn fill_hsl(mask: RegionMask, n: usize, rank: usize) -> (f64, f64, f64) {
    let h = 360.0 * rank as f64 / (1u64 << n) as f64;
    let l = 0.88 - 0.4 * mask.count() as f64 / n.max(1) as f64;
    (h, 0.55, l)
}

pub fn stroke_hsl(i: usize, n: usize) -> (f64, f64, f64) {
    (360.0 * i as f64 / n.max(1) as f64, 0.7, 0.32)
}

pub fn hsl_to_rgb((h, s, l): (f64, f64, f64)) -> [u8; 3] {
    let c = (1.0 - (2.0 * l - 1.0).abs()) * s;
    let hp = (h.rem_euclid(360.0)) / 60.0;
    let x = c * (1.0 - (hp % 2.0 - 1.0).abs());
    let (r, g, b) = match hp as u32 {
        0 => (c, x, 0.0),
        1 => (x, c, 0.0),
        2 => (0.0, c, x),
        3 => (0.0, x, c),
        4 => (x, 0.0, c),
        _ => (c, 0.0, x),
    };
    let m = l - c / 2.0;
    let to = |v: f64| ((v + m) * 255.0).round().clamp(0.0, 255.0) as u8;
    [to(r), to(g), to(b)]
}

fn hex([r, g, b]: [u8; 3]) -> String {
    format!("#{r:02x}{g:02x}{b:02x}")
}

fn escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for ch in s.chars() {
        match ch {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            '\'' => out.push_str("&apos;"),
            c => out.push(c),
        }
    }
    out
}

struct Canvas {
    scale: f64,
    extent: f64,
    prec: usize,
}

impl Canvas {
    fn px(&self, p: Point) -> (f64, f64) {
        ((p.x + self.extent) * self.scale, (self.extent - p.y) * self.scale)
    }

    fn num(&self, v: f64) -> String {
        let s = format!("{:.*}", self.prec, v);
        // Avoid "-0.00".
        if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
            s[1..].to_string()
        } else {
            s
        }
    }

    /// Path data for a ring, dropping vertices closer than a quarter pixel
    /// to the previous kept one.
    fn ring(&self, pts: &[Point], close: bool, out: &mut String) {
        let mut last: Option<(f64, f64)> = None;
        for (k, &p) in pts.iter().enumerate() {
            let (x, y) = self.px(p);
            let is_last = k + 1 == pts.len();
            if let Some((lx, ly)) = last {
                if !is_last && (x - lx).hypot(y - ly) < 0.25 {
                    continue;
                }
            }
            let cmd = if last.is_none() { 'M' } else { 'L' };
            let _ = write!(out, "{cmd}{},{}", self.num(x), self.num(y));
            last = Some((x, y));
        }
        if close && last.is_some() {
            out.push('Z');
        }
    }
}

/// Nine points of a text box: corners, edge midpoints and center.
/// `start` is where the baseline begins, `dir` the unit reading direction.
fn box_points(start: Point, dir: Point, width: f64, height: f64) -> [Point; 9] {
    let normal = Point::new(-dir.y, dir.x);
    let mut out = [Point::ORIGIN; 9];
    let mut k = 0;
    for a in [0.0, 0.5, 1.0] {
        for b in [-0.5, 0.0, 0.5] {
            out[k] = start + dir * (a * width) + normal * (b * height);
            k += 1;
        }
    }
    out
}

struct Fit {
    font_px: f64,
    points: [Point; 9],
    anchor_mode: &'static str,
    fits: bool,
}

/// Largest font size in `[min, max]` for which the width fits the chord and
/// all nine box points satisfy `ok`; falls back to `min`.
fn fit_label(
    text_len: usize,
    anchor: Point,
    rotation_deg: f64,
    strategy: Strategy,
    max_chord: f64,
    px_per_world: f64,
    config: &RenderConfig,
    ok: &dyn Fn(Point) -> bool,
) -> Fit {
    let rot = rotation_deg.to_radians();
    let dir = Point::new(rot.cos(), rot.sin());
    // Radial labels start at the anchor and run away from the circle; when
    // the text is flipped upright they end at the anchor instead.
    let (outward, anchor_mode) = match strategy {
        Strategy::Radial => {
            if anchor.dot(dir) >= 0.0 {
                (true, "start")
            } else {
                (false, "end")
            }
        }
        _ => (true, "middle"),
    };
    let geometry = |fs_px: f64| {
        let w = CHAR_WIDTH * fs_px * text_len as f64 / px_per_world;
        let h = fs_px / px_per_world;
        let start = match strategy {
            Strategy::Radial if outward => anchor,
            Strategy::Radial => anchor - dir * w,
            _ => anchor - dir * (0.5 * w),
        };
        (w, box_points(start, dir, w, h))
    };
    let admissible = |fs_px: f64| {
        let (w, pts) = geometry(fs_px);
        w <= CHORD_FILL * max_chord + 1e-12 && pts.iter().all(|&p| ok(p))
    };
    let (lo, hi) = (config.min_font_px, config.max_font_px);
    if !admissible(lo) {
        return Fit {
            font_px: lo,
            points: geometry(lo).1,
            anchor_mode,
            fits: false,
        };
    }
    let best = if admissible(hi) {
        hi
    } else {
        let (mut a, mut b) = (lo, hi);
        for _ in 0..40 {
            let m = 0.5 * (a + b);
            if admissible(m) {
                a = m;
            } else {
                b = m;
            }
        }
        a
    };
    // Round down to a tenth of a pixel for stable output.
    let rounded = ((best * 10.0).floor() / 10.0).max(lo);
    let font_px = if admissible(rounded) { rounded } else { lo };
    Fit {
        font_px,
        points: geometry(font_px).1,
        anchor_mode,
        fits: true,
    }
}

/// Renders the scene to an SVG document.
pub fn render_diagram(scene: &Scene, config: &RenderConfig) -> Result<Rendered> {
    config.validate()?;
    if scene.plan.n != scene.n {
        return Err(Error::ContractViolation(format!(
            "label plan is for {} sets, scene has {}",
            scene.plan.n, scene.n
        )));
    }
    let size = config.canvas_px as f64;
    let cv = Canvas {
        scale: size / (2.0 * scene.extent),
        extent: scene.extent,
        prec: config.precision,
    };
    let order = gray_order(scene.n);
    let rank: BTreeMap<RegionMask, usize> = order
        .sequence
        .iter()
        .enumerate()
        .map(|(k, &m)| (m, k))
        .collect();

    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        config.canvas_px
    );
    let _ = writeln!(
        svg,
        r#"<rect x="0" y="0" width="{0}" height="{0}" fill="{1}"/>"#,
        config.canvas_px,
        escape(&config.background)
    );

    svg.push_str("<g id=\"regions\" stroke=\"none\" fill-rule=\"evenodd\">\n");
    for c in scene.components {
        if c.outline.is_empty() {
            continue;
        }
        let color = hex(hsl_to_rgb(fill_hsl(c.mask, scene.n, rank[&c.mask])));
        let mut d = String::new();
        cv.ring(&c.outline, true, &mut d);
        for h in &c.holes {
            cv.ring(h, true, &mut d);
        }
        let _ = writeln!(
            svg,
            r#"<path data-mask="{}" fill="{}" d="{}"/>"#,
            c.mask.to_bit_string(scene.n),
            color,
            d
        );
    }
    svg.push_str("</g>\n");

    let _ = writeln!(
        svg,
        r#"<g id="boundaries" fill="none" stroke-width="{}" stroke-linejoin="round">"#,
        cv.num(config.stroke_width_px)
    );
    for (i, curve) in scene.curves.iter().enumerate() {
        let mut d = String::new();
        cv.ring(curve, false, &mut d);
        let _ = writeln!(
            svg,
            r#"<path data-set="{}" stroke="{}" d="{}"/>"#,
            i,
            hex(hsl_to_rgb(stroke_hsl(i, scene.n))),
            d
        );
    }
    svg.push_str("</g>\n");

    let primaries = primary_components(scene.components);
    let mut labels = Vec::new();
    let mut warnings = Vec::new();
    let _ = writeln!(
        svg,
        r##"<g id="labels" font-family="{}" fill="#111111" dominant-baseline="central">"##,
        escape(&config.font_family)
    );
    for (&mask, entry) in &scene.plan.entries {
        let text = scene
            .texts
            .and_then(|t| t.get(&mask).cloned())
            .unwrap_or_else(|| mask.to_bit_string(scene.n));
        let region = primaries.get(&mask).copied();
        let ok = |p: Point| match entry.strategy {
            Strategy::Radial => p.norm() > 1.0,
            _ => region.is_some_and(|c| c.contains_point(p)),
        };
        let fit = fit_label(
            text.chars().count(),
            entry.anchor,
            entry.rotation_deg,
            entry.strategy,
            entry.max_chord,
            cv.scale,
            config,
            &ok,
        );
        if !fit.fits {
            warnings.push(LabelWarning {
                mask: mask.to_bit_string(scene.n),
                strategy: entry.strategy,
                font_px: fit.font_px,
                reason: "does not fit at the minimum font size".into(),
            });
        }
        let (x, y) = cv.px(entry.anchor);
        let (xs, ys) = (cv.num(x), cv.num(y));
        let _ = writeln!(
            svg,
            r#"<text x="{xs}" y="{ys}" font-size="{}" text-anchor="{}" transform="rotate({} {xs} {ys})">{}</text>"#,
            cv.num(fit.font_px),
            fit.anchor_mode,
            cv.num(-entry.rotation_deg),
            escape(&text)
        );
        labels.push(PlacedLabel {
            mask,
            text,
            font_px: fit.font_px,
            box_points: fit.points,
            fits: fit.fits,
        });
    }
    svg.push_str("</g>\n");

    if config.legend {
        let fs = 12.0;
        svg.push_str("<g id=\"legend\" font-family=\"");
        svg.push_str(&escape(&config.font_family));
        let _ = writeln!(svg, "\" font-size=\"{}\">", cv.num(fs));
        for i in 0..scene.n {
            let y = 10.0 + fs * 1.4 * (i as f64 + 0.5);
            let name = scene
                .set_names
                .and_then(|s| s.get(i).cloned())
                .unwrap_or_else(|| format!("set {i}"));
            let _ = writeln!(
                svg,
                r#"<line x1="10" y1="{0}" x2="34" y2="{0}" stroke="{1}" stroke-width="3"/><text x="40" y="{0}" dominant-baseline="central">{2}</text>"#,
                cv.num(y),
                hex(hsl_to_rgb(stroke_hsl(i, scene.n))),
                escape(&name)
            );
        }
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    Ok(Rendered {
        svg,
        labels,
        warnings,
    })
}

/// Writes the raster masks as a PNG, one pixel per cell, colored like the
/// SVG regions. Row 0 of the grid (lowest y) ends up at the bottom.
pub fn write_png(grid: &RasterGrid, path: &Path) -> Result<()> {
    let n = grid.n();
    let res = grid.resolution();
    let order = gray_order(n);
    let mut palette = vec![[0u8; 3]; 1 << n];
    for (k, &m) in order.sequence.iter().enumerate() {
        palette[m.0 as usize] = hsl_to_rgb(fill_hsl(m, n, k));
    }
    let mut img = image::RgbImage::new(res as u32, res as u32);
    for row in 0..res {
        for col in 0..res {
            let m = grid.get(row, col);
            img.put_pixel(col as u32, (res - 1 - row) as u32, image::Rgb(palette[m.0 as usize]));
        }
    }
    img.save_with_format(path, image::ImageFormat::Png)
        .map_err(|e| Error::Image(e.to_string()))
}
