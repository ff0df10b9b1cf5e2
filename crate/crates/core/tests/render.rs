//! Rendering invariants checked on real diagrams.

use vennfan::geometry::point_segment_distance;
use vennfan::labels::{primary_components, LabelConfig, Strategy};
use vennfan::render::{render_diagram, RenderConfig, Rendered, Scene};
use vennfan::{presets, FanDiagram};

fn render(d: &FanDiagram, config: &RenderConfig) -> Rendered {
    let extent = d.grid.geometry().extent;
    let plan = d.plan(&LabelConfig::for_canvas(extent, config.canvas_px)).unwrap();
    let curves = d.curves();
    let scene = Scene {
        n: d.spec.n(),
        curves: &curves,
        components: &d.components,
        plan: &plan,
        extent,
        texts: None,
        set_names: None,
    };
    render_diagram(&scene, config).unwrap()
}

#[test]
fn two_sets_give_four_regions_two_curves_four_labels() {
    let d = FanDiagram::build(&presets::find("fig-linear-cosine-n2").unwrap().spec().unwrap(), 1024)
        .unwrap();
    let r = render(&d, &RenderConfig::default());
    assert_eq!(r.svg.matches("<path data-mask=").count(), 4);
    assert_eq!(r.svg.matches("<path data-set=").count(), 2);
    assert_eq!(r.labels.len(), 4);
    assert!(r.warnings.is_empty());
}

#[test]
fn output_is_well_formed_and_finite() {
    let d = FanDiagram::build(&presets::find("fig-heuristic-sine").unwrap().spec().unwrap(), 1024)
        .unwrap();
    let svg = render(&d, &RenderConfig::default()).svg;
    assert!(!svg.contains("NaN") && !svg.contains("inf"));
    let opens = svg.matches("<g ").count();
    assert_eq!(opens, svg.matches("</g>").count());
    assert_eq!(svg.matches("<text").count(), svg.matches("</text>").count());
    assert_eq!(svg.matches("<svg").count(), 1);
}

#[test]
fn fitted_label_boxes_stay_in_place() {
    for id in ["fig-linear-sine-n4", "fig-heuristic-cosine", "fig-sine-n7"] {
        let d = FanDiagram::build(&presets::find(id).unwrap().spec().unwrap(), 2048).unwrap();
        let config = RenderConfig::default();
        let extent = d.grid.geometry().extent;
        let plan = d.plan(&LabelConfig::for_canvas(extent, config.canvas_px)).unwrap();
        let r = render(&d, &config);
        let primary = primary_components(&d.components);
        let fitted = r.labels.iter().filter(|l| l.fits).count();
        assert_eq!(fitted + r.warnings.len(), r.labels.len());
        for label in r.labels.iter().filter(|l| l.fits) {
            let entry = &plan.entries[&label.mask];
            for p in label.box_points {
                let ok = match entry.strategy {
                    Strategy::Radial => p.norm() > 1.0,
                    _ => primary[&label.mask].contains_point(p),
                };
                assert!(ok, "{id}: label {:?} point {p:?}", label.mask);
            }
        }
    }
}

#[test]
fn tiny_regions_lie_under_the_strokes() {
    let mut checked = 0;
    for id in ["fig-unmodified-cosine", "fig-sine-exp", "fig-weights-n7"] {
        let d = FanDiagram::build(&presets::find(id).unwrap().spec().unwrap(), 2048).unwrap();
        let config = RenderConfig {
            stroke_width_px: 3.0,
            ..RenderConfig::default()
        };
        let geometry = d.grid.geometry();
        let world_per_px = 2.0 * geometry.extent / config.canvas_px as f64;
        let half_stroke = 0.5 * config.stroke_width_px * world_per_px;
        let curves = d.curves();
        for tiny in &d.report.tiny_regions {
            for comp in d.components.iter().filter(|c| c.mask == tiny.mask && c.cell_count() == tiny.cells) {
                for (row, col) in comp.cells.iter() {
                    let p = geometry.cell_center(row, col);
                    let dist = curves
                        .iter()
                        .flat_map(|c| c.windows(2))
                        .map(|w| point_segment_distance(p, w[0], w[1]))
                        .fold(f64::INFINITY, f64::min);
                    // The whole cell must be covered, not just its center.
                    let reach = dist + geometry.cell_size() * std::f64::consts::FRAC_1_SQRT_2;
                    assert!(reach <= half_stroke, "{id}: tiny cell {row},{col} at {dist}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 0, "no tiny regions exercised");
}

#[test]
fn identical_inputs_render_identical_bytes() {
    let spec = presets::find("fig-linear-sine-n5").unwrap().spec().unwrap();
    let a = render(&FanDiagram::build(&spec, 1024).unwrap(), &RenderConfig::default());
    let b = render(&FanDiagram::build(&spec, 1024).unwrap(), &RenderConfig::default());
    assert_eq!(a.svg, b.svg);
}
