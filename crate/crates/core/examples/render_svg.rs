//! Render a labeled diagram to SVG.
//!
//! `cargo run --release --example render_svg -- out.svg`

use vennfan::labels::LabelConfig;
use vennfan::render::{render_diagram, RenderConfig, Scene};
use vennfan::{presets, FanDiagram};

fn main() -> vennfan::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "vennfan.svg".into());
    let d = FanDiagram::build(&presets::find("fig-heuristic-cosine")?.spec()?, 2048)?;
    let config = RenderConfig::default();
    let extent = d.grid.geometry().extent;
    let plan = d.plan(&LabelConfig::for_canvas(extent, config.canvas_px))?;
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
    let rendered = render_diagram(&scene, &config)?;
    std::fs::write(&out, &rendered.svg).expect("write svg");
    println!(
        "wrote {out}: {} labels, {} did not fit",
        rendered.labels.len(),
        rendered.warnings.len()
    );
    Ok(())
}
