//! Plan region labels and show which strategy each region received.
//!
//! `cargo run --release --example label_plan`

use vennfan::curves::{CurveSpec, DecayScheme, Variant};
use vennfan::labels::{gray_order, LabelConfig, Strategy};
use vennfan::FanDiagram;

fn main() -> vennfan::Result<()> {
    let spec = CurveSpec::new(
        Variant::Cosine,
        5,
        0.2,
        DecayScheme::ModifiedLinear { delta: 0.25, eps: 1.0 / 7.0 },
    )?;
    let d = FanDiagram::build(&spec, 1024)?;
    let config = LabelConfig::for_canvas(d.grid.geometry().extent, 1024);
    let plan = d.plan(&config)?;
    let gray = gray_order(spec.n());
    for mask in &gray.sequence {
        let Some(e) = plan.entries.get(mask) else { continue };
        let how = match e.strategy {
            Strategy::Radial => "radial",
            Strategy::VisualCenter => "center",
            Strategy::Segment => "segment",
        };
        println!(
            "{}  {how:<8} at ({:+.3}, {:+.3})  rot {:+6.1}°  chord {:.3}",
            mask.to_bit_string(spec.n()),
            e.anchor.x,
            e.anchor.y,
            e.rotation_deg,
            e.max_chord
        );
    }
    Ok(())
}
