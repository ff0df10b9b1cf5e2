//! Build a diagram from a preset and print its verification summary.
//!
//! `cargo run --release --example verify_diagram -- fig-cosine-n7`

use vennfan::{presets, FanDiagram};

fn main() -> vennfan::Result<()> {
    let id = std::env::args().nth(1).unwrap_or_else(|| "fig-cosine-n7".into());
    let preset = presets::find(&id)?;
    println!("{}: {}", preset.id, preset.description);
    let d = FanDiagram::build(&preset.spec()?, 2048)?;
    let r = &d.report;
    println!("independent family: {}", r.is_independent_family);
    println!("venn:               {}", r.is_venn);
    println!("simple:             {:?}", r.is_simple);
    println!("empty masks:        {}", r.empty_masks().len());
    println!("tiny fragments:     {}", r.tiny_regions.len());
    let (small, big) = r
        .areas
        .iter()
        .filter(|(_, &a)| a > 0.0)
        .fold((f64::INFINITY, 0.0f64), |(lo, hi), (_, &a)| (lo.min(a), hi.max(a)));
    println!("area range:         {small:.3e} .. {big:.3e}");
    Ok(())
}
