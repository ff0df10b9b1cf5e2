//! Compare the spread of region areas with Edwards' diagram.
//!
//! `cargo run --release --example area_comparison`

use vennfan::edwards::{default_sides, StereoVariant};
use vennfan::regions::area_stats;
use vennfan::{presets, CogwheelPlanar, FanDiagram};

fn main() -> vennfan::Result<()> {
    for (id, n) in [("fig-weights-n6", 6), ("fig-cosine-n7", 7)] {
        let fan = FanDiagram::build(&presets::find(id)?.spec()?, 2048)?;
        let ed = CogwheelPlanar::build(n, &default_sides(n), StereoVariant::Below, 2048)?;
        let fs = area_stats(&fan.report)?;
        let es = area_stats(&ed.report)?;
        println!("n = {n} ({id})");
        println!("  fan     min {:.3e}  std(log10) {:.3}", fs.min_area, fs.std_log10);
        println!("  edwards min {:.3e}  std(log10) {:.3}", es.min_area, es.std_log10);
    }
    Ok(())
}
