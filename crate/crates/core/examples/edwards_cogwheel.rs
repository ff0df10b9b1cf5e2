//! Build Edwards' cogwheel diagram on the sphere, project it to the plane
//! and check that it is a simple Venn diagram.
//!
//! `cargo run --release --example edwards_cogwheel -- 6`

use vennfan::edwards::{default_sides, StereoVariant};
use vennfan::CogwheelPlanar;

fn main() -> vennfan::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let sides = default_sides(n);
    println!("n = {n}, cogwheel teeth counts {sides:?}");
    let e = CogwheelPlanar::build(n, &sides, StereoVariant::Below, 2048)?;
    for c in &e.diagram.curves {
        let len: f64 = c.arcs.iter().map(|a| a.length()).sum();
        println!("curve {}: {:3} arcs, length {len:.4} on the unit sphere", c.index, c.arcs.len());
    }
    let r = &e.report;
    println!(
        "venn {}  simple {:?}  frame extent {:.3}  unbounded masks {:?}",
        r.is_venn,
        r.is_simple,
        e.extent(),
        r.outer_masks.iter().map(|m| m.to_bit_string(n)).collect::<Vec<_>>()
    );
    Ok(())
}
