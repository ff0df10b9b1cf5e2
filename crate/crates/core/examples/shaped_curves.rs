//! Evaluate shaped boundaries and compare the decay schemes.
//!
//! `cargo run --example shaped_curves`

use vennfan::curves::{sample_boundary, CurveSpec, DecayScheme, Variant};

fn main() -> vennfan::Result<()> {
    let n = 6;
    let schemes = [
        ("linear", DecayScheme::Linear),
        ("exp b=4/5", DecayScheme::ModifiedExponential { b: 0.8, eps: 0.0 }),
        ("linear-mod", DecayScheme::ModifiedLinear { delta: 1.0 / 3.0, eps: 1.0 / 9.0 }),
    ];
    for (name, decay) in schemes {
        let spec = CurveSpec::new(Variant::Cosine, n, 0.2, decay)?;
        let lambdas: Vec<String> = spec.lambdas().iter().map(|l| format!("{l:.4}")).collect();
        println!("{name:<11} λ = [{}]", lambdas.join(", "));
    }

    // Smaller p flattens the boundaries toward square waves.
    for p in [1.0, 0.5, 0.2, 0.05] {
        let spec = CurveSpec::new(Variant::Sine, 3, p, DecayScheme::Linear)?;
        let f: Vec<String> = (0..=4)
            .map(|k| format!("{:+.3}", spec.eval_half_turns(1, k as f64 / 16.0)))
            .collect();
        println!("p = {p:<4}  f_1 on x in [0, π/4]: {}", f.join(" "));
    }

    let spec = CurveSpec::new(Variant::Cosine, 4, 0.5, DecayScheme::Linear)?;
    let b = sample_boundary(&spec, 0, 64)?;
    let r_max = b.projected.iter().map(|p| p.norm()).fold(0.0, f64::max);
    println!(
        "cosine curve 0: {} strip samples, {} polyline points, max radius {r_max:.4}",
        b.strip_samples.len(),
        b.projected.len()
    );
    Ok(())
}
