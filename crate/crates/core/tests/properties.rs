//! Property tests against independent oracles.

use proptest::prelude::*;
use std::f64::consts::PI;
use vennfan::curves::{sample_all, CurveSpec, DecayScheme, Variant};
use vennfan::data::{count_regions, parse_json};
use vennfan::labels::{gray_order, sign_sweep};
use vennfan::regions::{
    classify_point, rasterize, rasterize_even_odd, GridGeometry, RegionMask, DEFAULT_EXTENT,
    DEFAULT_FRAME_RADIUS,
};
use vennfan::{presets, FanDiagram, Point};

/// Boundary value recomputed from the defining formula with libm trig.
fn oracle_f(variant: Variant, lambda: f64, p: f64, i: usize, x: f64) -> f64 {
    let s = match variant {
        Variant::Sine => (2f64.powi(i as i32) * x).sin(),
        // Evaluated at x itself, not at the polar angle x - 2π: the
        // half-frequency curve 0 changes sign under that shift.
        Variant::Cosine => (2f64.powi(i as i32 - 1) * x).cos(),
    };
    lambda * s.signum() * s.abs().powf(p)
}

fn decay_strategy() -> impl Strategy<Value = DecayScheme> {
    prop_oneof![
        Just(DecayScheme::Linear),
        (0.5f64..0.95, 0.0f64..0.5).prop_map(|(b, eps)| DecayScheme::ModifiedExponential { b, eps }),
        (0.05f64..0.3, 0.02f64..0.3)
            .prop_map(|(delta, eps)| DecayScheme::ModifiedLinear { delta, eps }),
    ]
}

fn variant_strategy() -> impl Strategy<Value = Variant> {
    prop_oneof![Just(Variant::Sine), Just(Variant::Cosine)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn boundary_matches_formula(
        variant in variant_strategy(),
        n in 2usize..=9,
        p in 0.01f64..=1.0,
        decay in decay_strategy(),
        u in 0.0f64..1.0,
    ) {
        let spec = CurveSpec::new(variant, n, p, decay).unwrap();
        let (lo, hi) = variant.domain();
        let x = lo + (hi - lo) * u;
        for i in 0..n {
            let got = spec.eval_half_turns(i, x / PI);
            let want = oracle_f(variant, spec.lambda(i), p, i, x);
            prop_assert!((got - want).abs() < 1e-9, "i={i} x={x} got {got} want {want}");
            prop_assert!(got.abs() <= spec.lambda(i) + 1e-12);
        }
    }

    #[test]
    fn amplitudes_decrease_and_stay_below_one(
        n in 2usize..=12,
        decay in decay_strategy(),
    ) {
        let spec = CurveSpec::new(Variant::Cosine, n, 0.5, decay).unwrap();
        let l = spec.lambdas();
        prop_assert!(l[0] < 1.0);
        prop_assert!(l.windows(2).all(|w| w[1] <= w[0]));
        prop_assert!(l.iter().all(|&v| v >= 0.0));
    }

    #[test]
    fn sine_boundaries_are_odd(n in 2usize..=8, p in 0.05f64..=1.0, u in 0.0f64..1.0) {
        let spec = CurveSpec::new(Variant::Sine, n, p, DecayScheme::Linear).unwrap();
        let x = u;
        for i in 0..n {
            let a = spec.eval_half_turns(i, x);
            let b = spec.eval_half_turns(i, -x);
            prop_assert!((a + b).abs() < 1e-12);
        }
    }

    #[test]
    fn radial_rule_matches_formula(
        variant in variant_strategy(),
        n in 2usize..=8,
        p in 0.05f64..=1.0,
        decay in decay_strategy(),
        r in 0.01f64..2.0,
        t in -PI..PI,
    ) {
        let spec = CurveSpec::new(variant, n, p, decay).unwrap();
        let point = Point::from_polar(r, t);
        let x = match variant {
            Variant::Sine => point.angle(),
            Variant::Cosine => point.angle().rem_euclid(2.0 * PI) + 2.0 * PI,
        };
        let got = classify_point(&spec, point);
        for i in 0..n {
            let edge = 1.0 + oracle_f(variant, spec.lambda(i), p, i, x);
            if (r - edge).abs() > 1e-9 {
                prop_assert_eq!(got.contains(i), r < edge, "curve {}", i);
            }
        }
    }

    #[test]
    fn json_ingestion_conserves(
        n in 1usize..=6,
        rows in prop::collection::vec(any::<u8>(), 0..300),
    ) {
        let names: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
        let mut sets = serde_json::Map::new();
        let mut loose = Vec::new();
        for (i, name) in names.iter().enumerate() {
            let ids: Vec<String> = rows
                .iter()
                .enumerate()
                .filter(|(_, &bits)| bits >> i & 1 == 1)
                .map(|(e, _)| format!("e{e}"))
                .collect();
            sets.insert(name.clone(), ids.into());
        }
        for (e, &bits) in rows.iter().enumerate() {
            if bits & ((1 << n) - 1) == 0 {
                loose.push(format!("e{e}"));
            }
        }
        let doc = serde_json::json!({ "sets": sets, "elements": loose });
        let data = parse_json(&doc.to_string(), "prop").unwrap();
        prop_assert_eq!(&data.set_names, &names);
        let counts = count_regions(&data);
        prop_assert_eq!(counts.total(), rows.len());
        for (e, &bits) in rows.iter().enumerate() {
            let want = RegionMask(bits as u32 & ((1 << n) - 1));
            prop_assert_eq!(data.elements[&format!("e{e}")], want);
        }
    }
}

/// Every consecutive pair of the cyclic sequence differs in one bit.
fn is_cyclic_gray(seq: &[RegionMask]) -> bool {
    (0..seq.len()).all(|k| (seq[k].0 ^ seq[(k + 1) % seq.len()].0).count_ones() == 1)
}

#[test]
fn cosine_sweep_is_gray_code_up_to_constant() {
    for n in 1..=10 {
        let gray = gray_order(n).sequence;
        let sweep = sign_sweep(Variant::Cosine, n, 8);
        assert_eq!(sweep.len(), gray.len(), "n={n}");
        let offset = sweep[0].0 ^ gray[0].0;
        for (s, g) in sweep.iter().zip(&gray) {
            assert_eq!(s.0 ^ g.0, offset, "n={n}");
        }
        assert!(is_cyclic_gray(&sweep), "n={n}");
    }
}

#[test]
fn sine_sweep_counts_in_binary() {
    for n in 1..=10 {
        let sweep = sign_sweep(Variant::Sine, n, 8);
        let slots = 1u32 << n;
        let want: Vec<RegionMask> = (0..slots)
            .map(|k| {
                // Slot k covers x in (-π + 2πk/2^n, -π + 2π(k+1)/2^n); sin(2^i x)
                // is positive iff floor(2^i x / π) is even.
                let x = -PI + 2.0 * PI * (k as f64 + 0.5) / slots as f64;
                let mut m = 0;
                for i in 0..n {
                    let q = (2f64.powi(i as i32) * x / PI).floor() as i64;
                    if q.rem_euclid(2) == 0 {
                        m |= 1 << i;
                    }
                }
                RegionMask(m)
            })
            .collect();
        assert_eq!(sweep, want, "n={n}");
        if n >= 2 {
            assert!(!is_cyclic_gray(&sweep), "n={n}");
        }
    }
}

#[test]
fn even_odd_backend_agrees_with_radial_rule() {
    for id in ["fig-linear-sine-n4", "fig-heuristic-cosine", "fig-sine-exp", "fig-weights-n6"] {
        let spec = presets::find(id).unwrap().spec().unwrap();
        let curves: Vec<Vec<Point>> = sample_all(&spec, 64)
            .unwrap()
            .into_iter()
            .map(|b| b.projected)
            .collect();
        let radial = rasterize(&spec, 1024).unwrap();
        let geometry = GridGeometry::new(1024, DEFAULT_EXTENT);
        let even_odd = rasterize_even_odd(&curves, geometry, DEFAULT_FRAME_RADIUS).unwrap();
        let same = radial
            .cells()
            .iter()
            .zip(even_odd.cells())
            .filter(|(a, b)| a == b)
            .count();
        let frac = same as f64 / radial.cells().len() as f64;
        assert!(frac >= 0.999, "{id}: agreement {frac}");
    }
}

#[test]
fn areas_are_stable_under_refinement() {
    for id in ["fig-linear-cosine-n4", "fig-heuristic-cosine", "fig-weights-n6"] {
        let spec = presets::find(id).unwrap().spec().unwrap();
        let coarse = FanDiagram::build(&spec, 1024).unwrap();
        let fine = FanDiagram::build(&spec, 2048).unwrap();
        assert_eq!(coarse.grid.census(), fine.grid.census(), "{id}");
        for (mask, &a) in &fine.report.areas {
            let b = coarse.report.areas[mask];
            // Boundary cells dominate the error: one cell of perimeter per
            // 1/1024 of the frame width.
            assert!((a - b).abs() <= 0.02 * a + 2e-4, "{id} {mask:?}: {a} vs {b}");
        }
    }
}
