use crate::curves::{cos_pi, sin_pi, Variant};
use crate::regions::RegionMask;
use serde::Serialize;

/// Binary-reflected Gray code over `n` sets.
///
/// Code bit `b` (least significant first) maps to set `n-1-b`, so the last
/// set flips most often.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrayOrder {
    pub n: usize,
    pub sequence: Vec<RegionMask>,
}

impl GrayOrder {
    /// Position of `mask` in the sequence.
    pub fn rank(&self, mask: RegionMask) -> Option<usize> {
        self.sequence.iter().position(|&m| m == mask)
    }
}

fn code_to_mask(code: u32, n: usize) -> RegionMask {
    let mut m = RegionMask::EMPTY;
    for b in 0..n {
        if code >> b & 1 == 1 {
            m = m.with(n - 1 - b);
        }
    }
    m
}

pub fn gray_order(n: usize) -> GrayOrder {
    assert!((1..=31).contains(&n), "gray_order needs 1 <= n <= 31");
    let sequence = (0..1u32 << n)
        .map(|k| code_to_mask(k ^ (k >> 1), n))
        .collect();
    GrayOrder { n, sequence }
}

/// Sign of the unshaped trig term of curve `i` at abscissa `x_ht`.
fn trig(variant: Variant, i: usize, x_ht: f64) -> f64 {
    match variant {
        Variant::Sine => sin_pi(x_ht * (1u64 << i) as f64),
        Variant::Cosine => {
            let freq = if i == 0 { 0.5 } else { (1u64 << (i - 1)) as f64 };
            cos_pi(x_ht * freq)
        }
    }
}

/// Bit `i` set iff the trig term of curve `i` is positive at `x_ht`.
pub fn sign_mask(variant: Variant, n: usize, x_ht: f64) -> RegionMask {
    let mut m = RegionMask::EMPTY;
    for i in 0..n {
        if trig(variant, i, x_ht) > 0.0 {
            m = m.with(i);
        }
    }
    m
}

/// Sign vectors met while sweeping the variant's domain left to right,
/// sampled at `2^n · samples_per_slot` interior points, consecutive repeats
/// removed.
pub fn sign_sweep(variant: Variant, n: usize, samples_per_slot: usize) -> Vec<RegionMask> {
    let (t0, t1) = variant.domain_half_turns();
    let steps = (1usize << n) * samples_per_slot.max(1);
    let mut out: Vec<RegionMask> = Vec::new();
    for k in 0..steps {
        let x = t0 + (t1 - t0) * (k as f64 + 0.5) / steps as f64;
        let m = sign_mask(variant, n, x);
        if out.last() != Some(&m) {
            out.push(m);
        }
    }
    out
}

/// One angular slot per sign-constancy interval: `(mask, θ)` with `θ` the
/// interval midpoint in radians, in sweep order.
///
/// Both families change sign only at multiples of `2π/2^n` on their domain,
/// so the `2^n` slots have equal width and distinct masks.
pub fn radial_slots(variant: Variant, n: usize) -> Vec<(RegionMask, f64)> {
    let (t0, t1) = variant.domain_half_turns();
    let slots = 1usize << n;
    (0..slots)
        .map(|k| {
            let mid = t0 + (t1 - t0) * (k as f64 + 0.5) / slots as f64;
            let theta = variant.angle_for_abscissa(mid) * std::f64::consts::PI;
            (sign_mask(variant, n, mid), theta)
        })
        .collect()
}
