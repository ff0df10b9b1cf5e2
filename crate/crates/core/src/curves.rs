//! Shaped trigonometric boundaries and their projection onto the disc.
//!
//! Curve `i` of an `n`-set diagram is
//!
//! ```text
//! sine:    f_i(x) = λ(i) · sgn(sin(2^i x))     · |sin(2^i x)|^p,     x ∈ [-π, π]
//! cosine:  f_i(x) = λ(i) · sgn(cos(2^(i-1) x)) · |cos(2^(i-1) x)|^p, x ∈ [2π, 4π]
//! ```
//!
//! and is drawn in the plane as the closed curve `θ ↦ (1 + f_i)·(cos θ, sin θ)`.
//! Internally angles are carried in half-turns (`x / π`) so that every dyadic
//! zero of the family is hit exactly.

use crate::error::{Error, Result};
use crate::geometry::Point;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Largest set count accepted by [`CurveSpec::new`].
pub const MAX_SETS: usize = 12;

/// Default samples per sign half-wave of the fastest boundary.
pub const DEFAULT_SAMPLES_PER_FLIP: usize = 64;

/// ε substituted for a modified-exponential decay given with ε = 0, so that
/// `λ(0) = b^ε` stays strictly below one.
pub const EXP_EPS_GUARD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Sine,
    Cosine,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Sine => "sine",
            Variant::Cosine => "cosine",
        }
    }

    /// Domain of `x` in half-turns.
    pub fn domain_half_turns(self) -> (f64, f64) {
        match self {
            Variant::Sine => (-1.0, 1.0),
            Variant::Cosine => (2.0, 4.0),
        }
    }

    /// Domain of `x` in radians.
    pub fn domain(self) -> (f64, f64) {
        let (a, b) = self.domain_half_turns();
        (a * PI, b * PI)
    }

    /// Maps a polar angle (half-turns, any value) to the abscissa of the strip,
    /// in half-turns. The cosine strip starts at angle 0, the sine strip at -π.
    pub fn abscissa_for_angle(self, angle_ht: f64) -> f64 {
        match self {
            Variant::Sine => {
                let mut t = angle_ht.rem_euclid(2.0);
                if t > 1.0 {
                    t -= 2.0;
                }
                t
            }
            Variant::Cosine => angle_ht.rem_euclid(2.0) + 2.0,
        }
    }

    /// Polar angle (half-turns) of a strip abscissa (half-turns).
    pub fn angle_for_abscissa(self, x_ht: f64) -> f64 {
        match self {
            Variant::Sine => x_ht,
            Variant::Cosine => x_ht - 2.0,
        }
    }
}

/// Per-curve amplitude `λ(i)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "scheme", rename_all = "kebab-case")]
pub enum DecayScheme {
    /// `λ(i) = 2^-i`; the unshaped classical baseline.
    SmithExponential,
    /// `λ(i) = (n-1-i)/n`.
    Linear,
    /// `λ(i) = b^(i+ε)` for `i ≤ n-2`, `λ(n-1) = 0`.
    ModifiedExponential { b: f64, eps: f64 },
    /// Linear from `1-ε` at `i = 0` down to `δ` at `i = n-2`, `λ(n-1) = 0`.
    ModifiedLinear { delta: f64, eps: f64 },
}

/// Amplitude of curve `i` in an `n`-set diagram. Parameters are not validated
/// here; see [`CurveSpec::new`].
pub fn decay_value(scheme: DecayScheme, i: usize, n: usize) -> f64 {
    debug_assert!(i < n);
    match scheme {
        DecayScheme::SmithExponential => 0.5f64.powi(i as i32),
        DecayScheme::Linear => (n - 1 - i) as f64 / n as f64,
        DecayScheme::ModifiedExponential { b, eps } => {
            if i == n - 1 {
                0.0
            } else {
                b.powf(i as f64 + eps)
            }
        }
        DecayScheme::ModifiedLinear { delta, eps } => {
            if i == n - 1 {
                0.0
            } else if n == 2 {
                1.0 - eps
            } else {
                (delta + eps - 1.0) / (n - 2) as f64 * i as f64 - eps + 1.0
            }
        }
    }
}

/// Full parameterization of one diagram.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSpec {
    variant: Variant,
    n: usize,
    p: f64,
    decay: DecayScheme,
    #[serde(skip)]
    lambdas: Vec<f64>,
}

impl CurveSpec {
    /// Validates parameter ranges and precomputes the amplitudes.
    ///
    /// A modified-exponential decay given with `eps == 0` is stored with
    /// `eps = EXP_EPS_GUARD`.
    pub fn new(variant: Variant, n: usize, p: f64, decay: DecayScheme) -> Result<Self> {
        if !(2..=MAX_SETS).contains(&n) {
            return Err(Error::invalid("n", format!("must be in 2..={MAX_SETS}, got {n}")));
        }
        if !(p.is_finite() && p > 0.0) {
            return Err(Error::invalid("p", format!("must be > 0, got {p}")));
        }
        let decay = match decay {
            DecayScheme::ModifiedExponential { b, eps } => {
                if !(b.is_finite() && (0.5..1.0).contains(&b)) {
                    return Err(Error::invalid("b", format!("must be in [1/2, 1), got {b}")));
                }
                if !(eps.is_finite() && eps >= 0.0) {
                    return Err(Error::invalid("eps", format!("must be >= 0, got {eps}")));
                }
                let eps = if eps == 0.0 { EXP_EPS_GUARD } else { eps };
                DecayScheme::ModifiedExponential { b, eps }
            }
            DecayScheme::ModifiedLinear { delta, eps } => {
                if !(delta > 0.0 && delta < 1.0) {
                    return Err(Error::invalid("delta", format!("must be in (0, 1), got {delta}")));
                }
                if !(eps > 0.0 && eps < 1.0) {
                    return Err(Error::invalid("eps", format!("must be in (0, 1), got {eps}")));
                }
                if n >= 3 && delta >= 1.0 - eps {
                    return Err(Error::invalid(
                        "delta",
                        format!("must be below 1 - eps = {} for a decreasing decay", 1.0 - eps),
                    ));
                }
                decay
            }
            other => other,
        };
        let lambdas = (0..n).map(|i| decay_value(decay, i, n)).collect();
        Ok(Self {
            variant,
            n,
            p,
            decay,
            lambdas,
        })
    }

    /// Builds a spec with explicit amplitudes. Used for degenerate test
    /// configurations (e.g. two coincident boundaries); `decay` is kept only
    /// as a description.
    pub fn with_amplitudes(
        variant: Variant,
        p: f64,
        decay: DecayScheme,
        lambdas: Vec<f64>,
    ) -> Result<Self> {
        let n = lambdas.len();
        let mut spec = Self::new(variant, n, p, decay)?;
        if lambdas.iter().any(|l| !(l.is_finite() && *l >= 0.0)) {
            return Err(Error::invalid("lambda", "amplitudes must be finite and >= 0"));
        }
        spec.lambdas = lambdas;
        Ok(spec)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn decay(&self) -> DecayScheme {
        self.decay
    }

    pub fn lambda(&self, i: usize) -> f64 {
        self.lambdas[i]
    }

    pub fn lambdas(&self) -> &[f64] {
        &self.lambdas
    }

    /// Indices whose amplitude lets `|f_i|` reach 1.
    pub fn amplitude_violations(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| self.lambdas[i] >= 1.0).collect()
    }

    pub fn check_amplitudes(&self) -> Result<()> {
        let indices = self.amplitude_violations();
        if indices.is_empty() {
            Ok(())
        } else {
            Err(Error::AmplitudeTooLarge { indices })
        }
    }

    /// Number of sign half-waves of the fastest boundary over the domain.
    pub fn fastest_half_waves(&self) -> usize {
        match self.variant {
            Variant::Sine => 1 << self.n,
            Variant::Cosine => 1 << (self.n - 1),
        }
    }

    /// Unshaped trigonometric value of curve `i` at abscissa `x_ht` (half-turns).
    pub fn trig_half_turns(&self, i: usize, x_ht: f64) -> f64 {
        match self.variant {
            Variant::Sine => sin_pi(x_ht * (1u64 << i) as f64),
            Variant::Cosine => {
                let freq = if i == 0 { 0.5 } else { (1u64 << (i - 1)) as f64 };
                cos_pi(x_ht * freq)
            }
        }
    }

    /// `f_i` at abscissa `x_ht` given in half-turns.
    pub fn eval_half_turns(&self, i: usize, x_ht: f64) -> f64 {
        let s = self.trig_half_turns(i, x_ht);
        self.lambdas[i] * shape(s, self.p)
    }
}

/// `sgn(s)·|s|^p`, with `sgn(0) = 0`.
pub fn shape(s: f64, p: f64) -> f64 {
    if s == 0.0 {
        0.0
    } else if p == 1.0 {
        s
    } else {
        s.signum() * s.abs().powf(p)
    }
}

/// `sin(π t)` with exact zeros and extrema at multiples of 1/2.
pub fn sin_pi(t: f64) -> f64 {
    let r = t - 2.0 * (t * 0.5).round();
    if r == 0.0 || r.abs() == 1.0 {
        0.0
    } else if r == 0.5 {
        1.0
    } else if r == -0.5 {
        -1.0
    } else {
        (PI * r).sin()
    }
}

/// `cos(π t)` with exact zeros and extrema at multiples of 1/2.
pub fn cos_pi(t: f64) -> f64 {
    let r = t - 2.0 * (t * 0.5).round();
    if r == 0.0 {
        1.0
    } else if r.abs() == 1.0 {
        -1.0
    } else if r.abs() == 0.5 {
        0.0
    } else {
        (PI * r).cos()
    }
}

/// `f_i(x)` for `x` in radians.
pub fn shaped_trig(spec: &CurveSpec, i: usize, x: f64) -> f64 {
    spec.eval_half_turns(i, x / PI)
}

/// One boundary, both as strip samples and as its projected closed polyline.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SampledBoundary {
    pub index: usize,
    /// `(x, f_i(x))` with `x` in radians, monotone over the full domain.
    pub strip_samples: Vec<(f64, f64)>,
    /// Closed polyline; the first point is repeated at the end.
    pub projected: Vec<Point>,
    /// The straight piece closing the cosine curve 0, from `g_0(4π)` back to
    /// `g_0(2π)`.
    pub closure_segment: Option<(Point, Point)>,
}

/// Samples boundary `i` on a uniform grid that gives the fastest boundary at
/// least `samples_per_flip` points per sign half-wave, and projects it.
pub fn sample_boundary(
    spec: &CurveSpec,
    i: usize,
    samples_per_flip: usize,
) -> Result<SampledBoundary> {
    if samples_per_flip < 8 {
        return Err(Error::invalid(
            "samples_per_flip",
            format!("must be >= 8, got {samples_per_flip}"),
        ));
    }
    if i >= spec.n() {
        return Err(Error::invalid("i", format!("must be < n = {}", spec.n())));
    }
    spec.check_amplitudes()?;

    let variant = spec.variant();
    let (t0, t1) = variant.domain_half_turns();
    let steps = samples_per_flip * spec.fastest_half_waves();
    let span = t1 - t0;

    let mut strip_samples = Vec::with_capacity(steps + 1);
    let mut projected = Vec::with_capacity(steps + 2);
    for k in 0..=steps {
        let t = if k == steps {
            t1
        } else {
            t0 + span * k as f64 / steps as f64
        };
        let f = spec.eval_half_turns(i, t);
        strip_samples.push((t * PI, f));
        let angle = variant.angle_for_abscissa(t);
        let r = 1.0 + f;
        projected.push(Point::new(r * cos_pi(angle), r * sin_pi(angle)));
    }

    let mut closure_segment = None;
    let first = projected[0];
    let last = *projected.last().expect("non-empty");
    if first != last {
        closure_segment = Some((last, first));
        projected.push(first);
    }

    Ok(SampledBoundary {
        index: i,
        strip_samples,
        projected,
        closure_segment,
    })
}

/// All `n` boundaries of a spec.
pub fn sample_all(spec: &CurveSpec, samples_per_flip: usize) -> Result<Vec<SampledBoundary>> {
    (0..spec.n())
        .map(|i| sample_boundary(spec, i, samples_per_flip))
        .collect()
}
