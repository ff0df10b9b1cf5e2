//! Named parameter sets, addressed on the command line as `--preset <id>`.

use crate::curves::{CurveSpec, DecayScheme, Variant};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Preset {
    pub id: &'static str,
    pub description: &'static str,
    pub variant: Variant,
    pub n: usize,
    pub p: f64,
    pub decay: DecayScheme,
}

impl Preset {
    pub fn spec(&self) -> Result<CurveSpec> {
        CurveSpec::new(self.variant, self.n, self.p, self.decay)
    }
}

const fn linear_mod(delta: f64, eps: f64) -> DecayScheme {
    DecayScheme::ModifiedLinear { delta, eps }
}

const fn exp(b: f64) -> DecayScheme {
    DecayScheme::ModifiedExponential { b, eps: 0.0 }
}

macro_rules! preset {
    ($id:literal, $desc:literal, $v:ident, $n:literal, $p:expr, $d:expr) => {
        Preset {
            id: $id,
            description: $desc,
            variant: Variant::$v,
            n: $n,
            p: $p,
            decay: $d,
        }
    };
}

const LINEAR: DecayScheme = DecayScheme::Linear;

/// Every shipped preset.
pub const PRESETS: &[Preset] = &[
    preset!("fig-linear-sine-n2", "sine, linear decay, p=1/3", Sine, 2, 1.0 / 3.0, LINEAR),
    preset!("fig-linear-sine-n3", "sine, linear decay, p=1/3", Sine, 3, 1.0 / 3.0, LINEAR),
    preset!("fig-linear-sine-n4", "sine, linear decay, p=1/3", Sine, 4, 1.0 / 3.0, LINEAR),
    preset!("fig-linear-sine-n5", "sine, linear decay, p=1/3", Sine, 5, 1.0 / 3.0, LINEAR),
    preset!("fig-linear-cosine-n2", "cosine, linear decay, p=1/2", Cosine, 2, 0.5, LINEAR),
    preset!("fig-linear-cosine-n3", "cosine, linear decay, p=1/2", Cosine, 3, 0.5, LINEAR),
    preset!("fig-linear-cosine-n4", "cosine, linear decay, p=1/2", Cosine, 4, 0.5, LINEAR),
    preset!("fig-linear-cosine-n5", "cosine, linear decay, p=1/2", Cosine, 5, 0.5, LINEAR),
    preset!("fig-strip-linear", "sine, linear decay, unshaped", Sine, 6, 1.0, LINEAR),
    preset!("fig-strip-linear-shaped", "sine, linear decay, p=1/5", Sine, 6, 0.2, LINEAR),
    preset!("fig-sine-linear", "sine, linear decay, p=1/3", Sine, 6, 1.0 / 3.0, LINEAR),
    preset!("fig-sine-exp", "sine, b=4/5, p=1/5", Sine, 6, 0.2, exp(0.8)),
    preset!("fig-cosine-linear", "cosine, linear decay, p=1/2", Cosine, 6, 0.5, LINEAR),
    preset!("fig-weights-n6", "cosine, p=1/5, delta=1/3, eps=1/9", Cosine, 6, 0.2, linear_mod(1.0 / 3.0, 1.0 / 9.0)),
    preset!("fig-weights-n7", "cosine, p=1/5, delta=1/3, eps=1/9", Cosine, 7, 0.2, linear_mod(1.0 / 3.0, 1.0 / 9.0)),
    preset!("fig-extreme-sine", "sine, p=1/1000, b=5/6", Sine, 6, 1e-3, exp(5.0 / 6.0)),
    preset!("fig-extreme-cosine", "cosine, p=1/1000, b=5/6", Cosine, 6, 1e-3, exp(5.0 / 6.0)),
    preset!("fig-unmodified-sine", "sine, p=1, b=1/2", Sine, 6, 1.0, exp(0.5)),
    preset!("fig-unmodified-cosine", "cosine, p=1, b=1/2", Cosine, 6, 1.0, exp(0.5)),
    preset!("fig-heuristic-sine", "sine, p=1/5, delta=1/4, eps=1/7", Sine, 6, 0.2, linear_mod(0.25, 1.0 / 7.0)),
    preset!("fig-heuristic-cosine", "cosine, p=1/5, delta=1/4, eps=1/7", Cosine, 6, 0.2, linear_mod(0.25, 1.0 / 7.0)),
    preset!("fig-sine-n7", "sine, p=1/7, delta=1/4, eps=1/7", Sine, 7, 1.0 / 7.0, linear_mod(0.25, 1.0 / 7.0)),
    preset!("fig-cosine-n7", "cosine, p=1/7, delta=1/4, eps=1/7", Cosine, 7, 1.0 / 7.0, linear_mod(0.25, 1.0 / 7.0)),
    preset!("fig-sine-n8", "sine, p=1/7, delta=1/5, eps=1/8", Sine, 8, 1.0 / 7.0, linear_mod(0.2, 0.125)),
    preset!("fig-cosine-n8", "cosine, p=1/7, delta=1/5, eps=1/8", Cosine, 8, 1.0 / 7.0, linear_mod(0.2, 0.125)),
    preset!("fig-sine-n9", "sine, p=1/7, delta=1/6, eps=1/8", Sine, 9, 1.0 / 7.0, linear_mod(1.0 / 6.0, 0.125)),
    preset!("fig-cosine-n9", "cosine, p=1/7, delta=1/6, eps=1/8", Cosine, 9, 1.0 / 7.0, linear_mod(1.0 / 6.0, 0.125)),
];

pub fn find(id: &str) -> Result<&'static Preset> {
    PRESETS.iter().find(|p| p.id == id).ok_or_else(|| {
        Error::invalid(
            "preset",
            format!(
                "unknown preset `{id}`; known: {}",
                PRESETS.iter().map(|p| p.id).collect::<Vec<_>>().join(", ")
            ),
        )
    })
}
