//! Parsing of numeric parameters given as decimals or `a/b` fractions.

use crate::error::{Error, Result};

/// Parses `"0.25"`, `"1/4"`, `" 3 / 8 "` and the like.
pub fn parse_fraction(s: &str) -> std::result::Result<f64, String> {
    let s = s.trim();
    let v = match s.split_once('/') {
        Some((a, b)) => {
            let a: f64 = a.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
            let b: f64 = b.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
            if b == 0.0 {
                return Err(format!("zero denominator in `{s}`"));
            }
            a / b
        }
        None => s.parse().map_err(|_| format!("`{s}` is not a number or a/b fraction"))?,
    };
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("`{s}` is not finite"))
    }
}

/// [`parse_fraction`] with the error attributed to parameter `name`.
pub fn fraction(name: &'static str, s: &str) -> Result<f64> {
    parse_fraction(s).map_err(|reason| Error::invalid(name, reason))
}
