use serde::{Deserialize, Serialize};
use std::fmt;

/// Membership vector of one point: bit `i` is set iff the point lies inside
/// curve `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RegionMask(pub u32);

impl RegionMask {
    pub const EMPTY: RegionMask = RegionMask(0);

    pub fn all(n: usize) -> Self {
        RegionMask(((1u64 << n) - 1) as u32)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    pub fn with(self, i: usize) -> Self {
        RegionMask(self.0 | 1 << i)
    }

    pub fn count(self) -> u32 {
        self.0.count_ones()
    }

    /// Binary string with set 0 first, e.g. `"10"` for "in set 0 only" when
    /// `n = 2`.
    pub fn to_bit_string(self, n: usize) -> String {
        (0..n).map(|i| if self.contains(i) { '1' } else { '0' }).collect()
    }

    /// Inverse of [`RegionMask::to_bit_string`].
    pub fn parse_bit_string(s: &str) -> Option<Self> {
        if s.is_empty() || s.len() > 32 {
            return None;
        }
        let mut bits = 0u32;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << i,
                '0' => {}
                _ => return None,
            }
        }
        Some(RegionMask(bits))
    }

    /// All masks of an `n`-set diagram in numeric order.
    pub fn all_masks(n: usize) -> impl Iterator<Item = RegionMask> {
        (0..1u32 << n).map(RegionMask)
    }
}

impl fmt::Display for RegionMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}
