use super::mask::RegionMask;
use super::report::DiagramReport;
use crate::error::{Error, Result};
use serde::Serialize;

pub const HISTOGRAM_BINS: usize = 20;

/// Bin counts over `edges` (len = counts + 1) in log10 space.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub counts: Vec<usize>,
}

/// Summary of log10 normalized region areas.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AreaStats {
    pub regions: usize,
    /// Smallest normalized area (linear, not log).
    pub min_area: f64,
    pub max_area: f64,
    pub mean_log10: f64,
    pub std_log10: f64,
    #[serde(serialize_with = "serialize_masks")]
    pub excluded: Vec<RegionMask>,
    pub log10_areas: Vec<f64>,
    pub histogram: Histogram,
}

fn serialize_masks<S: serde::Serializer>(
    masks: &[RegionMask],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(masks.iter().map(|m| m.bits()))
}

/// Log-area statistics over every mask that does not reach the raster edge.
///
/// Masks touching the edge are the frame complement (always the empty mask
/// for fan diagrams) and have no meaningful bounded area.
pub fn area_stats(report: &DiagramReport) -> Result<AreaStats> {
    let empty = report.empty_masks();
    if !empty.is_empty() {
        return Err(Error::EmptyMasks(
            empty.iter().map(|m| m.to_bit_string(report.n)).collect(),
        ));
    }
    let logs: Vec<f64> = report
        .areas
        .iter()
        .filter(|(m, _)| !report.outer_masks.contains(m))
        .map(|(_, a)| a.log10())
        .collect();
    if logs.is_empty() {
        return Err(Error::invalid("report", "no bounded regions"));
    }
    let k = logs.len() as f64;
    let mean = logs.iter().sum::<f64>() / k;
    let var = logs.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / k;
    let lo = logs.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let histogram = log_histogram(&logs, lo, hi, HISTOGRAM_BINS);
    Ok(AreaStats {
        regions: logs.len(),
        min_area: 10f64.powf(lo),
        max_area: 10f64.powf(hi),
        mean_log10: mean,
        std_log10: var.sqrt(),
        excluded: report.outer_masks.clone(),
        log10_areas: logs,
        histogram,
    })
}

/// Equal-width bins on `[lo, hi]`; the last bin is closed. Values outside are dropped.
pub fn log_histogram(values: &[f64], lo: f64, hi: f64, bins: usize) -> Histogram {
    let bins = bins.max(1);
    let (lo, hi) = if hi > lo { (lo, hi) } else { (lo - 0.5, lo + 0.5) };
    let w = (hi - lo) / bins as f64;
    let edges = (0..=bins).map(|k| lo + w * k as f64).collect();
    let mut counts = vec![0; bins];
    for &v in values {
        if v < lo || v > hi {
            continue;
        }
        let k = (((v - lo) / w) as usize).min(bins - 1);
        counts[k] += 1;
    }
    Histogram { edges, counts }
}
