//! Set-membership ingestion and per-region element counts.
//!
//! CSV: a header `id,<set 1>,…,<set n>` followed by one row per element with
//! `0`/`1` cells. JSON: `{"sets": {"<name>": ["<id>", …], …}}`, optionally
//! with `"elements": [...]` listing ids that may belong to no set. Bit `i` of
//! a mask is the `i`-th set in file order.

use crate::error::{Error, Result};
use crate::regions::RegionMask;
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

/// Largest set count accepted from data files.
pub const MAX_DATA_SETS: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl Format {
    /// Guesses the format from the file extension.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "csv" => Some(Format::Csv),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MembershipData {
    pub set_names: Vec<String>,
    pub elements: BTreeMap<String, RegionMask>,
}

impl MembershipData {
    pub fn n(&self) -> usize {
        self.set_names.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegionCounts {
    pub n: usize,
    /// Every mask in `0..2^n`, zeros included.
    pub counts: BTreeMap<RegionMask, usize>,
}

impl RegionCounts {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Counts as label text.
    pub fn texts(&self) -> BTreeMap<RegionMask, String> {
        self.counts.iter().map(|(&m, c)| (m, c.to_string())).collect()
    }
}

impl Serialize for RegionCounts {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_map(self.counts.iter().map(|(m, c)| (m.to_bit_string(self.n), c)))
    }
}

fn ingest_err(origin: &str, reason: impl Into<String>) -> Error {
    Error::Ingest {
        path: origin.to_string(),
        reason: reason.into(),
    }
}

fn check_names(origin: &str, names: &[String]) -> Result<()> {
    if names.is_empty() || names.len() > MAX_DATA_SETS {
        return Err(ingest_err(
            origin,
            format!("need 1..={MAX_DATA_SETS} sets, found {}", names.len()),
        ));
    }
    for (k, a) in names.iter().enumerate() {
        if names[..k].contains(a) {
            return Err(ingest_err(origin, format!("duplicate set name `{a}`")));
        }
    }
    Ok(())
}

pub fn parse_csv<R: Read>(reader: R, origin: &str) -> Result<MembershipData> {
    let mut rdr = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let header = rdr.headers()?.clone();
    if header.len() < 2 {
        return Err(ingest_err(origin, "header must be `id,<set 1>,...`"));
    }
    let set_names: Vec<String> = header.iter().skip(1).map(str::to_string).collect();
    check_names(origin, &set_names)?;
    let mut elements = BTreeMap::new();
    for (line, rec) in rdr.records().enumerate() {
        let rec = rec?;
        let row = line + 2;
        let id = rec.get(0).unwrap_or_default().to_string();
        let mut mask = RegionMask::EMPTY;
        for i in 0..set_names.len() {
            match rec.get(i + 1) {
                Some("1") => mask = mask.with(i),
                Some("0") => {}
                other => {
                    return Err(ingest_err(
                        origin,
                        format!("row {row}, set `{}`: expected 0 or 1, got {other:?}", set_names[i]),
                    ))
                }
            }
        }
        if elements.insert(id.clone(), mask).is_some() {
            return Err(ingest_err(origin, format!("row {row}: duplicate id `{id}`")));
        }
    }
    Ok(MembershipData {
        set_names,
        elements,
    })
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDoc {
    sets: serde_json::Map<String, serde_json::Value>,
    #[serde(default)]
    elements: Vec<String>,
}

pub fn parse_json(text: &str, origin: &str) -> Result<MembershipData> {
    let doc: JsonDoc =
        serde_json::from_str(text).map_err(|e| ingest_err(origin, e.to_string()))?;
    let set_names: Vec<String> = doc.sets.keys().cloned().collect();
    check_names(origin, &set_names)?;
    let mut elements: BTreeMap<String, RegionMask> = BTreeMap::new();
    for id in doc.elements {
        if elements.insert(id.clone(), RegionMask::EMPTY).is_some() {
            return Err(ingest_err(origin, format!("duplicate element `{id}`")));
        }
    }
    for (i, (name, ids)) in doc.sets.iter().enumerate() {
        let ids: Vec<String> = serde_json::from_value(ids.clone())
            .map_err(|_| ingest_err(origin, format!("set `{name}` must be a list of ids")))?;
        let mut seen = std::collections::BTreeSet::new();
        for id in ids {
            if !seen.insert(id.clone()) {
                return Err(ingest_err(
                    origin,
                    format!("set `{name}` lists `{id}` twice"),
                ));
            }
            let m = elements.entry(id).or_insert(RegionMask::EMPTY);
            *m = m.with(i);
        }
    }
    Ok(MembershipData {
        set_names,
        elements,
    })
}

pub fn ingest(path: &Path, format: Format) -> Result<MembershipData> {
    let origin = path.display().to_string();
    let text = std::fs::read_to_string(path)?;
    match format {
        Format::Csv => parse_csv(text.as_bytes(), &origin),
        Format::Json => parse_json(&text, &origin),
    }
}

pub fn count_regions(data: &MembershipData) -> RegionCounts {
    let n = data.n();
    let mut counts: BTreeMap<RegionMask, usize> =
        RegionMask::all_masks(n).map(|m| (m, 0)).collect();
    for m in data.elements.values() {
        *counts.entry(*m).or_insert(0) += 1;
    }
    RegionCounts { n, counts }
}
