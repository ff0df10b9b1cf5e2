//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! `cargo test --release --test acceptance`
//!
//! Criteria listed in `KNOWN_FAILURES` are evaluated exactly like the rest
//! and print FAIL, but do not fail the process unless `ACCEPTANCE_STRICT=1`.
//! Any other failure exits non-zero.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};
use vennfan::curves::{CurveSpec, DecayScheme, Variant};
use vennfan::data::{count_regions, parse_csv};
use vennfan::edwards::{default_sides, StereoVariant};
use vennfan::labels::{
    gray_order, primary_components, sign_sweep, visual_center, LabelConfig, Strategy,
    RADIAL_RADIUS,
};
use vennfan::presets::PRESETS;
use vennfan::regions::{
    area_stats, strip_census, CellSet, GridGeometry, RegionComponent, RegionMask, Simplicity,
};
use vennfan::{CogwheelPlanar, FanDiagram};

const RESOLUTION: usize = 2048;
/// Per-preset budget for `verify` at full resolution.
const VERIFY_BUDGET: Duration = Duration::from_secs(30);
/// Std-of-log-area comparison slack.
const STD_SLACK: f64 = 1.05;
/// Radial anchor radius tolerance.
const RADIAL_TOL: f64 = 1e-6;
/// Gray sweep samples per slot and time budget.
const SWEEP_SAMPLES: usize = 16;
const SWEEP_BUDGET: Duration = Duration::from_secs(1);

/// Criteria that fail for reasons recorded in the project's decision notes.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    5,
    "the sine family's sign sweep visits masks in binary-counting order, which is not a Gray code for n >= 2",
)];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

/// Everything the per-preset criteria need, computed once.
struct PresetRun {
    id: &'static str,
    verify_time: Duration,
    independent: bool,
    census_match: bool,
    chord_violations: Vec<String>,
    radial_violations: Vec<String>,
    segments: usize,
}

fn run_preset(p: &vennfan::presets::Preset) -> PresetRun {
    let spec = p.spec().expect("preset spec");
    let t = Instant::now();
    let d = FanDiagram::build(&spec, RESOLUTION).expect("build");
    let verify_time = t.elapsed();
    let census_match = strip_census(&spec, RESOLUTION) == d.grid.census();
    let plan = d.plan(&LabelConfig::default()).expect("plan");
    let primary = primary_components(&d.components);
    let cell = d.grid.geometry().cell_size();
    let mut chord_violations = Vec::new();
    let mut radial_violations = Vec::new();
    let mut segments = 0;
    for (mask, e) in &plan.entries {
        match e.strategy {
            Strategy::Segment => {
                segments += 1;
                let (a, b) = e.chord.expect("segment has a chord");
                let comp = primary[mask];
                let steps = (a.dist(b) / cell).ceil().max(1.0) as usize;
                if let Some(k) =
                    (0..=steps).find(|&k| !comp.contains_point(a.lerp(b, k as f64 / steps as f64)))
                {
                    chord_violations.push(format!("{} step {k}/{steps}", mask.to_bit_string(p.n)));
                }
            }
            Strategy::Radial => {
                let r = e.anchor.norm();
                if (r - RADIAL_RADIUS).abs() > RADIAL_TOL {
                    radial_violations.push(format!("{} r={r}", mask.to_bit_string(p.n)));
                }
            }
            Strategy::VisualCenter => {}
        }
    }
    PresetRun {
        id: p.id,
        verify_time,
        independent: d.report.is_independent_family,
        census_match,
        chord_violations,
        radial_violations,
        segments,
    }
}

fn criterion_1(runs: &[PresetRun]) -> Outcome {
    let bad: Vec<_> = runs.iter().filter(|r| !r.independent).map(|r| r.id).collect();
    let slow: Vec<_> = runs
        .iter()
        .filter(|r| r.verify_time > VERIFY_BUDGET)
        .map(|r| r.id)
        .collect();
    let worst = runs.iter().map(|r| r.verify_time).max().unwrap_or_default();
    outcome(
        bad.is_empty() && slow.is_empty(),
        format!(
            "{} presets at {RESOLUTION}; incomplete {bad:?}; over budget {slow:?}; slowest {:.1}s",
            runs.len(),
            worst.as_secs_f64()
        ),
    )
}

fn unmodified_cosine(n: usize) -> CurveSpec {
    CurveSpec::new(
        Variant::Cosine,
        n,
        1.0,
        DecayScheme::ModifiedExponential { b: 0.5, eps: 0.0 },
    )
    .expect("spec")
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for n in 3..=7 {
        let spec = unmodified_cosine(n);
        let mut d = FanDiagram::build(&spec, RESOLUTION).expect("build");
        if d.report.is_simple == Simplicity::Unknown {
            d = FanDiagram::build(&spec, 2 * RESOLUTION).expect("build");
        }
        let r = &d.report;
        let one_each =
            r.components_per_mask.len() == 1 << n && r.components_per_mask.values().all(|&k| k == 1);
        let ok = one_each && r.is_venn && r.is_simple == Simplicity::Simple;
        pass &= ok;
        notes.push(format!(
            "n={n}:{} (tiny {})",
            if ok { "ok" } else { "bad" },
            r.tiny_regions.len()
        ));
        if !ok {
            notes.push(format!(
                "(masks {}, max comps {}, venn {}, simple {:?})",
                r.components_per_mask.len(),
                r.components_per_mask.values().max().unwrap_or(&0),
                r.is_venn,
                r.is_simple
            ));
        }
    }
    outcome(pass, notes.join(" "))
}

fn criterion_3() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for n in 3..=7 {
        let e = CogwheelPlanar::build(n, &default_sides(n), StereoVariant::Below, RESOLUTION)
            .expect("cogwheel");
        let mut per_mask: BTreeMap<RegionMask, usize> = BTreeMap::new();
        for c in &e.components {
            *per_mask.entry(c.mask).or_default() += 1;
        }
        let ok = per_mask.len() == 1 << n && per_mask.values().all(|&k| k == 1);
        pass &= ok;
        notes.push(format!("n={n}:{}/{}{}", per_mask.len(), 1 << n, if ok { "" } else { " bad" }));
    }
    outcome(pass, notes.join(" "))
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    let mut pass = true;
    for n in [6, 7] {
        let spec = CurveSpec::new(
            Variant::Cosine,
            n,
            0.2,
            DecayScheme::ModifiedLinear {
                delta: 1.0 / 3.0,
                eps: 1.0 / 9.0,
            },
        )
        .expect("spec");
        let fan = FanDiagram::build(&spec, RESOLUTION).expect("build");
        let ed = CogwheelPlanar::build(n, &default_sides(n), StereoVariant::Below, RESOLUTION)
            .expect("cogwheel");
        let fs = area_stats(&fan.report).expect("fan stats");
        let es = area_stats(&ed.report).expect("edwards stats");
        let ok = fs.min_area > es.min_area && fs.std_log10 < STD_SLACK * es.std_log10;
        pass &= ok;
        notes.push(format!(
            "n={n}: min {:.2e} vs {:.2e}, std {:.3} vs {:.3}",
            fs.min_area, es.min_area, fs.std_log10, es.std_log10
        ));
    }
    outcome(pass, notes.join("; "))
}

fn criterion_5() -> Outcome {
    let t = Instant::now();
    let mut first_bad = None;
    for n in 1..=10 {
        let sweep = sign_sweep(Variant::Sine, n, SWEEP_SAMPLES);
        if gray_order(n).sequence != sweep {
            first_bad.get_or_insert(n);
        }
    }
    let elapsed = t.elapsed();
    let pass = first_bad.is_none() && elapsed < SWEEP_BUDGET;
    let detail = match first_bad {
        None => format!("n=1..10 match in {:.0} ms", elapsed.as_secs_f64() * 1e3),
        Some(n) => {
            let show = |s: &[RegionMask]| {
                s.iter()
                    .map(|m| m.to_bit_string(n))
                    .collect::<Vec<_>>()
                    .join(",")
            };
            format!(
                "first mismatch at n={n}: gray [{}] sweep [{}]",
                show(&gray_order(n).sequence),
                show(&sign_sweep(Variant::Sine, n, SWEEP_SAMPLES))
            )
        }
    };
    outcome(pass, detail)
}

const FIXTURE_RES: usize = 96;

fn fixture(name: &str) -> Vec<(usize, usize)> {
    let center = 47.5;
    let all = (0..FIXTURE_RES).flat_map(|r| (0..FIXTURE_RES).map(move |c| (r, c)));
    let keep = |r: usize, c: usize| -> bool {
        let (y, x) = (r as f64 - center, c as f64 - center);
        match name {
            "disk" => x.hypot(y) < 30.0,
            "rectangle" => (20..=75).contains(&c) && (35..=60).contains(&r),
            "L" => {
                ((10..=85).contains(&r) && (10..=30).contains(&c))
                    || ((66..=85).contains(&r) && (10..=80).contains(&c))
            }
            "C" => {
                let d = x.hypot(y);
                (25.0..40.0).contains(&d) && !(x > 0.0 && y.abs() < 12.0)
            }
            "annular-sector" => {
                let d = x.hypot(y);
                let a = y.atan2(x).to_degrees();
                (18.0..44.0).contains(&d) && (-20.0..110.0).contains(&a)
            }
            "two-bumps" => {
                (x + 15.0).hypot(y) < 16.0 || (x - 18.0).hypot(y - 4.0) < 20.0
            }
            _ => unreachable!(),
        }
    };
    all.filter(|&(r, c)| keep(r, c)).collect()
}

/// Argmax over cells of the distance to the nearest outside cell center,
/// lowest `(row, col)` winning ties. Squared integer distances keep the
/// comparison exact.
fn brute_force_center(cells: &[(usize, usize)]) -> ((usize, usize), i64) {
    let set: std::collections::HashSet<_> = cells.iter().copied().collect();
    let pad = 2isize;
    let lo = -pad;
    let hi = FIXTURE_RES as isize + pad;
    let outside: Vec<(isize, isize)> = (lo..hi)
        .flat_map(|r| (lo..hi).map(move |c| (r, c)))
        .filter(|&(r, c)| {
            r < 0
                || c < 0
                || r >= FIXTURE_RES as isize
                || c >= FIXTURE_RES as isize
                || !set.contains(&(r as usize, c as usize))
        })
        .collect();
    let mut sorted = cells.to_vec();
    sorted.sort();
    let mut best = ((0, 0), -1i64);
    for (r, c) in sorted {
        let d2 = outside
            .iter()
            .map(|&(or, oc)| {
                let (dr, dc) = (or as i64 - r as i64, oc as i64 - c as i64);
                dr * dr + dc * dc
            })
            .min()
            .expect("outside is nonempty");
        if d2 > best.1 {
            best = ((r, c), d2);
        }
    }
    best
}

fn criterion_6() -> Outcome {
    let geometry = GridGeometry::new(FIXTURE_RES, 1.0);
    let mut notes = Vec::new();
    let mut pass = true;
    for name in ["disk", "rectangle", "L", "C", "annular-sector", "two-bumps"] {
        let cells = fixture(name);
        let comp = RegionComponent::from_cells(
            RegionMask(1),
            CellSet::from_cells(cells.iter().copied()),
            geometry,
            FIXTURE_RES * FIXTURE_RES,
        );
        let got = visual_center(&comp);
        let (want, d2) = brute_force_center(&cells);
        let ok = got.cell == want
            && (got.clearance / geometry.cell_size() - (d2 as f64).sqrt()).abs() < 1e-9;
        pass &= ok;
        notes.push(if ok {
            format!("{name} ok")
        } else {
            format!("{name} got {:?} want {want:?}", got.cell)
        });
    }
    outcome(pass, notes.join(", "))
}

fn criterion_7(runs: &[PresetRun]) -> Outcome {
    let chords: Vec<_> = runs
        .iter()
        .filter(|r| !r.chord_violations.is_empty())
        .map(|r| format!("{} {:?}", r.id, r.chord_violations))
        .collect();
    let radial: Vec<_> = runs
        .iter()
        .filter(|r| !r.radial_violations.is_empty())
        .map(|r| format!("{} {:?}", r.id, r.radial_violations))
        .collect();
    let segments: usize = runs.iter().map(|r| r.segments).sum();
    outcome(
        chords.is_empty() && radial.is_empty(),
        format!(
            "{segments} segment labels over {} presets; chord escapes {chords:?}; radial off-ring {radial:?}",
            runs.len()
        ),
    )
}

fn criterion_8(runs: &[PresetRun]) -> Outcome {
    let bad: Vec<_> = runs.iter().filter(|r| !r.census_match).map(|r| r.id).collect();
    outcome(
        bad.is_empty(),
        format!("{} presets; mismatched {bad:?}", runs.len()),
    )
}

fn run_cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_vennfan"))
        .args(args)
        .output()
        .expect("spawn vennfan");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn criterion_9() -> Outcome {
    let dirs = [
        tempfile::tempdir().expect("tempdir"),
        tempfile::tempdir().expect("tempdir"),
    ];
    let mut captured: Vec<BTreeMap<String, Vec<u8>>> = Vec::new();
    for dir in &dirs {
        let p = |f: &str| dir.path().join(f).to_string_lossy().into_owned();
        let data = p("members.csv");
        std::fs::write(&data, "id,A,B,C\nx,1,0,0\ny,1,1,0\nz,0,1,1\nw,1,1,1\n").expect("write");
        let commands: Vec<Vec<String>> = vec![
            vec!["generate", "--preset", "fig-heuristic-cosine", "--resolution", "1024", "--out", &p("g.svg"), "--report", &p("g.json"), "--labels", &p("g.labels.json"), "--png", &p("g.png")].into_iter().map(String::from).collect(),
            vec!["generate", "--variant", "sine", "--n", "3", "--p", "1/3", "--decay", "linear", "--data", &data, "--resolution", "512", "--out", &p("d.svg")].into_iter().map(String::from).collect(),
            vec!["verify", "--preset", "fig-sine-exp", "--resolution", "1024"].into_iter().map(String::from).collect(),
            vec!["areas", "--against", "edwards", "--n", "5", "--resolution", "1024", "--json", &p("a.json")].into_iter().map(String::from).collect(),
            vec!["edwards", "--n", "6", "--resolution", "1024", "--out", &p("e.svg"), "--report", &p("e.json")].into_iter().map(String::from).collect(),
            vec!["edwards", "--n", "5", "--projection", "equatorial", "--out", &p("q.svg")].into_iter().map(String::from).collect(),
        ];
        let mut files = BTreeMap::new();
        for (k, cmd) in commands.iter().enumerate() {
            let args: Vec<&str> = cmd.iter().map(String::as_str).collect();
            let (stdout, code) = run_cli(&args);
            files.insert(format!("cmd{k}.stdout"), stdout);
            files.insert(format!("cmd{k}.status"), code.to_string().into_bytes());
        }
        for entry in std::fs::read_dir(dir.path()).expect("read_dir") {
            let entry = entry.expect("entry");
            let name = entry.file_name().to_string_lossy().into_owned();
            files.insert(name, std::fs::read(entry.path()).expect("read"));
        }
        captured.push(files);
    }
    let names: Vec<_> = captured[0].keys().cloned().collect();
    let differing: Vec<_> = names
        .iter()
        .filter(|k| captured[0].get(*k) != captured[1].get(*k))
        .collect();
    let statuses: Vec<_> = (0..6)
        .map(|k| String::from_utf8_lossy(&captured[0][&format!("cmd{k}.status")]).into_owned())
        .collect();
    let all_ok = statuses.iter().all(|s| s == "0");
    outcome(
        differing.is_empty() && captured[0].keys().eq(captured[1].keys()) && all_ok,
        format!(
            "{} artifacts compared; differing {differing:?}; exit codes {statuses:?}",
            names.len()
        ),
    )
}

fn criterion_10() -> Outcome {
    const TRIALS: usize = 100;
    const ELEMENTS: usize = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..TRIALS {
        let n = rng.gen_range(1..=6);
        let density: f64 = rng.gen_range(0.05..0.95);
        let mut csv = String::from("id");
        for i in 0..n {
            csv.push_str(&format!(",set{i}"));
        }
        csv.push('\n');
        let mut truth = BTreeMap::new();
        for e in 0..ELEMENTS {
            let id = format!("e{e:04}");
            csv.push_str(&id);
            let mut bits = 0u32;
            for i in 0..n {
                let member = rng.gen_bool(density);
                bits |= (member as u32) << i;
                csv.push_str(if member { ",1" } else { ",0" });
            }
            csv.push('\n');
            truth.insert(id, RegionMask(bits));
        }
        let data = parse_csv(csv.as_bytes(), "generated").expect("parse");
        let counts = count_regions(&data);
        if counts.total() != ELEMENTS || data.elements != truth || counts.counts.len() != 1 << n {
            return outcome(false, format!("trial {trial} (n={n}) broke conservation"));
        }
    }
    outcome(true, format!("{TRIALS} trials of {ELEMENTS} elements, n in 1..=6"))
}

fn main() {
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let t = Instant::now();
    let runs: Vec<PresetRun> = PRESETS.iter().map(run_preset).collect();
    eprintln!("preset sweep: {:.1}s", t.elapsed().as_secs_f64());

    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "completeness sweep", criterion_1(&runs)),
        (2, "unmodified cosine is simple", criterion_2()),
        (3, "Edwards census", criterion_3()),
        (4, "area spread vs Edwards", criterion_4()),
        (5, "Gray code equals sine sweep", criterion_5()),
        (6, "visual center oracle", criterion_6()),
        (7, "segment containment", criterion_7(&runs)),
        (8, "strip/disc census agreement", criterion_8(&runs)),
        (9, "determinism", criterion_9()),
        (10, "ingestion conservation", criterion_10()),
    ];

    let mut unexpected = 0;
    for (k, name, o) in &results {
        let known = KNOWN_FAILURES.iter().find(|(id, _)| id == k);
        let tag = match (o.pass, known) {
            (true, _) => "PASS",
            (false, Some(_)) if !strict => "FAIL (known)",
            (false, _) => {
                unexpected += 1;
                "FAIL"
            }
        };
        println!("[{k:>2}] {tag}  {name}: {}", o.detail);
        if let (false, Some((_, why))) = (o.pass, known) {
            println!("      known: {why}");
        }
    }
    let passed = results.iter().filter(|r| r.2.pass).count();
    println!("{passed}/{} criteria pass", results.len());
    if unexpected > 0 {
        std::process::exit(1);
    }
}

