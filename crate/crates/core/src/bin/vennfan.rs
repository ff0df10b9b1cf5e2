use clap::{Args, Parser, Subcommand, ValueEnum};
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use vennfan::curves::{CurveSpec, DecayScheme, Variant};
use vennfan::data::{count_regions, ingest, Format, MembershipData};
use vennfan::edwards::{build_cogwheel, default_sides, equatorial_project, StereoVariant};
use vennfan::labels::LabelConfig;
use vennfan::params::parse_fraction;
use vennfan::regions::{area_stats, log_histogram, AreaStats, RegionMask, HISTOGRAM_BINS};
use vennfan::render::{render_diagram, write_png, RenderConfig, Scene};
use vennfan::{presets, CogwheelPlanar, Error, FanDiagram};

/// Fan-shaped Venn diagrams from shaped trigonometric curves.
///
/// Exit status: 0 on success, 1 when `verify` finds a missing region or an
/// operation fails, 2 on invalid flags.
#[derive(Parser, Debug)]
#[command(name = "vennfan", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Render a diagram to SVG.
    Generate(GenerateArgs),
    /// Print the verification report of a diagram as JSON.
    Verify(VerifyArgs),
    /// Compare region-area spread against Edwards' cogwheel diagram.
    Areas(AreasArgs),
    /// Render Edwards' cogwheel diagram.
    Edwards(EdwardsArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DecayArg {
    /// λ(i) = (n-1-i)/n
    Linear,
    /// λ(i) = b^(i+eps), last curve flat
    Exp,
    /// linear from 1-eps down to delta, last curve flat
    LinearMod,
    /// λ(i) = 2^-i (rejected when sampled: λ(0) = 1)
    Smith,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum VariantArg {
    Sine,
    Cosine,
}

#[derive(Args, Debug, Clone)]
struct SpecArgs {
    /// Named parameter set; explicit flags override its values.
    #[arg(long)]
    preset: Option<String>,
    /// Curve family [default: cosine]
    #[arg(long, value_enum)]
    variant: Option<VariantArg>,
    /// Number of sets [default: 6]
    #[arg(long)]
    n: Option<usize>,
    /// Shape exponent, decimal or a/b [default: 1/5]
    #[arg(long, value_parser = parse_fraction)]
    p: Option<f64>,
    /// Amplitude decay [default: linear-mod]
    #[arg(long, value_enum)]
    decay: Option<DecayArg>,
    /// Base of the exponential decay, in [1/2, 1) [default: 4/5]
    #[arg(long, value_parser = parse_fraction)]
    b: Option<f64>,
    /// Exponent offset (exp, default 0) or first step (linear-mod, default 1/9)
    #[arg(long, value_parser = parse_fraction)]
    eps: Option<f64>,
    /// Smallest blade amplitude for linear-mod [default: 1/3]
    #[arg(long, value_parser = parse_fraction)]
    delta: Option<f64>,
    /// Raster cells per side
    #[arg(long, default_value_t = 2048)]
    resolution: usize,
}

#[derive(Args, Debug)]
struct GenerateArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Output SVG
    #[arg(long)]
    out: PathBuf,
    /// Also write the verification report (JSON)
    #[arg(long)]
    report: Option<PathBuf>,
    /// Also write the label plan (JSON)
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Membership data (.csv or .json); region counts become the labels
    #[arg(long)]
    data: Option<PathBuf>,
    /// Also write a PNG of the region raster
    #[arg(long)]
    png: Option<PathBuf>,
    #[command(flatten)]
    render: RenderArgs,
}

#[derive(Args, Debug)]
struct RenderArgs {
    /// Canvas size in pixels
    #[arg(long, default_value_t = 1024)]
    canvas: usize,
    /// Boundary stroke width in pixels
    #[arg(long, default_value_t = 1.5)]
    stroke_width: f64,
    /// Smallest label font size in pixels
    #[arg(long, default_value_t = 6.0)]
    min_font: f64,
    /// Largest label font size in pixels
    #[arg(long, default_value_t = 28.0)]
    max_font: f64,
}

impl RenderArgs {
    fn config(&self) -> RenderConfig {
        RenderConfig {
            canvas_px: self.canvas,
            stroke_width_px: self.stroke_width,
            min_font_px: self.min_font,
            max_font_px: self.max_font,
            ..RenderConfig::default()
        }
    }
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[command(flatten)]
    spec: SpecArgs,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Baseline {
    Edwards,
}

#[derive(Args, Debug)]
struct AreasArgs {
    /// Diagram to compare against
    #[arg(long, value_enum, default_value = "edwards")]
    against: Baseline,
    #[command(flatten)]
    spec: SpecArgs,
    /// Also write the comparison as JSON
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Projection {
    Stereo,
    Equatorial,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Side {
    Below,
    Above,
}

#[derive(Args, Debug)]
struct EdwardsArgs {
    /// Number of sets
    #[arg(long, default_value_t = 7)]
    n: usize,
    #[arg(long, value_enum, default_value = "stereo")]
    projection: Projection,
    /// Image plane below or above the sphere (stereo only)
    #[arg(long, value_enum, default_value = "below")]
    variant: Side,
    /// Prism sides per cogwheel, comma separated [default: 4,8,16,...]
    #[arg(long, value_delimiter = ',')]
    sides: Option<Vec<usize>>,
    /// Raster cells per side (stereo only)
    #[arg(long, default_value_t = 2048)]
    resolution: usize,
    /// Output SVG
    #[arg(long)]
    out: PathBuf,
    /// Also write the verification report (JSON, stereo only)
    #[arg(long)]
    report: Option<PathBuf>,
    #[command(flatten)]
    render: RenderArgs,
}

/// Failure classes mapped to exit codes.
enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidParameter { name, reason } => {
                Failure::Usage(format!("invalid value for --{}: {reason}", flag_name(name)))
            }
            Error::AmplitudeTooLarge { .. } => {
                Failure::Usage(format!("invalid value for --decay: {e}"))
            }
            Error::Ingest { .. } => Failure::Usage(format!("invalid value for --data: {e}")),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

fn flag_name(param: &str) -> String {
    match param {
        "canvas_px" => "canvas".into(),
        "stroke_width_px" => "stroke-width".into(),
        "font" => "min-font/--max-font".into(),
        other => other.replace('_', "-"),
    }
}

impl SpecArgs {
    fn build(&self, n_hint: Option<usize>) -> Result<CurveSpec, Failure> {
        let base = match &self.preset {
            Some(id) => Some(presets::find(id)?),
            None => None,
        };
        let variant = match self.variant {
            Some(VariantArg::Sine) => Variant::Sine,
            Some(VariantArg::Cosine) => Variant::Cosine,
            None => base.map_or(Variant::Cosine, |b| b.variant),
        };
        let n = self
            .n
            .or(base.map(|b| b.n))
            .or(n_hint)
            .unwrap_or(6);
        let p = self.p.or(base.map(|b| b.p)).unwrap_or(0.2);
        let preset_decay = base.map(|b| b.decay);
        let decay = match self.decay {
            None => match preset_decay {
                Some(d) => override_params(d, self),
                None => DecayScheme::ModifiedLinear {
                    delta: self.delta.unwrap_or(1.0 / 3.0),
                    eps: self.eps.unwrap_or(1.0 / 9.0),
                },
            },
            Some(DecayArg::Linear) => DecayScheme::Linear,
            Some(DecayArg::Smith) => DecayScheme::SmithExponential,
            Some(DecayArg::Exp) => DecayScheme::ModifiedExponential {
                b: self.b.unwrap_or(0.8),
                eps: self.eps.unwrap_or(0.0),
            },
            Some(DecayArg::LinearMod) => DecayScheme::ModifiedLinear {
                delta: self.delta.unwrap_or(1.0 / 3.0),
                eps: self.eps.unwrap_or(1.0 / 9.0),
            },
        };
        let spec = CurveSpec::new(variant, n, p, decay)?;
        spec.check_amplitudes()?;
        Ok(spec)
    }
}

fn override_params(d: DecayScheme, a: &SpecArgs) -> DecayScheme {
    match d {
        DecayScheme::ModifiedExponential { b, eps } => DecayScheme::ModifiedExponential {
            b: a.b.unwrap_or(b),
            eps: a.eps.unwrap_or(eps),
        },
        DecayScheme::ModifiedLinear { delta, eps } => DecayScheme::ModifiedLinear {
            delta: a.delta.unwrap_or(delta),
            eps: a.eps.unwrap_or(eps),
        },
        other => other,
    }
}

fn write(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| Failure::Runtime(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

fn warnings_path(out: &Path) -> PathBuf {
    let mut s = out.as_os_str().to_owned();
    s.push(".warnings.json");
    PathBuf::from(s)
}

fn load_data(path: &Path) -> Result<MembershipData, Failure> {
    let format = Format::from_path(path).ok_or_else(|| {
        Failure::Usage(format!(
            "invalid value for --data: {} must end in .csv or .json",
            path.display()
        ))
    })?;
    Ok(ingest(path, format)?)
}

fn generate(a: &GenerateArgs) -> Result<(), Failure> {
    let data = a.data.as_deref().map(load_data).transpose()?;
    let spec = a.spec.build(data.as_ref().map(|d| d.n()))?;
    if let Some(d) = &data {
        if d.n() != spec.n() {
            return Err(Failure::Usage(format!(
                "invalid value for --data: {} sets, but the diagram has n = {}",
                d.n(),
                spec.n()
            )));
        }
    }
    let config = a.render.config();
    config.validate()?;
    let diagram = FanDiagram::build(&spec, a.spec.resolution)?;
    let extent = diagram.grid.geometry().extent;
    let plan = diagram.plan(&LabelConfig::for_canvas(extent, config.canvas_px))?;
    let texts: Option<BTreeMap<RegionMask, String>> =
        data.as_ref().map(|d| count_regions(d).texts());
    let curves = diagram.curves();
    let scene = Scene {
        n: spec.n(),
        curves: &curves,
        components: &diagram.components,
        plan: &plan,
        extent,
        texts: texts.as_ref(),
        set_names: data.as_ref().map(|d| d.set_names.as_slice()),
    };
    let rendered = render_diagram(&scene, &config)?;
    write(&a.out, &rendered.svg)?;
    if !rendered.warnings.is_empty() {
        write(&warnings_path(&a.out), &to_json(&rendered.warnings)?)?;
        eprintln!(
            "{} label(s) did not fit; see {}",
            rendered.warnings.len(),
            warnings_path(&a.out).display()
        );
    }
    if let Some(p) = &a.report {
        write(p, &to_json(&diagram.report)?)?;
    }
    if let Some(p) = &a.labels {
        write(p, &to_json(&plan)?)?;
    }
    if let Some(p) = &a.png {
        write_png(&diagram.grid, p)?;
    }
    Ok(())
}

fn verify(a: &VerifyArgs) -> Result<bool, Failure> {
    let spec = a.spec.build(None)?;
    let diagram = FanDiagram::build(&spec, a.spec.resolution)?;
    let json = to_json(&diagram.report)?;
    match &a.out {
        Some(p) => write(p, &json)?,
        None => print!("{json}"),
    }
    Ok(diagram.report.is_independent_family)
}

fn stats_line(name: &str, s: &AreaStats) -> String {
    format!(
        "{name:<10} {:>7} {:>12.4e} {:>12.4e} {:>10.4} {:>10.4}",
        s.regions, s.min_area, s.max_area, s.mean_log10, s.std_log10
    )
}

fn areas(a: &AreasArgs) -> Result<(), Failure> {
    let Baseline::Edwards = a.against;
    let spec = a.spec.build(None)?;
    let fan = FanDiagram::build(&spec, a.spec.resolution)?;
    let n = spec.n();
    let ed = CogwheelPlanar::build(n, &default_sides(n), StereoVariant::Below, a.spec.resolution)?;
    let fs = area_stats(&fan.report)?;
    let es = area_stats(&ed.report)?;

    let lo = fs.log10_areas.iter().chain(&es.log10_areas).cloned().fold(f64::INFINITY, f64::min);
    let hi = fs.log10_areas.iter().chain(&es.log10_areas).cloned().fold(f64::NEG_INFINITY, f64::max);
    let fh = log_histogram(&fs.log10_areas, lo, hi, HISTOGRAM_BINS);
    let eh = log_histogram(&es.log10_areas, lo, hi, HISTOGRAM_BINS);

    println!("n = {n}, resolution = {}", a.spec.resolution);
    println!("{:<10} {:>7} {:>12} {:>12} {:>10} {:>10}", "diagram", "regions", "min area", "max area", "mean log10", "std log10");
    println!("{}", stats_line("vennfan", &fs));
    println!("{}", stats_line("edwards", &es));
    println!("excluded (touch the frame): vennfan {}, edwards {}", fs.excluded.len(), es.excluded.len());
    println!();
    println!("{:>9} {:>9} {:>8} {:>8}", "log10 lo", "log10 hi", "vennfan", "edwards");
    for k in 0..HISTOGRAM_BINS {
        println!(
            "{:>9.3} {:>9.3} {:>8} {:>8}",
            fh.edges[k], fh.edges[k + 1], fh.counts[k], eh.counts[k]
        );
    }
    if let Some(p) = &a.json {
        #[derive(serde::Serialize)]
        struct Out<'a> {
            n: usize,
            resolution: usize,
            vennfan: &'a AreaStats,
            edwards: &'a AreaStats,
            #[serde(rename = "sharedEdges")]
            shared_edges: &'a [f64],
            #[serde(rename = "vennfanCounts")]
            vennfan_counts: &'a [usize],
            #[serde(rename = "edwardsCounts")]
            edwards_counts: &'a [usize],
        }
        let out = Out {
            n,
            resolution: a.spec.resolution,
            vennfan: &fs,
            edwards: &es,
            shared_edges: &fh.edges,
            vennfan_counts: &fh.counts,
            edwards_counts: &eh.counts,
        };
        write(p, &to_json(&out)?)?;
    }
    Ok(())
}

fn edwards(a: &EdwardsArgs) -> Result<(), Failure> {
    let sides = a.sides.clone().unwrap_or_else(|| default_sides(a.n));
    let config = a.render.config();
    config.validate()?;
    let variant = match a.variant {
        Side::Below => StereoVariant::Below,
        Side::Above => StereoVariant::Above,
    };
    match a.projection {
        Projection::Stereo => {
            let ed = CogwheelPlanar::build(a.n, &sides, variant, a.resolution)?;
            let extent = ed.extent();
            let plan = ed.plan(&LabelConfig::for_canvas(extent, config.canvas_px))?;
            let scene = Scene {
                n: a.n,
                curves: &ed.projection.curves,
                components: &ed.components,
                plan: &plan,
                extent,
                texts: None,
                set_names: None,
            };
            let rendered = render_diagram(&scene, &config)?;
            write(&a.out, &rendered.svg)?;
            if !rendered.warnings.is_empty() {
                write(&warnings_path(&a.out), &to_json(&rendered.warnings)?)?;
            }
            if let Some(p) = &a.report {
                write(p, &to_json(&ed.report)?)?;
            }
        }
        Projection::Equatorial => {
            let diagram = build_cogwheel(a.n, &sides)?;
            let curves = equatorial_project(&diagram, vennfan::edwards::DEFAULT_SAMPLES_PER_RADIAN);
            let plan = vennfan::labels::LabelPlan {
                n: a.n,
                entries: BTreeMap::new(),
            };
            let scene = Scene {
                n: a.n,
                curves: &curves,
                components: &[],
                plan: &plan,
                extent: 1.1,
                texts: None,
                set_names: None,
            };
            write(&a.out, &render_diagram(&scene, &config)?.svg)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Generate(a) => generate(a).map(|_| true),
        Command::Verify(a) => verify(a),
        Command::Areas(a) => areas(a).map(|_| true),
        Command::Edwards(a) => edwards(a).map(|_| true),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
