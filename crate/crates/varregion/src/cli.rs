//! Thin command-line front end over the library.
//!
//! Subcommands: `boundary` (sample a region boundary), `point` (the
//! degenerate or center point), `growth` (pointwise disk bound), `diskbound`
//! (whole-region enclosure disk), `verify` (seeded property campaign), and
//! `table1` (export the five reference parameter sets as curve files).
//!
//! Exit codes: `0` success, `2` validation failure, `3` numeric
//! non-convergence, `4` property violation.  The environment variable
//! `VARREGION_TOL` overrides the absolute quadrature tolerance (must be
//! ≥ 1e-15).  `--threads N` limits parallelism; results are independent of
//! the thread count.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use crate::bounds::{enclosure_disk, growth_bound, Segment};
use crate::error::{Error, Result};
use crate::kernels::ClassParams;
use crate::numerics::geometry::{polygon_is_convex, polygon_is_simple};
use crate::numerics::quadrature::QuadratureConfig;
use crate::output::{fmt_f64, OutputDocument, Payload};
use crate::regions::{
    boundary_point_closed_form, boundary_point_quadrature, degenerate_point, interior_center,
    theta_grid, BoundaryCurve, CurveMethod, RegionBoundary,
};
use crate::subclasses::{
    vg_boundary_closed_form, vg_boundary_point, vg_membership_bound, vr_boundary_point,
    SubclassParamsF, SubclassParamsR,
};
use crate::table1;
use crate::verify::{run_campaign, CampaignConfig};
use crate::Cx;

const GEOMETRY_TOL: f64 = 1e-12;

fn parse_cx(s: &str) -> std::result::Result<Cx, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected a complex number as RE,IM, got `{s}`"))?;
    let re: f64 = re
        .trim()
        .parse()
        .map_err(|e| format!("bad real part `{re}`: {e}"))?;
    let im: f64 = im
        .trim()
        .parse()
        .map_err(|e| format!("bad imaginary part `{im}`: {e}"))?;
    if !re.is_finite() || !im.is_finite() {
        return Err(format!("complex components must be finite, got `{s}`"));
    }
    Ok(Cx::new(re, im))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassKind {
    /// Tilted positive-real-part functions.
    #[value(name = "P", alias = "p")]
    P,
    /// Univalent functions whose derivative has positive real part.
    #[value(name = "R", alias = "r")]
    R,
    /// The second univalent family (α-indexed; the region is α-free).
    #[value(name = "G", alias = "g")]
    G,
}

impl ClassKind {
    fn label(self) -> &'static str {
        match self {
            ClassKind::P => "P",
            ClassKind::R => "R",
            ClassKind::G => "G",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodKind {
    /// Explicit logarithmic closed form.
    Closed,
    /// Adaptive quadrature of the extremal kernel.
    Quadrature,
    /// Both routes, reported side by side with pointwise deviations.
    Both,
}

impl MethodKind {
    fn label(self) -> &'static str {
        match self {
            MethodKind::Closed => "closed",
            MethodKind::Quadrature => "quadrature",
            MethodKind::Both => "both",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatKind {
    Csv,
    Json,
    Svg,
}

impl FormatKind {
    fn extension(self) -> &'static str {
        match self {
            FormatKind::Csv => "csv",
            FormatKind::Json => "json",
            FormatKind::Svg => "svg",
        }
    }
}

/// Parameters shared by the computing subcommands.
#[derive(Debug, Args)]
pub struct ClassArgs {
    /// Function class.
    #[arg(long, value_enum, default_value_t = ClassKind::P)]
    pub class: ClassKind,
    /// Tilt angle γ with |γ| < π/2 (class P only; R and G fix γ = 0).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub gamma: f64,
    /// Offset β in [0, 1).
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    /// α as RE,IM with Re α > 0 (class G only; recorded as metadata — the
    /// region itself does not depend on α).
    #[arg(long, value_parser = parse_cx, allow_hyphen_values = true)]
    pub alpha: Option<Cx>,
    /// First-coefficient parameter λ as RE,IM with |λ| ≤ 1.
    #[arg(long, value_parser = parse_cx, default_value = "0,0", allow_hyphen_values = true)]
    pub lambda: Cx,
    /// Endpoint z₀ as RE,IM with |z₀| < 1 (for `growth`: the evaluation
    /// point z).
    #[arg(long, value_parser = parse_cx, default_value = "0.5,0", allow_hyphen_values = true)]
    pub z0: Cx,
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    #[command(flatten)]
    pub common: ClassArgs,
    /// Number of boundary samples (angles are an even grid ending at π).
    #[arg(long, default_value_t = 256, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    #[arg(long, value_enum, default_value_t = MethodKind::Closed)]
    pub method: MethodKind,
    #[arg(long, value_enum, default_value_t = FormatKind::Csv)]
    pub format: FormatKind,
    /// Output file (stdout when omitted).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PointArgs {
    #[command(flatten)]
    pub common: ClassArgs,
    #[arg(long, value_enum, default_value_t = FormatKind::Csv)]
    pub format: FormatKind,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub common: ClassArgs,
    #[arg(long, value_enum, default_value_t = FormatKind::Csv)]
    pub format: FormatKind,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DiskboundArgs {
    #[command(flatten)]
    pub common: ClassArgs,
    #[arg(long, value_enum, default_value_t = FormatKind::Csv)]
    pub format: FormatKind,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Campaign seed.
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Trials per property (≥ 1).
    #[arg(long, default_value_t = 50, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    /// Samples per boundary curve inside curve-based properties.
    #[arg(long, default_value_t = 720, value_parser = clap::value_parser!(u64).range(16..))]
    pub samples: u64,
    /// Also write the report as a document (csv or json).
    #[arg(long, value_enum, default_value_t = FormatKind::Csv)]
    pub format: FormatKind,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct Table1Args {
    /// Samples per curve.
    #[arg(long, default_value_t = 720, value_parser = clap::value_parser!(u64).range(16..))]
    pub samples: u64,
    #[arg(long, value_enum, default_value_t = FormatKind::Csv)]
    pub format: FormatKind,
    /// Output directory (created if missing; default: current directory).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sample the region boundary curve.
    Boundary(BoundaryArgs),
    /// Compute the single distinguished point: the degenerate value when
    /// |λ| = 1, otherwise the region's interior center.
    Point(PointArgs),
    /// Pointwise growth bound: the disk that contains every member value.
    Growth(GrowthArgs),
    /// Enclosure disk containing the whole region (straight-segment path).
    Diskbound(DiskboundArgs),
    /// Run the seeded property-verification campaign.
    Verify(VerifyArgs),
    /// Export boundary curves for the five reference parameter sets.
    Table1(Table1Args),
}

#[derive(Debug, Parser)]
#[command(
    name = "varregion",
    version,
    about = "Regions of variability of integrals of functions with positive real part"
)]
pub struct Cli {
    /// Worker threads for parallel sections (default: all cores).  Results
    /// never depend on this value.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

// ---------------------------------------------------------------------------
// Class resolution
// ---------------------------------------------------------------------------

enum ResolvedClass {
    P(ClassParams),
    R(SubclassParamsR),
    G(SubclassParamsF),
}

impl ResolvedClass {
    fn parent(&self) -> ClassParams {
        match self {
            ResolvedClass::P(p) => *p,
            ResolvedClass::R(p) => p.as_class_params(),
            ResolvedClass::G(p) => p.as_class_params(),
        }
    }
}

fn resolve(common: &ClassArgs) -> Result<ResolvedClass> {
    if common.class != ClassKind::G && common.alpha.is_some() {
        return Err(Error::InvalidParams(
            "--alpha applies to class G only".into(),
        ));
    }
    match common.class {
        ClassKind::P => Ok(ResolvedClass::P(ClassParams::new(
            common.gamma,
            common.beta,
            common.lambda,
            common.z0,
        )?)),
        ClassKind::R => {
            if common.gamma != 0.0 {
                return Err(Error::InvalidParams(
                    "class R fixes gamma = 0; drop --gamma or use --class P".into(),
                ));
            }
            Ok(ResolvedClass::R(SubclassParamsR::new(
                common.beta,
                common.lambda,
                common.z0,
            )?))
        }
        ClassKind::G => {
            if common.gamma != 0.0 {
                return Err(Error::InvalidParams(
                    "class G fixes gamma = 0; drop --gamma or use --class P".into(),
                ));
            }
            let alpha = common.alpha.unwrap_or_else(|| Cx::new(1.0, 0.0));
            Ok(ResolvedClass::G(SubclassParamsF::new(
                alpha,
                common.beta,
                common.lambda,
                common.z0,
            )?))
        }
    }
}

// ---------------------------------------------------------------------------
// Shared plumbing
// ---------------------------------------------------------------------------

fn cx_meta(v: Cx) -> String {
    format!("{},{}", fmt_f64(v.re), fmt_f64(v.im))
}

fn base_meta(doc: OutputDocument, command: &str, common: &ClassArgs) -> OutputDocument {
    let mut doc = doc
        .with_meta("tool", format!("varregion {}", env!("CARGO_PKG_VERSION")))
        .with_meta("command", command)
        .with_meta("class", common.class.label())
        .with_meta("gamma", fmt_f64(common.gamma))
        .with_meta("beta", fmt_f64(common.beta));
    if let Some(alpha) = common.alpha {
        doc = doc.with_meta("alpha", cx_meta(alpha));
    }
    doc.with_meta("lambda", cx_meta(common.lambda))
        .with_meta("z0", cx_meta(common.z0))
}

fn render(doc: &OutputDocument, format: FormatKind) -> Result<String> {
    Ok(match format {
        FormatKind::Csv => doc.to_csv(),
        FormatKind::Json => doc.to_json(),
        FormatKind::Svg => doc.to_svg()?,
    })
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| {
            Error::InvalidParams(format!("cannot write {}: {e}", path.display()))
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Resolve `VARREGION_TOL` (if set) into a quadrature config.
fn quadrature_from_tol(tol: Option<&str>) -> std::result::Result<QuadratureConfig, String> {
    match tol {
        None => Ok(QuadratureConfig::default()),
        Some(s) => {
            let v: f64 = s
                .trim()
                .parse()
                .map_err(|e| format!("VARREGION_TOL `{s}` is not a number: {e}"))?;
            QuadratureConfig::default()
                .with_abs_tol(v)
                .map_err(|e| format!("VARREGION_TOL: {e}"))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::NonConvergence { .. } => 3,
        Error::InvalidParams(_) | Error::PoleAtInput | Error::BranchAmbiguity { .. } => 2,
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

enum Route {
    Closed,
    Quadrature,
}

fn route_points(
    class: &ResolvedClass,
    route: Route,
    thetas: &[f64],
    quad: &QuadratureConfig,
) -> Result<Vec<Cx>> {
    match (class, route) {
        (ResolvedClass::P(p), Route::Closed) => thetas
            .iter()
            .map(|&t| boundary_point_closed_form(t, p))
            .collect(),
        (ResolvedClass::P(p), Route::Quadrature) => thetas
            .par_iter()
            .map(|&t| boundary_point_quadrature(t, p, quad))
            .collect(),
        (ResolvedClass::R(pr), Route::Closed) => {
            let parent = pr.as_class_params();
            thetas
                .iter()
                .map(|&t| boundary_point_closed_form(t, &parent))
                .collect()
        }
        (ResolvedClass::R(pr), Route::Quadrature) => thetas
            .par_iter()
            .map(|&t| vr_boundary_point(t, pr, quad))
            .collect(),
        (ResolvedClass::G(pf), Route::Closed) => thetas
            .iter()
            .map(|&t| vg_boundary_point(t, pf))
            .collect(),
        (ResolvedClass::G(pf), Route::Quadrature) => {
            let parent = pf.as_class_params();
            thetas
                .par_iter()
                .map(|&t| boundary_point_quadrature(t, &parent, quad))
                .collect()
        }
    }
}

fn cmd_boundary(a: &BoundaryArgs, quad: &QuadratureConfig) -> Result<i32> {
    let class = resolve(&a.common)?;
    let parent = class.parent();
    let n = a.samples as usize;

    let payload = if parent.z0.norm() == 0.0 {
        Payload::Point {
            value: Cx::new(0.0, 0.0),
        }
    } else if (parent.lambda.norm() - 1.0).abs() <= 1e-12 {
        Payload::Point {
            value: degenerate_point(&parent)?,
        }
    } else {
        let thetas = theta_grid(n);
        match a.method {
            MethodKind::Closed => Payload::Curve {
                points: route_points(&class, Route::Closed, &thetas, quad)?,
                thetas,
            },
            MethodKind::Quadrature => Payload::Curve {
                points: route_points(&class, Route::Quadrature, &thetas, quad)?,
                thetas,
            },
            MethodKind::Both => Payload::Comparison {
                closed: route_points(&class, Route::Closed, &thetas, quad)?,
                quadrature: route_points(&class, Route::Quadrature, &thetas, quad)?,
                thetas,
            },
        }
    };
    let degenerate = matches!(payload, Payload::Point { .. });
    let mut doc = base_meta(OutputDocument::new(payload), "boundary", &a.common)
        .with_meta("method", a.method.label())
        .with_meta("samples", a.samples.to_string())
        .with_meta("abs_tol", fmt_f64(quad.abs_tol));
    if degenerate {
        doc = doc.with_meta("degenerate", "true");
    }
    emit(&render(&doc, a.format)?, &a.out)?;
    Ok(0)
}

fn cmd_point(a: &PointArgs, quad: &QuadratureConfig) -> Result<i32> {
    let class = resolve(&a.common)?;
    let parent = class.parent();
    let (value, kind) = if (parent.lambda.norm() - 1.0).abs() <= 1e-12 {
        (degenerate_point(&parent)?, "degenerate")
    } else {
        (interior_center(&parent, quad)?, "interior_center")
    };
    let doc = base_meta(
        OutputDocument::new(Payload::Point { value }),
        "point",
        &a.common,
    )
    .with_meta("point_kind", kind)
    .with_meta("abs_tol", fmt_f64(quad.abs_tol));
    emit(&render(&doc, a.format)?, &a.out)?;
    Ok(0)
}

fn cmd_growth(a: &GrowthArgs, quad: &QuadratureConfig) -> Result<i32> {
    let class = resolve(&a.common)?;
    let z = a.common.z0;
    let bound = match &class {
        ResolvedClass::P(p) => growth_bound(z, p)?,
        ResolvedClass::R(p) => growth_bound(z, &p.as_class_params())?,
        ResolvedClass::G(p) => vg_membership_bound(z, p)?,
    };
    let doc = base_meta(
        OutputDocument::new(Payload::Disk {
            center: bound.c,
            radius: bound.r,
        }),
        "growth",
        &a.common,
    )
    .with_meta("abs_tol", fmt_f64(quad.abs_tol));
    emit(&render(&doc, a.format)?, &a.out)?;
    Ok(0)
}

fn cmd_diskbound(a: &DiskboundArgs, quad: &QuadratureConfig) -> Result<i32> {
    let class = resolve(&a.common)?;
    let parent = class.parent();
    let segment = Segment::new(Cx::new(0.0, 0.0), parent.z0)?;
    let disk = enclosure_disk(&parent, &segment, quad)?;
    let doc = base_meta(
        OutputDocument::new(Payload::Disk {
            center: disk.center,
            radius: disk.radius,
        }),
        "diskbound",
        &a.common,
    )
    .with_meta("path", "segment")
    .with_meta("abs_tol", fmt_f64(quad.abs_tol));
    emit(&render(&doc, a.format)?, &a.out)?;
    Ok(0)
}

fn cmd_verify(a: &VerifyArgs, quad: &QuadratureConfig) -> Result<i32> {
    let mut cfg = CampaignConfig::new(a.seed, a.trials as usize)?;
    cfg.n_curve_samples = a.samples as usize;
    cfg.quadrature = *quad;
    let report = run_campaign(&cfg);
    print!("{}", report.render_text());
    if a.out.is_some() {
        let all_passed = report.all_passed();
        let doc = OutputDocument::new(Payload::Report(report.clone()))
            .with_meta("tool", format!("varregion {}", env!("CARGO_PKG_VERSION")))
            .with_meta("command", "verify")
            .with_meta("seed", a.seed.to_string())
            .with_meta("trials", a.trials.to_string())
            .with_meta("samples", a.samples.to_string())
            .with_meta("abs_tol", fmt_f64(quad.abs_tol));
        emit(&render(&doc, a.format)?, &a.out)?;
        return Ok(if all_passed { 0 } else { 4 });
    }
    Ok(if report.all_passed() { 0 } else { 4 })
}

fn table1_curve(label: &str, boundary: RegionBoundary) -> Result<BoundaryCurve> {
    match boundary {
        RegionBoundary::Curve(c) => Ok(c),
        RegionBoundary::Point(_) => Err(Error::InvalidParams(format!(
            "reference row {label} unexpectedly degenerated to a point"
        ))),
    }
}

fn cmd_table1(a: &Table1Args, quad: &QuadratureConfig) -> Result<i32> {
    let dir = a.out.clone().unwrap_or_else(|| PathBuf::from("."));
    std::fs::create_dir_all(&dir).map_err(|e| {
        Error::InvalidParams(format!("cannot create {}: {e}", dir.display()))
    })?;
    let n = a.samples as usize;
    let mut written = 0usize;

    for row in table1::rows() {
        let parent = row.class_params()?;
        let p_curve = table1_curve(
            &format!("{}P", row.index),
            crate::regions::boundary_curve(&parent, n, CurveMethod::ClosedForm, quad)?,
        )?;
        let alpha = Cx::new(1.0, 0.0);
        let pf = SubclassParamsF::new(alpha, row.beta, row.lambda, row.z0)?;
        let g_curve = table1_curve(
            &format!("{}G", row.index),
            vg_boundary_closed_form(&pf, n)?,
        )?;

        for (label, curve, gamma) in [
            ("P", p_curve, row.gamma),
            ("G", g_curve, 0.0),
        ] {
            let poly = curve.polygon()?;
            if !polygon_is_convex(&poly, GEOMETRY_TOL) || !polygon_is_simple(&poly, GEOMETRY_TOL)
            {
                eprintln!(
                    "property violation: row {} class {label} failed the convexity/simplicity \
                     check before writing",
                    row.index
                );
                return Ok(4);
            }
            let doc = OutputDocument::new(Payload::Curve {
                thetas: curve.thetas.clone(),
                points: curve.points.clone(),
            })
            .with_meta("tool", format!("varregion {}", env!("CARGO_PKG_VERSION")))
            .with_meta("command", "table1")
            .with_meta("row", row.index.to_string())
            .with_meta("class", label)
            .with_meta("gamma", fmt_f64(gamma))
            .with_meta("beta", fmt_f64(row.beta))
            .with_meta("lambda", cx_meta(row.lambda))
            .with_meta("z0", cx_meta(row.z0))
            .with_meta("method", "closed")
            .with_meta("samples", a.samples.to_string())
            .with_meta("abs_tol", fmt_f64(quad.abs_tol));
            let path = dir.join(format!(
                "table1_row{}_{label}.{}",
                row.index,
                a.format.extension()
            ));
            let text = render(&doc, a.format)?;
            std::fs::write(&path, &text).map_err(|e| {
                Error::InvalidParams(format!("cannot write {}: {e}", path.display()))
            })?;
            written += 1;
        }
    }
    println!("wrote {written} files under {}", dir.display());
    Ok(0)
}

// ---------------------------------------------------------------------------
// Entry point
// ---------------------------------------------------------------------------

fn dispatch(cli: &Cli, quad: &QuadratureConfig) -> Result<i32> {
    match &cli.command {
        Command::Boundary(a) => cmd_boundary(a, quad),
        Command::Point(a) => cmd_point(a, quad),
        Command::Growth(a) => cmd_growth(a, quad),
        Command::Diskbound(a) => cmd_diskbound(a, quad),
        Command::Verify(a) => cmd_verify(a, quad),
        Command::Table1(a) => cmd_table1(a, quad),
    }
}

/// Parse the argument list, run the selected command, and return the
/// process exit code (`0` ok, `2` validation, `3` non-convergence, `4`
/// property violation).
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let quad = match quadrature_from_tol(std::env::var("VARREGION_TOL").ok().as_deref()) {
        Ok(q) => q,
        Err(msg) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    let outcome = match cli.threads {
        None => dispatch(&cli, &quad),
        Some(n) => match rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build()
        {
            Ok(pool) => pool.install(|| dispatch(&cli, &quad)),
            Err(e) => {
                eprintln!("error: cannot build a {n}-thread pool: {e}");
                return 2;
            }
        },
    };
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
