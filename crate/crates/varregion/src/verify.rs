//! Seeded, replayable property campaign: every cross-module invariant of
//! the crate, run over randomized parameter tuples drawn from a safe box,
//! with failures reported as data (never as panics or errors).
//!
//! Reproducibility contract:
//! - each `(seed, property, trial)` triple owns an independent ChaCha8
//!   stream, keyed by `seed (8 bytes LE) ‖ trial (8 bytes LE) ‖
//!   FNV-1a(property name) (8 bytes LE) ‖ 8 zero bytes`;
//! - trials run in parallel but are folded in a fixed order, so the report
//!   is identical for any thread count;
//! - [`replay_trial`] re-derives the same stream and reproduces a reported
//!   margin bit for bit.
//!
//! The pass convention is uniform: a trial yields a signed `margin`, and
//! `margin ≥ 0` means the property held (with room to spare equal to the
//! margin).  Boolean checks map to `±1`.

use std::collections::BTreeMap;
use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::bounds::{
    enclosure_disk, growth_bound, MobiusTriple, Segment,
};
use crate::error::Result;
use crate::kernels::{
    extremal_h, mobius_delta, sample_member, ClassParams, ExtremalIndex, SchwarzGenerator,
};
use crate::numerics::diff;
use crate::numerics::geometry::{
    convex_hull, point_in_polygon, polygon_is_convex, polygon_is_simple, Polygon,
};
use crate::numerics::quadrature::QuadratureConfig;
use crate::regions::{
    boundary_curve, boundary_point_closed_form, boundary_point_quadrature, interior_center,
    BoundaryCurve, CurveMethod, RegionBoundary,
};
use crate::subclasses::{
    f_a0, rbeta_sup_bound_check, vg_boundary_point, vr_boundary_point, SubclassParamsF,
    SubclassParamsR,
};
use crate::Cx;

/// Sampling box for random parameter tuples.  The defaults stay 0.05 away
/// from every validity boundary so quadrature and geometry remain
/// well-conditioned; edge behavior (`|λ| = 1`) is exercised by the
/// dedicated collapse property instead.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamBox {
    pub gamma_abs_max: f64,
    pub beta_max: f64,
    pub lambda_abs_max: f64,
    pub z0_abs_min: f64,
    pub z0_abs_max: f64,
}

impl Default for ParamBox {
    fn default() -> Self {
        Self {
            gamma_abs_max: FRAC_PI_2 - 0.05,
            beta_max: 0.95,
            lambda_abs_max: 0.95,
            z0_abs_min: 0.05,
            z0_abs_max: 0.95,
        }
    }
}

/// Full configuration of a campaign run.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignConfig {
    pub seed: u64,
    pub trials: usize,
    pub param_box: ParamBox,
    /// Samples per boundary curve in curve-based properties.
    pub n_curve_samples: usize,
    /// Named tolerances; every comparison threshold used by a property is
    /// listed here so reports are self-describing.
    pub tolerances: BTreeMap<String, f64>,
    pub quadrature: QuadratureConfig,
}

impl CampaignConfig {
    pub fn new(seed: u64, trials: usize) -> Result<Self> {
        if trials < 1 {
            return Err(crate::error::Error::InvalidParams(
                "a campaign needs at least one trial".into(),
            ));
        }
        let mut tolerances = BTreeMap::new();
        for (name, value) in [
            ("collapse", 1e-14),
            ("involution", 1e-14),
            ("h_prime", 1e-7),
            ("dual_route", 1e-9),
            ("geometry", 1e-12),
            ("membership", 1e-10),
            ("identity", 1e-12),
            ("enclosure", 1e-9),
            ("subclass_match", 1e-10),
            ("f_second", 1e-6),
            ("f_third", 1e-5),
        ] {
            tolerances.insert(name.to_string(), value);
        }
        Ok(Self {
            seed,
            trials,
            param_box: ParamBox::default(),
            n_curve_samples: 720,
            tolerances,
            quadrature: QuadratureConfig::default(),
        })
    }

    fn tol(&self, name: &str) -> f64 {
        *self
            .tolerances
            .get(name)
            .unwrap_or_else(|| panic!("tolerance `{name}` missing from campaign config"))
    }
}

/// Outcome of one trial: pass iff `margin ≥ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrialResult {
    pub margin: f64,
    /// Human-readable parameter tuple, sufficient to understand the trial;
    /// exact replay goes through `(seed, property, trial)`.
    pub params: String,
}

/// A failing trial, kept in full in the report so it can be replayed.
#[derive(Debug, Clone, PartialEq)]
pub struct FailingTrial {
    pub trial: usize,
    pub margin: f64,
    pub params: String,
}

/// Aggregated outcome of one property across all trials.
#[derive(Debug, Clone, PartialEq)]
pub struct PropertyReport {
    pub name: String,
    pub passes: usize,
    pub failures: usize,
    pub worst_margin: f64,
    pub failing: Vec<FailingTrial>,
}

/// Aggregated outcome of the whole campaign.
#[derive(Debug, Clone, PartialEq)]
pub struct CampaignReport {
    pub seed: u64,
    pub trials: usize,
    pub properties: Vec<PropertyReport>,
}

impl CampaignReport {
    pub fn all_passed(&self) -> bool {
        self.properties.iter().all(|p| p.failures == 0)
    }

    /// Fixed-format text rendering (byte-deterministic for a given report).
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "campaign seed={} trials={}", self.seed, self.trials);
        let _ = writeln!(
            out,
            "{:<38} {:>6} {:>6}  {:>13}",
            "property", "pass", "fail", "worst margin"
        );
        for p in &self.properties {
            let _ = writeln!(
                out,
                "{:<38} {:>6} {:>6}  {:>13.6e}",
                p.name, p.passes, p.failures, p.worst_margin
            );
        }
        let failing: Vec<&FailingTrial> = self
            .properties
            .iter()
            .flat_map(|p| p.failing.iter())
            .collect();
        if !failing.is_empty() {
            let _ = writeln!(out, "failing trials:");
            for p in &self.properties {
                for f in &p.failing {
                    let _ = writeln!(
                        out,
                        "  {} trial={} margin={:.6e} {}",
                        p.name, f.trial, f.margin, f.params
                    );
                }
            }
        }
        let _ = writeln!(
            out,
            "result: {} ({}/{} properties clean)",
            if self.all_passed() { "PASS" } else { "FAIL" },
            self.properties.iter().filter(|p| p.failures == 0).count(),
            self.properties.len()
        );
        out
    }
}

/// One registered property: a named, seeded trial function.
pub struct Property {
    pub name: &'static str,
    run: fn(&mut ChaCha8Rng, &CampaignConfig) -> Result<TrialResult>,
}

/// The authoritative list of properties the campaign must cover — one per
/// invariant declared by the kernel, region, bound, and subclass modules.
/// `registry()` is asserted against this list at campaign start.
pub const EXPECTED_PROPERTIES: [&str; 21] = [
    "kernels/halfplane_kernel",
    "kernels/halfplane_member",
    "kernels/h_prime_normalization",
    "kernels/lambda_unimodular_collapse",
    "kernels/mobius_involution",
    "regions/dual_route",
    "regions/convexity",
    "regions/simplicity",
    "regions/interiority",
    "regions/member_containment",
    "regions/boundary_extremality",
    "regions/theta_continuity",
    "bounds/membership",
    "bounds/membership_strictness",
    "bounds/mobius_triple_identity",
    "bounds/enclosure",
    "bounds/tau_norm_identity",
    "subclasses/vr_vg_match_vp",
    "subclasses/f2_zero_lambda0",
    "subclasses/f3_matches",
    "subclasses/sup_monotone",
];

// ---------------------------------------------------------------------------
// RNG plumbing
// ---------------------------------------------------------------------------

fn fnv1a64(data: &str) -> u64 {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for b in data.as_bytes() {
        hash ^= u64::from(*b);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    hash
}

/// The independent stream for `(seed, property, trial)`.
pub fn trial_rng(seed: u64, property: &str, trial: usize) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[0..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&(trial as u64).to_le_bytes());
    key[16..24].copy_from_slice(&fnv1a64(property).to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

// ---------------------------------------------------------------------------
// Samplers
// ---------------------------------------------------------------------------

/// Uniform point of the closed disk `|z| ≤ max_abs` (uniform in radius and
/// angle, not in area — fine for coverage purposes).
pub fn sample_disk_point(rng: &mut ChaCha8Rng, max_abs: f64) -> Cx {
    let r = rng.gen_range(0.0..=max_abs);
    let phi = rng.gen_range(0.0..TAU);
    Cx::from_polar(r, phi)
}

fn sample_annulus_point(rng: &mut ChaCha8Rng, min_abs: f64, max_abs: f64) -> Cx {
    let r = rng.gen_range(min_abs..=max_abs);
    let phi = rng.gen_range(0.0..TAU);
    Cx::from_polar(r, phi)
}

/// A random parameter tuple from the box (always valid).
pub fn sample_params(rng: &mut ChaCha8Rng, b: &ParamBox) -> ClassParams {
    let gamma = rng.gen_range(-b.gamma_abs_max..=b.gamma_abs_max);
    let beta = rng.gen_range(0.0..=b.beta_max);
    let lambda = sample_disk_point(rng, b.lambda_abs_max);
    let z0 = sample_annulus_point(rng, b.z0_abs_min, b.z0_abs_max);
    ClassParams::new(gamma, beta, lambda, z0).expect("the sampling box is inside validity")
}

/// A random Schwarz-function generator: a scaled monomial or a Blaschke
/// product with one or two zeros.
pub fn sample_generator(rng: &mut ChaCha8Rng) -> SchwarzGenerator {
    match rng.gen_range(0u8..3) {
        0 => {
            let coeff = sample_disk_point(rng, 0.95);
            let power = rng.gen_range(1u32..=4);
            SchwarzGenerator::monomial(coeff, power).expect("|coeff| ≤ 0.95")
        }
        1 => {
            let rotation = Cx::from_polar(1.0, rng.gen_range(0.0..TAU));
            let zero = sample_disk_point(rng, 0.7);
            SchwarzGenerator::blaschke(rotation, vec![zero]).expect("zeros inside the disk")
        }
        _ => {
            let rotation = Cx::from_polar(1.0, rng.gen_range(0.0..TAU));
            let zeros = vec![sample_disk_point(rng, 0.7), sample_disk_point(rng, 0.7)];
            SchwarzGenerator::blaschke(rotation, zeros).expect("zeros inside the disk")
        }
    }
}

fn sample_theta(rng: &mut ChaCha8Rng) -> f64 {
    let mut t = rng.gen_range(-PI..=PI);
    if t == -PI {
        t = PI;
    }
    t
}

fn sample_index(rng: &mut ChaCha8Rng) -> ExtremalIndex {
    if rng.gen_bool(0.5) {
        ExtremalIndex::boundary(sample_theta(rng))
    } else {
        ExtremalIndex::interior(sample_disk_point(rng, 1.0)).expect("|a| ≤ 1")
    }
}

fn closed_curve(p: &ClassParams, n: usize, cfg: &QuadratureConfig) -> Result<BoundaryCurve> {
    match boundary_curve(p, n, CurveMethod::ClosedForm, cfg)? {
        RegionBoundary::Curve(c) => Ok(c),
        RegionBoundary::Point(_) => unreachable!("the sampling box keeps |λ| ≤ 0.95 and z₀ ≠ 0"),
    }
}

fn describe(p: &ClassParams) -> String {
    format!(
        "gamma={:?} beta={:?} lambda={:?}{:+?}i z0={:?}{:+?}i",
        p.gamma, p.beta, p.lambda.re, p.lambda.im, p.z0.re, p.z0.im
    )
}

// ---------------------------------------------------------------------------
// Properties (kernels)
// ---------------------------------------------------------------------------

fn prop_halfplane_kernel(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let idx = sample_index(rng);
    let rot = Cx::new(0.0, p.gamma).exp();
    let mut margin = f64::INFINITY;
    for _ in 0..16 {
        let z = sample_disk_point(rng, 0.97);
        margin = margin.min((rot * extremal_h(z, &idx, &p)).re - p.halfplane_level());
    }
    Ok(TrialResult {
        margin,
        params: format!("{} idx={idx:?}", describe(&p)),
    })
}

fn prop_halfplane_member(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let gen = sample_generator(rng);
    let member = sample_member(gen.clone(), p);
    let rot = Cx::new(0.0, p.gamma).exp();
    let mut margin = f64::INFINITY;
    for i in 0..8 {
        for j in 0..8 {
            let z = Cx::from_polar(0.99 * (i + 1) as f64 / 8.0, TAU * j as f64 / 8.0);
            margin = margin.min((rot * member.eval(z)).re - p.halfplane_level());
        }
    }
    Ok(TrialResult {
        margin,
        params: format!("{} gen={gen:?}", describe(&p)),
    })
}

fn prop_h_prime_normalization(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let idx = sample_index(rng);
    let fd = diff::derivative(|z| Ok(extremal_h(z, &idx, &p)), Cx::new(0.0, 0.0), 1e-4)?;
    let err = (fd - p.first_coefficient()).norm();
    Ok(TrialResult {
        margin: cfg.tol("h_prime") - err,
        params: format!("{} idx={idx:?} err={err:?}", describe(&p)),
    })
}

fn prop_lambda_unimodular_collapse(
    rng: &mut ChaCha8Rng,
    cfg: &CampaignConfig,
) -> Result<TrialResult> {
    let b = &cfg.param_box;
    let gamma = rng.gen_range(-b.gamma_abs_max..=b.gamma_abs_max);
    let beta = rng.gen_range(0.0..=b.beta_max);
    let lambda = Cx::from_polar(1.0, rng.gen_range(0.0..TAU));
    let z0 = sample_annulus_point(rng, b.z0_abs_min, b.z0_abs_max);
    let p = ClassParams::new(gamma, beta, lambda, z0)?;
    let i1 = ExtremalIndex::boundary(sample_theta(rng));
    let i2 = ExtremalIndex::interior(sample_disk_point(rng, 1.0))?;
    let mut worst = 0.0f64;
    for _ in 0..8 {
        let z = sample_disk_point(rng, 0.97);
        worst = worst.max((extremal_h(z, &i1, &p) - extremal_h(z, &i2, &p)).norm());
    }
    Ok(TrialResult {
        margin: cfg.tol("collapse") - worst,
        params: format!("{} worst={worst:?}", describe(&p)),
    })
}

fn prop_mobius_involution(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let z = sample_disk_point(rng, 0.97);
    let lambda = sample_disk_point(rng, cfg.param_box.lambda_abs_max);
    let there = mobius_delta(z, lambda)?;
    let back = mobius_delta(there, -lambda)?;
    let err = (back - z).norm();
    Ok(TrialResult {
        margin: cfg.tol("involution") - err,
        params: format!("z={z:?} lambda={lambda:?} err={err:?}"),
    })
}

// ---------------------------------------------------------------------------
// Properties (regions)
// ---------------------------------------------------------------------------

fn prop_dual_route(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let mut worst = 0.0f64;
    for _ in 0..8 {
        let theta = sample_theta(rng);
        let a = boundary_point_closed_form(theta, &p)?;
        let b = boundary_point_quadrature(theta, &p, &cfg.quadrature)?;
        worst = worst.max((a - b).norm());
    }
    Ok(TrialResult {
        margin: cfg.tol("dual_route") - worst,
        params: format!("{} worst={worst:?}", describe(&p)),
    })
}

fn prop_convexity(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let poly = closed_curve(&p, cfg.n_curve_samples, &cfg.quadrature)?.polygon()?;
    let ok = polygon_is_convex(&poly, cfg.tol("geometry"));
    Ok(TrialResult {
        margin: if ok { 1.0 } else { -1.0 },
        params: describe(&p),
    })
}

fn prop_simplicity(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let poly = closed_curve(&p, cfg.n_curve_samples, &cfg.quadrature)?.polygon()?;
    let ok = polygon_is_simple(&poly, cfg.tol("geometry"));
    Ok(TrialResult {
        margin: if ok { 1.0 } else { -1.0 },
        params: describe(&p),
    })
}

fn prop_interiority(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let poly = closed_curve(&p, cfg.n_curve_samples, &cfg.quadrature)?.polygon()?;
    let center = interior_center(&p, &cfg.quadrature)?;
    Ok(TrialResult {
        margin: point_in_polygon(&poly, center),
        params: describe(&p),
    })
}

/// Signed containment margin of one sampled member's integral against a
/// sampled boundary polygon: positive means strictly inside.  The campaign
/// accepts values down to `−max_adjacent_gap` (discretization slack).
pub fn containment_trial(
    p: &ClassParams,
    gen: &SchwarzGenerator,
    curve: &BoundaryCurve,
    cfg: &QuadratureConfig,
) -> Result<f64> {
    let member = sample_member(gen.clone(), *p);
    let value = member.integral(cfg)?;
    let poly = curve.polygon()?;
    Ok(point_in_polygon(&poly, value))
}

fn prop_member_containment(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let gen = sample_generator(rng);
    let curve = closed_curve(&p, cfg.n_curve_samples, &cfg.quadrature)?;
    let signed = containment_trial(&p, &gen, &curve, &cfg.quadrature)?;
    Ok(TrialResult {
        margin: signed + curve.max_adjacent_gap(),
        params: format!("{} gen={gen:?} signed={signed:?}", describe(&p)),
    })
}

fn prop_boundary_extremality(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let curve = closed_curve(&p, cfg.n_curve_samples, &cfg.quadrature)?;
    let mut cloud = curve.points.clone();
    for _ in 0..16 {
        let gen = sample_generator(rng);
        cloud.push(sample_member(gen, p).integral(&cfg.quadrature)?);
    }
    let hull = Polygon::new(convex_hull(&cloud))?;
    let mut deepest = f64::NEG_INFINITY;
    for pt in &curve.points {
        deepest = deepest.max(point_in_polygon(&hull, *pt));
    }
    Ok(TrialResult {
        margin: curve.max_adjacent_gap() - deepest,
        params: format!("{} deepest={deepest:?}", describe(&p)),
    })
}

fn prop_theta_continuity(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let curve = closed_curve(&p, cfg.n_curve_samples, &cfg.quadrature)?;
    let n = curve.points.len();
    let total: f64 = (0..n)
        .map(|i| (curve.points[(i + 1) % n] - curve.points[i]).norm())
        .sum();
    // Smoothness bound: no single gap may exceed 12× the average gap
    // (the calibration constant C = 12·length, per parameter set).
    let margin = 12.0 * total / n as f64 - curve.max_adjacent_gap();
    Ok(TrialResult {
        margin,
        params: format!("{} length={total:?}", describe(&p)),
    })
}

// ---------------------------------------------------------------------------
// Properties (bounds)
// ---------------------------------------------------------------------------

fn prop_membership(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let gen = sample_generator(rng);
    let member = sample_member(gen.clone(), p);
    let mut margin = f64::INFINITY;
    for _ in 0..8 {
        let z = sample_disk_point(rng, 0.95);
        let g = growth_bound(z, &p)?;
        margin = margin.min(g.r + cfg.tol("membership") - (member.eval(z) - g.c).norm());
    }
    Ok(TrialResult {
        margin,
        params: format!("{} gen={gen:?}", describe(&p)),
    })
}

fn prop_membership_strictness(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    // g(z) = z²/2 satisfies |g(z)| < |z| strictly away from 0, so the
    // member sits strictly inside the growth circle there.
    let p = sample_params(rng, &cfg.param_box);
    let gen = SchwarzGenerator::monomial(Cx::new(0.5, 0.0), 2)?;
    let member = sample_member(gen, p);
    let mut margin = f64::INFINITY;
    for _ in 0..8 {
        let z = sample_annulus_point(rng, 0.1, 0.95);
        let g = growth_bound(z, &p)?;
        margin = margin.min(g.r - (member.eval(z) - g.c).norm());
    }
    Ok(TrialResult {
        margin,
        params: describe(&p),
    })
}

fn prop_mobius_triple_identity(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let mut z = sample_disk_point(rng, 0.95);
    let mut guard = 0;
    while (z - p.lambda.conj()).norm() < 1e-3 {
        z = sample_disk_point(rng, 0.95);
        guard += 1;
        if guard > 64 {
            break;
        }
    }
    let triple = MobiusTriple::new(z, &p)?;
    let g = growth_bound(z, &p)?;
    let err = (triple.center() - g.c)
        .norm()
        .max((triple.radius() - g.r).abs());
    Ok(TrialResult {
        margin: cfg.tol("identity") - err,
        params: format!("{} z={z:?} err={err:?}", describe(&p)),
    })
}

fn prop_enclosure(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let segment = Segment::new(Cx::new(0.0, 0.0), p.z0)?;
    let disk = enclosure_disk(&p, &segment, &cfg.quadrature)?;
    let curve = closed_curve(&p, 64, &cfg.quadrature)?;
    let mut margin = f64::INFINITY;
    for pt in &curve.points {
        margin = margin.min(disk.radius + cfg.tol("enclosure") - (pt - disk.center).norm());
    }
    Ok(TrialResult {
        margin,
        params: format!(
            "{} center={:?}{:+?}i radius={:?}",
            describe(&p),
            disk.center.re,
            disk.center.im,
            disk.radius
        ),
    })
}

fn prop_tau_norm_identity(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let p = sample_params(rng, &cfg.param_box);
    let mut z = sample_disk_point(rng, 0.95);
    let mut guard = 0;
    while (z - p.lambda.conj()).norm() < 1e-3 {
        z = sample_disk_point(rng, 0.95);
        guard += 1;
        if guard > 64 {
            break;
        }
    }
    let triple = MobiusTriple::new(z, &p)?;
    let lhs = 1.0 - z.norm_sqr() * triple.tau.norm_sqr();
    let rhs = (1.0 - z.norm_sqr()) * (1.0 + z.norm_sqr() - 2.0 * (p.lambda * z).re)
        / (Cx::new(1.0, 0.0) - p.lambda * z).norm_sqr();
    let err = (lhs - rhs).abs();
    Ok(TrialResult {
        margin: cfg.tol("identity") - err,
        params: format!("{} z={z:?} err={err:?}", describe(&p)),
    })
}

// ---------------------------------------------------------------------------
// Properties (subclasses)
// ---------------------------------------------------------------------------

fn sample_alpha(rng: &mut ChaCha8Rng) -> Cx {
    Cx::new(rng.gen_range(0.2..=2.0), rng.gen_range(-1.0..=1.0))
}

fn prop_vr_vg_match_vp(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let b = &cfg.param_box;
    let beta = rng.gen_range(0.0..=b.beta_max);
    let lambda = sample_disk_point(rng, b.lambda_abs_max);
    let z0 = sample_annulus_point(rng, b.z0_abs_min, b.z0_abs_max);
    let alpha = sample_alpha(rng);
    let pr = SubclassParamsR::new(beta, lambda, z0)?;
    let pf = SubclassParamsF::new(alpha, beta, lambda, z0)?;
    let parent = pr.as_class_params();
    let mut worst = 0.0f64;
    for _ in 0..4 {
        let theta = sample_theta(rng);
        let vp = boundary_point_closed_form(theta, &parent)?;
        let vr = vr_boundary_point(theta, &pr, &cfg.quadrature)?;
        let vg = vg_boundary_point(theta, &pf)?;
        worst = worst.max((vr - vp).norm()).max((vg - vp).norm());
    }
    Ok(TrialResult {
        margin: cfg.tol("subclass_match") - worst,
        params: format!("{} alpha={alpha:?} worst={worst:?}", describe(&parent)),
    })
}

fn prop_f2_zero_lambda0(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let alpha = sample_alpha(rng);
    let beta = rng.gen_range(0.0..=cfg.param_box.beta_max);
    let a = sample_disk_point(rng, 1.0);
    let pf = SubclassParamsF::new(alpha, beta, Cx::new(0.0, 0.0), Cx::new(0.5, 0.0))?;
    let d2 = diff::second_derivative(
        |z| f_a0(&pf, a, z, &cfg.quadrature),
        Cx::new(0.0, 0.0),
        1e-2,
    )?;
    let err = d2.norm();
    Ok(TrialResult {
        margin: cfg.tol("f_second") - err,
        params: format!("alpha={alpha:?} beta={beta:?} a={a:?} err={err:?}"),
    })
}

fn prop_f3_matches(rng: &mut ChaCha8Rng, cfg: &CampaignConfig) -> Result<TrialResult> {
    let alpha = sample_alpha(rng);
    let beta = rng.gen_range(0.0..=cfg.param_box.beta_max);
    let a = sample_disk_point(rng, 1.0);
    let pf = SubclassParamsF::new(alpha, beta, Cx::new(0.0, 0.0), Cx::new(0.5, 0.0))?;
    // h = 0.03 keeps the O(h⁴·f⁽⁷⁾) truncation term below 1e-5 even at the
    // corner of the sampling box (α = 0.2, |a| = 1), where f⁽⁷⁾(0) ≈ 650.
    let d3 = diff::third_derivative(
        |z| f_a0(&pf, a, z, &cfg.quadrature),
        Cx::new(0.0, 0.0),
        0.03,
    )?;
    let target = a * (4.0 * (1.0 - beta)) / (Cx::new(1.0, 0.0) + alpha * 2.0);
    let err = (d3 - target).norm();
    Ok(TrialResult {
        margin: cfg.tol("f_third") - err,
        params: format!("alpha={alpha:?} beta={beta:?} a={a:?} err={err:?}"),
    })
}

fn prop_sup_monotone(rng: &mut ChaCha8Rng, _cfg: &CampaignConfig) -> Result<TrialResult> {
    let beta = rng.gen_range(0.0..=0.45);
    let (near, _) = rbeta_sup_bound_check(beta, 0.999, 48)?;
    let (far, _) = rbeta_sup_bound_check(beta, 0.99, 48)?;
    Ok(TrialResult {
        margin: near - far,
        params: format!("beta={beta:?} sup999={near:?} sup99={far:?}"),
    })
}

// ---------------------------------------------------------------------------
// Campaign driver
// ---------------------------------------------------------------------------

/// The full property registry, in report order.
pub fn registry() -> Vec<Property> {
    vec![
        Property {
            name: "kernels/halfplane_kernel",
            run: prop_halfplane_kernel,
        },
        Property {
            name: "kernels/halfplane_member",
            run: prop_halfplane_member,
        },
        Property {
            name: "kernels/h_prime_normalization",
            run: prop_h_prime_normalization,
        },
        Property {
            name: "kernels/lambda_unimodular_collapse",
            run: prop_lambda_unimodular_collapse,
        },
        Property {
            name: "kernels/mobius_involution",
            run: prop_mobius_involution,
        },
        Property {
            name: "regions/dual_route",
            run: prop_dual_route,
        },
        Property {
            name: "regions/convexity",
            run: prop_convexity,
        },
        Property {
            name: "regions/simplicity",
            run: prop_simplicity,
        },
        Property {
            name: "regions/interiority",
            run: prop_interiority,
        },
        Property {
            name: "regions/member_containment",
            run: prop_member_containment,
        },
        Property {
            name: "regions/boundary_extremality",
            run: prop_boundary_extremality,
        },
        Property {
            name: "regions/theta_continuity",
            run: prop_theta_continuity,
        },
        Property {
            name: "bounds/membership",
            run: prop_membership,
        },
        Property {
            name: "bounds/membership_strictness",
            run: prop_membership_strictness,
        },
        Property {
            name: "bounds/mobius_triple_identity",
            run: prop_mobius_triple_identity,
        },
        Property {
            name: "bounds/enclosure",
            run: prop_enclosure,
        },
        Property {
            name: "bounds/tau_norm_identity",
            run: prop_tau_norm_identity,
        },
        Property {
            name: "subclasses/vr_vg_match_vp",
            run: prop_vr_vg_match_vp,
        },
        Property {
            name: "subclasses/f2_zero_lambda0",
            run: prop_f2_zero_lambda0,
        },
        Property {
            name: "subclasses/f3_matches",
            run: prop_f3_matches,
        },
        Property {
            name: "subclasses/sup_monotone",
            run: prop_sup_monotone,
        },
    ]
}

fn run_one(property: &Property, cfg: &CampaignConfig, trial: usize) -> (f64, String) {
    let mut rng = trial_rng(cfg.seed, property.name, trial);
    match (property.run)(&mut rng, cfg) {
        Ok(result) => (result.margin, result.params),
        Err(e) => (f64::NEG_INFINITY, format!("error: {e}")),
    }
}

/// Run the whole campaign.  Failures (margin < 0 or internal errors) are
/// recorded in the report; this function itself never fails.
///
/// Deterministic for a given config and independent of the rayon thread
/// count: trials are keyed by `(seed, property, trial)` and folded in
/// enumeration order.
pub fn run_campaign(cfg: &CampaignConfig) -> CampaignReport {
    let properties = registry();
    assert_eq!(
        properties.iter().map(|p| p.name).collect::<Vec<_>>(),
        EXPECTED_PROPERTIES.to_vec(),
        "campaign registry does not match the declared property list"
    );

    let jobs: Vec<(usize, usize)> = (0..properties.len())
        .flat_map(|pi| (0..cfg.trials).map(move |t| (pi, t)))
        .collect();
    let outcomes: Vec<(f64, String)> = jobs
        .par_iter()
        .map(|&(pi, t)| run_one(&properties[pi], cfg, t))
        .collect();

    let mut reports: Vec<PropertyReport> = properties
        .iter()
        .map(|p| PropertyReport {
            name: p.name.to_string(),
            passes: 0,
            failures: 0,
            worst_margin: f64::INFINITY,
            failing: Vec::new(),
        })
        .collect();
    for (&(pi, trial), (margin, params)) in jobs.iter().zip(outcomes) {
        let report = &mut reports[pi];
        if margin < report.worst_margin {
            report.worst_margin = margin;
        }
        if margin >= 0.0 {
            report.passes += 1;
        } else {
            report.failures += 1;
            report.failing.push(FailingTrial {
                trial,
                margin,
                params,
            });
        }
    }
    CampaignReport {
        seed: cfg.seed,
        trials: cfg.trials,
        properties: reports,
    }
}

/// Re-run a single `(property, trial)` pair under the config's seed,
/// reproducing the original margin bit for bit.  Returns `None` for an
/// unknown property name.
pub fn replay_trial(cfg: &CampaignConfig, property: &str, trial: usize) -> Option<(f64, String)> {
    let properties = registry();
    let p = properties.iter().find(|p| p.name == property)?;
    Some(run_one(p, cfg, trial))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_rejects_zero_trials() {
        assert!(CampaignConfig::new(1, 0).is_err());
        assert!(CampaignConfig::new(1, 1).is_ok());
    }

    #[test]
    fn registry_matches_expected_list() {
        let names: Vec<&str> = registry().iter().map(|p| p.name).collect();
        assert_eq!(names, EXPECTED_PROPERTIES.to_vec());
        let mut sorted = names.clone();
        sorted.sort_unstable();
        sorted.dedup();
        assert_eq!(sorted.len(), names.len(), "duplicate property names");
    }

    #[test]
    fn trial_rng_streams_are_independent() {
        let mut a = trial_rng(7, "regions/dual_route", 0);
        let mut b = trial_rng(7, "regions/dual_route", 1);
        let mut c = trial_rng(7, "regions/convexity", 0);
        let mut d = trial_rng(8, "regions/dual_route", 0);
        let ra: f64 = a.gen();
        assert_ne!(ra, b.gen::<f64>());
        assert_ne!(ra, c.gen::<f64>());
        assert_ne!(ra, d.gen::<f64>());
        let mut a2 = trial_rng(7, "regions/dual_route", 0);
        assert_eq!(ra, a2.gen::<f64>());
    }

    #[test]
    fn small_campaign_passes_and_is_deterministic() {
        let cfg = {
            let mut c = CampaignConfig::new(42, 3).unwrap();
            c.n_curve_samples = 180; // keep the unit test quick
            c
        };
        let r1 = run_campaign(&cfg);
        let r2 = run_campaign(&cfg);
        assert_eq!(r1, r2);
        assert_eq!(r1.render_text(), r2.render_text());
        assert!(
            r1.all_passed(),
            "unexpected failures:\n{}",
            r1.render_text()
        );
        for p in &r1.properties {
            assert_eq!(p.passes + p.failures, cfg.trials);
        }
    }

    #[test]
    fn different_seeds_differ() {
        let mut c1 = CampaignConfig::new(1, 2).unwrap();
        let mut c2 = CampaignConfig::new(2, 2).unwrap();
        c1.n_curve_samples = 64;
        c2.n_curve_samples = 64;
        let r1 = run_campaign(&c1);
        let r2 = run_campaign(&c2);
        // Same shape, different sampled tuples → different worst margins
        // somewhere.
        assert!(r1
            .properties
            .iter()
            .zip(&r2.properties)
            .any(|(a, b)| a.worst_margin != b.worst_margin));
    }

    #[test]
    fn replay_reproduces_margins() {
        let mut cfg = CampaignConfig::new(9, 2).unwrap();
        cfg.n_curve_samples = 120;
        let report = run_campaign(&cfg);
        for (pi, p) in report.properties.iter().enumerate() {
            let (margin, _) = replay_trial(&cfg, &p.name, 1).unwrap();
            // Recompute trial 1's margin directly for comparison.
            let direct = run_one(&registry()[pi], &cfg, 1);
            assert_eq!(margin.to_bits(), direct.0.to_bits());
        }
        assert!(replay_trial(&cfg, "no/such_property", 0).is_none());
    }

    #[test]
    fn failure_is_data_not_panic() {
        // An impossibly tight tolerance turns real margins negative; the
        // campaign must record failures rather than erroring out.
        let mut cfg = CampaignConfig::new(5, 2).unwrap();
        cfg.n_curve_samples = 64;
        cfg.tolerances.insert("dual_route".into(), 1e-30);
        let report = run_campaign(&cfg);
        let dual = report
            .properties
            .iter()
            .find(|p| p.name == "regions/dual_route")
            .unwrap();
        assert!(dual.failures > 0);
        assert_eq!(dual.passes + dual.failures, cfg.trials);
        assert!(!report.all_passed());
        assert_eq!(dual.failing.len(), dual.failures);
        let text = report.render_text();
        assert!(text.contains("failing trials:"));
        assert!(text.contains("result: FAIL"));
    }
}
