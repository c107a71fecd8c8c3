//! Pointwise growth bounds for slice members, the enclosing disk for the
//! integral obtained by integrating those bounds along a path, and the
//! cube-root structure function behind the two-parameter starlike family.
//!
//! For each fixed `z` in the disk, the values `P(z)` of slice members fill a
//! closed disk `|w − c(z)| ≤ r(z)`; the extremal kernels with unimodular
//! index land exactly on its boundary circle.  Integrating `c` and `r` along
//! a path from `0` to `z₀` yields a disk that encloses the whole region of
//! variability.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::kernels::ClassParams;
use crate::numerics::quadrature::{integrate_segment, integrate_unit_interval, QuadratureConfig};
use crate::Cx;

/// The disk `|P(z) − c| ≤ r` traced by member values at a fixed point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GrowthBound {
    /// Disk center `c(z)`.
    pub c: Cx,
    /// Disk radius `r(z) ≥ 0`.
    pub r: f64,
}

/// Common factor `q = (e^{−iγ} − 2β cos γ)·e^{−iγ}`; it equals
/// `2(1−β)e^{−iγ}cos γ − 1`, one less than the leading coefficient.
fn q_factor(p: &ClassParams) -> Cx {
    let e = Cx::new(0.0, -p.gamma).exp();
    (e - 2.0 * p.beta * p.gamma.cos()) * e
}

fn growth_c_r(z: Cx, p: &ClassParams) -> (Cx, f64) {
    let q = q_factor(p);
    let l = p.lambda;
    let zn2 = z.norm_sqr();
    let den = (1.0 - zn2) * (1.0 + zn2 - 2.0 * (l * z).re);
    let num = (Cx::new(1.0, 0.0) + l * z * q) * (Cx::new(1.0, 0.0) - l.conj() * z.conj())
        + (z.conj() - l) * (l.conj() + z * q) * zn2;
    let c = num / den;
    let r = 2.0 * (1.0 - l.norm_sqr()) * (1.0 - p.beta) * zn2 * p.gamma.cos() / den;
    (c, r)
}

/// Growth bound at `z`: the disk containing every member value `P(z)` with
///
/// ```text
/// c = [(1 + λzq)(1 − conj(λ)conj(z)) + |z|²(conj(z) − λ)(conj(λ) + zq)] / d
/// r = 2(1 − |λ|²)(1 − β)|z|² cos γ / d
/// d = (1 − |z|²)(1 + |z|² − 2 Re(λz)),  q = (e^{−iγ} − 2β cos γ)e^{−iγ}
/// ```
///
/// Requires `|z| < 1`, where `d > 0` (so the bound is always finite).
pub fn growth_bound(z: Cx, p: &ClassParams) -> Result<GrowthBound> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
        return Err(Error::InvalidParams(format!(
            "growth bound requires |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    let (c, r) = growth_c_r(z, p);
    Ok(GrowthBound { c, r })
}

/// Independent oracle for the `λ = 0`, `γ = 0` growth bound:
/// `c = (1 + (1 − 2β)|z|⁴)/(1 − |z|⁴)`, `r = 2(1 − β)|z|²/(1 − |z|⁴)`.
///
/// # Errors
/// `InvalidParams` when `λ ≠ 0` or `γ ≠ 0` (this route is specific to the
/// untilted, centered slice) or `|z| ≥ 1`.
pub fn growth_bound_lambda0(z: Cx, p: &ClassParams) -> Result<GrowthBound> {
    if p.lambda.norm() != 0.0 || p.gamma != 0.0 {
        return Err(Error::InvalidParams(format!(
            "this route is specific to lambda = 0, gamma = 0; got lambda = {}, gamma = {}",
            p.lambda, p.gamma
        )));
    }
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
        return Err(Error::InvalidParams(format!(
            "growth bound requires |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    let t = z.norm_sqr() * z.norm_sqr();
    let c = Cx::new((1.0 + (1.0 - 2.0 * p.beta) * t) / (1.0 - t), 0.0);
    let r = 2.0 * (1.0 - p.beta) * z.norm_sqr() / (1.0 - t);
    Ok(GrowthBound { c, r })
}

/// The Möbius data `(A, B, τ)` from which the growth disk reconstructs:
///
/// ```text
/// A = (1 + λzq)/(1 − λz)        (image of the center generator)
/// B = (conj(λ) + zq)/(z − conj(λ))
/// τ = (z − conj(λ))/(1 − λz)
/// ```
///
/// with `center = (A + |zτ|²B)/(1 − |zτ|²)` and
/// `radius = |z||τ||A + B|/(1 − |zτ|²)`, and the denominator identity
/// `1 − |z|²|τ|² = (1 − |z|²)(1 + |z|² − 2Re(λz))/|1 − λz|²`.
#[derive(Debug, Clone, Copy)]
pub struct MobiusTriple {
    pub a: Cx,
    pub b: Cx,
    pub tau: Cx,
    pub z: Cx,
}

impl MobiusTriple {
    /// Requires `|z| < 1` and distance ≥ 1e-12 from the poles of `B` and
    /// `τ` (`z = conj(λ)` and `λz = 1`; the latter cannot occur for
    /// `|z| < 1`, but is rejected defensively).
    pub fn new(z: Cx, p: &ClassParams) -> Result<Self> {
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
            return Err(Error::InvalidParams(format!(
                "Möbius triple requires |z| < 1, got |z| = {}",
                z.norm()
            )));
        }
        let one = Cx::new(1.0, 0.0);
        if (z - p.lambda.conj()).norm() < 1e-12 {
            return Err(Error::InvalidParams(
                "Möbius triple is singular at z = conj(lambda)".into(),
            ));
        }
        if (one - p.lambda * z).norm() < 1e-12 {
            return Err(Error::InvalidParams(
                "Möbius triple is singular at lambda·z = 1".into(),
            ));
        }
        let q = q_factor(p);
        let a = (one + p.lambda * z * q) / (one - p.lambda * z);
        let b = (p.lambda.conj() + z * q) / (z - p.lambda.conj());
        let tau = (z - p.lambda.conj()) / (one - p.lambda * z);
        Ok(Self { a, b, tau, z })
    }

    /// Reconstructed disk center `(A + |zτ|²B)/(1 − |zτ|²)`.
    pub fn center(&self) -> Cx {
        let w2 = self.z.norm_sqr() * self.tau.norm_sqr();
        (self.a + self.b * w2) / (1.0 - w2)
    }

    /// Reconstructed disk radius `|z||τ||A + B|/(1 − |zτ|²)`.
    pub fn radius(&self) -> f64 {
        let w2 = self.z.norm_sqr() * self.tau.norm_sqr();
        self.z.norm() * self.tau.norm() * (self.a + self.b).norm() / (1.0 - w2)
    }
}

/// A continuously differentiable path `t ↦ z(t)`, `t ∈ [0, 1]`, inside the
/// unit disk.  Implementations must keep `|z(t)| < 1` for all `t`.
pub trait C1Path {
    fn at(&self, t: f64) -> Cx;
    fn derivative(&self, t: f64) -> Cx;
}

/// The straight segment from `from` to `to`.
#[derive(Debug, Clone, Copy)]
pub struct Segment {
    pub from: Cx,
    pub to: Cx,
}

impl Segment {
    /// Requires both endpoints strictly inside the unit disk (the whole
    /// segment then stays inside by convexity).
    pub fn new(from: Cx, to: Cx) -> Result<Self> {
        for (name, e) in [("from", from), ("to", to)] {
            if !(e.re.is_finite() && e.im.is_finite()) || e.norm() >= 1.0 {
                return Err(Error::InvalidParams(format!(
                    "segment endpoint `{name}` must satisfy |z| < 1, got {e}"
                )));
            }
        }
        Ok(Self { from, to })
    }
}

impl C1Path for Segment {
    fn at(&self, t: f64) -> Cx {
        self.from + (self.to - self.from) * t
    }
    fn derivative(&self, _t: f64) -> Cx {
        self.to - self.from
    }
}

/// The disk `|w − center| ≤ radius` guaranteed to contain
/// `∫₀^{z₀} P(ζ) dζ` for every slice member `P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskBound {
    pub center: Cx,
    pub radius: f64,
}

/// Enclosing disk from the pointwise growth bound along a path:
/// `center = ∫₀¹ c(z(t))·z′(t) dt` and `radius = ∫₀¹ r(z(t))·|z′(t)| dt`.
///
/// The path must stay strictly inside the unit disk; this is spot-checked
/// on a 33-point grid before integrating.
pub fn enclosure_disk(p: &ClassParams, path: &impl C1Path, cfg: &QuadratureConfig) -> Result<DiskBound> {
    for k in 0..=32 {
        let z = path.at(k as f64 / 32.0);
        if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
            return Err(Error::InvalidParams(format!(
                "path leaves the open unit disk at t = {}: |z| = {}",
                k as f64 / 32.0,
                z.norm()
            )));
        }
    }
    let center = integrate_unit_interval(|t| growth_c_r(path.at(t), p).0 * path.derivative(t), cfg)?;
    let radius = integrate_unit_interval(
        |t| Cx::new(growth_c_r(path.at(t), p).1 * path.derivative(t).norm(), 0.0),
        cfg,
    )?
    .re;
    Ok(DiskBound { center, radius })
}

fn validate_lemma_inputs(theta: f64, lambda: Cx, z: Cx) -> Result<()> {
    if !theta.is_finite() {
        return Err(Error::InvalidParams("theta must be finite".into()));
    }
    if !(lambda.re.is_finite() && lambda.im.is_finite()) || lambda.norm() > 1.0 + 1e-12 {
        return Err(Error::InvalidParams(format!(
            "lambda must satisfy |lambda| ≤ 1, got |lambda| = {}",
            lambda.norm()
        )));
    }
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
        return Err(Error::InvalidParams(format!(
            "z must satisfy |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    Ok(())
}

/// The structure function
/// `G(z) = ∫₀^z e^{iθ}ζ² / (1 + (conj(λ)e^{iθ} − λ)ζ − e^{iθ}ζ²)² dζ`.
///
/// The quadratic in the denominator has both roots on the unit circle
/// (their product is `−e^{−iθ}` and each has modulus 1), so the integrand
/// is analytic on the open disk and `G(z) = e^{iθ}z³/3·(1 + O(z))` near 0.
pub fn lemma_g(theta: f64, lambda: Cx, z: Cx, cfg: &QuadratureConfig) -> Result<Cx> {
    validate_lemma_inputs(theta, lambda, z)?;
    let e = Cx::from_polar(1.0, theta);
    let lin = lambda.conj() * e - lambda;
    integrate_segment(
        |zeta| {
            let den = Cx::new(1.0, 0.0) + lin * zeta - e * zeta * zeta;
            e * zeta * zeta / (den * den)
        },
        Cx::new(0.0, 0.0),
        z,
        cfg,
    )
}

/// `z·G′(z)/(3G(z))`: the branch-free logarithmic derivative of the
/// normalized cube root, using the integrand itself for `G′`.
pub fn lemma_g_log_derivative(theta: f64, lambda: Cx, z: Cx, cfg: &QuadratureConfig) -> Result<Cx> {
    validate_lemma_inputs(theta, lambda, z)?;
    let e = Cx::from_polar(1.0, theta);
    let lin = lambda.conj() * e - lambda;
    let den = Cx::new(1.0, 0.0) + lin * z - e * z * z;
    let g_prime = e * z * z / (den * den);
    let g = lemma_g(theta, lambda, z, cfg)?;
    Ok(z * g_prime / (3.0 * g))
}

/// Smallest radius at which the cube-root continuation can be seeded: below
/// it, `G` is dominated by floating-point noise relative to its leading
/// term and the root choice is not trustworthy.
pub const G0_MIN_ABS: f64 = 1e-3;

const BRANCH_DEPTH_CAP: u32 = 48;

fn cube_root_candidates(w: Cx) -> [Cx; 3] {
    let principal = w.powf(1.0 / 3.0);
    let rot = Cx::from_polar(1.0, TAU / 3.0);
    [principal, principal * rot, principal * rot * rot]
}

fn nearest_candidate(w: Cx, anchor: Cx) -> (Cx, f64, f64) {
    let mut best = (Cx::new(0.0, 0.0), f64::INFINITY);
    let mut second = f64::INFINITY;
    for cand in cube_root_candidates(w) {
        let d = (cand - anchor).norm();
        if d < best.1 {
            second = best.1;
            best = (cand, d);
        } else if d < second {
            second = d;
        }
    }
    (best.0, best.1, second)
}

/// Continue the cube root of `3e^{−iθ}G` along the straight segment from
/// `(from_z, from_val)` to `to_z`, bisecting recursively until the nearest
/// candidate root is decisively closer than the second nearest
/// (`d₁ ≤ 0.3·d₂`).
fn continue_cube_root(
    theta: f64,
    lambda: Cx,
    from_z: Cx,
    from_val: Cx,
    to_z: Cx,
    cfg: &QuadratureConfig,
    depth: u32,
) -> Result<Cx> {
    let w = lemma_g(theta, lambda, to_z, cfg)? * Cx::from_polar(3.0, -theta);
    let (val, d1, d2) = nearest_candidate(w, from_val);
    if d1.is_finite() && d1 <= 0.3 * d2 {
        return Ok(val);
    }
    if depth >= BRANCH_DEPTH_CAP {
        return Err(Error::BranchAmbiguity {
            z_abs: to_z.norm(),
            min_abs: G0_MIN_ABS,
        });
    }
    let mid_z = (from_z + to_z) * 0.5;
    let mid_val = continue_cube_root(theta, lambda, from_z, from_val, mid_z, cfg, depth + 1)?;
    continue_cube_root(theta, lambda, mid_z, mid_val, to_z, cfg, depth + 1)
}

/// The normalized cube root `G₀(z) = (3e^{−iθ}G(z))^{1/3}`, on the branch
/// with `G₀(z) = z·(1 + O(z))` near the origin, continued radially from a
/// seed at `|z| = 1e-3`.
///
/// # Errors
/// `BranchAmbiguity` when `|z| < 1e-3` (too close to the origin to seed)
/// or when the continuation cannot separate the three roots.
pub fn lemma_g0(theta: f64, lambda: Cx, z: Cx, cfg: &QuadratureConfig) -> Result<Cx> {
    validate_lemma_inputs(theta, lambda, z)?;
    if z.norm() < G0_MIN_ABS {
        return Err(Error::BranchAmbiguity {
            z_abs: z.norm(),
            min_abs: G0_MIN_ABS,
        });
    }
    let seed_z = z / z.norm() * G0_MIN_ABS;
    // Near the origin G₀(z) ≈ z, so the seed anchor is the seed point itself.
    let seed_val = continue_cube_root(theta, lambda, seed_z, seed_z, seed_z, cfg, 0)?;
    if (z - seed_z).norm() == 0.0 {
        return Ok(seed_val);
    }
    continue_cube_root(theta, lambda, seed_z, seed_val, z, cfg, 0)
}

/// Worst (smallest) starlikeness margin `Re(z·G₀′(z)/G₀(z))` over a grid of
/// points, with `G₀′` taken by a central finite difference of step
/// `1e-5·|z|`.  A strictly positive result certifies that `G₀` is starlike
/// on (a neighborhood of) the sampled set.
///
/// Every grid point must satisfy `1e-3 ≤ |z| < 1` (minus the stencil step).
pub fn lemma_g0_starlike_check(
    theta: f64,
    lambda: Cx,
    grid: &[Cx],
    cfg: &QuadratureConfig,
) -> Result<f64> {
    if grid.is_empty() {
        return Err(Error::InvalidParams(
            "starlike check needs at least one grid point".into(),
        ));
    }
    let mut worst = f64::INFINITY;
    for &z in grid {
        let g0 = lemma_g0(theta, lambda, z, cfg)?;
        let h = 1e-5 * z.norm();
        let plus = continue_cube_root(theta, lambda, z, g0, z + h, cfg, 0)?;
        let minus = continue_cube_root(theta, lambda, z, g0, z - h, cfg, 0)?;
        let derivative = (plus - minus) / (2.0 * h);
        let margin = (z * derivative / g0).re;
        if margin < worst {
            worst = margin;
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    fn params(gamma: f64, beta: f64, lambda: Cx, z0: Cx) -> ClassParams {
        ClassParams::new(gamma, beta, lambda, z0).unwrap()
    }

    fn cfg() -> QuadratureConfig {
        QuadratureConfig::default()
    }

    // λ = 0, γ = 0, β = 0, z = 0.5: c = (1 + 1/16)/(1 − 1/16) = 17/15 and
    // r = (1/2)/(15/16) = 8/15, by direct rational arithmetic.
    #[test]
    fn growth_bound_rational_spot() {
        let p = params(0.0, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        let g = growth_bound(cx(0.5, 0.0), &p).unwrap();
        assert!((g.c - cx(17.0 / 15.0, 0.0)).norm() < 1e-15);
        assert!((g.r - 8.0 / 15.0).abs() < 1e-15);
        let o = growth_bound_lambda0(cx(0.5, 0.0), &p).unwrap();
        assert!((o.c - g.c).norm() < 1e-15);
        assert!((o.r - g.r).abs() < 1e-15);
    }

    #[test]
    fn growth_bound_matches_lambda0_oracle() {
        for beta in [0.0, 0.3, 0.75] {
            let p = params(0.0, beta, cx(0.0, 0.0), cx(0.5, 0.0));
            for k in 1..9 {
                let z = Cx::from_polar(0.11 * k as f64, 0.7 * k as f64);
                let g = growth_bound(z, &p).unwrap();
                let o = growth_bound_lambda0(z, &p).unwrap();
                assert!((g.c - o.c).norm() < 1e-12);
                assert!((g.r - o.r).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn growth_bound_at_origin_is_degenerate() {
        let p = params(0.4, 0.3, cx(0.3, -0.2), cx(0.5, 0.0));
        let g = growth_bound(cx(0.0, 0.0), &p).unwrap();
        assert!((g.c - cx(1.0, 0.0)).norm() < 1e-15);
        assert_eq!(g.r, 0.0);
    }

    #[test]
    fn growth_oracle_rejects_off_label_params() {
        let p = params(0.1, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        assert!(growth_bound_lambda0(cx(0.3, 0.0), &p).is_err());
        let p = params(0.0, 0.0, cx(0.2, 0.0), cx(0.5, 0.0));
        assert!(growth_bound_lambda0(cx(0.3, 0.0), &p).is_err());
    }

    #[test]
    fn q_factor_is_lead_coeff_minus_one() {
        for (gamma, beta) in [(0.0, 0.0), (0.7, 0.3), (-1.2, 0.85)] {
            let p = params(gamma, beta, cx(0.0, 0.0), cx(0.5, 0.0));
            let q = q_factor(&p);
            assert!((q - (p.lead_coeff() - Cx::new(1.0, 0.0))).norm() < 1e-15);
        }
    }

    #[test]
    fn kernels_sit_on_the_growth_circle() {
        use crate::kernels::{extremal_h, ExtremalIndex};
        let p = params(0.45, 0.3, cx(0.35, -0.4), cx(0.5, 0.0));
        for i in 0..6 {
            let idx = ExtremalIndex::boundary(TAU * i as f64 / 6.0 - 2.0);
            for k in 1..6 {
                let z = Cx::from_polar(0.15 * k as f64, 1.3 * k as f64);
                let g = growth_bound(z, &p).unwrap();
                let h = extremal_h(z, &idx, &p);
                assert!(
                    ((h - g.c).norm() - g.r).abs() < 1e-12,
                    "kernel must achieve equality: |H − c| = {}, r = {}",
                    (h - g.c).norm(),
                    g.r
                );
            }
        }
    }

    #[test]
    fn members_stay_inside_the_growth_circle() {
        use crate::kernels::{sample_member, SchwarzGenerator};
        let p = params(-0.5, 0.2, cx(0.25, 0.55), cx(0.5, 0.0));
        let gens = [
            SchwarzGenerator::zero(),
            SchwarzGenerator::monomial(cx(0.4, -0.6), 3).unwrap(),
            SchwarzGenerator::blaschke(cx(0.8, 0.6), vec![cx(0.3, -0.1), cx(-0.4, 0.2)]).unwrap(),
        ];
        for gen in gens {
            let member = sample_member(gen, p);
            for k in 1..8 {
                let z = Cx::from_polar(0.12 * k as f64, -0.9 * k as f64);
                let g = growth_bound(z, &p).unwrap();
                assert!((member.eval(z) - g.c).norm() <= g.r + 1e-12);
            }
        }
    }

    #[test]
    fn mobius_triple_reconstructs_the_disk() {
        let p = params(0.6, 0.4, cx(0.3, 0.2), cx(0.5, 0.0));
        for k in 1..8 {
            let z = Cx::from_polar(0.115 * k as f64, 0.8 * k as f64 + 0.3);
            let t = MobiusTriple::new(z, &p).unwrap();
            let g = growth_bound(z, &p).unwrap();
            assert!((t.center() - g.c).norm() < 1e-12);
            assert!((t.radius() - g.r).abs() < 1e-12);
        }
    }

    #[test]
    fn mobius_triple_denominator_identity() {
        // 1 − |z|²|τ|² = (1 − |z|²)(1 + |z|² − 2Re(λz))/|1 − λz|².
        let p = params(-0.3, 0.15, cx(-0.45, 0.3), cx(0.5, 0.0));
        for k in 1..8 {
            let z = Cx::from_polar(0.11 * k as f64, -1.1 * k as f64);
            let t = MobiusTriple::new(z, &p).unwrap();
            let lhs = 1.0 - z.norm_sqr() * t.tau.norm_sqr();
            let den = (Cx::new(1.0, 0.0) - p.lambda * z).norm_sqr();
            let rhs = (1.0 - z.norm_sqr()) * (1.0 + z.norm_sqr() - 2.0 * (p.lambda * z).re) / den;
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }

    #[test]
    fn mobius_triple_rejects_singular_points() {
        let p = params(0.0, 0.0, cx(0.5, 0.0), cx(0.5, 0.0));
        assert!(MobiusTriple::new(cx(0.5, 0.0), &p).is_err());
        let p0 = params(0.0, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        assert!(MobiusTriple::new(cx(0.0, 0.0), &p0).is_err());
    }

    // λ = 0, γ = 0, β = 0, segment 0 → 0.5:
    //   center = ∫ (1+s⁴)/(1−s⁴) ds = −z₀ + atanh(z₀) + atan(z₀)
    //   radius = ∫ 2s²/(1−s⁴) ds  =        atanh(z₀) − atan(z₀)
    // evaluated at z₀ = 0.5: 0.5129537533348609 and 0.0856585353332487.
    #[test]
    fn enclosure_disk_closed_form_spot() {
        let p = params(0.0, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        let seg = Segment::new(cx(0.0, 0.0), p.z0).unwrap();
        let d = enclosure_disk(&p, &seg, &cfg()).unwrap();
        assert!((d.center - cx(0.5129537533348609, 0.0)).norm() < 1e-12);
        assert!((d.radius - 0.0856585353332487).abs() < 1e-12);
    }

    #[test]
    fn enclosure_disk_contains_boundary_points() {
        use crate::regions::{boundary_curve, CurveMethod, RegionBoundary};
        let p = params(0.5, 0.35, cx(0.3, 0.4), cx(-0.4, 0.45));
        let seg = Segment::new(cx(0.0, 0.0), p.z0).unwrap();
        let d = enclosure_disk(&p, &seg, &cfg()).unwrap();
        let curve = match boundary_curve(&p, 64, CurveMethod::ClosedForm, &cfg()).unwrap() {
            RegionBoundary::Curve(c) => c,
            RegionBoundary::Point(_) => panic!("expected a curve"),
        };
        for pt in &curve.points {
            assert!((pt - d.center).norm() <= d.radius + 1e-9);
        }
    }

    #[test]
    fn enclosure_rejects_paths_leaving_the_disk() {
        struct Spiral;
        impl C1Path for Spiral {
            fn at(&self, t: f64) -> Cx {
                Cx::from_polar(1.2 * t, t)
            }
            fn derivative(&self, _t: f64) -> Cx {
                Cx::new(1.2, 0.0)
            }
        }
        let p = params(0.0, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        assert!(enclosure_disk(&p, &Spiral, &cfg()).is_err());
    }

    #[test]
    fn segment_validation() {
        assert!(Segment::new(cx(0.0, 0.0), cx(1.0, 0.0)).is_err());
        assert!(Segment::new(cx(0.99, 0.0), cx(0.0, 0.99)).is_ok());
    }

    // θ = 0, λ = 0: the integrand is ζ²/(1 − ζ²)², whose antiderivative is
    // ½(ζ/(1 − ζ²) − atanh(ζ)); at z = 0.5 this is 0.0586802611663059.
    #[test]
    fn lemma_g_closed_form_spot() {
        let v = lemma_g(0.0, cx(0.0, 0.0), cx(0.5, 0.0), &cfg()).unwrap();
        assert!((v - cx(0.0586802611663059, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn lemma_g_cubic_leading_term() {
        // |G(z)/(e^{iθ}z³/3) − 1| is O(|z|) near the origin.
        for (theta, lambda) in [(0.0, cx(0.0, 0.0)), (1.3, cx(0.4, -0.5)), (-2.2, cx(-0.7, 0.1))]
        {
            let z = Cx::from_polar(1e-3, 0.4);
            let g = lemma_g(theta, lambda, z, &cfg()).unwrap();
            let leading = Cx::from_polar(1.0, theta) * z * z * z / 3.0;
            assert!((g / leading - Cx::new(1.0, 0.0)).norm() < 1e-2);
        }
    }

    #[test]
    fn lemma_g0_cubes_back() {
        for (theta, lambda, z) in [
            (0.0, cx(0.0, 0.0), cx(0.5, 0.0)),
            (1.1, cx(0.3, 0.4), cx(-0.3, 0.55)),
            (-2.6, cx(-0.2, -0.6), cx(0.1, -0.8)),
        ] {
            let g0 = lemma_g0(theta, lambda, z, &cfg()).unwrap();
            let g = lemma_g(theta, lambda, z, &cfg()).unwrap();
            let target = g * Cx::from_polar(3.0, -theta);
            assert!((g0.powu(3) - target).norm() < 1e-9);
            // The branch is the one tangent to the identity at the origin.
            let small = z / z.norm() * 2e-3;
            let g0s = lemma_g0(theta, lambda, small, &cfg()).unwrap();
            assert!((g0s / small - Cx::new(1.0, 0.0)).norm() < 1e-2);
        }
    }

    #[test]
    fn lemma_g0_rejects_tiny_z() {
        let r = lemma_g0(0.3, cx(0.1, 0.1), cx(5e-4, 0.0), &cfg());
        assert!(matches!(r, Err(Error::BranchAmbiguity { .. })));
    }

    #[test]
    fn starlike_margin_positive_and_matches_branch_free_route() {
        let theta = 0.9;
        let lambda = cx(0.35, -0.25);
        let grid: Vec<Cx> = (0..12)
            .map(|k| Cx::from_polar(0.05 + 0.07 * k as f64, 0.5 * k as f64))
            .collect();
        let worst = lemma_g0_starlike_check(theta, lambda, &grid, &cfg()).unwrap();
        assert!(worst > 0.0, "starlike margin must be positive, got {worst}");

        for &z in grid.iter().step_by(4) {
            let g0 = lemma_g0(theta, lambda, z, &cfg()).unwrap();
            let h = 1e-5 * z.norm();
            let plus = continue_cube_root(theta, lambda, z, g0, z + h, &cfg(), 0).unwrap();
            let minus = continue_cube_root(theta, lambda, z, g0, z - h, &cfg(), 0).unwrap();
            let fd = z * ((plus - minus) / (2.0 * h)) / g0;
            let free = lemma_g_log_derivative(theta, lambda, z, &cfg()).unwrap();
            assert!(
                (fd - free).norm() < 1e-6,
                "FD route {fd} vs branch-free route {free}"
            );
        }
    }
}
