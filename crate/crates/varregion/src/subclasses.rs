//! Two univalent families carried by the same positive-real-part machinery:
//! the class of functions with `Re f′ > β` (where the region of variability
//! of `f(z₀)` is exactly the γ = 0 region of the main class), and the
//! ODE-defined family `Re(f′ + αzf″) > β` with `Re α > 0`, whose functional
//! `(1−α)f(z₀) + αz₀f′(z₀)` varies over the same region.
//!
//! Every formula here is transcribed independently of the `regions` and
//! `bounds` modules, so agreement between the two routes is a genuine check
//! rather than a tautology.

use std::f64::consts::TAU;

use rayon::prelude::*;

use crate::bounds::GrowthBound;
use crate::error::{Error, Result};
use crate::kernels::ClassParams;
use crate::numerics::quadrature::{integrate_segment, integrate_unit_interval, QuadratureConfig};
use crate::regions::{degenerate_point, theta_grid, BoundaryCurve, CurveMethod, RegionBoundary};
use crate::Cx;

/// Parameters for the family with `Re f′ > β` and prescribed
/// `f″(0) = 2(1−β)λ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubclassParamsR {
    pub beta: f64,
    pub lambda: Cx,
    pub z0: Cx,
}

impl SubclassParamsR {
    pub fn new(beta: f64, lambda: Cx, z0: Cx) -> Result<Self> {
        // Validation is shared with the parent class at γ = 0.
        let p = ClassParams::new(0.0, beta, lambda, z0)?;
        Ok(Self {
            beta: p.beta,
            lambda: p.lambda,
            z0: p.z0,
        })
    }

    /// The parent-class parameters this family restricts (`γ = 0`).
    pub fn as_class_params(&self) -> ClassParams {
        ClassParams::new(0.0, self.beta, self.lambda, self.z0)
            .expect("validated at construction")
    }
}

/// Boundary point of the region of `f(z₀)` at angle `θ`, by the family's
/// own integral representation:
///
/// ```text
/// z₀ + 2(1−β)·∫₀^{z₀} (e^{iθ}ζ + λ)ζ / (1 + conj(λ)e^{iθ}ζ − (e^{iθ}ζ + λ)ζ) dζ
/// ```
///
/// The denominator's roots lie on the unit circle, so the integrand is
/// analytic on the segment for any `|λ| ≤ 1`.
pub fn vr_boundary_point(theta: f64, p: &SubclassParamsR, cfg: &QuadratureConfig) -> Result<Cx> {
    let e = Cx::from_polar(1.0, theta);
    let l = p.lambda;
    let integral = integrate_segment(
        |zeta| {
            let num = (e * zeta + l) * zeta;
            let den = Cx::new(1.0, 0.0) + l.conj() * e * zeta - num;
            num / den
        },
        Cx::new(0.0, 0.0),
        p.z0,
        cfg,
    )?;
    Ok(p.z0 + integral * (2.0 * (1.0 - p.beta)))
}

/// Sampled boundary of the region of `f(z₀)` over the family with
/// `Re f′ > β`, via [`vr_boundary_point`] (evaluated in parallel).
/// Degenerates to a point when `|λ| = 1` or `z₀ = 0`.
pub fn vr_boundary(p: &SubclassParamsR, n: usize, cfg: &QuadratureConfig) -> Result<RegionBoundary> {
    if n < 16 {
        return Err(Error::InvalidParams(format!(
            "a boundary curve needs at least 16 samples, got {n}"
        )));
    }
    let class = p.as_class_params();
    if p.z0.norm() == 0.0 {
        return Ok(RegionBoundary::Point(Cx::new(0.0, 0.0)));
    }
    if (p.lambda.norm() - 1.0).abs() <= 1e-12 {
        return Ok(RegionBoundary::Point(degenerate_point(&class)?));
    }
    let thetas = theta_grid(n);
    let points: Vec<Cx> = thetas
        .par_iter()
        .map(|&t| vr_boundary_point(t, p, cfg))
        .collect::<Result<_>>()?;
    Ok(RegionBoundary::Curve(BoundaryCurve {
        params: class,
        thetas,
        points,
        method: CurveMethod::Quadrature,
    }))
}

/// Sup-norm check for the weighted derivative over the family with
/// `Re f′ > β`, `0 ≤ β < 1/2`: evaluates `(1 − |z|²)·|f′(z)|` for the
/// extremal derivative `f′(z) = (1 + (1 − 2β)z²)/(1 − z²)` — the
/// derivative of `(2β−1)z + (1−β)log((1+z)/(1−z))` — on the polar grid
/// `r_i = R(i+1)/n`, `φ_j = 2πj/n`, and returns `(sup, 2(1 − β))`.
///
/// The supremum over the whole disk equals the bound `2(1 − β)`; it is
/// approached (not attained) as `|z| → 1` along the real axis, so the grid
/// value is strictly below the bound but tends to it as `R → 1`.  For
/// `β ≥ 1/2` the weighted derivative is maximal at the origin instead and
/// the bound takes a different form, hence the restriction.
pub fn rbeta_sup_bound_check(beta: f64, grid_radius: f64, n_grid: usize) -> Result<(f64, f64)> {
    if !(0.0..0.5).contains(&beta) {
        return Err(Error::InvalidParams(format!(
            "the sup bound requires 0 ≤ beta < 1/2, got {beta}"
        )));
    }
    if !grid_radius.is_finite() || !(grid_radius > 0.0 && grid_radius < 1.0) {
        return Err(Error::InvalidParams(format!(
            "grid radius must lie in (0, 1), got {grid_radius}"
        )));
    }
    if n_grid == 0 {
        return Err(Error::InvalidParams("grid needs at least one point".into()));
    }
    let one = Cx::new(1.0, 0.0);
    let k = 1.0 - 2.0 * beta;
    let mut sup = 0.0f64;
    for i in 0..n_grid {
        let r = grid_radius * (i + 1) as f64 / n_grid as f64;
        for j in 0..n_grid {
            let z = Cx::from_polar(r, TAU * j as f64 / n_grid as f64);
            let fp = (one + z * z * k) / (one - z * z);
            let v = (1.0 - z.norm_sqr()) * fp.norm();
            if v > sup {
                sup = v;
            }
        }
    }
    Ok((sup, 2.0 * (1.0 - beta)))
}

/// Parameters for the ODE-defined family `Re(f′ + αzf″) > β`, `Re α > 0`,
/// with prescribed `f″(0) = 2(1−β)λ/(1+α)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SubclassParamsF {
    pub alpha: Cx,
    pub beta: f64,
    pub lambda: Cx,
    pub z0: Cx,
}

impl SubclassParamsF {
    pub fn new(alpha: Cx, beta: f64, lambda: Cx, z0: Cx) -> Result<Self> {
        if !(alpha.re.is_finite() && alpha.im.is_finite()) || alpha.re <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "alpha must satisfy Re(alpha) > 0, got {alpha}"
            )));
        }
        let p = ClassParams::new(0.0, beta, lambda, z0)?;
        Ok(Self {
            alpha,
            beta: p.beta,
            lambda: p.lambda,
            z0: p.z0,
        })
    }

    /// The parent-class parameters of `P = f′ + αzf″` (`γ = 0`; `α` only
    /// matters when recovering `f` itself from `P`).
    pub fn as_class_params(&self) -> ClassParams {
        ClassParams::new(0.0, self.beta, self.lambda, self.z0)
            .expect("validated at construction")
    }
}

/// Boundary point at angle `θ` of the region of
/// `(1−α)f(z₀) + αz₀f′(z₀)`, in closed form: with
/// `b = Im(conj(λ)e^{iθ/2})`,
///
/// ```text
/// (2β−1)z₀ + (1−β)e^{−iθ/2}/√(1−b²) ·
///   [ (1 + conj(λ)e^{iθ/2}(−√(1−b²) + ib))·log(1 + e^{iθ/2}z₀/(√(1−b²) − ib))
///   − (1 + conj(λ)e^{iθ/2}( √(1−b²) + ib))·log(1 − e^{iθ/2}z₀/(√(1−b²) + ib)) ]
/// ```
///
/// Note the boundary does not depend on `α`.  Requires `|λ| < 1`.
pub fn vg_boundary_point(theta: f64, p: &SubclassParamsF) -> Result<Cx> {
    if p.lambda.norm() >= 1.0 - 1e-12 {
        return Err(Error::InvalidParams(format!(
            "closed form requires |lambda| < 1 (the region degenerates \
             to a point at |lambda| = 1); got |lambda| = {}",
            p.lambda.norm()
        )));
    }
    let half = Cx::from_polar(1.0, 0.5 * theta);
    let b = (p.lambda.conj() * half).im;
    let s = (1.0 - b * b).sqrt();

    let arg1 = Cx::new(1.0, 0.0) + half * p.z0 / Cx::new(s, -b);
    let arg2 = Cx::new(1.0, 0.0) - half * p.z0 / Cx::new(s, b);
    assert!(
        arg1.re > 0.0 && arg2.re > 0.0,
        "log arguments must stay in the right half plane for |z0| < 1 \
         (got {arg1}, {arg2})"
    );
    let pre1 = Cx::new(1.0, 0.0) + p.lambda.conj() * half * Cx::new(-s, b);
    let pre2 = Cx::new(1.0, 0.0) + p.lambda.conj() * half * Cx::new(s, b);

    let front = half.conj() * ((1.0 - p.beta) / s);
    Ok(p.z0 * (2.0 * p.beta - 1.0) + front * (pre1 * arg1.ln() - pre2 * arg2.ln()))
}

/// Sampled boundary of the region of `(1−α)f(z₀) + αz₀f′(z₀)` via
/// [`vg_boundary_point`].  Degenerates to a point when `|λ| = 1` or
/// `z₀ = 0`.
pub fn vg_boundary_closed_form(p: &SubclassParamsF, n: usize) -> Result<RegionBoundary> {
    if n < 16 {
        return Err(Error::InvalidParams(format!(
            "a boundary curve needs at least 16 samples, got {n}"
        )));
    }
    let class = p.as_class_params();
    if p.z0.norm() == 0.0 {
        return Ok(RegionBoundary::Point(Cx::new(0.0, 0.0)));
    }
    if (p.lambda.norm() - 1.0).abs() <= 1e-12 {
        return Ok(RegionBoundary::Point(degenerate_point(&class)?));
    }
    let thetas = theta_grid(n);
    let points: Vec<Cx> = thetas
        .iter()
        .map(|&t| vg_boundary_point(t, p))
        .collect::<Result<_>>()?;
    Ok(RegionBoundary::Curve(BoundaryCurve {
        params: class,
        thetas,
        points,
        method: CurveMethod::ClosedForm,
    }))
}

/// Pointwise bound on `P(z) = f′(z) + αzf″(z)` over the family:
/// `|P(z) − c| ≤ r` with
///
/// ```text
/// c = [(1 + (1−2β)λz)(1 − conj(λ)conj(z)) + |z|²(conj(z) − λ)(conj(λ) + (1−2β)z)] / d
/// r = 2(1−β)(1 − |λ|²)|z|² / d,   d = (1 − |z|²)(1 + |z|² − 2Re(λz))
/// ```
///
/// Requires `|z| < 1`.
pub fn vg_membership_bound(z: Cx, p: &SubclassParamsF) -> Result<GrowthBound> {
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
        return Err(Error::InvalidParams(format!(
            "membership bound requires |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    let one = Cx::new(1.0, 0.0);
    let l = p.lambda;
    let k = 1.0 - 2.0 * p.beta;
    let zn2 = z.norm_sqr();
    let den = (1.0 - zn2) * (1.0 + zn2 - 2.0 * (l * z).re);
    let num = (one + l * z * k) * (one - l.conj() * z.conj())
        + (z.conj() - l) * (l.conj() + z * k) * zn2;
    Ok(GrowthBound {
        c: num / den,
        r: 2.0 * (1.0 - p.beta) * (1.0 - l.norm_sqr()) * zn2 / den,
    })
}

/// Threshold below which `|α − 1|` routes `f_a0` through its logarithmic
/// limit branch instead of dividing by `1 − α`.
pub const ALPHA_LOG_BRANCH: f64 = 1e-9;

/// The explicit family member with `λ = 0` and index `a` (`|a| ≤ 1`):
///
/// ```text
/// α ≠ 1:  z + (1−β)az³/(1−α) · ∫₀¹ (t^{1/2} − t^{1/(2α)})/(1 − taz²) dt
/// α = 1:  z + (1−β)az³/2     · ∫₀¹ t^{1/2}·log(1/t)/(1 − taz²) dt
/// ```
///
/// Both integrals are evaluated after the substitution `t = u²`, which
/// removes the square-root kink at `t = 0`:
///
/// ```text
/// α ≠ 1:  ∫₀¹ 2u(u − u^{1/α})/(1 − az²u²) du
/// α = 1:  ∫₀¹ −4u²·ln(u)/(1 − az²u²) du
/// ```
///
/// It satisfies `F′ + αzF″ = (1 + (1−2β)az²)/(1 − az²)` and
/// `F‴(0) = 4a(1−β)/(1 + 2α)`.
pub fn f_a0(p: &SubclassParamsF, a: Cx, z: Cx, cfg: &QuadratureConfig) -> Result<Cx> {
    if !(a.re.is_finite() && a.im.is_finite()) || a.norm() > 1.0 + 1e-12 {
        return Err(Error::InvalidParams(format!(
            "index must satisfy |a| ≤ 1, got |a| = {}",
            a.norm()
        )));
    }
    if !(z.re.is_finite() && z.im.is_finite()) || z.norm() >= 1.0 {
        return Err(Error::InvalidParams(format!(
            "f_a0 requires |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    if a.norm() == 0.0 || z.norm() == 0.0 {
        return Ok(z);
    }
    let one = Cx::new(1.0, 0.0);
    let az2 = a * z * z;
    if (p.alpha - one).norm() < ALPHA_LOG_BRANCH {
        let integral = integrate_unit_interval(
            |u| {
                if u <= 0.0 {
                    return Cx::new(0.0, 0.0);
                }
                Cx::new(-4.0 * u * u * u.ln(), 0.0) / (one - az2 * (u * u))
            },
            cfg,
        )?;
        Ok(z + a * z.powu(3) * ((1.0 - p.beta) / 2.0) * integral)
    } else {
        let exponent = one / p.alpha;
        let integral = integrate_unit_interval(
            |u| {
                if u <= 0.0 {
                    return Cx::new(0.0, 0.0);
                }
                let u_pow = Cx::new(u, 0.0).powc(exponent);
                (Cx::new(u, 0.0) - u_pow) * (2.0 * u) / (one - az2 * (u * u))
            },
            cfg,
        )?;
        Ok(z + a * z.powu(3) * (1.0 - p.beta) / (one - p.alpha) * integral)
    }
}
