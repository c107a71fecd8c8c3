//! The region of variability of `∫₀^{z₀} P(ζ) dζ`: its boundary curve via
//! two independent routes (direct quadrature of the extremal kernels and a
//! closed form built from principal logarithms), the interior center, and
//! the degenerate single-point case `|λ| = 1`.
//!
//! The region is a closed convex set whose boundary is traced bijectively by
//! `θ ↦ ∫₀^{z₀} H_{e^{iθ},λ}(ζ) dζ` for `θ ∈ (−π, π]` whenever `0 < |λ| < 1`
//! and `z₀ ≠ 0`.  When `|λ| = 1` the slice contains a single function and
//! the region collapses to one point; when `λ = 0` the curve remains a valid
//! boundary parameterization (the region is a disk-like convex set centered
//! at `z₀`).

use std::f64::consts::{PI, TAU};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::kernels::{extremal_h, ClassParams, ExtremalIndex};
use crate::numerics::geometry::Polygon;
use crate::numerics::quadrature::{integrate_segment, QuadratureConfig};
use crate::Cx;

/// Which route produced a boundary curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveMethod {
    /// Principal-logarithm closed form (requires `|λ| < 1`).
    ClosedForm,
    /// Adaptive quadrature of the extremal kernel (any `|λ| ≤ 1`).
    Quadrature,
}

impl CurveMethod {
    pub fn name(&self) -> &'static str {
        match self {
            CurveMethod::ClosedForm => "closed-form",
            CurveMethod::Quadrature => "quadrature",
        }
    }
}

/// A sampled boundary curve: `points[k] = ∫₀^{z₀} H_{e^{iθ_k},λ}` on the
/// uniform angle grid `θ_k = −π + 2π(k+1)/n`, which ends exactly at `π`.
#[derive(Debug, Clone)]
pub struct BoundaryCurve {
    pub params: ClassParams,
    pub thetas: Vec<f64>,
    pub points: Vec<Cx>,
    pub method: CurveMethod,
}

impl BoundaryCurve {
    /// The sampled points as a closed polygon (consecutive duplicates
    /// rejected by the polygon's own validation).
    pub fn polygon(&self) -> Result<Polygon> {
        Polygon::new(self.points.clone())
    }

    /// Largest gap between cyclically adjacent samples — a resolution
    /// indicator for containment tests against the sampled boundary.
    pub fn max_adjacent_gap(&self) -> f64 {
        let n = self.points.len();
        (0..n)
            .map(|i| (self.points[(i + 1) % n] - self.points[i]).norm())
            .fold(0.0, f64::max)
    }
}

/// Boundary description: a single point in the degenerate case `|λ| = 1`
/// (or `z₀ = 0`), otherwise a sampled closed curve.
#[derive(Debug, Clone)]
pub enum RegionBoundary {
    Point(Cx),
    Curve(BoundaryCurve),
}

/// The uniform angle grid `θ_k = −π + 2π(k+1)/n`, `k = 0, …, n−1`.
///
/// The final angle is exactly `π`, the midpoint of the enumeration of
/// `(−π, π]`, so the curve closes without duplicating `−π`.
pub fn theta_grid(n: usize) -> Vec<f64> {
    (0..n).map(|k| -PI + TAU * (k + 1) as f64 / n as f64).collect()
}

/// Shared scalar/complex quantities of the closed-form boundary expression
/// at angle `θ`: the real number `b = Im(conj(λ)·e^{iθ/2})`, the square root
/// `s = √(1 − b²)`, the two roots `z₁, z₂` of the kernel denominator
/// (`z₁·z₂ = −e^{−iθ}`), and the log prefactor `k`.
#[derive(Debug, Clone, Copy)]
pub struct ClosedFormTerms {
    pub b: f64,
    pub sqrt_term: f64,
    pub z1: Cx,
    pub z2: Cx,
    pub k: Cx,
}

impl ClosedFormTerms {
    /// Requires `|λ| < 1` (away from the degenerate collapse, so that
    /// `s ≥ √(1 − |λ|²) > 0`).
    pub fn new(theta: f64, p: &ClassParams) -> Result<Self> {
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
        let z1 = half.conj() * Cx::new(s, b);
        let z2 = half.conj() * Cx::new(-s, b);
        let k = half.conj()
            * Cx::new(0.0, -p.gamma).exp()
            * ((1.0 - p.beta) * p.gamma.cos() / s);
        Ok(Self {
            b,
            sqrt_term: s,
            z1,
            z2,
            k,
        })
    }
}

/// Boundary point at angle `θ` by adaptive quadrature of the kernel:
/// `∫₀^{z₀} H_{e^{iθ},λ}(ζ) dζ` along the straight segment.
///
/// Valid for every `|λ| ≤ 1` (at `|λ| = 1` the result is independent of `θ`).
pub fn boundary_point_quadrature(
    theta: f64,
    p: &ClassParams,
    cfg: &QuadratureConfig,
) -> Result<Cx> {
    let idx = ExtremalIndex::boundary(theta);
    integrate_segment(|z| extremal_h(z, &idx, p), Cx::new(0.0, 0.0), p.z0, cfg)
}

/// Boundary point at angle `θ` in closed form: with `b`, `s = √(1−b²)` and
/// `K` as in [`ClosedFormTerms`],
///
/// ```text
/// (1 − 2(1−β)e^{−iγ}cos γ)·z₀
///   + K·[ (1 + conj(λ)e^{iθ/2}(−s + ib))·log(1 + e^{iθ/2}z₀/(s − ib))
///       − (1 + conj(λ)e^{iθ/2}( s + ib))·log(1 − e^{iθ/2}z₀/(s + ib)) ]
/// ```
///
/// Both logarithm arguments are `1 + (unimodular)·z₀`-shaped, hence have
/// strictly positive real part for `|z₀| < 1`; the principal branch is
/// therefore the correct one, and this is asserted at runtime.
pub fn boundary_point_closed_form(theta: f64, p: &ClassParams) -> Result<Cx> {
    let terms = ClosedFormTerms::new(theta, p)?;
    let half = Cx::from_polar(1.0, 0.5 * theta);
    let (b, s) = (terms.b, terms.sqrt_term);

    // 1/(s − ib) = s + ib and 1/(s + ib) = s − ib because s² + b² = 1.
    let arg1 = Cx::new(1.0, 0.0) + half * p.z0 * Cx::new(s, b);
    let arg2 = Cx::new(1.0, 0.0) - half * p.z0 * Cx::new(s, -b);
    assert!(
        arg1.re > 0.0 && arg2.re > 0.0,
        "log arguments must stay in the right half plane for |z0| < 1 \
         (got {arg1}, {arg2})"
    );

    let pre1 = Cx::new(1.0, 0.0) + p.lambda.conj() * half * Cx::new(-s, b);
    let pre2 = Cx::new(1.0, 0.0) + p.lambda.conj() * half * Cx::new(s, b);

    let value = (Cx::new(1.0, 0.0) - p.lead_coeff()) * p.z0
        + terms.k * (pre1 * arg1.ln() - pre2 * arg2.ln());
    Ok(value)
}

/// Independent `λ = 0` oracle for the boundary point:
/// `z₀ + 2(1−β)e^{−iγ}cos γ·(−z₀ + e^{−iθ/2}·atanh(e^{iθ/2} z₀))`,
/// obtained by integrating `1 + c·e^{iθ}ζ²/(1 − e^{iθ}ζ²)` term by term.
///
/// # Errors
/// `InvalidParams` when `λ ≠ 0`.
pub fn boundary_point_lambda0(theta: f64, p: &ClassParams) -> Result<Cx> {
    if p.lambda.norm() != 0.0 {
        return Err(Error::InvalidParams(format!(
            "this route is specific to lambda = 0, got lambda = {}",
            p.lambda
        )));
    }
    let half = Cx::from_polar(1.0, 0.5 * theta);
    let w = half * p.z0;
    // atanh(w) = ½ log((1+w)/(1−w)); the Cayley quotient has positive real
    // part for |w| < 1, so the principal log is safe.
    let quot = (Cx::new(1.0, 0.0) + w) / (Cx::new(1.0, 0.0) - w);
    assert!(quot.re > 0.0, "Cayley quotient left the right half plane");
    let atanh = quot.ln() * 0.5;
    Ok(p.z0 + p.lead_coeff() * (half.conj() * atanh - p.z0))
}

/// Sample the boundary of the region on `n ≥ 16` angles.
///
/// Returns [`RegionBoundary::Point`] when the region degenerates
/// (`|λ| = 1` within 1e-12, or `z₀ = 0`); otherwise a closed curve.  The
/// quadrature route evaluates angles in parallel; the result is ordered by
/// angle and independent of thread count.
pub fn boundary_curve(
    p: &ClassParams,
    n: usize,
    method: CurveMethod,
    cfg: &QuadratureConfig,
) -> Result<RegionBoundary> {
    if n < 16 {
        return Err(Error::InvalidParams(format!(
            "a boundary curve needs at least 16 samples, got {n}"
        )));
    }
    if p.z0.norm() == 0.0 {
        return Ok(RegionBoundary::Point(Cx::new(0.0, 0.0)));
    }
    if (p.lambda.norm() - 1.0).abs() <= 1e-12 {
        return Ok(RegionBoundary::Point(degenerate_point(p)?));
    }

    let thetas = theta_grid(n);
    let points: Vec<Cx> = match method {
        CurveMethod::ClosedForm => thetas
            .iter()
            .map(|&t| boundary_point_closed_form(t, p))
            .collect::<Result<_>>()?,
        CurveMethod::Quadrature => thetas
            .par_iter()
            .map(|&t| boundary_point_quadrature(t, p, cfg))
            .collect::<Result<_>>()?,
    };

    Ok(RegionBoundary::Curve(BoundaryCurve {
        params: *p,
        thetas,
        points,
        method,
    }))
}

/// `z₀ − 2(1−β)e^{−iγ}cos γ·(z₀ + log(1 − λz₀)/λ)`, the common expression
/// behind both the degenerate point and the interior center.  Near `λ = 0`
/// the parenthesis is evaluated by its power series
/// `−(λz₀²/2 + λ²z₀³/3 + λ³z₀⁴/4 + λ⁴z₀⁵/5)` to avoid cancellation; the
/// switch happens at `|λ| < 1e-6`, where the truncation error is far below
/// machine precision.  At `λ = 0` exactly, the expression is exactly `z₀`.
fn center_expression(p: &ClassParams) -> Cx {
    let z0 = p.z0;
    let paren = if p.lambda.norm() < 1e-6 {
        let l = p.lambda;
        -(l * z0.powu(2) / 2.0
            + l.powu(2) * z0.powu(3) / 3.0
            + l.powu(3) * z0.powu(4) / 4.0
            + l.powu(4) * z0.powu(5) / 5.0)
    } else {
        // |λz₀| < 1 keeps 1 − λz₀ in the right half plane: principal log.
        z0 + (Cx::new(1.0, 0.0) - p.lambda * z0).ln() / p.lambda
    };
    z0 - p.lead_coeff() * paren
}

/// The single point the region collapses to when `|λ| = 1`:
/// `z₀ − 2(1−β)e^{−iγ}cos γ·(z₀ + log(1 − λz₀)/λ)`.
///
/// Also accepts `z₀ = 0` (the region is `{0}` regardless of `λ`).
///
/// # Errors
/// `InvalidParams` when `z₀ ≠ 0` and `|λ|` is not within 1e-12 of 1.
pub fn degenerate_point(p: &ClassParams) -> Result<Cx> {
    if p.z0.norm() == 0.0 {
        return Ok(Cx::new(0.0, 0.0));
    }
    if (p.lambda.norm() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidParams(format!(
            "the region degenerates only at |lambda| = 1, got |lambda| = {}",
            p.lambda.norm()
        )));
    }
    Ok(center_expression(p))
}

/// The distinguished interior point `∫₀^{z₀} H_{0,λ}(ζ) dζ` (the image of
/// the kernel with index `a = 0`), which the same expression as
/// [`degenerate_point`] evaluates in closed form.  For `λ = 0` this is
/// exactly `z₀`.
///
/// The closed form is cross-checked against direct quadrature of `H_{0,λ}`
/// and the call panics if the two routes disagree by more than 1e-8.
pub fn interior_center(p: &ClassParams, cfg: &QuadratureConfig) -> Result<Cx> {
    let value = center_expression(p);
    let idx = ExtremalIndex::interior(Cx::new(0.0, 0.0))?;
    let check = integrate_segment(|z| extremal_h(z, &idx, p), Cx::new(0.0, 0.0), p.z0, cfg)?;
    assert!(
        (value - check).norm() <= 1e-8,
        "closed-form center {value} and quadrature {check} disagree"
    );
    Ok(value)
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

    #[test]
    fn theta_grid_ends_exactly_at_pi() {
        let g = theta_grid(720);
        assert_eq!(g.len(), 720);
        assert_eq!(*g.last().unwrap(), PI);
        assert!(g[0] > -PI);
        for w in g.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    // Closed-form spot value: γ = β = 0, λ = 0, z₀ = 0.5, θ = 0 gives
    // −z₀ + log((1 + z₀)/(1 − z₀)) = −0.5 + log 3 = 0.5986122886681098.
    #[test]
    fn closed_form_theta_zero_spot() {
        let p = params(0.0, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        let v = boundary_point_closed_form(0.0, &p).unwrap();
        assert!((v - cx(0.5986122886681098, 0.0)).norm() < 1e-12);
    }

    // Same instance at θ = π: −z₀ + 2·atan(z₀) = 0.4272952180016122.
    #[test]
    fn closed_form_theta_pi_spot() {
        let p = params(0.0, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        let v = boundary_point_closed_form(PI, &p).unwrap();
        assert!((v - cx(0.4272952180016122, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn quadrature_route_matches_spots() {
        let p = params(0.0, 0.0, cx(0.0, 0.0), cx(0.5, 0.0));
        let v0 = boundary_point_quadrature(0.0, &p, &cfg()).unwrap();
        assert!((v0 - cx(0.5986122886681098, 0.0)).norm() < 1e-11);
        let vpi = boundary_point_quadrature(PI, &p, &cfg()).unwrap();
        assert!((vpi - cx(0.4272952180016122, 0.0)).norm() < 1e-11);
    }

    #[test]
    fn lambda0_oracle_matches_closed_form() {
        let p = params(0.35, 0.2, cx(0.0, 0.0), cx(0.3, -0.55));
        for &theta in &theta_grid(64) {
            let a = boundary_point_lambda0(theta, &p).unwrap();
            let b = boundary_point_closed_form(theta, &p).unwrap();
            assert!(
                (a - b).norm() < 1e-12,
                "θ = {theta}: oracle {a} vs closed form {b}"
            );
        }
    }

    #[test]
    fn lambda0_oracle_rejects_nonzero_lambda() {
        let p = params(0.0, 0.0, cx(0.1, 0.0), cx(0.5, 0.0));
        assert!(boundary_point_lambda0(0.0, &p).is_err());
    }

    #[test]
    fn dual_route_agreement_random_instances() {
        let instances = [
            params(0.3, 0.25, cx(0.4, -0.2), cx(0.5, 0.3)),
            params(-0.9, 0.6, cx(-0.1, 0.7), cx(-0.2, -0.6)),
            params(1.2, 0.05, cx(0.05, 0.05), cx(0.85, 0.1)),
            params(0.0, 0.85, cx(-0.6, -0.3), cx(0.1, 0.8)),
        ];
        for p in instances {
            for &theta in &[-2.9, -1.3, 0.0, 0.7, 2.2, PI] {
                let q = boundary_point_quadrature(theta, &p, &cfg()).unwrap();
                let c = boundary_point_closed_form(theta, &p).unwrap();
                assert!(
                    (q - c).norm() < 1e-9,
                    "θ = {theta}: quadrature {q} vs closed form {c}"
                );
            }
        }
    }

    #[test]
    fn denominator_roots_multiply_to_minus_exp() {
        let p = params(0.4, 0.3, cx(0.35, -0.45), cx(0.5, 0.2));
        for &theta in &theta_grid(17) {
            let t = ClosedFormTerms::new(theta, &p).unwrap();
            let prod = t.z1 * t.z2;
            let target = -Cx::from_polar(1.0, -theta);
            assert!((prod - target).norm() < 1e-14);
            // And both are genuine roots of 1 + (conj(λ)e^{iθ} − λ)z − e^{iθ}z².
            let e = Cx::from_polar(1.0, theta);
            for z in [t.z1, t.z2] {
                let val = Cx::new(1.0, 0.0) + (p.lambda.conj() * e - p.lambda) * z - e * z * z;
                assert!(val.norm() < 1e-13);
            }
        }
    }

    #[test]
    fn closed_form_rejects_unimodular_lambda() {
        let p = params(0.0, 0.0, cx(1.0, 0.0), cx(0.5, 0.0));
        assert!(boundary_point_closed_form(0.0, &p).is_err());
        // Quadrature still works there and is θ-independent.
        let a = boundary_point_quadrature(0.3, &p, &cfg()).unwrap();
        let b = boundary_point_quadrature(-2.1, &p, &cfg()).unwrap();
        assert!((a - b).norm() < 1e-11);
    }

    // Degenerate point at λ = 1, γ = β = 0, z₀ = 0.5:
    // z₀ − 2(z₀ + log(1 − z₀)) = −0.5 + 2 log 2 = 0.8862943611198906.
    #[test]
    fn degenerate_point_spot() {
        let p = params(0.0, 0.0, cx(1.0, 0.0), cx(0.5, 0.0));
        let v = degenerate_point(&p).unwrap();
        assert!((v - cx(0.8862943611198906, 0.0)).norm() < 1e-12);

        // β = ½ halves the coefficient: −log(1 − z₀)/λ·(…) = log 2.
        let p = params(0.0, 0.5, cx(1.0, 0.0), cx(0.5, 0.0));
        let v = degenerate_point(&p).unwrap();
        assert!((v - cx(std::f64::consts::LN_2, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn degenerate_point_matches_quadrature() {
        // The degenerate value equals the kernel integral (for any index —
        // they all coincide at |λ| = 1).
        let p = params(0.55, 0.3, Cx::from_polar(1.0, 2.0), cx(0.4, -0.35));
        let v = degenerate_point(&p).unwrap();
        let q = boundary_point_quadrature(1.234, &p, &cfg()).unwrap();
        assert!((v - q).norm() < 1e-10);
    }

    #[test]
    fn degenerate_point_rejects_interior_lambda() {
        let p = params(0.0, 0.0, cx(0.5, 0.0), cx(0.5, 0.0));
        assert!(degenerate_point(&p).is_err());
    }

    #[test]
    fn degenerate_point_at_origin() {
        let p = params(0.0, 0.0, cx(0.5, 0.0), cx(0.0, 0.0));
        assert_eq!(degenerate_point(&p).unwrap(), cx(0.0, 0.0));
    }

    // Interior center at γ = β = 0, λ = z₀ = 0.5:
    // z₀ − 2(z₀ + 2 log(0.75)) = 0.6507282898071237.
    #[test]
    fn interior_center_spot() {
        let p = params(0.0, 0.0, cx(0.5, 0.0), cx(0.5, 0.0));
        let v = interior_center(&p, &cfg()).unwrap();
        assert!((v - cx(0.6507282898071237, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn interior_center_lambda0_is_exactly_z0() {
        let p = params(0.7, 0.4, cx(0.0, 0.0), cx(0.3, -0.6));
        let v = interior_center(&p, &cfg()).unwrap();
        assert_eq!(v, p.z0);
    }

    #[test]
    fn center_series_switch_is_continuous() {
        // Straddle the |λ| = 1e-6 series threshold so tightly that the
        // genuine first-order λ-dependence (|∂center/∂λ| ≈ 0.4 here, so
        // ~1e-13 over this gap) cannot mask a branch discontinuity.  The
        // remaining difference is dominated by the log route's intrinsic
        // cancellation, which scales like ε/|λ| ≈ 2e-10 at the switch.
        let z0 = cx(0.6, 0.3);
        let below = params(0.2, 0.1, cx(1e-6 * (1.0 - 1e-7), 0.0), z0);
        let above = params(0.2, 0.1, cx(1e-6 * (1.0 + 1e-7), 0.0), z0);
        assert!(below.lambda.norm() < 1e-6 && above.lambda.norm() >= 1e-6);
        let vb = interior_center(&below, &cfg()).unwrap();
        let va = interior_center(&above, &cfg()).unwrap();
        assert!((vb - va).norm() < 1e-9, "gap {:e}", (vb - va).norm());
    }

    #[test]
    fn curve_needs_sixteen_samples() {
        let p = params(0.0, 0.0, cx(0.2, 0.1), cx(0.5, 0.0));
        assert!(boundary_curve(&p, 15, CurveMethod::ClosedForm, &cfg()).is_err());
    }

    #[test]
    fn curve_both_methods_agree() {
        let p = params(0.5, 0.35, cx(0.3, 0.4), cx(-0.4, 0.45));
        let c1 = match boundary_curve(&p, 32, CurveMethod::ClosedForm, &cfg()).unwrap() {
            RegionBoundary::Curve(c) => c,
            RegionBoundary::Point(_) => panic!("expected a curve"),
        };
        let c2 = match boundary_curve(&p, 32, CurveMethod::Quadrature, &cfg()).unwrap() {
            RegionBoundary::Curve(c) => c,
            RegionBoundary::Point(_) => panic!("expected a curve"),
        };
        assert_eq!(c1.thetas, c2.thetas);
        for (a, b) in c1.points.iter().zip(&c2.points) {
            assert!((a - b).norm() < 1e-9);
        }
    }

    #[test]
    fn curve_degenerates_to_point() {
        let p = params(0.0, 0.2, Cx::from_polar(1.0, 0.8), cx(0.5, 0.0));
        match boundary_curve(&p, 64, CurveMethod::Quadrature, &cfg()).unwrap() {
            RegionBoundary::Point(v) => {
                assert!((v - degenerate_point(&p).unwrap()).norm() < 1e-14)
            }
            RegionBoundary::Curve(_) => panic!("expected the degenerate point"),
        }
    }

    #[test]
    fn curve_at_z0_zero_is_origin() {
        let p = params(0.3, 0.1, cx(0.2, 0.2), cx(0.0, 0.0));
        match boundary_curve(&p, 64, CurveMethod::ClosedForm, &cfg()).unwrap() {
            RegionBoundary::Point(v) => assert_eq!(v, cx(0.0, 0.0)),
            RegionBoundary::Curve(_) => panic!("expected a point"),
        }
    }

    #[test]
    fn curve_polygon_is_convex_and_simple() {
        let p = params(0.4, 0.25, cx(0.5, -0.25), cx(0.55, 0.2));
        let curve = match boundary_curve(&p, 256, CurveMethod::ClosedForm, &cfg()).unwrap() {
            RegionBoundary::Curve(c) => c,
            RegionBoundary::Point(_) => panic!("expected a curve"),
        };
        let poly = curve.polygon().unwrap();
        assert!(crate::numerics::geometry::polygon_is_convex(&poly, 1e-12));
        assert!(crate::numerics::geometry::polygon_is_simple(&poly, 1e-12));
        assert!(curve.max_adjacent_gap() < poly.diameter());
    }

    #[test]
    fn center_lies_inside_curve() {
        let p = params(-0.6, 0.45, cx(-0.35, 0.15), cx(0.3, 0.5));
        let curve = match boundary_curve(&p, 360, CurveMethod::ClosedForm, &cfg()).unwrap() {
            RegionBoundary::Curve(c) => c,
            RegionBoundary::Point(_) => panic!("expected a curve"),
        };
        let center = interior_center(&p, &cfg()).unwrap();
        let poly = curve.polygon().unwrap();
        let d = crate::numerics::geometry::point_in_polygon(&poly, center);
        assert!(d > 0.0, "center must be strictly inside, signed distance {d}");
    }
}
