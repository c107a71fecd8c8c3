//! Adaptive Gauss–Kronrod quadrature for complex-valued integrands along
//! straight segments in the plane.
//!
//! The segment from `a` to `b` is parameterized as `a + t·(b − a)` for
//! `t ∈ [0, 1]` and integrated with a globally adaptive 15-point Kronrod /
//! 7-point Gauss pair: the interval with the largest error estimate is
//! bisected until the summed estimate meets the requested tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::Cx;

/// Tolerances and subdivision budget for adaptive quadrature.
///
/// The integration stops once the estimated error is below
/// `max(abs_tol, rel_tol · |result|)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Absolute error target (must be ≥ 1e-15).
    pub abs_tol: f64,
    /// Relative error target.
    pub rel_tol: f64,
    /// Maximum number of panels the interval may be split into (≥ 8).
    pub max_subdivisions: usize,
}

impl Default for QuadratureConfig {
    /// `abs_tol = rel_tol = 1e-12`, `max_subdivisions = 2^16`: two orders of
    /// magnitude of headroom below the 1e-9 agreement checks used throughout.
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 1e-12,
            max_subdivisions: 1 << 16,
        }
    }
}

impl QuadratureConfig {
    /// Validating constructor.
    pub fn new(abs_tol: f64, rel_tol: f64, max_subdivisions: usize) -> Result<Self> {
        if !abs_tol.is_finite() || abs_tol < 1e-15 {
            return Err(Error::InvalidParams(format!(
                "abs_tol must be finite and ≥ 1e-15, got {abs_tol:e}"
            )));
        }
        if !rel_tol.is_finite() || rel_tol <= 0.0 {
            return Err(Error::InvalidParams(format!(
                "rel_tol must be finite and > 0, got {rel_tol:e}"
            )));
        }
        if max_subdivisions < 8 {
            return Err(Error::InvalidParams(format!(
                "max_subdivisions must be ≥ 8, got {max_subdivisions}"
            )));
        }
        Ok(Self {
            abs_tol,
            rel_tol,
            max_subdivisions,
        })
    }

    /// Same config with a different absolute tolerance (used for the
    /// `VARREGION_TOL` override).
    pub fn with_abs_tol(self, abs_tol: f64) -> Result<Self> {
        Self::new(abs_tol, self.rel_tol, self.max_subdivisions)
    }
}

// 15-point Kronrod abscissae on [-1, 1] (positive half; the rule is
// symmetric).  Odd indices are the embedded 7-point Gauss abscissae.
// The tables keep the published 19-digit values verbatim.
#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_2,
    0.949_107_912_342_758_524_5,
    0.864_864_423_359_769_072_8,
    0.741_531_185_599_394_439_9,
    0.586_087_235_467_691_130_3,
    0.405_845_151_377_397_166_9,
    0.207_784_955_007_898_467_6,
    0.000_000_000_000_000_000_0,
];

// Kronrod weights matching `XGK`.
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_96,
    0.063_092_092_629_978_553_29,
    0.104_790_010_322_250_183_8,
    0.140_653_259_715_525_918_7,
    0.169_004_726_639_267_902_8,
    0.190_350_578_064_785_409_9,
    0.204_432_940_075_298_892_4,
    0.209_482_141_084_727_828_0,
];

// 7-point Gauss weights; `WG[j]` pairs with `XGK[2j + 1]` and `WG[3]` with
// the midpoint.
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_3,
    0.279_705_391_489_276_667_9,
    0.381_830_050_505_118_944_9,
    0.417_959_183_673_469_387_8,
];

/// QUADPACK-style error rescaling: sharpens the raw `|Kronrod − Gauss|`
/// difference using the scale of the integrand's variation.
fn rescale_error(err: f64, result_abs: f64, result_asc: f64) -> f64 {
    let mut err = err.abs();
    if result_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / result_asc).powf(1.5);
        err = if scale < 1.0 { result_asc * scale } else { result_asc };
    }
    if result_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        let min_err = 50.0 * f64::EPSILON * result_abs;
        if min_err > err {
            err = min_err;
        }
    }
    err
}

/// One 15-point Kronrod evaluation of `f` over the real interval `[a, b]`.
/// Returns the integral estimate and a rescaled error estimate.
fn qk15<F: Fn(f64) -> Cx>(f: &F, a: f64, b: f64) -> (Cx, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut resg = fc * WG[3];
    let mut resk = fc * WGK[7];
    let mut resabs = fc.norm() * WGK[7];

    let mut fv1 = [Cx::new(0.0, 0.0); 7];
    let mut fv2 = [Cx::new(0.0, 0.0); 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        let sum = fv1[j] + fv2[j];
        resk += sum * WGK[j];
        resabs += (fv1[j].norm() + fv2[j].norm()) * WGK[j];
        if j % 2 == 1 {
            resg += sum * WG[j / 2];
        }
    }

    let reskh = resk * 0.5;
    let mut resasc = (fc - reskh).norm() * WGK[7];
    for j in 0..7 {
        resasc += ((fv1[j] - reskh).norm() + (fv2[j] - reskh).norm()) * WGK[j];
    }

    let result = resk * half;
    let abs_half = half.abs();
    let err = rescale_error(
        ((resk - resg) * half).norm(),
        resabs * abs_half,
        resasc * abs_half,
    );
    (result, err)
}

/// Work item for the global adaptive loop, ordered by error estimate so the
/// `BinaryHeap` pops the worst panel first.  Ties break on the left endpoint
/// to keep the pop order fully deterministic.
struct Panel {
    err: f64,
    a: f64,
    b: f64,
    value: Cx,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

/// ∫ f(ζ) dζ along the straight segment from `a` to `b`.
///
/// `f` must be analytic on a neighborhood of the segment (caller's
/// responsibility); the rule then converges geometrically and the error
/// estimate is reliable.  Deterministic for fixed inputs.
///
/// # Errors
/// `NonConvergence` if the subdivision budget is exhausted before the
/// tolerance is met, or if the integrand produces non-finite values.
pub fn integrate_segment<F: Fn(Cx) -> Cx>(
    f: F,
    a: Cx,
    b: Cx,
    cfg: &QuadratureConfig,
) -> Result<Cx> {
    if !(a.re.is_finite() && a.im.is_finite() && b.re.is_finite() && b.im.is_finite()) {
        return Err(Error::InvalidParams(
            "segment endpoints must be finite".into(),
        ));
    }
    if a == b {
        return Ok(Cx::new(0.0, 0.0));
    }

    let dz = b - a;
    let g = |t: f64| f(a + dz * t) * dz;

    let (value, err) = qk15(&g, 0.0, 1.0);
    let mut heap = BinaryHeap::new();
    heap.push(Panel {
        err,
        a: 0.0,
        b: 1.0,
        value,
    });
    let mut total = value;
    let mut total_err = err;

    loop {
        if !(total.re.is_finite() && total.im.is_finite()) {
            return Err(Error::NonConvergence {
                achieved: f64::INFINITY,
                requested: cfg.abs_tol,
                panels: heap.len(),
            });
        }
        let tolerance = cfg.abs_tol.max(cfg.rel_tol * total.norm());
        if total_err <= tolerance {
            return Ok(total);
        }
        if heap.len() >= cfg.max_subdivisions {
            return Err(Error::NonConvergence {
                achieved: total_err,
                requested: tolerance,
                panels: heap.len(),
            });
        }

        let worst = heap.pop().expect("heap is non-empty");
        let mid = 0.5 * (worst.a + worst.b);
        let (v1, e1) = qk15(&g, worst.a, mid);
        let (v2, e2) = qk15(&g, mid, worst.b);
        total += v1 + v2 - worst.value;
        total_err += e1 + e2 - worst.err;
        heap.push(Panel {
            err: e1,
            a: worst.a,
            b: mid,
            value: v1,
        });
        heap.push(Panel {
            err: e2,
            a: mid,
            b: worst.b,
            value: v2,
        });
    }
}

/// ∫₀¹ f(t) dt for a complex-valued function of a real parameter — the
/// segment rule applied along the real axis.
pub fn integrate_unit_interval<F: Fn(f64) -> Cx>(f: F, cfg: &QuadratureConfig) -> Result<Cx> {
    integrate_segment(|z| f(z.re), Cx::new(0.0, 0.0), Cx::new(1.0, 0.0), cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(re: f64, im: f64) -> Cx {
        Cx::new(re, im)
    }

    #[test]
    fn config_rejects_bad_tolerances() {
        assert!(QuadratureConfig::new(1e-16, 1e-12, 64).is_err());
        assert!(QuadratureConfig::new(1e-12, 0.0, 64).is_err());
        assert!(QuadratureConfig::new(1e-12, 1e-12, 4).is_err());
        assert!(QuadratureConfig::new(1e-12, 1e-12, 8).is_ok());
    }

    #[test]
    fn constant_integrand() {
        let cfg = QuadratureConfig::default();
        let v = integrate_segment(|_| cx(1.0, 0.0), cx(0.0, 0.0), cx(0.5, 0.0), &cfg).unwrap();
        assert!((v - cx(0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn quadratic_integrand() {
        let cfg = QuadratureConfig::default();
        let v = integrate_segment(|z| z * z, cx(0.0, 0.0), cx(1.0, 0.0), &cfg).unwrap();
        assert!((v - cx(1.0 / 3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn geometric_pole_integrand() {
        // ∫ 1/(1-ζ) dζ over [0, 0.5] = -log(1 - 0.5) = log 2.
        let cfg = QuadratureConfig::default();
        let v = integrate_segment(
            |z| Cx::new(1.0, 0.0) / (Cx::new(1.0, 0.0) - z),
            cx(0.0, 0.0),
            cx(0.5, 0.0),
            &cfg,
        )
        .unwrap();
        assert!((v - cx(std::f64::consts::LN_2, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn complex_segment() {
        // ∫ ζ dζ from 0 to i = (i)²/2 = -1/2.
        let cfg = QuadratureConfig::default();
        let v = integrate_segment(|z| z, cx(0.0, 0.0), cx(0.0, 1.0), &cfg).unwrap();
        assert!((v - cx(-0.5, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn empty_segment_is_zero() {
        let cfg = QuadratureConfig::default();
        let v = integrate_segment(|z| z.exp(), cx(0.3, 0.1), cx(0.3, 0.1), &cfg).unwrap();
        assert_eq!(v, cx(0.0, 0.0));
    }

    #[test]
    fn budget_exhaustion_reports_nonconvergence() {
        // An integrable endpoint singularity needs far more than 8 panels at
        // 1e-12 tolerance.
        let cfg = QuadratureConfig::new(1e-12, 1e-12, 8).unwrap();
        let r = integrate_segment(
            |z| cx(z.re.abs().powf(-0.9), 0.0),
            cx(0.0, 0.0),
            cx(1.0, 0.0),
            &cfg,
        );
        assert!(matches!(r, Err(Error::NonConvergence { .. })));
    }

    #[test]
    fn non_finite_integrand_reports_nonconvergence() {
        let cfg = QuadratureConfig::default();
        let r = integrate_segment(
            |z| Cx::new(1.0, 0.0) / z,
            cx(-1.0, 0.0),
            cx(1.0, 0.0),
            &cfg,
        );
        assert!(r.is_err());
    }

    #[test]
    fn unit_interval_helper() {
        let cfg = QuadratureConfig::default();
        let v = integrate_unit_interval(|t| cx(t * t, -t), &cfg).unwrap();
        assert!((v - cx(1.0 / 3.0, -0.5)).norm() < 1e-14);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small(x: f64) -> bool {
            x.abs() <= 8.0
        }

        proptest! {
            // Linearity on random cubics: ∫(α·f + g) = α·∫f + ∫g.
            #[test]
            fn linearity(
                c0 in -2.0..2.0f64, c1 in -2.0..2.0f64, c2 in -2.0..2.0f64,
                d0 in -2.0..2.0f64, d1 in -2.0..2.0f64, d3 in -2.0..2.0f64,
                alpha in -3.0..3.0f64,
                bx in -1.0..1.0f64, by in -1.0..1.0f64,
            ) {
                prop_assume!(small(bx) && small(by));
                let cfg = QuadratureConfig::default();
                let f = move |z: Cx| Cx::new(c0, 0.0) + z * c1 + z * z * c2;
                let g = move |z: Cx| Cx::new(d0, 0.0) + z * d1 + z * z * z * d3;
                let a = Cx::new(0.0, 0.0);
                let b = Cx::new(bx, by);
                let lhs = integrate_segment(|z| f(z) * alpha + g(z), a, b, &cfg).unwrap();
                let rhs = integrate_segment(f, a, b, &cfg).unwrap() * alpha
                    + integrate_segment(g, a, b, &cfg).unwrap();
                prop_assert!((lhs - rhs).norm() <= 10.0 * cfg.abs_tol);
            }

            // Path additivity for collinear a, b, c.
            #[test]
            fn path_additivity(
                c1 in -2.0..2.0f64, c2 in -2.0..2.0f64,
                dirx in -1.0..1.0f64, diry in -1.0..1.0f64,
                t in 0.1..0.9f64,
            ) {
                prop_assume!(dirx.abs() + diry.abs() > 1e-3);
                let cfg = QuadratureConfig::default();
                let f = move |z: Cx| z * c1 + z * z * c2 + Cx::new(0.25, -0.5);
                let a = Cx::new(0.0, 0.0);
                let c = Cx::new(dirx, diry);
                let b = c * t;
                let whole = integrate_segment(f, a, c, &cfg).unwrap();
                let split = integrate_segment(f, a, b, &cfg).unwrap()
                    + integrate_segment(f, b, c, &cfg).unwrap();
                prop_assert!((whole - split).norm() <= 10.0 * cfg.abs_tol);
            }
        }
    }
}
