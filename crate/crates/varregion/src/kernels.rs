//! The disk automorphism `δ`, the extremal kernels `H_{a,λ}`, the
//! `ω ↔ P` correspondence, and validated parameters for the tilted
//! half-plane class and its first-coefficient slice.
//!
//! Every member of the slice arises from a Schwarz-class function
//! `g` (analytic, `g(0) = 0`, `|g| < 1`) through
//! `ω(z) = z·δ(g(z), λ)` and `P(z) = 1 + 2(1−β)e^{−iγ}cos γ · ω/(1−ω)`;
//! the choices `g(z) = a·z` with `|a| = 1` produce the kernels that trace
//! the boundary of the region of variability.
//!
//! Invariants maintained here and exercised by the verification campaign:
//! - `Re(e^{iγ} H_{a,λ}(z)) > β cos γ` strictly, for all `|z| < 1`, `|a| ≤ 1`;
//! - sampled members satisfy the same strict half-plane bound;
//! - `H′_{a,λ}(0) = 2(1−β)e^{−iγ}λ cos γ` (finite differences, 1e-7);
//! - `|λ| = 1` collapses `H_{a,λ}` to a single function independent of `a`
//!   (pointwise within 1e-14);
//! - `δ(δ(z, λ), −λ) = z` within 1e-14 for `|λ| < 1`.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use crate::error::{Error, Result};
use crate::numerics::diff;
use crate::numerics::quadrature::{integrate_segment, QuadratureConfig};
use crate::Cx;

/// Problem instance `(γ, β, λ, z₀)`.
///
/// Constraints checked at construction: `|γ| < π/2`, `0 ≤ β < 1`,
/// `|λ| ≤ 1`, `|z₀| < 1`, all finite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassParams {
    /// Tilt angle of the half plane, real with `|γ| < π/2`.
    pub gamma: f64,
    /// Half-plane offset, `0 ≤ β < 1`.
    pub beta: f64,
    /// First-coefficient slice parameter, `|λ| ≤ 1`.
    pub lambda: Cx,
    /// Integration endpoint, `|z₀| < 1`.
    pub z0: Cx,
}

impl ClassParams {
    pub fn new(gamma: f64, beta: f64, lambda: Cx, z0: Cx) -> Result<Self> {
        if !gamma.is_finite() || gamma.abs() >= FRAC_PI_2 {
            return Err(Error::InvalidParams(format!(
                "gamma must satisfy |gamma| < π/2, got {gamma}"
            )));
        }
        if !beta.is_finite() || !(0.0..1.0).contains(&beta) {
            return Err(Error::InvalidParams(format!(
                "beta must satisfy 0 ≤ beta < 1, got {beta}"
            )));
        }
        if !(lambda.re.is_finite() && lambda.im.is_finite()) || lambda.norm() > 1.0 + 1e-12 {
            return Err(Error::InvalidParams(format!(
                "lambda must satisfy |lambda| ≤ 1, got |lambda| = {}",
                lambda.norm()
            )));
        }
        if !(z0.re.is_finite() && z0.im.is_finite()) || z0.norm() >= 1.0 {
            return Err(Error::InvalidParams(format!(
                "z0 must satisfy |z0| < 1, got |z0| = {}",
                z0.norm()
            )));
        }
        Ok(Self {
            gamma,
            beta,
            lambda,
            z0,
        })
    }

    /// The recurring factor `2(1−β) e^{−iγ} cos γ` multiplying `ω/(1−ω)`.
    pub fn lead_coeff(&self) -> Cx {
        Cx::new(0.0, -self.gamma).exp() * (2.0 * (1.0 - self.beta) * self.gamma.cos())
    }

    /// The half-plane boundary level `β cos γ` for `Re(e^{iγ} P)`.
    pub fn halfplane_level(&self) -> f64 {
        self.beta * self.gamma.cos()
    }

    /// Prescribed first Taylor coefficient `P′(0) = 2(1−β)e^{−iγ}λ cos γ`.
    pub fn first_coefficient(&self) -> Cx {
        self.lead_coeff() * self.lambda
    }
}

/// Index selecting an extremal kernel: a boundary angle `θ` (meaning
/// `a = e^{iθ}`) or an interior index `a` with `|a| ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtremalIndex {
    /// Unimodular index `a = e^{iθ}`, `θ` normalized to `(−π, π]`.
    Boundary { theta: f64 },
    /// General index with `|a| ≤ 1`.
    Interior { a: Cx },
}

impl ExtremalIndex {
    /// Boundary index; `theta` is normalized into `(−π, π]`.
    pub fn boundary(theta: f64) -> Self {
        assert!(theta.is_finite(), "theta must be finite");
        let mut t = theta.rem_euclid(TAU);
        if t > PI {
            t -= TAU;
        }
        ExtremalIndex::Boundary { theta: t }
    }

    /// Interior index; requires `|a| ≤ 1`.
    pub fn interior(a: Cx) -> Result<Self> {
        if !(a.re.is_finite() && a.im.is_finite()) || a.norm() > 1.0 + 1e-12 {
            return Err(Error::InvalidParams(format!(
                "index must satisfy |a| ≤ 1, got |a| = {}",
                a.norm()
            )));
        }
        Ok(ExtremalIndex::Interior { a })
    }

    /// The index value `a` itself.
    pub fn a(&self) -> Cx {
        match *self {
            ExtremalIndex::Boundary { theta } => Cx::new(0.0, theta).exp(),
            ExtremalIndex::Interior { a } => a,
        }
    }

    /// The boundary angle, when this is a boundary index.
    pub fn theta(&self) -> Option<f64> {
        match *self {
            ExtremalIndex::Boundary { theta } => Some(theta),
            ExtremalIndex::Interior { .. } => None,
        }
    }
}

/// Möbius automorphism of the closed disk sending `0 ↦ λ`:
/// `δ(z, λ) = (z + λ) / (1 + conj(λ)·z)`.
///
/// # Errors
/// `PoleAtInput` when `|1 + conj(λ)·z| < 1e-15`, which requires
/// `|λ| = |z| = 1`.
pub fn mobius_delta(z: Cx, lambda: Cx) -> Result<Cx> {
    let den = Cx::new(1.0, 0.0) + lambda.conj() * z;
    if den.norm() < 1e-15 {
        return Err(Error::PoleAtInput);
    }
    Ok((z + lambda) / den)
}

/// Extremal kernel
/// `H_{a,λ}(z) = 1 + 2(1−β)e^{−iγ}cos γ · δ(az, λ)·z / (1 − δ(az, λ)·z)`.
///
/// Requires `|z| < 1`; there the denominator cannot vanish, `H(0) = 1`
/// exactly, and `Re(e^{iγ} H) > β cos γ`.
pub fn extremal_h(z: Cx, idx: &ExtremalIndex, p: &ClassParams) -> Cx {
    debug_assert!(z.norm() < 1.0, "extremal_h requires |z| < 1");
    let a = idx.a();
    // |a·z| < 1, so the Möbius denominator stays away from zero.
    let den = Cx::new(1.0, 0.0) + p.lambda.conj() * (a * z);
    let w = (a * z + p.lambda) / den * z;
    Cx::new(1.0, 0.0) + p.lead_coeff() * w / (Cx::new(1.0, 0.0) - w)
}

/// Invert the Schwarz-function correspondence: given `ω(z)` with `|ω| < 1`,
/// return `P(z) = 1 + 2(1−β)e^{−iγ}cos γ · ω / (1 − ω)`.
pub fn p_from_omega(omega_value: Cx, p: &ClassParams) -> Cx {
    debug_assert!(omega_value.norm() < 1.0, "p_from_omega requires |ω| < 1");
    Cx::new(1.0, 0.0) + p.lead_coeff() * omega_value / (Cx::new(1.0, 0.0) - omega_value)
}

/// Schwarz-class generator `g` (`g(0) = 0`, `|g| < 1` on the disk),
/// restricted to shapes whose bounds are certifiable by construction.
#[derive(Debug, Clone, PartialEq)]
pub enum SchwarzGenerator {
    /// `g(z) = c·z^k` with `|c| ≤ 1` and `k ≥ 1`.
    Monomial { coeff: Cx, power: u32 },
    /// `g(z) = rotation · z · Π (aᵢ − z)/(1 − conj(aᵢ)·z)` with `|aᵢ| < 1`
    /// and `|rotation| = 1`.
    Blaschke { rotation: Cx, zeros: Vec<Cx> },
}

impl SchwarzGenerator {
    /// `g(z) = c·z^k`; validates `|c| ≤ 1`, `k ≥ 1`.
    pub fn monomial(coeff: Cx, power: u32) -> Result<Self> {
        if !(coeff.re.is_finite() && coeff.im.is_finite()) || coeff.norm() > 1.0 + 1e-12 {
            return Err(Error::InvalidParams(format!(
                "monomial coefficient must satisfy |c| ≤ 1, got |c| = {}",
                coeff.norm()
            )));
        }
        if power == 0 {
            return Err(Error::InvalidParams(
                "monomial power must be ≥ 1 (g(0) = 0 is required)".into(),
            ));
        }
        Ok(SchwarzGenerator::Monomial { coeff, power })
    }

    /// Rotated Blaschke product times `z`; validates `|rotation| = 1` and
    /// `|aᵢ| < 1`.
    pub fn blaschke(rotation: Cx, zeros: Vec<Cx>) -> Result<Self> {
        if (rotation.norm() - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParams(format!(
                "rotation must be unimodular, got |rotation| = {}",
                rotation.norm()
            )));
        }
        for a in &zeros {
            if a.norm() >= 1.0 {
                return Err(Error::InvalidParams(format!(
                    "Blaschke zeros must satisfy |a| < 1, got |a| = {}",
                    a.norm()
                )));
            }
        }
        Ok(SchwarzGenerator::Blaschke { rotation, zeros })
    }

    /// The zero generator `g ≡ 0`.
    pub fn zero() -> Self {
        SchwarzGenerator::Monomial {
            coeff: Cx::new(0.0, 0.0),
            power: 1,
        }
    }

    /// The identity generator `g(z) = z`.
    pub fn identity() -> Self {
        SchwarzGenerator::Monomial {
            coeff: Cx::new(1.0, 0.0),
            power: 1,
        }
    }

    pub fn eval(&self, z: Cx) -> Cx {
        match self {
            SchwarzGenerator::Monomial { coeff, power } => coeff * z.powu(*power),
            SchwarzGenerator::Blaschke { rotation, zeros } => {
                let mut g = rotation * z;
                for a in zeros {
                    g *= (a - z) / (Cx::new(1.0, 0.0) - a.conj() * z);
                }
                g
            }
        }
    }

    /// `a = g′(0)`, the index the second-coefficient constraint sees.
    pub fn derivative_at_zero(&self) -> Cx {
        match self {
            SchwarzGenerator::Monomial { coeff, power } => {
                if *power == 1 {
                    *coeff
                } else {
                    Cx::new(0.0, 0.0)
                }
            }
            SchwarzGenerator::Blaschke { rotation, zeros } => {
                zeros.iter().fold(*rotation, |acc, a| acc * a)
            }
        }
    }
}

/// A concrete member `P` of the slice, built from a Schwarz generator.
///
/// `P(z) = 1 + 2(1−β)e^{−iγ}cos γ · ω/(1−ω)` with `ω(z) = z·δ(g(z), λ)`.
/// By construction `P(0) = 1`, `P′(0)` matches the slice coefficient, and
/// the strict half-plane bound holds.
#[derive(Debug, Clone)]
pub struct SampledMember {
    pub gen: SchwarzGenerator,
    pub params: ClassParams,
}

impl SampledMember {
    pub fn eval(&self, z: Cx) -> Cx {
        let g = self.gen.eval(z);
        let delta = mobius_delta(g, self.params.lambda)
            .expect("δ(g(z), λ) has no pole for |g| < 1 with |λ| ≤ 1");
        p_from_omega(z * delta, &self.params)
    }

    /// `∫₀^{z₀} P(ζ) dζ` along the straight segment.
    pub fn integral(&self, cfg: &QuadratureConfig) -> Result<Cx> {
        integrate_segment(
            |z| self.eval(z),
            Cx::new(0.0, 0.0),
            self.params.z0,
            cfg,
        )
    }
}

/// Build the slice member generated by `g`.  Requires `|λ| < 1` (at
/// `|λ| = 1` every generator collapses to the same function).
pub fn sample_member(gen: SchwarzGenerator, p: ClassParams) -> SampledMember {
    SampledMember { gen, params: p }
}

/// Residual of the second-coefficient constraint: the distance between the
/// finite-difference `P″(0)` of the sampled member and
/// `4(1−β)[(1−|λ|²)·g′(0) + λ²] e^{−iγ} cos γ`.
pub fn check_second_coefficient(gen: &SchwarzGenerator, p: &ClassParams) -> f64 {
    let member = sample_member(gen.clone(), *p);
    let fd = diff::second_derivative(|z| Ok(member.eval(z)), Cx::new(0.0, 0.0), 1e-2)
        .expect("member evaluation is infallible");
    let a = gen.derivative_at_zero();
    let l2 = p.lambda.norm_sqr();
    let target = (a * (1.0 - l2) + p.lambda * p.lambda)
        * Cx::new(0.0, -p.gamma).exp()
        * (4.0 * (1.0 - p.beta) * p.gamma.cos());
    (fd - target).norm()
}
