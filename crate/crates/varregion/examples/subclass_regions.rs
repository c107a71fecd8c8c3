//! The two univalent families derived from the class: functions with
//! `Re f′ > β` (region of `f(z₀) − f(0)` over the first family) and the
//! `F(α, β)` family built from an integro-differential equation.  Both
//! regions of variability coincide with the parent region — computed here
//! three ways — and each family carries its own quantitative bound.

use varregion::regions::boundary_curve;
use varregion::subclasses::{
    rbeta_sup_bound_check, vg_boundary_closed_form, vg_membership_bound, vr_boundary,
    SubclassParamsF, SubclassParamsR,
};
use varregion::{ClassParams, CurveMethod, Cx, QuadratureConfig, RegionBoundary};

fn curve(b: RegionBoundary) -> varregion::BoundaryCurve {
    match b {
        RegionBoundary::Curve(c) => c,
        RegionBoundary::Point(_) => unreachable!("|lambda| < 1 never degenerates"),
    }
}

fn main() -> varregion::Result<()> {
    let cfg = QuadratureConfig::default();
    let (beta, lambda, z0) = (0.2, Cx::new(0.4, 0.25), Cx::new(0.5, -0.3));
    let n = 128;

    let parent = curve(boundary_curve(
        &ClassParams::new(0.0, beta, lambda, z0)?,
        n,
        CurveMethod::ClosedForm,
        &cfg,
    )?);
    let vr = curve(vr_boundary(&SubclassParamsR::new(beta, lambda, z0)?, n, &cfg)?);
    let pf = SubclassParamsF::new(Cx::new(1.2, 0.4), beta, lambda, z0)?;
    let vg = curve(vg_boundary_closed_form(&pf, n)?);

    let dev = |a: &varregion::BoundaryCurve, b: &varregion::BoundaryCurve| {
        a.points
            .iter()
            .zip(&b.points)
            .map(|(x, y)| (x - y).norm())
            .fold(0.0, f64::max)
    };
    println!("V_R vs parent region: max deviation {:.3e}", dev(&vr, &parent));
    println!("V_G vs parent region: max deviation {:.3e}  (alpha = {})", dev(&vg, &parent), pf.alpha);

    // The F(α, β) family also obeys a pointwise disk bound.
    let z = Cx::new(0.45, 0.2);
    let g = vg_membership_bound(z, &pf)?;
    println!("\nF-family disk at z = {z}: center {:+.6}{:+.6}i, radius {:.6}", g.c.re, g.c.im, g.r);

    // For β < ½ the weighted derivative sup over the disk approaches
    // 2(1 − β): the grid sup at radius 0.999 against the bound.
    println!("\n  beta    sup (1-|z|^2)|f'|    bound 2(1-beta)");
    for beta in [0.0, 0.25, 0.49] {
        let (sup, bound) = rbeta_sup_bound_check(beta, 0.999, 64)?;
        println!("  {beta:.2}    {sup:.6}            {bound:.6}");
    }
    Ok(())
}
