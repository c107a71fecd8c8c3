//! Compute the boundary of the region of variability by both routes —
//! adaptive quadrature of the extremal kernels and the logarithmic closed
//! form — and confirm they trace the same convex, simple curve.

use varregion::regions::boundary_curve;
use varregion::{ClassParams, CurveMethod, Cx, QuadratureConfig, RegionBoundary};
use varregion::numerics::geometry::{polygon_is_convex, polygon_is_simple};

fn main() -> varregion::Result<()> {
    let p = ClassParams::new(0.4, 0.25, Cx::new(0.3, -0.4), Cx::new(0.5, 0.35))?;
    let cfg = QuadratureConfig::default();
    let n = 256;

    let closed = curve(boundary_curve(&p, n, CurveMethod::ClosedForm, &cfg)?);
    let quad = curve(boundary_curve(&p, n, CurveMethod::Quadrature, &cfg)?);

    let max_gap = closed
        .points
        .iter()
        .zip(&quad.points)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    println!("routes agree within   {max_gap:.3e}  over {n} angles");

    let poly = closed.polygon()?;
    println!("convex                {}", polygon_is_convex(&poly, 1e-12));
    println!("simple                {}", polygon_is_simple(&poly, 1e-12));
    println!("diameter              {:.6}", poly.diameter());
    println!("max adjacent gap      {:.3e}", closed.max_adjacent_gap());

    println!("\n  theta        re          im");
    for k in (0..n).step_by(n / 8) {
        let (t, v) = (closed.thetas[k], closed.points[k]);
        println!("{t:+.4}   {:+.6}   {:+.6}", v.re, v.im);
    }
    Ok(())
}

fn curve(boundary: RegionBoundary) -> varregion::BoundaryCurve {
    match boundary {
        RegionBoundary::Curve(c) => c,
        RegionBoundary::Point(_) => unreachable!("|lambda| < 1 never degenerates"),
    }
}
