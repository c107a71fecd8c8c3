//! The two distinguished points of the region: the interior center (the
//! image of the index-zero kernel, exactly `z₀` when `λ = 0`) and the single
//! point the whole region collapses to when `|λ| = 1`.

use varregion::regions::{boundary_curve, degenerate_point, interior_center};
use varregion::{ClassParams, CurveMethod, Cx, QuadratureConfig, RegionBoundary};

fn main() -> varregion::Result<()> {
    let cfg = QuadratureConfig::default();

    // λ = 0: the center is exactly the upper integration limit.
    let p = ClassParams::new(0.5, 0.3, Cx::new(0.0, 0.0), Cx::new(0.31, -0.57))?;
    let c = interior_center(&p, &cfg)?;
    println!("lambda = 0:      center = {c}  (equals z0 = {})", p.z0);

    // Interior λ: the center moves off z₀ but stays inside the curve.
    let p = ClassParams::new(0.5, 0.3, Cx::new(0.45, 0.2), Cx::new(0.31, -0.57))?;
    let c = interior_center(&p, &cfg)?;
    println!("lambda = {}: center = {c}", p.lambda);
    if let RegionBoundary::Curve(curve) = boundary_curve(&p, 256, CurveMethod::ClosedForm, &cfg)? {
        let poly = curve.polygon()?;
        let signed = varregion::numerics::geometry::point_in_polygon(&poly, c);
        println!("signed distance inward from the boundary: {signed:.6e}");
    }

    // |λ| = 1: every kernel integral coincides, the region is one point.
    let p = ClassParams::new(0.5, 0.3, Cx::from_polar(1.0, 1.3), Cx::new(0.31, -0.57))?;
    let v = degenerate_point(&p)?;
    println!("\n|lambda| = 1:    region collapses to {v}");
    match boundary_curve(&p, 256, CurveMethod::Quadrature, &cfg)? {
        RegionBoundary::Point(w) => {
            println!("boundary_curve reports the same point, off by {:.3e}", (w - v).norm())
        }
        RegionBoundary::Curve(_) => unreachable!("degenerate parameters cannot yield a curve"),
    }
    Ok(())
}
