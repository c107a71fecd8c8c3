//! Integrate the pointwise growth bound along the segment from 0 to `z₀` to
//! get a single disk that encloses the whole region of variability, then
//! measure how much slack the true boundary leaves inside it.

use varregion::bounds::{enclosure_disk, Segment};
use varregion::regions::boundary_curve;
use varregion::{ClassParams, CurveMethod, Cx, QuadratureConfig, RegionBoundary};

fn main() -> varregion::Result<()> {
    let p = ClassParams::new(0.5, 0.35, Cx::new(0.3, 0.4), Cx::new(-0.4, 0.45))?;
    let cfg = QuadratureConfig::default();

    let segment = Segment::new(Cx::new(0.0, 0.0), p.z0)?;
    let disk = enclosure_disk(&p, &segment, &cfg)?;
    println!("enclosure center  {:+.6} {:+.6}i", disk.center.re, disk.center.im);
    println!("enclosure radius  {:.6}", disk.radius);

    let curve = match boundary_curve(&p, 512, CurveMethod::ClosedForm, &cfg)? {
        RegionBoundary::Curve(c) => c,
        RegionBoundary::Point(_) => unreachable!("|lambda| < 1 never degenerates"),
    };
    let mut min_slack = f64::INFINITY;
    let mut max_reach = 0.0f64;
    for v in &curve.points {
        let d = (v - disk.center).norm();
        min_slack = min_slack.min(disk.radius - d);
        max_reach = max_reach.max(d);
    }
    println!("\nboundary stays inside: worst slack {min_slack:.6e}");
    println!("fraction of the radius actually reached: {:.4}", max_reach / disk.radius);

    // For λ = 0, γ = β = 0 along a real segment the two integrals are
    // elementary: center = -z0 + atanh z0 + atan z0, radius = atanh z0 - atan z0.
    let p0 = ClassParams::new(0.0, 0.0, Cx::new(0.0, 0.0), Cx::new(0.5, 0.0))?;
    let d0 = enclosure_disk(&p0, &Segment::new(Cx::new(0.0, 0.0), p0.z0)?, &cfg)?;
    let z0 = 0.5f64;
    println!(
        "\nelementary case: center {:+.12} vs {:+.12}, radius {:.12} vs {:.12}",
        d0.center.re,
        -z0 + z0.atanh() + z0.atan(),
        d0.radius,
        z0.atanh() - z0.atan()
    );
    Ok(())
}
