//! Build explicit members of the class from Schwarz functions, confirm they
//! respect the pointwise growth disk, and watch their integrals land inside
//! the sampled region boundary.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use varregion::bounds::growth_bound;
use varregion::kernels::{extremal_h, sample_member, ExtremalIndex, SchwarzGenerator};
use varregion::numerics::geometry::point_in_polygon;
use varregion::regions::boundary_curve;
use varregion::verify::sample_generator;
use varregion::{ClassParams, CurveMethod, Cx, QuadratureConfig, RegionBoundary};

fn main() -> varregion::Result<()> {
    let p = ClassParams::new(0.3, 0.15, Cx::new(0.35, -0.25), Cx::new(0.45, 0.3))?;
    let cfg = QuadratureConfig::default();

    // A hand-picked member: ω(z) = z·δ(g(z), λ) with g(z) = 0.6 z².
    let member = sample_member(SchwarzGenerator::monomial(Cx::new(0.6, 0.0), 2)?, p);
    let z = Cx::new(0.4, 0.2);
    let g = growth_bound(z, &p)?;
    println!("P(0)    = {}  (must be 1)", member.eval(Cx::new(0.0, 0.0)));
    println!("P(z)    = {}", member.eval(z));
    println!("|P - c| = {:.6}  vs  r = {:.6}", (member.eval(z) - g.c).norm(), g.r);

    // The identity generator reproduces the θ = 0 extremal kernel.
    let extremal = sample_member(SchwarzGenerator::identity(), p);
    println!("\nextremal member at z: {}", extremal.eval(z));
    println!("kernel value        : {}", extremal_h(z, &ExtremalIndex::boundary(0.0), &p));

    // 200 random members: every integral lands inside the region.
    let curve = match boundary_curve(&p, 720, CurveMethod::ClosedForm, &cfg)? {
        RegionBoundary::Curve(c) => c,
        RegionBoundary::Point(_) => unreachable!("|lambda| < 1 never degenerates"),
    };
    let poly = curve.polygon()?;
    let resolution = curve.max_adjacent_gap();
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let mut worst = f64::INFINITY;
    for _ in 0..200 {
        let member = sample_member(sample_generator(&mut rng), p);
        let value = member.integral(&cfg)?;
        worst = worst.min(point_in_polygon(&poly, value));
    }
    println!("\n200 random member integrals: least signed distance inward {worst:.3e}");
    println!("(a negative value beyond {resolution:.3e} would escape the sampled boundary)");
    Ok(())
}
