//! Pointwise growth bounds: at each `z` the class values `P(z)` fill a disk
//! of center `c(z, λ)` and radius `r(z, λ)`.  The extremal kernels realize
//! the boundary circle exactly; for `λ = 0`, `γ = 0` the disk has the simple
//! rational form `c = (1 + (1−2β)|z|⁴)/(1 − |z|⁴)`, `r = 2(1−β)|z|²/(1 − |z|⁴)`.

use std::f64::consts::TAU;

use varregion::bounds::growth_bound;
use varregion::kernels::{extremal_h, ExtremalIndex};
use varregion::{ClassParams, Cx};

fn main() -> varregion::Result<()> {
    let p = ClassParams::new(-0.35, 0.2, Cx::new(0.25, 0.4), Cx::new(0.5, 0.0))?;

    println!("   |z|      center                     radius");
    for k in 1..=6 {
        let z = Cx::from_polar(0.15 * k as f64, 0.7);
        let g = growth_bound(z, &p)?;
        println!(
            "  {:.2}    {:+.6} {:+.6}i    {:.6}",
            z.norm(),
            g.c.re,
            g.c.im,
            g.r
        );
    }

    // The boundary kernels H_{e^{iθ}, λ} sweep the bounding circle itself.
    let z = Cx::new(0.35, -0.4);
    let g = growth_bound(z, &p)?;
    let worst = (0..32)
        .map(|k| {
            let idx = ExtremalIndex::boundary(-std::f64::consts::PI + TAU * (k + 1) as f64 / 32.0);
            ((extremal_h(z, &idx, &p) - g.c).norm() - g.r).abs()
        })
        .fold(0.0, f64::max);
    println!("\nkernels sit on the circle at z = {z}: worst | |H - c| - r | = {worst:.3e}");

    // λ = 0, γ = 0 specialization against the rational closed form.
    let p0 = ClassParams::new(0.0, 0.0, Cx::new(0.0, 0.0), Cx::new(0.5, 0.0))?;
    let z = Cx::new(0.5, 0.0);
    let g = growth_bound(z, &p0)?;
    let t = z.norm().powi(4);
    println!(
        "rational form at z = 0.5: c = {} (17/15 = {}), r = {} (8/15 = {})",
        g.c.re,
        (1.0 + t) / (1.0 - t),
        g.r,
        2.0 * z.norm_sqr() / (1.0 - t)
    );
    Ok(())
}
