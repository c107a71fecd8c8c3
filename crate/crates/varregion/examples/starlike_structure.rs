//! The structure function behind the convexity proof: for each boundary
//! angle θ the auxiliary integral G has a triple zero at the origin, and the
//! branch-tracked cube root G₀ = G^{1/3} is starlike.  This example shows
//! the cubic leading term emerging as `z → 0` and measures the starlikeness
//! margin `Re(z G₀′/G₀)` on a circle.

use std::f64::consts::TAU;

use varregion::bounds::{lemma_g, lemma_g0, lemma_g0_starlike_check};
use varregion::{Cx, QuadratureConfig};

fn main() -> varregion::Result<()> {
    let cfg = QuadratureConfig::default();
    let theta = 0.9;
    let lambda = Cx::new(0.5, -0.3);

    // 3 e^{-iθ} G(z)/z³ → 1, with a first-order error term
    // -(3/2)(conj(λ)e^{iθ} - λ) z that the table makes visible: each tenfold
    // shrink of |z| shrinks the deviation tenfold.
    let b = lambda.conj() * Cx::from_polar(1.0, theta) - lambda;
    println!("first-order coefficient |3b/2| = {:.6}", 1.5 * b.norm());
    println!("\n   |z|        |3 e^(-i theta) G / z^3  -  1|");
    for k in 1..=5 {
        let z = Cx::from_polar(10f64.powi(-k), 0.8);
        let g = lemma_g(theta, lambda, z, &cfg)?;
        let dev = (g * Cx::from_polar(3.0, -theta) / (z * z * z) - 1.0).norm();
        println!("  1e-{k}      {dev:.6e}");
    }

    // The normalized cube root G₀ = (3 e^{-iθ} G)^{1/3}, branch-tracked so
    // that G₀(z) ≈ z near the origin, turns the triple zero into a simple one.
    let z = Cx::new(0.3, 0.25);
    let g0 = lemma_g0(theta, lambda, z, &cfg)?;
    let g = lemma_g(theta, lambda, z, &cfg)?;
    println!("\nG({z})   = {g}");
    println!(
        "G0({z})  = {g0}   (G0^3 - 3 e^(-i theta) G off by {:.3e})",
        (g0 * g0 * g0 - g * Cx::from_polar(3.0, -theta)).norm()
    );

    // Starlikeness of G₀ on the circle |z| = 0.7: the minimum of
    // Re(z G₀′/G₀) over the grid must stay positive.
    let grid: Vec<Cx> = (0..96)
        .map(|k| Cx::from_polar(0.7, TAU * k as f64 / 96.0))
        .collect();
    for (theta, lambda) in [
        (0.0, Cx::new(0.0, 0.0)),
        (0.9, Cx::new(0.5, -0.3)),
        (-2.2, Cx::new(-0.1, 0.85)),
    ] {
        let margin = lemma_g0_starlike_check(theta, lambda, &grid, &cfg)?;
        println!(
            "starlike margin at theta = {theta:+.1}, lambda = {lambda}: {margin:.4}"
        );
    }
    Ok(())
}
