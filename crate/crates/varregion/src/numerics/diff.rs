//! Finite-difference derivatives of analytic functions, used by the
//! coefficient-normalization and ODE residual checks.
//!
//! Steps are taken along the real axis; for analytic functions the complex
//! derivative is direction independent.  The closures are fallible so that
//! quadrature-backed functions can propagate their errors.

use crate::error::Result;
use crate::Cx;

/// First derivative: central difference with one Richardson extrapolation.
/// `h = 1e-4` balances truncation against rounding at double precision.
pub fn derivative<F>(f: F, z: Cx, h: f64) -> Result<Cx>
where
    F: Fn(Cx) -> Result<Cx>,
{
    let d = |step: f64| -> Result<Cx> {
        let hi = f(z + Cx::new(step, 0.0))?;
        let lo = f(z - Cx::new(step, 0.0))?;
        Ok((hi - lo) / (2.0 * step))
    };
    let coarse = d(h)?;
    let fine = d(0.5 * h)?;
    Ok((fine * 4.0 - coarse) / 3.0)
}

/// Second derivative: symmetric 5-point stencil, O(h⁴) truncation.
pub fn second_derivative<F>(f: F, z: Cx, h: f64) -> Result<Cx>
where
    F: Fn(Cx) -> Result<Cx>,
{
    let at = |k: f64| f(z + Cx::new(k * h, 0.0));
    let sum = -at(2.0)? + at(1.0)? * 16.0 - at(0.0)? * 30.0 + at(-1.0)? * 16.0 - at(-2.0)?;
    Ok(sum / (12.0 * h * h))
}

/// Third derivative: central 4-point stencil with one Richardson
/// extrapolation (the raw stencil is O(h²)).
pub fn third_derivative<F>(f: F, z: Cx, h: f64) -> Result<Cx>
where
    F: Fn(Cx) -> Result<Cx>,
{
    let d = |step: f64| -> Result<Cx> {
        let p2 = f(z + Cx::new(2.0 * step, 0.0))?;
        let p1 = f(z + Cx::new(step, 0.0))?;
        let m1 = f(z - Cx::new(step, 0.0))?;
        let m2 = f(z - Cx::new(2.0 * step, 0.0))?;
        Ok((p2 - p1 * 2.0 + m1 * 2.0 - m2) / (2.0 * step * step * step))
    };
    let coarse = d(h)?;
    let fine = d(0.5 * h)?;
    Ok((fine * 4.0 - coarse) / 3.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_exp() {
        let f = |z: Cx| Ok(z.exp());
        let z = Cx::new(0.3, -0.2);
        let d = derivative(f, z, 1e-4).unwrap();
        assert!((d - z.exp()).norm() < 1e-11);
    }

    #[test]
    fn second_derivative_of_cubic() {
        let f = |z: Cx| Ok(z * z * z + z * 2.0);
        let z = Cx::new(0.5, 0.1);
        let d = second_derivative(f, z, 1e-2).unwrap();
        assert!((d - z * 6.0).norm() < 1e-10);
    }

    #[test]
    fn third_derivative_of_exp() {
        let f = |z: Cx| Ok((z * 0.7).exp());
        let d = third_derivative(f, Cx::new(0.0, 0.0), 0.05).unwrap();
        assert!((d - Cx::new(0.343, 0.0)).norm() < 1e-7);
    }
}
