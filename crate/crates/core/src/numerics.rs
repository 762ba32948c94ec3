//! Finite-difference helpers shared by the curvature and closedness checks.

use crate::error::Result;

/// Five-point central difference f'(0) with step h.
pub(crate) fn d5(f: impl Fn(f64) -> Result<f64>, h: f64) -> Result<f64> {
    Ok((-f(2.0 * h)? + 8.0 * f(h)? - 8.0 * f(-h)? + f(-2.0 * h)?) / (12.0 * h))
}

/// Componentwise five-point central difference of a vector-valued map.
pub(crate) fn d5_vec(f: impl Fn(f64) -> Result<Vec<f64>>, h: f64) -> Result<Vec<f64>> {
    let (p2, p1, m1, m2) = (f(2.0 * h)?, f(h)?, f(-h)?, f(-2.0 * h)?);
    Ok((0..p1.len()).map(|k| (-p2[k] + 8.0 * p1[k] - 8.0 * m1[k] + m2[k]) / (12.0 * h)).collect())
}

/// Wraps an angle to (−π, π].
pub(crate) fn wrap_angle(theta: f64) -> f64 {
    let t = theta.rem_euclid(std::f64::consts::TAU);
    if t > std::f64::consts::PI {
        t - std::f64::consts::TAU
    } else {
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_point_is_exact_on_quartics() {
        let d = d5(|x| Ok(3.0 * x.powi(4) - x.powi(3) + 2.0 * x + 1.0), 0.1).unwrap();
        assert!((d - 2.0).abs() < 1e-12);
    }

    #[test]
    fn wrap_range() {
        assert!((wrap_angle(3.0 * std::f64::consts::PI) - std::f64::consts::PI).abs() < 1e-12);
        assert!((wrap_angle(-0.5) + 0.5).abs() < 1e-15);
    }
}
