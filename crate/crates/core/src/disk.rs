//! Points of the unit disk and the elementary kernels attached to them.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Slack admitted when validating that a point lies on the unit circle
/// or inside the closed disk. Purely a guard against rounding in inputs
/// like `(cos t, sin t)`; validated points are renormalised.
const BOUNDARY_SLACK: f64 = 1e-9;

/// A validated point of the unit disk. The role chosen at construction
/// fixes which region the point was checked against.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DiskPoint {
    #[serde(with = "crate::jsonc::complex_pair")]
    value: Complex64,
    role: PointRole,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointRole {
    /// |z| < 1, usable as an interpolation node.
    Interior,
    /// |z| <= 1, usable as an evaluation point.
    Closed,
    /// |z| = 1.
    Boundary,
}

impl DiskPoint {
    /// A node strictly inside the disk.
    pub fn interior(value: Complex64) -> Result<Self> {
        let modulus = value.norm();
        if modulus >= 1.0 {
            return Err(Error::NotInterior { modulus });
        }
        Ok(Self { value, role: PointRole::Interior })
    }

    /// An evaluation point of the closed disk.
    pub fn closed(value: Complex64) -> Result<Self> {
        let modulus = value.norm();
        if modulus > 1.0 + BOUNDARY_SLACK {
            return Err(Error::OutsideClosedDisk { modulus });
        }
        // Clamp rounding overshoot onto the circle.
        let value = if modulus > 1.0 { value / modulus } else { value };
        Ok(Self { value, role: PointRole::Closed })
    }

    /// A point of the unit circle. Inputs within `1e-9` of the circle
    /// are accepted and renormalised.
    pub fn boundary(value: Complex64) -> Result<Self> {
        let modulus = value.norm();
        if (modulus - 1.0).abs() > BOUNDARY_SLACK {
            return Err(Error::NotBoundary { modulus });
        }
        Ok(Self { value: value / modulus, role: PointRole::Boundary })
    }

    /// The boundary point `e^{i·angle}`.
    pub fn from_angle(angle: f64) -> Self {
        Self { value: Complex64::from_polar(1.0, angle), role: PointRole::Boundary }
    }

    pub fn value(&self) -> Complex64 {
        self.value
    }

    pub fn role(&self) -> PointRole {
        self.role
    }
}

/// Pseudo-hyperbolic distance `|a - b| / |1 - conj(a)·b|` between two
/// interior points. Symmetric, valued in `[0, 1)`.
pub fn pseudo_hyperbolic(a: Complex64, b: Complex64) -> Result<f64> {
    for p in [a, b] {
        let modulus = p.norm();
        if modulus >= 1.0 {
            return Err(Error::NotInterior { modulus });
        }
    }
    Ok((a - b).norm() / (1.0 - a.conj() * b).norm())
}

/// Finite Blaschke product `Π (bₙ - z)/(1 - conj(bₙ)·z)` over the given
/// zeros, evaluated at a point of the closed disk.
pub fn blaschke_eval(zeros: &[Complex64], z: Complex64) -> Result<Complex64> {
    for b in zeros {
        let modulus = b.norm();
        if modulus >= 1.0 {
            return Err(Error::NotInterior { modulus });
        }
    }
    let zmod = z.norm();
    if zmod > 1.0 + BOUNDARY_SLACK {
        return Err(Error::OutsideClosedDisk { modulus: zmod });
    }
    let mut acc = Complex64::new(1.0, 0.0);
    for b in zeros {
        acc *= (b - z) / (1.0 - b.conj() * z);
    }
    Ok(acc)
}

/// Poisson kernel `(1 - |λ|²)/|1 - conj(λ)·z|²` of an interior point,
/// evaluated at a boundary point.
pub fn poisson_kernel(lambda: Complex64, z: Complex64) -> Result<f64> {
    let lmod = lambda.norm();
    if lmod >= 1.0 {
        return Err(Error::NotInterior { modulus: lmod });
    }
    let zmod = z.norm();
    if (zmod - 1.0).abs() > BOUNDARY_SLACK {
        return Err(Error::NotBoundary { modulus: zmod });
    }
    let z = z / zmod;
    Ok((1.0 - lambda.norm_sqr()) / (1.0 - lambda.conj() * z).norm_sqr())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pseudo_hyperbolic_identity() {
        let a = c(0.3, -0.4);
        assert_eq!(pseudo_hyperbolic(a, a).unwrap(), 0.0);
    }

    #[test]
    fn pseudo_hyperbolic_from_origin_is_modulus() {
        let b = c(0.3, 0.4);
        assert_relative_eq!(pseudo_hyperbolic(c(0.0, 0.0), b).unwrap(), 0.5, epsilon = 1e-15);
    }

    #[test]
    fn pseudo_hyperbolic_half_points() {
        // |0.5 - (-0.5)| / |1 - 0.5·(-0.5)| = 1 / 1.25
        assert_relative_eq!(
            pseudo_hyperbolic(c(0.5, 0.0), c(-0.5, 0.0)).unwrap(),
            0.8,
            epsilon = 1e-15
        );
    }

    #[test]
    fn pseudo_hyperbolic_rejects_boundary() {
        assert!(pseudo_hyperbolic(c(1.0, 0.0), c(0.0, 0.0)).is_err());
    }

    #[test]
    fn blaschke_vanishes_at_zero_set() {
        let b = c(0.2, 0.7);
        let v = blaschke_eval(&[b], b).unwrap();
        assert!(v.norm() < 1e-15);
    }

    #[test]
    fn blaschke_single_zero_at_origin() {
        let z = c(0.3, -0.1);
        let v = blaschke_eval(&[c(0.0, 0.0)], z).unwrap();
        assert_relative_eq!((v + z).norm(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(v.norm(), z.norm(), epsilon = 1e-15);
    }

    #[test]
    fn blaschke_two_real_zeros_at_origin() {
        // Factors at z = 0: 0.5 and -0.5, product -0.25.
        let v = blaschke_eval(&[c(0.5, 0.0), c(-0.5, 0.0)], c(0.0, 0.0)).unwrap();
        assert_relative_eq!(v.re, -0.25, epsilon = 1e-15);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn blaschke_rejects_boundary_zero() {
        assert!(blaschke_eval(&[c(1.0, 0.0)], c(0.0, 0.0)).is_err());
    }

    #[test]
    fn poisson_kernel_of_origin_is_one() {
        for t in [0.0, 1.0, 2.5, 4.0] {
            let z = Complex64::from_polar(1.0, t);
            assert_relative_eq!(poisson_kernel(c(0.0, 0.0), z).unwrap(), 1.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn poisson_kernel_half_at_poles() {
        assert_relative_eq!(poisson_kernel(c(0.5, 0.0), c(1.0, 0.0)).unwrap(), 3.0, epsilon = 1e-15);
        assert_relative_eq!(
            poisson_kernel(c(0.5, 0.0), c(-1.0, 0.0)).unwrap(),
            1.0 / 3.0,
            epsilon = 1e-15
        );
    }

    #[test]
    fn poisson_kernel_rejects_interior_evaluation() {
        assert!(poisson_kernel(c(0.5, 0.0), c(0.5, 0.5)).is_err());
    }

    #[test]
    fn disk_point_roles() {
        assert!(DiskPoint::interior(c(0.99, 0.0)).is_ok());
        assert!(DiskPoint::interior(c(1.0, 0.0)).is_err());
        assert!(DiskPoint::boundary(c(0.6, 0.8)).is_ok());
        assert!(DiskPoint::boundary(c(0.5, 0.0)).is_err());
        assert!(DiskPoint::closed(c(0.5, 0.0)).is_ok());
        assert!(DiskPoint::closed(c(1.5, 0.0)).is_err());
    }

    proptest! {
        /// ρ(a,c) <= (ρ(a,b) + ρ(b,c)) / (1 + ρ(a,b)·ρ(b,c))
        #[test]
        fn pseudo_hyperbolic_triangle_bound(
            ar in -0.95f64..0.95, ai in -0.3f64..0.3,
            br in -0.95f64..0.95, bi in -0.3f64..0.3,
            cr in -0.95f64..0.95, ci in -0.3f64..0.3,
        ) {
            let scale = |re: f64, im: f64| {
                let p = c(re, im);
                if p.norm() >= 0.999 { p * (0.999 / p.norm()) } else { p }
            };
            let (a, b, cc) = (scale(ar, ai), scale(br, bi), scale(cr, ci));
            let dab = pseudo_hyperbolic(a, b).unwrap();
            let dbc = pseudo_hyperbolic(b, cc).unwrap();
            let dac = pseudo_hyperbolic(a, cc).unwrap();
            let bound = (dab + dbc) / (1.0 + dab * dbc);
            prop_assert!(dac <= bound + 1e-12);
        }

        #[test]
        fn blaschke_unimodular_on_circle(theta in 0.0f64..std::f64::consts::TAU, n in 1usize..20) {
            let zeros: Vec<Complex64> = (0..n)
                .map(|k| Complex64::from_polar(0.08 + 0.04 * (k as f64 % 9.0), 0.7 * k as f64))
                .collect();
            let z = Complex64::from_polar(1.0, theta);
            let v = blaschke_eval(&zeros, z).unwrap();
            prop_assert!((v.norm() - 1.0).abs() < 1e-12);
        }
    }
}
