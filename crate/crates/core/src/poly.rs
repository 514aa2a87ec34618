//! Dense complex polynomials with a Durand–Kerner root finder. Only used
//! for diagnostics (pole locations of rational trees), so the arithmetic
//! stays deliberately simple.

use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub struct CPoly {
    /// Coefficients in ascending order of degree.
    coeffs: Vec<Complex64>,
}

impl CPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![] }
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if last.norm() == 0.0 {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn add(&self, other: &CPoly) -> CPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        CPoly::new(out)
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return CPoly::zero();
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        CPoly::new(out)
    }

    pub fn scale(&self, c: Complex64) -> CPoly {
        CPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// All complex roots by Durand–Kerner iteration. Adequate for the
    /// small degrees (< 100) that arise here.
    pub fn roots(&self) -> Vec<Complex64> {
        let n = self.degree();
        if n == 0 || self.coeffs.is_empty() {
            return vec![];
        }
        let lead = self.coeffs[n];
        let monic: Vec<Complex64> = self.coeffs.iter().map(|&c| c / lead).collect();

        // Cauchy bound on root moduli sets the start radius.
        let bound = 1.0
            + monic[..n]
                .iter()
                .map(|c| c.norm())
                .fold(0.0f64, f64::max);
        let seed = Complex64::new(0.4, 0.9);
        let mut roots: Vec<Complex64> = (0..n)
            .map(|k| seed.powu(k as u32 + 1) * bound / seed.norm().powi(k as i32 + 1) * 0.9)
            .collect();

        let eval_monic = |z: Complex64| -> Complex64 {
            monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
        };

        for _ in 0..400 {
            let mut shift = 0.0f64;
            for i in 0..n {
                let mut den = Complex64::new(1.0, 0.0);
                for j in 0..n {
                    if i != j {
                        den *= roots[i] - roots[j];
                    }
                }
                if den.norm() == 0.0 {
                    // Perturb coincident iterates.
                    roots[i] += Complex64::new(1e-8, 1e-8);
                    continue;
                }
                let delta = eval_monic(roots[i]) / den;
                roots[i] -= delta;
                shift = shift.max(delta.norm());
            }
            if shift < 1e-13 * bound.max(1.0) {
                break;
            }
        }
        roots
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn roots_of_quadratic() {
        // (z - 0.5)(z + 2) = z² + 1.5z - 1
        let p = CPoly::new(vec![c(-1.0, 0.0), c(1.5, 0.0), c(1.0, 0.0)]);
        let mut roots = p.roots();
        roots.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap());
        assert!((roots[0] - c(-2.0, 0.0)).norm() < 1e-10);
        assert!((roots[1] - c(0.5, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn roots_of_complex_product() {
        // (z - i)(z - 2)(z + 1 + i)
        let p = CPoly::new(vec![c(0.0, 1.0)])
            .mul(&CPoly::new(vec![c(1.0, 0.0)]));
        assert_eq!(p.degree(), 0);
        let factors = [c(0.0, 1.0), c(2.0, 0.0), c(-1.0, -1.0)];
        let mut poly = CPoly::constant(c(1.0, 0.0));
        for r in factors {
            poly = poly.mul(&CPoly::new(vec![-r, c(1.0, 0.0)]));
        }
        let roots = poly.roots();
        for r in factors {
            assert!(
                roots.iter().any(|got| (got - r).norm() < 1e-9),
                "missing root {r}"
            );
        }
    }

    #[test]
    fn eval_matches_horner_expansion() {
        let p = CPoly::new(vec![c(1.0, 0.0), c(0.0, -2.0), c(3.0, 1.0)]);
        let z = c(0.7, -0.3);
        let direct = c(1.0, 0.0) + c(0.0, -2.0) * z + c(3.0, 1.0) * z * z;
        assert!((p.eval(z) - direct).norm() < 1e-15);
    }
}
