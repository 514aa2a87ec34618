//! Closed symbolic representation of the bounded analytic functions the
//! rest of the crate manipulates.
//!
//! Every construction here is a finite explicit formula, so functions are
//! stored as expression trees and re-evaluated exactly wherever needed
//! instead of being sampled. Evaluation is deterministic: the same tree
//! at the same point always produces the bit-identical result.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::disk::{DiskPoint, PointRole};
use crate::error::{Error, Result};
use crate::poly::CPoly;

/// One coefficient·function term of a finite linear combination.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SumTerm {
    #[serde(with = "crate::jsonc::complex_pair")]
    pub coeff: Complex64,
    pub term: AnalyticFn,
}

/// One stage of a Schur-recursion chain: the interpolation node peeled
/// at this stage and the Schur parameter left behind.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SchurStage {
    #[serde(with = "crate::jsonc::complex_pair")]
    pub node: Complex64,
    #[serde(with = "crate::jsonc::complex_pair")]
    pub param: Complex64,
}

/// Expression tree over the disk-function constructors.
///
/// Serialises to a tagged-union JSON tree with complex numbers as
/// `[re, im]` pairs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AnalyticFn {
    /// Constant function.
    Const {
        #[serde(with = "crate::jsonc::complex_pair")]
        value: Complex64,
    },
    /// `((conj(a)·z + 1) / 2)^q` peaking at the boundary point `a`.
    PeakPow {
        #[serde(with = "crate::jsonc::complex_pair")]
        peak: Complex64,
        exponent: u32,
    },
    /// Normalised Cauchy kernel `(1 - |b|²) / (1 - conj(b)·z)`.
    CauchyKernel {
        #[serde(with = "crate::jsonc::complex_pair")]
        node: Complex64,
    },
    /// Single Blaschke factor `(b - z) / (1 - conj(b)·z)`.
    BlaschkeFactor {
        #[serde(with = "crate::jsonc::complex_pair")]
        zero: Complex64,
    },
    /// Finite complex-linear combination `Σ cₖ·fₖ`.
    Sum { terms: Vec<SumTerm> },
    /// Finite product `Π fₖ`.
    Product { factors: Vec<AnalyticFn> },
    /// Integer power of a subtree.
    Power { base: Box<AnalyticFn>, exponent: u32 },
    /// Rational interpolant stored as its Schur-parameter chain, scaled
    /// by `scale`. Evaluation unwinds the chain with the zero function
    /// as terminal parameter.
    PickInterpolant { scale: f64, stages: Vec<SchurStage> },
}

/// Value/derivative pair for forward-mode evaluation.
#[derive(Clone, Copy, Debug)]
struct Dual {
    v: Complex64,
    d: Complex64,
}

impl Dual {
    fn constant(v: Complex64) -> Self {
        Self { v, d: Complex64::new(0.0, 0.0) }
    }

    fn variable(v: Complex64) -> Self {
        Self { v, d: Complex64::new(1.0, 0.0) }
    }

    fn add(self, o: Self) -> Self {
        Self { v: self.v + o.v, d: self.d + o.d }
    }

    fn mul(self, o: Self) -> Self {
        Self { v: self.v * o.v, d: self.d * o.v + self.v * o.d }
    }

    fn scale(self, c: Complex64) -> Self {
        Self { v: c * self.v, d: c * self.d }
    }

    fn div(self, o: Self) -> Self {
        let v = self.v / o.v;
        Self { v, d: (self.d - v * o.d) / o.v }
    }

    fn powu(self, q: u32) -> Self {
        // d(v^q) = q·v^(q-1)·v'
        if q == 0 {
            return Self::constant(Complex64::new(1.0, 0.0));
        }
        let vq1 = self.v.powu(q - 1);
        Self { v: vq1 * self.v, d: Complex64::new(q as f64, 0.0) * vq1 * self.d }
    }
}

impl AnalyticFn {
    pub fn constant(value: Complex64) -> Self {
        AnalyticFn::Const { value }
    }

    /// Peak power at a validated boundary point.
    pub fn peak_pow(peak: DiskPoint, exponent: u32) -> Result<Self> {
        if peak.role() != PointRole::Boundary {
            return Err(Error::NotBoundary { modulus: peak.value().norm() });
        }
        if exponent == 0 {
            return Err(Error::InvalidParameter("peak exponent must be >= 1".into()));
        }
        Ok(AnalyticFn::PeakPow { peak: peak.value(), exponent })
    }

    pub fn cauchy_kernel(node: Complex64) -> Result<Self> {
        let modulus = node.norm();
        if modulus >= 1.0 {
            return Err(Error::NotInterior { modulus });
        }
        Ok(AnalyticFn::CauchyKernel { node })
    }

    pub fn blaschke_factor(zero: Complex64) -> Result<Self> {
        let modulus = zero.norm();
        if modulus >= 1.0 {
            return Err(Error::NotInterior { modulus });
        }
        Ok(AnalyticFn::BlaschkeFactor { zero })
    }

    /// Finite Blaschke product over the given zeros.
    pub fn blaschke_product(zeros: &[Complex64]) -> Result<Self> {
        let factors = zeros
            .iter()
            .map(|&b| Self::blaschke_factor(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(AnalyticFn::Product { factors })
    }

    pub fn sum(terms: Vec<SumTerm>) -> Self {
        AnalyticFn::Sum { terms }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            AnalyticFn::Const { value } => *value,
            AnalyticFn::PeakPow { peak, exponent } => {
                ((peak.conj() * z + 1.0) * 0.5).powu(*exponent)
            }
            AnalyticFn::CauchyKernel { node } => {
                (1.0 - node.norm_sqr()) / (1.0 - node.conj() * z)
            }
            AnalyticFn::BlaschkeFactor { zero } => (zero - z) / (1.0 - zero.conj() * z),
            AnalyticFn::Sum { terms } => terms
                .iter()
                .fold(Complex64::new(0.0, 0.0), |acc, t| acc + t.coeff * t.term.eval(z)),
            AnalyticFn::Product { factors } => factors
                .iter()
                .fold(Complex64::new(1.0, 0.0), |acc, f| acc * f.eval(z)),
            AnalyticFn::Power { base, exponent } => base.eval(z).powu(*exponent),
            AnalyticFn::PickInterpolant { scale, stages } => {
                let mut h = Complex64::new(0.0, 0.0);
                for stage in stages.iter().rev() {
                    let phi = (stage.node - z) / (1.0 - stage.node.conj() * z);
                    let w = phi * h;
                    h = (w + stage.param) / (1.0 + stage.param.conj() * w);
                }
                scale * h
            }
        }
    }

    /// Value and first derivative at `z` in one forward pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let d = self.eval_dual(Dual::variable(z));
        (d.v, d.d)
    }

    fn eval_dual(&self, z: Dual) -> Dual {
        match self {
            AnalyticFn::Const { value } => Dual::constant(*value),
            AnalyticFn::PeakPow { peak, exponent } => {
                let base = z.scale(peak.conj() * 0.5).add(Dual::constant(Complex64::new(0.5, 0.0)));
                base.powu(*exponent)
            }
            AnalyticFn::CauchyKernel { node } => {
                let den = z.scale(-node.conj()).add(Dual::constant(Complex64::new(1.0, 0.0)));
                Dual::constant(Complex64::new(1.0 - node.norm_sqr(), 0.0)).div(den)
            }
            AnalyticFn::BlaschkeFactor { zero } => {
                let num = z.scale(Complex64::new(-1.0, 0.0)).add(Dual::constant(*zero));
                let den = z.scale(-zero.conj()).add(Dual::constant(Complex64::new(1.0, 0.0)));
                num.div(den)
            }
            AnalyticFn::Sum { terms } => terms.iter().fold(
                Dual::constant(Complex64::new(0.0, 0.0)),
                |acc, t| acc.add(t.term.eval_dual(z).scale(t.coeff)),
            ),
            AnalyticFn::Product { factors } => factors.iter().fold(
                Dual::constant(Complex64::new(1.0, 0.0)),
                |acc, f| acc.mul(f.eval_dual(z)),
            ),
            AnalyticFn::Power { base, exponent } => base.eval_dual(z).powu(*exponent),
            AnalyticFn::PickInterpolant { scale, stages } => {
                let one = Dual::constant(Complex64::new(1.0, 0.0));
                let mut h = Dual::constant(Complex64::new(0.0, 0.0));
                for stage in stages.iter().rev() {
                    let num = z.scale(Complex64::new(-1.0, 0.0)).add(Dual::constant(stage.node));
                    let den = z.scale(-stage.node.conj()).add(one);
                    let phi = num.div(den);
                    let w = phi.mul(h);
                    h = w.add(Dual::constant(stage.param))
                        .div(w.scale(stage.param.conj()).add(one));
                }
                h.scale(Complex64::new(*scale, 0.0))
            }
        }
    }

    /// Structural check that the function is analytic on a neighbourhood
    /// of the closed disk: every kernel node is interior and every Schur
    /// parameter strictly sub-unimodular.
    pub fn analytic_on_closed_disk(&self) -> bool {
        match self {
            AnalyticFn::Const { .. } | AnalyticFn::PeakPow { .. } => true,
            AnalyticFn::CauchyKernel { node } => node.norm() < 1.0,
            AnalyticFn::BlaschkeFactor { zero } => zero.norm() < 1.0,
            AnalyticFn::Sum { terms } => terms.iter().all(|t| t.term.analytic_on_closed_disk()),
            AnalyticFn::Product { factors } => factors.iter().all(|f| f.analytic_on_closed_disk()),
            AnalyticFn::Power { base, .. } => base.analytic_on_closed_disk(),
            AnalyticFn::PickInterpolant { stages, .. } => stages
                .iter()
                .all(|s| s.node.norm() < 1.0 && s.param.norm() < 1.0 - 1e-12),
        }
    }

    /// Lower bound on the modulus of the nearest pole, `+inf` when the
    /// tree is entire. Kernel factors give the exact pole `1/|b|`; for a
    /// Schur chain the denominator polynomial is expanded and its roots
    /// located numerically.
    pub fn min_pole_modulus(&self) -> f64 {
        match self {
            AnalyticFn::Const { .. } | AnalyticFn::PeakPow { .. } => f64::INFINITY,
            AnalyticFn::CauchyKernel { node } | AnalyticFn::BlaschkeFactor { zero: node } => {
                let m = node.norm();
                if m == 0.0 {
                    f64::INFINITY
                } else {
                    1.0 / m
                }
            }
            AnalyticFn::Sum { terms } => terms
                .iter()
                .map(|t| t.term.min_pole_modulus())
                .fold(f64::INFINITY, f64::min),
            AnalyticFn::Product { factors } => factors
                .iter()
                .map(|f| f.min_pole_modulus())
                .fold(f64::INFINITY, f64::min),
            AnalyticFn::Power { base, .. } => base.min_pole_modulus(),
            AnalyticFn::PickInterpolant { stages, .. } => {
                let (_, den) = schur_chain_rational(stages);
                den.roots()
                    .iter()
                    .map(|r| r.norm())
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }

    /// Validates the stored-pole invariant, rejecting any tree with a
    /// pole in the closed unit disk.
    pub fn validate(&self) -> Result<()> {
        if !self.analytic_on_closed_disk() {
            let modulus = self.min_pole_modulus();
            return Err(Error::PoleInClosedDisk { modulus });
        }
        Ok(())
    }

    /// Boundary angles where |f| can change fastest (peak directions,
    /// kernel poles projected to the circle). The certifier seeds its
    /// subdivision with these so that narrow features are sampled.
    pub fn boundary_hints(&self, out: &mut Vec<f64>) {
        match self {
            AnalyticFn::Const { .. } => {}
            AnalyticFn::PeakPow { peak, .. } => out.push(peak.arg()),
            AnalyticFn::CauchyKernel { node } | AnalyticFn::BlaschkeFactor { zero: node } => {
                if node.norm() > 0.0 {
                    out.push(node.arg());
                }
            }
            AnalyticFn::Sum { terms } => {
                for t in terms {
                    t.term.boundary_hints(out);
                }
            }
            AnalyticFn::Product { factors } => {
                for f in factors {
                    f.boundary_hints(out);
                }
            }
            AnalyticFn::Power { base, .. } => base.boundary_hints(out),
            AnalyticFn::PickInterpolant { stages, .. } => {
                for s in stages {
                    if s.node.norm() > 0.0 {
                        out.push(s.node.arg());
                    }
                }
            }
        }
    }
}

/// Expands a Schur chain (terminal parameter zero) into numerator and
/// denominator polynomials. Used only for pole diagnostics; evaluation
/// goes through the chain directly.
pub(crate) fn schur_chain_rational(stages: &[SchurStage]) -> (CPoly, CPoly) {
    let mut num = CPoly::zero();
    let mut den = CPoly::constant(Complex64::new(1.0, 0.0));
    for stage in stages.iter().rev() {
        // Blaschke factor at the node as n(z)/d(z).
        let bn = CPoly::new(vec![stage.node, Complex64::new(-1.0, 0.0)]);
        let bd = CPoly::new(vec![Complex64::new(1.0, 0.0), -stage.node.conj()]);
        // h -> (φ·h + s) / (1 + conj(s)·φ·h) with h = num/den.
        let phi_h_num = bn.mul(&num);
        let phi_h_den = bd.mul(&den);
        let new_num = phi_h_num.add(&phi_h_den.scale(stage.param));
        let new_den = phi_h_den.add(&phi_h_num.scale(stage.param.conj()));
        num = new_num;
        den = new_den;
    }
    (num, den)
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
    fn peak_pow_values() {
        let a = DiskPoint::from_angle(0.0);
        let g = AnalyticFn::peak_pow(a, 1).unwrap();
        assert_relative_eq!((g.eval(c(1.0, 0.0)) - 1.0).norm(), 0.0, epsilon = 1e-15);
        assert_relative_eq!(g.eval(c(-1.0, 0.0)).norm(), 0.0, epsilon = 1e-15);

        // ((i + 1)/2)^2 = i/2
        let g2 = AnalyticFn::peak_pow(a, 2).unwrap();
        let v = g2.eval(c(0.0, 1.0));
        assert_relative_eq!(v.re, 0.0, epsilon = 1e-15);
        assert_relative_eq!(v.im, 0.5, epsilon = 1e-15);
    }

    #[test]
    fn peak_pow_rejects_interior_peak() {
        let p = DiskPoint::interior(c(0.5, 0.0)).unwrap();
        assert!(AnalyticFn::peak_pow(p, 1).is_err());
    }

    #[test]
    fn cauchy_kernel_normalised_at_node() {
        let b = c(0.4, 0.3);
        let k = AnalyticFn::cauchy_kernel(b).unwrap();
        // K_b(b) = (1 - |b|²)/(1 - |b|²) = 1
        assert_relative_eq!((k.eval(b) - 1.0).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn pick_chain_poles_stay_outside() {
        let f = AnalyticFn::PickInterpolant {
            scale: 1.0,
            stages: vec![
                SchurStage { node: c(0.0, 0.0), param: c(0.3, 0.1) },
                SchurStage { node: c(0.5, 0.2), param: c(-0.4, 0.2) },
                SchurStage { node: c(-0.3, 0.6), param: c(0.1, -0.7) },
            ],
        };
        assert!(f.analytic_on_closed_disk());
        assert!(f.min_pole_modulus() > 1.0);
        f.validate().unwrap();
    }

    #[test]
    fn cauchy_pole_is_reciprocal_node() {
        let k = AnalyticFn::cauchy_kernel(c(0.5, 0.0)).unwrap();
        assert_relative_eq!(k.min_pole_modulus(), 2.0, epsilon = 1e-12);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let f = AnalyticFn::Sum {
            terms: vec![
                SumTerm {
                    coeff: c(0.1, -0.7),
                    term: AnalyticFn::peak_pow(DiskPoint::from_angle(1.1), 5).unwrap(),
                },
                SumTerm {
                    coeff: c(std::f64::consts::PI, 1e-300),
                    term: AnalyticFn::Power {
                        base: Box::new(AnalyticFn::cauchy_kernel(c(0.123456789, 0.5)).unwrap()),
                        exponent: 3,
                    },
                },
            ],
        };
        let text = serde_json::to_string(&f).unwrap();
        let back: AnalyticFn = serde_json::from_str(&text).unwrap();
        assert_eq!(f, back);
        let z = c(0.3, -0.2);
        assert_eq!(f.eval(z), back.eval(z));
    }

    fn arb_fn() -> impl Strategy<Value = AnalyticFn> {
        let leaf = prop_oneof![
            (-0.8f64..0.8, -0.5f64..0.5)
                .prop_map(|(re, im)| AnalyticFn::constant(c(re, im))),
            (0.0f64..std::f64::consts::TAU, 1u32..8).prop_map(|(t, q)| {
                AnalyticFn::peak_pow(DiskPoint::from_angle(t), q).unwrap()
            }),
            (-0.7f64..0.7, -0.5f64..0.5).prop_map(|(re, im)| {
                let b = c(re, im);
                AnalyticFn::cauchy_kernel(if b.norm() >= 0.9 { b * 0.5 } else { b }).unwrap()
            }),
            (-0.7f64..0.7, -0.5f64..0.5).prop_map(|(re, im)| {
                let b = c(re, im);
                AnalyticFn::blaschke_factor(if b.norm() >= 0.9 { b * 0.5 } else { b }).unwrap()
            }),
        ];
        leaf.prop_recursive(3, 16, 4, |inner| {
            prop_oneof![
                (proptest::collection::vec(((-1.0f64..1.0, -1.0f64..1.0), inner.clone()), 1..4))
                    .prop_map(|terms| AnalyticFn::Sum {
                        terms: terms
                            .into_iter()
                            .map(|((re, im), term)| SumTerm { coeff: c(re, im), term })
                            .collect(),
                    }),
                proptest::collection::vec(inner.clone(), 1..3)
                    .prop_map(|factors| AnalyticFn::Product { factors }),
                (inner, 1u32..4).prop_map(|(base, exponent)| AnalyticFn::Power {
                    base: Box::new(base),
                    exponent,
                }),
            ]
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        /// Forward-mode derivative agrees with a central difference.
        #[test]
        fn derivative_matches_finite_difference(f in arb_fn(), re in -0.6f64..0.6, im in -0.6f64..0.6) {
            let z = c(re, im);
            let (_, d) = f.eval_with_derivative(z);
            let h = 1e-6;
            let fd = (f.eval(z + c(h, 0.0)) - f.eval(z - c(h, 0.0))) / (2.0 * h);
            let scale = 1.0 + d.norm();
            prop_assert!((d - fd).norm() / scale < 1e-4, "d = {d}, fd = {fd}");
        }

        #[test]
        fn serde_round_trip(f in arb_fn()) {
            let text = serde_json::to_string(&f).unwrap();
            let back: AnalyticFn = serde_json::from_str(&text).unwrap();
            prop_assert_eq!(f, back);
        }
    }
}
