//! Certified maximisation of |f| (and of Σ|fₙ|) over boundary curves.
//!
//! The maximiser bisects the curve adaptively. Each segment carries an
//! upper bound `max(sampled values) + L·w/4`, where `L` is a Lipschitz
//! constant obtained by sampling the derivative tree at the segment's
//! endpoints and midpoint and inflating by a safety factor. Segments
//! whose upper bound cannot beat the best sampled value are never
//! refined, so flat regions and sharp isolated peaks are both cheap.
//!
//! The certificate is conditional: the enclosure holds whenever the
//! sampled derivative bound majorises the true derivative on each
//! segment, which the safety factor is there to absorb.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::func::AnalyticFn;

/// How a reported numeric value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MethodTag {
    /// Closed form or exact linear algebra.
    Exact,
    /// Enclosure with a justified radius.
    Certified,
    /// Best value found by search; no enclosure.
    Heuristic,
    /// Statistical estimate from random trials.
    Empirical,
}

/// Descriptor of the subdivision that produced a bound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundMethod {
    pub tag: MethodTag,
    /// Segments examined by the adaptive subdivision.
    pub segments: u32,
    /// Largest per-segment derivative bound encountered.
    pub derivative_bound: f64,
    /// Inflation applied to sampled derivatives.
    pub safety_factor: f64,
}

impl BoundMethod {
    pub fn exact() -> Self {
        BoundMethod { tag: MethodTag::Exact, segments: 0, derivative_bound: 0.0, safety_factor: 1.0 }
    }
}

/// An estimate together with a certified half-width: the true value lies
/// in `[estimate - radius, estimate + radius]` whenever the declared
/// derivative bound holds.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifiedBound {
    pub estimate: f64,
    pub radius: f64,
    pub method: BoundMethod,
}

impl CertifiedBound {
    pub fn exact(value: f64) -> Self {
        CertifiedBound { estimate: value, radius: 0.0, method: BoundMethod::exact() }
    }

    /// Certified upper end of the enclosure.
    pub fn upper(&self) -> f64 {
        self.estimate + self.radius
    }

    /// Certified lower end of the enclosure.
    pub fn lower(&self) -> f64 {
        self.estimate - self.radius
    }
}

/// Result of a summed-modulus maximisation: the bound plus the boundary
/// point where the largest sampled value was attained.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SupAbsSum {
    pub bound: CertifiedBound,
    #[serde(with = "crate::jsonc::complex_pair")]
    pub argmax: Complex64,
}

/// Tuning knobs of the subdivision. Defaults: target radius `1e-6`,
/// safety factor `1.25`, budget `2^20` segments.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct CertifyConfig {
    pub tol: f64,
    pub safety_factor: f64,
    pub max_segments: u32,
    pub initial_segments: u32,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        CertifyConfig {
            tol: crate::DEFAULT_SUP_TOL,
            safety_factor: 1.25,
            max_segments: 1 << 20,
            initial_segments: 64,
        }
    }
}

impl CertifyConfig {
    pub fn with_tol(tol: f64) -> Self {
        CertifyConfig { tol, ..Default::default() }
    }
}

struct Segment {
    lo: f64,
    hi: f64,
    upper: f64,
}

impl PartialEq for Segment {
    fn eq(&self, other: &Self) -> bool {
        self.upper == other.upper && self.lo == other.lo
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Segment {
    fn cmp(&self, other: &Self) -> Ordering {
        // Max-heap on the upper bound; ties broken on position so the
        // traversal order is deterministic.
        self.upper
            .total_cmp(&other.upper)
            .then(other.lo.total_cmp(&self.lo))
    }
}

struct RawCertificate {
    lower: f64,
    upper: f64,
    argmax: f64,
    segments: u32,
    derivative_bound: f64,
}

/// Objective value and slope sample for the modulus of an analytic value
/// `v` with derivative `dv` along the parameter. Away from zeros of `v`
/// the exact slope of |v| is `Re(conj(v)·dv)/|v|`; at a zero the kink is
/// covered by the crude bound |dv|.
fn modulus_sample(v: Complex64, dv: Complex64) -> (f64, f64) {
    let m = v.norm();
    if m > 1e-300 {
        (m, (v.conj() * dv).re.abs() / m)
    } else {
        (m, dv.norm())
    }
}

/// Core adaptive loop over a parameter interval. `sample(t)` must return
/// the objective value and a local slope sample at `t`. `seeds` are
/// parameter values forced to be segment boundaries (hence samples).
fn certify_max_1d(
    sample: &dyn Fn(f64) -> (f64, f64),
    lo: f64,
    hi: f64,
    seeds: &[f64],
    cfg: &CertifyConfig,
) -> Result<RawCertificate> {
    assert!(hi > lo, "empty parameter interval");
    let mut heap = BinaryHeap::new();
    let mut best_value = f64::NEG_INFINITY;
    let mut best_at = lo;
    let mut max_slope = 0.0f64;
    let mut segments: u32 = 0;

    let push_segment = |heap: &mut BinaryHeap<Segment>,
                            best_value: &mut f64,
                            best_at: &mut f64,
                            max_slope: &mut f64,
                            a: f64,
                            b: f64| {
        let mid = 0.5 * (a + b);
        let w = b - a;
        let samples = [sample(a), sample(mid), sample(b)];
        let mut vmax = f64::NEG_INFINITY;
        let mut smax = 0.0f64;
        for (idx, &(v, s)) in samples.iter().enumerate() {
            if v > vmax {
                vmax = v;
            }
            if v > *best_value {
                *best_value = v;
                *best_at = [a, mid, b][idx];
            }
            smax = smax.max(s.abs());
        }
        let lipschitz = smax * cfg.safety_factor;
        *max_slope = max_slope.max(lipschitz);
        // Sample spacing is w/2, so any point is within w/4 of a sample.
        heap.push(Segment { lo: a, hi: b, upper: vmax + lipschitz * w / 4.0 });
    };

    let n0 = cfg.initial_segments.max(1);
    let mut boundaries: Vec<f64> = (0..=n0)
        .map(|k| lo + (hi - lo) * k as f64 / n0 as f64)
        .collect();
    for &s in seeds {
        // Wrap into [lo, hi); the interval is a full period for circles.
        let span = hi - lo;
        let t = lo + (s - lo).rem_euclid(span);
        boundaries.push(t);
    }
    boundaries.sort_by(f64::total_cmp);
    boundaries.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    for pair in boundaries.windows(2) {
        push_segment(&mut heap, &mut best_value, &mut best_at, &mut max_slope, pair[0], pair[1]);
        segments += 1;
    }

    loop {
        let top = heap.peek().expect("heap never empties");
        let gap = top.upper - best_value;
        if gap <= 2.0 * cfg.tol {
            return Ok(RawCertificate {
                lower: best_value,
                upper: top.upper.max(best_value),
                argmax: best_at,
                segments,
                derivative_bound: max_slope,
            });
        }
        if segments >= cfg.max_segments {
            return Err(Error::CertificationBudget {
                segments,
                gap,
                target: 2.0 * cfg.tol,
            });
        }
        let seg = heap.pop().unwrap();
        let mid = 0.5 * (seg.lo + seg.hi);
        push_segment(&mut heap, &mut best_value, &mut best_at, &mut max_slope, seg.lo, mid);
        push_segment(&mut heap, &mut best_value, &mut best_at, &mut max_slope, mid, seg.hi);
        segments += 2;
    }
}

fn bound_from_raw(raw: RawCertificate, cfg: &CertifyConfig) -> CertifiedBound {
    CertifiedBound {
        estimate: 0.5 * (raw.lower + raw.upper),
        radius: 0.5 * (raw.upper - raw.lower),
        method: BoundMethod {
            tag: MethodTag::Certified,
            segments: raw.segments,
            derivative_bound: raw.derivative_bound,
            safety_factor: cfg.safety_factor,
        },
    }
}

fn check_admissible(f: &AnalyticFn) -> Result<()> {
    if !f.analytic_on_closed_disk() {
        return Err(Error::PoleInClosedDisk { modulus: f.min_pole_modulus() });
    }
    Ok(())
}

/// Certified bound on `sup_{|z|=1} |f|`, which by the maximum principle
/// equals the sup over the closed disk.
pub fn sup_norm_boundary(f: &AnalyticFn, cfg: &CertifyConfig) -> Result<CertifiedBound> {
    check_admissible(f)?;
    let mut seeds = Vec::new();
    f.boundary_hints(&mut seeds);
    let raw = certify_max_1d(
        &|t| {
            let z = Complex64::from_polar(1.0, t);
            let (v, d) = f.eval_with_derivative(z);
            // d/dt f(e^{it}) = f'(e^{it})·i·e^{it}, of modulus |f'|.
            modulus_sample(v, d * Complex64::new(0.0, 1.0) * z)
        },
        0.0,
        std::f64::consts::TAU,
        &seeds,
        cfg,
    )?;
    Ok(bound_from_raw(raw, cfg))
}

/// Certified bound on `sup_{z in closed disk} Σ |fₙ(z)|`, evaluated on
/// the boundary only: each |fₙ| is subharmonic, so the sum attains its
/// sup there. Also reports the boundary point realising the best lower
/// bound. The empty family yields the exact bound 0.
pub fn sup_abs_sum(fns: &[AnalyticFn], cfg: &CertifyConfig) -> Result<SupAbsSum> {
    if fns.is_empty() {
        return Ok(SupAbsSum {
            bound: CertifiedBound::exact(0.0),
            argmax: Complex64::new(1.0, 0.0),
        });
    }
    for f in fns {
        check_admissible(f)?;
    }
    let mut seeds = Vec::new();
    for f in fns {
        f.boundary_hints(&mut seeds);
    }
    let raw = certify_max_1d(
        &|t| {
            let z = Complex64::from_polar(1.0, t);
            let iz = Complex64::new(0.0, 1.0) * z;
            let mut value = 0.0;
            let mut slope = 0.0;
            for f in fns {
                let (v, d) = f.eval_with_derivative(z);
                let (m, s) = modulus_sample(v, d * iz);
                value += m;
                slope += s;
            }
            (value, slope)
        },
        0.0,
        std::f64::consts::TAU,
        &seeds,
        cfg,
    )?;
    let argmax = Complex64::from_polar(1.0, raw.argmax);
    Ok(SupAbsSum { bound: bound_from_raw(raw, cfg), argmax })
}

/// Certified bound on `sup |f|` over the boundary arc `e^{it}`,
/// `t in [lo, hi]`.
pub fn sup_abs_on_arc(f: &AnalyticFn, lo: f64, hi: f64, cfg: &CertifyConfig) -> Result<CertifiedBound> {
    check_admissible(f)?;
    if hi <= lo {
        return Err(Error::InvalidArc { reason: format!("empty arc [{lo}, {hi}]") });
    }
    let mut hints = Vec::new();
    f.boundary_hints(&mut hints);
    // Keep only hints landing inside the arc (allowing a full-turn shift).
    let seeds: Vec<f64> = hints
        .iter()
        .map(|&t| lo + (t - lo).rem_euclid(std::f64::consts::TAU))
        .filter(|&t| t < hi)
        .collect();
    let raw = certify_max_1d(
        &|t| {
            let z = Complex64::from_polar(1.0, t);
            let (v, d) = f.eval_with_derivative(z);
            modulus_sample(v, d * Complex64::new(0.0, 1.0) * z)
        },
        lo,
        hi,
        &seeds,
        cfg,
    )?;
    Ok(bound_from_raw(raw, cfg))
}

/// Certified bound on `sup |f|` over the straight segment from `z0` to
/// `z1` (both in the closed disk).
pub fn sup_abs_on_segment(
    f: &AnalyticFn,
    z0: Complex64,
    z1: Complex64,
    cfg: &CertifyConfig,
) -> Result<CertifiedBound> {
    check_admissible(f)?;
    let dir = z1 - z0;
    let speed = dir.norm();
    if speed == 0.0 {
        let v = f.eval(z0).norm();
        return Ok(CertifiedBound::exact(v));
    }
    let raw = certify_max_1d(
        &|t| {
            let z = z0 + dir * t;
            let (v, d) = f.eval_with_derivative(z);
            modulus_sample(v, d * dir)
        },
        0.0,
        1.0,
        &[],
        cfg,
    )?;
    Ok(bound_from_raw(raw, cfg))
}
