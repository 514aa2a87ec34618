//! Certified numerics for interpolation systems on the unit disk.
//!
//! The crate is organised around a closed symbolic representation of
//! bounded analytic functions ([`AnalyticFn`]) together with a certified
//! boundary maximiser ([`certify`]). On top of that sit:
//!
//! * [`peak`] — peak-function systems on disjoint boundary arcs with a
//!   certified `1 + ε` bound on the summed moduli and the synthesis map
//!   `c ↦ Σ cₙ gₙ`;
//! * [`pick`] — finite Nevanlinna–Pick interpolation (feasibility,
//!   minimal norm, explicit Schur-recursion interpolants);
//! * [`carleson`] — Carleson constants of node sequences, explicit dual
//!   (biorthogonal) function systems and perturbation-radius searches
//!   around boundary anchors;
//! * [`drury`] — the roots-of-unity averaging construction producing a
//!   biorthogonal system with a certified `M²` sum bound;
//! * [`basis`] — finite-dimensional p-Hilbertian/p-Besselian constants,
//!   a family of ill-conditioned bases with closed-form extremal ratios
//!   and perturbation-margin checks;
//! * [`classical`] — lacunary frequency sets with empirical Sidon ratios
//!   and exact-rational Cantor-type boundary sequences.
//!
//! All heavy routines are pure; values are immutable after construction
//! and safe to share across threads.

pub mod basis;
pub mod carleson;
pub mod certify;
pub mod classical;
pub mod disk;
pub mod drury;
pub mod error;
pub mod func;
pub mod jsonc;
pub mod linalg;
pub mod linprog;
pub mod peak;
pub mod pick;
pub mod poly;
pub mod selftest;



pub use certify::{BoundMethod, CertifiedBound, CertifyConfig, MethodTag, SupAbsSum};
pub use disk::DiskPoint;

pub use error::{Error, Result};
pub use func::AnalyticFn;



/// Default target radius for certified sup bounds.
pub const DEFAULT_SUP_TOL: f64 = 1e-6;
/// Default tolerance for interpolation residuals.
pub const DEFAULT_INTERP_TOL: f64 = 1e-9;
