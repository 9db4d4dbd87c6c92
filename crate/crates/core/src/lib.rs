//! Numerical laboratory for the fractional divisor function
//! `σ_α(n) = Σ_{d|n} d^α` and the error term of its summatory function.
//!
//! The crate is organised by subsystem:
//!
//! * [`arith`]: sieved tables of `σ_α`, primorials, prime power sums, running suprema
//!   and the `SGAT` binary cache.
//! * [`special`]: Riemann zeta, complex Gamma, Bessel `J`, `I`, `K` and the convexity
//!   exponent `μ(σ)`.
//! * [`errorterm`]: main terms, exact `E_α(x)` samples and grid scans.
//! * [`voronoi`]: the truncated oscillating series, the functional-equation factor,
//!   the Stirling phase and the Bessel kernel `W_α` (closed form and contour quadrature).
//! * [`extremes`]: the resonance lemma (bound, brute-force verification) and record scans.
//! * [`cli`]: the `sigma-lab` command line driver and its CSV / JSON emitters.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arith;
pub mod cli;
pub mod eft;
pub mod error;
pub mod errorterm;
pub mod extremes;
pub mod special;
pub mod voronoi;

pub use arith::{Alpha, PrimorialCutoff, SigmaTable};
pub use error::{CacheError, LabError, Result};
pub use errorterm::{ErrorSample, MainTerm};
pub use extremes::{RecordList, ResonanceInstance};
pub use special::ComplexPoint;
pub use voronoi::{KernelQuadrature, SeriesParams};
