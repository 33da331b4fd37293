//! Exact spectral counting for round spheres.
//!
//! The Laplace spectrum of the unit sphere `S^n` is the set of integers
//! `v_k = k(k + n - 1)` with explicitly known multiplicities, so the
//! eigenvalue counting function `N(x)` and its Weyl approximation
//! `w(x) = (2/n!) x^(n/2)` can be compared in exact arithmetic, with no
//! floating point anywhere in a certified path.  This crate provides:
//!
//! * [`spectrum`]: eigenvalues, multiplicities, and four independent routes
//!   to the counting function (closed form, product form, brute summation,
//!   and evaluation at arbitrary points).
//! * [`weyl`]: exact three-way comparisons between `N` and `w` at spectrum
//!   nodes, certified enclosures of the crossing inside each spectral gap,
//!   regime maps of the dimensions and indices where the generic inequality
//!   `N(v_k) < w(v_k)` can fail, and the two-term expansion constant.
//! * [`geometry`]: Euclidean ball and sphere volumes as exact rationals
//!   times a power of pi, with the product identity used to cross-check
//!   the bookkeeping.
//! * [`boxes`]: a Dirichlet rectangular-box baseline where the classical
//!   below-Weyl behaviour is verified node by node by lattice enumeration.
//! * [`exact`] and [`decimal`]: the underlying arbitrary-precision integer
//!   and rational types, a symbolic `rational * pi^power` type with certified
//!   numeric comparison, and correctly rounded decimal rendering.

pub mod boxes;
pub mod decimal;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod spectrum;
pub mod weyl;

pub use error::Error;
pub use exact::{Integer, PiPowerRational, Rational};
pub use spectrum::{SpectrumEntry, SphereDim};
pub use weyl::{ComparisonSign, CrossingRecord, RegimeReport, WeylFunction};
