//! Spectral quotient operators on periodic grids.
//!
//! The library realizes the multiplier family built from the Bessel and
//! Riesz potentials — most importantly their quotient
//! m(xi) = |xi|^a / (mu^2 + |xi|^2)^{a/2} and its complement, the symbol of
//! an approximate identity with a Bessel-kernel series expansion — and the
//! experiment machinery for measuring approximation orders, kernel decay,
//! saturation and localization at desk scale.
//!
//! Modules:
//! - [`grid`]: periodic fields, transforms, norms, shifts, modulus of continuity
//! - [`special`]: Gamma, modified Bessel K, series coefficients, kernel moments
//! - [`symbols`]: the multiplier family and its application in frequency space
//! - [`kernels`]: series kernel, two-path convolution, kernel extraction and decay
//! - [`approx`]: experiment curves (equivalence, rates, saturation, Besov, ...)
//! - [`acceptance`]: the pinned verification suite

pub mod acceptance;
pub mod approx;
pub mod error;
pub mod grid;
pub mod kernels;
pub mod quadrature;
pub mod special;
pub mod symbols;

pub use error::{Error, Result};
pub use num_complex::Complex64;
