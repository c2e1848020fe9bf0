//! The closed-form multiplier family and its application to fields in
//! frequency space, plus finite-difference checks of the derivative
//! envelopes that drive the kernel estimates.
//!
//! Kinds:
//!   quotient          m(xi) = |xi|^a / (mu^2 + |xi|^2)^{a/2}
//!   complement        1 - m(xi)
//!   bessel_potential  (mu^2 + |xi|^2)^{-a/2}
//!   riesz_potential   |xi|^{-a}
//!   remainder         mu / ((mu^2 + |xi|^2)^{1/2} + |xi|)

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{forward, inverse, SampledField};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolKind {
    Quotient,
    Complement,
    BesselPotential,
    RieszPotential,
    Remainder,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymbolSpec {
    pub kind: SymbolKind,
    pub alpha: f64,
    pub mu: f64,
}

/// Handling of the xi = 0 mode when applying a symbol that is singular there
/// (the Riesz potential on the torus).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DcPolicy {
    /// Zero the DC coefficient (principal-value convention).
    #[default]
    Zero,
    /// Pass the DC coefficient through unchanged.
    Keep,
    /// Reject fields with a nonzero mean.
    Error,
}

impl SymbolSpec {
    pub fn new(kind: SymbolKind, alpha: f64, mu: f64) -> Result<Self> {
        if !(mu > 0.0 && mu.is_finite()) {
            return Err(Error::InvalidMu(mu));
        }
        let hi = match kind {
            SymbolKind::Quotient | SymbolKind::Complement => 1.0,
            SymbolKind::BesselPotential | SymbolKind::RieszPotential => 2.0,
            SymbolKind::Remainder => 1.0,
        };
        if !(alpha > 0.0 && alpha <= hi && alpha.is_finite()) {
            return Err(Error::InvalidAlpha {
                got: alpha,
                lo: 0.0,
                hi,
            });
        }
        if kind == SymbolKind::Remainder && alpha != 1.0 {
            return Err(Error::InvalidAlpha {
                got: alpha,
                lo: 1.0,
                hi: 1.0,
            });
        }
        Ok(Self { kind, alpha, mu })
    }

    pub fn quotient(alpha: f64, mu: f64) -> Result<Self> {
        Self::new(SymbolKind::Quotient, alpha, mu)
    }

    pub fn complement(alpha: f64, mu: f64) -> Result<Self> {
        Self::new(SymbolKind::Complement, alpha, mu)
    }

    pub fn bessel_potential(alpha: f64, mu: f64) -> Result<Self> {
        Self::new(SymbolKind::BesselPotential, alpha, mu)
    }

    pub fn riesz_potential(alpha: f64) -> Result<Self> {
        Self::new(SymbolKind::RieszPotential, alpha, 1.0)
    }

    pub fn remainder(mu: f64) -> Result<Self> {
        Self::new(SymbolKind::Remainder, 1.0, mu)
    }

    /// Quotient value as a function of u = |xi| / mu. Evaluating through u
    /// makes the dilation identity m_{a,mu}(xi) = m_{a,1}(xi/mu) bit-exact.
    fn quotient_of(u: f64, alpha: f64) -> f64 {
        if u <= 1.0 {
            u.powf(alpha) * (1.0 + u * u).powf(-alpha / 2.0)
        } else {
            let w = 1.0 / u;
            (1.0 + w * w).powf(-alpha / 2.0)
        }
    }

    /// Radial symbol value at |xi| = r.
    pub fn value(&self, r: f64) -> Result<f64> {
        debug_assert!(r >= 0.0);
        match self.kind {
            SymbolKind::Quotient => Ok(Self::quotient_of(r / self.mu, self.alpha)),
            SymbolKind::Complement => Ok(1.0 - Self::quotient_of(r / self.mu, self.alpha)),
            SymbolKind::BesselPotential => {
                Ok((self.mu * self.mu + r * r).powf(-self.alpha / 2.0))
            }
            SymbolKind::RieszPotential => {
                if r == 0.0 {
                    Err(Error::RieszAtZero)
                } else {
                    Ok(r.powf(-self.alpha))
                }
            }
            SymbolKind::Remainder => {
                Ok(self.mu / ((self.mu * self.mu + r * r).sqrt() + r))
            }
        }
    }

    /// Symbol value at a frequency vector.
    pub fn value_vec(&self, xi: &[f64]) -> Result<f64> {
        let r = xi.iter().map(|v| v * v).sum::<f64>().sqrt();
        self.value(r)
    }

    /// True when the symbol is bounded on the punctured lattice including 0.
    pub fn bounded_at_zero(&self) -> bool {
        self.kind != SymbolKind::RieszPotential
    }
}

/// Apply a radial Fourier multiplier to a field: transform, scale each
/// coefficient by the symbol at its lattice frequency, transform back.
pub fn apply_symbol(
    field: &SampledField,
    spec: &SymbolSpec,
    dc_policy: DcPolicy,
) -> Result<SampledField> {
    let grid = field.grid();
    let mut coeffs = forward(field);
    for (i, c) in coeffs.coefficients_mut().iter_mut().enumerate() {
        let r = grid.freq_norm(i);
        if r == 0.0 && spec.kind == SymbolKind::RieszPotential {
            match dc_policy {
                DcPolicy::Zero => *c = Complex64::new(0.0, 0.0),
                DcPolicy::Keep => {}
                DcPolicy::Error => {
                    if c.norm() > 1e-12 {
                        return Err(Error::RieszNonzeroMean);
                    }
                    *c = Complex64::new(0.0, 0.0);
                }
            }
        } else {
            *c *= spec.value(r)?;
        }
    }
    Ok(inverse(&coeffs))
}

/// One finite-difference sample of a derivative envelope check.
#[derive(Debug, Clone, Copy)]
pub struct BoundSample {
    pub xi: f64,
    pub derivative: f64,
    pub bound: f64,
    pub ratio: f64,
}

/// Envelope-check report: per-sample ratios |d^k b(xi)| / bound(xi) and
/// their maximum. Bounds use unit reference constants; the true constants
/// in these envelopes are not pinned, so callers assert stability of the
/// ratios rather than absolute values.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub samples: Vec<BoundSample>,
    pub max_ratio: f64,
}

impl BoundReport {
    pub fn from_samples(samples: Vec<BoundSample>) -> Self {
        let max_ratio = samples.iter().map(|s| s.ratio).fold(0.0, f64::max);
        Self { samples, max_ratio }
    }
}

fn reference_bound(spec: &SymbolSpec, order: usize, r: f64) -> f64 {
    let k = order as f64;
    match spec.kind {
        // |d^k b| <= C |xi|^{a-k} (mu^2+|xi|^2)^{-a/2}
        SymbolKind::Quotient | SymbolKind::Complement => {
            r.powf(spec.alpha - k) * (spec.mu * spec.mu + r * r).powf(-spec.alpha / 2.0)
        }
        // |d r / d xi| <= 2 / |xi|; higher orders C_k |xi|^{-k}
        SymbolKind::Remainder => {
            if order == 1 {
                2.0 / r
            } else {
                r.powf(-k)
            }
        }
        // Mikhlin-scale envelope |xi|^{-k} b(xi)
        SymbolKind::BesselPotential | SymbolKind::RieszPotential => {
            r.powf(-k) * spec.value(r).unwrap_or(f64::INFINITY)
        }
    }
}

/// Check the radial derivative envelope of a symbol by central finite
/// differences with relative step 1e-4 |xi|, over a sample set spanning at
/// least four dyadic scales.
pub fn derivative_bound_check(
    spec: &SymbolSpec,
    order: usize,
    sample_set: &[f64],
) -> Result<BoundReport> {
    if !(1..=2).contains(&order) {
        return Err(Error::InvalidDerivativeOrder(order));
    }
    if sample_set.contains(&0.0) {
        return Err(Error::RieszAtZero);
    }
    let lo = sample_set.iter().cloned().map(f64::abs).fold(f64::INFINITY, f64::min);
    let hi = sample_set.iter().cloned().map(f64::abs).fold(0.0, f64::max);
    let span = (hi / lo).log2();
    if sample_set.len() < 2 || span < 4.0 {
        return Err(Error::InsufficientDyadicSpan {
            got: span,
            need: 4.0,
        });
    }
    let mut samples = Vec::with_capacity(sample_set.len());
    for &xi in sample_set {
        let r = xi.abs();
        let step = 1e-4 * r;
        let vp = spec.value(r + step)?;
        let vm = spec.value(r - step)?;
        let derivative = match order {
            1 => (vp - vm) / (2.0 * step),
            _ => {
                let v0 = spec.value(r)?;
                (vp - 2.0 * v0 + vm) / (step * step)
            }
        };
        let bound = reference_bound(spec, order, r);
        samples.push(BoundSample {
            xi: r,
            derivative,
            bound,
            ratio: derivative.abs() / bound,
        });
    }
    Ok(BoundReport::from_samples(samples))
}
