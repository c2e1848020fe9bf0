//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension must be 1, 2 or 3, got {0}")]
    InvalidDimension(usize),
    #[error("grid size must be a power of two >= 8, got {0}")]
    InvalidGridSize(usize),
    #[error("torus side length must be positive, got {0}")]
    InvalidLength(f64),
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("field has {got} values, grid expects {expected}")]
    ValueCountMismatch { got: usize, expected: usize },
    #[error("field contains non-finite values")]
    NonFiniteField,
    #[error("norm exponent must satisfy 1 <= p < inf, got {0}")]
    InvalidNormExponent(f64),
    #[error("offset magnitude {got} exceeds torus bound {max}")]
    OffsetTooLarge { got: f64, max: f64 },
    #[error("modulus-of-continuity radius must be nonnegative, got {0}")]
    NegativeRadius(f64),
    #[error("band cutoff {got} must be below the Nyquist frequency {nyquist}")]
    CutoffTooLarge { got: f64, nyquist: f64 },
    #[error("order alpha = {got} outside admissible range ({lo}, {hi}]")]
    InvalidAlpha { got: f64, lo: f64, hi: f64 },
    #[error("scale parameter mu must be positive, got {0}")]
    InvalidMu(f64),
    #[error("series index j must be >= 1")]
    InvalidSeriesIndex,
    #[error("argument must be positive, got {0}")]
    NonPositiveArgument(f64),
    #[error("moment exponent s must be nonnegative, got {0}")]
    NegativeMomentExponent(f64),
    #[error("kernel moment diverges: s = {s} must lie below alpha = {alpha}")]
    MomentDivergent { alpha: f64, s: f64 },
    #[error("Riesz-potential symbol is singular at xi = 0")]
    RieszAtZero,
    #[error("Riesz potential applied to a field with nonzero mean under dc_policy = error")]
    RieszNonzeroMean,
    #[error("derivative order must be 1 or 2, got {0}")]
    InvalidDerivativeOrder(usize),
    #[error("derivative samples must be nonzero and span at least {need} dyadic scales, got {got:.2}")]
    InsufficientDyadicSpan { got: f64, need: f64 },
    #[error("series tail tolerance must lie in (0, 1), got {0}")]
    InvalidTailTolerance(f64),
    #[error("series truncation level for the requested tolerance exceeds 2^53")]
    TruncationOverflow,
    #[error("symbol is unbounded on the frequency lattice")]
    UnboundedSymbol,
    #[error("kernel profile resolves {got:.2} decades of mu*|x|, need at least {need}")]
    InsufficientResolution { got: f64, need: f64 },
    #[error("translation |y| = {got} is not resolvable on the grid (need >= {min})")]
    UnresolvableTranslation { got: f64, min: f64 },
    #[error("maximal-function radius delta = {got} must be at least the grid spacing {min}")]
    DeltaBelowSpacing { got: f64, min: f64 },
    #[error("observation radius sigma = {sigma} must be smaller than the vanishing radius delta = {delta}")]
    SigmaNotBelowDelta { sigma: f64, delta: f64 },
    #[error("localization requires mu * delta > 1, got mu = {mu}, delta = {delta}")]
    UnresolvedLocalization { mu: f64, delta: f64 },
    #[error("mu grid must be strictly increasing and positive")]
    InvalidMuGrid,
    #[error("mu = {mu} outside the resolvable window [{lo}, {hi}]")]
    MuOutOfRange { mu: f64, lo: f64, hi: f64 },
    #[error("curve series '{0}' not found")]
    UnknownSeries(String),
    #[error("rate fit needs at least 4 points in the window, got {0}")]
    FitWindowTooSmall(usize),
    #[error("rate fit window contains nonpositive values")]
    NonPositiveFitValues,
    #[error("log-weighted spectral norm diverges (per-decade contributions are not decaying)")]
    DivergentLogNorm,
    #[error("Besov integral diverges (top-decade contribution is not decaying)")]
    DivergentBesovIntegral,
    #[error("Bessel evaluation out of range: {0}")]
    BesselDomain(String),
    #[error("Bessel evaluation failed to converge")]
    BesselConvergence,
}

pub type Result<T> = std::result::Result<T, Error>;
