//! Periodic discretization of R^d: uniform grids on the torus [-L/2, L/2)^d,
//! sampled and spectral fields, transforms with continuum normalization,
//! L^p norms, exact spectral shifts, and the L^p modulus of continuity.
//!
//! The forward transform multiplies the DFT by h^d (and the lattice parity
//! phase from the x-origin at -L/2) so that coefficients approximate the
//! continuum integral transform; the inverse divides by L^d. With this
//! pairing Parseval holds exactly: h^d sum |f|^2 = L^-d sum |F|^2.

use std::cell::RefCell;

use num_complex::Complex64;
use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};
use rustfft::FftPlanner;

use crate::error::{Error, Result};

/// Uniform periodic grid: `n` points per axis on a torus of side `length`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    dim: usize,
    n: usize,
    length: f64,
}

/// Validated grid constructor.
pub fn make_grid(dim: usize, n: usize, length: f64) -> Result<GridSpec> {
    if !(1..=3).contains(&dim) {
        return Err(Error::InvalidDimension(dim));
    }
    if n < 8 || !n.is_power_of_two() {
        return Err(Error::InvalidGridSize(n));
    }
    if !(length > 0.0 && length.is_finite()) {
        return Err(Error::InvalidLength(length));
    }
    Ok(GridSpec { dim, n, length })
}

impl GridSpec {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    /// Grid spacing h = L / n.
    pub fn spacing(&self) -> f64 {
        self.length / self.n as f64
    }

    /// Frequency-lattice step 2 pi / L.
    pub fn freq_step(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.length
    }

    /// Largest resolved frequency pi / h per axis.
    pub fn nyquist(&self) -> f64 {
        std::f64::consts::PI / self.spacing()
    }

    pub fn total_points(&self) -> usize {
        self.n.pow(self.dim as u32)
    }

    /// Per-axis indices of a flat (row-major) index.
    fn axes(&self, mut idx: usize) -> [usize; 3] {
        let mut out = [0usize; 3];
        for a in (0..self.dim).rev() {
            out[a] = idx % self.n;
            idx /= self.n;
        }
        out
    }

    /// Real-space point of a flat index, x_i = -L/2 + idx_i * h.
    pub fn point(&self, idx: usize) -> [f64; 3] {
        let axes = self.axes(idx);
        let h = self.spacing();
        let mut out = [0.0; 3];
        for a in 0..self.dim {
            out[a] = -self.length / 2.0 + axes[a] as f64 * h;
        }
        out
    }

    /// Signed integer frequency indices k in [-n/2, n/2) of a flat index.
    pub fn freq_indices(&self, idx: usize) -> [i64; 3] {
        let axes = self.axes(idx);
        let half = self.n / 2;
        let mut out = [0i64; 3];
        for a in 0..self.dim {
            out[a] = if axes[a] < half {
                axes[a] as i64
            } else {
                axes[a] as i64 - self.n as i64
            };
        }
        out
    }

    /// Frequency vector xi_k = 2 pi k / L of a flat index.
    pub fn freq(&self, idx: usize) -> [f64; 3] {
        let k = self.freq_indices(idx);
        let step = self.freq_step();
        let mut out = [0.0; 3];
        for a in 0..self.dim {
            out[a] = step * k[a] as f64;
        }
        out
    }

    /// |xi| at a flat index.
    pub fn freq_norm(&self, idx: usize) -> f64 {
        let xi = self.freq(idx);
        (xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]).sqrt()
    }

    /// Parity (-1)^{sum of axis indices}; the phase tying the DFT to the
    /// x-origin at -L/2 (n even, so signed and unsigned parity agree).
    fn parity(&self, idx: usize) -> f64 {
        let axes = self.axes(idx);
        let s: usize = axes[..self.dim].iter().sum();
        if s.is_multiple_of(2) {
            1.0
        } else {
            -1.0
        }
    }

    /// Flat index of the grid point closest to `x`.
    pub fn nearest_index(&self, x: &[f64]) -> usize {
        let h = self.spacing();
        let mut idx = 0usize;
        for coord in &x[..self.dim] {
            let rel = (coord + self.length / 2.0) / h;
            let i = (rel.round() as i64).rem_euclid(self.n as i64) as usize;
            idx = idx * self.n + i;
        }
        idx
    }
}

/// Real-space samples on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledField {
    grid: GridSpec,
    values: Vec<Complex64>,
}

/// Frequency-space coefficients on the same lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralField {
    grid: GridSpec,
    coefficients: Vec<Complex64>,
}

impl SampledField {
    pub fn from_values(grid: GridSpec, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.total_points() {
            return Err(Error::ValueCountMismatch {
                got: values.len(),
                expected: grid.total_points(),
            });
        }
        if values.iter().any(|v| !v.re.is_finite() || !v.im.is_finite()) {
            return Err(Error::NonFiniteField);
        }
        Ok(Self { grid, values })
    }

    pub fn from_real(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        Self::from_values(grid, values.into_iter().map(|v| Complex64::new(v, 0.0)).collect())
    }

    pub fn from_fn(grid: GridSpec, f: impl Fn(&[f64]) -> f64) -> Self {
        let values = (0..grid.total_points())
            .map(|i| {
                let p = grid.point(i);
                Complex64::new(f(&p[..grid.dim()]), 0.0)
            })
            .collect();
        Self { grid, values }
    }

    pub fn zero(grid: GridSpec) -> Self {
        Self {
            grid,
            values: vec![Complex64::new(0.0, 0.0); grid.total_points()],
        }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    /// Mean value h^d sum f / L^d.
    pub fn mean(&self) -> Complex64 {
        let sum: Complex64 = self.values.iter().sum();
        sum / self.values.len() as f64
    }

    /// Largest imaginary part in absolute value; a realness check after
    /// applying real radial symbols.
    pub fn max_imag(&self) -> f64 {
        self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Subtract the mean, leaving a zero-DC field.
    pub fn zero_mean(&self) -> Self {
        let m = self.mean();
        let values = self.values.iter().map(|v| v - m).collect();
        Self {
            grid: self.grid,
            values,
        }
    }

    /// Pointwise difference on a shared grid.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            grid: self.grid,
            values,
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch);
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            grid: self.grid,
            values,
        })
    }

    pub fn scale(&self, c: f64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }
}

impl SpectralField {
    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coefficients
    }

    pub fn coefficients_mut(&mut self) -> &mut [Complex64] {
        &mut self.coefficients
    }

    pub fn from_coefficients(grid: GridSpec, coefficients: Vec<Complex64>) -> Result<Self> {
        if coefficients.len() != grid.total_points() {
            return Err(Error::ValueCountMismatch {
                got: coefficients.len(),
                expected: grid.total_points(),
            });
        }
        Ok(Self { grid, coefficients })
    }

    /// Spectral L^2 norm sqrt(L^-d sum |F|^2); equals the real-space L^2 norm
    /// by the discrete Parseval identity.
    pub fn l2_norm(&self) -> f64 {
        let sum: f64 = self.coefficients.iter().map(|c| c.norm_sqr()).sum();
        (sum / self.grid.length.powi(self.grid.dim as i32)).sqrt()
    }
}

thread_local! {
    static PLANNER: RefCell<FftPlanner<f64>> = RefCell::new(FftPlanner::new());
}

/// Unnormalized DFT along every axis, in place.
fn fft_axes(data: &mut [Complex64], grid: &GridSpec, forward: bool) {
    let n = grid.n;
    PLANNER.with(|planner| {
        let fft = {
            let mut p = planner.borrow_mut();
            if forward {
                p.plan_fft_forward(n)
            } else {
                p.plan_fft_inverse(n)
            }
        };
        match grid.dim {
            1 => fft.process(data),
            dim => {
                let total = data.len();
                let mut line = vec![Complex64::new(0.0, 0.0); n];
                // Axis a has stride n^{dim-1-a} in row-major layout.
                for a in 0..dim {
                    let stride = n.pow((dim - 1 - a) as u32);
                    let lines = total / n;
                    for l in 0..lines {
                        // Base offset of the l-th line along axis a.
                        let block = l / stride;
                        let within = l % stride;
                        let base = block * stride * n + within;
                        for (j, v) in line.iter_mut().enumerate() {
                            *v = data[base + j * stride];
                        }
                        fft.process(&mut line);
                        for (j, v) in line.iter().enumerate() {
                            data[base + j * stride] = *v;
                        }
                    }
                }
            }
        }
    });
}

/// Forward transform: coefficients F_k ~ int e^{-i x xi_k} f(x) dx.
pub fn forward(field: &SampledField) -> SpectralField {
    let grid = field.grid;
    let mut data = field.values.clone();
    fft_axes(&mut data, &grid, true);
    let hd = grid.spacing().powi(grid.dim as i32);
    for (i, v) in data.iter_mut().enumerate() {
        *v *= hd * grid.parity(i);
    }
    SpectralField {
        grid,
        coefficients: data,
    }
}

/// Inverse transform: f(x_j) = L^-d sum_k e^{i x_j xi_k} F_k.
pub fn inverse(spec: &SpectralField) -> SampledField {
    let grid = spec.grid;
    let mut data = spec.coefficients.clone();
    let ld = grid.length.powi(grid.dim as i32);
    for (i, v) in data.iter_mut().enumerate() {
        *v *= grid.parity(i) / ld;
    }
    fft_axes(&mut data, &grid, false);
    SampledField {
        grid,
        values: data,
    }
}

/// L^p norm as a Riemann sum, (h^d sum |f|^p)^{1/p}, for 1 <= p < inf.
pub fn lp_norm(field: &SampledField, p: f64) -> Result<f64> {
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidNormExponent(p));
    }
    let hd = field.grid.spacing().powi(field.grid.dim as i32);
    let sum: f64 = if p == 2.0 {
        field.values.iter().map(|v| v.norm_sqr()).sum()
    } else if p == 1.0 {
        field.values.iter().map(|v| v.norm()).sum()
    } else {
        field.values.iter().map(|v| v.norm().powf(p)).sum()
    };
    Ok((hd * sum).powf(1.0 / p))
}

/// Sup norm over grid points.
pub fn max_norm(field: &SampledField) -> f64 {
    field.max_abs()
}

/// Translate f(.) to f(. + offset) by the exact phase law in frequency space.
/// Arbitrary real offsets are allowed as long as |offset| < L/2.
pub fn shift(field: &SampledField, offset: &[f64]) -> Result<SampledField> {
    let grid = field.grid;
    let norm: f64 = offset[..grid.dim].iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm >= grid.length / 2.0 {
        return Err(Error::OffsetTooLarge {
            got: norm,
            max: grid.length / 2.0,
        });
    }
    let mut spec = forward(field);
    for (i, c) in spec.coefficients.iter_mut().enumerate() {
        let xi = grid.freq(i);
        let phase: f64 = xi[..grid.dim]
            .iter()
            .zip(offset)
            .map(|(x, o)| x * o)
            .sum();
        *c *= Complex64::from_polar(1.0, phase);
    }
    Ok(inverse(&spec))
}

/// Offset sampling used by the discrete modulus of continuity.
#[derive(Debug, Clone, Copy)]
pub struct OmegaSampling {
    /// Radii are {t k / radial_steps : k = 1..radial_steps}.
    pub radial_steps: usize,
    /// Include the normalized diagonal directions besides the coordinate axes.
    pub include_diagonals: bool,
}

impl Default for OmegaSampling {
    fn default() -> Self {
        Self {
            radial_steps: 8,
            include_diagonals: true,
        }
    }
}

fn directions(dim: usize, diagonals: bool) -> Vec<[f64; 3]> {
    let mut dirs = Vec::new();
    for a in 0..dim {
        for sign in [1.0, -1.0] {
            let mut d = [0.0; 3];
            d[a] = sign;
            dirs.push(d);
        }
    }
    if diagonals && dim > 1 {
        let norm = (dim as f64).sqrt();
        let combos = 1usize << dim;
        for c in 0..combos {
            let mut d = [0.0; 3];
            for (a, v) in d[..dim].iter_mut().enumerate() {
                *v = if c & (1 << a) == 0 { 1.0 } else { -1.0 } / norm;
            }
            dirs.push(d);
        }
    }
    dirs
}

/// Discrete L^p modulus of continuity: sup over sampled offsets (directions
/// x radii) of ||f(.+h) - f||_p. A sampled sup, hence a lower bound of the
/// true modulus.
pub fn modulus_of_continuity(
    field: &SampledField,
    t: f64,
    p: f64,
    sampling: OmegaSampling,
) -> Result<f64> {
    if t < 0.0 {
        return Err(Error::NegativeRadius(t));
    }
    if !(p >= 1.0 && p.is_finite()) {
        return Err(Error::InvalidNormExponent(p));
    }
    if t == 0.0 {
        return Ok(0.0);
    }
    let grid = field.grid;
    let spec = forward(field);
    let mut sup: f64 = 0.0;
    for dir in directions(grid.dim, sampling.include_diagonals) {
        for k in 1..=sampling.radial_steps {
            let r = t * k as f64 / sampling.radial_steps as f64;
            // Shifted-minus-original directly in frequency space.
            let mut diff = spec.clone();
            for (i, c) in diff.coefficients.iter_mut().enumerate() {
                let xi = grid.freq(i);
                let phase: f64 = xi[..grid.dim]
                    .iter()
                    .zip(&dir[..grid.dim])
                    .map(|(x, o)| x * o * r)
                    .sum();
                *c *= Complex64::from_polar(1.0, phase) - 1.0;
            }
            let norm = lp_norm(&inverse(&diff), p)?;
            sup = sup.max(norm);
        }
    }
    Ok(sup)
}

/// Deterministic real band-limited noise: seeded white noise, spectrally
/// truncated to |xi| <= cutoff.
pub fn random_band_limited(grid: GridSpec, seed: u64, cutoff: f64) -> Result<SampledField> {
    if cutoff >= grid.nyquist() {
        return Err(Error::CutoffTooLarge {
            got: cutoff,
            nyquist: grid.nyquist(),
        });
    }
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    let mut unit = || (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64;
    let total = grid.total_points();
    let mut noise = Vec::with_capacity(total);
    while noise.len() < total {
        // Box-Muller.
        let u1 = (unit()).max(f64::MIN_POSITIVE);
        let u2 = unit();
        let r = (-2.0 * u1.ln()).sqrt();
        let a = 2.0 * std::f64::consts::PI * u2;
        noise.push(r * a.cos());
        if noise.len() < total {
            noise.push(r * a.sin());
        }
    }
    let white = SampledField::from_real(grid, noise)?;
    let mut spec = forward(&white);
    for (i, c) in spec.coefficients.iter_mut().enumerate() {
        if grid.freq_norm(i) > cutoff {
            *c = Complex64::new(0.0, 0.0);
        }
    }
    let field = inverse(&spec);
    // The masked spectrum is Hermitian, so the field is real up to roundoff;
    // store the exact real part for bit-stable determinism.
    let values = field.values.iter().map(|v| v.re).collect();
    SampledField::from_real(grid, values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian_1d(grid: GridSpec) -> SampledField {
        SampledField::from_fn(grid, |x| (-x[0] * x[0] / 2.0).exp())
    }

    #[test]
    fn make_grid_validates() {
        let g = make_grid(1, 256, 64.0).unwrap();
        assert_eq!(g.spacing(), 0.25);
        assert!((g.freq_step() - 2.0 * std::f64::consts::PI / 64.0).abs() < 1e-15);
        assert!(matches!(make_grid(1, 7, 64.0), Err(Error::InvalidGridSize(7))));
        assert!(matches!(make_grid(1, 4, 64.0), Err(Error::InvalidGridSize(4))));
        assert!(matches!(make_grid(4, 256, 64.0), Err(Error::InvalidDimension(4))));
        assert!(matches!(make_grid(0, 256, 64.0), Err(Error::InvalidDimension(0))));
        assert!(matches!(
            make_grid(1, 256, 0.0),
            Err(Error::InvalidLength(_))
        ));
    }

    #[test]
    fn roundtrip_is_identity() {
        for dim in 1..=3 {
            let n = if dim == 3 { 8 } else { 32 };
            let grid = make_grid(dim, n, 16.0).unwrap();
            let f = random_band_limited(grid, 42, 0.8 * grid.nyquist()).unwrap();
            let back = inverse(&forward(&f));
            let num = lp_norm(&back.sub(&f).unwrap(), 2.0).unwrap();
            let den = lp_norm(&f, 2.0).unwrap();
            assert!(num / den < 1e-12, "dim={dim}: {}", num / den);
        }
    }

    #[test]
    fn gaussian_transform_matches_closed_form() {
        // hat(e^{-x^2/2}) = sqrt(2 pi) e^{-xi^2/2}; compare on |xi| <= pi/h - 2.
        let grid = make_grid(1, 1024, 64.0).unwrap();
        let f = gaussian_1d(grid);
        let spec = forward(&f);
        let bound = grid.nyquist() - 2.0;
        for i in 0..grid.total_points() {
            let xi = grid.freq(i)[0];
            if xi.abs() <= bound {
                let expect = (2.0 * std::f64::consts::PI).sqrt() * (-xi * xi / 2.0).exp();
                let got = spec.coefficients()[i];
                assert!(
                    (got.re - expect).abs() < 1e-8 && got.im.abs() < 1e-8,
                    "xi={xi}: {got} vs {expect}"
                );
            }
        }
    }

    #[test]
    fn transform_agrees_with_direct_quadrature() {
        // The direct Riemann sum h sum e^{-i x xi} f(x) is an independent
        // oracle for the FFT path.
        let grid = make_grid(1, 256, 32.0).unwrap();
        let f = gaussian_1d(grid);
        let spec = forward(&f);
        let h = grid.spacing();
        for idx in [0usize, 3, 17, 128, 200] {
            let xi = grid.freq(idx)[0];
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..grid.total_points() {
                let x = grid.point(i)[0];
                acc += f.values()[i] * Complex64::from_polar(1.0, -x * xi);
            }
            acc *= h;
            let got = spec.coefficients()[idx];
            assert!((got - acc).norm() < 1e-12, "idx={idx}");
        }
    }

    #[test]
    fn pure_mode_has_single_coefficient() {
        let grid = make_grid(1, 64, 16.0).unwrap();
        let k = 5i64;
        let xi_k = grid.freq_step() * k as f64;
        let mode = SampledField::from_values(
            grid,
            (0..grid.total_points())
                .map(|i| Complex64::from_polar(1.0, grid.point(i)[0] * xi_k))
                .collect(),
        )
        .unwrap();
        let spec = forward(&mode);
        for i in 0..grid.total_points() {
            let c = spec.coefficients()[i];
            if grid.freq_indices(i)[0] == k {
                assert!((c.re - grid.length()).abs() < 1e-9 && c.im.abs() < 1e-9);
            } else {
                assert!(c.norm() < 1e-9, "leakage at {i}: {c}");
            }
        }
    }

    #[test]
    fn lp_norm_reference_values() {
        let grid = make_grid(1, 4096, 64.0).unwrap();
        let ind = SampledField::from_fn(grid, |x| if (0.0..1.0).contains(&x[0]) { 1.0 } else { 0.0 });
        let h = grid.spacing();
        assert!((lp_norm(&ind, 1.0).unwrap() - 1.0).abs() <= h);
        assert_eq!(lp_norm(&SampledField::zero(grid), 1.5).unwrap(), 0.0);
        // ||e^{-x^2/2}||_2 = pi^{1/4}.
        let g = gaussian_1d(grid);
        let expect = std::f64::consts::PI.powf(0.25);
        assert!((lp_norm(&g, 2.0).unwrap() - expect).abs() < 1e-8);
        assert!(lp_norm(&g, 0.5).is_err());
        assert!(lp_norm(&g, f64::INFINITY).is_err());
    }

    #[test]
    fn shift_basics() {
        let grid = make_grid(1, 512, 64.0).unwrap();
        let g = gaussian_1d(grid);
        let same = shift(&g, &[0.0]).unwrap();
        assert!(lp_norm(&same.sub(&g).unwrap(), 2.0).unwrap() < 1e-12);

        // Pure mode picks up the phase e^{i xi_k h}.
        let k = 3i64;
        let xi_k = grid.freq_step() * k as f64;
        let mode = SampledField::from_values(
            grid,
            (0..grid.total_points())
                .map(|i| Complex64::from_polar(1.0, grid.point(i)[0] * xi_k))
                .collect(),
        )
        .unwrap();
        let off = 0.7;
        let shifted = shift(&mode, &[off]).unwrap();
        let phase = Complex64::from_polar(1.0, xi_k * off);
        for (a, b) in shifted.values().iter().zip(mode.values()) {
            assert!((a - b * phase).norm() < 1e-10);
        }

        // Shifted Gaussian matches the resampled one.
        let shifted = shift(&g, &[1.0]).unwrap();
        let resampled =
            SampledField::from_fn(grid, |x| (-(x[0] + 1.0) * (x[0] + 1.0) / 2.0).exp());
        assert!(lp_norm(&shifted.sub(&resampled).unwrap(), 2.0).unwrap() < 1e-8);

        assert!(shift(&g, &[40.0]).is_err());
    }

    #[test]
    fn omega_reference_values() {
        let grid = make_grid(1, 4096, 64.0).unwrap();
        let g = gaussian_1d(grid);
        assert_eq!(
            modulus_of_continuity(&g, 0.0, 2.0, OmegaSampling::default()).unwrap(),
            0.0
        );
        assert!(modulus_of_continuity(&g, -1.0, 2.0, OmegaSampling::default()).is_err());

        // Indicator: ||1_{[0,1]}(.+h) - 1_{[0,1]}||_1 = 2|h|, sup at |h| = t.
        let ind = SampledField::from_fn(grid, |x| if (0.0..1.0).contains(&x[0]) { 1.0 } else { 0.0 });
        let om = modulus_of_continuity(&ind, 0.25, 1.0, OmegaSampling::default()).unwrap();
        assert!(
            (om - 0.5).abs() <= 2.0 * grid.spacing(),
            "omega = {om}"
        );

        // Mean-value bound omega(f,t)_2 <= t ||f'||_2 for smooth fields;
        // ||d/dx e^{-x^2/2}||_2 = pi^{1/4} / sqrt(2).
        let t = 0.1;
        let om = modulus_of_continuity(&g, t, 2.0, OmegaSampling::default()).unwrap();
        let grad = std::f64::consts::PI.powf(0.25) / 2.0f64.sqrt();
        assert!(om <= t * grad * (1.0 + 1e-9), "om = {om}, bound = {}", t * grad);
        // Oracle: direct quadrature of the shifted difference at the largest
        // sampled offset.
        let moved = SampledField::from_fn(grid, |x| (-(x[0] + t) * (x[0] + t) / 2.0).exp());
        let direct = lp_norm(&moved.sub(&g).unwrap(), 2.0).unwrap();
        assert!(om >= direct * (1.0 - 1e-9));
    }

    #[test]
    fn band_limited_noise_contract() {
        let grid = make_grid(1, 256, 32.0).unwrap();
        let a = random_band_limited(grid, 9, 5.0).unwrap();
        let b = random_band_limited(grid, 9, 5.0).unwrap();
        assert_eq!(a.values(), b.values(), "same seed must be bit-identical");
        let c = random_band_limited(grid, 10, 5.0).unwrap();
        assert_ne!(a.values(), c.values());

        // cutoff = 0 keeps only the DC mode: constant field.
        let flat = random_band_limited(grid, 4, 0.0).unwrap();
        let first = flat.values()[0];
        for v in flat.values() {
            assert!((v - first).norm() < 1e-12);
        }

        // Spectrum support.
        let spec = forward(&a);
        for i in 0..grid.total_points() {
            if grid.freq_norm(i) > 5.0 {
                assert!(spec.coefficients()[i].norm() < 1e-12);
            }
        }
        assert!(random_band_limited(grid, 1, grid.nyquist()).is_err());
    }

    #[test]
    fn parseval_exact() {
        let grid = make_grid(1, 512, 32.0).unwrap();
        let f = random_band_limited(grid, 3, 10.0).unwrap();
        let real = lp_norm(&f, 2.0).unwrap();
        let spec = forward(&f).l2_norm();
        assert!((real - spec).abs() / real < 1e-12);
    }

    #[test]
    fn two_dimensional_gaussian_transform() {
        let grid = make_grid(2, 64, 24.0).unwrap();
        let f = SampledField::from_fn(grid, |x| (-(x[0] * x[0] + x[1] * x[1]) / 2.0).exp());
        let spec = forward(&f);
        // hat f = 2 pi e^{-|xi|^2/2}.
        for idx in [0usize, 5, 65, 1000] {
            let xi = grid.freq(idx);
            let r2 = xi[0] * xi[0] + xi[1] * xi[1];
            if r2.sqrt() < grid.nyquist() - 2.0 {
                let expect = 2.0 * std::f64::consts::PI * (-r2 / 2.0).exp();
                assert!(
                    (spec.coefficients()[idx].re - expect).abs() < 1e-6,
                    "idx {idx}"
                );
            }
        }
    }
}
