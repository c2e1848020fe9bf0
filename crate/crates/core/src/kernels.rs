//! Real-space realization of the quotient operator: the truncated series
//! kernel, convolution against it, kernel extraction from symbols on a fine
//! grid, and the decay / translation-difference estimates.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::grid::{forward, inverse, GridSpec, SampledField};
use crate::special::{
    bessel_k, coeff_table, coeff_tail, ln_gamma_ratio, sphere_area,
};
use crate::symbols::SymbolSpec;

/// Coefficients beyond this index are not cached; the spectral path switches
/// to the closed-form complement minus a certified tail estimate, and the
/// real-space series reports the omitted mass.
const COEFF_CACHE_CAP: u64 = 1 << 20;

/// Truncated expansion of the approximate-identity kernel: level J,
/// coefficients a_{alpha,1..}, and a certified bound on the omitted mass.
#[derive(Debug, Clone)]
pub struct SeriesKernelSpec {
    alpha: f64,
    truncation: u64,
    coefficients: Vec<f64>,
    tail_mass: f64,
}

impl SeriesKernelSpec {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn truncation(&self) -> u64 {
        self.truncation
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Certified upper bound on sum_{j > J} a_{alpha,j}.
    pub fn tail_mass(&self) -> f64 {
        self.tail_mass
    }
}

/// Choose the smallest truncation level whose certified tail is below
/// `tail_tol`: doubling scan for a bracket, then bisection. The tail is the
/// exact closed form Gamma(J+1-a/2) / (Gamma(J+1) Gamma(1-a/2)).
pub fn series_truncation(alpha: f64, tail_tol: f64) -> Result<SeriesKernelSpec> {
    if !(tail_tol > 0.0 && tail_tol < 1.0) {
        return Err(Error::InvalidTailTolerance(tail_tol));
    }
    // Bisect on the slack-adjusted tail so the certified mass itself meets
    // the tolerance.
    let tail = |j: u64| coeff_tail(alpha, j as f64).map(|t| t * (1.0 + 1e-12));
    let mut hi = 1u64;
    while tail(hi)? > tail_tol {
        hi = hi.checked_mul(2).ok_or(Error::TruncationOverflow)?;
        if hi > (1u64 << 53) {
            return Err(Error::TruncationOverflow);
        }
    }
    let mut lo = hi / 2; // tail(lo) > tol (or lo = 0)
    while hi - lo > 1 && lo > 0 {
        let mid = lo + (hi - lo) / 2;
        if tail(mid)? <= tail_tol {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let truncation = hi;
    let tail_mass = tail(truncation)?;
    let cached = truncation.min(COEFF_CACHE_CAP) as usize;
    Ok(SeriesKernelSpec {
        alpha,
        truncation,
        coefficients: coeff_table(alpha, cached)?,
        tail_mass,
    })
}

/// G_{2j}(0+) = Gamma(j - d/2) / (2^d pi^{d/2} Gamma(j)); finite for 2j > d
/// and decreasing in j, so it dominates every later kernel value.
fn g_at_origin(j: u64, d: usize) -> f64 {
    let jf = j as f64;
    let df = d as f64;
    ((-ln_gamma_ratio(jf, df / 2.0)).exp())
        / (2.0f64.powi(d as i32) * std::f64::consts::PI.powf(df / 2.0))
}

/// Starting values G_2 and G_4 of the order recurrence, per dimension.
fn series_start(t: f64, d: usize) -> Result<(f64, f64)> {
    Ok(match d {
        1 => ((-t).exp() / 2.0, (1.0 + t) * (-t).exp() / 4.0),
        2 => {
            let k0 = bessel_k(0.0, t)?;
            let k1 = bessel_k(1.0, t)?;
            let pi = std::f64::consts::PI;
            (k0 / (2.0 * pi), t * k1 / (4.0 * pi))
        }
        3 => {
            let pi = std::f64::consts::PI;
            ((-t).exp() / (4.0 * pi * t), (-t).exp() / (8.0 * pi))
        }
        _ => return Err(Error::InvalidDimension(d)),
    })
}

/// Value of the truncated series kernel together with a certified bound on
/// the omitted contribution.
#[derive(Debug, Clone, Copy)]
pub struct SeriesValue {
    pub value: f64,
    pub omitted_bound: f64,
}

/// Evaluate mu^d sum_{j<=J} a_{alpha,j} G_{2j}(mu r) by the three-term order
/// recurrence on S_j = G_{2j}(t):
/// S_{j} = t^2/(4(j-1)(j-2)) S_{j-2} + (j-1-d/2)/(j-1) S_{j-1}.
/// All terms are positive, so the forward recurrence is stable. The loop
/// stops once terms are negligible or the coefficient cache is exhausted;
/// either way the omitted mass is reported.
pub fn series_kernel_value(
    spec: &SeriesKernelSpec,
    mu: f64,
    z_radius: f64,
    d: usize,
) -> Result<SeriesValue> {
    if z_radius <= 0.0 {
        return Err(Error::NonPositiveArgument(z_radius));
    }
    if !mu.is_finite() || mu <= 0.0 {
        return Err(Error::InvalidMu(mu));
    }
    if !(1..=3).contains(&d) {
        return Err(Error::InvalidDimension(d));
    }
    let t = mu * z_radius;
    if t > 600.0 {
        return Err(Error::BesselDomain(format!(
            "series kernel resolved for mu*r <= 600, got {t}"
        )));
    }
    let coeffs = &spec.coefficients;
    let cap = spec.truncation.min(coeffs.len() as u64);
    let (mut s_prev, mut s_cur) = series_start(t, d)?;
    let mut acc = coeffs[0] * s_prev;
    if cap >= 2 {
        acc += coeffs[1] * s_cur;
    }
    let mut stop_j = cap;
    let settle = 4.0 * (t * t + 16.0);
    let mut j = 3u64;
    while j <= cap {
        let jf = j as f64;
        let s_next = t * t / (4.0 * (jf - 1.0) * (jf - 2.0)) * s_prev
            + (jf - 1.0 - d as f64 / 2.0) / (jf - 1.0) * s_cur;
        s_prev = s_cur;
        s_cur = s_next;
        let term = coeffs[(j - 1) as usize] * s_cur;
        acc += term;
        if jf > settle && term < 1e-18 * acc {
            stop_j = j;
            break;
        }
        j += 1;
    }
    let mud = mu.powi(d as i32);
    let omitted = if stop_j < spec.truncation {
        let mass = coeff_tail(spec.alpha, stop_j as f64)?
            - coeff_tail(spec.alpha, spec.truncation as f64)?;
        mass.max(0.0) * g_at_origin(stop_j + 1, d)
    } else {
        0.0
    };
    Ok(SeriesValue {
        value: mud * acc,
        omitted_bound: mud * omitted,
    })
}

/// Partial sums of the moment series sum_j a_{alpha,j} int G_{2j} |y|^s dy,
/// by the exact multiplicative term recurrence. Used with
/// `series_moment_tail_bound` to certify convergence of the kernel moments.
pub fn series_moment_partial(alpha: f64, s: f64, d: usize, terms: u64) -> Result<f64> {
    let mut term = crate::special::binom_coeff(alpha, 1)? * crate::special::g_moment(1, s, d)?;
    let mut acc = term;
    for j in 1..terms {
        let jf = j as f64;
        term *= (jf - alpha / 2.0) / (jf + 1.0) * ((jf + s / 2.0) / jf);
        acc += term;
    }
    Ok(acc)
}

/// Integral-comparison bound on the omitted moment terms beyond `from`:
/// terms decay like j^{-1-(alpha-s)/2}, so the block beyond J is at most
/// C J^{-(alpha-s)/2} with C certified from the term at J itself.
pub fn series_moment_tail_bound(alpha: f64, s: f64, d: usize, from: u64) -> Result<f64> {
    if s >= alpha {
        return Err(Error::MomentDivergent { alpha, s });
    }
    let e = 1.0 + (alpha - s) / 2.0;
    let jf = from as f64;
    let term = crate::special::binom_coeff_gamma(alpha, from)?
        * crate::special::g_moment(from, s, d)?;
    // term_j * j^e increases toward its limit, so the value at `from` plus a
    // 5% margin dominates the sequence beyond it.
    let c = term * jf.powf(e) * 1.05;
    Ok(c * jf.powf(1.0 - e) / (e - 1.0))
}

/// Truncated-series symbol value sum_{j<=J} a_j w^j at w = 1/(1+u^2).
///
/// At w = 1 this is the exact closed-form partial sum 1 - tail(J). Otherwise
/// the terms a_j w^j decrease strictly, so the direct sum over the cached
/// coefficients breaks early once terms fall below roundoff; any mass beyond
/// the cache (huge J at small alpha, w extremely close to 1) is estimated by
/// quadrature against the coefficient power law, an error within the
/// certified tail.
fn truncated_symbol(spec: &SeriesKernelSpec, u: f64, cache_cap: u64) -> Result<f64> {
    if u == 0.0 {
        return Ok(1.0 - coeff_tail(spec.alpha, spec.truncation as f64)?);
    }
    let u2 = u * u;
    let ln_w = -u2.ln_1p();
    let j_total = spec.truncation;
    let w = 1.0 / (1.0 + u2);
    let cap = j_total.min(cache_cap).min(spec.coefficients.len() as u64);
    let mut acc = 0.0;
    let mut wp = 1.0;
    let mut exhausted = true;
    for j in 1..=cap {
        wp *= w;
        let term = spec.coefficients[(j - 1) as usize] * wp;
        acc += term;
        if term < 1e-19 * acc {
            exhausted = false;
            break;
        }
    }
    if exhausted && cap < j_total && (cap as f64) * ln_w > -45.0 {
        let e = 1.0 + spec.alpha / 2.0;
        let c = spec.coefficients[(cap - 1) as usize] * (cap as f64).powf(e);
        let (mid, _) = crate::quadrature::integrate_log_trapezoid(
            |x| c * x.powf(-e) * (x * ln_w).exp() * x,
            cap as f64,
            j_total as f64,
            600,
        );
        acc += mid;
    }
    Ok(acc)
}

/// Apply the truncated approximate identity spectrally: multiply the
/// transform by the exact symbol of the truncated kernel. The only
/// discrepancy against the complement symbol is the certified tail mass.
pub fn convolve_series(
    field: &SampledField,
    spec: &SeriesKernelSpec,
    mu: f64,
) -> Result<SampledField> {
    if !(mu > 0.0 && mu.is_finite()) {
        return Err(Error::InvalidMu(mu));
    }
    let grid = field.grid();
    let mut coeffs = forward(field);
    for (i, c) in coeffs.coefficients_mut().iter_mut().enumerate() {
        let u = grid.freq_norm(i) / mu;
        *c *= truncated_symbol(spec, u, COEFF_CACHE_CAP)?;
    }
    Ok(inverse(&coeffs))
}

// ---------------------------------------------------------------------------
// Kernel extraction and estimates
// ---------------------------------------------------------------------------

/// Smooth transition: 1 on t <= 1, 0 on t >= 2, C-infinity in between.
fn lp_transition(t: f64) -> f64 {
    if t <= 1.0 {
        1.0
    } else if t >= 2.0 {
        0.0
    } else {
        let e1 = (-1.0 / (2.0 - t)).exp();
        let e0 = (-1.0 / (t - 1.0)).exp();
        e1 / (e1 + e0)
    }
}

/// Radial Littlewood-Paley bump supported in 1/2 <= t <= 2; the dyadic
/// dilates phi(2^{-j} t) telescope to 1 for t > 0.
pub fn lp_bump(t: f64) -> f64 {
    lp_transition(t) - lp_transition(2.0 * t)
}

/// Radial bin of an extracted kernel: radius, mean value, within-bin spread.
#[derive(Debug, Clone, Copy)]
pub struct RadialBin {
    pub r: f64,
    pub value: f64,
    pub spread: f64,
    pub count: usize,
}

/// One dyadic frequency band of an extracted kernel.
#[derive(Debug, Clone)]
pub struct DyadicPiece {
    pub level: i32,
    pub field: SampledField,
}

/// Kernel of a symbol on a fine periodic grid: full-grid samples, radial
/// bins, and (optionally) the Littlewood-Paley band kernels.
#[derive(Debug, Clone)]
pub struct KernelProfile {
    pub symbol: SymbolSpec,
    pub grid: GridSpec,
    pub field: SampledField,
    pub value_at_zero: f64,
    pub bins: Vec<RadialBin>,
    pub dyadic: Option<Vec<DyadicPiece>>,
}

fn bin_radial(field: &SampledField) -> (f64, Vec<RadialBin>) {
    let grid = field.grid();
    let h = grid.spacing();
    // Exact-orbit bins: key on the integer squared radius sum (x_a/h)^2, so
    // a bin only ever mixes lattice points at identical true radius.
    let mut map: std::collections::BTreeMap<u64, (f64, f64, f64, usize)> =
        std::collections::BTreeMap::new();
    let mut at_zero = 0.0;
    for i in 0..grid.total_points() {
        let p = grid.point(i);
        let key: u64 = p[..grid.dim()]
            .iter()
            .map(|v| {
                let q = (v / h).round() as i64;
                (q * q) as u64
            })
            .sum();
        let v = field.values()[i].re;
        if key == 0 {
            at_zero = v;
            continue;
        }
        let e = map.entry(key).or_insert((0.0, f64::INFINITY, f64::NEG_INFINITY, 0));
        e.0 += v;
        e.1 = e.1.min(v);
        e.2 = e.2.max(v);
        e.3 += 1;
    }
    let bins = map
        .into_iter()
        .map(|(key, (sum, min, max, count))| RadialBin {
            r: (key as f64).sqrt() * h,
            value: sum / count as f64,
            spread: max - min,
            count,
        })
        .collect();
    (at_zero, bins)
}

/// Inverse-transform a bounded symbol on the lattice. With `dyadic` set, the
/// Littlewood-Paley band kernels covering every nonzero lattice frequency
/// are extracted as well.
pub fn extract_kernel(
    symbol: &SymbolSpec,
    grid: GridSpec,
    dyadic: bool,
) -> Result<KernelProfile> {
    if !symbol.bounded_at_zero() {
        return Err(Error::UnboundedSymbol);
    }
    let total = grid.total_points();
    let mut coeffs = vec![Complex64::new(0.0, 0.0); total];
    for (i, c) in coeffs.iter_mut().enumerate() {
        *c = Complex64::new(symbol.value(grid.freq_norm(i))?, 0.0);
    }
    let spec = crate::grid::SpectralField::from_coefficients(grid, coeffs.clone())?;
    let field = inverse(&spec);
    let (value_at_zero, bins) = bin_radial(&field);

    let dyadic = if dyadic {
        let step = grid.freq_step();
        let max_freq = grid.nyquist() * (grid.dim() as f64).sqrt();
        let j_min = step.log2().floor() as i32;
        let j_max = max_freq.log2().ceil() as i32;
        let mut pieces = Vec::new();
        for level in j_min..=j_max {
            let scale = 2.0f64.powi(-level);
            let band: Vec<Complex64> = coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * lp_bump(scale * grid.freq_norm(i)))
                .collect();
            let band = crate::grid::SpectralField::from_coefficients(grid, band)?;
            pieces.push(DyadicPiece {
                level,
                field: inverse(&band),
            });
        }
        Some(pieces)
    } else {
        None
    };

    Ok(KernelProfile {
        symbol: *symbol,
        grid,
        field,
        value_at_zero,
        bins,
        dyadic,
    })
}

impl KernelProfile {
    /// Max deviation of (sum of dyadic pieces + DC offset) from the kernel,
    /// relative to its sup. The DC lattice mode lies below every band, so it
    /// re-enters as the constant b(0)/L^d.
    pub fn dyadic_reconstruction_gap(&self) -> Option<f64> {
        let pieces = self.dyadic.as_ref()?;
        let dc = self.symbol.value(0.0).ok()?
            / self.grid.length().powi(self.grid.dim() as i32);
        let mut max_gap: f64 = 0.0;
        let mut max_val: f64 = 0.0;
        for i in 0..self.grid.total_points() {
            let sum: Complex64 = pieces.iter().map(|p| p.field.values()[i]).sum();
            let b = self.field.values()[i];
            max_gap = max_gap.max((b - sum - dc).norm());
            max_val = max_val.max(b.norm());
        }
        Some(max_gap / max_val)
    }

    /// CSV export: columns r, value, bin_spread.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,value,bin_spread\n");
        for b in &self.bins {
            out.push_str(&format!(
                "{:.14e},{:.14e},{:.14e}\n",
                b.r, b.value, b.spread
            ));
        }
        out
    }
}

/// Compensated decay report: Q(x) = |B(x)| |x|^d w(mu x) with the two-branch
/// weight of the kernel estimate, its sup and per-decade maxima over the
/// resolved range, and a far-field log-log slope when enough bins exist.
#[derive(Debug, Clone)]
pub struct DecayReport {
    pub sup_q: f64,
    /// (decade lower edge in mu|x|, max of Q over that decade)
    pub per_decade: Vec<(f64, f64)>,
    /// Least-squares slope of ln |B| vs ln |x| over 2 <= mu|x| <= 100.
    pub far_slope: Option<f64>,
}

/// Two-branch compensating weight from the kernel decay estimate.
pub fn decay_weight(alpha: f64, s: f64) -> f64 {
    if s > 1.0 {
        (2.0 * s).powf(alpha / 2.0)
    } else {
        (1.0 + s * s).powf(alpha / 2.0)
    }
}

pub fn decay_check(profile: &KernelProfile, alpha: f64, mu: f64) -> Result<DecayReport> {
    let grid = profile.grid;
    let h = grid.spacing();
    let r_max = grid.length() / 4.0;
    let usable: Vec<&RadialBin> = profile
        .bins
        .iter()
        .filter(|b| b.r >= 2.0 * h && b.r <= r_max)
        .collect();
    if usable.is_empty() {
        return Err(Error::InsufficientResolution {
            got: 0.0,
            need: 3.0,
        });
    }
    let s_lo = mu * usable.first().unwrap().r;
    let s_hi = mu * usable.last().unwrap().r;
    let decades = (s_hi / s_lo).log10();
    if decades < 3.0 || s_lo > 1.0 || s_hi < 2.0 {
        return Err(Error::InsufficientResolution {
            got: decades,
            need: 3.0,
        });
    }

    let mut sup_q: f64 = 0.0;
    let mut per_decade: Vec<(f64, f64)> = Vec::new();
    for b in &usable {
        let s = mu * b.r;
        let q = b.value.abs() * b.r.powi(grid.dim() as i32) * decay_weight(alpha, s);
        sup_q = sup_q.max(q);
        let edge = 10.0f64.powf(s.log10().floor());
        match per_decade.last_mut() {
            Some(last) if last.0 == edge => last.1 = last.1.max(q),
            _ => per_decade.push((edge, q)),
        }
    }

    // Far-field slope over 2 <= mu|x| <= 100.
    let pts: Vec<(f64, f64)> = usable
        .iter()
        .filter(|b| {
            let s = mu * b.r;
            (2.0..=100.0).contains(&s) && b.value.abs() > 0.0
        })
        .map(|b| (b.r.ln(), b.value.abs().ln()))
        .collect();
    let far_slope = if pts.len() >= 4 {
        Some(least_squares_slope(&pts))
    } else {
        None
    };

    Ok(DecayReport {
        sup_q,
        per_decade,
        far_slope,
    })
}

fn least_squares_slope(pts: &[(f64, f64)]) -> f64 {
    let n = pts.len() as f64;
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// One translation sample of the integrated kernel difference.
#[derive(Debug, Clone, Copy)]
pub struct HormanderSample {
    pub y: f64,
    pub integral: f64,
    pub bound: f64,
    pub ratio: f64,
}

#[derive(Debug, Clone)]
pub struct HormanderReport {
    pub samples: Vec<HormanderSample>,
    pub max_ratio: f64,
    /// Estimated contribution beyond the truncation radius L/4, from the
    /// last resolved kernel values (reported, not asserted).
    pub tail_estimate: f64,
}

/// Translation-difference bound of the kernel:
/// int_{2|y| <= |x| <= L/4} |B(x+y) - B(x)| dx against the two-branch
/// reference (2 mu |y|)^{-1/2} / (1 + (mu|y|)^2)^{-1/2}. Translations are
/// rounded to whole grid cells along the first axis.
pub fn hormander_check(
    symbol: &SymbolSpec,
    y_list: &[f64],
    grid: GridSpec,
) -> Result<HormanderReport> {
    let profile = extract_kernel(symbol, grid, false)?;
    let h = grid.spacing();
    let n = grid.n();
    let dim = grid.dim();
    let mu = symbol.mu;
    let values = profile.field.values();

    let mut samples = Vec::with_capacity(y_list.len());
    for &y in y_list {
        if y == 0.0 {
            samples.push(HormanderSample {
                y,
                integral: 0.0,
                bound: 1.0,
                ratio: 0.0,
            });
            continue;
        }
        let cells = (y / h).round() as i64;
        if cells.unsigned_abs() < 2 {
            return Err(Error::UnresolvableTranslation {
                got: y.abs(),
                min: 2.0 * h,
            });
        }
        let y_exact = cells as f64 * h;
        let mut acc = 0.0;
        for i in 0..grid.total_points() {
            let p = grid.point(i);
            let r = p[..dim].iter().map(|v| v * v).sum::<f64>().sqrt();
            if r < 2.0 * y_exact.abs() || r > grid.length() / 4.0 {
                continue;
            }
            // Shift along the first axis by whole cells (row-major layout:
            // axis 0 has stride n^{dim-1}).
            let stride = n.pow((dim - 1) as u32);
            let axis_idx = i / stride;
            let within = i % stride;
            let shifted_axis = (axis_idx as i64 + cells).rem_euclid(n as i64) as usize;
            let j = shifted_axis * stride + within;
            acc += (values[j] - values[i]).norm();
        }
        let integral = acc * h.powi(dim as i32);
        let s = (mu * y_exact).abs();
        let bound = if s > 1.0 {
            (2.0 * s).powf(-0.5)
        } else {
            (1.0 + s * s).powf(-0.5)
        };
        samples.push(HormanderSample {
            y: y_exact,
            integral,
            bound,
            ratio: integral / bound,
        });
    }
    let max_ratio = samples.iter().map(|s| s.ratio).fold(0.0, f64::max);

    // Tail estimate beyond L/4 from the outermost resolved decade.
    let tail_estimate = profile
        .bins
        .iter()
        .rev()
        .find(|b| b.r <= grid.length() / 4.0)
        .map(|b| 4.0 * b.value.abs() * b.r.powi(dim as i32))
        .unwrap_or(0.0);

    Ok(HormanderReport {
        samples,
        max_ratio,
        tail_estimate,
    })
}

/// Radial quadrature of the truncated series kernel over R^d. Returns the
/// quadrature value of int A over |y| <= r_max together with an estimate of
/// the power-law mass beyond the domain (from the outermost kernel value);
/// value + tail should sit within tail mass of 1.
pub fn series_kernel_mass(
    spec: &SeriesKernelSpec,
    mu: f64,
    d: usize,
    r_max_scaled: f64,
) -> Result<(f64, f64)> {
    let area = sphere_area(d);
    let r_max = r_max_scaled / mu;
    let val = crate::quadrature::integrate_geometric(
        |r| {
            let v = series_kernel_value(spec, mu, r, d).map(|sv| sv.value).unwrap_or(0.0);
            v * r.powi(d as i32 - 1) * area
        },
        1e-9,
        r_max,
        1e-3 / mu,
        1.25,
    );
    // Far field decays like r^{-d-alpha}: the remaining mass is close to
    // area * A(r_max) r_max^d / alpha.
    let edge = series_kernel_value(spec, mu, r_max, d)?.value;
    let tail = area * edge * r_max.powi(d as i32) / spec.alpha;
    Ok((val, tail))
}
