//! Browser bindings for the quotient-operator explorers. Three operations,
//! each returning flat interleaved arrays that the static page plots on a
//! canvas: multiplier curves, radial kernel decay, and the error-vs-modulus
//! equivalence experiment.
//!
//! The `*_impl` functions hold the logic and stay host-testable; the
//! `#[wasm_bindgen]` wrappers only translate errors at the boundary.

use wasm_bindgen::prelude::*;

use bessel_riesz::approx::{equivalence_curve, geometric_grid, TestFunction};
use bessel_riesz::grid::make_grid;
use bessel_riesz::kernels::extract_kernel;
use bessel_riesz::symbols::SymbolSpec;

fn symbol_spec(kind: &str, alpha: f64, mu: f64) -> Result<SymbolSpec, String> {
    match kind {
        "quotient" => SymbolSpec::quotient(alpha, mu),
        "complement" => SymbolSpec::complement(alpha, mu),
        "bessel" => SymbolSpec::bessel_potential(alpha, mu),
        "riesz" => SymbolSpec::riesz_potential(alpha),
        "remainder" => SymbolSpec::remainder(mu),
        other => {
            return Err(format!(
                "unknown symbol kind '{other}' (quotient, complement, bessel, riesz, remainder)"
            ))
        }
    }
    .map_err(|e| e.to_string())
}

fn symbol_curve_impl(
    kind: &str,
    alpha: f64,
    mu: f64,
    xi_max: f64,
    points: usize,
) -> Result<Vec<f64>, String> {
    if xi_max <= 0.0 || !xi_max.is_finite() || points < 2 {
        return Err("need xi_max > 0 and at least 2 points".into());
    }
    let spec = symbol_spec(kind, alpha, mu)?;
    let mut out = Vec::with_capacity(2 * points);
    for k in 1..=points {
        let xi = xi_max * k as f64 / points as f64;
        out.push(xi);
        out.push(spec.value(xi).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn kernel_profile_impl(
    kind: &str,
    alpha: f64,
    mu: f64,
    log2_n: u32,
    length: f64,
) -> Result<Vec<f64>, String> {
    if !(8..=18).contains(&log2_n) {
        return Err("log2_n must lie in 8..=18".into());
    }
    let grid = make_grid(1, 1 << log2_n, length).map_err(|e| e.to_string())?;
    let spec = symbol_spec(kind, alpha, mu)?;
    let profile = extract_kernel(&spec, grid, false).map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(2 * profile.bins.len());
    for bin in &profile.bins {
        if bin.r <= length / 4.0 {
            out.push(bin.r);
            out.push(bin.value.abs());
        }
    }
    Ok(out)
}

fn equivalence_points_impl(
    function: &str,
    alpha: f64,
    p: f64,
    mu_lo: f64,
    mu_hi: f64,
    log2_n: u32,
    length: f64,
) -> Result<Vec<f64>, String> {
    if !(8..=18).contains(&log2_n) {
        return Err("log2_n must lie in 8..=18".into());
    }
    if !(mu_lo >= 2.0 && mu_hi > mu_lo) {
        return Err("need 2 <= mu_lo < mu_hi".into());
    }
    let kind = match function {
        "gaussian" => TestFunction::gaussian(),
        "indicator" => TestFunction::indicator_unit(),
        "tent" => TestFunction::tent_unit(),
        "band" => TestFunction::RandomBandLimited {
            seed: 7,
            cutoff: 10.0,
        },
        other => {
            return Err(format!(
                "unknown function '{other}' (gaussian, indicator, tent, band)"
            ))
        }
    };
    let grid = make_grid(1, 1 << log2_n, length).map_err(|e| e.to_string())?;
    let field = kind.sample(grid).map_err(|e| e.to_string())?;
    let mu = geometric_grid(mu_lo, mu_hi, 2.0f64.sqrt());
    let curve = equivalence_curve(&field, alpha, p, &mu).map_err(|e| e.to_string())?;
    let err = curve.series("err").map_err(|e| e.to_string())?;
    let omega = curve.series("omega").map_err(|e| e.to_string())?;
    let ratio = curve.series("ratio").map_err(|e| e.to_string())?;
    let mut out = Vec::with_capacity(4 * mu.len());
    for i in 0..mu.len() {
        out.push(curve.mu()[i]);
        out.push(err[i]);
        out.push(omega[i]);
        out.push(ratio[i]);
    }
    Ok(out)
}

/// Radial multiplier values, interleaved [xi, b(xi), ...] on a uniform grid
/// of `points` frequencies in (0, xi_max].
#[wasm_bindgen]
pub fn symbol_curve(
    kind: &str,
    alpha: f64,
    mu: f64,
    xi_max: f64,
    points: usize,
) -> Result<Vec<f64>, JsError> {
    symbol_curve_impl(kind, alpha, mu, xi_max, points).map_err(|e| JsError::new(&e))
}

/// Radial kernel profile of a symbol, interleaved [r, |B(r)|, ...] over the
/// resolved radii of a 1-d extraction grid with 2^log2_n points.
#[wasm_bindgen]
pub fn kernel_profile(
    kind: &str,
    alpha: f64,
    mu: f64,
    log2_n: u32,
    length: f64,
) -> Result<Vec<f64>, JsError> {
    kernel_profile_impl(kind, alpha, mu, log2_n, length).map_err(|e| JsError::new(&e))
}

/// Equivalence experiment rows [mu, err, omega, err/omega, ...] for a named
/// test field over a geometric mu grid.
#[wasm_bindgen]
pub fn equivalence_points(
    function: &str,
    alpha: f64,
    p: f64,
    mu_lo: f64,
    mu_hi: f64,
    log2_n: u32,
    length: f64,
) -> Result<Vec<f64>, JsError> {
    equivalence_points_impl(function, alpha, p, mu_lo, mu_hi, log2_n, length)
        .map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symbol_curve_layout() {
        let pts = symbol_curve_impl("quotient", 1.0, 4.0, 16.0, 32).unwrap();
        assert_eq!(pts.len(), 64);
        // |xi| = mu gives 1/sqrt(2).
        let near = pts
            .chunks(2)
            .min_by(|a, b| (a[0] - 4.0).abs().partial_cmp(&(b[0] - 4.0).abs()).unwrap())
            .unwrap();
        assert!((near[1] - 1.0 / 2.0f64.sqrt()).abs() < 0.01);
        assert!(symbol_curve_impl("nope", 1.0, 4.0, 16.0, 32).is_err());
        assert!(symbol_curve_impl("quotient", 1.0, 4.0, -1.0, 32).is_err());
    }

    #[test]
    fn kernel_profile_decays() {
        let pts = kernel_profile_impl("quotient", 1.0, 8.0, 12, 64.0).unwrap();
        assert!(pts.len() > 100);
        let v_near = pts[1];
        let v_far = pts[pts.len() - 1];
        assert!(v_near > v_far);
        assert!(kernel_profile_impl("quotient", 1.0, 8.0, 25, 64.0).is_err());
    }

    #[test]
    fn equivalence_points_ratio_bounded() {
        let rows = equivalence_points_impl("gaussian", 1.0, 2.0, 2.0, 32.0, 12, 64.0).unwrap();
        assert_eq!(rows.len() % 4, 0);
        for chunk in rows.chunks(4) {
            assert!(chunk[3] > 0.01 && chunk[3] < 10.0);
        }
        assert!(equivalence_points_impl("mystery", 1.0, 2.0, 2.0, 32.0, 12, 64.0).is_err());
    }
}
