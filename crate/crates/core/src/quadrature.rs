//! Small quadrature toolkit used by the special-function oracles and the
//! radial kernel integrals: Gauss–Legendre panels on [a, b] and a geometric
//! panel subdivision for integrands with an origin singularity or a long tail.

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
///
/// Newton iteration on the Legendre recurrence; accurate to machine
/// precision for the small n used here.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Chebyshev-based starting guess.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            // Legendre P_n(x) and its derivative by upward recurrence.
            let mut p0 = 1.0;
            let mut p1 = x;
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = (n as f64) * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Integrate `f` over [a, b] with a fixed Gauss–Legendre rule.
pub fn integrate_gl<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(n);
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = 0.0;
    for (x, w) in nodes.iter().zip(&weights) {
        acc += w * f(mid + half * x);
    }
    acc * half
}

/// Integrate `f` over [a, b] on geometrically growing panels, each handled by
/// a 32-point Gauss–Legendre rule. `first` is the width of the panel at `a`;
/// panels grow by `ratio` until they cover [a, b].
pub fn integrate_geometric<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    first: f64,
    ratio: f64,
) -> f64 {
    assert!(b > a && first > 0.0 && ratio > 1.0);
    let (nodes, weights) = gauss_legendre(32);
    let mut acc = 0.0;
    let mut lo = a;
    let mut width = first;
    while lo < b {
        let hi = (lo + width).min(b);
        let mid = 0.5 * (lo + hi);
        let half = 0.5 * (hi - lo);
        for (x, w) in nodes.iter().zip(&weights) {
            acc += w * f(mid + half * x) * half;
        }
        lo = hi;
        width *= ratio;
    }
    acc
}

/// Trapezoid rule on a logarithmic grid for integrals of the form
/// `int_a^b f(x) dx/x`. Returns the value together with the contribution of
/// each consecutive decade (used for truncation-defect reporting).
pub fn integrate_log_trapezoid<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    points_per_decade: usize,
) -> (f64, Vec<f64>) {
    assert!(b > a && a > 0.0 && points_per_decade >= 2);
    let decades = (b / a).log10();
    let n = ((decades * points_per_decade as f64).ceil() as usize).max(2);
    let step = (b / a).ln() / n as f64;
    let mut acc = 0.0;
    let mut decade_acc = vec![0.0; decades.ceil() as usize + 1];
    let mut prev = f(a);
    for k in 1..=n {
        let x = a * ((k as f64) * step).exp();
        let cur = f(x);
        let piece = 0.5 * (prev + cur) * step;
        acc += piece;
        let dec = ((x / a).log10().ceil() as usize).min(decade_acc.len() - 1);
        decade_acc[dec] += piece;
        prev = cur;
    }
    (acc, decade_acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_exact_on_polynomials() {
        // 8-point rule integrates degree-15 polynomials exactly.
        let val = integrate_gl(|x| x.powi(14), -1.0, 1.0, 8);
        assert!((val - 2.0 / 15.0).abs() < 1e-14);
    }

    #[test]
    fn geometric_panels_handle_exponential_tail() {
        let val = integrate_geometric(|x| (-x).exp(), 0.0, 60.0, 0.25, 1.3);
        assert!((val - 1.0).abs() < 1e-12);
    }

    #[test]
    fn log_trapezoid_power_law() {
        // int_1^100 x^{-1} dx/x = 1 - 1/100.
        let (val, decades) = integrate_log_trapezoid(|x| 1.0 / x, 1.0, 100.0, 400);
        assert!((val - 0.99).abs() < 1e-5);
        assert_eq!(decades.len(), 3);
    }
}
