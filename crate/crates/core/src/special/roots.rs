//! One-dimensional root finding: bisection and safeguarded Newton.

/// Bisect a bracketed sign change to relative tolerance `rtol`.
pub fn bisect(f: &dyn Fn(f64) -> f64, mut a: f64, mut b: f64, rtol: f64, max_iter: usize) -> f64 {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    assert!(fa * fb < 0.0, "bisect: no sign change on [{a}, {b}]");
    for _ in 0..max_iter {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 || (b - a).abs() <= rtol * m.abs().max(1.0) {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Newton iteration confined to a bracket; falls back to bisection steps
/// whenever Newton would leave the interval or stalls.
pub fn newton_bisect(
    f: &dyn Fn(f64) -> f64,
    fprime: &dyn Fn(f64) -> f64,
    mut a: f64,
    mut b: f64,
    rtol: f64,
    max_iter: usize,
) -> f64 {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return a;
    }
    if fb == 0.0 {
        return b;
    }
    assert!(fa * fb < 0.0, "newton_bisect: no sign change on [{a}, {b}]");
    let mut x = 0.5 * (a + b);
    for _ in 0..max_iter {
        let fx = f(x);
        if fx == 0.0 {
            return x;
        }
        if fa * fx < 0.0 {
            b = x;
        } else {
            a = x;
            fa = fx;
        }
        if (b - a).abs() <= rtol * x.abs().max(1.0) {
            return 0.5 * (a + b);
        }
        let d = fprime(x);
        let newton = if d != 0.0 { x - fx / d } else { f64::NAN };
        x = if newton.is_finite() && newton > a && newton < b {
            newton
        } else {
            0.5 * (a + b)
        };
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_cosine_root() {
        let f = |x: f64| x.cos();
        let fp = |x: f64| -x.sin();
        let r = newton_bisect(&f, &fp, 1.0, 2.0, 1e-14, 100);
        assert!((r - std::f64::consts::FRAC_PI_2).abs() < 1e-13);
        let r2 = bisect(&f, 1.0, 2.0, 1e-12, 200);
        assert!((r2 - std::f64::consts::FRAC_PI_2).abs() < 1e-11);
    }
}
