//! Bessel functions of the first and second kind, modified K0, and zeros.
//!
//! Integer orders use Miller's backward recurrence with the summation
//! normalization, which is accurate over the whole argument range used here.
//! Y0/Y1 use the power series below x = 12 and the Hankel asymptotic
//! expansion above; higher orders follow from the (stable) upward recurrence.

use super::gamma::ln_gamma;
use super::roots::newton_bisect;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// J_n(x) for all integer orders via Miller's algorithm.
pub fn bessel_jn(n: i64, x: f64) -> f64 {
    if n < 0 {
        let v = bessel_jn(-n, x);
        return if n % 2 == 0 { v } else { -v };
    }
    let n = n as usize;
    if x == 0.0 {
        return if n == 0 { 1.0 } else { 0.0 };
    }
    if x < 0.0 {
        let v = bessel_jn(n as i64, -x);
        return if n % 2 == 0 { v } else { -v };
    }
    // Start high enough that the downward recurrence has converged by order n.
    let nstart = {
        let base = n.max(x.ceil() as usize);
        let m = base + 16 + (base as f64).sqrt() as usize * 2;
        m + (m & 1) // even
    };
    let mut jp = 0.0_f64; // J_{k+2} at loop entry
    let mut j = 1e-300_f64; // J_{k+1} at loop entry (arbitrary scale)
    let mut norm = 0.0_f64; // accumulates J_0 + 2 sum_{k even >= 2} J_k
    let mut result = 0.0_f64;
    for k in (0..=nstart).rev() {
        let jm = (2.0 * (k as f64 + 1.0) / x) * j - jp;
        jp = j;
        j = jm; // j = J_k now
        // Rescale to dodge overflow of the unnormalized recurrence.
        if j.abs() > 1e250 {
            j *= 1e-250;
            jp *= 1e-250;
            norm *= 1e-250;
            result *= 1e-250;
        }
        if k > 0 && k % 2 == 0 {
            norm += 2.0 * j;
        }
        if k == n {
            result = j;
        }
    }
    norm += j; // j = J_0
    result / norm
}

/// J_0 (order zero), convenience wrapper.
pub fn bessel_j(x: f64) -> f64 {
    bessel_jn(0, x)
}

/// J_nu for real order nu >= 0 by the ascending power series.
///
/// Intended for moderate arguments (x <~ 25), which covers sector billiards
/// at desk scale; accuracy degrades by the usual series cancellation beyond.
pub fn bessel_j_nu(nu: f64, x: f64) -> f64 {
    assert!(nu >= 0.0 && x >= 0.0);
    if x == 0.0 {
        return if nu == 0.0 { 1.0 } else { 0.0 };
    }
    let half = 0.5 * x;
    let mut term = (nu * half.ln() - ln_gamma(nu + 1.0)).exp();
    let q = half * half;
    let mut sum = term;
    for k in 1..200 {
        let kf = k as f64;
        term *= -q / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-17 * sum.abs().max(1e-30) {
            break;
        }
    }
    sum
}

/// d/dx J_nu(x) from the recurrence J' = J_{nu-1} - (nu/x) J_nu.
pub fn bessel_j_nu_prime(nu: f64, x: f64) -> f64 {
    if nu == 0.0 {
        return -bessel_j_nu_any(1.0, x);
    }
    bessel_j_nu_any(nu - 1.0, x) - (nu / x) * bessel_j_nu_any(nu, x)
}

/// Dispatch: integer orders go through Miller, fractional through the series.
pub fn bessel_j_nu_any(nu: f64, x: f64) -> f64 {
    if nu >= 0.0 && nu.fract() == 0.0 && nu < 1e6 {
        bessel_jn(nu as i64, x)
    } else {
        bessel_j_nu(nu, x)
    }
}

fn hankel_pq(nu: f64, x: f64) -> (f64, f64) {
    // P and Q of the Hankel asymptotic expansion, truncated at the smallest term.
    let mu = 4.0 * nu * nu;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut term = 1.0_f64;
    let mut prev = f64::INFINITY;
    for k in 1..40 {
        let kf = k as f64;
        term *= (mu - (2.0 * kf - 1.0) * (2.0 * kf - 1.0)) / (kf * 8.0 * x);
        if term.abs() >= prev {
            break;
        }
        prev = term.abs();
        match k % 4 {
            1 => q += term,
            2 => p -= term,
            3 => q -= term,
            _ => p += term,
        }
        if term.abs() < 1e-17 {
            break;
        }
    }
    (p, q)
}

fn y0_series(x: f64) -> f64 {
    let j0 = bessel_jn(0, x);
    let q = 0.25 * x * x;
    let mut term = 1.0_f64;
    let mut h = 0.0_f64;
    let mut sum = 0.0_f64;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        h += 1.0 / kf;
        let t = if k % 2 == 1 { term * h } else { -term * h };
        sum += t;
        if term * h < 1e-17 * sum.abs().max(1.0) {
            break;
        }
    }
    (2.0 / std::f64::consts::PI) * (((0.5 * x).ln() + EULER_GAMMA) * j0 + sum)
}

fn y1_series(x: f64) -> f64 {
    let pi = std::f64::consts::PI;
    let j1 = bessel_jn(1, x);
    let q = 0.25 * x * x;
    // sum over k of (-1)^k [psi(k+1) + psi(k+2)] q^k / (k! (k+1)!)
    let mut term = 1.0_f64; // q^k / (k!(k+1)!)
    let mut psi_sum = -2.0 * EULER_GAMMA + 1.0; // psi(1) + psi(2)
    let mut sum = term * psi_sum;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * (kf + 1.0));
        psi_sum += 1.0 / kf + 1.0 / (kf + 1.0);
        let t = if k % 2 == 0 { term * psi_sum } else { -term * psi_sum };
        sum += t;
        if (term * psi_sum).abs() < 1e-17 * sum.abs().max(1.0) {
            break;
        }
    }
    (2.0 / pi) * (0.5 * x).ln() * j1 - 2.0 / (pi * x) - (0.25 * x / pi) * sum * 2.0
}

/// Y_n(x) for integer n >= 0, x > 0.
pub fn bessel_y(n: i64, x: f64) -> f64 {
    assert!(x > 0.0, "Y_n domain");
    assert!(n >= 0);
    let pi = std::f64::consts::PI;
    let (y0, y1) = if x <= 12.0 {
        (y0_series(x), y1_series(x))
    } else {
        let sq = (2.0 / (pi * x)).sqrt();
        let (p0, q0) = hankel_pq(0.0, x);
        let (p1, q1) = hankel_pq(1.0, x);
        let c0 = x - 0.25 * pi;
        let c1 = x - 0.75 * pi;
        (
            sq * (p0 * c0.sin() + q0 * c0.cos()),
            sq * (p1 * c1.sin() + q1 * c1.cos()),
        )
    };
    match n {
        0 => y0,
        1 => y1,
        _ => {
            let mut ym = y0;
            let mut y = y1;
            for k in 1..n {
                let yn = (2.0 * k as f64 / x) * y - ym;
                ym = y;
                y = yn;
            }
            y
        }
    }
}

/// Modified Bessel K_0(x) for x > 0 (series below 9, asymptotic above).
pub fn bessel_k0(x: f64) -> f64 {
    assert!(x > 0.0);
    if x <= 9.0 {
        // I0 series and the companion log series.
        let q = 0.25 * x * x;
        let mut term = 1.0_f64;
        let mut i0 = 1.0_f64;
        let mut h = 0.0_f64;
        let mut sum = 0.0_f64;
        for k in 1..80 {
            let kf = k as f64;
            term *= q / (kf * kf);
            h += 1.0 / kf;
            i0 += term;
            sum += term * h;
            if term < 1e-18 * i0 {
                break;
            }
        }
        -((0.5 * x).ln() + EULER_GAMMA) * i0 + sum
    } else {
        let mut term = 1.0_f64;
        let mut sum = 1.0_f64;
        for k in 1..20 {
            let kf = k as f64;
            term *= -(2.0 * kf - 1.0) * (2.0 * kf - 1.0) / (8.0 * x * kf);
            sum += term;
            if term.abs() < 1e-17 {
                break;
            }
        }
        (std::f64::consts::PI / (2.0 * x)).sqrt() * (-x).exp() * sum
    }
}

/// n-th positive zero of J_nu (n >= 1), to ~1e-12 relative accuracy.
///
/// Zeros are located by a forward bracket scan of the (series/Miller
/// evaluated) function followed by safeguarded Newton iteration.
pub fn bessel_zero_j(nu: f64, n: usize) -> f64 {
    assert!(n >= 1);
    let f = |x: f64| bessel_j_nu_any(nu, x);
    let fp = |x: f64| bessel_j_nu_prime(nu, x);
    let mut found = 0;
    // First zero is above nu; scan in sub-pi steps so none is skipped.
    let mut x = (nu + 1e-3).max(1e-3);
    let step = 0.5;
    let mut prev = f(x);
    loop {
        let xn = x + step;
        let cur = f(xn);
        if prev == 0.0 {
            found += 1;
            if found == n {
                return x;
            }
        } else if prev * cur < 0.0 {
            found += 1;
            if found == n {
                return newton_bisect(&f, &fp, x, xn, 1e-13, 100);
            }
        }
        prev = cur;
        x = xn;
        assert!(
            x < nu + 4.0 * (n as f64 + 2.0) * std::f64::consts::PI + 50.0,
            "zero scan ran away (nu = {nu}, n = {n})"
        );
    }
}

/// n-th positive zero (in k) of the annular cross product
/// J_m(k r_in) Y_m(k r_out) - J_m(k r_out) Y_m(k r_in).
pub fn cross_product_zero(m: i64, r_in: f64, r_out: f64, n: usize) -> f64 {
    assert!(n >= 1 && r_in > 0.0 && r_out > r_in);
    let f = |k: f64| {
        bessel_jn(m, k * r_out) * bessel_y(m, k * r_in)
            - bessel_jn(m, k * r_in) * bessel_y(m, k * r_out)
    };
    // Asymptotic spacing of the zeros is pi / (r_out - r_in).
    let spacing = std::f64::consts::PI / (r_out - r_in);
    let mut found = 0;
    let mut x = 1e-6_f64.max(0.05 * spacing);
    let step = 0.2 * spacing;
    let mut prev = f(x);
    loop {
        let xn = x + step;
        let cur = f(xn);
        if prev * cur < 0.0 {
            found += 1;
            if found == n {
                return super::roots::bisect(&f, x, xn, 1e-13, 200);
            }
        }
        prev = cur;
        x = xn;
        assert!(
            x < spacing * (n as f64 + m as f64 + 20.0) * 4.0,
            "cross-product scan ran away"
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_reference_values() {
        // Independent reference points (Abramowitz & Stegun tabulation).
        assert!((bessel_j(0.0) - 1.0).abs() < 1e-15);
        assert!((bessel_j(1.0) - 0.765_197_686_557_966_6).abs() < 1e-13);
        assert!((bessel_j(10.0) - (-0.245_935_764_451_348_3)).abs() < 1e-13);
        assert!((bessel_jn(1, 2.0) - 0.576_724_807_756_873_4).abs() < 1e-13);
        assert!((bessel_jn(5, 12.0) - (-0.073_470_963_101_702_27)).abs() < 1e-12);
    }

    #[test]
    fn jn_large_argument() {
        // J0(50) known to full double precision.
        assert!((bessel_j(50.0) - 0.055_812_327_669_251_74).abs() < 1e-12);
    }

    #[test]
    fn j_nu_series_matches_integer_miller() {
        for &x in &[0.3, 1.7, 6.2, 14.0] {
            for n in 0..6 {
                let a = bessel_jn(n, x);
                let b = bessel_j_nu(n as f64, x);
                assert!((a - b).abs() < 2e-11, "n={n} x={x}: {a} vs {b}");
            }
        }
    }

    #[test]
    fn y_reference_values() {
        assert!((bessel_y(0, 1.0) - 0.088_256_964_215_676_96).abs() < 1e-12);
        assert!((bessel_y(1, 1.0) - (-0.781_212_821_300_288_7)).abs() < 1e-12);
        assert!((bessel_y(0, 14.0) - 0.127_192_568_582_183_56).abs() < 1e-11);
        assert!((bessel_y(2, 3.0) - (-0.160_400_393_484_924_0)).abs() < 1e-11);
    }

    #[test]
    fn k0_reference_values() {
        assert!((bessel_k0(1.0) - 0.421_024_438_240_708_3).abs() < 1e-12);
        let k10 = 1.778_006_231_616_765e-5;
        assert!((bessel_k0(10.0) - k10).abs() < 1e-8 * k10);
    }

    #[test]
    fn first_zeros_against_bracketing_scan() {
        // Oracle: naive fine-step bracketing of the series evaluation.
        let brute = |nu: f64, n: usize| {
            let mut x = nu + 1e-4;
            let mut prev = bessel_j_nu_any(nu, x);
            let mut found = 0;
            loop {
                x += 1e-3;
                let cur = bessel_j_nu_any(nu, x);
                if prev * cur < 0.0 {
                    found += 1;
                    if found == n {
                        return x;
                    }
                }
                prev = cur;
            }
        };
        for (nu, n) in [(0.0, 1), (0.0, 3), (1.0, 2), (2.5, 1)] {
            let z = bessel_zero_j(nu, n);
            assert!((z - brute(nu, n)).abs() < 2e-3);
            assert!(bessel_j_nu_any(nu, z).abs() < 1e-10);
        }
        // Canonical values.
        assert!((bessel_zero_j(0.0, 1) - 2.404_825_557_695_773).abs() < 1e-10);
        assert!((bessel_zero_j(1.0, 1) - 3.831_705_970_207_512).abs() < 1e-10);
    }

    #[test]
    fn cross_product_zero_vanishes_at_both_radii() {
        let (ri, ro) = (0.5, 1.3);
        for n in 1..4 {
            let k = cross_product_zero(2, ri, ro, n);
            let radial = |r: f64| {
                bessel_jn(2, k * r) * bessel_y(2, k * ri)
                    - bessel_jn(2, k * ri) * bessel_y(2, k * r)
            };
            assert!(radial(ri).abs() < 1e-12);
            assert!(radial(ro).abs() < 1e-9);
        }
    }
}
