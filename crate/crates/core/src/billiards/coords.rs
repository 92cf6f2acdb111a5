//! Coordinate pullbacks for separable eigenfunctions.
//!
//! Polar, elliptic, and parabolic coordinates are all of the form
//! w(z) = s + i t with w holomorphic in z = x + i y. Given the jet of the
//! separated product u(s, t) and the first two derivatives of w, the
//! Cauchy-Riemann relations produce the Cartesian jet without any
//! shape-specific derivative bookkeeping.

use num_complex::Complex64;

use crate::geom::Jet2;

/// Jet of u in separable coordinates (s, t).
#[derive(Clone, Copy, Debug)]
pub struct SepJet {
    pub v: f64,
    pub us: f64,
    pub ut: f64,
    pub uss: f64,
    pub ust: f64,
    pub utt: f64,
}

/// Pull the separable jet back to Cartesian coordinates.
///
/// `wp` and `wpp` are w'(z) and w''(z) at the point.
pub fn pullback(u: SepJet, wp: Complex64, wpp: Complex64) -> Jet2<f64> {
    let (sx, tx) = (wp.re, wp.im);
    let (sy, ty) = (-wp.im, wp.re);
    // d/dy w' = i w''  =>  s_xy = -Im w'', etc.
    let (sxx, txx) = (wpp.re, wpp.im);
    let (sxy, txy) = (-wpp.im, wpp.re);
    let (syy, tyy) = (-wpp.re, -wpp.im);
    let dx = u.us * sx + u.ut * tx;
    let dy = u.us * sy + u.ut * ty;
    let dxx = u.uss * sx * sx + 2.0 * u.ust * sx * tx + u.utt * tx * tx + u.us * sxx + u.ut * txx;
    let dxy = u.uss * sx * sy
        + u.ust * (sx * ty + sy * tx)
        + u.utt * tx * ty
        + u.us * sxy
        + u.ut * txy;
    let dyy = u.uss * sy * sy + 2.0 * u.ust * sy * ty + u.utt * ty * ty + u.us * syy + u.ut * tyy;
    Jet2::new(u.v, dx, dy, dxx, dxy, dyy)
}

/// Elliptic coordinates: z = f cosh(w) with s = xi >= 0, t = eta.
pub fn elliptic_w(z: Complex64, f: f64) -> (Complex64, Complex64, Complex64) {
    let u = z / f;
    // acosh with the branch Re w >= 0.
    let root = (u - 1.0).sqrt() * (u + 1.0).sqrt();
    let mut w = (u + root).ln();
    if w.re < 0.0 {
        w = -w;
    }
    let sh = w.sinh();
    let wp = 1.0 / (f * sh);
    let wpp = -w.cosh() / (f * f * sh * sh * sh);
    (w, wp, wpp)
}

/// Parabolic coordinates: z = i zeta^2 / 2 with zeta = tau - i sigma,
/// sigma >= 0. Returns (zeta, zeta', zeta'').
pub fn parabolic_zeta(z: Complex64) -> (Complex64, Complex64, Complex64) {
    let mut zeta = (Complex64::new(0.0, -2.0) * z).sqrt();
    if zeta.im > 0.0 {
        zeta = -zeta;
    }
    let zp = Complex64::new(0.0, -1.0) / zeta;
    let zpp = 1.0 / (zeta * zeta * zeta);
    (zeta, zp, zpp)
}

/// Polar coordinates through w = ln z: s = ln r, t = theta.
pub fn polar_w(z: Complex64) -> (Complex64, Complex64, Complex64) {
    let w = z.ln();
    let wp = 1.0 / z;
    let wpp = -1.0 / (z * z);
    (w, wp, wpp)
}

/// Piecewise-linear arclength parametrization of a closed boundary curve.
pub struct ArcTable {
    pts: Vec<(f64, f64)>,
    cum: Vec<f64>,
    total: f64,
}

impl ArcTable {
    /// Build from a parametric closed curve gamma(t), t in [0, 1).
    pub fn build(gamma: &dyn Fn(f64) -> (f64, f64), samples: usize) -> Self {
        let mut pts = Vec::with_capacity(samples + 1);
        for i in 0..=samples {
            pts.push(gamma(i as f64 / samples as f64));
        }
        let mut cum = Vec::with_capacity(samples + 1);
        let mut acc = 0.0;
        cum.push(0.0);
        for i in 1..pts.len() {
            let (dx, dy) = (pts[i].0 - pts[i - 1].0, pts[i].1 - pts[i - 1].1);
            acc += (dx * dx + dy * dy).sqrt();
            cum.push(acc);
        }
        Self { pts, cum, total: acc }
    }

    pub fn length(&self) -> f64 {
        self.total
    }

    /// Point and unit tangent at arclength s (wrapped to [0, total)).
    pub fn at(&self, s: f64) -> ((f64, f64), (f64, f64)) {
        let s = s.rem_euclid(self.total.max(1e-300));
        // binary search the cumulative table
        let mut lo = 0usize;
        let mut hi = self.cum.len() - 1;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if self.cum[mid] <= s {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let seg = (self.cum[hi] - self.cum[lo]).max(1e-300);
        let f = (s - self.cum[lo]) / seg;
        let (p0, p1) = (self.pts[lo], self.pts[hi]);
        let t = ((p1.0 - p0.0) / seg, (p1.1 - p0.1) / seg);
        ((p0.0 + f * (p1.0 - p0.0), p0.1 + f * (p1.1 - p0.1)), t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_round_trip() {
        let f = 0.8;
        let w0 = Complex64::new(0.6, 1.1);
        let z = f * w0.cosh();
        let (w, wp, _) = elliptic_w(z, f);
        assert!((w - w0).norm() < 1e-12);
        // derivative check against finite differences
        let h = 1e-7;
        let (w_dx, _, _) = elliptic_w(z + h, f);
        assert!(((w_dx - w) / h - wp).norm() < 1e-5);
    }

    #[test]
    fn parabolic_round_trip() {
        let (tau, sigma) = (0.7, 0.4);
        let z = Complex64::new(tau * sigma, 0.5 * (tau * tau - sigma * sigma));
        let (zeta, _, _) = parabolic_zeta(z);
        assert!((zeta.re - tau).abs() < 1e-12);
        assert!((-zeta.im - sigma).abs() < 1e-12);
    }

    #[test]
    fn arc_table_circle() {
        let gamma = |t: f64| {
            let a = 2.0 * std::f64::consts::PI * t;
            (a.cos(), a.sin())
        };
        let table = ArcTable::build(&gamma, 4096);
        assert!((table.length() - 2.0 * std::f64::consts::PI).abs() < 1e-4);
        let ((x, y), (tx, ty)) = table.at(std::f64::consts::PI);
        assert!((x + 1.0).abs() < 1e-3 && y.abs() < 1e-3);
        // tangent at the far side points in -y
        assert!(tx.abs() < 1e-2 && (ty + 1.0).abs() < 1e-2);
    }
}
