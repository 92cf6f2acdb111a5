//! Shared kernels for the nonseparable-coordinate eigenproblems: symmetric
//! tridiagonal eigenvalues (Mathieu angular problem) and dense-output RK4
//! integration of y'' = g(t) y (modified-Mathieu and Weber radial parts).

/// Number of eigenvalues of the symmetric tridiagonal (diag, off) strictly
/// below x, by the Sturm pivot count.
pub fn tridiag_count_below(diag: &[f64], off: &[f64], x: f64) -> usize {
    let n = diag.len();
    let mut count = 0;
    let mut d = diag[0] - x;
    if d < 0.0 {
        count += 1;
    }
    for i in 1..n {
        let e = off[i - 1];
        let denom = if d.abs() < 1e-300 { 1e-300_f64.copysign(d) } else { d };
        d = diag[i] - x - e * e / denom;
        if d < 0.0 {
            count += 1;
        }
    }
    count
}

/// k-th eigenvalue (0-based, ascending) of the symmetric tridiagonal matrix.
pub fn tridiag_eigenvalue(diag: &[f64], off: &[f64], k: usize) -> f64 {
    // Gershgorin bounds
    let n = diag.len();
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = (if i > 0 { off[i - 1].abs() } else { 0.0 })
            + (if i < n - 1 { off[i].abs() } else { 0.0 });
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let mut lo = lo - 1.0;
    let mut hi = hi + 1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if tridiag_count_below(diag, off, mid) <= k {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-13 * (1.0 + mid.abs()) {
            break;
        }
    }
    0.5 * (lo + hi)
}

/// Eigenvector for a known eigenvalue by two rounds of inverse iteration.
pub fn tridiag_eigenvector(diag: &[f64], off: &[f64], lambda: f64) -> Vec<f64> {
    let n = diag.len();
    let mut v: Vec<f64> = (0..n)
        .map(|i| 0.7 + 0.3 * ((i * 2654435761) % 97) as f64 / 97.0)
        .collect();
    for _ in 0..3 {
        v = solve_shifted(diag, off, lambda + 1e-11 * (1.0 + lambda.abs()), &v);
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in &mut v {
            *x /= norm;
        }
    }
    // fix overall sign: make the largest coefficient positive
    let (mut imax, mut best) = (0, 0.0_f64);
    for (i, &x) in v.iter().enumerate() {
        if x.abs() > best {
            best = x.abs();
            imax = i;
        }
    }
    if v[imax] < 0.0 {
        for x in &mut v {
            *x = -*x;
        }
    }
    v
}

/// Solve (T - s I) x = b by LU with partial pivoting on the tridiagonal band.
fn solve_shifted(diag: &[f64], off: &[f64], s: f64, b: &[f64]) -> Vec<f64> {
    let n = diag.len();
    // working copies of the three bands plus pivot fill-in
    let mut a = vec![0.0; n]; // sub
    let mut d: Vec<f64> = diag.iter().map(|&x| x - s).collect();
    let mut c = vec![0.0; n]; // super
    let mut f = vec![0.0; n]; // second super (fill-in)
    for i in 0..n - 1 {
        a[i + 1] = off[i];
        c[i] = off[i];
    }
    let mut x = b.to_vec();
    for i in 0..n - 1 {
        if a[i + 1].abs() > d[i].abs() {
            // swap rows i, i+1
            x.swap(i, i + 1);
            std::mem::swap(&mut d[i], &mut a[i + 1]);
            let tmp = c[i];
            c[i] = d[i + 1];
            d[i + 1] = tmp;
            if i + 2 < n {
                f[i] = c[i + 1];
                c[i + 1] = 0.0;
            }
        }
        let piv = if d[i].abs() < 1e-300 { 1e-300_f64.copysign(d[i]) } else { d[i] };
        let m = a[i + 1] / piv;
        d[i + 1] -= m * c[i];
        if i + 2 < n {
            c[i + 1] -= m * f[i];
        }
        x[i + 1] -= m * x[i];
    }
    for i in (0..n).rev() {
        let mut acc = x[i];
        if i + 1 < n {
            acc -= c[i] * x[i + 1];
        }
        if i + 2 < n {
            acc -= f[i] * x[i + 2];
        }
        let piv = if d[i].abs() < 1e-300 { 1e-300_f64.copysign(d[i]) } else { d[i] };
        x[i] = acc / piv;
    }
    x
}

/// Dense-output solution of y'' = g(t) y on [t0, t1] with RK4 on (y, y').
pub struct OdeGrid {
    pub t0: f64,
    pub h: f64,
    pub y: Vec<f64>,
    pub yp: Vec<f64>,
}

impl OdeGrid {
    pub fn integrate(
        g: &dyn Fn(f64) -> f64,
        t0: f64,
        t1: f64,
        y0: f64,
        yp0: f64,
        steps: usize,
    ) -> Self {
        let h = (t1 - t0) / steps as f64;
        let mut y = Vec::with_capacity(steps + 1);
        let mut yp = Vec::with_capacity(steps + 1);
        let (mut u, mut v) = (y0, yp0);
        y.push(u);
        yp.push(v);
        for i in 0..steps {
            let t = t0 + i as f64 * h;
            // classic RK4 on the first-order system (y, y')' = (y', g y)
            let k1 = (v, g(t) * u);
            let k2 = (v + 0.5 * h * k1.1, g(t + 0.5 * h) * (u + 0.5 * h * k1.0));
            let k3 = (v + 0.5 * h * k2.1, g(t + 0.5 * h) * (u + 0.5 * h * k2.0));
            let k4 = (v + h * k3.1, g(t + h) * (u + h * k3.0));
            u += h / 6.0 * (k1.0 + 2.0 * k2.0 + 2.0 * k3.0 + k4.0);
            v += h / 6.0 * (k1.1 + 2.0 * k2.1 + 2.0 * k3.1 + k4.1);
            y.push(u);
            yp.push(v);
        }
        Self { t0, h, y, yp }
    }

    pub fn end_value(&self) -> f64 {
        *self.y.last().unwrap()
    }

    /// Sign changes of y strictly inside the interval.
    pub fn interior_zero_count(&self) -> usize {
        let mut count = 0;
        for i in 1..self.y.len() - 1 {
            if self.y[i - 1] != 0.0 && self.y[i - 1] * self.y[i] < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Cubic-Hermite value and first derivative at t.
    pub fn at(&self, t: f64) -> (f64, f64) {
        let n = self.y.len() - 1;
        let s = ((t - self.t0) / self.h).clamp(0.0, n as f64 - 1e-12);
        let i = (s.floor() as usize).min(n - 1);
        let u = s - i as f64;
        let (y0, y1) = (self.y[i], self.y[i + 1]);
        let (m0, m1) = (self.yp[i] * self.h, self.yp[i + 1] * self.h);
        let u2 = u * u;
        let u3 = u2 * u;
        let v = (2.0 * u3 - 3.0 * u2 + 1.0) * y0
            + (u3 - 2.0 * u2 + u) * m0
            + (-2.0 * u3 + 3.0 * u2) * y1
            + (u3 - u2) * m1;
        let dv = ((6.0 * u2 - 6.0 * u) * y0
            + (3.0 * u2 - 4.0 * u + 1.0) * m0
            + (-6.0 * u2 + 6.0 * u) * y1
            + (3.0 * u2 - 2.0 * u) * m1)
            / self.h;
        (v, dv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tridiag_eigen_matches_analytic() {
        let n = 10;
        let diag = vec![2.0; n];
        let off = vec![-1.0; n - 1];
        for k in 0..n {
            let exact =
                2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n as f64 + 1.0)).cos();
            let v = tridiag_eigenvalue(&diag, &off, k);
            assert!((v - exact).abs() < 1e-10, "k={k}");
        }
        // eigenvector residual
        let lam = tridiag_eigenvalue(&diag, &off, 3);
        let v = tridiag_eigenvector(&diag, &off, lam);
        for i in 0..n {
            let mut r = (diag[i] - lam) * v[i];
            if i > 0 {
                r += off[i - 1] * v[i - 1];
            }
            if i < n - 1 {
                r += off[i] * v[i + 1];
            }
            assert!(r.abs() < 1e-8);
        }
    }

    #[test]
    fn ode_grid_reproduces_cosine() {
        // y'' = -25 y, y(0) = 1, y'(0) = 0  ->  cos(5 t)
        let g = |_: f64| -25.0;
        let grid = OdeGrid::integrate(&g, 0.0, 2.0, 1.0, 0.0, 2000);
        for &t in &[0.37, 1.11, 1.93] {
            let (v, dv) = grid.at(t);
            assert!((v - (5.0 * t).cos()).abs() < 1e-9);
            assert!((dv + 5.0 * (5.0 * t).sin()).abs() < 1e-7);
        }
        assert_eq!(grid.interior_zero_count(), 3); // zeros at pi/10, 3pi/10, pi/2 -> t in (0,2): 0.314, 0.942, 1.571
    }
}
