//! Confocal parabolic billiard: Weber-type separated equations
//! T'' + (k^2 tau^2 - c) T = 0,  S'' + (k^2 sigma^2 + c) S = 0,
//! with T and S either both even or both odd about the axis.
//!
//! Quantum numbers: m = index of the boundary zero in tau (T has m - 1
//! interior zeros on (0, tau0)), n likewise for sigma.

use num_complex::Complex64;

use super::coords::{parabolic_zeta, pullback, SepJet};
use super::ode::OdeGrid;
use super::{BilliardError, QuantumNumbers, Result, Shape, SymClass};
use crate::geom::Jet2;
use crate::special::quad::simpson;
use crate::special::roots::bisect;
use crate::Point;

pub struct ParabolicState {
    pub energy: f64,
    c_sep: f64,
    even: bool,
    t_grid: OdeGrid,
    s_grid: OdeGrid,
    norm: f64,
}

fn integrate_t(k: f64, c: f64, even: bool, tau0: f64) -> OdeGrid {
    let g = move |t: f64| c - k * k * t * t;
    let steps = ((tau0 * k.max(1.0) / 0.005) as usize).clamp(1000, 40_000);
    let (y0, yp0) = if even { (1.0, 0.0) } else { (0.0, 1.0) };
    OdeGrid::integrate(&g, 0.0, tau0, y0, yp0, steps)
}

fn integrate_s(k: f64, c: f64, even: bool, sigma0: f64) -> OdeGrid {
    let g = move |t: f64| -(c + k * k * t * t);
    let steps = ((sigma0 * k.max(1.0) / 0.005) as usize).clamp(1000, 40_000);
    let (y0, yp0) = if even { (1.0, 0.0) } else { (0.0, 1.0) };
    OdeGrid::integrate(&g, 0.0, sigma0, y0, yp0, steps)
}

/// Separation constant on the n-th sigma branch at wavenumber k: the value
/// of c for which S(sigma0) = 0 with exactly n - 1 interior zeros.
///
/// The interior zero count of S is monotone nondecreasing in c (Sturm), so
/// the branch is located by bisecting the count and refined on the boundary
/// value.
fn sigma_branch_c(k: f64, n: usize, even: bool, sigma0: f64) -> f64 {
    let count = |c: f64| integrate_s(k, c, even, sigma0).interior_zero_count();
    // below -(k sigma0)^2 the equation is non-oscillatory: zero count 0
    let mut c_lo = -(k * sigma0) * (k * sigma0) - 1.0;
    let mut c_hi = ((n as f64 + 2.0) * std::f64::consts::PI / sigma0).powi(2);
    while count(c_hi) < n {
        c_hi = 2.0 * c_hi.abs().max(1.0);
        assert!(c_hi < 1e9, "sigma branch scan exhausted (k = {k}, n = {n})");
    }
    // smallest c with count >= n; at that point S(sigma0) crosses zero
    for _ in 0..90 {
        let mid = 0.5 * (c_lo + c_hi);
        if count(mid) >= n {
            c_hi = mid;
        } else {
            c_lo = mid;
        }
        if c_hi - c_lo < 1e-10 * (1.0 + c_hi.abs()) {
            break;
        }
    }
    // refine on the boundary value inside the final bracket
    let f = |c: f64| integrate_s(k, c, even, sigma0).end_value();
    if f(c_lo) * f(c_hi) < 0.0 {
        bisect(&f, c_lo, c_hi, 1e-12, 100)
    } else {
        0.5 * (c_lo + c_hi)
    }
}

/// Boundary value of T on the (n, parity) branch as a function of k.
fn t_boundary(k: f64, n: usize, even: bool, tau0: f64, sigma0: f64) -> f64 {
    let c = sigma_branch_c(k, n, even, sigma0);
    integrate_t(k, c, even, tau0).end_value()
}

pub fn build(shape: &Shape, qn: QuantumNumbers) -> Result<ParabolicState> {
    let Shape::ConfocalParabolic { tau0, sigma0 } = *shape else {
        return Err(BilliardError::Unsupported("not a parabolic billiard".into()));
    };
    let even = match qn.class {
        SymClass::Even => true,
        SymClass::Odd => false,
        _ => {
            return Err(BilliardError::Unsupported(
                "parabolic class must be even or odd".into(),
            ))
        }
    };
    let (m, n) = (qn.m, qn.n);
    if m < 1 || n < 1 {
        return Err(BilliardError::Unsupported("parabolic needs m, n >= 1".into()));
    }
    // scan k for the m-th root of T(tau0) on the n-th sigma branch
    let step = std::f64::consts::PI / (8.0 * (tau0 + sigma0) * tau0.max(sigma0));
    let mut found = 0;
    let mut k = 0.3 * step;
    let mut prev = t_boundary(k, n as usize, even, tau0, sigma0);
    let k_root = loop {
        let kn = k + step;
        let cur = t_boundary(kn, n as usize, even, tau0, sigma0);
        if prev * cur < 0.0 {
            found += 1;
            if found == m {
                break bisect(
                    &|x: f64| t_boundary(x, n as usize, even, tau0, sigma0),
                    k,
                    kn,
                    1e-11,
                    200,
                );
            }
        }
        prev = cur;
        k = kn;
        if k > (m as f64 + n as f64 + 6.0) * 8.0 / tau0.min(sigma0) {
            return Err(BilliardError::Unsupported("parabolic root scan exhausted".into()));
        }
    };
    let c = sigma_branch_c(k_root, n as usize, even, sigma0);
    let t_grid = integrate_t(k_root, c, even, tau0);
    let s_grid = integrate_s(k_root, c, even, sigma0);
    // verify the nodal structure matches the requested quantum numbers
    debug_assert_eq!(t_grid.interior_zero_count() as i64, m - 1);
    debug_assert_eq!(s_grid.interior_zero_count() as i64, n - 1);
    let mut st = ParabolicState {
        energy: k_root * k_root,
        c_sep: c,
        even,
        t_grid,
        s_grid,
        norm: 1.0,
    };
    st.norm = 1.0 / parabolic_l2(&st, tau0, sigma0).sqrt();
    Ok(st)
}

impl ParabolicState {
    pub fn jet(&self, p: Point) -> Jet2<f64> {
        let z = Complex64::new(p.x, p.y);
        let z = if z.norm() < 1e-12 { Complex64::new(1e-12, 0.0) } else { z };
        let (zeta, zp, zpp) = parabolic_zeta(z);
        // s = tau (signed), t = -sigma
        let (tau, sigma) = (zeta.re, -zeta.im);
        let k2 = self.energy;
        // parity continuation to tau < 0
        let (sign_t, tau_abs) = if tau < 0.0 { (if self.even { 1.0 } else { -1.0 }, -tau) } else { (1.0, tau) };
        let (tv0, td0) = self.t_grid.at(tau_abs);
        let (tv, td) = (sign_t * tv0, sign_t * if tau < 0.0 { -td0 } else { td0 });
        let tdd = (self.c_sep - k2 * tau * tau) * tv;
        let (sv, sd_raw) = self.s_grid.at(sigma);
        let sdd = -(self.c_sep + k2 * sigma * sigma) * sv;
        // u(s, t) = T(s) S(-t): d/dt = -d/dsigma
        let u = SepJet {
            v: tv * sv,
            us: td * sv,
            ut: -tv * sd_raw,
            uss: tdd * sv,
            ust: -td * sd_raw,
            utt: tv * sdd,
        };
        pullback(u, zp, zpp).scaled(self.norm)
    }
}

fn parabolic_l2(st: &ParabolicState, tau0: f64, sigma0: f64) -> f64 {
    let t2 = |t: f64| st.t_grid.at(t).0.powi(2);
    let s2 = |s: f64| st.s_grid.at(s).0.powi(2);
    let i_t = simpson(&t2, 0.0, tau0, 4096);
    let i_t_w = simpson(&|t: f64| t2(t) * t * t, 0.0, tau0, 4096);
    let i_s = simpson(&s2, 0.0, sigma0, 4096);
    let i_s_w = simpson(&|s: f64| s2(s) * s * s, 0.0, sigma0, 4096);
    2.0 * (i_t_w * i_s + i_t * i_s_w)
}

pub fn enumerate(shape: &Shape, e_max: f64) -> Result<Vec<super::Eigenstate>> {
    let Shape::ConfocalParabolic { tau0, sigma0 } = *shape else {
        return Err(BilliardError::Unsupported("not a parabolic billiard".into()));
    };
    let k_max = e_max.sqrt();
    let step = std::f64::consts::PI / (8.0 * (tau0 + sigma0) * tau0.max(sigma0));
    let mut qns = Vec::new();
    for even in [true, false] {
        let class = if even { SymClass::Even } else { SymClass::Odd };
        let mut n = 1usize;
        loop {
            let mut m_count = 0i64;
            let mut k = 0.3 * step;
            let mut prev = t_boundary(k, n, even, tau0, sigma0);
            while k < k_max {
                let kn = k + step;
                let cur = t_boundary(kn, n, even, tau0, sigma0);
                if prev * cur < 0.0 {
                    m_count += 1;
                    qns.push(QuantumNumbers::with_class(m_count, n as i64, class));
                }
                prev = cur;
                k = kn;
            }
            if m_count == 0 {
                break;
            }
            n += 1;
        }
    }
    qns.into_iter()
        .map(|qn| super::Eigenstate::new(shape.clone(), qn))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::billiards::Eigenstate;
    use crate::Vec2;

    fn shape() -> Shape {
        Shape::ConfocalParabolic { tau0: 1.3, sigma0: 1.0 }
    }

    #[test]
    fn ground_state_solves_helmholtz_and_vanishes_on_boundary() {
        let st = Eigenstate::new(
            shape(),
            QuantumNumbers::with_class(1, 1, SymClass::Even),
        )
        .unwrap();
        // interior residual
        for &(x, y) in &[(0.1, 0.2), (-0.4, 0.1), (0.3, -0.2)] {
            if !shape().inside(Vec2::new(x, y)) {
                continue;
            }
            let j = st.jet_unchecked(Vec2::new(x, y));
            let resid = j.laplacian() + st.energy * j.v;
            assert!(resid.abs() < 1e-5 * st.energy * j.v.abs().max(0.05), "{resid}");
        }
        // boundary values on both parabolas (sigma >= 0 on the chart)
        let (tau0, sigma0) = (1.3, 1.0);
        for s in [0.15_f64, 0.5, 0.85] {
            let sig = s * sigma0;
            for tau in [tau0, -tau0] {
                let p = Vec2::new(tau * sig, 0.5 * (tau * tau - sig * sig));
                let v = st.jet_unchecked(p).v;
                assert!(v.abs() < 1e-7, "tau-boundary: {v}");
            }
        }
        for t in [-0.9_f64, -0.2, 0.6, 0.95] {
            let tau = t * tau0;
            let p = Vec2::new(tau * sigma0, 0.5 * (tau * tau - sigma0 * sigma0));
            let v = st.jet_unchecked(p).v;
            assert!(v.abs() < 1e-7, "sigma-boundary: {v}");
        }
    }

    #[test]
    fn odd_state_vanishes_on_axis() {
        let st = Eigenstate::new(
            shape(),
            QuantumNumbers::with_class(1, 1, SymClass::Odd),
        )
        .unwrap();
        for y in [-0.3, 0.2, 0.6] {
            let v = st.jet_unchecked(Vec2::new(0.0, y)).v;
            assert!(v.abs() < 1e-9);
        }
    }
}
