//! Elliptic billiard eigenfunctions: Mathieu angular functions paired with
//! modified-Mathieu radial parts (series for the full ellipse, shooting for
//! the confocal annulus).
//!
//! Quantum numbers: m = angular index l within the symmetry class,
//! n = r = number of interior radial zeros (r >= 0). Classes are the four
//! reflection parities (major axis, minor axis): ++ = ce_{2l}, +- =
//! ce_{2l+1}, -+ = se_{2l+1}, -- = se_{2l+2}.

use num_complex::Complex64;

use super::coords::{elliptic_w, pullback, SepJet};
use super::ode::{tridiag_eigenvalue, tridiag_eigenvector, OdeGrid};
use super::{BilliardError, QuantumNumbers, Result, Shape, SymClass};
use crate::geom::Jet2;
use crate::special::quad::simpson;
use crate::special::roots::bisect;
use crate::Point;

const TRUNC_PAD: usize = 24;

/// Angular order mu_k of the k-th Fourier term for each class.
fn fourier_order(class: SymClass, k: usize) -> f64 {
    match class {
        SymClass::PP => 2.0 * k as f64,
        SymClass::PM | SymClass::MP => 2.0 * k as f64 + 1.0,
        SymClass::MM => 2.0 * k as f64 + 2.0,
        _ => unreachable!(),
    }
}

fn is_sine(class: SymClass) -> bool {
    matches!(class, SymClass::MP | SymClass::MM)
}

/// Tridiagonal matrix of the angular Mathieu problem for one parity class.
fn mathieu_tridiag(class: SymClass, q: f64, size: usize) -> (Vec<f64>, Vec<f64>) {
    let mut diag = Vec::with_capacity(size);
    let mut off = Vec::with_capacity(size - 1);
    for k in 0..size {
        let mu = fourier_order(class, k);
        let mut d = mu * mu;
        if class == SymClass::PM && k == 0 {
            d += q;
        }
        if class == SymClass::MP && k == 0 {
            d -= q;
        }
        diag.push(d);
    }
    for k in 0..size - 1 {
        let e = if class == SymClass::PP && k == 0 {
            std::f64::consts::SQRT_2 * q
        } else {
            q
        };
        off.push(e);
    }
    (diag, off)
}

fn trunc_size(class: SymClass, l: usize, q: f64) -> usize {
    l + TRUNC_PAD + (q.abs().sqrt() as usize) + if class == SymClass::PP { 1 } else { 0 }
}

/// Characteristic value a of the l-th angular state of the class at given q.
pub fn mathieu_a(class: SymClass, l: usize, q: f64) -> f64 {
    let n = trunc_size(class, l, q);
    let (diag, off) = mathieu_tridiag(class, q, n);
    tridiag_eigenvalue(&diag, &off, l)
}

/// Fourier coefficients of the angular function (the k = 0 term of the ++
/// class is already rescaled back to the plain cos(0) coefficient).
pub fn mathieu_coeffs(class: SymClass, l: usize, q: f64) -> Vec<f64> {
    let n = trunc_size(class, l, q);
    let (diag, off) = mathieu_tridiag(class, q, n);
    let a = tridiag_eigenvalue(&diag, &off, l);
    let mut v = tridiag_eigenvector(&diag, &off, a);
    if class == SymClass::PP {
        v[0] /= std::f64::consts::SQRT_2;
    }
    v
}

/// Series evaluation of the angular function and two derivatives.
fn angular_eval(class: SymClass, coeffs: &[f64], eta: f64) -> (f64, f64, f64) {
    let sine = is_sine(class);
    let (mut v, mut d, mut dd) = (0.0, 0.0, 0.0);
    for (k, &c) in coeffs.iter().enumerate() {
        let mu = fourier_order(class, k);
        let (s, co) = (mu * eta).sin_cos();
        if sine {
            v += c * s;
            d += c * mu * co;
            dd -= c * mu * mu * s;
        } else {
            v += c * co;
            d -= c * mu * s;
            dd -= c * mu * mu * co;
        }
    }
    (v, d, dd)
}

/// Series evaluation of the radial (modified) function and two derivatives:
/// cos -> cosh, sin -> sinh with the same coefficients.
fn radial_eval(class: SymClass, coeffs: &[f64], xi: f64) -> (f64, f64, f64) {
    let sine = is_sine(class);
    let (mut v, mut d, mut dd) = (0.0, 0.0, 0.0);
    for (k, &c) in coeffs.iter().enumerate() {
        let mu = fourier_order(class, k);
        // guard against overflow of cosh for negligible coefficients
        if c == 0.0 || c.abs().ln() + mu * xi.abs() < -45.0 {
            continue;
        }
        let (sh, ch) = (mu * xi).sinh_cosh();
        if sine {
            v += c * sh;
            d += c * mu * ch;
            dd += c * mu * mu * sh;
        } else {
            v += c * ch;
            d += c * mu * sh;
            dd += c * mu * mu * ch;
        }
    }
    (v, d, dd)
}

trait SinhCosh {
    fn sinh_cosh(self) -> (f64, f64);
}
impl SinhCosh for f64 {
    fn sinh_cosh(self) -> (f64, f64) {
        (self.sinh(), self.cosh())
    }
}

pub struct EllipseState {
    pub energy: f64,
    focal: f64,
    class: SymClass,
    coeffs: Vec<f64>,
    norm: f64,
}

impl EllipseState {
    pub fn jet(&self, p: Point) -> Jet2<f64> {
        let z = Complex64::new(p.x, p.y);
        // keep clear of the foci where the chart degenerates
        let z = nudge_foci(z, self.focal);
        let (w, wp, wpp) = elliptic_w(z, self.focal);
        let (xi, eta) = (w.re, w.im);
        let (rv, rd, rdd) = radial_eval(self.class, &self.coeffs, xi);
        let (av, ad, add) = angular_eval(self.class, &self.coeffs, eta);
        let u = SepJet {
            v: rv * av,
            us: rd * av,
            ut: rv * ad,
            uss: rdd * av,
            ust: rd * ad,
            utt: rv * add,
        };
        pullback(u, wp, wpp).scaled(self.norm)
    }
}

fn nudge_foci(z: Complex64, f: f64) -> Complex64 {
    let eps = 1e-9 * f.max(1e-9);
    if (z - f).norm() < eps {
        z + Complex64::new(0.0, eps)
    } else if (z + f).norm() < eps {
        z - Complex64::new(0.0, eps)
    } else {
        z
    }
}

fn class_of(qn: QuantumNumbers) -> Result<SymClass> {
    match qn.class {
        SymClass::PP | SymClass::PM | SymClass::MP | SymClass::MM => Ok(qn.class),
        _ => Err(BilliardError::Unsupported(
            "ellipse class must be one of ++ +- -+ --".into(),
        )),
    }
}

/// Geometry of the confocal chart for a given outer ellipse.
fn chart(a: f64, b: f64) -> (f64, f64) {
    let f = (a * a - b * b).sqrt();
    (f, (b / f).asinh()) // (focal distance, xi0)
}

/// Boundary value of the radial series at xi0 for wavenumber k.
///
/// The raw eigenvector sign is arbitrary and may flip between nearby q,
/// which would fake sign changes during the root scan; successive calls are
/// therefore sign-aligned against the previous coefficient vector.
struct BoundaryValue {
    class: SymClass,
    l: usize,
    f: f64,
    xi0: f64,
    last: std::cell::RefCell<Option<Vec<f64>>>,
}

impl BoundaryValue {
    fn new(class: SymClass, l: usize, f: f64, xi0: f64) -> Self {
        Self { class, l, f, xi0, last: std::cell::RefCell::new(None) }
    }
    fn eval(&self, k: f64) -> f64 {
        let q = 0.25 * k * k * self.f * self.f;
        let mut coeffs = mathieu_coeffs(self.class, self.l, q);
        let mut last = self.last.borrow_mut();
        if let Some(prev) = last.as_ref() {
            let dot: f64 = prev.iter().zip(&coeffs).map(|(a, b)| a * b).sum();
            if dot < 0.0 {
                for c in &mut coeffs {
                    *c = -*c;
                }
            }
        }
        let v = radial_eval(self.class, &coeffs, self.xi0).0;
        *last = Some(coeffs);
        v
    }
}

/// Find the (r+1)-th root in k of the boundary condition along one
/// (class, l) branch; returns (k, root_index_found).
fn branch_root(
    boundary: &dyn Fn(f64) -> f64,
    scan_step: f64,
    root_index: usize,
    k_cap: f64,
) -> Option<f64> {
    let mut found = 0;
    let mut k = 0.25 * scan_step;
    let mut prev = boundary(k);
    while k < k_cap {
        let kn = k + scan_step;
        let cur = boundary(kn);
        if prev * cur < 0.0 {
            found += 1;
            if found == root_index {
                return Some(bisect(&|x| boundary(x), k, kn, 1e-12, 200));
            }
        }
        prev = cur;
        k = kn;
    }
    None
}

pub fn build(shape: &Shape, qn: QuantumNumbers) -> Result<EllipseState> {
    let Shape::Ellipse { a, b } = *shape else {
        return Err(BilliardError::Unsupported("not an ellipse".into()));
    };
    let class = class_of(qn)?;
    let (l, r) = (qn.m, qn.n);
    if l < 0 || r < 0 {
        return Err(BilliardError::Unsupported("ellipse needs l >= 0, r >= 0".into()));
    }
    let (f, xi0) = chart(a, b);
    let bv = BoundaryValue::new(class, l as usize, f, xi0);
    let boundary = |k: f64| bv.eval(k);
    let step = std::f64::consts::PI / (10.0 * a);
    // the scan cap grows with both indices; generous and cheap
    let k_cap = (2.0 * (l as f64 + 1.0) / b + (r as f64 + 2.0) * 6.0 / b).max(20.0 / b);
    let k = branch_root(&boundary, step, r as usize + 1, k_cap)
        .ok_or_else(|| BilliardError::Unsupported("ellipse root scan exhausted".into()))?;
    let q = 0.25 * k * k * f * f;
    let coeffs = mathieu_coeffs(class, l as usize, q);
    let mut st = EllipseState { energy: k * k, focal: f, class, coeffs, norm: 1.0 };
    st.norm = 1.0 / ellipse_l2(&st, xi0).sqrt();
    Ok(st)
}

/// L2 norm over the ellipse: dx dy = f^2 (sinh^2 xi + sin^2 eta) dxi deta.
fn ellipse_l2(st: &EllipseState, xi0: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let rad2 = |xi: f64| radial_eval(st.class, &st.coeffs, xi).0.powi(2);
    let ang2 = |eta: f64| angular_eval(st.class, &st.coeffs, eta).0.powi(2);
    let i_r = simpson(&rad2, 0.0, xi0, 2048);
    let i_r_sinh = simpson(&|xi: f64| rad2(xi) * xi.sinh().powi(2), 0.0, xi0, 2048);
    let i_a = simpson(&ang2, 0.0, two_pi, 2048);
    let i_a_sin = simpson(&|eta: f64| ang2(eta) * eta.sin().powi(2), 0.0, two_pi, 2048);
    st.focal * st.focal * (i_r_sinh * i_a + i_r * i_a_sin)
}

pub fn enumerate(shape: &Shape, e_max: f64) -> Result<Vec<super::Eigenstate>> {
    let Shape::Ellipse { a, b } = *shape else {
        return Err(BilliardError::Unsupported("not an ellipse".into()));
    };
    let (f, xi0) = chart(a, b);
    let k_max = e_max.sqrt();
    let step = std::f64::consts::PI / (10.0 * a);
    let mut out = Vec::new();
    for class in [SymClass::PP, SymClass::PM, SymClass::MP, SymClass::MM] {
        for l in 0..10_000usize {
            let bv = BoundaryValue::new(class, l, f, xi0);
            let boundary = |k: f64| bv.eval(k);
            // collect all roots below k_max on this branch
            let mut roots = Vec::new();
            let mut k = 0.25 * step;
            let mut prev = boundary(k);
            while k < k_max {
                let kn = k + step;
                let cur = boundary(kn);
                if prev * cur < 0.0 {
                    roots.push(bisect(&|x| boundary(x), k, kn, 1e-12, 200));
                }
                prev = cur;
                k = kn;
            }
            if roots.is_empty() {
                break; // higher l only rises
            }
            for (i, _) in roots.iter().enumerate() {
                out.push(QuantumNumbers::with_class(l as i64, i as i64, class));
            }
        }
    }
    out.into_iter()
        .map(|qn| super::Eigenstate::new(shape.clone(), qn))
        .collect()
}

// ---------------------------------------------------------------------------
// Confocal elliptic annulus: same angular problem, shooting radial part.
// ---------------------------------------------------------------------------

pub struct EllipticAnnulusState {
    pub energy: f64,
    focal: f64,
    class: SymClass,
    coeffs: Vec<f64>,
    radial: OdeGrid,
    a_char: f64,
    q: f64,
    norm: f64,
}

impl EllipticAnnulusState {
    pub fn jet(&self, p: Point) -> Jet2<f64> {
        let z = Complex64::new(p.x, p.y);
        let (w, wp, wpp) = elliptic_w(z, self.focal);
        let (xi, eta) = (w.re, w.im);
        let (rv, rd) = self.radial.at(xi);
        // radial ODE supplies the second derivative exactly
        let rdd = (self.a_char - 2.0 * self.q * (2.0 * xi).cosh()) * rv;
        let (av, ad, add) = angular_eval(self.class, &self.coeffs, eta);
        let u = SepJet {
            v: rv * av,
            us: rd * av,
            ut: rv * ad,
            uss: rdd * av,
            ust: rd * ad,
            utt: rv * add,
        };
        pullback(u, wp, wpp).scaled(self.norm)
    }
}

fn annulus_radial(class: SymClass, l: usize, f: f64, xi_in: f64, xi0: f64, k: f64) -> (OdeGrid, f64, f64) {
    let q = 0.25 * k * k * f * f;
    let a_char = mathieu_a(class, l, q);
    let steps = (((xi0 - xi_in) * k.max(1.0) * f.max(1.0) / 0.01) as usize).clamp(800, 20_000);
    let g = move |xi: f64| a_char - 2.0 * q * (2.0 * xi).cosh();
    (OdeGrid::integrate(&g, xi_in, xi0, 0.0, 1.0, steps), a_char, q)
}

pub fn build_annulus(shape: &Shape, qn: QuantumNumbers) -> Result<EllipticAnnulusState> {
    let Shape::EllipticAnnulus { a, b, xi_in } = *shape else {
        return Err(BilliardError::Unsupported("not an elliptic annulus".into()));
    };
    let class = class_of(qn)?;
    let (l, r) = (qn.m, qn.n);
    if l < 0 || r < 0 {
        return Err(BilliardError::Unsupported("annulus needs l >= 0, r >= 0".into()));
    }
    let (f, xi0) = chart(a, b);
    let boundary =
        |k: f64| annulus_radial(class, l as usize, f, xi_in, xi0, k).0.end_value();
    let step = std::f64::consts::PI / (12.0 * a);
    let k_cap = (2.0 * (l as f64 + 1.0) / b + (r as f64 + 2.0) * 8.0 / b).max(24.0 / b);
    let k = branch_root(&boundary, step, r as usize + 1, k_cap)
        .ok_or_else(|| BilliardError::Unsupported("annulus root scan exhausted".into()))?;
    let (radial, a_char, q) = annulus_radial(class, l as usize, f, xi_in, xi0, k);
    let coeffs = {
        let n = trunc_size(class, l as usize, q);
        let (diag, off) = mathieu_tridiag(class, q, n);
        let mut v = tridiag_eigenvector(&diag, &off, a_char);
        if class == SymClass::PP {
            v[0] /= std::f64::consts::SQRT_2;
        }
        v
    };
    let mut st = EllipticAnnulusState {
        energy: k * k,
        focal: f,
        class,
        coeffs,
        radial,
        a_char,
        q,
        norm: 1.0,
    };
    st.norm = 1.0 / annulus_l2(&st, xi_in, xi0).sqrt();
    Ok(st)
}

fn annulus_l2(st: &EllipticAnnulusState, xi_in: f64, xi0: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let rad2 = |xi: f64| st.radial.at(xi).0.powi(2);
    let ang2 = |eta: f64| angular_eval(st.class, &st.coeffs, eta).0.powi(2);
    let i_r = simpson(&rad2, xi_in, xi0, 2048);
    let i_r_sinh = simpson(&|xi: f64| rad2(xi) * xi.sinh().powi(2), xi_in, xi0, 2048);
    let i_a = simpson(&ang2, 0.0, two_pi, 2048);
    let i_a_sin = simpson(&|eta: f64| ang2(eta) * eta.sin().powi(2), 0.0, two_pi, 2048);
    st.focal * st.focal * (i_r_sinh * i_a + i_r * i_a_sin)
}

pub fn enumerate_annulus(shape: &Shape, e_max: f64) -> Result<Vec<super::Eigenstate>> {
    let Shape::EllipticAnnulus { a, b, xi_in } = *shape else {
        return Err(BilliardError::Unsupported("not an elliptic annulus".into()));
    };
    let (f, xi0) = chart(a, b);
    let k_max = e_max.sqrt();
    let step = std::f64::consts::PI / (12.0 * a);
    let mut out = Vec::new();
    for class in [SymClass::PP, SymClass::PM, SymClass::MP, SymClass::MM] {
        for l in 0..10_000usize {
            let boundary = |k: f64| annulus_radial(class, l, f, xi_in, xi0, k).0.end_value();
            let mut roots = 0usize;
            let mut k = 0.25 * step;
            let mut prev = boundary(k);
            while k < k_max {
                let kn = k + step;
                let cur = boundary(kn);
                if prev * cur < 0.0 {
                    out.push(QuantumNumbers::with_class(l as i64, roots as i64, class));
                    roots += 1;
                }
                prev = cur;
                k = kn;
            }
            if roots == 0 {
                break;
            }
        }
    }
    out.into_iter()
        .map(|qn| super::Eigenstate::new(shape.clone(), qn))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mathieu_a_matches_q_zero_limits() {
        // At q = 0 the characteristic values are the squared orders.
        assert!((mathieu_a(SymClass::PP, 0, 0.0) - 0.0).abs() < 1e-9);
        assert!((mathieu_a(SymClass::PP, 2, 0.0) - 16.0).abs() < 1e-9);
        assert!((mathieu_a(SymClass::PM, 1, 0.0) - 9.0).abs() < 1e-9);
        assert!((mathieu_a(SymClass::MP, 0, 0.0) - 1.0).abs() < 1e-9);
        assert!((mathieu_a(SymClass::MM, 1, 0.0) - 16.0).abs() < 1e-9);
    }

    #[test]
    fn mathieu_a_reference_values() {
        // DLMF / McLachlan tabulated characteristic values at q = 5.
        let a0 = mathieu_a(SymClass::PP, 0, 5.0);
        assert!((a0 - (-5.800_046_020_2)).abs() < 1e-6, "a0(5) = {a0}");
        let b1 = mathieu_a(SymClass::MP, 0, 5.0);
        assert!((b1 - (-5.790_080_598_8)).abs() < 1e-6, "b1(5) = {b1}");
        let a1 = mathieu_a(SymClass::PM, 0, 5.0);
        assert!((a1 - 1.858_187_545_5).abs() < 1e-6, "a1(5) = {a1}");
        let b2 = mathieu_a(SymClass::MM, 0, 5.0);
        assert!((b2 - 2.099_460_445_5).abs() < 1e-6, "b2(5) = {b2}");
    }

    #[test]
    fn angular_function_satisfies_mathieu_equation() {
        let q = 3.7;
        for (class, l) in [(SymClass::PP, 1), (SymClass::PM, 0), (SymClass::MP, 2), (SymClass::MM, 1)] {
            let a = mathieu_a(class, l, q);
            let coeffs = mathieu_coeffs(class, l, q);
            for &eta in &[0.3, 1.2, 2.9, 4.4] {
                let (v, _, dd) = angular_eval(class, &coeffs, eta);
                let resid = dd + (a - 2.0 * q * (2.0 * eta).cos()) * v;
                assert!(resid.abs() < 1e-9, "{class:?} l={l}: {resid}");
            }
        }
    }

    #[test]
    fn ellipse_state_vanishes_on_boundary_and_solves_helmholtz() {
        let shape = Shape::Ellipse { a: 1.0, b: 0.6 };
        let st = super::super::Eigenstate::new(
            shape.clone(),
            QuantumNumbers::with_class(1, 1, SymClass::MM),
        )
        .unwrap();
        let mut peak = 0.0_f64;
        for i in 0..60 {
            let t = i as f64 * 0.1;
            let p = crate::Vec2::new(0.8 * t.cos() * 0.9, 0.5 * t.sin() * 0.9);
            if shape.inside(p) {
                peak = peak.max(st.jet_unchecked(p).v.abs());
            }
        }
        assert!(peak > 0.0);
        for i in 0..24 {
            let t = i as f64 * 0.26;
            let p = crate::Vec2::new(1.0 * t.cos(), 0.6 * t.sin());
            assert!(st.jet_unchecked(p).v.abs() < 1e-7 * peak.max(1.0));
        }
        // Helmholtz residual at interior probe points
        for &(x, y) in &[(0.3, 0.2), (-0.5, 0.1), (0.2, -0.35), (0.62, 0.0)] {
            let j = st.jet_unchecked(crate::Vec2::new(x, y));
            let resid = j.laplacian() + st.energy * j.v;
            assert!(
                resid.abs() < 1e-7 * st.energy * (j.v.abs() + 1e-3),
                "residual {resid} at ({x},{y})"
            );
        }
    }
}
