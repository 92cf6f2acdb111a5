//! Disk, circular sector, and circular annulus eigenfunctions
//! R(k r) x {cos, sin}(nu theta) with Bessel radial parts.

use num_complex::Complex64;

use super::coords::{polar_w, pullback, SepJet};
use super::{BilliardError, QuantumNumbers, Result, Shape, SymClass};
use crate::geom::Jet2;
use crate::special::bessel::{
    bessel_j_nu_any, bessel_j_nu_prime, bessel_y, bessel_zero_j, cross_product_zero,
};
use crate::special::quad::simpson;
use crate::Point;

#[derive(Clone, Copy)]
enum RadialKind {
    /// J_nu(x)
    BesselJ,
    /// J_nu(x) Y_nu(k r_in) - Y_nu(x) J_nu(k r_in), integer nu
    CrossProduct { y_at_inner: f64, j_at_inner: f64 },
}

pub struct RadialState {
    pub energy: f64,
    k: f64,
    nu: f64,
    sine: bool,
    kind: RadialKind,
    norm: f64,
}

impl RadialState {
    fn radial(&self, x: f64) -> (f64, f64) {
        match self.kind {
            RadialKind::BesselJ => (
                bessel_j_nu_any(self.nu, x),
                bessel_j_nu_prime(self.nu, x),
            ),
            RadialKind::CrossProduct { y_at_inner, j_at_inner } => {
                let m = self.nu as i64;
                let j = bessel_j_nu_any(self.nu, x);
                let y = bessel_y(m, x);
                let jp = bessel_j_nu_prime(self.nu, x);
                // Y' from the same recurrence as J'
                let yp = if m == 0 {
                    -bessel_y(1, x)
                } else {
                    bessel_y(m - 1, x) - (self.nu / x) * y
                };
                (j * y_at_inner - y * j_at_inner, jp * y_at_inner - yp * j_at_inner)
            }
        }
    }

    pub fn jet(&self, p: Point) -> Jet2<f64> {
        let r = (p.x * p.x + p.y * p.y).sqrt();
        let guard = 1e-11 / self.k.max(1.0);
        let p = if r < guard {
            // nudge off the coordinate singularity; the state vanishes there
            // to order nu anyway
            crate::Vec2::new(guard, 0.0)
        } else {
            p
        };
        let z = Complex64::new(p.x, p.y);
        let (w, wp, wpp) = polar_w(z);
        let x = self.k * w.re.exp(); // k r
        let theta = w.im;
        let (rv, rp) = self.radial(x);
        // Bessel ODE supplies R'' exactly.
        let rpp = -rp / x - (1.0 - self.nu * self.nu / (x * x)) * rv;
        let (av, ap, app) = {
            let (s, c) = (self.nu * theta).sin_cos();
            if self.sine {
                (s, self.nu * c, -self.nu * self.nu * s)
            } else {
                (c, -self.nu * s, -self.nu * self.nu * c)
            }
        };
        // u(s, t) = R(k e^s) A(t)
        let us = x * rp;
        let uss = x * x * rpp + x * rp;
        let u = SepJet {
            v: rv * av,
            us: us * av,
            ut: rv * ap,
            uss: uss * av,
            ust: us * ap,
            utt: rv * app,
        };
        pullback(u, wp, wpp).scaled(self.norm)
    }
}

pub fn build(shape: &Shape, qn: QuantumNumbers) -> Result<RadialState> {
    let pi = std::f64::consts::PI;
    match *shape {
        Shape::Disk { radius } => {
            let (m, n) = (qn.m, qn.n);
            if m < 0 || n < 1 {
                return Err(BilliardError::Unsupported("disk needs m >= 0, n >= 1".into()));
            }
            let sine = match (m, qn.class) {
                (0, SymClass::None) => false,
                (_, SymClass::Cos) if m >= 1 => false,
                (_, SymClass::Sin) if m >= 1 => true,
                _ => {
                    return Err(BilliardError::Unsupported(
                        "disk class: None (m=0) or Cos/Sin (m>=1)".into(),
                    ))
                }
            };
            let nu = m as f64;
            let zero = bessel_zero_j(nu, n as usize);
            let k = zero / radius;
            let c_theta = if m == 0 { 2.0 * pi } else { pi };
            let radial_sq = 0.5 * radius * radius * bessel_j_nu_prime(nu, zero).powi(2);
            Ok(RadialState {
                energy: k * k,
                k,
                nu,
                sine,
                kind: RadialKind::BesselJ,
                norm: 1.0 / (c_theta * radial_sq).sqrt(),
            })
        }
        Shape::CircularSector { radius, angle } => {
            let (m, n) = (qn.m, qn.n);
            if m < 1 || n < 1 {
                return Err(BilliardError::Unsupported("sector needs m, n >= 1".into()));
            }
            let nu = m as f64 * pi / angle;
            let zero = bessel_zero_j(nu, n as usize);
            let k = zero / radius;
            let radial_sq = 0.5 * radius * radius * bessel_j_nu_prime(nu, zero).powi(2);
            Ok(RadialState {
                energy: k * k,
                k,
                nu,
                sine: true,
                kind: RadialKind::BesselJ,
                norm: 1.0 / (0.5 * angle * radial_sq).sqrt(),
            })
        }
        Shape::CircularAnnulus { r_in, r_out } => {
            let (m, n) = (qn.m, qn.n);
            if m < 0 || n < 1 {
                return Err(BilliardError::Unsupported("annulus needs m >= 0, n >= 1".into()));
            }
            let sine = match (m, qn.class) {
                (0, SymClass::None) => false,
                (_, SymClass::Cos) if m >= 1 => false,
                (_, SymClass::Sin) if m >= 1 => true,
                _ => {
                    return Err(BilliardError::Unsupported(
                        "annulus class: None (m=0) or Cos/Sin (m>=1)".into(),
                    ))
                }
            };
            let k = cross_product_zero(m, r_in, r_out, n as usize);
            let nu = m as f64;
            let kind = RadialKind::CrossProduct {
                y_at_inner: bessel_y(m, k * r_in),
                j_at_inner: bessel_j_nu_any(nu, k * r_in),
            };
            let mut st = RadialState { energy: k * k, k, nu, sine, kind, norm: 1.0 };
            let c_theta = if m == 0 { 2.0 * pi } else { pi };
            let radial_sq = simpson(
                &|r: f64| {
                    let (v, _) = st.radial(k * r);
                    v * v * r
                },
                r_in,
                r_out,
                4096,
            );
            st.norm = 1.0 / (c_theta * radial_sq).sqrt();
            Ok(st)
        }
        _ => Err(BilliardError::Unsupported("not a radial shape".into())),
    }
}

pub fn enumerate(shape: &Shape, e_max: f64) -> Result<Vec<super::Eigenstate>> {
    let mut qns: Vec<QuantumNumbers> = Vec::new();
    let push_angular = |qns: &mut Vec<QuantumNumbers>, m: i64, n: i64| {
        if m == 0 {
            qns.push(QuantumNumbers::new(0, n));
        } else {
            qns.push(QuantumNumbers::with_class(m, n, SymClass::Cos));
            qns.push(QuantumNumbers::with_class(m, n, SymClass::Sin));
        }
    };
    match *shape {
        Shape::Disk { radius } => {
            let mut m = 0i64;
            loop {
                let nu = m as f64;
                if (nu / radius).powi(2) > e_max {
                    break; // first zero exceeds m, so E > e_max for all n
                }
                let mut added = false;
                let mut n = 1i64;
                loop {
                    let k = bessel_zero_j(nu, n as usize) / radius;
                    if k * k > e_max {
                        break;
                    }
                    push_angular(&mut qns, m, n);
                    added = true;
                    n += 1;
                }
                if !added && m > 0 {
                    break;
                }
                m += 1;
            }
        }
        Shape::CircularSector { radius, angle } => {
            let pi = std::f64::consts::PI;
            let mut m = 1i64;
            loop {
                let nu = m as f64 * pi / angle;
                if (nu / radius).powi(2) > e_max {
                    break;
                }
                let mut added = false;
                let mut n = 1i64;
                loop {
                    let k = bessel_zero_j(nu, n as usize) / radius;
                    if k * k > e_max {
                        break;
                    }
                    qns.push(QuantumNumbers::new(m, n));
                    added = true;
                    n += 1;
                }
                if !added {
                    break;
                }
                m += 1;
            }
        }
        Shape::CircularAnnulus { r_in, r_out } => {
            let mut m = 0i64;
            loop {
                let mut added = false;
                let mut n = 1i64;
                loop {
                    let k = cross_product_zero(m, r_in, r_out, n as usize);
                    if k * k > e_max {
                        break;
                    }
                    push_angular(&mut qns, m, n);
                    added = true;
                    n += 1;
                }
                if !added {
                    break;
                }
                m += 1;
            }
        }
        _ => return Err(BilliardError::Unsupported("not a radial shape".into())),
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

    #[test]
    fn disk_ground_energy_is_first_j0_zero_squared() {
        let st = Eigenstate::new(Shape::Disk { radius: 1.0 }, QuantumNumbers::new(0, 1)).unwrap();
        assert!((st.energy - 5.783_185_962_946_785).abs() < 1e-9);
    }

    #[test]
    fn disk_state_vanishes_on_rim() {
        let st = Eigenstate::new(
            Shape::Disk { radius: 1.0 },
            QuantumNumbers::with_class(3, 2, SymClass::Cos),
        )
        .unwrap();
        let mut peak = 0.0_f64;
        for i in 0..50 {
            let th = i as f64 * 0.13;
            let r = 0.02 + 0.96 * (i as f64 / 50.0);
            let v = st.jet_unchecked(Vec2::new(r * th.cos(), r * th.sin())).v;
            peak = peak.max(v.abs());
        }
        for i in 0..20 {
            let th = i as f64 * 0.31;
            let v = st.jet_unchecked(Vec2::new(th.cos(), th.sin())).v;
            assert!(v.abs() < 1e-9 * peak);
        }
    }

    #[test]
    fn annulus_radial_zero_at_both_rims() {
        let st = Eigenstate::new(
            Shape::CircularAnnulus { r_in: 0.4, r_out: 1.0 },
            QuantumNumbers::with_class(2, 3, SymClass::Sin),
        )
        .unwrap();
        for r in [0.4, 1.0] {
            let v = st.jet_unchecked(Vec2::new(r * 0.6f64.cos(), r * 0.6f64.sin())).v;
            assert!(v.abs() < 1e-8);
        }
    }

    #[test]
    fn sector_fractional_order() {
        let angle = 1.1;
        let st = Eigenstate::new(
            Shape::CircularSector { radius: 1.0, angle },
            QuantumNumbers::new(2, 1),
        )
        .unwrap();
        // vanishes on both straight edges and the arc
        for t in [0.15, 0.5, 0.85] {
            let v0 = st.jet_unchecked(Vec2::new(t, 0.0)).v;
            let v1 = st
                .jet_unchecked(Vec2::new(t * angle.cos(), t * angle.sin()))
                .v;
            let v2 = st
                .jet_unchecked(Vec2::new((t * angle).cos(), (t * angle).sin()))
                .v;
            assert!(v0.abs() < 1e-10 && v1.abs() < 1e-10 && v2.abs() < 1e-8);
        }
    }
}
