//! Eigenfunctions built from plain trigonometric products: rectangle,
//! square, flat torus, right isosceles triangle, equilateral triangle.

use super::{BilliardError, QuantumNumbers, Result, Shape, SymClass};
use crate::geom::Jet2;
use crate::special::quad::simpson;
use crate::Point;

/// [f, f', f''] of a 1D trig factor at a point.
#[inline]
fn cos_factor(q: f64, x: f64) -> [f64; 3] {
    let (s, c) = (q * x).sin_cos();
    [c, -q * s, -q * q * c]
}

#[inline]
fn sin_factor(q: f64, x: f64) -> [f64; 3] {
    let (s, c) = (q * x).sin_cos();
    [s, q * c, -q * q * s]
}

#[inline]
fn prod_jet(f: [f64; 3], g: [f64; 3]) -> Jet2<f64> {
    Jet2::new(f[0] * g[0], f[1] * g[0], f[0] * g[1], f[2] * g[0], f[1] * g[1], f[0] * g[2])
}

enum Kind {
    /// sin(kx x) sin(ky y)
    Rect { kx: f64, ky: f64 },
    /// product of cos/sin factors with torus wavenumbers (constant allowed)
    Torus { kx: f64, ky: f64, cos_x: bool, cos_y: bool },
    /// sin(mx) sin(ny) - sin(nx) sin(my)
    Isosceles { m: f64, n: f64 },
    /// three-term equilateral form; `qs` are the signed x-frequencies
    Equilateral { beta: f64, gam: f64, ps: [f64; 3], qs: [f64; 3], cosine: bool },
}

pub struct TrigState {
    pub energy: f64,
    norm: f64,
    kind: Kind,
}

impl TrigState {
    pub fn jet(&self, p: Point) -> Jet2<f64> {
        let j = match &self.kind {
            Kind::Rect { kx, ky } => prod_jet(sin_factor(*kx, p.x), sin_factor(*ky, p.y)),
            Kind::Torus { kx, ky, cos_x, cos_y } => {
                let fx = if *cos_x { cos_factor(*kx, p.x) } else { sin_factor(*kx, p.x) };
                let fy = if *cos_y { cos_factor(*ky, p.y) } else { sin_factor(*ky, p.y) };
                prod_jet(fx, fy)
            }
            Kind::Isosceles { m, n } => {
                let a = prod_jet(sin_factor(*m, p.x), sin_factor(*n, p.y));
                let b = prod_jet(sin_factor(*n, p.x), sin_factor(*m, p.y));
                a.add(b.scaled(-1.0))
            }
            Kind::Equilateral { beta, gam, ps, qs, cosine } => {
                let mut acc = Jet2::default();
                let signs = [1.0, -1.0, 1.0];
                for i in 0..3 {
                    let fy = sin_factor(ps[i] * beta, p.y);
                    let fx = if *cosine {
                        cos_factor(qs[i] * gam, p.x)
                    } else {
                        sin_factor(qs[i] * gam, p.x)
                    };
                    acc = acc.add(prod_jet(fx, fy).scaled(signs[i]));
                }
                acc
            }
        };
        j.scaled(self.norm)
    }
}

fn rect_sides(shape: &Shape) -> (f64, f64) {
    match *shape {
        Shape::Rectangle { a, b } => (a, b),
        Shape::Square { side } => (side, side),
        _ => unreachable!(),
    }
}

pub fn build(shape: &Shape, qn: QuantumNumbers) -> Result<TrigState> {
    let pi = std::f64::consts::PI;
    let (m, n) = (qn.m, qn.n);
    match *shape {
        Shape::Rectangle { .. } | Shape::Square { .. } => {
            let (a, b) = rect_sides(shape);
            if m < 1 || n < 1 {
                return Err(BilliardError::Unsupported("rectangle needs m, n >= 1".into()));
            }
            let (kx, ky) = (m as f64 * pi / a, n as f64 * pi / b);
            Ok(TrigState {
                energy: kx * kx + ky * ky,
                norm: (4.0 / (a * b)).sqrt(),
                kind: Kind::Rect { kx, ky },
            })
        }
        Shape::FlatTorus { a, b } => {
            // (m, n) ranges over all of Z^2; the sign of each index selects
            // the cos (>= 0) or sin (< 0) member of the real product basis.
            let (kx, ky) = (2.0 * pi * m.unsigned_abs() as f64 / a, 2.0 * pi * n.unsigned_abs() as f64 / b);
            let cx = if m == 0 { a } else { a / 2.0 };
            let cy = if n == 0 { b } else { b / 2.0 };
            if (m == 0 && qn.m < 0) || (n == 0 && qn.n < 0) {
                return Err(BilliardError::Unsupported("torus: -0 index".into()));
            }
            Ok(TrigState {
                energy: kx * kx + ky * ky,
                norm: 1.0 / (cx * cy).sqrt(),
                kind: Kind::Torus { kx, ky, cos_x: m >= 0, cos_y: n >= 0 },
            })
        }
        Shape::RightIsosceles => {
            if !(m > n && n >= 1) {
                return Err(BilliardError::Unsupported(
                    "right isosceles needs m > n >= 1".into(),
                ));
            }
            Ok(TrigState {
                energy: (m * m + n * n) as f64,
                norm: 2.0 / pi,
                kind: Kind::Isosceles { m: m as f64, n: n as f64 },
            })
        }
        Shape::Equilateral { side } => {
            let cosine = match qn.class {
                SymClass::Cos => true,
                SymClass::Sin => false,
                _ => {
                    return Err(BilliardError::Unsupported(
                        "equilateral class must be cos or sin".into(),
                    ))
                }
            };
            if n < 1 || m < 2 * n || (!cosine && m == 2 * n) {
                return Err(BilliardError::Unsupported(
                    "equilateral needs m >= 2n (sine: m > 2n)".into(),
                ));
            }
            let beta = 2.0 * pi / (3f64.sqrt() * side);
            let gam = 2.0 * pi / (3.0 * side);
            let ps = [n as f64, m as f64, (m - n) as f64];
            let qs = [(2 * m - n) as f64, (2 * n - m) as f64, -((m + n) as f64)];
            let energy = 16.0 * pi * pi / (9.0 * side * side) * (m * m + n * n - m * n) as f64;
            let mut st = TrigState {
                energy,
                norm: 1.0,
                kind: Kind::Equilateral { beta, gam, ps, qs, cosine },
            };
            st.norm = 1.0 / equilateral_l2(&st, side).sqrt();
            Ok(st)
        }
        _ => Err(BilliardError::Unsupported("not a trig shape".into())),
    }
}

/// L2 norm of the unnormalized equilateral state: rows are integrated in
/// closed form, the outer y-integral by composite Simpson.
fn equilateral_l2(st: &TrigState, side: f64) -> f64 {
    let Kind::Equilateral { beta, gam, ps, qs, cosine } = &st.kind else {
        unreachable!()
    };
    let h = 3f64.sqrt() / 2.0 * side;
    let signs = [1.0, -1.0, 1.0];
    let row = |y: f64| {
        // x runs from y/sqrt(3) to side - y/sqrt(3)
        let x0 = y / 3f64.sqrt();
        let x1 = side - x0;
        let mut acc = 0.0;
        for i in 0..3 {
            for k in 0..3 {
                let ai = signs[i] * (ps[i] * beta * y).sin();
                let ak = signs[k] * (ps[k] * beta * y).sin();
                acc += ai * ak * trig_pair_integral(qs[i] * gam, qs[k] * gam, *cosine, x0, x1);
            }
        }
        acc
    };
    simpson(&row, 0.0, h, 8192)
}

/// Integral of cs(a x) cs(b x) over [x0, x1] (cs = cos or sin for both).
fn trig_pair_integral(a: f64, b: f64, cosine: bool, x0: f64, x1: f64) -> f64 {
    let prim_cos = |q: f64, x: f64| if q == 0.0 { x } else { (q * x).sin() / q };
    // cos a cos b = [cos(a-b) + cos(a+b)]/2 ; sin a sin b = [cos(a-b) - cos(a+b)]/2
    let d = a - b;
    let s = a + b;
    let part = |q: f64| prim_cos(q, x1) - prim_cos(q, x0);
    if cosine {
        0.5 * (part(d) + part(s))
    } else {
        0.5 * (part(d) - part(s))
    }
}

pub fn enumerate(shape: &Shape, e_max: f64) -> Result<Vec<super::Eigenstate>> {
    let pi = std::f64::consts::PI;
    let mut qns: Vec<QuantumNumbers> = Vec::new();
    match *shape {
        Shape::Rectangle { .. } | Shape::Square { .. } => {
            let (a, b) = rect_sides(shape);
            let m_max = (a * e_max.sqrt() / pi).floor() as i64;
            for m in 1..=m_max {
                let ex = (m as f64 * pi / a).powi(2);
                let n_max = ((e_max - ex).max(0.0).sqrt() * b / pi).floor() as i64;
                for n in 1..=n_max {
                    qns.push(QuantumNumbers::new(m, n));
                }
            }
        }
        Shape::FlatTorus { a, b } => {
            let m_max = (a * e_max.sqrt() / (2.0 * pi)).floor() as i64;
            for m in -m_max..=m_max {
                let ex = (2.0 * pi * m as f64 / a).powi(2);
                let n_max = ((e_max - ex).max(0.0).sqrt() * b / (2.0 * pi)).floor() as i64;
                for n in -n_max..=n_max {
                    if (m == 0 && m.is_negative()) || (n == 0 && n.is_negative()) {
                        continue;
                    }
                    qns.push(QuantumNumbers::new(m, n));
                }
            }
        }
        Shape::RightIsosceles => {
            let m_max = e_max.sqrt().floor() as i64;
            for m in 2..=m_max {
                for n in 1..m {
                    if (m * m + n * n) as f64 <= e_max {
                        qns.push(QuantumNumbers::new(m, n));
                    }
                }
            }
        }
        Shape::Equilateral { side } => {
            let scale = 16.0 * pi * pi / (9.0 * side * side);
            let mut n = 1i64;
            loop {
                let e_floor = scale * (3 * n * n) as f64; // E at m = 2n
                if e_floor > e_max {
                    break;
                }
                let mut m = 2 * n;
                loop {
                    let e = scale * (m * m + n * n - m * n) as f64;
                    if e > e_max {
                        break;
                    }
                    qns.push(QuantumNumbers::with_class(m, n, SymClass::Cos));
                    if m > 2 * n {
                        qns.push(QuantumNumbers::with_class(m, n, SymClass::Sin));
                    }
                    m += 1;
                }
                n += 1;
            }
        }
        _ => return Err(BilliardError::Unsupported("not a trig shape".into())),
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
    fn square_ground_state_peak() {
        let pi = std::f64::consts::PI;
        let st = Eigenstate::new(
            Shape::Square { side: pi },
            QuantumNumbers::new(1, 1),
        )
        .unwrap();
        let j = st.eval_field(Vec2::new(pi / 2.0, pi / 2.0)).unwrap();
        assert!((j.v - 2.0 / pi).abs() < 1e-14);
        assert!(j.dx.abs() < 1e-14 && j.dy.abs() < 1e-14);
    }

    #[test]
    fn isosceles_vanishes_on_diagonal() {
        let st = Eigenstate::new(Shape::RightIsosceles, QuantumNumbers::new(9, 4)).unwrap();
        for t in [0.3, 0.9, 2.1] {
            let j = st.jet_unchecked(Vec2::new(t, t));
            assert!(j.v.abs() < 1e-13);
        }
    }

    #[test]
    fn equilateral_tiling_of_scaled_state() {
        // psi_{10,2} is an exact 2x2 tiling of psi_{5,1}: values agree up to
        // overall normalization on the scaled-down subtriangle.
        let side = std::f64::consts::PI;
        let big = Eigenstate::new(
            Shape::Equilateral { side },
            QuantumNumbers::with_class(10, 2, SymClass::Cos),
        )
        .unwrap();
        let small = Eigenstate::new(
            Shape::Equilateral { side },
            QuantumNumbers::with_class(5, 1, SymClass::Cos),
        )
        .unwrap();
        // ratio at one interior point fixes the relative normalization
        let p0 = Vec2::new(0.21 * side, 0.11 * side);
        let r0 = big.jet_unchecked(p0.scale(0.5)).v / small.jet_unchecked(p0).v;
        for &(fx, fy) in &[(0.3, 0.2), (0.5, 0.4), (0.62, 0.18)] {
            let p = Vec2::new(fx * side, fy * side);
            if !matches!(big.shape, Shape::Equilateral { .. }) || !big.shape.inside(p) {
                continue;
            }
            let r = big.jet_unchecked(p.scale(0.5)).v / small.jet_unchecked(p).v;
            assert!((r - r0).abs() < 1e-9, "tiling ratio drifts: {r} vs {r0}");
        }
    }

    #[test]
    fn equilateral_sine_mode_at_m_eq_2n_is_identically_zero() {
        // excluded from enumeration; verify the identity on the raw form
        let side = std::f64::consts::PI;
        let beta = 2.0 * std::f64::consts::PI / (3f64.sqrt() * side);
        let gam = 2.0 * std::f64::consts::PI / (3.0 * side);
        let (m, n) = (6.0, 3.0);
        for &(x, y) in &[(0.7, 0.5), (1.9, 1.1), (2.2, 0.3)] {
            let v = (n * beta * y).sin() * ((2.0 * m - n) * gam * x).sin()
                - (m * beta * y).sin() * ((2.0 * n - m) * gam * x).sin()
                + ((m - n) * beta * y).sin() * (-(m + n) * gam * x).sin();
            assert!(v.abs() < 1e-12);
        }
    }

    #[test]
    fn torus_field_is_periodic() {
        let (a, b) = (1.0, 2f64.sqrt());
        let st = Eigenstate::new(
            Shape::FlatTorus { a, b },
            QuantumNumbers::new(2, -3),
        )
        .unwrap();
        let p = Vec2::new(0.31, 0.77);
        let v0 = st.jet_unchecked(p).v;
        let v1 = st.jet_unchecked(Vec2::new(p.x + a, p.y)).v;
        let v2 = st.jet_unchecked(Vec2::new(p.x, p.y + b)).v;
        assert!((v0 - v1).abs() < 1e-12 && (v0 - v2).abs() < 1e-12);
    }
}
