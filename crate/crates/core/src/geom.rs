//! Plane geometry primitives shared by the field and morphology layers.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::scalar::Real;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Vec2<T> {
    pub x: T,
    pub y: T,
}

impl<T: Real> Vec2<T> {
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }
    #[inline]
    pub fn dot(self, o: Self) -> T {
        self.x * o.x + self.y * o.y
    }
    /// z-component of the 2D cross product.
    #[inline]
    pub fn cross(self, o: Self) -> T {
        self.x * o.y - self.y * o.x
    }
    #[inline]
    pub fn norm(self) -> T {
        self.dot(self).sqrt()
    }
    #[inline]
    pub fn dist(self, o: Self) -> T {
        (self - o).norm()
    }
    #[inline]
    pub fn scale(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl<T: Real> Add for Vec2<T> {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.x + o.x, self.y + o.y)
    }
}
impl<T: Real> Sub for Vec2<T> {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.x - o.x, self.y - o.y)
    }
}
impl<T: Real> Neg for Vec2<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}
impl<T: Real> Mul<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        self.scale(s)
    }
}
impl<T: Real> Div<T> for Vec2<T> {
    type Output = Self;
    #[inline]
    fn div(self, s: T) -> Self {
        Self::new(self.x / s, self.y / s)
    }
}

/// Second-order jet of a scalar field: value, gradient, Hessian.
#[derive(Clone, Copy, Debug, Default)]
pub struct Jet2<T> {
    pub v: T,
    pub dx: T,
    pub dy: T,
    pub dxx: T,
    pub dxy: T,
    pub dyy: T,
}

impl<T: Real> Jet2<T> {
    pub const fn new(v: T, dx: T, dy: T, dxx: T, dxy: T, dyy: T) -> Self {
        Self { v, dx, dy, dxx, dxy, dyy }
    }
    #[inline]
    pub fn grad(&self) -> Vec2<T> {
        Vec2::new(self.dx, self.dy)
    }
    #[inline]
    pub fn laplacian(&self) -> T {
        self.dxx + self.dyy
    }
    #[inline]
    pub fn add(mut self, o: Self) -> Self {
        self.v += o.v;
        self.dx += o.dx;
        self.dy += o.dy;
        self.dxx += o.dxx;
        self.dxy += o.dxy;
        self.dyy += o.dyy;
        self
    }
    #[inline]
    pub fn scaled(mut self, s: T) -> Self {
        self.v = self.v * s;
        self.dx = self.dx * s;
        self.dy = self.dy * s;
        self.dxx = self.dxx * s;
        self.dxy = self.dxy * s;
        self.dyy = self.dyy * s;
        self
    }
    /// Jet of the product of two fields at a point.
    pub fn product(a: Self, b: Self) -> Self {
        Self {
            v: a.v * b.v,
            dx: a.dx * b.v + a.v * b.dx,
            dy: a.dy * b.v + a.v * b.dy,
            dxx: a.dxx * b.v + T::of(2.0) * a.dx * b.dx + a.v * b.dxx,
            dxy: a.dxy * b.v + a.dx * b.dy + a.dy * b.dx + a.v * b.dxy,
            dyy: a.dyy * b.v + T::of(2.0) * a.dy * b.dy + a.v * b.dyy,
        }
    }
}

/// Signed curvature of the level line of a field at a point on the line,
/// kappa = (ux^2 uxx + uy^2 uyy - 2 ux uy uxy) / |grad u|^3.
pub fn level_curvature<T: Real>(j: &Jet2<T>) -> T {
    let g2 = j.dx * j.dx + j.dy * j.dy;
    let num = j.dx * j.dx * j.dxx + j.dy * j.dy * j.dyy
        - T::of(2.0) * j.dx * j.dy * j.dxy;
    num / (g2 * g2.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_jet_matches_hand_expansion() {
        // f = x^2, g = y  ->  fg = x^2 y
        let p = (1.5f64, 2.0f64);
        let a = Jet2::new(p.0 * p.0, 2.0 * p.0, 0.0, 2.0, 0.0, 0.0);
        let b = Jet2::new(p.1, 0.0, 1.0, 0.0, 0.0, 0.0);
        let j = Jet2::product(a, b);
        assert_eq!(j.v, p.0 * p.0 * p.1);
        assert_eq!(j.dx, 2.0 * p.0 * p.1);
        assert_eq!(j.dy, p.0 * p.0);
        assert_eq!(j.dxx, 2.0 * p.1);
        assert_eq!(j.dxy, 2.0 * p.0);
        assert_eq!(j.dyy, 0.0);
    }

    #[test]
    fn curvature_of_circular_level_line() {
        // u = x^2 + y^2 - r^2 has level-line curvature 1/r (up to sign).
        let r = 2.0f64;
        let p = Vec2::new(r, 0.0);
        let j = Jet2::new(0.0, 2.0 * p.x, 2.0 * p.y, 2.0, 0.0, 2.0);
        assert!((level_curvature(&j).abs() - 1.0 / r).abs() < 1e-14);
    }
}
