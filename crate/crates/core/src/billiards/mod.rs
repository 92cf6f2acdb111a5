//! Closed-form eigenfunctions, spectra, multiplicities, and Weyl counting
//! for the integrable billiard families.

mod coords;
mod ellipse;
mod ode;
mod parabolic;
mod radial;
mod trig;

pub use coords::ArcTable;
pub use ellipse::{EllipseState, EllipticAnnulusState};
pub use parabolic::ParabolicState;
pub use radial::RadialState;
pub use trig::TrigState;

use serde::{Deserialize, Serialize};

use crate::geom::{Jet2, Vec2};
use crate::special::gamma::ln_gamma;
use crate::{Point, ScalarField};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Bc {
    Dirichlet,
    Neumann,
}

#[derive(Debug, thiserror::Error)]
pub enum BilliardError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("point outside billiard domain")]
    OutsideDomain,
    #[error("unsupported shape/quantum-number combination: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, BilliardError>;

/// Billiard geometry. All lengths must be strictly positive.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum Shape {
    Rectangle { a: f64, b: f64 },
    Square { side: f64 },
    Disk { radius: f64 },
    CircularSector { radius: f64, angle: f64 },
    CircularAnnulus { r_in: f64, r_out: f64 },
    Ellipse { a: f64, b: f64 },
    /// Region between two confocal ellipses; the outer has semi-axes (a, b),
    /// the inner sits at the elliptic coordinate `xi_in` (0 < xi_in < xi_out).
    EllipticAnnulus { a: f64, b: f64, xi_in: f64 },
    /// Region between the confocal parabolas tau = tau0 and sigma = sigma0
    /// (x = tau sigma, y = (tau^2 - sigma^2)/2).
    ConfocalParabolic { tau0: f64, sigma0: f64 },
    /// Right isosceles triangle 0 < y < x < pi (legs of length pi).
    RightIsosceles,
    Equilateral { side: f64 },
    FlatTorus { a: f64, b: f64 },
}

impl Shape {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Shape::Rectangle { a, b } => a > 0.0 && b > 0.0,
            Shape::Square { side } => side > 0.0,
            Shape::Disk { radius } => radius > 0.0,
            Shape::CircularSector { radius, angle } => {
                radius > 0.0 && angle > 0.0 && angle <= 2.0 * std::f64::consts::PI
            }
            Shape::CircularAnnulus { r_in, r_out } => r_in > 0.0 && r_out > r_in,
            Shape::Ellipse { a, b } => a > b && b > 0.0,
            Shape::EllipticAnnulus { a, b, xi_in } => {
                a > b && b > 0.0 && xi_in > 0.0 && xi_in < (b / (a * a - b * b).sqrt()).asinh()
            }
            Shape::ConfocalParabolic { tau0, sigma0 } => tau0 > 0.0 && sigma0 > 0.0,
            Shape::RightIsosceles => true,
            Shape::Equilateral { side } => side > 0.0,
            Shape::FlatTorus { a, b } => a > 0.0 && b > 0.0,
        };
        if ok {
            Ok(())
        } else {
            Err(BilliardError::Config(format!("{self:?}")))
        }
    }

    /// Flat-torus aspect ratio tau = a/b, where applicable.
    pub fn aspect_ratio(&self) -> Option<f64> {
        match *self {
            Shape::FlatTorus { a, b } | Shape::Rectangle { a, b } => Some(a / b),
            Shape::Square { .. } => Some(1.0),
            _ => None,
        }
    }

    /// Focal distance of the confocal elliptic families.
    pub fn focal(&self) -> Option<f64> {
        match *self {
            Shape::Ellipse { a, b } | Shape::EllipticAnnulus { a, b, .. } => {
                Some((a * a - b * b).sqrt())
            }
            _ => None,
        }
    }

    pub fn area(&self) -> f64 {
        use std::f64::consts::PI;
        match *self {
            Shape::Rectangle { a, b } => a * b,
            Shape::Square { side } => side * side,
            Shape::Disk { radius } => PI * radius * radius,
            Shape::CircularSector { radius, angle } => 0.5 * radius * radius * angle,
            Shape::CircularAnnulus { r_in, r_out } => PI * (r_out * r_out - r_in * r_in),
            Shape::Ellipse { a, b } => PI * a * b,
            Shape::EllipticAnnulus { a, b, xi_in } => {
                let f = (a * a - b * b).sqrt();
                PI * (a * b - f * f * xi_in.cosh() * xi_in.sinh())
            }
            Shape::ConfocalParabolic { tau0, sigma0 } => {
                (2.0 / 3.0) * tau0 * sigma0 * (tau0 * tau0 + sigma0 * sigma0)
            }
            Shape::RightIsosceles => 0.5 * PI * PI,
            Shape::Equilateral { side } => 3f64.sqrt() / 4.0 * side * side,
            Shape::FlatTorus { a, b } => a * b,
        }
    }

    pub fn perimeter(&self) -> f64 {
        use std::f64::consts::PI;
        match *self {
            Shape::Rectangle { a, b } => 2.0 * (a + b),
            Shape::Square { side } => 4.0 * side,
            Shape::Disk { radius } => 2.0 * PI * radius,
            Shape::CircularSector { radius, angle } => radius * (2.0 + angle),
            Shape::CircularAnnulus { r_in, r_out } => 2.0 * PI * (r_in + r_out),
            Shape::Ellipse { a, b } => ellipse_perimeter(a, b),
            Shape::EllipticAnnulus { a, b, xi_in } => {
                let f = (a * a - b * b).sqrt();
                ellipse_perimeter(a, b) + ellipse_perimeter(f * xi_in.cosh(), f * xi_in.sinh())
            }
            Shape::ConfocalParabolic { tau0, sigma0 } => {
                // two arcs of tau = +-tau0 plus the sigma = sigma0 arc
                2.0 * arc_len(tau0, sigma0) + 2.0 * arc_len(sigma0, tau0)
            }
            Shape::RightIsosceles => 2.0 * PI + PI * 2f64.sqrt(),
            Shape::Equilateral { side } => 3.0 * side,
            Shape::FlatTorus { .. } => 0.0,
        }
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        match *self {
            Shape::Rectangle { a, b } => (Vec2::new(0.0, 0.0), Vec2::new(a, b)),
            Shape::Square { side } => (Vec2::new(0.0, 0.0), Vec2::new(side, side)),
            Shape::Disk { radius } => (Vec2::new(-radius, -radius), Vec2::new(radius, radius)),
            Shape::CircularSector { radius, angle } => {
                // conservative box containing the sector
                let lo_y = if angle >= std::f64::consts::PI { -radius } else { 0.0_f64.min(radius * angle.sin()) };
                let lo_x = if angle >= std::f64::consts::PI { -radius } else { 0.0_f64.min(radius * angle.cos()) };
                (Vec2::new(lo_x, lo_y), Vec2::new(radius, radius))
            }
            Shape::CircularAnnulus { r_out, .. } => {
                (Vec2::new(-r_out, -r_out), Vec2::new(r_out, r_out))
            }
            Shape::Ellipse { a, b } => (Vec2::new(-a, -b), Vec2::new(a, b)),
            Shape::EllipticAnnulus { a, b, .. } => (Vec2::new(-a, -b), Vec2::new(a, b)),
            Shape::ConfocalParabolic { tau0, sigma0 } => (
                Vec2::new(-tau0 * sigma0, -0.5 * sigma0 * sigma0),
                Vec2::new(tau0 * sigma0, 0.5 * tau0 * tau0),
            ),
            Shape::RightIsosceles => (Vec2::new(0.0, 0.0), Vec2::new(std::f64::consts::PI, std::f64::consts::PI)),
            Shape::Equilateral { side } => {
                (Vec2::new(0.0, 0.0), Vec2::new(side, 3f64.sqrt() / 2.0 * side))
            }
            Shape::FlatTorus { a, b } => (Vec2::new(0.0, 0.0), Vec2::new(a, b)),
        }
    }

    pub fn inside(&self, p: Point) -> bool {
        match *self {
            Shape::Rectangle { a, b } => p.x > 0.0 && p.x < a && p.y > 0.0 && p.y < b,
            Shape::Square { side } => p.x > 0.0 && p.x < side && p.y > 0.0 && p.y < side,
            Shape::Disk { radius } => p.x * p.x + p.y * p.y < radius * radius,
            Shape::CircularSector { radius, angle } => {
                let r2 = p.x * p.x + p.y * p.y;
                if r2 >= radius * radius || r2 == 0.0 {
                    return false;
                }
                let th = p.y.atan2(p.x).rem_euclid(2.0 * std::f64::consts::PI);
                th > 0.0 && th < angle
            }
            Shape::CircularAnnulus { r_in, r_out } => {
                let r2 = p.x * p.x + p.y * p.y;
                r2 > r_in * r_in && r2 < r_out * r_out
            }
            Shape::Ellipse { a, b } => {
                (p.x / a) * (p.x / a) + (p.y / b) * (p.y / b) < 1.0
            }
            Shape::EllipticAnnulus { a, b, xi_in } => {
                let f = (a * a - b * b).sqrt();
                let (ai, bi) = (f * xi_in.cosh(), f * xi_in.sinh());
                (p.x / a) * (p.x / a) + (p.y / b) * (p.y / b) < 1.0
                    && (p.x / ai) * (p.x / ai) + (p.y / bi) * (p.y / bi) > 1.0
            }
            Shape::ConfocalParabolic { tau0, sigma0 } => {
                let r = (p.x * p.x + p.y * p.y).sqrt();
                r - p.y < sigma0 * sigma0 && r + p.y < tau0 * tau0
            }
            Shape::RightIsosceles => {
                p.y > 0.0 && p.x < std::f64::consts::PI && p.y < p.x
            }
            Shape::Equilateral { side } => {
                let h = 3f64.sqrt();
                p.y > 0.0 && p.y < h * p.x && p.y < h * (side - p.x)
            }
            Shape::FlatTorus { a, b } => p.x >= 0.0 && p.x < a && p.y >= 0.0 && p.y < b,
        }
    }

    pub fn has_boundary(&self) -> bool {
        !matches!(self, Shape::FlatTorus { .. })
    }

    /// Closed boundary loops as arclength tables (counterclockwise outer
    /// loops; inner annulus loops run clockwise so the outward normal is
    /// consistently tangent-rotated).
    pub fn boundary_loops(&self) -> Vec<ArcTable> {
        let n = 16384;
        use std::f64::consts::PI;
        let circle = |r: f64, cw: bool| {
            move |t: f64| {
                let a = 2.0 * PI * if cw { -t } else { t };
                (r * a.cos(), r * a.sin())
            }
        };
        match *self {
            Shape::Rectangle { a, b } => vec![ArcTable::build(&rect_loop(a, b), n)],
            Shape::Square { side } => vec![ArcTable::build(&rect_loop(side, side), n)],
            Shape::Disk { radius } => vec![ArcTable::build(&circle(radius, false), n)],
            Shape::CircularSector { radius, angle } => {
                let g = move |t: f64| sector_loop(radius, angle, t);
                vec![ArcTable::build(&g, n)]
            }
            Shape::CircularAnnulus { r_in, r_out } => vec![
                ArcTable::build(&circle(r_out, false), n),
                ArcTable::build(&circle(r_in, true), n),
            ],
            Shape::Ellipse { a, b } => {
                let g = move |t: f64| {
                    let th = 2.0 * PI * t;
                    (a * th.cos(), b * th.sin())
                };
                vec![ArcTable::build(&g, n)]
            }
            Shape::EllipticAnnulus { a, b, xi_in } => {
                let f = (a * a - b * b).sqrt();
                let (ai, bi) = (f * xi_in.cosh(), f * xi_in.sinh());
                let go = move |t: f64| {
                    let th = 2.0 * PI * t;
                    (a * th.cos(), b * th.sin())
                };
                let gi = move |t: f64| {
                    let th = -2.0 * PI * t;
                    (ai * th.cos(), bi * th.sin())
                };
                vec![ArcTable::build(&go, n), ArcTable::build(&gi, n)]
            }
            Shape::ConfocalParabolic { tau0, sigma0 } => {
                let g = move |t: f64| parabolic_loop(tau0, sigma0, t);
                vec![ArcTable::build(&g, n)]
            }
            Shape::RightIsosceles => {
                let v = [(0.0, 0.0), (PI, 0.0), (PI, PI)];
                vec![ArcTable::build(&polygon_loop(v.to_vec()), n)]
            }
            Shape::Equilateral { side } => {
                let v = [(0.0, 0.0), (side, 0.0), (0.5 * side, 3f64.sqrt() / 2.0 * side)];
                vec![ArcTable::build(&polygon_loop(v.to_vec()), n)]
            }
            Shape::FlatTorus { .. } => Vec::new(),
        }
    }
}

fn rect_loop(a: f64, b: f64) -> impl Fn(f64) -> (f64, f64) {
    move |t: f64| polygon_loop(vec![(0.0, 0.0), (a, 0.0), (a, b), (0.0, b)])(t)
}

fn polygon_loop(vertices: Vec<(f64, f64)>) -> impl Fn(f64) -> (f64, f64) {
    let n = vertices.len();
    let lens: Vec<f64> = (0..n)
        .map(|i| {
            let (x0, y0) = vertices[i];
            let (x1, y1) = vertices[(i + 1) % n];
            ((x1 - x0).powi(2) + (y1 - y0).powi(2)).sqrt()
        })
        .collect();
    let total: f64 = lens.iter().sum();
    move |t: f64| {
        let mut s = t.rem_euclid(1.0) * total;
        for i in 0..n {
            if s <= lens[i] || i == n - 1 {
                let f = (s / lens[i]).min(1.0);
                let (x0, y0) = vertices[i];
                let (x1, y1) = vertices[(i + 1) % n];
                return (x0 + f * (x1 - x0), y0 + f * (y1 - y0));
            }
            s -= lens[i];
        }
        vertices[0]
    }
}

fn sector_loop(radius: f64, angle: f64, t: f64) -> (f64, f64) {
    // CCW: outgoing radius, arc, incoming radius.
    let arc = radius * angle;
    let total = 2.0 * radius + arc;
    let mut s = t.rem_euclid(1.0) * total;
    if s <= radius {
        return (s, 0.0);
    }
    s -= radius;
    if s <= arc {
        let th = s / radius;
        return (radius * th.cos(), radius * th.sin());
    }
    s -= arc;
    let f = 1.0 - s / radius;
    (radius * f * angle.cos(), radius * f * angle.sin())
}

fn parabolic_loop(tau0: f64, sigma0: f64, t: f64) -> (f64, f64) {
    // CCW: sigma = sigma0 arc (tau from -tau0 to tau0), then tau = tau0
    // (sigma from sigma0 to 0), its mirror handled by symmetry of the map.
    let la = arc_len(sigma0, tau0); // along sigma-arc, tau varies
    let lb = arc_len(tau0, sigma0);
    let total = 2.0 * la + 2.0 * lb;
    let mut s = t.rem_euclid(1.0) * total;
    let xy = |tau: f64, sigma: f64| (tau * sigma, 0.5 * (tau * tau - sigma * sigma));
    // bottom arc sigma = sigma0, tau: -tau0 -> tau0 (by arclength in tau)
    if s <= 2.0 * la {
        let tau = invert_arc(sigma0, tau0, s - la);
        return xy(tau, sigma0);
    }
    s -= 2.0 * la;
    // tau = tau0, sigma: sigma0 -> 0, then mirror: tau = -tau0, sigma: 0 -> sigma0
    if s <= lb {
        let sig = invert_arc(tau0, sigma0, arc_len(tau0, sigma0) - s).abs();
        return xy(tau0, sig);
    }
    s -= lb;
    let sig = invert_arc(tau0, sigma0, s).abs();
    xy(-tau0, sig)
}

/// Arclength along a confocal parabola at fixed coordinate `fixed`, from the
/// apex to parameter value `var`: ds = sqrt(fixed^2 + u^2) du.
fn arc_len(fixed: f64, var: f64) -> f64 {
    let a = fixed;
    0.5 * (var * (a * a + var * var).sqrt() + a * a * (var / a).asinh())
}

fn invert_arc(fixed: f64, var_max: f64, s: f64) -> f64 {
    // monotone; bisect
    let target = s.clamp(-arc_len(fixed, var_max), arc_len(fixed, var_max));
    let f = |u: f64| arc_len(fixed, u) - target;
    crate::special::roots::bisect(&f, -var_max, var_max, 1e-12, 200)
}

fn ellipse_perimeter(a: f64, b: f64) -> f64 {
    let f = |t: f64| {
        let (s, c) = t.sin_cos();
        ((a * s).powi(2) + (b * c).powi(2)).sqrt()
    };
    crate::special::quad::simpson(&f, 0.0, 2.0 * std::f64::consts::PI, 4096)
}

/// Symmetry class tag attached to quantum numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SymClass {
    /// No class distinction (rectangle, triangles, m = 0 radial states).
    None,
    /// cos(m theta) angular factor / equilateral symmetric mode.
    Cos,
    /// sin(m theta) angular factor / equilateral antisymmetric mode.
    Sin,
    /// Ellipse parities with respect to the (major, minor) axes.
    PP,
    PM,
    MP,
    MM,
    /// Confocal-parabolic even/odd classes.
    Even,
    Odd,
}

impl SymClass {
    /// Tie-break rank inside a degenerate level.
    pub fn rank(self) -> u8 {
        match self {
            SymClass::None => 0,
            SymClass::Cos => 1,
            SymClass::Sin => 2,
            SymClass::PP => 1,
            SymClass::PM => 2,
            SymClass::MP => 3,
            SymClass::MM => 4,
            SymClass::Even => 1,
            SymClass::Odd => 2,
        }
    }
    pub fn label(self) -> &'static str {
        match self {
            SymClass::None => "-",
            SymClass::Cos => "cos",
            SymClass::Sin => "sin",
            SymClass::PP => "++",
            SymClass::PM => "+-",
            SymClass::MP => "-+",
            SymClass::MM => "--",
            SymClass::Even => "even",
            SymClass::Odd => "odd",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub m: i64,
    pub n: i64,
    pub class: SymClass,
}

impl QuantumNumbers {
    pub fn new(m: i64, n: i64) -> Self {
        Self { m, n, class: SymClass::None }
    }
    pub fn with_class(m: i64, n: i64, class: SymClass) -> Self {
        Self { m, n, class }
    }
}

/// One eigenstate with its closed-form evaluator.
pub struct Eigenstate {
    pub shape: Shape,
    pub qn: QuantumNumbers,
    pub energy: f64,
    eval: EvalKind,
}

impl std::fmt::Debug for Eigenstate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Eigenstate")
            .field("shape", &self.shape)
            .field("qn", &self.qn)
            .field("energy", &self.energy)
            .finish()
    }
}

pub(crate) enum EvalKind {
    Trig(TrigState),
    Radial(RadialState),
    Ellipse(EllipseState),
    EllipticAnnulus(EllipticAnnulusState),
    Parabolic(ParabolicState),
}

impl Eigenstate {
    /// Construct the state for given shape and quantum numbers, solving the
    /// transcendental eigenvalue problem where one arises.
    pub fn new(shape: Shape, qn: QuantumNumbers) -> Result<Self> {
        shape.validate()?;
        let (energy, eval) = match &shape {
            Shape::Rectangle { .. }
            | Shape::Square { .. }
            | Shape::RightIsosceles
            | Shape::Equilateral { .. }
            | Shape::FlatTorus { .. } => {
                let st = trig::build(&shape, qn)?;
                (st.energy, EvalKind::Trig(st))
            }
            Shape::Disk { .. } | Shape::CircularSector { .. } | Shape::CircularAnnulus { .. } => {
                let st = radial::build(&shape, qn)?;
                (st.energy, EvalKind::Radial(st))
            }
            Shape::Ellipse { .. } => {
                let st = ellipse::build(&shape, qn)?;
                (st.energy, EvalKind::Ellipse(st))
            }
            Shape::EllipticAnnulus { .. } => {
                let st = ellipse::build_annulus(&shape, qn)?;
                (st.energy, EvalKind::EllipticAnnulus(st))
            }
            Shape::ConfocalParabolic { .. } => {
                let st = parabolic::build(&shape, qn)?;
                (st.energy, EvalKind::Parabolic(st))
            }
        };
        Ok(Self { shape, qn, energy, eval })
    }

    pub fn wavenumber(&self) -> f64 {
        self.energy.sqrt()
    }

    /// Checked evaluation: value, gradient, Hessian at an interior point.
    pub fn eval_field(&self, p: Point) -> Result<Jet2<f64>> {
        if !self.shape.inside(p) && !self.on_boundary(p, 1e-12) {
            return Err(BilliardError::OutsideDomain);
        }
        Ok(self.jet_unchecked(p))
    }

    fn on_boundary(&self, p: Point, tol: f64) -> bool {
        // cheap proximity test via the inside predicate on nudged points
        let eps = tol.max(1e-12);
        for (dx, dy) in [(eps, 0.0), (-eps, 0.0), (0.0, eps), (0.0, -eps)] {
            if self.shape.inside(Vec2::new(p.x + dx, p.y + dy)) {
                return true;
            }
        }
        false
    }

    /// Unchecked evaluation (the closed forms continue smoothly outside).
    pub fn jet_unchecked(&self, p: Point) -> Jet2<f64> {
        match &self.eval {
            EvalKind::Trig(s) => s.jet(p),
            EvalKind::Radial(s) => s.jet(p),
            EvalKind::Ellipse(s) => s.jet(p),
            EvalKind::EllipticAnnulus(s) => s.jet(p),
            EvalKind::Parabolic(s) => s.jet(p),
        }
    }
}

impl ScalarField<f64> for Eigenstate {
    fn jet(&self, p: Point) -> Jet2<f64> {
        self.jet_unchecked(p)
    }
    fn wavenumber(&self) -> f64 {
        self.energy.sqrt()
    }
}

#[derive(Debug)]
pub struct SpectrumEntry {
    /// 1-based index counting multiplicity.
    pub j: usize,
    pub state: Eigenstate,
}

impl SpectrumEntry {
    pub fn energy(&self) -> f64 {
        self.state.energy
    }
}

/// Complete spectrum up to `e_max`, ordered by energy with the tie-break
/// (ascending first quantum number, then class rank, then second number).
pub fn enumerate_spectrum(shape: &Shape, e_max: f64) -> Result<Vec<SpectrumEntry>> {
    shape.validate()?;
    let mut states = match shape {
        Shape::Rectangle { .. }
        | Shape::Square { .. }
        | Shape::RightIsosceles
        | Shape::Equilateral { .. }
        | Shape::FlatTorus { .. } => trig::enumerate(shape, e_max)?,
        Shape::Disk { .. } | Shape::CircularSector { .. } | Shape::CircularAnnulus { .. } => {
            radial::enumerate(shape, e_max)?
        }
        Shape::Ellipse { .. } => ellipse::enumerate(shape, e_max)?,
        Shape::EllipticAnnulus { .. } => ellipse::enumerate_annulus(shape, e_max)?,
        Shape::ConfocalParabolic { .. } => parabolic::enumerate(shape, e_max)?,
    };
    states.sort_by(|a, b| {
        a.energy
            .partial_cmp(&b.energy)
            .unwrap()
            .then(a.qn.m.cmp(&b.qn.m))
            .then(a.qn.class.rank().cmp(&b.qn.class.rank()))
            .then(a.qn.n.cmp(&b.qn.n))
    });
    Ok(states
        .into_iter()
        .enumerate()
        .map(|(i, state)| SpectrumEntry { j: i + 1, state })
        .collect())
}

/// Number of ordered pairs (m, n), m, n >= 1, with m^2 + n^2 = e.
pub fn multiplicity_square(e: i64) -> i64 {
    if e <= 1 {
        return 0;
    }
    let mut count = 0;
    let mut m = 1i64;
    while m * m < e {
        let rest = e - m * m;
        let n = (rest as f64).sqrt().round() as i64;
        if n >= 1 && n * n == rest {
            count += 1;
        }
        m += 1;
    }
    count
}

/// Sum-of-two-squares count from the prime factorization: product of
/// (r_i + 1) over primes p_i = 1 mod 4, zero if any 3-mod-4 exponent is odd,
/// minus the axis representation when e is a perfect square.
pub fn multiplicity_square_formula(e: i64) -> i64 {
    if e <= 1 {
        return 0;
    }
    let mut rem = e;
    let mut prod: i64 = 1;
    let mut p = 2i64;
    while p * p <= rem {
        if rem % p == 0 {
            let mut r = 0;
            while rem % p == 0 {
                rem /= p;
                r += 1;
            }
            if p % 4 == 1 {
                prod *= r + 1;
            } else if p % 4 == 3 && r % 2 == 1 {
                return 0;
            }
        }
        p += 1;
    }
    if rem > 1 {
        if rem % 4 == 1 {
            prod *= 2;
        } else if rem % 4 == 3 {
            return 0;
        }
    }
    let root = (e as f64).sqrt().round() as i64;
    let is_square = root * root == e;
    prod - if is_square { 1 } else { 0 }
}

/// Two-term Weyl counting function N(E) = A E / 4 pi -+ P sqrt(E) / 4 pi.
pub fn weyl_count(shape: &Shape, e: f64, bc: Bc) -> f64 {
    if e <= 0.0 {
        return 0.0;
    }
    let pi = std::f64::consts::PI;
    let bulk = shape.area() * e / (4.0 * pi);
    let edge = shape.perimeter() * e.sqrt() / (4.0 * pi);
    match bc {
        Bc::Dirichlet => bulk - edge,
        Bc::Neumann => bulk + edge,
    }
}

/// s-dimensional Dirichlet cuboid (used by the nodal-volume statistics).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cuboid {
    pub sides: Vec<f64>,
}

impl Cuboid {
    pub fn new(sides: Vec<f64>) -> Result<Self> {
        if sides.is_empty() || sides.iter().any(|&s| s <= 0.0) {
            return Err(BilliardError::Config("cuboid sides".into()));
        }
        Ok(Self { sides })
    }
    pub fn dim(&self) -> usize {
        self.sides.len()
    }
    pub fn volume(&self) -> f64 {
        self.sides.iter().product()
    }
    /// (s-1)-volume of the surface: 2 V sum(1/a_l).
    pub fn surface(&self) -> f64 {
        2.0 * self.volume() * self.sides.iter().map(|a| 1.0 / a).sum::<f64>()
    }
    /// Weyl counting function with the boundary correction.
    pub fn weyl(&self, e: f64, bc: Bc) -> f64 {
        if e <= 0.0 {
            return 0.0;
        }
        let s = self.dim() as f64;
        let pi = std::f64::consts::PI;
        let bulk = unit_ball_volume(self.dim()) * self.volume() * e.powf(s / 2.0)
            / (2f64.powf(s) * pi.powf(s));
        let edge = unit_ball_volume(self.dim() - 1) * self.surface() * e.powf((s - 1.0) / 2.0)
            / (2f64.powf(s + 1.0) * pi.powf(s - 1.0));
        match bc {
            Bc::Dirichlet => bulk - edge,
            Bc::Neumann => bulk + edge,
        }
    }
    /// All states with E <= e_max as (quantum numbers, energy).
    pub fn enumerate(&self, e_max: f64) -> Vec<(Vec<i64>, f64)> {
        let mut out = Vec::new();
        let mut n = vec![1i64; self.dim()];
        let pi = std::f64::consts::PI;
        'outer: loop {
            let e: f64 = n
                .iter()
                .zip(&self.sides)
                .map(|(&k, &a)| (pi * k as f64 / a).powi(2))
                .sum();
            if e <= e_max {
                out.push((n.clone(), e));
                n[0] += 1;
                continue;
            }
            // carry
            let mut d = 0;
            loop {
                n[d] = 1;
                d += 1;
                if d == self.dim() {
                    break 'outer;
                }
                n[d] += 1;
                let e: f64 = n
                    .iter()
                    .zip(&self.sides)
                    .map(|(&k, &a)| (pi * k as f64 / a).powi(2))
                    .sum();
                if e <= e_max {
                    break;
                }
            }
        }
        out.sort_by(|a, b| a.1.partial_cmp(&b.1).unwrap());
        out
    }
}

/// Volume of the unit ball in d dimensions.
pub fn unit_ball_volume(d: usize) -> f64 {
    let d = d as f64;
    (d / 2.0 * std::f64::consts::PI.ln() - ln_gamma(d / 2.0 + 1.0)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicity_examples() {
        assert_eq!(multiplicity_square(65), 4);
        assert_eq!(multiplicity_square(10), 2);
        assert_eq!(multiplicity_square(3), 0);
        assert_eq!(multiplicity_square(1), 0);
        assert_eq!(multiplicity_square(2), 1);
        assert_eq!(multiplicity_square(25), 2);
    }

    #[test]
    fn multiplicity_formula_cross_check() {
        for e in 2..2000 {
            assert_eq!(
                multiplicity_square(e),
                multiplicity_square_formula(e),
                "e = {e}"
            );
        }
    }

    #[test]
    fn weyl_square_example() {
        let sq = Shape::Square { side: std::f64::consts::PI };
        let n = weyl_count(&sq, 26.0, Bc::Dirichlet);
        assert!((n - 15.32).abs() < 0.02);
        assert!(weyl_count(&sq, 1e-12, Bc::Dirichlet).abs() < 1e-6);
    }

    #[test]
    fn unit_ball_volumes() {
        assert!((unit_ball_volume(1) - 2.0).abs() < 1e-12);
        assert!((unit_ball_volume(2) - std::f64::consts::PI).abs() < 1e-12);
        assert!((unit_ball_volume(3) - 4.0 / 3.0 * std::f64::consts::PI).abs() < 1e-12);
    }

    #[test]
    fn parabolic_geometry_consistency() {
        use rand::Rng;
        let shape = Shape::ConfocalParabolic { tau0: 1.2, sigma0: 0.9 };
        // Monte-Carlo area check
        let (lo, hi) = shape.bounding_box();
        let mut rng = crate::rng::sample_rng(42, 0);
        let mut inside = 0usize;
        let n = 200_000;
        for _ in 0..n {
            let x = lo.x + (hi.x - lo.x) * rng.gen::<f64>();
            let y = lo.y + (hi.y - lo.y) * rng.gen::<f64>();
            if shape.inside(Vec2::new(x, y)) {
                inside += 1;
            }
        }
        let mc = (hi.x - lo.x) * (hi.y - lo.y) * inside as f64 / n as f64;
        assert!((mc - shape.area()).abs() / shape.area() < 0.02);
        // boundary loop length vs closed-form perimeter
        let loops = shape.boundary_loops();
        let len: f64 = loops.iter().map(|l| l.length()).sum();
        assert!((len - shape.perimeter()).abs() / shape.perimeter() < 1e-3);
    }
}
