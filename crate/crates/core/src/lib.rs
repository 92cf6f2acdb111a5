//! Numerical laboratory for nodal patterns of planar quantum billiards.
//!
//! The crate provides closed-form eigenfunctions of the integrable billiard
//! families, samplers for random-wave ensembles, grid morphology (domain
//! counting, nodal-line extraction and measurement), exact difference-equation
//! nodal counts, distribution statistics, nodal-count trace formulas, the
//! Bogomolny-Schmit lattice model, current/vortex statistics for complex
//! fields, and Loewner driving-function extraction from nodal traces.
//!
//! Low-level geometry and field evaluation are generic over the scalar type
//! (`f32`/`f64`) through [`scalar::Real`]; the statistics and spectral layers
//! work in `f64` via the aliases exported at the crate root.

pub mod billiards;
pub mod exact;
pub mod flow;
pub mod geom;
pub mod io;
pub mod morphology;
pub mod percolation;
pub mod randwave;
pub mod rng;
pub mod scalar;
pub mod sle;
pub mod special;
pub mod stats;
pub mod trace;

pub use geom::{Jet2, Vec2};
pub use scalar::Real;

/// Working point type for the f64 layers.
pub type Point = Vec2<f64>;
/// Second-order jet (value, gradient, Hessian) at f64 precision.
pub type Jet = Jet2<f64>;

/// Scalar field exposing value, gradient, and Hessian at a point.
///
/// Plane-wave sums and closed-form eigenfunctions implement this exactly;
/// everything in [`morphology`] consumes fields through this trait.
pub trait ScalarField<T: Real>: Sync {
    fn jet(&self, p: Vec2<T>) -> Jet2<T>;
    /// Wavenumber k = sqrt(E) that sets the wavelength scale of the field.
    fn wavenumber(&self) -> T;
    fn value(&self, p: Vec2<T>) -> T {
        self.jet(p).v
    }
}

impl<T: Real, F: ScalarField<T> + ?Sized> ScalarField<T> for &F {
    fn jet(&self, p: Vec2<T>) -> Jet2<T> {
        (**self).jet(p)
    }
    fn wavenumber(&self) -> T {
        (**self).wavenumber()
    }
}

/// Complex field as a pair of real scalar fields sharing one wavenumber.
pub struct ComplexField<R, I> {
    pub re: R,
    pub im: I,
}

impl<R, I> ComplexField<R, I> {
    pub fn jets<T: Real>(&self, p: Vec2<T>) -> (Jet2<T>, Jet2<T>)
    where
        R: ScalarField<T>,
        I: ScalarField<T>,
    {
        (self.re.jet(p), self.im.jet(p))
    }
    pub fn wavenumber<T: Real>(&self) -> T
    where
        R: ScalarField<T>,
    {
        self.re.wavenumber()
    }
}
