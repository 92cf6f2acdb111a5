//! Special functions and small numerical kernels.

pub mod bessel;
pub mod gamma;
pub mod linalg;
pub mod quad;
pub mod roots;

pub use bessel::{
    bessel_j, bessel_j_nu, bessel_jn, bessel_k0, bessel_y, bessel_zero_j,
    cross_product_zero,
};
pub use gamma::ln_gamma;
pub use quad::{adaptive_simpson, simpson};
pub use roots::{bisect, newton_bisect};
