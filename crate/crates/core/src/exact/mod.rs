//! Exact arithmetic used by the signature engine: rational symmetric
//! matrices, univariate polynomials over ℚ with Sturm root counting, and
//! cyclotomic polynomials.

pub mod cyclotomic;
pub mod matrix;
pub mod poly;

pub use poly::QPoly;
