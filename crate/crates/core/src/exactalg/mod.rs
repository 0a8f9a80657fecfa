//! Exact coefficient arithmetic: arbitrary-precision rationals, canonical
//! bivariate Laurent polynomials in `q,t`, the rational-function field over
//! them, and windowed `z`-Laurent series with generic coefficients.

mod gcd;
mod qtpoly;
mod qtrat;
pub mod strparse;
mod zseries;

pub use qtpoly::{Expt, QTPoly};
pub use qtrat::QTRat;
pub use zseries::{SeriesElem, ZSeries};
