//! Exact computer algebra for ideals of points on rational normal
//! curves: multivariate polynomials over the rationals, Groebner
//! bases, ideal arithmetic (powers, intersections, colons, saturation,
//! symbolic powers), Hilbert functions, Castelnuovo-Mumford regularity
//! via generic initial ideals, and a verification harness for the
//! regularity and symbolic-defect statements of the point families
//! this crate constructs.

pub mod constructions;
pub mod error;
pub mod groebner;
pub mod harness;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod order;
pub mod parse;
pub mod poly;
pub mod ring;

pub use error::{Error, Result};
pub use ideal::{Ideal, MinimalGenerators};
pub use order::TermOrder;
pub use parse::parse_polynomial;
pub use poly::Polynomial;
pub use ring::{Monomial, RingSignature};
