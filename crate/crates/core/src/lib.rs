//! Exact enumeration of type A and type B Catalan objects, their statistics,
//! bijections and cyclic actions, and a verifier for cyclic sieving triples.
//!
//! Everything is exact: polynomials carry arbitrary precision integer
//! coefficients and evaluation at roots of unity is done by reduction modulo
//! cyclotomic polynomials.
//!
//! ```
//! use cspkit::qpoly::{named_polynomial, NamedPoly};
//!
//! let p = named_polynomial(&NamedPoly::Yns { n: 2, s: 1 }).unwrap();
//! assert_eq!(p.to_string(), "1 + q + q^2 + q^3 + q^4");
//! ```

pub mod actions;
pub mod bijections;
pub mod csp;
pub mod families;
pub mod qpoly;
pub mod stats;

mod error;
mod params;

pub use error::Error;
pub use params::{ParamError, Params};
