//! Exact computations on graph products of finite-dimensional-summand
//! von Neumann algebras: clique polynomials, the positivity region, trace
//! monoid word counts, and the classification of type I factor summands.
//!
//! The crate is `no_std` and needs only `alloc`. All decisions are exact
//! over [`Rational`]; the atom classifier and region test are also generic
//! over `f64` with an explicit tolerance.

#![no_std]

extern crate alloc;

pub mod atoms;
pub mod clique;
pub mod error;
pub mod graph;
pub mod poly;
pub mod region;
pub mod scalar;
pub mod series;
pub mod words;

pub use atoms::{
    classify_selection, enumerate_atoms, projection_meet, truncated_series_crosscheck,
    AtomEnumeration, AtomReport, MeetReport, Summand, SummandSelection, VertexAlgebraSpec,
};
pub use clique::CliquePolynomialForm;
pub use error::{Error, Result};
pub use graph::{Clique, Graph, VertexSet};
pub use poly::{IsolationInterval, UnivariatePolynomial};
pub use region::{classify_boundary_point, membership, rho, BoundaryClassification, Rho};
pub use scalar::{parse_rational, rat, Rational, Scalar};
pub use series::TruncatedSeries;
pub use words::{canonical_form, is_reduced, Word};
