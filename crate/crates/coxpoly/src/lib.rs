//! Exact computation of Coxeter polynomials of acyclic quivers and
//! characteristic polynomials of graphs, together with the closed forms for
//! the first two Coxeter coefficients of bipartite quivers and a
//! verification harness that checks every identity by exhaustive small-case
//! enumeration against independent determinant oracles.
//!
//! All arithmetic is over arbitrary-precision integers (with exact rational
//! intermediates inside interpolation); nothing is floating point and every
//! comparison in the test suites and campaigns is exact.
//!
//! The crate is organized around five value types:
//!
//! - [`AmbientPolynomial`]: integer polynomial tagged with its ambient
//!   space `V_n`, with the `S`/`T` transforms and representability.
//! - [`IntMatrix`]: dense integer matrix with fraction-free determinants,
//!   two independent characteristic-polynomial algorithms, Coxeter
//!   polynomials and Coxeter transformations.
//! - [`Graph`]: simple undirected graph with walk counts and the closed
//!   forms for the characteristic-polynomial coefficients.
//! - [`Quiver`]: directed quiver with Euler/Cartan matrices, reflections
//!   and bipartite structure.
//! - [`CoefficientReport`] / [`VerificationSummary`]: machine-readable
//!   comparison records produced by the closed-form checks and the
//!   verification campaigns.
//!
//! Everything is an immutable value and every operation is a pure
//! function, so the campaign sweeps can fan out across worker threads
//! (the default `parallel` feature) while producing byte-identical output
//! to a sequential run.

pub mod campaigns;
pub mod enumerate;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod matrix;
pub mod par;
pub mod poly;
pub mod quiver;

pub use campaigns::{run_campaign, Campaign, Failure, SweepOptions, VerificationSummary};
pub use error::{Error, ParseError};
pub use formulas::CoefficientReport;
pub use graph::Graph;
pub use matrix::IntMatrix;
pub use poly::AmbientPolynomial;
pub use quiver::Quiver;
