//! Exact computer algebra for hybrid trigonometric parametrizations.
//!
//! A hybrid trigonometric parametrization is a tuple of rational expressions
//! in circular trig functions of some parameters, hyperbolic trig functions of
//! others, and the remaining parameters as plain monomials. This crate
//! provides the full pipeline around such objects:
//!
//! * exact arithmetic on sparse multivariate polynomials and rational
//!   functions over arbitrary-precision rationals ([`poly`], [`ratfunc`]),
//! * parsing and validation of hybrid parametrizations plus normalization to
//!   *pure form* via angle addition, frequency scaling, Chebyshev expansion
//!   and argument doubling ([`parser`], [`model`], [`pure`]),
//! * conversion between trigonometric and rational parametrizations through
//!   the circle/hyperbola torus maps ([`torus`]),
//! * implicitization by Groebner-basis elimination, in both the rational and
//!   the direct trigonometric formulation ([`groebner`], [`implicitize`]),
//! * geometric applications: cycloid surface generators, grid sampling for
//!   plotting, hypersurface intersection and exact real-root isolation
//!   ([`cycloid`], [`sample`], [`intersect`], [`roots`]).
//!
//! All symbolic values are immutable and every operation is a pure function,
//! so shared values may be used concurrently without restriction.

pub mod chebyshev;
pub mod cycloid;
pub mod error;
pub mod gcd;
pub mod groebner;
pub mod implicitize;
pub mod intersect;
pub mod json;
pub mod model;
pub mod order;
pub mod parser;
pub mod poly;
pub mod pure;
pub mod ratfunc;
pub mod rational;
pub mod registry;
pub mod roots;
pub mod sample;
pub mod torus;

pub use error::{Error, Result};
pub use model::{HybridParam, ParamKind, Phase, PureParam, RationalParam, Signature, TrigArg};
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
pub use rational::Rational;
pub use registry::{Registry, VarKind, VarRegistry};
