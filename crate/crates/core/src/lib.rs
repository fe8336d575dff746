//! Exact Poincaré multipliers and the Curtiss degree bound for polynomials
//! positive on `[0, ∞)`.
//!
//! All decisions run in exact rational arithmetic: positivity by Sturm
//! sequences, the bound by exact angle ceilings, and minimal multiplier
//! degrees by a phase-I simplex that returns a certificate either way.
//! [`extremal`] builds root radii for which the bound is attained.

pub mod bound;
pub mod convolution;
pub mod error;
pub mod extremal;
pub mod factor;
pub mod lp;
pub mod multiplier;
pub mod poly;
pub mod positivity;
pub mod rational;
pub mod trig;

pub use bound::{curtiss_bound, curtiss_terms, AngleTerm};
pub use convolution::{build_convolution, ConvolutionSystem, Matrix};
pub use error::{Error, Result};
pub use factor::{elementary_symmetric, expand, Angle, FactorSpec, Precision};
pub use multiplier::{feasible_at_degree, hull_separation_test, opt, opt_for_spec, FeasibilityOutcome, OptResult};
pub use poly::{multiply, Polynomial};
pub use positivity::{is_positive, root_count_nonneg, PositivityVerdict};
pub use rational::Rational;
