//! Exact computations for curve-singularity branches given as
//! finite-codimension subalgebras `B ⊆ k[[t]]` over the rationals.
//!
//! The entry point is [`subalgebra::closure`], which turns generators into a
//! [`Staircase`]. From there [`inverse`] computes the inverse system `B⊥` of
//! differential operators, algebra-forming certificates, standard filtrations
//! and canonical-module representatives, and [`semigroup`] handles the purely
//! combinatorial side.
//!
//! ```
//! use branchdual::expr::parse_series_list;
//! use branchdual::inverse::inverse_system;
//! use branchdual::subalgebra::{closure, AlgebraInput, ClosureConfig};
//!
//! let gens = parse_series_list("t^3 + t^4, t^5")?;
//! let input = AlgebraInput::new(gens, "toy")?;
//! let s = closure(&input, &ClosureConfig::default())?;
//! assert_eq!((s.delta(), s.conductor()), (4, 8));
//! let v = inverse_system(&input, &s)?;
//! let text: Vec<String> = v.basis().iter().map(|g| g.to_string()).collect();
//! assert_eq!(text, ["u", "u^2", "u^3 - 1/4 u^4", "u^6 - 1/14 u^7"]);
//! # Ok::<(), branchdual::Error>(())
//! ```

pub mod error;
pub mod expr;
pub mod inverse;
pub mod job;
pub mod linalg;
pub mod semigroup;
pub mod series;
pub mod subalgebra;

/// Arbitrary-precision rational numbers.
pub type Rational = num_rational::BigRational;

pub use error::{Error, Result};
pub use inverse::{AfCertificate, InverseSystem};
pub use linalg::{Echelon, QMatrix};
pub use semigroup::{Characteristic, NumericalSemigroup};
pub use series::{DiffOp, Series};
pub use subalgebra::{AlgebraInput, ClosureConfig, Staircase};
