//! Exact computation of the maximal Casimir eigenvalues `m_i` on the
//! exterior powers of a complex simple Lie algebra, together with the
//! eigenspaces `M_i` described through ad-nilpotent ideals of a Borel
//! subalgebra.
//!
//! Everything is exact: scalars are [`Rational`]s, weights are integer
//! vectors in the fundamental-weight basis, and dimensions are big integers.
//!
//! The main entry points:
//!
//! - [`RootSystem`] builds a root system from a [`CartanType`] and exposes
//!   the Killing-normalized form, Casimir scalars and Weyl dimensions.
//! - [`character`] computes weight multiplicities (Freudenthal), characters
//!   of `V_{k rho}` as box products, exterior powers of the adjoint module,
//!   tensor products, and decompositions into irreducibles.
//! - [`ideals`] enumerates ad-nilpotent ideals of `b` as upper sets of the
//!   positive-root poset.
//! - [`spectrum`] computes `m_i`, `M_i` by three independent strategies and
//!   produces a verification report.
//! - [`cli`] is the command-line front end used by the `casimir` binary.

pub mod cache;
pub mod cartan;
pub mod character;
pub mod cli;
pub mod error;
pub mod ideals;
pub mod root_system;
pub mod spectrum;
pub mod weight;

/// Exact rational scalar, always in lowest terms.
pub type Rational = num_rational::Ratio<i64>;

pub use cartan::{CartanType, Series};
pub use character::{Character, Decomposition};
pub use error::{Error, Result};
pub use ideals::{NilIdeal, RootPoset};
pub use root_system::RootSystem;
pub use spectrum::{SpectrumRow, Strategy, VerificationReport};
pub use weight::Weight;
