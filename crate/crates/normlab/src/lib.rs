//! Exact arithmetic for the normalization of ideals in polynomial rings
//! over the rationals.
//!
//! The crate computes, for monomial ideals (and degreewise for equigenerated
//! homogeneous ideals):
//!
//! * integral closures of powers via the Newton polyhedron ([`newton`]),
//! * normalization and generation indices with their bound checks ([`indices`]),
//! * Hilbert series of the integral-closure filtration, Hilbert coefficients
//!   and the Sally-module h-vector ([`hilbert`]),
//! * symbolic powers of edge ideals of clutters and the set-covering
//!   polyhedron integrality test ([`clutter`]),
//! * general reductions, reduction numbers, quotient lengths and the
//!   one-step colon normalization check ([`graded`]).
//!
//! Everything is exact: lattice data is integral, all linear algebra and
//! polyhedral geometry runs over arbitrary-precision rationals. The linear
//! algebra layer ([`matrix`], [`graded`]) is generic over a [`scalar::Scalar`]
//! so it can be instantiated with any exact field type; the crate-level
//! aliases [`Q`] and [`Int`] fix the default arbitrary-precision
//! instantiation used by every high-level operation.

pub mod cli;
pub mod clutter;
pub mod error;
pub mod graded;
pub mod hilbert;
pub mod ideal;
pub mod indices;
pub mod matrix;
pub mod newton;
pub mod ring;
pub mod rng;
pub mod scalar;

/// Arbitrary-precision integer used for all lattice and facet data.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, the default scalar of the crate.
pub type Q = num_rational::BigRational;

pub use error::{Error, Result};
pub use ideal::MonomialIdeal;
pub use ring::{Exponent, PolyRing};
