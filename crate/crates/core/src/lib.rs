//! Exact computer algebra for free commutative, associative and Lie-type
//! algebras in the Tits–Kantor–Koecher category: completely reducible
//! sl2-modules built from trivial and adjoint summands.
//!
//! Everything is generic over an exact [`Scalar`] field; the aliases at the
//! crate root fix it to arbitrary-precision rationals.

pub mod alphabet;
pub mod anick;
pub mod error;
pub mod freemodels;
pub mod groebner;
pub mod jordan;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod scalar;
pub mod schur;
pub mod sl2;
pub mod verify;

pub use alphabet::{Alphabet, Generator, Letter, Sl2Basis};
pub use error::{Error, Result};
pub use monomial::{CommMonomial, Monomial, Word};
pub use order::{MonomialOrder, OrderKind};
pub use scalar::Scalar;
pub use sl2::{Character, IrrDecomp, TruncatedDecomp};

/// Arbitrary-precision rationals, the default coefficient field.
pub type Rational = num_rational::BigRational;
/// Rationals with machine-word numerators and denominators.
pub type SmallRational = num_rational::Ratio<i64>;

pub type NcPoly = poly::NcPoly<Rational>;
pub type CommPoly = poly::CommPoly<Rational>;
