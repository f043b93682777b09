//! Exact symbolic machinery for Euler characteristics of universal Picard
//! stacks over moduli of pointed curves.
//!
//! The crate is organised bottom-up:
//!
//! - [`numtheory`]: Möbius, Euler totient, divisors and gcds on 64-bit integers.
//! - [`symfunc`]: truncated completed symmetric functions in the power-sum
//!   basis, the marked ring `Λ̂[[x]]`, plethysm, plethystic `Exp`/`Log`,
//!   the `rk`/`inv` specializations, `inv∆` and the transform `𝒯`.
//! - [`plaurent`]: sparse Laurent polynomials in `P_j = 1 + p_j` together
//!   with the monomial-level `x → 1` limit operator.
//! - [`formulas`]: the closed-formula enumerators for the weight-zero and
//!   topological generating functions and their specializations.
//! - [`verify`]: named verification suites producing a [`VerificationReport`].
//!
//! All arithmetic is exact; coefficients are arbitrary-precision rationals.

pub mod error;
pub mod formulas;
pub mod golden;
pub mod numtheory;
pub mod plaurent;
pub mod random;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use formulas::Kind;
pub use plaurent::{ExpKey, PLaurent};
pub use symfunc::{MarkedSymFunc, PowerMonomial, TruncatedSymFunc};
pub use verify::{CheckStatus, VerificationReport};

/// Exact rational coefficient type used throughout the crate.
pub type Rational = num_rational::BigRational;
