//! Exact arithmetic in the first Weyl algebra `W = k<X, Y> / ([Y, X] = 1)`.
//!
//! Elements are kept in the normal form `sum a_ij X^i Y^j`. On top of the
//! arithmetic the crate provides leading forms, the grading by `i - j`,
//! centralizers up to a total-degree bound, the derivation `ad_Q` on the
//! centralizer of a pair with `[Q, P] = 1`, and a faithful action on `k[t]`
//! by differential operators.
//!
//! Everything is generic over [`Scalar`]; [`Rational`] and [`Weyl`] are the
//! arbitrary-precision instantiation used by the CLI.
//!
//! ```
//! use weyl_core::{cli, Weyl};
//!
//! let yx = Weyl::y().mul(&Weyl::x());
//! assert_eq!(cli::print(&yx), "X*Y + 1");
//! assert_eq!(cli::parse("Y*X").unwrap(), yx);
//! ```

pub mod centralizer;
pub mod cli;
pub mod derivation;
pub mod error;
pub mod graded;
pub mod leading;
pub mod linalg;
pub mod oracle;
pub mod poly;
pub mod scalar;
pub mod weyl;

pub use error::{Result, WeylError};
pub use poly::Poly;
pub use scalar::Scalar;
pub use weyl::{Monomial, WeylElement};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;
/// Weyl algebra elements over [`Rational`].
pub type Weyl = WeylElement<Rational>;
/// Machine-word rationals; arithmetic panics on overflow.
pub type SmallRational = num_rational::Rational64;
/// Weyl algebra elements over [`SmallRational`].
pub type SmallWeyl = WeylElement<SmallRational>;
