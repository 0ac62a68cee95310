//! Exact square roots in quaternion algebras `(alpha, beta | Q)`.
//!
//! Everything is computed over the rationals without floating point: Hilbert
//! symbols and local invariants, isotropy of diagonal quadratic forms, norm
//! equations, common values of binary forms via square classes, and square
//! roots of quaternions (central and non-central, split and division
//! algebras).
//!
//! ```
//! use quatroot::{quat::sqrt, QuaternionAlgebra, Rational};
//!
//! let h = QuaternionAlgebra::from_ints(-1, -1)?;
//! let r = sqrt(&h.integral([3, 4, 0, 0]))?.unwrap();
//! assert_eq!(r, h.integral([2, 1, 0, 0]));
//! // -2 = (i + j)^2 up to sign, but 2 has no root in the Hamilton quaternions.
//! assert_eq!(sqrt(&h.scalar(Rational::from(-2)))?.unwrap().square(), h.scalar(Rational::from(-2)));
//! assert_eq!(sqrt(&h.scalar(Rational::from(2)))?, None);
//! # Ok::<(), quatroot::Error>(())
//! ```

pub mod cli;
pub mod error;
pub mod exact_arith;
pub mod hilbert;
pub mod places;
pub mod qforms;
pub mod quat;
pub mod sqclasses;

pub use error::{Error, Result};
pub use exact_arith::Rational;
pub use places::Place;
pub use qforms::{DiagonalForm, FormVector};
pub use quat::{Quaternion, QuaternionAlgebra};
