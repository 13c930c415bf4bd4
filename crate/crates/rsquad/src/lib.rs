//! Exact analysis of quadratic rotation symmetric Boolean functions.
//!
//! The crate is organized bottom-up:
//!
//! * [`gf2poly`] — polynomial arithmetic over GF(2) (gcd, radical, orders).
//! * [`gf2field`] — GF(2^n) arithmetic with trace maps and linearized kernels.
//! * [`rsq`] — the rotation symmetric quadratic itself: offset sets, the
//!   associated polynomial, residue multisets and vanishing tests.
//! * [`boolfun`] — brute-force oracle: truth tables, weights, fast
//!   Walsh–Hadamard transform, nonlinearity.
//! * [`quadform`] — polynomial-time analysis via the circulant form matrix:
//!   balancedness, Dickson rank, weight, nonlinearity, v-values and periods.
//! * [`balance`] — the closed-form balance-profile classifier.
//! * [`recursion`] — rules matrices, minimal polynomials, recurrence fitting
//!   and extension, root-modulus reports.
//! * [`equiv`] — affine-equivalence classification by (weight, nonlinearity).
//! * [`cli`] — the command-line front end.

pub mod balance;
pub mod bits;
pub mod boolfun;
pub mod cli;
pub mod equiv;
mod error;
pub mod gf2field;
pub mod gf2poly;
pub mod quadform;
pub mod recursion;
pub mod rsq;

pub use error::{Error, Result};
pub use gf2poly::Gf2Poly;
pub use rsq::{RsQuadratic, Semantics};
