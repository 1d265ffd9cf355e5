//! Exact construction of q-Narayana and q-Catalan polynomials, the
//! alternating sums built from them, and divisibility / nonnegativity
//! verdicts over Z[q].

pub mod error;
pub mod polyarith;

pub use error::{Error, PolyError, Result};
pub use polyarith::{IntPoly, RatPoly};
pub mod qobjects;
pub mod sums;
pub mod verify;
