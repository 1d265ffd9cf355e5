//! Exact dense polynomial arithmetic over Z and Q.

mod format;
mod int_poly;
mod rat_poly;

pub use format::{format_poly, parse_poly, parse_poly_json, PolyStyle};
pub use int_poly::{arith, eval_int, exact_div, is_nonneg, ArithOp, Degree, IntPoly};
pub use rat_poly::{gcd_bezout, RatPoly};
