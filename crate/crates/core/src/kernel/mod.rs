//! Exact arithmetic foundation: rationals, polynomials in `u`, the rational
//! function field ℚ(u), and truncated power series over either field.

mod field;
mod ratfunc;
mod series;
mod upoly;

pub use field::{format_rational, int, parse_rational, ratio, to_integer, Field, Rational};
pub use ratfunc::RatFunc;
pub(crate) use series::min_bound;
pub use series::{Order, TruncSeries};
pub use upoly::UPoly;

/// Exact value of `f` at `u0`.
pub fn ratfunc_eval(f: &RatFunc, u0: &Rational) -> crate::Result<Rational> {
    f.eval(u0)
}
