//! Exact bivariate Laurent arithmetic in `a`, `q` on the half-integer
//! exponent lattice, rational functions with `(1 − q^i)` denominators, and
//! truncated `q`-series.
//!
//! Exponents are stored doubled: the key `(3, -1)` is `a^{3/2} q^{-1/2}`.

mod poly;
mod rational_fn;

pub use poly::{Exp, LaurentAQ};
pub use rational_fn::{laurent_to_json, RationalAQ};

/// Default truncation order in `q` for series comparisons.
pub const DEFAULT_TRUNCATION: i64 = 30;

#[cfg(test)]
mod tests;
