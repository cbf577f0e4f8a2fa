//! Colored HOMFLY invariants of torus knots via the Rosso–Jones formula.
//!
//! Unreduced normalization: the unknot colored by `λ` is
//! `(q/a)^{|λ|/2} θ_{a,q}(s_λ)`.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{Exp, LaurentAQ, RationalAQ};
use crate::partition::Partition;
use crate::rational::{q_int, Q};
use crate::symfunc::{c_coeffs, theta_schur};

/// `T(m0, n0)` with `gcd(m0, n0) = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TorusKnot {
    pub m0: usize,
    pub n0: usize,
}

impl TorusKnot {
    pub fn new(m0: usize, n0: usize) -> Result<Self> {
        if m0 == 0 || n0 == 0 {
            return Err(Error::InvalidArgument("torus knot parameters must be positive".into()));
        }
        if m0.gcd(&n0) != 1 {
            return Err(Error::InvalidArgument(format!("T({m0},{n0}) is a link, not a knot")));
        }
        Ok(TorusKnot { m0, n0 })
    }

    pub fn swapped(&self) -> Self {
        TorusKnot { m0: self.n0, n0: self.m0 }
    }

    pub fn is_unknot(&self) -> bool {
        self.m0 == 1 || self.n0 == 1
    }
}

impl fmt::Display for TorusKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{})", self.m0, self.n0)
    }
}

/// `(q/a)^{|λ|/2} q^{n(λ)} Π (1 − a q^{c(x)}) / Π (1 − q^{h(x)})`.
pub fn unknot_colored(lambda: &Partition) -> RationalAQ {
    let d = lambda.size() as i64;
    theta_schur(lambda).shift((-d, d))
}

fn doubled(x: Q, what: &str) -> Result<i64> {
    if !x.is_integer() {
        return Err(Error::Consistency(format!("{what} exponent {x}/2 is off the half-integer lattice")));
    }
    x.to_integer().try_into().map_err(|_| Error::Consistency("exponent overflow".into()))
}

/// `P_λ(T(m0,n0)) = q^{m0n0κ(λ)} a^{m0(n0−1)|λ|/2} Σ_μ c^μ_{λ,n0} q^{−(m0/n0)κ(μ)} P_μ(unknot)`.
pub fn rosso_jones(k: &TorusKnot, lambda: &Partition) -> Result<RationalAQ> {
    let (m0, n0) = (k.m0 as i64, k.n0 as i64);
    let d = lambda.size() as i64;
    let prefactor: Exp = (m0 * (n0 - 1) * d, 2 * m0 * n0 * lambda.kappa());
    let coeffs: Vec<(Partition, i64)> = c_coeffs(lambda, &Partition::empty(), k.n0).into_iter().collect();
    let terms: Vec<RationalAQ> = coeffs
        .par_iter()
        .map(|(mu, c)| {
            let eq = doubled(Q::new((-2 * m0 * mu.kappa()).into(), n0.into()), "twist")?;
            Ok(unknot_colored(mu).shift((prefactor.0, prefactor.1 + eq)).scale(&q_int(*c)))
        })
        .collect::<Result<_>>()?;
    Ok(RationalAQ::sum(&terms))
}

/// `P̃ = a^{(d/2)(m0+n0−m0n0)} (q^{−1/2} − q^{1/2})/(1 − a) · P` with `d = |λ|`.
pub fn renormalize(p: &RationalAQ, lambda: &Partition, k: &TorusKnot) -> Result<RationalAQ> {
    let (m0, n0) = (k.m0 as i64, k.n0 as i64);
    let d = lambda.size() as i64;
    let scaled = p.clone().normalized().mul_poly(&LaurentAQ::one_minus_q(1)).shift((d * (m0 + n0 - m0 * n0), -1));
    scaled.div_one_minus_a()
}

/// [`rosso_jones`] followed by [`renormalize`].
pub fn renormalized(k: &TorusKnot, lambda: &Partition) -> Result<RationalAQ> {
    renormalize(&rosso_jones(k, lambda)?, lambda, k)
}

/// `q^{−m0n0κ(λ)} P̃_λ`, the form that is symmetric in `m0 ↔ n0`.
pub fn symmetric_form(k: &TorusKnot, lambda: &Partition) -> Result<RationalAQ> {
    Ok(renormalized(k, lambda)?.shift((0, -2 * (k.m0 * k.n0) as i64 * lambda.kappa())))
}

/// `P̂_λ = P_λ · Π_{i=1}^{|λ|} (1 − q^i)`, a Laurent polynomial.
pub fn partially_reduced(k: &TorusKnot, lambda: &Partition) -> Result<LaurentAQ> {
    let mut factor = LaurentAQ::one();
    for i in 1..=lambda.size() as i64 {
        factor = &factor * &LaurentAQ::one_minus_q(i);
    }
    rosso_jones(k, lambda)?.mul_poly(&factor).to_polynomial().map_err(|e| {
        Error::Consistency(format!("partially reduced invariant of {k} colored by {lambda} keeps a denominator: {e}"))
    })
}

/// `P_λ(K) / P_λ(unknot)`.
pub fn reduced(k: &TorusKnot, lambda: &Partition) -> Result<LaurentAQ> {
    let d = lambda.size() as i64;
    let mut hooks = LaurentAQ::one();
    for h in lambda.hook_lengths() {
        hooks = &hooks * &LaurentAQ::one_minus_q(h as i64);
    }
    let steps: Vec<Exp> = lambda.contents().into_iter().map(|c| (2, 2 * c)).collect();
    let shift: Exp = (d, -d - 2 * lambda.n_statistic() as i64);
    rosso_jones(k, lambda)?
        .normalized()
        .mul_poly(&hooks)
        .shift(shift)
        .div_binomials(&steps)?
        .to_polynomial()
        .map_err(|e| Error::Consistency(format!("reduced invariant of {k} colored by {lambda} is not a polynomial: {e}")))
}

/// `f(−a, q)` rescaled by a power of `−a` so that the lowest `a`-power sits at
/// exponent 0 and its lowest-`q` coefficient is positive.
pub fn negate_a_normalized(f: &LaurentAQ) -> Result<LaurentAQ> {
    let Some(lo) = f.min_a() else {
        return Ok(LaurentAQ::zero());
    };
    let g = f.shift((-lo, 0)).substitute_neg_a()?;
    let lead = g.terms().iter().next().map(|(_, c)| c.clone()).unwrap_or_else(Q::zero);
    Ok(if lead.is_negative() { g.scale(&q_int(-1)) } else { g })
}

/// Sum of coefficients of the normalized `P̂_λ(−a, q)`.
pub fn fiber_value(p_hat: &LaurentAQ) -> Result<Q> {
    negate_a_normalized(p_hat)?.eval(&q_int(1), &q_int(1))
}

/// `P_{λ,N}(q) = P_λ(q^N, q)`.
pub fn sl_n_specialize(p: &RationalAQ, n: i64) -> RationalAQ {
    p.specialize_a(n)
}

/// True when `P̃_λ(−a, q)` has nonnegative series coefficients through `trunc`
/// powers of `q` above its lowest term.
pub fn renormalized_positive(k: &TorusKnot, lambda: &Partition, trunc: i64) -> Result<bool> {
    let pt = renormalized(k, lambda)?.substitute_neg_a()?.normalized();
    let lo = pt.numerator().min_q().unwrap_or(0);
    let series = pt.expand(lo + 2 * trunc);
    Ok(series.nonneg_coeffs() && !series.is_zero())
}

/// All knot-side data for one `(K, λ)`.
#[derive(Clone, Debug)]
pub struct KnotInvariants {
    pub knot: TorusKnot,
    pub lambda: Partition,
    pub homfly: RationalAQ,
    pub renormalized: RationalAQ,
    pub partially_reduced: LaurentAQ,
    pub fiber_value: Q,
}

impl KnotInvariants {
    pub fn compute(k: &TorusKnot, lambda: &Partition) -> Result<Self> {
        let homfly = rosso_jones(k, lambda)?;
        let renorm = renormalize(&homfly, lambda, k)?;
        let p_hat = partially_reduced(k, lambda)?;
        let fv = fiber_value(&p_hat)?;
        if fv.is_zero() {
            return Err(Error::Consistency(format!("{k}: fiber dimension vanishes")));
        }
        Ok(KnotInvariants {
            knot: *k,
            lambda: lambda.clone(),
            homfly,
            renormalized: renorm,
            partially_reduced: p_hat,
            fiber_value: fv,
        })
    }
}

#[cfg(test)]
mod tests;
