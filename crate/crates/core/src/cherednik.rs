//! Characters of Verma modules and of minimally supported irreducible
//! modules `L_c(n0·λ + λ')` of the type-A rational Cherednik algebra.
//!
//! `q` tracks eigenvalues of the scaling element `h`. Hook components use
//! the `Σ_k (−a)^k dim_q Hom(∧^k h, ·)` convention throughout; [`ch_aq`]
//! switches to `Σ_k a^k`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::{LaurentAQ, RationalAQ};
use crate::partition::Partition;
use crate::rational::{q_int, q_to_string, Q};
use crate::symfunc::{c_coeffs, mn_character};

/// Rank `n` and parameter `c = m0/n0` (coprime).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CherednikParams {
    pub n: usize,
    pub m0: usize,
    pub n0: usize,
}

impl CherednikParams {
    /// `c = m/n` on `S_n`.
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidArgument("m and n must be positive".into()));
        }
        let d = m.gcd(&n);
        Ok(CherednikParams { n, m0: m / d, n0: n / d })
    }

    /// Arbitrary positive `c = m0/n0` on `S_n`.
    pub fn with_c(n: usize, m0: usize, n0: usize) -> Result<Self> {
        if n == 0 || m0 == 0 || n0 == 0 {
            return Err(Error::InvalidArgument("n, m0, n0 must be positive".into()));
        }
        let g = m0.gcd(&n0);
        Ok(CherednikParams { n, m0: m0 / g, n0: n0 / g })
    }

    pub fn c(&self) -> Q {
        Q::new(BigInt::from(self.m0), BigInt::from(self.n0))
    }

    /// `m = c·n` when integral.
    pub fn m(&self) -> Option<usize> {
        (self.m0 * self.n).is_multiple_of(self.n0).then(|| self.m0 * self.n / self.n0)
    }

    /// `gcd(m, n)`, i.e. the size of the labels `λ` with `λ' = ∅`.
    pub fn d(&self) -> usize {
        self.n / self.n0
    }

    /// `2((n−1)/2 − cκ(ν))` as a rational.
    fn twice_exp(&self, nu: &Partition) -> Q {
        Q::from_integer(BigInt::from(self.n as i64 - 1)) - self.c() * q_int(2 * nu.kappa())
    }

    /// Doubled exponent of `q^{(n−1)/2 − cκ(ν)}`.
    pub fn lowest_weight_exp(&self, nu: &Partition) -> Result<i64> {
        self.lowest_weight_exp_shifted(nu, &Q::zero())
    }

    /// Doubled exponent of `q^{(n−1)/2 − cκ(ν) − δ/2}`.
    fn lowest_weight_exp_shifted(&self, nu: &Partition, delta: &Q) -> Result<i64> {
        let twice = self.twice_exp(nu) - delta;
        if !twice.is_integer() {
            return Err(Error::InvalidArgument(format!(
                "q-exponent (n-1)/2 - c·κ({nu}) = {}/2 is off the half-integer lattice",
                q_to_string(&(twice + delta))
            )));
        }
        Ok(twice.to_integer().to_i64().expect("small exponent"))
    }

    /// Checks the labeling `n0|λ| + |λ'| = n` with `|λ'| < n0`.
    pub fn check_label(&self, lambda: &Partition, lambda_prime: &Partition) -> Result<()> {
        if self.n0 * lambda.size() + lambda_prime.size() != self.n {
            return Err(Error::Labeling(format!(
                "n0·|λ| + |λ'| = {}·{} + {} must equal n = {}",
                self.n0,
                lambda.size(),
                lambda_prime.size(),
                self.n
            )));
        }
        if lambda_prime.size() >= self.n0 {
            return Err(Error::Labeling(format!(
                "|λ'| = {} must be smaller than n0 = {}",
                lambda_prime.size(),
                self.n0
            )));
        }
        Ok(())
    }
}

/// Closed-form graded character `Tr(σ q^h)` per conjugacy class.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedSnCharacter {
    pub n: usize,
    pub classes: BTreeMap<Partition, RationalAQ>,
}

impl GradedSnCharacter {
    pub fn class(&self, cls: &Partition) -> Option<&RationalAQ> {
        self.classes.get(cls)
    }

    /// The graded dimension (identity class).
    pub fn identity(&self) -> &RationalAQ {
        &self.classes[&Partition::column(self.n)]
    }

    /// Series at `cls`, keeping doubled `q`-exponents `≤ max_eq`.
    pub fn series(&self, cls: &Partition, max_eq: i64) -> Option<LaurentAQ> {
        self.classes.get(cls).map(|r| r.expand(max_eq))
    }

    /// Lowest doubled `h`-eigenvalue, read from the identity class.
    pub fn offset(&self) -> Option<i64> {
        let id = self.identity();
        let lo = id.numerator().min_q()?;
        id.expand(lo + 1).min_q()
    }

    /// Multiplicity of `π_μ` as a `q`-series: `⟨χ_μ, Tr(· q^h)⟩`.
    pub fn isotypic(&self, mu: &Partition) -> RationalAQ {
        let terms: Vec<RationalAQ> = self
            .classes
            .iter()
            .map(|(cls, r)| {
                let w = q_int(mn_character(mu, cls).expect("sizes agree")) / Q::from_integer(cls.z());
                r.scale(&w)
            })
            .collect();
        RationalAQ::sum(&terms)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let classes = self
            .classes
            .iter()
            .map(|(cls, r)| (cls.clone(), r.sub(&other.classes[cls])))
            .collect();
        GradedSnCharacter { n: self.n, classes }
    }

    pub fn add(&self, other: &Self) -> Self {
        let classes = self
            .classes
            .iter()
            .map(|(cls, r)| (cls.clone(), r.add(&other.classes[cls])))
            .collect();
        GradedSnCharacter { n: self.n, classes }
    }

    pub fn scale(&self, c: &Q) -> Self {
        let classes = self.classes.iter().map(|(cls, r)| (cls.clone(), r.scale(c))).collect();
        GradedSnCharacter { n: self.n, classes }
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.n == other.n
            && self.classes.len() == other.classes.len()
            && self.classes.iter().all(|(cls, r)| other.classes.get(cls).is_some_and(|s| r.equals(s)))
    }
}

/// `det_h(1 − tσ)^{-1}` numerator and denominator: `(1 − q) / Π (1 − q^{σ_i})`.
fn inverse_char_poly(cls: &Partition, num: LaurentAQ) -> RationalAQ {
    let num = &num * &LaurentAQ::one_minus_q(1);
    let den: Vec<u32> = cls.parts().iter().map(|&p| p as u32).collect();
    RationalAQ::with_factors(num, &den)
}

/// `Tr_{M_c(ν)}(σ q^h) = q^{(n−1)/2 − cκ(ν)} χ_ν(σ) / det_h(1 − qσ)`.
pub fn verma_character(p: &CherednikParams, nu: &Partition, cls: &Partition) -> Result<RationalAQ> {
    verma_character_shifted(p, nu, cls, &Q::zero())
}

fn verma_character_shifted(p: &CherednikParams, nu: &Partition, cls: &Partition, delta: &Q) -> Result<RationalAQ> {
    if nu.size() != p.n || cls.size() != p.n {
        return Err(Error::SizeMismatch(format!("|{nu}| and |{cls}| must equal n = {}", p.n)));
    }
    let chi = mn_character(nu, cls)?;
    if chi == 0 {
        return Ok(RationalAQ::zero());
    }
    let e = p.lowest_weight_exp_shifted(nu, delta)?;
    Ok(inverse_char_poly(cls, LaurentAQ::monomial((0, e), q_int(chi))))
}

/// `Σ_k (−a)^k dim_q Hom(∧^k h, M_c(ν)) = q^{(n−1)/2 − cκ(ν)} (1 − q)/(1 − a) θ_{a,q}(s_ν)`.
pub fn hook_components_verma(p: &CherednikParams, nu: &Partition) -> Result<RationalAQ> {
    if nu.size() != p.n {
        return Err(Error::SizeMismatch(format!("|{nu}| must equal n = {}", p.n)));
    }
    let e = p.lowest_weight_exp(nu)?;
    // θ(s_ν) = q^{n(ν)} Π (1 − a q^{c}) / Π (1 − q^h); the corner box has c = 0
    let mut num = &LaurentAQ::monomial((0, e + 2 * nu.n_statistic() as i64), Q::one()) * &LaurentAQ::one_minus_q(1);
    for c in nu.contents().into_iter().skip(1) {
        num = &num * &LaurentAQ::from_ints(&[(0, 0, 1), (2, 2 * c, -1)]);
    }
    let hooks: Vec<u32> = nu.hook_lengths().into_iter().map(|h| h as u32).collect();
    Ok(RationalAQ::with_factors(num, &hooks))
}

/// `det_h(1 − aσ) = Π (1 − a^{σ_i}) / (1 − a)`, a polynomial in `a`.
pub fn det_h_one_minus_a(cls: &Partition) -> LaurentAQ {
    let mut num = LaurentAQ::one();
    for &r in cls.parts() {
        num = &num * &(LaurentAQ::one() - LaurentAQ::a_pow(r as i64));
    }
    num.div_one_minus((2, 0)).expect("every cycle contributes a factor 1 - a")
}

/// `(1/n!) Σ_σ Tr(σ q^h) det_h(1 − aσ)`, the hook components of a class function.
pub fn hook_components_from_classes(chi: &GradedSnCharacter) -> RationalAQ {
    let terms: Vec<RationalAQ> = chi
        .classes
        .iter()
        .map(|(cls, r)| {
            r.mul_poly(&det_h_one_minus_a(cls)).scale(&Q::new(BigInt::one(), cls.z()))
        })
        .collect();
    RationalAQ::sum(&terms)
}

/// Weighted sum `Σ_ν c_ν f(ν)` with a fixed summation order.
fn sum_over_support<F>(coeffs: &BTreeMap<Partition, i64>, f: F) -> Result<RationalAQ>
where
    F: Fn(&Partition) -> Result<RationalAQ> + Sync,
{
    let entries: Vec<(&Partition, &i64)> = coeffs.iter().collect();
    let terms: Vec<RationalAQ> = entries
        .par_iter()
        .map(|(nu, &c)| f(nu).map(|r| r.scale(&q_int(c))))
        .collect::<Result<_>>()?;
    Ok(RationalAQ::sum(&terms))
}

/// Fractional part `δ ∈ [0, 1)` of the doubled lowest weight of `L_c(n0λ+λ')`.
/// It is zero unless `λ' ≠ ∅`; [`l_character`] strips the factor `q^{δ/2}`.
pub fn l_fractional_offset(p: &CherednikParams, lambda: &Partition, lambda_prime: &Partition) -> Result<Q> {
    p.check_label(lambda, lambda_prime)?;
    let coeffs = c_coeffs(lambda, lambda_prime, p.n0);
    let mut delta: Option<Q> = None;
    for nu in coeffs.keys() {
        let t = p.twice_exp(nu);
        let f = &t - t.floor();
        match &delta {
            None => delta = Some(f),
            Some(d) if *d != f => {
                return Err(Error::Consistency(format!("Verma exponents in L_c({}·{lambda}+{lambda_prime}) differ off the lattice", p.n0)));
            }
            _ => {}
        }
    }
    Ok(delta.unwrap_or_else(Q::zero))
}

/// `Tr_{L_c(n0λ+λ')}(σ q^h) = Σ_ν c^ν_{λ,λ',n0} Tr_{M_c(ν)}(σ q^h)`, divided by
/// `q^{δ/2}` with `δ` from [`l_fractional_offset`].
pub fn l_character(
    p: &CherednikParams,
    lambda: &Partition,
    lambda_prime: &Partition,
    cls: &Partition,
) -> Result<RationalAQ> {
    let delta = l_fractional_offset(p, lambda, lambda_prime)?;
    if cls.size() != p.n {
        return Err(Error::SizeMismatch(format!("class {cls} is not in S_{}", p.n)));
    }
    let coeffs = c_coeffs(lambda, lambda_prime, p.n0);
    sum_over_support(&coeffs, |nu| verma_character_shifted(p, nu, cls, &delta))
}

/// [`l_character`] at every conjugacy class.
pub fn l_character_all(p: &CherednikParams, lambda: &Partition, lambda_prime: &Partition) -> Result<GradedSnCharacter> {
    let classes = Partition::all(p.n)
        .into_iter()
        .map(|cls| l_character(p, lambda, lambda_prime, &cls).map(|r| (cls, r)))
        .collect::<Result<_>>()?;
    Ok(GradedSnCharacter { n: p.n, classes })
}

/// Verma character at every conjugacy class.
pub fn verma_character_all(p: &CherednikParams, nu: &Partition) -> Result<GradedSnCharacter> {
    let classes = Partition::all(p.n)
        .into_iter()
        .map(|cls| verma_character(p, nu, &cls).map(|r| (cls, r)))
        .collect::<Result<_>>()?;
    Ok(GradedSnCharacter { n: p.n, classes })
}

/// `Σ_k (−a)^k dim_q Hom(∧^k h_n, L_c(n0λ)) = Σ_ν c^ν_{λ,n0} · hook_components_verma(ν)`.
pub fn hook_components_l(p: &CherednikParams, lambda: &Partition) -> Result<RationalAQ> {
    p.check_label(lambda, &Partition::empty())?;
    let coeffs = c_coeffs(lambda, &Partition::empty(), p.n0);
    sum_over_support(&coeffs, |nu| hook_components_verma(p, nu))
}

/// `Σ_k a^k dim_q Hom(∧^k h, ·)` from the `(−a)` convention.
pub fn ch_aq(hooks: &RationalAQ) -> Result<RationalAQ> {
    hooks.substitute_neg_a()
}

/// `Q_c(n0λ) = ch L_c(n0λ) · Π_{i=2}^{d} (1 − q^i)`, which must be a Laurent polynomial.
pub fn numerator_q(p: &CherednikParams, lambda: &Partition) -> Result<LaurentAQ> {
    let id = Partition::column(p.n);
    let ch = l_character(p, lambda, &Partition::empty(), &id)?;
    let d = lambda.size() as i64;
    let mut factor = LaurentAQ::one();
    for i in 2..=d {
        factor = &factor * &LaurentAQ::one_minus_q(i);
    }
    ch.mul_poly(&factor).to_polynomial().map_err(|e| {
        Error::Consistency(format!("numerator of ch L_c({}·{lambda}) is not a polynomial: {e}", p.n0))
    })
}

/// HOMFLY of the `(m, n)` torus link: `Σ_{|λ|=d} dim π_λ · ch_{a,q}(L_{m/n}(n0λ))`.
pub fn torus_link_homfly(m: usize, n: usize) -> Result<RationalAQ> {
    let p = CherednikParams::new(m, n)?;
    let d = p.d();
    let terms: Vec<RationalAQ> = Partition::all(d)
        .par_iter()
        .map(|lambda| {
            let h = ch_aq(&hook_components_l(&p, lambda)?)?;
            Ok(h.scale(&Q::from_integer(lambda.dim())))
        })
        .collect::<Result<_>>()?;
    Ok(RationalAQ::sum(&terms))
}

/// Link positivity: `P · Π_{i=2}^{d} (1 − q^i)` is a polynomial with nonnegative coefficients.
pub fn torus_link_numerator(m: usize, n: usize) -> Result<LaurentAQ> {
    let d = m.gcd(&n) as i64;
    let mut factor = LaurentAQ::one();
    for i in 2..=d {
        factor = &factor * &LaurentAQ::one_minus_q(i);
    }
    torus_link_homfly(m, n)?.mul_poly(&factor).to_polynomial()
}

/// `Tr_{L(n0λᵗ)}(σ q^h) = (−1)^{|λ|−1} Tr_{L(n0λ)}(σ q^{−h})` on closed forms.
pub fn duality_check(p: &CherednikParams, lambda: &Partition, cls: &Partition) -> Result<bool> {
    let lhs = l_character(p, &lambda.transpose(), &Partition::empty(), cls)?;
    let rhs = l_character(p, lambda, &Partition::empty(), cls)?.invert_q();
    let rhs = if lambda.size() % 2 == 1 { rhs } else { rhs.neg() };
    Ok(lhs.equals(&rhs))
}

/// `Σ_i (−1)^i [M(hook_i(n))]` against `Σ_{i<d} (−1)^i [L(n0(d−i, 1^i))]`, all classes.
pub fn grothendieck_check(p: &CherednikParams) -> Result<bool> {
    let n = p.n;
    let d = p.d();
    let mut lhs: Option<GradedSnCharacter> = None;
    for i in 0..n {
        let mut m = verma_character_all(p, &Partition::hook(n, i))?;
        if i % 2 == 1 {
            m = m.scale(&q_int(-1));
        }
        lhs = Some(match lhs {
            None => m,
            Some(acc) => acc.add(&m),
        });
    }
    let mut rhs: Option<GradedSnCharacter> = None;
    for i in 0..d {
        let mut l = l_character_all(p, &Partition::hook(d, i), &Partition::empty())?;
        if i % 2 == 1 {
            l = l.scale(&q_int(-1));
        }
        rhs = Some(match rhs {
            None => l,
            Some(acc) => acc.add(&l),
        });
    }
    Ok(lhs.expect("n ≥ 1").equals(&rhs.expect("d ≥ 1")))
}

/// Degree in `a` of the hook-component numerator, after cancelling denominators.
pub fn a_degree(r: &RationalAQ) -> Option<i64> {
    let r = r.clone().normalized();
    let hi = r.numerator().max_a()?;
    let lo = r.numerator().min_a()?;
    Some((hi - lo) / 2)
}

/// True when the identity-class series of `chi` has nonnegative integer
/// coefficients through doubled exponent `max_eq`.
pub fn graded_dims_ok(series: &LaurentAQ) -> bool {
    series.terms().values().all(|c| c.is_integer() && !c.is_negative())
}

#[cfg(test)]
mod tests;
