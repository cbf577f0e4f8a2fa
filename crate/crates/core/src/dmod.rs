//! Characters of `SL_m`-equivariant D-modules on the nilpotent cone.
//!
//! The isotypic part `M^{(n)}` of `M` for the representations occurring in
//! `V^{⊗n}` has the Frobenius character of `L_{m/n}(n0λ)`, `n = s + km`. The
//! multiplicity of `V_μ` (a `GL_m` partition of `n`) is therefore the
//! `π_μ`-isotypic part of that Cherednik module.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::cherednik::{l_character_all, CherednikParams, GradedSnCharacter};
use crate::error::{Error, Result};
use crate::laurent::{LaurentAQ, RationalAQ};
use crate::partition::Partition;
use crate::rational::{q_int, Q};
use crate::symfunc::{c_coeffs, kostka_foulkes, mn_character, phi_power_weighted, principal_specialization, SymFunc};

/// D-module with central character `θ_s` on the orbit `m0·λ`, `λ ⊢ gcd(m, s)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DmodLabel {
    pub m: usize,
    pub s: usize,
    pub lambda: Partition,
}

impl DmodLabel {
    pub fn new(m: usize, s: usize, lambda: Partition) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("m must be positive".into()));
        }
        if s >= m {
            return Err(Error::InvalidArgument(format!("central character s = {s} must lie in [0, {}]", m - 1)));
        }
        let label = DmodLabel { m, s, lambda };
        if label.lambda.size() != label.d() {
            return Err(Error::Labeling(format!(
                "λ = {} must be a partition of gcd(m, s) = {}",
                label.lambda,
                label.d()
            )));
        }
        Ok(label)
    }

    /// `gcd(m, s)`, with `gcd(m, 0) = m`.
    pub fn d(&self) -> usize {
        self.m.gcd(&self.s)
    }

    pub fn m0(&self) -> usize {
        self.m / self.d()
    }

    /// The nilpotent orbit `m0·λ`, a partition of `m`.
    pub fn orbit(&self) -> Partition {
        Partition::from_parts_unsorted(self.lambda.parts().iter().map(|&p| p * self.m0()).collect())
    }

    /// `n = s + km`.
    pub fn level(&self, k: usize) -> Result<usize> {
        let n = self.s + k * self.m;
        if n == 0 {
            return Err(Error::InvalidArgument("level n = s + km must be positive".into()));
        }
        Ok(n)
    }

    /// Parameters `c = m/n` of the Cherednik module at level `k`.
    pub fn params(&self, k: usize) -> Result<CherednikParams> {
        CherednikParams::new(self.m, self.level(k)?)
    }
}

/// `μ` padded to `m` parts, minus its last part: the `SL_m` label.
pub fn sl_label(mu: &Partition, m: usize) -> Partition {
    let last = if mu.len() < m { 0 } else { mu.part(m - 1) };
    Partition::from_parts_unsorted(mu.parts().iter().map(|&p| p - last).collect())
}

/// Multiplicity series of `V_μ`, `μ ⊢ n` with at most `m` rows.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedGLCharacter {
    pub m: usize,
    pub n: usize,
    /// Largest doubled `q`-exponent kept.
    pub max_eq: i64,
    pub coeffs: BTreeMap<Partition, LaurentAQ>,
}

impl TruncatedGLCharacter {
    pub fn coeff(&self, mu: &Partition) -> LaurentAQ {
        self.coeffs.get(mu).cloned().unwrap_or_default()
    }

    /// Coefficient of the `SL_m` representation with label `label`.
    pub fn coeff_sl(&self, label: &Partition) -> Option<&LaurentAQ> {
        self.coeffs.iter().find(|(mu, _)| sl_label(mu, self.m) == *label).map(|(_, c)| c)
    }

    /// Coefficients keyed by `SL_m` label.
    pub fn by_sl_label(&self) -> BTreeMap<Partition, LaurentAQ> {
        self.coeffs.iter().map(|(mu, c)| (sl_label(mu, self.m), c.clone())).collect()
    }

    pub fn nonneg(&self) -> bool {
        self.coeffs.values().all(|c| c.terms().values().all(|x| x.is_integer() && !x.is_negative()))
    }
}

fn gl_window(m: usize, n: usize) -> Vec<Partition> {
    Partition::all(n).into_iter().filter(|mu| mu.len() <= m).collect()
}

fn class_character(label: &DmodLabel, k: usize) -> Result<GradedSnCharacter> {
    let p = label.params(k)?;
    l_character_all(&p, &label.lambda, &Partition::empty())
}

/// Exact multiplicity of every `V_μ`, `μ ⊢ n`, in `M^{(n)}`.
pub fn dmod_multiplicities(label: &DmodLabel, k: usize) -> Result<BTreeMap<Partition, RationalAQ>> {
    let chi = class_character(label, k)?;
    let n = chi.n;
    Ok(gl_window(label.m, n).into_par_iter().map(|mu| (mu.clone(), chi.isotypic(&mu))).collect())
}

/// `Ch_{M^{(n)}}` truncated at `q^{trunc}`, via class sums.
pub fn dmod_character_truncated(label: &DmodLabel, k: usize, trunc: i64) -> Result<TruncatedGLCharacter> {
    let chi = class_character(label, k)?;
    let n = chi.n;
    let max_eq = 2 * trunc;
    let series: Vec<(Partition, Q, LaurentAQ)> = chi
        .classes
        .par_iter()
        .map(|(cls, r)| (cls.clone(), Q::new(BigInt::one(), cls.z()), r.expand(max_eq)))
        .collect();
    let coeffs = gl_window(label.m, n)
        .into_par_iter()
        .map(|mu| {
            let mut acc = LaurentAQ::zero();
            for (cls, w, s) in &series {
                let x = mn_character(&mu, cls).expect("sizes agree");
                if x != 0 {
                    acc += &s.scale(&(w * q_int(x)));
                }
            }
            (mu, acc)
        })
        .collect();
    Ok(TruncatedGLCharacter { m: label.m, n, max_eq, coeffs })
}

/// Same character through `(1 − q) Σ_ν c^ν q^{e(ν)} s_ν(x_1..x_m, q x_1, …)` and the
/// bialternant in `m` variables. Exponential in `m`; for cross-checks only.
pub fn dmod_character_bialternant(label: &DmodLabel, k: usize, trunc: i64) -> Result<TruncatedGLCharacter> {
    let p = label.params(k)?;
    let n = p.n;
    let max_eq = 2 * trunc;
    let mut weights: BTreeMap<Partition, LaurentAQ> = BTreeMap::new();
    for (nu, c) in c_coeffs(&label.lambda, &Partition::empty(), p.n0) {
        let e = p.lowest_weight_exp(&nu)?;
        let coeff = LaurentAQ::monomial((0, e), q_int(c));
        for (rho, x) in SymFunc::schur(nu).to_power().terms() {
            *weights.entry(rho.clone()).or_default() += &coeff.scale(x);
        }
    }
    // (1 − q) applied to the weights keeps the series truncation exact
    let weights: BTreeMap<Partition, LaurentAQ> =
        weights.into_iter().map(|(r, w)| (r, &w * &LaurentAQ::one_minus_q(1))).collect();
    let series = phi_power_weighted(&weights, label.m, max_eq);
    let coeffs = series
        .schur_coeffs()
        .into_iter()
        .filter(|(mu, _)| mu.size() == n)
        .collect();
    Ok(TruncatedGLCharacter { m: label.m, n, max_eq, coeffs })
}

/// `P_μ(q) = K_{μ,(n^m)}(q)`, the `q`-analogue of the zero-weight multiplicity.
pub fn p_mu_zero_weight(mu: &Partition, m: usize, n: usize) -> Result<LaurentAQ> {
    if mu.size() != n * m || mu.len() > m {
        return Err(Error::SizeMismatch(format!("{mu} is not a weight of (C^{m})^⊗{}", n * m)));
    }
    kostka_foulkes(mu, &Partition::new(vec![n; m])?)
}

/// `q^{−d(μ)/2} dim_q V_μ / [m]_q` with `d(μ) = deg dim_q V_μ − m + 1`, where
/// `dim_q V_μ = Π_x [m + c(x)]_q / [h(x)]_q` has constant term 1.
pub fn euler_rhs(label: &Partition, m: usize) -> RationalAQ {
    let dim_q = principal_specialization(label, m).shift((0, -2 * label.n_statistic() as i64));
    let deg = dim_q.max_q().unwrap_or(0) / 2;
    let d = deg - m as i64 + 1;
    RationalAQ::with_factors(&dim_q * &LaurentAQ::one_minus_q(1), &[m as u32]).shift((0, -d))
}

/// `Σ_i (−1)^i [M_{(m−i,1^i)}] = Σ_μ q^{−d(μ)/2}/[m]_q [V_μ] dim_q V_μ` at level `n = km`,
/// coefficient by coefficient, exactly.
pub fn euler_dmod_check(m: usize, k: usize) -> Result<bool> {
    let mut lhs: BTreeMap<Partition, RationalAQ> = BTreeMap::new();
    for i in 0..m {
        let label = DmodLabel::new(m, 0, Partition::hook(m, i))?;
        for (mu, c) in dmod_multiplicities(&label, k)? {
            let c = if i % 2 == 1 { c.neg() } else { c };
            let slot = lhs.entry(mu).or_insert_with(RationalAQ::zero);
            *slot = slot.add(&c);
        }
    }
    Ok(lhs.iter().all(|(mu, c)| c.equals(&euler_rhs(&sl_label(mu, m), m))))
}

/// Character of the multiplicity space of `π_λ` in `π_μ ⊗ S C^m`.
pub fn small_multiplicity_e(lambda: &Partition, mu: &Partition) -> Result<RationalAQ> {
    let m = lambda.size();
    if mu.size() != m {
        return Err(Error::SizeMismatch(format!("|{lambda}| ≠ |{mu}|")));
    }
    let terms: Vec<RationalAQ> = Partition::all(m)
        .iter()
        .map(|cls| {
            let x = mn_character(lambda, cls)? * mn_character(mu, cls)?;
            let den: Vec<u32> = cls.parts().iter().map(|&p| p as u32).collect();
            Ok(RationalAQ::with_factors(LaurentAQ::constant(Q::new(BigInt::from(x), cls.z())), &den))
        })
        .collect::<Result<_>>()?;
    Ok(RationalAQ::sum(&terms))
}

/// `Ch_{M_λ^{SL_m}}(q)` for `s = 0` read off the level-`m` module.
pub fn invariants_character(lambda: &Partition) -> Result<RationalAQ> {
    let m = lambda.size();
    let label = DmodLabel::new(m, 0, lambda.clone())?;
    let chi = class_character(&label, 1)?;
    Ok(chi.isotypic(&Partition::column(m)))
}

/// `Σ_λ Ch_{M_λ^{SL_m}}(q) χ_λ(σ) = q^{(m−1)/2} det_h(1 − qσ)^{−1}` at every class.
pub fn invariants_check(m: usize) -> Result<bool> {
    let chars: Vec<(Partition, RationalAQ)> = Partition::all(m)
        .into_iter()
        .map(|l| invariants_character(&l).map(|c| (l, c)))
        .collect::<Result<_>>()?;
    for cls in Partition::all(m) {
        let terms: Vec<RationalAQ> = chars
            .iter()
            .map(|(l, c)| Ok(c.scale(&q_int(mn_character(l, &cls)?))))
            .collect::<Result<_>>()?;
        let lhs = RationalAQ::sum(&terms);
        let den: Vec<u32> = cls.parts().iter().map(|&p| p as u32).collect();
        let rhs = RationalAQ::with_factors(LaurentAQ::one_minus_q(1).shift((0, m as i64 - 1)), &den);
        if !lhs.equals(&rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Doubled `q`-shift `t` with `b = q^{t/2} a` on every common `SL_m` label, compared
/// through the shorter truncation; `None` if no single shift works.
pub fn stabilization_shift(a: &TruncatedGLCharacter, b: &TruncatedGLCharacter) -> Option<i64> {
    let (la, lb) = (a.by_sl_label(), b.by_sl_label());
    let mut shift: Option<i64> = None;
    for (label, ca) in &la {
        let Some(cb) = lb.get(label) else { continue };
        if ca.is_zero() && cb.is_zero() {
            continue;
        }
        let t = cb.min_q()? - ca.min_q()?;
        if *shift.get_or_insert(t) != t {
            return None;
        }
    }
    let t = shift.unwrap_or(0);
    let window = a.max_eq.min(b.max_eq - t);
    for (label, ca) in &la {
        let Some(cb) = lb.get(label) else { continue };
        if ca.truncate_q(window).shift((0, t)) != cb.truncate_q(window + t) {
            return None;
        }
    }
    Some(t)
}

#[cfg(test)]
mod tests;
