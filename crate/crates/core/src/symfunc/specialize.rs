//! Specializations `θ_{a,q}`, `φ_{1/(1−q)}` and the principal specialization.

use std::collections::BTreeMap;

use super::SymFunc;
use crate::laurent::{LaurentAQ, RationalAQ};
use crate::partition::Partition;
use crate::rational::q_int;

/// `θ_{a,q}(p_i) = (1 − a^i)/(1 − q^i)`, extended multiplicatively and linearly.
pub fn theta_spec(f: &SymFunc) -> RationalAQ {
    let p = f.to_power();
    let terms: Vec<RationalAQ> = p
        .terms()
        .iter()
        .map(|(rho, c)| {
            let mut num = LaurentAQ::constant(c.clone());
            for &r in rho.parts() {
                num = &num * &(LaurentAQ::one() - LaurentAQ::a_pow(r as i64));
            }
            RationalAQ::with_factors(num, &rho.parts().iter().map(|&r| r as u32).collect::<Vec<_>>())
        })
        .collect();
    RationalAQ::sum(&terms)
}

/// `θ_{a,q}(s_λ) = q^{n(λ)} Π_x (1 − a q^{c(x)}) / Π_x (1 − q^{h(x)})`.
pub fn theta_schur(lambda: &Partition) -> RationalAQ {
    let mut num = LaurentAQ::q_pow(lambda.n_statistic() as i64);
    for c in lambda.contents() {
        num = &num * &LaurentAQ::from_ints(&[(0, 0, 1), (2, 2 * c, -1)]);
    }
    let hooks: Vec<u32> = lambda.hook_lengths().into_iter().map(|h| h as u32).collect();
    RationalAQ::new_unreduced(num, BTreeMap::new()).mul(&RationalAQ::with_factors(LaurentAQ::one(), &hooks))
}

/// `s_λ(1, q, …, q^{m−1}) = q^{n(λ)} Π (1 − q^{m+c})/(1 − q^h)`.
pub fn principal_specialization(lambda: &Partition, m: usize) -> LaurentAQ {
    if lambda.len() > m {
        return LaurentAQ::zero();
    }
    let mut num = LaurentAQ::q_pow(lambda.n_statistic() as i64);
    for c in lambda.contents() {
        num = &num * &LaurentAQ::one_minus_q(m as i64 + c);
    }
    let hooks: Vec<u32> = lambda.hook_lengths().into_iter().map(|h| h as u32).collect();
    RationalAQ::with_factors(num, &hooks)
        .to_polynomial()
        .expect("principal specializations are polynomials")
}

/// Polynomial in `x_1..x_k` whose coefficients are truncated `q`-series.
#[derive(Clone, Debug, PartialEq)]
pub struct XQSeries {
    nvars: usize,
    /// Largest doubled `q`-exponent kept.
    max_eq: i64,
    terms: BTreeMap<Vec<u32>, LaurentAQ>,
}

impl XQSeries {
    pub fn zero(nvars: usize, max_eq: i64) -> Self {
        XQSeries { nvars, max_eq, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, max_eq: i64) -> Self {
        let mut out = Self::zero(nvars, max_eq);
        out.add(vec![0; nvars], &LaurentAQ::one());
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_eq(&self) -> i64 {
        self.max_eq
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, LaurentAQ> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> LaurentAQ {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, exps: Vec<u32>, c: &LaurentAQ) {
        let c = c.truncate_q(self.max_eq);
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(exps.clone()).or_default();
        *e += &c;
        if e.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars, self.max_eq.min(other.max_eq));
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let c = c1.mul_truncated(c2, out.max_eq);
                out.add(e, &c);
            }
        }
        out
    }

    pub fn scale(&self, c: &LaurentAQ) -> Self {
        let mut out = Self::zero(self.nvars, self.max_eq);
        for (e, x) in &self.terms {
            out.add(e.clone(), &x.mul_truncated(c, self.max_eq));
        }
        out
    }

    pub fn add_series(&mut self, other: &Self) {
        for (e, c) in &other.terms {
            self.add(e.clone(), c);
        }
    }

    /// Schur coefficients of a symmetric polynomial: the coefficient of
    /// `x^{μ+δ}` in `f · a_δ`.
    pub fn schur_coeffs(&self) -> BTreeMap<Partition, LaurentAQ> {
        let k = self.nvars;
        let delta: Vec<u32> = (0..k as u32).rev().collect();
        let mut prod: BTreeMap<Vec<u32>, LaurentAQ> = BTreeMap::new();
        for (perm, sign) in permutations(k) {
            let shift: Vec<u32> = perm.iter().map(|&i| delta[i]).collect();
            for (e, c) in &self.terms {
                let ee: Vec<u32> = e.iter().zip(&shift).map(|(a, b)| a + b).collect();
                // only strictly decreasing exponents can be x^{μ+δ}
                if ee.windows(2).all(|w| w[0] > w[1]) {
                    let slot = prod.entry(ee).or_default();
                    *slot += &c.scale(&q_int(sign));
                }
            }
        }
        prod.into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| {
                let mu = e.iter().zip(&delta).map(|(a, d)| (a - d) as usize).collect();
                (Partition::from_parts_unsorted(mu), c)
            })
            .collect()
    }
}

/// All permutations of `0..k` with their signs.
pub(crate) fn permutations(k: usize) -> Vec<(Vec<usize>, i64)> {
    fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        let k = used.len();
        if cur.len() == k {
            out.push((cur.clone(), sign));
            return;
        }
        for i in 0..k {
            if used[i] {
                continue;
            }
            // inversions added by placing i after the current prefix
            let inv = cur.iter().filter(|&&j| j > i).count();
            used[i] = true;
            cur.push(i);
            rec(cur, used, if inv % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            used[i] = false;
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; k], 1, &mut out);
    out
}

/// `p_r(x_1..x_k) / (1 − q^r)` as a truncated series.
fn phi_power(r: usize, nvars: usize, max_eq: i64) -> XQSeries {
    let mut out = XQSeries::zero(nvars, max_eq);
    let geo = LaurentAQ::one().geometric_truncated(r as u32, max_eq);
    for i in 0..nvars {
        let mut e = vec![0; nvars];
        e[i] = r as u32;
        out.add(e, &geo);
    }
    out
}

/// `Σ_ρ w_ρ(q) φ(p_ρ)` in `nvars` variables, truncated at doubled `q`-exponent `max_eq`.
pub fn phi_power_weighted(weights: &BTreeMap<Partition, LaurentAQ>, nvars: usize, max_eq: i64) -> XQSeries {
    let mut factors: BTreeMap<(usize, i64), XQSeries> = BTreeMap::new();
    let mut out = XQSeries::zero(nvars, max_eq);
    for (rho, w) in weights {
        if w.is_zero() {
            continue;
        }
        // the weight may carry negative powers of q; expand further to compensate
        let inner_max = max_eq - w.min_q().unwrap_or(0).min(0);
        let mut acc = XQSeries::one(nvars, inner_max);
        for &r in rho.parts() {
            let f = factors
                .entry((r, inner_max))
                .or_insert_with(|| phi_power(r, nvars, inner_max));
            acc = acc.mul(f);
        }
        for (e, c) in acc.terms {
            out.add(e, &c.mul_truncated(w, max_eq));
        }
    }
    out
}

/// `f(x_1, …, x_k, q x_1, …, q x_k, q² x_1, …)` truncated at `q^{trunc}`.
pub fn phi_spec(f: &SymFunc, nvars: usize, trunc: i64) -> XQSeries {
    let p = f.to_power();
    let weights: BTreeMap<Partition, LaurentAQ> = p
        .terms()
        .iter()
        .map(|(rho, c)| (rho.clone(), LaurentAQ::constant(c.clone())))
        .collect();
    phi_power_weighted(&weights, nvars, 2 * trunc)
}
