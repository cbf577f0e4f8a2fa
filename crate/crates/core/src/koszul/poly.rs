//! Sparse multivariate polynomials over `Q`, Dunkl operators and the
//! singular potential.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{q_frac, q_int, q_to_string, Q};

/// Polynomial in `nvars` variables; exponent vectors map to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Q) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut out = Self::zero(nvars);
        out.add_term(exps, c);
        out
    }

    /// `x_i`, 0-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, Q::one())
    }

    /// `p_k = Σ x_i^k`; `p_0 = nvars`.
    pub fn power_sum(nvars: usize, k: u32) -> Self {
        let mut out = Self::zero(nvars);
        for i in 0..nvars {
            let mut e = vec![0; nvars];
            e[i] = k;
            out.add_term(e, Q::one());
        }
        out
    }

    /// Elementary symmetric polynomial `e_k`.
    pub fn elementary(nvars: usize, k: usize) -> Self {
        let mut out = Self::zero(nvars);
        let mut pick = vec![false; nvars];
        fn rec(i: usize, left: usize, pick: &mut Vec<bool>, out: &mut MultiPoly) {
            if left == 0 {
                let e = pick.iter().map(|&b| b as u32).collect();
                out.add_term(e, Q::one());
                return;
            }
            if i == pick.len() {
                return;
            }
            pick[i] = true;
            rec(i + 1, left - 1, pick, out);
            pick[i] = false;
            rec(i + 1, left, pick, out);
        }
        rec(0, k, &mut pick, &mut out);
        out
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exps.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exps);
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Q> {
        &self.terms
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Degree-`d` part under the weights `w`.
    pub fn weighted_part(&self, w: &[u32], d: u32) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e.iter().zip(w).map(|(a, b)| a * b).sum::<u32>() == d {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `∂/∂x_i`.
    pub fn partial(&self, i: usize) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * q_int(e[i] as i64));
            }
        }
        out
    }

    /// `x_i ↦ x_{perm[i]}`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut f = vec![0; self.nvars];
            for (i, &a) in e.iter().enumerate() {
                f[perm[i]] += a;
            }
            out.add_term(f, c.clone());
        }
        out
    }

    /// `s_{ij} f`.
    pub fn swap(&self, i: usize, j: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute(&perm)
    }

    /// Exact quotient by `x_i − x_j`.
    pub fn div_difference(&self, i: usize, j: usize) -> Result<Self> {
        // synthetic division in x_i, coefficients in the other variables
        let mut by_power: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut f = e.clone();
            let k = f[i];
            f[i] = 0;
            by_power.entry(k).or_insert_with(|| MultiPoly::zero(self.nvars)).add_term(f, c.clone());
        }
        let Some(&top) = by_power.keys().next_back() else {
            return Ok(Self::zero(self.nvars));
        };
        let xj = Self::var(self.nvars, j);
        let mut quotient = Self::zero(self.nvars);
        let mut carry = Self::zero(self.nvars);
        for k in (1..=top).rev() {
            // q_{k−1} = a_k + x_j q_k
            let a = by_power.remove(&k).unwrap_or_else(|| Self::zero(self.nvars));
            carry = &a + &(&xj * &carry);
            for (e, c) in &carry.terms {
                let mut f = e.clone();
                f[i] += k - 1;
                quotient.add_term(f, c.clone());
            }
        }
        let a0 = by_power.remove(&0).unwrap_or_else(|| Self::zero(self.nvars));
        if !(&a0 + &(&xj * &carry)).is_zero() {
            return Err(Error::NotExact(format!("polynomial is not divisible by x{} - x{}", i + 1, j + 1)));
        }
        Ok(quotient)
    }

    /// Substitute `x_{n} = −(x_1 + … + x_{n−1})` and drop the last variable.
    pub fn eliminate_last(&self) -> Self {
        let k = self.nvars - 1;
        let minus_sum = (0..k).fold(Self::zero(k), |acc, i| &acc - &Self::var(k, i));
        let mut powers: Vec<MultiPoly> = vec![Self::one(k)];
        let mut out = Self::zero(k);
        for (e, c) in &self.terms {
            let last = e[k] as usize;
            while powers.len() <= last {
                let next = &powers[powers.len() - 1] * &minus_sum;
                powers.push(next);
            }
            let head = Self::monomial(k, e[..k].to_vec(), c.clone());
            out = &out + &(&head * &powers[last]);
        }
        out
    }

    /// Evaluate every variable `x_i ↦ images[i]`.
    pub fn compose(&self, images: &[MultiPoly]) -> Self {
        let target = images.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = Self::zero(target);
        let mut cache: BTreeMap<(usize, u32), MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    let p = cache.entry((i, a)).or_insert_with(|| images[i].pow(a));
                    term = &term * p;
                }
            }
            out = &out + &term;
        }
        out
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&q_int(-1))
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &a)| a > 0)
                    .map(|(i, &a)| if a == 1 { format!("x{}", i + 1) } else { format!("x{}^{a}", i + 1) })
                    .collect();
                if mono.is_empty() {
                    q_to_string(c)
                } else {
                    format!("{}*{}", q_to_string(c), mono.join("*"))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{self}]")
    }
}

/// `D_i f = ∂_i f − c Σ_{j≠i} (f − s_{ij} f)/(x_i − x_j)` on `C[x_1..x_n]`.
pub fn dunkl_apply(c: &Q, i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let mut out = f.partial(i);
    for j in 0..f.nvars() {
        if j == i {
            continue;
        }
        let diff = f - &f.swap(i, j);
        let q = diff.div_difference(i, j)?;
        out = &out - &q.scale(c);
    }
    Ok(out)
}

/// Dunkl operator for `y_i = e_i − (1/n) Σ e_k ∈ h`: `D_i − (1/n) ∂_Σ`.
pub fn dunkl_apply_h(c: &Q, i: usize, f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.nvars();
    let mut grad = MultiPoly::zero(n);
    for k in 0..n {
        grad = &grad + &f.partial(k);
    }
    Ok(&dunkl_apply(c, i, f)? - &grad.scale(&q_frac(1, n as i64)))
}

/// `H_2 = Σ_i D_i²`.
pub fn calogero_moser(c: &Q, f: &MultiPoly) -> Result<MultiPoly> {
    let mut out = MultiPoly::zero(f.nvars());
    for i in 0..f.nvars() {
        out = &out + &dunkl_apply(c, i, &dunkl_apply(c, i, f)?)?;
    }
    Ok(out)
}

/// `F_{m,n} = Coef_{z^{m+1}} Π_i (1 − z x_i)^{m/n} = Coef_{z^{m+1}} exp(−(m/n) Σ_k p_k z^k / k)`.
pub fn singular_potential(m: usize, n: usize) -> Result<MultiPoly> {
    if m == 0 || n < 2 {
        return Err(Error::InvalidArgument("need m ≥ 1 and n ≥ 2".into()));
    }
    let c = q_frac(m as i64, n as i64);
    let top = m + 1;
    // s_k = −c p_k / k; E_j = (1/j) Σ_{k=1}^{j} k s_k E_{j−k}
    let s: Vec<MultiPoly> = (0..=top)
        .map(|k| if k == 0 { MultiPoly::zero(n) } else { MultiPoly::power_sum(n, k as u32).scale(&(-&c / q_int(k as i64))) })
        .collect();
    let mut e: Vec<MultiPoly> = vec![MultiPoly::one(n)];
    for j in 1..=top {
        let mut acc = MultiPoly::zero(n);
        for k in 1..=j {
            acc = &acc + &(&s[k] * &e[j - k]).scale(&q_int(k as i64));
        }
        e.push(acc.scale(&q_frac(1, j as i64)));
    }
    Ok(e.pop().expect("top ≥ 1"))
}

/// `f_i = ∂F_{m,n}/∂x_i`.
pub fn singular_polynomials(m: usize, n: usize) -> Result<Vec<MultiPoly>> {
    let f = singular_potential(m, n)?;
    Ok((0..n).map(|i| f.partial(i)).collect())
}
