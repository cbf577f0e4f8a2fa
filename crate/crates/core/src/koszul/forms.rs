//! `S_n`-invariant differential forms `Q[p_1..p_n] ⊗ ∧(dp_1..dp_n)` on `C^n`
//! and the action of `H_2 = Σ D_i²` on them.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::linalg::{solve_unique, SVec};
use super::poly::{singular_polynomials, MultiPoly};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{q_frac, q_int, Q};

/// Power sums `p_s` for all `s ≥ 0` written in `p_1..p_n`.
pub struct PowerSums {
    pub n: usize,
    cache: Vec<MultiPoly>,
    elementary: Vec<MultiPoly>,
}

impl PowerSums {
    pub fn new(n: usize) -> Self {
        let mut e = vec![MultiPoly::one(n)];
        // k e_k = Σ_{i=1}^k (−1)^{i−1} e_{k−i} p_i
        for k in 1..=n {
            let mut acc = MultiPoly::zero(n);
            for i in 1..=k {
                let sign = q_int(if i % 2 == 1 { 1 } else { -1 });
                acc = &acc + &(&e[k - i] * &MultiPoly::var(n, i - 1)).scale(&sign);
            }
            e.push(acc.scale(&q_frac(1, k as i64)));
        }
        let mut cache = vec![MultiPoly::constant(n, q_int(n as i64))];
        cache.extend((0..n).map(|i| MultiPoly::var(n, i)));
        PowerSums { n, cache, elementary: e }
    }

    /// `p_s`; for `s > n` via `p_s = Σ_{i=1}^n (−1)^{i−1} e_i p_{s−i}`.
    pub fn get(&mut self, s: usize) -> MultiPoly {
        while self.cache.len() <= s {
            let t = self.cache.len();
            let mut acc = MultiPoly::zero(self.n);
            for i in 1..=self.n {
                let sign = q_int(if i % 2 == 1 { 1 } else { -1 });
                acc = &acc + &(&self.elementary[i] * &self.cache[t - i]).scale(&sign);
            }
            self.cache.push(acc);
        }
        self.cache[s].clone()
    }

    /// `dp_s = Σ_i ∂p_s/∂p_i dp_i`; empty for `s = 0`.
    pub fn differential(&mut self, s: usize) -> Vec<(usize, MultiPoly)> {
        if s == 0 {
            return Vec::new();
        }
        if s <= self.n {
            return vec![(s, MultiPoly::one(self.n))];
        }
        let ps = self.get(s);
        (1..=self.n).map(|i| (i, ps.partial(i - 1))).filter(|(_, f)| !f.is_zero()).collect()
    }

    /// `H_2(p_k) = (1+c)k(k−1)p_{k−2} − kc Σ_{s=0}^{k−2} p_s p_{k−2−s}`.
    pub fn h2_power_sum(&mut self, c: &Q, k: usize) -> MultiPoly {
        if k < 2 {
            return MultiPoly::zero(self.n);
        }
        let kk = k as i64;
        let mut out = self.get(k - 2).scale(&((Q::from_integer(1.into()) + c) * q_int(kk * (kk - 1))));
        for s in 0..=k - 2 {
            let prod = &self.get(s) * &self.get(k - 2 - s);
            out = &out - &prod.scale(&(c * q_int(kk)));
        }
        out
    }

    /// `H_2 f = Σ_k ∂_k f H_2(p_k) + Σ_{k,l} ∂_k∂_l f · kl p_{k+l−2}`.
    pub fn h2_function(&mut self, c: &Q, f: &MultiPoly) -> MultiPoly {
        let n = self.n;
        let mut out = MultiPoly::zero(n);
        for k in 1..=n {
            let fk = f.partial(k - 1);
            if fk.is_zero() {
                continue;
            }
            out = &out + &(&fk * &self.h2_power_sum(c, k));
            for l in 1..=n {
                let fkl = fk.partial(l - 1);
                if !fkl.is_zero() {
                    out = &out + &(&fkl * &self.get(k + l - 2)).scale(&q_int((k * l) as i64));
                }
            }
        }
        out
    }
}

/// `Σ_α f_α(p) dp_{α_1} ∧ … ∧ dp_{α_k}`, `α` strictly increasing in `1..=n`.
#[derive(Clone, PartialEq, Eq)]
pub struct InvariantForm {
    pub n: usize,
    terms: BTreeMap<Vec<usize>, MultiPoly>,
}

impl InvariantForm {
    pub fn zero(n: usize) -> Self {
        InvariantForm { n, terms: BTreeMap::new() }
    }

    pub fn function(f: MultiPoly) -> Self {
        let n = f.nvars();
        let mut out = Self::zero(n);
        out.add(Vec::new(), f);
        out
    }

    /// `f dp_{α_1} ∧ … ∧ dp_{α_k}` with the indices in any order.
    pub fn new(n: usize, f: MultiPoly, alpha: &[usize]) -> Result<Self> {
        if let Some(&a) = alpha.iter().find(|&&a| a == 0 || a > n) {
            return Err(Error::InvalidArgument(format!("dp_{a} is out of range 1..={n}")));
        }
        let mut sorted = Vec::new();
        let mut sign = 1;
        for &a in alpha {
            match insert_sorted(&sorted, a) {
                None => return Ok(Self::zero(n)),
                Some((s, sg)) => {
                    sorted = s;
                    sign *= sg;
                }
            }
        }
        let mut out = Self::zero(n);
        out.add(sorted, f.scale(&q_int(sign)));
        Ok(out)
    }

    pub fn dp(n: usize, k: usize) -> Result<Self> {
        Self::new(n, MultiPoly::one(n), &[k])
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, MultiPoly> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&mut self, alpha: Vec<usize>, f: MultiPoly) {
        if f.is_zero() {
            return;
        }
        let slot = self.terms.entry(alpha.clone()).or_insert_with(|| MultiPoly::zero(f.nvars()));
        *slot = &*slot + &f;
        if slot.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, f) in &other.terms {
            out.add(a.clone(), f.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, f) in &other.terms {
            out.add(a.clone(), -f);
        }
        out
    }

    pub fn wedge(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.n);
        for (a, f) in &self.terms {
            for (b, g) in &other.terms {
                let mut cur = a.clone();
                let mut sign = 1;
                let mut dead = false;
                for &x in b {
                    match insert_sorted(&cur, x) {
                        None => {
                            dead = true;
                            break;
                        }
                        Some((s, sg)) => {
                            cur = s;
                            sign *= sg;
                        }
                    }
                }
                if !dead {
                    out.add(cur, (f * g).scale(&q_int(sign)));
                }
            }
        }
        out
    }

    /// Exterior degree of every term, if homogeneous.
    pub fn exterior_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|a| a.len());
        let first = it.next()?;
        it.all(|k| k == first).then_some(first)
    }

    /// Components in `dx_{μ_1} ∧ … ∧ dx_{μ_k}` as polynomials in `x_1..x_n`,
    /// with `dp_a = Σ_μ a x_μ^{a−1} dx_μ`.
    pub fn coordinate_components(&self) -> BTreeMap<Vec<usize>, MultiPoly> {
        let n = self.n;
        let power_sums: Vec<MultiPoly> = (1..=n).map(|k| MultiPoly::power_sum(n, k as u32)).collect();
        let mut out: BTreeMap<Vec<usize>, MultiPoly> = BTreeMap::new();
        for (alpha, f) in &self.terms {
            let fx = f.compose(&power_sums);
            // expand dp_{α_1} ∧ … one factor at a time
            let mut acc: BTreeMap<Vec<usize>, MultiPoly> = BTreeMap::from([(Vec::new(), fx)]);
            for &a in alpha {
                let mut next: BTreeMap<Vec<usize>, MultiPoly> = BTreeMap::new();
                for (mu, g) in &acc {
                    for x in 0..n {
                        if let Some((s, sg)) = insert_sorted(mu, x) {
                            let mut e = vec![0; n];
                            e[x] = a as u32 - 1;
                            let term = (g * &MultiPoly::monomial(n, e, q_int(a as i64))).scale(&q_int(sg));
                            let slot = next.entry(s).or_insert_with(|| MultiPoly::zero(n));
                            *slot = &*slot + &term;
                        }
                    }
                }
                acc = next;
            }
            for (mu, g) in acc {
                let slot = out.entry(mu).or_insert_with(|| MultiPoly::zero(n));
                *slot = &*slot + &g;
            }
        }
        out.retain(|_, g| !g.is_zero());
        out
    }
}

impl fmt::Display for InvariantForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, g)| {
                let w: Vec<String> = a.iter().map(|k| format!("dp{k}")).collect();
                let coeff = g.to_string().replace('x', "p");
                if w.is_empty() { format!("({coeff})") } else { format!("({coeff}) {}", w.join("^")) }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for InvariantForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InvariantForm[{self}]")
    }
}

fn insert_sorted(list: &[usize], r: usize) -> Option<(Vec<usize>, i64)> {
    if list.contains(&r) {
        return None;
    }
    let above = list.iter().filter(|&&x| x > r).count();
    let mut out = list.to_vec();
    out.push(r);
    out.sort_unstable();
    Some((out, if above % 2 == 0 { 1 } else { -1 }))
}

/// `f · (α with α_j replaced by dp_t)`, expanding `dp_t` for `t > n`.
fn replace_slot(ps: &mut PowerSums, out: &mut InvariantForm, alpha: &[usize], j: usize, t: usize, f: &MultiPoly) {
    for (i, g) in ps.differential(t) {
        let mut rest = alpha.to_vec();
        rest.remove(j);
        if rest.contains(&i) {
            continue;
        }
        // put i back at position j, then sort
        let mut seq = rest.clone();
        seq.insert(j, i);
        let mut sign = 1;
        let mut sorted: Vec<usize> = Vec::new();
        for &x in &seq {
            let (s, sg) = insert_sorted(&sorted, x).expect("distinct");
            sorted = s;
            sign *= sg;
        }
        out.add(sorted, (f * &g).scale(&q_int(sign)));
    }
}

/// Action of `H_2` on invariant forms:
/// `H_2(f ω) = H_2(f) ω + 2(∇f, ∇ω) + f H_2(ω)`, slot by slot.
pub fn h2_apply(c: &Q, form: &InvariantForm, n: usize) -> Result<InvariantForm> {
    if form.n != n {
        return Err(Error::SizeMismatch(format!("form lives on C^{}, not C^{n}", form.n)));
    }
    let mut ps = PowerSums::new(n);
    let mut out = InvariantForm::zero(n);
    let one_c = Q::from_integer(1.into()) + c;
    for (alpha, f) in &form.terms {
        if let Some(&a) = alpha.iter().find(|&&a| a == 0 || a > n) {
            return Err(Error::InvalidArgument(format!("dp_{a} is out of range 1..={n}")));
        }
        out.add(alpha.clone(), ps.h2_function(c, f));
        for (j, &a) in alpha.iter().enumerate() {
            if a < 2 {
                continue;
            }
            let ai = a as i64;
            // 2(∇f, ∇dp_a) = 2 Σ_s s a(a−1)/(a+s−2) ∂f/∂p_s dp_{a+s−2}
            for s in 1..=n {
                let fs = f.partial(s - 1);
                if fs.is_zero() {
                    continue;
                }
                let coef = q_frac(2 * s as i64 * ai * (ai - 1), ai + s as i64 - 2);
                replace_slot(&mut ps, &mut out, alpha, j, a + s - 2, &fs.scale(&coef));
            }
            // f H_2(dp_a) = f[(1+c)a(a−1) dp_{a−2} − 2ac Σ_s p_s dp_{a−2−s}]
            replace_slot(&mut ps, &mut out, alpha, j, a - 2, &f.scale(&(&one_c * q_int(ai * (ai - 1)))));
            for s in 0..=a - 2 {
                let g = (f * &ps.get(s)).scale(&(c * q_int(-2 * ai)));
                replace_slot(&mut ps, &mut out, alpha, j, a - 2 - s, &g);
            }
        }
    }
    Ok(out)
}

/// Write a symmetric polynomial in `x_1..x_n` as a polynomial in `p_1..p_n`.
pub fn symmetric_to_power_sums(f: &MultiPoly) -> Result<MultiPoly> {
    let n = f.nvars();
    let mut out = MultiPoly::zero(n);
    let Some(top) = f.degree() else {
        return Ok(out);
    };
    for deg in 0..=top as usize {
        let part = f.weighted_part(&vec![1; n], deg as u32);
        if part.is_zero() {
            continue;
        }
        let lambdas = Partition::bounded(deg, deg, n);
        let rhos = Partition::bounded(deg, n, deg);
        let expo = |lam: &Partition| -> Vec<u32> { (0..n).map(|i| lam.part(i) as u32).collect() };
        let prods: Vec<MultiPoly> = rhos
            .iter()
            .map(|rho| rho.parts().iter().fold(MultiPoly::one(n), |acc, &k| &acc * &MultiPoly::power_sum(n, k as u32)))
            .collect();
        let rows: Vec<SVec> = lambdas
            .iter()
            .map(|lam| {
                let e = expo(lam);
                prods.iter().enumerate().map(|(r, p)| (r, p.coeff(&e))).filter(|(_, x)| !x.is_zero()).collect()
            })
            .collect();
        let rhs: Vec<Q> = lambdas.iter().map(|lam| part.coeff(&expo(lam))).collect();
        let y = solve_unique(&rows, &rhs, rhos.len())
            .ok_or_else(|| Error::Consistency("power sums are not a basis in this degree".into()))?;
        let mut check = MultiPoly::zero(n);
        for ((rho, p), c) in rhos.iter().zip(&prods).zip(&y) {
            check = &check + &p.scale(c);
            let mut e = vec![0u32; n];
            for &k in rho.parts() {
                e[k - 1] += 1;
            }
            out.add_term(e, c.clone());
        }
        if check != part {
            return Err(Error::InvalidArgument("polynomial is not symmetric".into()));
        }
    }
    Ok(out)
}

/// Contraction with `ξ = Σ f_i ∂_i`: `ι_ξ(dp_j) = j Σ_i x_i^{j−1} f_i`.
pub struct Contraction {
    pub n: usize,
    images: Vec<MultiPoly>,
}

impl Contraction {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        let f = singular_polynomials(m, n)?;
        let mut images = Vec::with_capacity(n);
        for j in 1..=n {
            let mut g = MultiPoly::zero(n);
            for (i, fi) in f.iter().enumerate() {
                let mut e = vec![0; n];
                e[i] = j as u32 - 1;
                g = &g + &(&MultiPoly::monomial(n, e, q_int(j as i64)) * fi);
            }
            images.push(symmetric_to_power_sums(&g)?);
        }
        Ok(Contraction { n, images })
    }

    /// `ι_ξ(dp_j)` in `p_1..p_n`.
    pub fn image(&self, j: usize) -> &MultiPoly {
        &self.images[j - 1]
    }

    pub fn apply(&self, form: &InvariantForm) -> InvariantForm {
        let mut out = InvariantForm::zero(self.n);
        for (alpha, f) in &form.terms {
            for (k, &a) in alpha.iter().enumerate() {
                let mut rest = alpha.clone();
                rest.remove(k);
                let sign = q_int(if k % 2 == 0 { 1 } else { -1 });
                out.add(rest, (f * self.image(a)).scale(&sign));
            }
        }
        out
    }
}

/// Basis forms `p^e dp_α` of `x`-degree `Σ k e_k + Σ α ≤ max_deg`.
pub fn basis_forms(n: usize, max_deg: usize) -> Vec<InvariantForm> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let alpha: Vec<usize> = (1..=n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
        let used: usize = alpha.iter().sum();
        if used > max_deg {
            continue;
        }
        for deg in 0..=max_deg - used {
            for rho in Partition::bounded(deg, n, deg) {
                let mut e = vec![0u32; n];
                for &k in rho.parts() {
                    e[k - 1] += 1;
                }
                let f = MultiPoly::monomial(n, e, q_int(1));
                out.push(InvariantForm::new(n, f, &alpha).expect("indices in range"));
            }
        }
    }
    out
}

/// `[H_2, ι_ξ] = 0` on all basis forms of degree `≤ max_deg`, `c = m/n`, with
/// `H_2` acting on the Verma module `C[x] ⊗ ∧C^n` (see [`h2_apply_verma`]).
/// Also checks that [`Contraction`] agrees with the Koszul differential on
/// coordinate components.
pub fn h2_iota_commute(m: usize, n: usize, max_deg: usize) -> Result<bool> {
    let c = q_frac(m as i64, n as i64);
    let f = singular_polynomials(m, n)?;
    let iota = Contraction::new(m, n)?;
    for w in basis_forms(n, max_deg) {
        let comps = w.coordinate_components();
        let contracted = contract_components(&f, &comps);
        if contracted != iota.apply(&w).coordinate_components() {
            return Ok(false);
        }
        let lhs = h2_apply_verma(&c, &contracted, n)?;
        let rhs = contract_components(&f, &h2_apply_verma(&c, &comps, n)?);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `H(E_i) ∈ (E_2, …, E_{i−1})` for `2 ≤ i ≤ max_i`, where `E_i = m p_i − n p̃_i`,
/// `H = n H_2 + m H̃_2` with `c = m/n`, `c̃ = n/m`, `p_0 = n`, `p̃_0 = m` and
/// `p_1 = p̃_1 = 0`; also checks the explicit reduction formula.
pub fn h2_ideal_check(m: usize, n: usize, max_i: usize) -> Result<bool> {
    if m == 0 || n == 0 || max_i < 2 {
        return Err(Error::InvalidArgument("need m, n ≥ 1 and max_i ≥ 2".into()));
    }
    let nv = 2 * max_i;
    let (mq, nq) = (q_int(m as i64), q_int(n as i64));
    let p = |k: usize, tilde: bool| -> MultiPoly {
        match (k, tilde) {
            (0, false) => MultiPoly::constant(nv, nq.clone()),
            (0, true) => MultiPoly::constant(nv, mq.clone()),
            (k, t) => MultiPoly::var(nv, k - 1 + if t { max_i } else { 0 }),
        }
    };
    let h2 = |k: usize, tilde: bool| -> MultiPoly {
        if k < 2 {
            return MultiPoly::zero(nv);
        }
        let c = if tilde { q_frac(n as i64, m as i64) } else { q_frac(m as i64, n as i64) };
        let kk = k as i64;
        let mut out = p(k - 2, tilde).scale(&((Q::from_integer(1.into()) + &c) * q_int(kk * (kk - 1))));
        for s in 0..=k - 2 {
            out = &out - &(&p(s, tilde) * &p(k - 2 - s, tilde)).scale(&(&c * q_int(kk)));
        }
        out
    };
    let e = |k: usize| -> MultiPoly { &p(k, false).scale(&mq) - &p(k, true).scale(&nq) };
    let mn = q_int((m * n) as i64);
    for i in 2..=max_i {
        // (1/mn) H(E_i) = H_2(p_i) − H̃_2(p̃_i)
        let lhs = &h2(i, false) - &h2(i, true);
        let ii = i as i64;
        let mut rhs = e(i - 2).scale(&(q_int((m + n) as i64) / &mn * q_int(ii * (ii - 1))));
        for s in 0..=i - 2 {
            let t = &(&p(i - 2 - s, false) * &e(s)).scale(&mq) + &(&p(s, true) * &e(i - 2 - s)).scale(&nq);
            rhs = &rhs - &t.scale(&(q_int(ii) / &mn));
        }
        if lhs != rhs {
            return Ok(false);
        }
        // reduce modulo E_2..E_{i−1} on p_1 = p̃_1 = 0
        let images: Vec<MultiPoly> = (0..nv)
            .map(|v| {
                let (k, tilde) = if v < max_i { (v + 1, false) } else { (v + 1 - max_i, true) };
                if k == 1 {
                    MultiPoly::zero(nv)
                } else if !tilde && k < i {
                    p(k, true).scale(&(&nq / &mq))
                } else {
                    p(k, tilde)
                }
            })
            .collect();
        if !lhs.compose(&images).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Both identities: commutation through `max_deg` and ideal membership for
/// `i ≤ m+n−1`.
pub fn h2_commutation_check(m: usize, n: usize, max_deg: usize) -> Result<bool> {
    Ok(h2_iota_commute(m, n, max_deg)? && h2_ideal_check(m, n, m + n - 1)?)
}


/// Components `Σ_μ ω_μ ⊗ e_μ` of an element of `C[x_1..x_n] ⊗ ∧C^n`, `μ`
/// strictly increasing and 0-based.
pub type Components = BTreeMap<Vec<usize>, MultiPoly>;

fn comp_add(out: &mut Components, mu: Vec<usize>, f: MultiPoly) {
    if f.is_zero() {
        return;
    }
    let slot = out.entry(mu.clone()).or_insert_with(|| MultiPoly::zero(f.nvars()));
    *slot = &*slot + &f;
    if slot.is_zero() {
        out.remove(&mu);
    }
}

/// `s_{ij} e_μ` as a signed sorted index list.
fn swap_wedge(mu: &[usize], i: usize, j: usize) -> (Vec<usize>, i64) {
    let mapped: Vec<usize> = mu.iter().map(|&t| if t == i { j } else if t == j { i } else { t }).collect();
    let mut sorted = Vec::new();
    let mut sign = 1;
    for &t in &mapped {
        let (s, sg) = insert_sorted(&sorted, t).expect("distinct");
        sorted = s;
        sign *= sg;
    }
    (sorted, sign)
}

/// Dunkl operator on the Verma module `C[x] ⊗ ∧C^n`:
/// `D_i(f ⊗ v) = ∂_i f ⊗ v − c Σ_{j≠i} (f − s_{ij} f)/(x_i − x_j) ⊗ s_{ij} v`.
pub fn dunkl_apply_verma(c: &Q, i: usize, comps: &Components) -> Result<Components> {
    let mut out = Components::new();
    for (mu, f) in comps {
        comp_add(&mut out, mu.clone(), f.partial(i));
        for j in 0..f.nvars() {
            if j == i {
                continue;
            }
            let q = (f - &f.swap(i, j)).div_difference(i, j)?;
            let (nu, sign) = swap_wedge(mu, i, j);
            comp_add(&mut out, nu, q.scale(&(c * q_int(-sign))));
        }
    }
    Ok(out)
}

/// `H_2 = Σ_i D_i²` on the Verma module `C[x] ⊗ ∧C^n`.
pub fn h2_apply_verma(c: &Q, comps: &Components, n: usize) -> Result<Components> {
    let mut out = Components::new();
    for i in 0..n {
        let once = dunkl_apply_verma(c, i, comps)?;
        for (mu, f) in dunkl_apply_verma(c, i, &once)? {
            comp_add(&mut out, mu, f);
        }
    }
    Ok(out)
}

/// Koszul differential `e_μ ↦ Σ_k (−1)^k f_{μ_k} e_{μ∖μ_k}` on components.
pub fn contract_components(f: &[MultiPoly], comps: &Components) -> Components {
    let mut out = Components::new();
    for (mu, g) in comps {
        for (k, &t) in mu.iter().enumerate() {
            let mut rest = mu.clone();
            rest.remove(k);
            let sign = q_int(if k % 2 == 0 { 1 } else { -1 });
            comp_add(&mut out, rest, (g * &f[t]).scale(&sign));
        }
    }
    out
}
