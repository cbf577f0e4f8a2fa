//! The ring of symmetric functions over `Q` in the Schur and power-sum
//! bases, with the operations the character formulas need.

mod characters;
mod kostka;
mod lr;
mod specialize;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{q_int, q_to_i64, q_to_string, Q};

pub use characters::{mn_character, remove_rim_hooks};
pub use kostka::{charge, kostka_foulkes, reading_word, ssyt};
pub use lr::lr_product;
pub use specialize::{phi_power_weighted, phi_spec, principal_specialization, theta_schur, theta_spec, XQSeries};
#[cfg(test)]
pub(crate) use specialize::permutations;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    Power,
}

/// Finite `Q`-linear combination of `s_λ` or of `p_ρ`.
#[derive(Clone)]
pub struct SymFunc {
    basis: Basis,
    terms: BTreeMap<Partition, Q>,
}

impl SymFunc {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(lambda: Partition) -> Self {
        SymFunc { basis: Basis::Schur, terms: BTreeMap::from([(lambda, Q::one())]) }
    }

    pub fn power(rho: Partition) -> Self {
        SymFunc { basis: Basis::Power, terms: BTreeMap::from([(rho, Q::one())]) }
    }

    /// `p_k`.
    pub fn p(k: usize) -> Self {
        Self::power(Partition::row(k))
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, Q)>>(basis: Basis, it: I) -> Self {
        let mut out = Self::zero(basis);
        for (l, c) in it {
            out.add_term(l, c);
        }
        out
    }

    pub fn add_term(&mut self, lambda: Partition, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(lambda.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&lambda);
        }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> &BTreeMap<Partition, Q> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> Q {
        self.terms.get(lambda).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common degree of all terms; `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Partition::size);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::from_terms(self.basis, self.terms.iter().map(|(l, x)| (l.clone(), x * c)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let other = other.to_basis(self.basis);
        let mut out = self.clone();
        for (l, c) in other.terms {
            out.add_term(l, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q_int(-1)))
    }

    pub fn to_basis(&self, basis: Basis) -> Self {
        match basis {
            Basis::Schur => self.to_schur(),
            Basis::Power => self.to_power(),
        }
    }

    /// `s_λ = Σ_ρ χ_λ(ρ) / z_ρ · p_ρ`.
    pub fn to_power(&self) -> Self {
        if self.basis == Basis::Power {
            return self.clone();
        }
        let mut out = Self::zero(Basis::Power);
        for (lambda, c) in &self.terms {
            for rho in Partition::all(lambda.size()) {
                let chi = mn_character(lambda, &rho).expect("sizes agree");
                if chi != 0 {
                    out.add_term(rho.clone(), c * q_int(chi) / Q::from_integer(rho.z()));
                }
            }
        }
        out
    }

    /// `p_ρ = Σ_λ χ_λ(ρ) s_λ`.
    pub fn to_schur(&self) -> Self {
        if self.basis == Basis::Schur {
            return self.clone();
        }
        let mut out = Self::zero(Basis::Schur);
        for (rho, c) in &self.terms {
            for (lambda, chi) in power_to_schur_row(rho) {
                out.add_term(lambda, c * q_int(chi));
            }
        }
        out
    }

    /// Product; Schur inputs use the Littlewood–Richardson rule.
    pub fn mul(&self, other: &Self) -> Self {
        match (self.basis, other.basis) {
            (Basis::Schur, Basis::Schur) => {
                let mut out = Self::zero(Basis::Schur);
                for (mu, a) in &self.terms {
                    for (nu, b) in &other.terms {
                        let ab = a * b;
                        for (lambda, c) in lr_product(mu, nu) {
                            out.add_term(lambda, &ab * q_int(c as i64));
                        }
                    }
                }
                #[cfg(feature = "lr-crosscheck")]
                {
                    let via_p = self.to_power().mul(&other.to_power()).to_schur();
                    assert!(via_p == out, "LR product disagrees with the power-sum route");
                }
                out
            }
            _ => {
                let (x, y) = (self.to_power(), other.to_power());
                let mut out = Self::zero(Basis::Power);
                for (r1, a) in &x.terms {
                    for (r2, b) in &y.terms {
                        out.add_term(r1.union(r2), a * b);
                    }
                }
                out
            }
        }
    }

    /// `Ψ_k`: `p_i ↦ p_{ki}`; the result is returned in the input's basis.
    pub fn adams(&self, k: usize) -> Self {
        assert!(k >= 1, "Adams operations are indexed from 1");
        if k == 1 {
            return self.clone();
        }
        let p = self.to_power();
        let out = Self::from_terms(Basis::Power, p.terms.iter().map(|(r, c)| (r.scale(k), c.clone())));
        out.to_basis(self.basis)
    }

    /// `ω(s_λ) = s_{λᵗ}`, `ω(p_ρ) = (−1)^{|ρ|−ℓ(ρ)} p_ρ`.
    pub fn omega(&self) -> Self {
        match self.basis {
            Basis::Schur => Self::from_terms(Basis::Schur, self.terms.iter().map(|(l, c)| (l.transpose(), c.clone()))),
            Basis::Power => Self::from_terms(
                Basis::Power,
                self.terms.iter().map(|(r, c)| (r.clone(), c * q_int(r.sign()))),
            ),
        }
    }

    /// Hall inner product with `s_λ`, i.e. the Schur coefficient.
    pub fn schur_coeff(&self, lambda: &Partition) -> Q {
        self.to_schur().coeff(lambda)
    }

    /// Integer Schur coefficients; errors if any coefficient is fractional.
    pub fn schur_integer_coeffs(&self) -> Result<BTreeMap<Partition, i64>> {
        self.to_schur()
            .terms
            .iter()
            .map(|(l, c)| {
                q_to_i64(c)
                    .map(|v| (l.clone(), v))
                    .ok_or_else(|| Error::Consistency(format!("coefficient of s_{l} is {}", q_to_string(c))))
            })
            .collect()
    }

    /// True when every coefficient is a nonnegative integer.
    pub fn is_nonneg_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer() && !c.is_negative())
    }
}

type CharRow = Vec<(Partition, i64)>;

/// `χ_λ(ρ)` for every `λ ⊢ |ρ|` with nonzero value.
fn power_to_schur_row(rho: &Partition) -> CharRow {
    static ROWS: Lazy<RwLock<HashMap<Partition, CharRow>>> =
        Lazy::new(|| RwLock::new(HashMap::new()));
    if let Some(v) = ROWS.read().get(rho) {
        return v.clone();
    }
    let row: Vec<(Partition, i64)> = Partition::all(rho.size())
        .into_iter()
        .filter_map(|l| {
            let chi = mn_character(&l, rho).expect("sizes agree");
            (chi != 0).then_some((l, chi))
        })
        .collect();
    ROWS.write().insert(rho.clone(), row.clone());
    row
}

impl PartialEq for SymFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.basis == other.basis {
            self.terms == other.terms
        } else {
            self.to_schur().terms == other.to_schur().terms
        }
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let tag = match self.basis {
            Basis::Schur => "s",
            Basis::Power => "p",
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| format!("{}*{tag}[{l}]", q_to_string(c)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymFunc[{self}]")
    }
}

/// Schur coefficients of `Ψ_{n0}(s_λ) · s_{λ'}`.
pub fn c_coeffs(lambda: &Partition, lambda_prime: &Partition, n0: usize) -> BTreeMap<Partition, i64> {
    type Key = (Partition, Partition, usize);
    static MEMO: Lazy<RwLock<HashMap<Key, BTreeMap<Partition, i64>>>> =
        Lazy::new(|| RwLock::new(HashMap::new()));
    let key = (lambda.clone(), lambda_prime.clone(), n0);
    if let Some(v) = MEMO.read().get(&key) {
        return v.clone();
    }
    let psi = SymFunc::schur(lambda.clone()).adams(n0);
    let prod = if lambda_prime.is_empty() {
        psi
    } else {
        psi.mul(&SymFunc::schur(lambda_prime.clone()))
    };
    let out = prod
        .schur_integer_coeffs()
        .expect("Adams images of Schur functions have integral Schur coefficients");
    MEMO.write().insert(key, out.clone());
    out
}

/// `c_{λ,n0}^ν` table with the sizes it was built for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CCoeffTable {
    pub lambda: Partition,
    pub lambda_prime: Partition,
    pub n0: usize,
    pub coeffs: BTreeMap<Partition, i64>,
}

impl CCoeffTable {
    pub fn new(lambda: &Partition, lambda_prime: &Partition, n0: usize) -> Self {
        CCoeffTable {
            lambda: lambda.clone(),
            lambda_prime: lambda_prime.clone(),
            n0,
            coeffs: c_coeffs(lambda, lambda_prime, n0),
        }
    }

    pub fn size(&self) -> usize {
        self.n0 * self.lambda.size() + self.lambda_prime.size()
    }
}
