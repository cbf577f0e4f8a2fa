use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{half_str, Exp, LaurentAQ};
use crate::error::{Error, Result};
use crate::rational::{q_parse, q_to_string, Q};

/// `numerator / Π (1 − q^i)^{k_i}`.
///
/// Only denominators made of `(1 − q^i)` factors are representable.
#[derive(Clone, Default)]
pub struct RationalAQ {
    num: LaurentAQ,
    den: BTreeMap<u32, u32>,
}

impl RationalAQ {
    pub fn new(num: LaurentAQ, den: BTreeMap<u32, u32>) -> Self {
        let mut out = RationalAQ { num, den };
        out.den.retain(|_, k| *k > 0);
        out.normalize();
        out
    }

    /// Builds without cancelling common factors.
    pub fn new_unreduced(num: LaurentAQ, den: BTreeMap<u32, u32>) -> Self {
        let mut den = den;
        den.retain(|_, k| *k > 0);
        RationalAQ { num, den }
    }

    pub fn from_poly(num: LaurentAQ) -> Self {
        RationalAQ { num, den: BTreeMap::new() }
    }

    /// `num / Π_{i ∈ factors} (1 − q^i)`.
    pub fn with_factors(num: LaurentAQ, factors: &[u32]) -> Self {
        let mut den = BTreeMap::new();
        for &i in factors {
            assert!(i > 0, "(1 - q^0) is not a valid denominator");
            *den.entry(i).or_insert(0) += 1;
        }
        Self::new(num, den)
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentAQ::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentAQ::one())
    }

    pub fn numerator(&self) -> &LaurentAQ {
        &self.num
    }

    pub fn qdenom(&self) -> &BTreeMap<u32, u32> {
        &self.den
    }

    /// Denominator factors as a flat sorted list.
    pub fn qdenom_list(&self) -> Vec<u32> {
        self.den.iter().flat_map(|(&i, &k)| std::iter::repeat_n(i, k as usize)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// Cancels every `(1 − q^i)` factor that divides the numerator exactly.
    pub fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        let keys: Vec<u32> = self.den.keys().rev().copied().collect();
        for i in keys {
            while let Some(k) = self.den.get(&i).copied() {
                if k == 0 {
                    break;
                }
                match self.num.div_one_minus((0, 2 * i as i64)) {
                    Some(g) => {
                        self.num = g;
                        if k == 1 {
                            self.den.remove(&i);
                        } else {
                            self.den.insert(i, k - 1);
                        }
                    }
                    None => break,
                }
            }
        }
    }

    pub fn normalized(mut self) -> Self {
        self.normalize();
        self
    }

    /// The polynomial numerator when no denominator survives normalization.
    pub fn to_polynomial(&self) -> Result<LaurentAQ> {
        let r = self.clone().normalized();
        if r.den.is_empty() {
            Ok(r.num)
        } else {
            Err(Error::NotExact(format!(
                "denominator {:?} does not cancel",
                r.qdenom_list()
            )))
        }
    }

    fn denominator_poly(den: &BTreeMap<u32, u32>) -> LaurentAQ {
        let mut acc = LaurentAQ::one();
        for (&i, &k) in den {
            for _ in 0..k {
                acc = &acc * &LaurentAQ::one_minus_q(i as i64);
            }
        }
        acc
    }

    fn times_factors(num: &LaurentAQ, extra: &BTreeMap<u32, u32>) -> LaurentAQ {
        let mut acc = num.clone();
        for (&i, &k) in extra {
            for _ in 0..k {
                acc = &acc - &acc.shift((0, 2 * i as i64));
            }
        }
        acc
    }

    /// Rewrites `self` over the (multiset) denominator `den ⊇ self.den`.
    fn numerator_over(&self, den: &BTreeMap<u32, u32>) -> LaurentAQ {
        let extra: BTreeMap<u32, u32> = den
            .iter()
            .map(|(&i, &k)| (i, k - self.den.get(&i).copied().unwrap_or(0)))
            .filter(|(_, k)| *k > 0)
            .collect();
        Self::times_factors(&self.num, &extra)
    }

    fn union_den(a: &BTreeMap<u32, u32>, b: &BTreeMap<u32, u32>) -> BTreeMap<u32, u32> {
        let mut out = a.clone();
        for (&i, &k) in b {
            let e = out.entry(i).or_insert(0);
            *e = (*e).max(k);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let den = Self::union_den(&self.den, &other.den);
        let num = &self.numerator_over(&den) + &other.numerator_over(&den);
        Self::new(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RationalAQ { num: -&self.num, den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (&i, &k) in &other.den {
            *den.entry(i).or_insert(0) += k;
        }
        Self::new(&self.num * &other.num, den)
    }

    pub fn mul_poly(&self, p: &LaurentAQ) -> Self {
        Self::new(&self.num * p, self.den.clone())
    }

    pub fn scale(&self, c: &Q) -> Self {
        RationalAQ { num: self.num.scale(c), den: self.den.clone() }.normalized()
    }

    pub fn shift(&self, e: Exp) -> Self {
        RationalAQ { num: self.num.shift(e), den: self.den.clone() }
    }

    /// Sum of many terms over one common denominator.
    pub fn sum<'a, I: IntoIterator<Item = &'a RationalAQ>>(items: I) -> Self {
        let items: Vec<&RationalAQ> = items.into_iter().collect();
        let den = items
            .iter()
            .fold(BTreeMap::new(), |acc, r| Self::union_den(&acc, &r.den));
        let mut num = LaurentAQ::zero();
        for r in items {
            num += &r.numerator_over(&den);
        }
        Self::new(num, den)
    }

    /// Exact equality of rational functions.
    pub fn equals(&self, other: &Self) -> bool {
        let den = Self::union_den(&self.den, &other.den);
        self.numerator_over(&den) == other.numerator_over(&den)
    }

    /// `self = monomial · other` for some monomial; returns its doubled exponents.
    pub fn equal_up_to_monomial(&self, other: &Self) -> Option<Exp> {
        let den = Self::union_den(&self.den, &other.den);
        self.numerator_over(&den)
            .equal_up_to_monomial(&other.numerator_over(&den))
    }

    /// Substitute `a ↦ q^N`.
    pub fn specialize_a(&self, n: i64) -> Self {
        Self::new(self.num.specialize_a(n), self.den.clone())
    }

    /// Substitute `q ↦ q^{-1}`, using `1 − q^{-i} = −q^{-i}(1 − q^i)`.
    pub fn invert_q(&self) -> Self {
        let mut num = self.num.invert_q();
        for (&i, &k) in &self.den {
            for _ in 0..k {
                num = -num.shift((0, 2 * i as i64));
            }
        }
        Self::new(num, self.den.clone())
    }

    /// `a ↦ −a` up to an overall power of `−a` (see [`LaurentAQ::negate_a`]).
    pub fn negate_a(&self) -> Result<Self> {
        Ok(RationalAQ { num: self.num.negate_a()?, den: self.den.clone() })
    }

    /// Exact substitution `a ↦ −a`.
    pub fn substitute_neg_a(&self) -> Result<Self> {
        Ok(RationalAQ { num: self.num.substitute_neg_a()?, den: self.den.clone() })
    }

    /// Exact division by `1 − a`.
    pub fn div_one_minus_a(&self) -> Result<Self> {
        let num = self
            .num
            .div_one_minus((2, 0))
            .ok_or_else(|| Error::NotExact("numerator is not divisible by (1 - a)".into()))?;
        Ok(RationalAQ { num, den: self.den.clone() })
    }

    /// Exact division by a Laurent polynomial that is a product of
    /// binomials `1 − a^{x} q^{y}` (given as their doubled exponents).
    pub fn div_binomials(&self, steps: &[Exp]) -> Result<Self> {
        let mut num = self.num.clone();
        for &s in steps {
            num = num.div_one_minus(s).ok_or_else(|| {
                Error::NotExact(format!("numerator is not divisible by 1 - a^({})q^({})", half_str(s.0), half_str(s.1)))
            })?;
        }
        Ok(RationalAQ { num, den: self.den.clone() })
    }

    /// Series expansion keeping doubled `q`-exponents `≤ max_eq`.
    pub fn expand(&self, max_eq: i64) -> LaurentAQ {
        let mut acc = self.num.truncate_q(max_eq);
        for (&i, &k) in &self.den {
            for _ in 0..k {
                acc = acc.geometric_truncated(i, max_eq);
            }
        }
        acc
    }

    /// Exact value at `(a0, q0)`.
    ///
    /// At `q0 = 1` every `(1 − q^i) = (1 − q)[i]_q`; the numerator must then
    /// vanish to the order of the pole.
    pub fn eval_at(&self, a0: &Q, q0: &Q) -> Result<Q> {
        let r = self.clone().normalized();
        if q0.is_one() {
            let order: u32 = r.den.values().sum();
            let mut num = r.num.clone();
            for _ in 0..order {
                num = num.div_one_minus((0, 2)).ok_or_else(|| {
                    Error::Pole("pole at q = 1 survives cancellation".into())
                })?;
            }
            let scale: Q = r
                .den
                .iter()
                .fold(Q::one(), |acc, (&i, &k)| acc * num_traits::pow(Q::from_integer((i as i64).into()), k as usize));
            return Ok(num.eval(a0, q0)? / scale);
        }
        let den_poly = Self::denominator_poly(&r.den);
        let d = den_poly.eval(a0, q0)?;
        if d.is_zero() {
            return Err(Error::Pole(format!("denominator vanishes at q = {}", q_to_string(q0))));
        }
        Ok(r.num.eval(a0, q0)? / d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        RationalJson::from(self).to_value()
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: RationalJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        j.try_into()
    }

    pub fn to_latex(&self) -> String {
        let num = self.num.to_latex();
        if self.den.is_empty() {
            return num;
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(&i, &k)| {
                let base = if i == 1 { "(1-q)".to_string() } else { format!("(1-q^{{{i}}})") };
                if k == 1 { base } else { format!("{base}^{{{k}}}") }
            })
            .collect();
        format!("\\frac{{{num}}}{{{}}}", den.join(""))
    }
}

impl PartialEq for RationalAQ {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl fmt::Display for RationalAQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(&i, &k)| if k == 1 { format!("(1-q^{i})") } else { format!("(1-q^{i})^{k}") })
            .collect();
        write!(f, "({}) / {}", self.num, den.join(""))
    }
}

impl fmt::Debug for RationalAQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalAQ[{self}]")
    }
}

impl From<LaurentAQ> for RationalAQ {
    fn from(p: LaurentAQ) -> Self {
        RationalAQ::from_poly(p)
    }
}

/// Wire form: `{"terms": [[ea, eq, "num/den"], …], "qdenom": [i, …]}` with doubled exponents.
#[derive(Serialize, Deserialize)]
struct RationalJson {
    terms: Vec<(i64, i64, String)>,
    qdenom: Vec<u32>,
}

impl RationalJson {
    fn to_value(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data serializes")
    }
}

impl From<&RationalAQ> for RationalJson {
    fn from(r: &RationalAQ) -> Self {
        RationalJson {
            terms: r
                .num
                .terms()
                .iter()
                .map(|(&(a, q), c)| (a, q, q_to_string(c)))
                .collect(),
            qdenom: r.qdenom_list(),
        }
    }
}

impl TryFrom<RationalJson> for RationalAQ {
    type Error = Error;

    fn try_from(j: RationalJson) -> Result<Self> {
        let mut num = LaurentAQ::zero();
        for (a, q, c) in j.terms {
            num.add_term((a, q), q_parse(&c)?);
        }
        if j.qdenom.contains(&0) {
            return Err(Error::Parse("qdenom entries must be positive".into()));
        }
        Ok(RationalAQ::with_factors(num, &j.qdenom))
    }
}

/// Serialize a bare Laurent polynomial in the same wire form (empty `qdenom`).
pub fn laurent_to_json(p: &LaurentAQ) -> serde_json::Value {
    RationalAQ::from_poly(p.clone()).to_json()
}
