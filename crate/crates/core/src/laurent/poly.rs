use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rational::{q_int, q_pow, q_sqrt, q_to_string, Q};

/// Exponent pair `(ea, eq)` counting powers of `a^{1/2}` and `q^{1/2}`.
pub type Exp = (i64, i64);

/// Sparse Laurent polynomial in `a^{1/2}`, `q^{1/2}` with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentAQ {
    terms: BTreeMap<Exp, Q>,
}

impl LaurentAQ {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Q::one())
    }

    pub fn constant(c: Q) -> Self {
        Self::monomial((0, 0), c)
    }

    /// `c · a^{ea/2} q^{eq/2}`.
    pub fn monomial(exp: Exp, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentAQ { terms }
    }

    /// `q^{k}` for integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial((0, 2 * k), Q::one())
    }

    /// `a^{k}` for integer `k`.
    pub fn a_pow(k: i64) -> Self {
        Self::monomial((2 * k, 0), Q::one())
    }

    /// `1 − q^k`.
    pub fn one_minus_q(k: i64) -> Self {
        Self::one() - Self::q_pow(k)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, Q)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (e, c) in it {
            out.add_term(e, c);
        }
        out
    }

    /// Integer coefficients on doubled exponents, for literals.
    pub fn from_ints(terms: &[(i64, i64, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(ea, eq, c)| ((ea, eq), q_int(c))))
    }

    pub fn add_term(&mut self, exp: Exp, c: Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Exp, Q> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Exp, Q> {
        self.terms
    }

    pub fn coeff(&self, exp: Exp) -> Q {
        self.terms.get(&exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentAQ {
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiply by `a^{da/2} q^{dq/2}`.
    pub fn shift(&self, (da, dq): Exp) -> Self {
        LaurentAQ {
            terms: self.terms.iter().map(|(&(a, q), c)| ((a + da, q + dq), c.clone())).collect(),
        }
    }

    pub fn min_a(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.0).min()
    }

    pub fn max_a(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn min_q(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.1).min()
    }

    pub fn max_q(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// True when no power of `a` occurs.
    pub fn is_q_only(&self) -> bool {
        self.terms.keys().all(|e| e.0 == 0)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute `a ↦ q^N`.
    pub fn specialize_a(&self, n: i64) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(a, q), c)| ((0, q + n * a), c.clone())))
    }

    /// Substitute `q ↦ q^{-1}`.
    pub fn invert_q(&self) -> Self {
        LaurentAQ {
            terms: self.terms.iter().map(|(&(a, q), c)| ((a, -q), c.clone())).collect(),
        }
    }

    /// Substitute `a ↦ −a`, up to an overall power of `−a`.
    ///
    /// Requires all `a`-exponents to lie in one coset of `ℤ`; the term with
    /// the lowest `a`-exponent keeps its sign.
    pub fn negate_a(&self) -> Result<Self> {
        let Some(lo) = self.min_a() else {
            return Ok(Self::zero());
        };
        let mut out = BTreeMap::new();
        for (&(a, q), c) in &self.terms {
            if (a - lo) % 2 != 0 {
                return Err(Error::InvalidArgument(
                    "a-exponents mix integer and half-integer powers".into(),
                ));
            }
            let c = if ((a - lo) / 2) % 2 == 0 { c.clone() } else { -c };
            out.insert((a, q), c);
        }
        Ok(LaurentAQ { terms: out })
    }

    /// Exact substitution `a ↦ −a`; requires integer powers of `a`.
    pub fn substitute_neg_a(&self) -> Result<Self> {
        let mut out = BTreeMap::new();
        for (&(a, q), c) in &self.terms {
            if a % 2 != 0 {
                return Err(Error::InvalidArgument("a ↦ −a needs integer powers of a".into()));
            }
            out.insert((a, q), if (a / 2) % 2 == 0 { c.clone() } else { -c });
        }
        Ok(LaurentAQ { terms: out })
    }

    /// Exact division by `1 − a^{da/2} q^{dq/2}`; `None` when not divisible.
    pub fn div_one_minus(&self, step: Exp) -> Option<Self> {
        if step == (0, 0) {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // f = (1 − M) g, solved from the lowest exponent along `step` upward.
        let weight = |e: &Exp| e.0 * step.0 + e.1 * step.1;
        let step_weight = weight(&step);
        let top = self.terms.keys().map(weight).max().unwrap();
        let mut residual: BTreeMap<(i64, Exp), Q> =
            self.terms.iter().map(|(e, c)| ((weight(e), *e), c.clone())).collect();
        let mut g = BTreeMap::new();
        while let Some(((w, e), c)) = residual.pop_first() {
            if w + step_weight > top {
                return None;
            }
            let next = (e.0 + step.0, e.1 + step.1);
            let slot = residual.entry((w + step_weight, next)).or_insert_with(Q::zero);
            *slot += &c;
            if slot.is_zero() {
                residual.remove(&(w + step_weight, next));
            }
            g.insert(e, c);
        }
        Some(LaurentAQ { terms: g })
    }

    /// Evaluate at `a = a0`, `q = q0`; half-integer powers need exact square roots.
    pub fn eval(&self, a0: &Q, q0: &Q) -> Result<Q> {
        let ra = HalfPow::new(a0, self.terms.keys().any(|e| e.0 % 2 != 0), "a")?;
        let rq = HalfPow::new(q0, self.terms.keys().any(|e| e.1 % 2 != 0), "q")?;
        let mut acc = Q::zero();
        for (&(ea, eq), c) in &self.terms {
            acc += c * ra.pow(ea)? * rq.pow(eq)?;
        }
        Ok(acc)
    }

    /// Collapse `a`; the result is the polynomial in `q` at `a = a0` (`a0` must
    /// admit the required square root).
    pub fn eval_a(&self, a0: &Q) -> Result<Self> {
        let ra = HalfPow::new(a0, self.terms.keys().any(|e| e.0 % 2 != 0), "a")?;
        let mut out = Self::zero();
        for (&(ea, eq), c) in &self.terms {
            out.add_term((0, eq), c * ra.pow(ea)?);
        }
        Ok(out)
    }

    /// Returns the shift `s` with `self = a^{s.0/2} q^{s.1/2} · other`, if any.
    pub fn equal_up_to_monomial(&self, other: &Self) -> Option<Exp> {
        if self.is_zero() || other.is_zero() {
            return if self.is_zero() && other.is_zero() { Some((0, 0)) } else { None };
        }
        let (e1, _) = self.terms.iter().next()?;
        let (e2, _) = other.terms.iter().next()?;
        let s = (e1.0 - e2.0, e1.1 - e2.1);
        if other.shift(s) == *self {
            Some(s)
        } else {
            None
        }
    }

    /// First term with a negative coefficient, if any.
    pub fn first_negative(&self) -> Option<(Exp, Q)> {
        self.terms
            .iter()
            .find(|(_, c)| c.is_negative())
            .map(|(e, c)| (*e, c.clone()))
    }

    pub fn nonneg_coeffs(&self) -> bool {
        self.first_negative().is_none()
    }

    /// Drop terms with doubled `q`-exponent above `max_eq`.
    pub fn truncate_q(&self, max_eq: i64) -> Self {
        LaurentAQ {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.1 <= max_eq)
                .map(|(e, c)| (*e, c.clone()))
                .collect(),
        }
    }

    /// Multiply and keep only doubled `q`-exponents `≤ max_eq`.
    pub fn mul_truncated(&self, other: &Self, max_eq: i64) -> Self {
        let mut out = Self::zero();
        let Some(omin) = other.min_q() else { return out };
        for (&(a1, q1), c1) in &self.terms {
            if q1 + omin > max_eq {
                continue;
            }
            for (&(a2, q2), c2) in &other.terms {
                if q1 + q2 > max_eq {
                    continue;
                }
                out.add_term((a1 + a2, q1 + q2), c1 * c2);
            }
        }
        out
    }

    /// `self / (1 − q^k)` expanded as a series, keeping doubled `q`-exponents `≤ max_eq`.
    pub fn geometric_truncated(&self, k: u32, max_eq: i64) -> Self {
        let step = 2 * k as i64;
        let mut out = Self::zero();
        for (&(a, q), c) in &self.terms {
            let mut e = q;
            while e <= max_eq {
                out.add_term((a, e), c.clone());
                e += step;
            }
        }
        out
    }

    /// Group by `a`-exponent: `ea ↦ polynomial in q` (as a LaurentAQ with `ea = 0`).
    pub fn a_slices(&self) -> BTreeMap<i64, LaurentAQ> {
        let mut out: BTreeMap<i64, LaurentAQ> = BTreeMap::new();
        for (&(a, q), c) in &self.terms {
            out.entry(a).or_default().add_term((0, q), c.clone());
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (&(ea, eq), c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let mono = format!("{}{}", latex_pow("a", ea), latex_pow("q", eq));
            if mono.is_empty() {
                s.push_str(&latex_q(&abs));
            } else if abs.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&latex_q(&abs));
                s.push_str(&mono);
            }
        }
        s
    }
}

/// Raises a base to doubled exponents, taking a square root only when needed.
struct HalfPow {
    base: Q,
    rooted: bool,
}

impl HalfPow {
    fn new(x: &Q, needs_root: bool, name: &str) -> Result<Self> {
        if !needs_root {
            return Ok(HalfPow { base: x.clone(), rooted: false });
        }
        let r = q_sqrt(x).ok_or_else(|| {
            Error::InvalidArgument(format!("{name} = {} has no rational square root", q_to_string(x)))
        })?;
        Ok(HalfPow { base: r, rooted: true })
    }

    fn pow(&self, doubled: i64) -> Result<Q> {
        if self.rooted {
            q_pow(&self.base, doubled)
        } else {
            q_pow(&self.base, doubled / 2)
        }
    }
}

fn latex_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", c.numer(), c.denom())
    }
}

fn latex_pow(var: &str, doubled: i64) -> String {
    match doubled {
        0 => String::new(),
        2 => var.to_string(),
        e if e % 2 == 0 => format!("{var}^{{{}}}", e / 2),
        e => format!("{var}^{{{}/2}}", e),
    }
}

/// Doubled exponent printed as a plain number.
pub(crate) fn half_str(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

impl fmt::Display for LaurentAQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&(ea, eq), c)| {
                let mut s = q_to_string(c);
                if ea != 0 {
                    s.push_str(&format!("*a^({})", half_str(ea)));
                }
                if eq != 0 {
                    s.push_str(&format!("*q^({})", half_str(eq)));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for LaurentAQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentAQ[{self}]")
    }
}

impl Add<&LaurentAQ> for &LaurentAQ {
    type Output = LaurentAQ;
    fn add(self, rhs: &LaurentAQ) -> LaurentAQ {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentAQ {
    type Output = LaurentAQ;
    fn add(mut self, rhs: LaurentAQ) -> LaurentAQ {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentAQ> for LaurentAQ {
    fn add_assign(&mut self, rhs: &LaurentAQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentAQ> for LaurentAQ {
    fn sub_assign(&mut self, rhs: &LaurentAQ) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c.clone());
        }
    }
}

impl Sub<&LaurentAQ> for &LaurentAQ {
    type Output = LaurentAQ;
    fn sub(self, rhs: &LaurentAQ) -> LaurentAQ {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentAQ {
    type Output = LaurentAQ;
    fn sub(mut self, rhs: LaurentAQ) -> LaurentAQ {
        self -= &rhs;
        self
    }
}

impl Neg for LaurentAQ {
    type Output = LaurentAQ;
    fn neg(self) -> LaurentAQ {
        LaurentAQ {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &LaurentAQ {
    type Output = LaurentAQ;
    fn neg(self) -> LaurentAQ {
        -self.clone()
    }
}

impl Mul<&LaurentAQ> for &LaurentAQ {
    type Output = LaurentAQ;
    fn mul(self, rhs: &LaurentAQ) -> LaurentAQ {
        let mut acc: BTreeMap<Exp, Q> = BTreeMap::new();
        for (&(a1, q1), c1) in &self.terms {
            for (&(a2, q2), c2) in &rhs.terms {
                *acc.entry((a1 + a2, q1 + q2)).or_insert_with(Q::zero) += c1 * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentAQ { terms: acc }
    }
}

impl Mul for LaurentAQ {
    type Output = LaurentAQ;
    fn mul(self, rhs: LaurentAQ) -> LaurentAQ {
        &self * &rhs
    }
}
