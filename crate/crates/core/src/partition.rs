//! Integer partitions and the Young-diagram statistics used throughout.
//!
//! Boxes are addressed as `(row, col)`, both zero-based. The content of a
//! box is `col - row`, so `kappa((2)) = 1` and `kappa((1,1)) = -1`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::factorial;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_parts_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: usize) -> Self {
        Self::from_parts_unsorted(vec![n])
    }

    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    /// The hook `(k - i, 1^i)`.
    pub fn hook(k: usize, i: usize) -> Self {
        assert!(i < k, "hook ({k}-{i},1^{i}) is not a partition");
        let mut parts = vec![k - i];
        parts.extend(std::iter::repeat_n(1, i));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (zero-based), 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|j| self.0.iter().filter(|&&p| p > j).count())
            .collect();
        Partition(parts)
    }

    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
    }

    pub fn hook_length(&self, row: usize, col: usize) -> usize {
        let arm = self.part(row) - col - 1;
        let leg = self.0.iter().skip(row + 1).filter(|&&p| p > col).count();
        arm + leg + 1
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        self.boxes().map(|(r, c)| self.hook_length(r, c)).collect()
    }

    pub fn contents(&self) -> Vec<i64> {
        self.boxes().map(|(r, c)| c as i64 - r as i64).collect()
    }

    /// `½ Σ_j (λ_j − 2j + 1) λ_j` with one-based `j`.
    pub fn kappa(&self) -> i64 {
        let twice: i64 = self
            .0
            .iter()
            .enumerate()
            .map(|(j, &p)| (p as i64 - 2 * (j as i64 + 1) + 1) * p as i64)
            .sum();
        twice / 2
    }

    /// `Σ_i (i − 1) λ_i`.
    pub fn n_statistic(&self) -> usize {
        self.0.iter().enumerate().map(|(i, &p)| i * p).sum()
    }

    /// Dimension of the Specht module, by the hook length formula.
    pub fn dim(&self) -> BigInt {
        let hooks: BigInt = self
            .hook_lengths()
            .into_iter()
            .fold(BigInt::one(), |acc, h| acc * BigInt::from(h));
        factorial(self.size()) / hooks
    }

    /// `z_ρ = Π i^{k_i} k_i!`, the centralizer order of the class of cycle type `ρ`.
    pub fn z(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (part, mult) in self.multiplicities() {
            acc *= num_traits::pow(BigInt::from(part), mult) * factorial(mult);
        }
        acc
    }

    /// Size of the conjugacy class with this cycle type.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size()) / self.z()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Sign of a permutation of this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.size() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Every part multiplied by `k`.
    pub fn scale(&self, k: usize) -> Self {
        Partition(self.0.iter().map(|&p| p * k).collect())
    }

    /// Row-wise sum `k·self + other`.
    pub fn scaled_plus(&self, k: usize, other: &Partition) -> Self {
        let len = self.len().max(other.len());
        Partition::from_parts_unsorted((0..len).map(|i| k * self.part(i) + other.part(i)).collect())
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Dominance order `self ⊵ other` for partitions of equal size.
    pub fn dominates(&self, other: &Partition) -> bool {
        let mut a = 0;
        let mut b = 0;
        for i in 0..self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Union of parts (cycle type of a disjoint product).
    pub fn union(&self, other: &Partition) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts_unsorted(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        Self::bounded(n, n, usize::MAX)
    }

    /// Partitions of `n` with parts `≤ max_part` and at most `max_len` parts.
    pub fn bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
        fn rec(n: usize, max_part: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=max_part.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_part, max_len, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for tests and examples: `part(&[2, 1])`.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}
