//! The Koszul complex `K^i = C[h] ⊗ ∧^i V`, `V = span{f_i}`, over
//! `Q[x_1..x_{n−1}]` after eliminating `x_n = −Σ x_i`, and its graded
//! `S_n`-characters.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::linalg::{kernel, Echelon, SVec};
use super::poly::{singular_polynomials, singular_potential, MultiPoly};
use crate::cherednik::{l_character_all, verma_character, CherednikParams, GradedSnCharacter};
use crate::error::{Error, Result};
use crate::laurent::{LaurentAQ, RationalAQ};
use crate::partition::Partition;
use crate::rational::{q_int, Q};
use crate::symfunc::mn_character;

/// Basis element `x^a ⊗ f_{s_1} ∧ … ∧ f_{s_i}` with `s_1 < … < s_i < n−1`.
pub type ChainElem = (Vec<u32>, Vec<usize>);
type Chain = BTreeMap<ChainElem, Q>;

fn monomials(nv: usize, deg: usize) -> Vec<Vec<u32>> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
    }
    let mut out = Vec::new();
    if nv == 0 {
        if deg == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(0, deg as u32, &mut vec![0; nv], &mut out);
    out
}

fn subsets(k: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, k: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for s in start..k {
            cur.push(s);
            rec(s + 1, k, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, k, i, &mut Vec::new(), &mut out);
    out
}

/// Insert `r` into the sorted `list`; `None` if already present, else the sign.
fn wedge_insert(list: &[usize], r: usize) -> Option<(Vec<usize>, i64)> {
    if list.contains(&r) {
        return None;
    }
    let above = list.iter().filter(|&&x| x > r).count();
    let mut out = list.to_vec();
    out.push(r);
    out.sort_unstable();
    Some((out, if above % 2 == 0 { 1 } else { -1 }))
}

/// A permutation with cycle type `cls`, cycles on consecutive points.
pub fn class_representative(cls: &Partition) -> Vec<usize> {
    let mut perm = Vec::with_capacity(cls.size());
    let mut start = 0;
    for &len in cls.parts() {
        for k in 0..len {
            perm.push(start + (k + 1) % len);
        }
        start += len;
    }
    perm
}

/// Matrix of `d: C_{i+1, j−m} → C_{i, j}`.
#[derive(Clone, Debug)]
pub struct KoszulDegreePiece {
    pub i: usize,
    pub j: usize,
    pub source: Vec<ChainElem>,
    pub target: Vec<ChainElem>,
    /// Image of each source basis vector, in target coordinates.
    pub columns: Vec<SVec>,
}

impl KoszulDegreePiece {
    pub fn rank(&self) -> usize {
        Echelon::from_vectors(self.columns.iter().cloned()).rank()
    }
}

pub struct KoszulComplex {
    pub m: usize,
    pub n: usize,
    pub potential: MultiPoly,
    /// `f_1..f_{n−1}` in `x_1..x_{n−1}`.
    gens: Vec<MultiPoly>,
    nv: usize,
}

impl KoszulComplex {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if !(2..=6).contains(&n) {
            return Err(Error::InvalidArgument(format!("Koszul complex needs 2 ≤ n ≤ 6, got n = {n}")));
        }
        let potential = singular_potential(m, n)?;
        let gens = singular_polynomials(m, n)?.into_iter().take(n - 1).map(|f| f.eliminate_last()).collect();
        Ok(KoszulComplex { m, n, potential, gens, nv: n - 1 })
    }

    pub fn rank(&self) -> usize {
        self.nv
    }

    pub fn basis(&self, i: usize, j: usize) -> Vec<ChainElem> {
        if i > self.nv {
            return Vec::new();
        }
        let subs = subsets(self.nv, i);
        monomials(self.nv, j).into_iter().flat_map(|a| subs.iter().map(move |s| (a.clone(), s.clone()))).collect()
    }

    /// `d(x^a ⊗ f_S) = Σ_k (−1)^k x^a f_{S_k} ⊗ f_{S∖S_k}`.
    pub fn differential(&self, (a, s): &ChainElem) -> Chain {
        let mut out = Chain::new();
        for (k, &sk) in s.iter().enumerate() {
            let sign = if k % 2 == 0 { q_int(1) } else { q_int(-1) };
            let mut rest = s.clone();
            rest.remove(k);
            for (e, c) in self.gens[sk].terms() {
                let mono: Vec<u32> = e.iter().zip(a).map(|(x, y)| x + y).collect();
                add_to(&mut out, (mono, rest.clone()), c * &sign);
            }
        }
        out
    }

    /// `σ·(x^a ⊗ f_S)` with `x_t ↦ x_{σ(t)}`, `f_t ↦ f_{σ(t)}`.
    pub fn act(&self, perm: &[usize], (a, s): &ChainElem) -> Chain {
        let nv = self.nv;
        let lin = |t: usize| -> MultiPoly {
            if t < nv {
                MultiPoly::var(nv, t)
            } else {
                (0..nv).fold(MultiPoly::zero(nv), |acc, r| &acc - &MultiPoly::var(nv, r))
            }
        };
        let images: Vec<MultiPoly> = (0..nv).map(|t| lin(perm[t])).collect();
        let poly = MultiPoly::monomial(nv, a.clone(), q_int(1)).compose(&images);
        let mut wedge: BTreeMap<Vec<usize>, i64> = BTreeMap::from([(Vec::new(), 1)]);
        for &t in s {
            let target = perm[t];
            let factor: Vec<(usize, i64)> = if target < nv { vec![(target, 1)] } else { (0..nv).map(|r| (r, -1)).collect() };
            let mut next = BTreeMap::new();
            for (list, c) in &wedge {
                for &(r, v) in &factor {
                    if let Some((l, sg)) = wedge_insert(list, r) {
                        *next.entry(l).or_insert(0) += c * v * sg;
                    }
                }
            }
            next.retain(|_, c| *c != 0);
            wedge = next;
        }
        let mut out = Chain::new();
        for (e, c) in poly.terms() {
            for (list, w) in &wedge {
                add_to(&mut out, (e.clone(), list.clone()), c * q_int(*w));
            }
        }
        out
    }

    /// `d: C_{i+1, j−m} → C_{i, j}`.
    pub fn piece(&self, i: usize, j: usize) -> KoszulDegreePiece {
        let target = self.basis(i, j);
        let source = if j >= self.m { self.basis(i + 1, j - self.m) } else { Vec::new() };
        let index = index_of(&target);
        let columns = source.iter().map(|b| to_svec(&self.differential(b), &index)).collect();
        KoszulDegreePiece { i, j, source, target, columns }
    }

    /// `∂∘∂ = 0` on `C_{i+2, j−2m} → C_{i, j}` for all `i` and `j ≤ max_qdeg`.
    pub fn check_d_squared(&self, max_qdeg: usize) -> bool {
        (0..self.nv.saturating_sub(1)).all(|i| {
            (2 * self.m..=max_qdeg).all(|j| {
                self.basis(i + 2, j - 2 * self.m).iter().all(|b| {
                    let mut total = Chain::new();
                    for (e, c) in self.differential(b) {
                        for (f, x) in self.differential(&e) {
                            add_to(&mut total, f, &c * x);
                        }
                    }
                    total.is_empty()
                })
            })
        })
    }

    /// `d(σb) = σd(b)` on every basis vector of `C_{i,j}`, `j ≤ max_qdeg`.
    pub fn check_equivariance(&self, perm: &[usize], max_qdeg: usize) -> bool {
        (1..=self.nv).all(|i| {
            (0..=max_qdeg).all(|j| {
                self.basis(i, j).iter().all(|b| {
                    let mut lhs = Chain::new();
                    for (e, c) in self.act(perm, b) {
                        for (f, x) in self.differential(&e) {
                            add_to(&mut lhs, f, &c * x);
                        }
                    }
                    let mut rhs = Chain::new();
                    for (e, c) in self.differential(b) {
                        for (f, x) in self.act(perm, &e) {
                            add_to(&mut rhs, f, &c * x);
                        }
                    }
                    lhs == rhs
                })
            })
        })
    }

    /// Doubled `h`-weight of `C_{i,j}`: `(n−1) − 2cκ(∧^i h) + 2j`.
    pub fn weight_exp(&self, i: usize, j: usize) -> i64 {
        let (m, n) = (self.m as i64, self.n as i64);
        (n - 1) * (1 - m) + 2 * m * i as i64 + 2 * j as i64
    }

    fn homology_piece(&self, i: usize, j: usize, reps: &[(Partition, Vec<usize>)]) -> Result<HomologyPiece> {
        let basis = self.basis(i, j);
        let index = index_of(&basis);
        let acted: Vec<Vec<SVec>> =
            reps.iter().map(|(_, perm)| basis.iter().map(|b| to_svec(&self.act(perm, b), &index)).collect()).collect();

        // cycles: kernel of C_{i,j} → C_{i−1,j+m}
        let (cycles, free) = if i == 0 {
            let unit = (0..basis.len()).map(|b| SVec::from([(b, q_int(1))])).collect();
            (unit, (0..basis.len()).collect())
        } else {
            let out = self.piece(i - 1, j + self.m);
            let k = kernel(&out.columns);
            (k.vectors, k.free)
        };
        let boundaries = if j >= self.m { Echelon::from_vectors(self.piece(i, j).columns) } else { Echelon::new() };

        let trace_on = |images: &[SVec], vectors: &[SVec], coords: &[usize]| -> Q {
            let mut t = Q::zero();
            for (v, &pos) in vectors.iter().zip(coords) {
                for (b, x) in v {
                    if let Some(y) = images[*b].get(&pos) {
                        t += x * y;
                    }
                }
            }
            t
        };
        let mut traces = BTreeMap::new();
        for ((cls, _), images) in reps.iter().zip(&acted) {
            let t = trace_on(images, &cycles, &free) - trace_on(images, &boundaries.rows, &boundaries.pivots);
            if !t.is_integer() {
                return Err(Error::Consistency(format!("non-integral trace {t} on H_{i} degree {j}")));
            }
            traces.insert(cls.clone(), t.to_integer().to_i64().expect("small trace"));
        }
        let dim = cycles.len() - boundaries.rank();
        Ok(HomologyPiece { i, j, dim, traces })
    }
}

fn add_to(chain: &mut Chain, key: ChainElem, c: Q) {
    if c.is_zero() {
        return;
    }
    let slot = chain.entry(key.clone()).or_insert_with(Q::zero);
    *slot += c;
    if slot.is_zero() {
        chain.remove(&key);
    }
}

fn index_of(basis: &[ChainElem]) -> HashMap<ChainElem, usize> {
    basis.iter().enumerate().map(|(k, b)| (b.clone(), k)).collect()
}

fn to_svec(chain: &Chain, index: &HashMap<ChainElem, usize>) -> SVec {
    chain.iter().map(|(k, c)| (index[k], c.clone())).collect()
}

/// `H_i` in polynomial degree `j`: dimension and trace at each conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyPiece {
    pub i: usize,
    pub j: usize,
    pub dim: usize,
    pub traces: BTreeMap<Partition, i64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KoszulHomology {
    pub m: usize,
    pub n: usize,
    pub max_qdeg: usize,
    /// Doubled `h`-weight of `C_{i,0}` for each `i`.
    pub base_weights: Vec<i64>,
    pub pieces: Vec<HomologyPiece>,
}

/// Graded characters of `H_i(K^•_{m,n})` in polynomial degrees `≤ max_qdeg`.
pub fn koszul_homology(m: usize, n: usize, max_qdeg: usize) -> Result<KoszulHomology> {
    let cx = KoszulComplex::new(m, n)?;
    let reps: Vec<(Partition, Vec<usize>)> =
        Partition::all(n).into_iter().map(|cls| { let p = class_representative(&cls); (cls, p) }).collect();
    let grid: Vec<(usize, usize)> = (0..=cx.nv).flat_map(|i| (0..=max_qdeg).map(move |j| (i, j))).collect();
    let pieces = grid.par_iter().map(|&(i, j)| cx.homology_piece(i, j, &reps)).collect::<Result<Vec<_>>>()?;
    let base_weights = (0..=cx.nv).map(|i| cx.weight_exp(i, 0)).collect();
    Ok(KoszulHomology { m, n, max_qdeg, base_weights, pieces })
}

impl KoszulHomology {
    pub fn piece(&self, i: usize, j: usize) -> Option<&HomologyPiece> {
        self.pieces.iter().find(|p| p.i == i && p.j == j)
    }

    pub fn top_degree(&self) -> usize {
        self.n - 1
    }

    pub fn total_dim(&self, i: usize) -> usize {
        self.pieces.iter().filter(|p| p.i == i).map(|p| p.dim).sum()
    }

    pub fn vanishes(&self, i: usize) -> bool {
        self.total_dim(i) == 0
    }

    /// Multiplicity of each irreducible in `H_i` at degree `j`.
    pub fn isotypic(&self, i: usize, j: usize) -> BTreeMap<Partition, i64> {
        let Some(p) = self.piece(i, j) else {
            return BTreeMap::new();
        };
        let fact: BigInt = (1..=self.n as u64).product::<u64>().into();
        let mut out = BTreeMap::new();
        for mu in Partition::all(self.n) {
            let mut s = BigInt::zero();
            for (cls, t) in &p.traces {
                s += BigInt::from(mn_character(&mu, cls).expect("sizes agree") * t) * (&fact / cls.z());
            }
            let mult = (s / &fact).to_i64().expect("small multiplicity");
            if mult != 0 {
                out.insert(mu, mult);
            }
        }
        out
    }

    /// `Σ_j Tr(σ | H_{i,j}) q^{weight}` as a polynomial per class.
    pub fn character(&self, i: usize) -> GradedSnCharacter {
        let mut classes: BTreeMap<Partition, LaurentAQ> = Partition::all(self.n).into_iter().map(|c| (c, LaurentAQ::zero())).collect();
        for p in self.pieces.iter().filter(|p| p.i == i) {
            let w = self.base_weights[i] + 2 * p.j as i64;
            for (cls, t) in &p.traces {
                classes.get_mut(cls).expect("class").add_term((0, w), q_int(*t));
            }
        }
        GradedSnCharacter { n: self.n, classes: classes.into_iter().map(|(c, p)| (c, RationalAQ::from_poly(p))).collect() }
    }

    /// Highest doubled weight fully covered for `H_i`.
    pub fn max_weight(&self, i: usize) -> i64 {
        self.base_weights[i] + 2 * self.max_qdeg as i64
    }

    /// `H_i` agrees with `L_c(n0(d−i, 1^i))` for `i < d` and vanishes for `i ≥ d`.
    pub fn matches_l_characters(&self) -> Result<bool> {
        let p = CherednikParams::new(self.m, self.n)?;
        let d = p.d();
        for i in 0..=self.top_degree() {
            let got = self.character(i);
            if i >= d {
                if !self.vanishes(i) {
                    return Ok(false);
                }
                continue;
            }
            let want = l_character_all(&p, &Partition::hook(d, i), &Partition::empty())?;
            let max = self.max_weight(i);
            for (cls, r) in &want.classes {
                if got.classes[cls].expand(max) != r.expand(max) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `Σ_i (−1)^i ch H_i = Σ_i (−1)^i ch M_c(∧^i h)` through the covered range.
    pub fn euler_matches_verma(&self) -> Result<bool> {
        let p = CherednikParams::new(self.m, self.n)?;
        let max = self.max_weight(0);
        for cls in Partition::all(self.n) {
            let mut lhs = LaurentAQ::zero();
            let mut rhs = LaurentAQ::zero();
            for i in 0..=self.top_degree() {
                let sign = q_int(if i % 2 == 0 { 1 } else { -1 });
                lhs = &lhs + &self.character(i).classes[&cls].expand(max).scale(&sign);
                rhs = &rhs + &verma_character(&p, &Partition::hook(self.n, i), &cls)?.expand(max).scale(&sign);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimension of the `S_n`-invariants of `H_i` per degree `j`.
    pub fn invariant_dims(&self, i: usize) -> Vec<usize> {
        let triv = Partition::row(self.n);
        (0..=self.max_qdeg).map(|j| self.isotypic(i, j).get(&triv).copied().unwrap_or(0) as usize).collect()
    }
}
