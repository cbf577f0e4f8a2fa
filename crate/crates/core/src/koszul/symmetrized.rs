//! The symmetrized system in `u_2..u_n, v_2..v_m` and the Hilbert series of
//! its Koszul `H_0`.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use super::linalg::{Echelon, SVec};
use super::poly::MultiPoly;
use crate::cherednik::{l_character_all, CherednikParams};
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{q_int, Q};

/// Weights of `u_2..u_n, v_2..v_m`.
pub fn symmetrized_weights(m: usize, n: usize) -> Vec<u32> {
    (2..=n as u32).chain(2..=m as u32).collect()
}

/// `Coef_{z^j} (1 + Σ_{k=2}^n u_k z^k)^{exp}`, truncated at `z^{top}`.
fn series_power(nvars: usize, offset: usize, len: usize, exp: usize, top: usize) -> Vec<MultiPoly> {
    let mut base = vec![MultiPoly::zero(nvars); top + 1];
    base[0] = MultiPoly::one(nvars);
    for (k, slot) in base.iter_mut().enumerate().take(len.min(top) + 1).skip(2) {
        *slot = MultiPoly::var(nvars, offset + k - 2);
    }
    let mut acc = vec![MultiPoly::zero(nvars); top + 1];
    acc[0] = MultiPoly::one(nvars);
    for _ in 0..exp {
        let mut next = vec![MultiPoly::zero(nvars); top + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in base.iter().enumerate().take(top + 1 - i) {
                if !b.is_zero() {
                    next[i + k] = &next[i + k] + &(a * b);
                }
            }
        }
        acc = next;
    }
    acc
}

/// `Coef_j[(1 + Σ u_k z^k)^m − (1 + Σ v_k z^k)^n]` for `2 ≤ j ≤ m+n−1`.
pub fn symmetrized_system(m: usize, n: usize) -> Result<Vec<MultiPoly>> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument("symmetrized system needs m, n ≥ 2".into()));
    }
    let nvars = (n - 1) + (m - 1);
    let top = m + n - 1;
    let u = series_power(nvars, 0, n, m, top);
    let v = series_power(nvars, n - 1, m, n, top);
    Ok((2..=top).map(|j| &u[j] - &v[j]).collect())
}

fn weighted_monomials(weights: &[u32], deg: u32) -> Vec<Vec<u32>> {
    fn rec(w: &[u32], i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == w.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=left / w[i] {
            cur[i] = a;
            rec(w, i + 1, left - a * w[i], cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(weights, 0, deg, &mut vec![0; weights.len()], &mut out);
    out
}

/// Dimensions of `Q[u, v]/(system)` in weighted degrees `0..=max_deg`.
pub fn symmetrized_hilbert_series(m: usize, n: usize, max_deg: usize) -> Result<Vec<usize>> {
    let eqs = symmetrized_system(m, n)?;
    let w = symmetrized_weights(m, n);
    let mut out = Vec::with_capacity(max_deg + 1);
    for t in 0..=max_deg as u32 {
        let monos = weighted_monomials(&w, t);
        let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(k, e)| (e, k)).collect();
        let mut ech = Echelon::new();
        for (jj, eq) in eqs.iter().enumerate() {
            let j = jj as u32 + 2;
            if j > t {
                break;
            }
            for mono in weighted_monomials(&w, t - j) {
                let mut v = SVec::new();
                for (e, c) in eq.terms() {
                    let prod: Vec<u32> = e.iter().zip(&mono).map(|(a, b)| a + b).collect();
                    *v.entry(index[&prod]).or_insert_with(|| q_int(0)) += c;
                }
                v.retain(|_, c| c != &q_int(0));
                ech.insert(v);
            }
        }
        out.push(monos.len() - ech.rank());
    }
    Ok(out)
}

/// Graded dimensions of `L_{m/n}(n0·(d))^{S_n}` from the closed-form
/// character, lowest weight moved to degree 0.
pub fn invariant_hilbert_series(m: usize, n: usize, max_deg: usize) -> Result<Vec<usize>> {
    let p = CherednikParams::new(m, n)?;
    let chi = l_character_all(&p, &Partition::row(p.d()), &Partition::empty())?;
    let inv = chi.isotypic(&Partition::row(n));
    let lo = chi.offset().ok_or_else(|| Error::Consistency("zero character".into()))?;
    let series = inv.expand(lo + 2 * max_deg as i64);
    (0..=max_deg as i64)
        .map(|t| {
            let c: Q = series.coeff((0, lo + 2 * t));
            if !c.is_integer() || c < q_int(0) {
                return Err(Error::Consistency(format!("invariant multiplicity {c} in degree {t}")));
            }
            Ok(c.to_integer().to_usize().expect("small dimension"))
        })
        .collect()
}
