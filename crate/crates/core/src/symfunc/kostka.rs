//! Kostka–Foulkes polynomials via the charge statistic.

use crate::error::{Error, Result};
use crate::laurent::LaurentAQ;
use crate::partition::Partition;
use crate::rational::q_int;

/// Semistandard tableaux of shape `shape` and content `weight`, as rows.
pub fn ssyt(shape: &Partition, weight: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        shape: &Partition,
        weight: &[usize],
        letter: usize,
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if letter == weight.len() {
            if rows.iter().map(Vec::len).eq(shape.parts().iter().copied()) {
                out.push(rows.clone());
            }
            return;
        }
        let before: Vec<usize> = rows.iter().map(Vec::len).collect();
        strip(shape, weight, letter, weight[letter], 0, &before, rows, out);
    }

    // Adds `left` copies of `letter + 1` as a horizontal strip, choosing rows from `r` on.
    #[allow(clippy::too_many_arguments)]
    fn strip(
        shape: &Partition,
        weight: &[usize],
        letter: usize,
        left: usize,
        r: usize,
        before: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if left == 0 {
            rec(shape, weight, letter + 1, rows, out);
            return;
        }
        if r >= shape.len() || r > before.len() {
            return;
        }
        let cur = before.get(r).copied().unwrap_or(0);
        let above = if r == 0 { usize::MAX } else { before[r - 1] };
        let cap = (shape.part(r) - cur).min(above.saturating_sub(cur)).min(left);
        for a in (0..=cap).rev() {
            if rows.len() <= r {
                rows.push(Vec::new());
            }
            rows[r].extend(std::iter::repeat_n(letter + 1, a));
            strip(shape, weight, letter, left - a, r + 1, before, rows, out);
            let keep = rows[r].len() - a;
            rows[r].truncate(keep);
            if rows[r].is_empty() && rows.len() == r + 1 {
                rows.pop();
            }
        }
    }

    let mut out = Vec::new();
    if shape.size() == weight.iter().sum::<usize>() {
        rec(shape, weight, 0, &mut Vec::new(), &mut out);
    }
    out
}

/// Rows read from the bottom up, each left to right.
pub fn reading_word(rows: &[Vec<usize>]) -> Vec<usize> {
    rows.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> usize {
    let mut remaining: Vec<(usize, usize)> = word.iter().copied().enumerate().collect();
    let mut total = 0;
    while !remaining.is_empty() {
        let mut picked: Vec<usize> = Vec::new();
        let mut pos: Option<usize> = None;
        let mut index = 0;
        let mut letter = 1;
        loop {
            let here = |&(p, l): &(usize, usize)| l == letter && !picked.contains(&p);
            // cyclic leftward scan from the previous position
            let left = remaining
                .iter()
                .filter(|e| here(e) && pos.is_none_or(|q| e.0 < q))
                .map(|e| e.0)
                .max();
            let found = match left {
                Some(p) => Some(p),
                None => {
                    let wrapped = remaining.iter().filter(|e| here(e)).map(|e| e.0).max();
                    if wrapped.is_some() && pos.is_some() {
                        index += 1;
                    }
                    wrapped
                }
            };
            let Some(p) = found else { break };
            total += index;
            picked.push(p);
            pos = Some(p);
            letter += 1;
        }
        assert!(!picked.is_empty(), "word content is not a partition");
        remaining.retain(|(p, _)| !picked.contains(p));
    }
    total
}

/// `K_{μ,w}(q) = Σ_T q^{charge(T)}` over semistandard tableaux of shape `μ`, weight `w`.
pub fn kostka_foulkes(mu: &Partition, w: &Partition) -> Result<LaurentAQ> {
    if mu.size() != w.size() {
        return Err(Error::SizeMismatch(format!("|{mu}| != |{w}|")));
    }
    let mut out = LaurentAQ::zero();
    for t in ssyt(mu, w.parts()) {
        out.add_term((0, 2 * charge(&reading_word(&t)) as i64), q_int(1));
    }
    Ok(out)
}
