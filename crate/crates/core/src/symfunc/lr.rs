//! Littlewood–Richardson coefficients by successive horizontal strips.

use std::collections::{BTreeMap, HashMap};

use once_cell::sync::Lazy;
use parking_lot::RwLock;

use crate::partition::Partition;

type LrTable = BTreeMap<Partition, u64>;

static MEMO: Lazy<RwLock<HashMap<(Partition, Partition), LrTable>>> =
    Lazy::new(|| RwLock::new(HashMap::new()));

/// `s_μ · s_ν = Σ_λ c^λ_{μν} s_λ`.
pub fn lr_product(mu: &Partition, nu: &Partition) -> LrTable {
    // c^λ_{μν} is symmetric; fill the smaller shape into the larger
    let (outer, inner) = if mu.size() >= nu.size() { (mu, nu) } else { (nu, mu) };
    let key = (outer.clone(), inner.clone());
    if let Some(v) = MEMO.read().get(&key) {
        return v.clone();
    }
    let mut out = LrTable::new();
    let mut counts: Vec<Vec<usize>> = Vec::new();
    fill(outer.parts().to_vec(), inner.parts(), 0, &mut counts, &mut out);
    MEMO.write().insert(key, out.clone());
    out
}

/// `counts[k][r]`: number of letters `k + 1` placed in row `r`.
fn fill(shape: Vec<usize>, content: &[usize], k: usize, counts: &mut Vec<Vec<usize>>, out: &mut LrTable) {
    if k == content.len() {
        *out.entry(Partition::from_parts_unsorted(shape)).or_insert(0) += 1;
        return;
    }
    let rows = shape.len() + 1;
    let mut strip = vec![0usize; rows];
    place(&shape, content[k], 0, k, &mut strip, counts, &mut |strip, counts| {
        let mut next = shape.clone();
        next.resize(rows, 0);
        for (r, a) in strip.iter().enumerate() {
            next[r] += a;
        }
        while next.last() == Some(&0) {
            next.pop();
        }
        counts.push(strip.to_vec());
        fill(next, content, k + 1, counts, out);
        counts.pop();
    });
}

/// Distributes `left` boxes of letter `k + 1` over rows `r..` as a horizontal strip.
#[allow(clippy::too_many_arguments)]
type Visit<'a> = dyn FnMut(&[usize], &mut Vec<Vec<usize>>) + 'a;

fn place(
    shape: &[usize],
    left: usize,
    r: usize,
    k: usize,
    strip: &mut Vec<usize>,
    counts: &mut Vec<Vec<usize>>,
    done: &mut Visit<'_>,
) {
    if r == strip.len() {
        if left == 0 {
            done(strip, counts);
        }
        return;
    }
    let cur = shape.get(r).copied().unwrap_or(0);
    // horizontal strip: the new row may not pass the old row above
    let cap_shape = if r == 0 { left } else { shape[r - 1] - cur };
    // lattice word: letters k+1 through row r stay within letters k in rows above r
    let cap_lattice = if k == 0 {
        left
    } else {
        let prev = &counts[k - 1];
        let above: usize = prev.iter().take(r).sum();
        let used: usize = strip[..r].iter().sum();
        above.saturating_sub(used)
    };
    let cap = left.min(cap_shape).min(cap_lattice);
    for a in (0..=cap).rev() {
        strip[r] = a;
        place(shape, left - a, r + 1, k, strip, counts, done);
    }
    strip[r] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn pieri_and_small_products() {
        let one = part(&[1]);
        assert_eq!(
            lr_product(&one, &one),
            BTreeMap::from([(part(&[2]), 1), (part(&[1, 1]), 1)])
        );
        assert_eq!(
            lr_product(&part(&[2]), &part(&[1, 1])),
            BTreeMap::from([(part(&[3, 1]), 1), (part(&[2, 1, 1]), 1)])
        );
        assert_eq!(lr_product(&part(&[2, 1]), &Partition::empty()), BTreeMap::from([(part(&[2, 1]), 1)]));
        // the classic coefficient 2
        let prod = lr_product(&part(&[2, 1]), &part(&[2, 1]));
        assert_eq!(prod[&part(&[3, 2, 1])], 2);
        let total: num_bigint::BigInt = prod.iter().map(|(l, &c)| l.dim() * c).sum();
        // induced dimension: C(6,3)·2·2
        assert_eq!(total, num_bigint::BigInt::from(80));
    }
}
