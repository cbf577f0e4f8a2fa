//! Sparse row reduction over `Q`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::rational::Q;

pub type SVec = BTreeMap<usize, Q>;

/// Reduced row echelon form: every row has a 1 at its pivot and zeros at
/// every other pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    pub rows: Vec<SVec>,
    pub pivots: Vec<usize>,
    index: HashMap<usize, usize>,
}

fn axpy(v: &mut SVec, a: &Q, row: &SVec) {
    for (k, x) in row {
        let slot = v.entry(*k).or_insert_with(Q::zero);
        *slot -= a * x;
        if slot.is_zero() {
            v.remove(k);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the current rows.
    pub fn reduce(&self, mut v: SVec) -> SVec {
        let hits: Vec<(usize, Q)> = v.iter().filter(|(k, _)| self.index.contains_key(k)).map(|(k, x)| (*k, x.clone())).collect();
        for (k, a) in hits {
            axpy(&mut v, &a, &self.rows[self.index[&k]]);
        }
        v
    }

    /// Adds `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: SVec) -> bool {
        let mut v = self.reduce(v);
        let Some((&p, lead)) = v.iter().next() else {
            return false;
        };
        let inv = Q::one() / lead;
        for x in v.values_mut() {
            *x *= &inv;
        }
        for row in &mut self.rows {
            if let Some(a) = row.get(&p).cloned() {
                axpy(row, &a, &v);
            }
        }
        self.index.insert(p, self.rows.len());
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    pub fn from_vectors<I: IntoIterator<Item = SVec>>(vs: I) -> Self {
        let mut e = Self::new();
        for v in vs {
            e.insert(v);
        }
        e
    }

    pub fn contains(&self, v: &SVec) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

/// Kernel of the map sending basis vector `s` to `columns[s]`.
/// Each returned vector has a 1 at its free position and 0 at every other
/// free position, so coordinates in this basis are read off at `free`.
pub struct Kernel {
    pub vectors: Vec<SVec>,
    pub free: Vec<usize>,
}

pub fn kernel(columns: &[SVec]) -> Kernel {
    let mut rows: BTreeMap<usize, SVec> = BTreeMap::new();
    for (s, col) in columns.iter().enumerate() {
        for (t, x) in col {
            rows.entry(*t).or_default().insert(s, x.clone());
        }
    }
    let ech = Echelon::from_vectors(rows.into_values());
    let pivot_set: HashMap<usize, usize> = ech.pivots.iter().enumerate().map(|(r, &p)| (p, r)).collect();
    let free: Vec<usize> = (0..columns.len()).filter(|s| !pivot_set.contains_key(s)).collect();
    let vectors = free
        .iter()
        .map(|&f| {
            let mut v = SVec::new();
            v.insert(f, Q::one());
            for (r, row) in ech.rows.iter().enumerate() {
                if let Some(x) = row.get(&f) {
                    v.insert(ech.pivots[r], -x.clone());
                }
            }
            v
        })
        .collect();
    Kernel { vectors, free }
}

/// Solve the square system `Σ_c a[r][c] y_c = b[r]` with a unique solution.
pub fn solve_unique(a: &[SVec], b: &[Q], ncols: usize) -> Option<Vec<Q>> {
    let ech = Echelon::from_vectors(a.iter().zip(b).map(|(row, rhs)| {
        let mut v = row.clone();
        if !rhs.is_zero() {
            v.insert(ncols, rhs.clone());
        }
        v
    }));
    if ech.pivots.contains(&ncols) || ech.rank() != ncols {
        return None;
    }
    let mut y = vec![Q::zero(); ncols];
    for (r, &p) in ech.pivots.iter().enumerate() {
        y[p] = ech.rows[r].get(&ncols).cloned().unwrap_or_else(Q::zero);
    }
    Some(y)
}
