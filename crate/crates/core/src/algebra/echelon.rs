//! Incremental sparse row-echelon basis.
//!
//! Vectors are inserted one at a time and the stored rows are kept in fully
//! reduced form, so the pivot set equals that of the RREF of all inserted
//! vectors regardless of insertion order. Optionally each row remembers which
//! combination of inserted vectors produced it, which lets callers solve
//! `sum(lambda_i * v_i) = target`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::rational::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

fn axpy(target: &mut SparseVec, factor: &Rational, x: &SparseVec) {
    for (k, c) in x {
        let delta = factor * c;
        match target.entry(*k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(delta);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += delta;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    combo: SparseVec,
}

#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    track: bool,
    rows: BTreeMap<usize, Row>,
}

/// Result of reducing a vector against an [`Echelon`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    /// Vector with all pivot coordinates eliminated.
    pub remainder: SparseVec,
    /// Coefficients `lambda_i` with `input = remainder + sum(lambda_i * v_i)`;
    /// empty unless combinations are tracked.
    pub combination: SparseVec,
}

impl Echelon {
    /// An empty basis for vectors of length `dim`.
    pub fn new(dim: usize, track_combinations: bool) -> Self {
        Echelon { dim, track: track_combinations, rows: BTreeMap::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    pub fn is_pivot(&self, i: usize) -> bool {
        self.rows.contains_key(&i)
    }

    pub fn reduce(&self, v: &SparseVec) -> Reduction {
        let mut rem = v.clone();
        let mut combo = SparseVec::new();
        let hits: Vec<(usize, Rational)> = v
            .iter()
            .filter(|(k, _)| self.rows.contains_key(k))
            .map(|(k, c)| (*k, c.clone()))
            .collect();
        for (p, c) in hits {
            let row = &self.rows[&p];
            axpy(&mut rem, &-c.clone(), &row.vec);
            if self.track {
                axpy(&mut combo, &c, &row.combo);
            }
        }
        Reduction { remainder: rem, combination: combo }
    }

    /// Inserts `v`, labelled `id` for combination tracking. Returns whether it
    /// increased the rank.
    pub fn insert(&mut self, v: SparseVec, id: usize) -> bool {
        debug_assert!(v.keys().all(|&k| k < self.dim));
        let Reduction { remainder, combination } = self.reduce(&v);
        let Some((&lead, lead_c)) = remainder.iter().next() else {
            return false;
        };
        let inv = lead_c.recip();
        let mut vec = SparseVec::new();
        axpy(&mut vec, &inv, &remainder);
        let mut combo = SparseVec::new();
        if self.track {
            // remainder = v - combination, as a combination of inputs
            let mut c = SparseVec::new();
            c.insert(id, Rational::one());
            axpy(&mut c, &-Rational::one(), &combination);
            axpy(&mut combo, &inv, &c);
        }
        for row in self.rows.values_mut() {
            if let Some(f) = row.vec.get(&lead).cloned() {
                axpy(&mut row.vec, &-f.clone(), &vec);
                if self.track {
                    axpy(&mut row.combo, &-f, &combo);
                }
            }
        }
        self.rows.insert(lead, Row { vec, combo });
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::matrix::RationalMatrix;
    use crate::algebra::rational::int;

    fn sv(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, c)| (k, int(c))).collect()
    }

    #[test]
    fn matches_dense_rref_pivots() {
        let vecs = [sv(&[(1, 2), (2, 4)]), sv(&[(0, 1), (1, 1)]), sv(&[(0, 2), (1, 4), (2, 4)])];
        let mut e = Echelon::new(3, false);
        for (i, v) in vecs.iter().enumerate() {
            e.insert(v.clone(), i);
        }
        let dense = RationalMatrix::from_fn(3, 3, |r, c| vecs[r].get(&c).cloned().unwrap_or_default());
        let rref = dense.rref();
        assert_eq!(e.rank(), rref.rank);
        assert_eq!(e.pivots().collect::<Vec<_>>(), rref.pivots);
    }

    #[test]
    fn tracked_combination_reconstructs_target() {
        let vecs = [sv(&[(0, 1), (1, 1)]), sv(&[(1, 1), (2, 1)]), sv(&[(0, 1), (2, 3)])];
        let mut e = Echelon::new(3, true);
        for (i, v) in vecs.iter().enumerate() {
            assert!(e.insert(v.clone(), i));
        }
        let target = sv(&[(0, 5), (1, -2), (2, 7)]);
        let red = e.reduce(&target);
        assert!(red.remainder.is_empty());
        let mut rebuilt = SparseVec::new();
        for (i, c) in &red.combination {
            axpy(&mut rebuilt, c, &vecs[*i]);
        }
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn dependent_vector_is_rejected() {
        let mut e = Echelon::new(2, false);
        assert!(e.insert(sv(&[(0, 1), (1, 2)]), 0));
        assert!(!e.insert(sv(&[(0, 3), (1, 6)]), 1));
        assert_eq!(e.rank(), 1);
        assert!(!e.is_full());
    }
}
