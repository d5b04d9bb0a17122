//! Incremental row echelon form over ℚ for sparse vectors.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::rational::Rational;

/// Sparse vector indexed by column.
pub type SparseVec = BTreeMap<usize, Rational>;

/// The span of the rows inserted so far, kept in echelon form: every stored
/// row has leading coefficient 1 at a column no other row leads at.
#[derive(Clone, Debug, Default)]
pub struct RowSpace {
    pivots: BTreeMap<usize, SparseVec>,
}

impl RowSpace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Remainder of `row` after reduction against the stored rows; zero
    /// exactly when `row` lies in the span.
    pub fn reduce(&self, mut row: SparseVec) -> SparseVec {
        let mut cursor = 0;
        loop {
            let next = row
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c));
            let Some((&col, coef)) = next else {
                return row;
            };
            let coef = coef.clone();
            for (c, v) in &self.pivots[&col] {
                let slot = row.entry(*c).or_insert_with(Rational::zero);
                *slot -= &coef * v;
                if slot.is_zero() {
                    row.remove(c);
                }
            }
            cursor = col + 1;
        }
    }

    pub fn contains(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone()).is_empty()
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, row: SparseVec) -> bool {
        let row = self.reduce(row);
        let Some((&lead, lc)) = row.iter().next() else {
            return false;
        };
        let inv = lc.recip();
        let row: SparseVec = if inv.is_one() {
            row
        } else {
            row.into_iter().map(|(c, v)| (c, v * &inv)).collect()
        };
        self.pivots.insert(lead, row);
        true
    }

    /// The stored echelon rows, ordered by leading column.
    pub fn basis(&self) -> impl Iterator<Item = &SparseVec> {
        self.pivots.values()
    }

    pub fn into_basis(self) -> Vec<SparseVec> {
        self.pivots.into_values().collect()
    }
}

/// Rank of a list of sparse rows.
pub fn rank_of<I: IntoIterator<Item = SparseVec>>(rows: I) -> usize {
    let mut rs = RowSpace::new();
    for r in rows {
        rs.insert(r);
    }
    rs.rank()
}
