//! Weyl group elements as integer matrices on the root lattice, and
//! breadth-first enumeration of the group they generate.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{berkowitz, ExactMatrix, LaurentPoly, Rational};
use crate::error::{Error, Result};

/// Default ceiling on the number of enumerated elements.
pub const DEFAULT_GROUP_BUDGET: u64 = 1_000_000;
/// Largest budget an explicit override may request.
pub const MAX_GROUP_BUDGET: u64 = 10_000_000;

/// An `n×n` integer matrix acting on column vectors of simple-root
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    n: usize,
    entries: Vec<i32>,
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Self { n, entries }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), n);
                r.iter()
                    .map(|&v| i32::try_from(v).expect("entry fits in i32"))
            })
            .collect();
        Self { n, entries }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.entries[r * self.n + c] as i64
    }

    pub fn entries(&self) -> &[i32] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c)).collect())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, rhs: &GroupElement) -> GroupElement {
        let n = self.n;
        let mut entries = vec![0i32; n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.entries[r * n + k];
                if a == 0 {
                    continue;
                }
                for c in 0..n {
                    entries[r * n + c] += a * rhs.entries[k * n + c];
                }
            }
        }
        GroupElement { n, entries }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c) * v[c]).sum())
            .collect()
    }

    pub fn apply_rational(&self, v: &[Rational]) -> Vec<Rational> {
        (0..self.n)
            .map(|r| {
                (0..self.n).fold(Rational::from_integer(0.into()), |acc, c| {
                    acc + &v[c] * Rational::from_integer(self.get(r, c).into())
                })
            })
            .collect()
    }

    pub fn transpose(&self) -> GroupElement {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for r in 0..n {
            for c in 0..n {
                entries[c * n + r] = self.entries[r * n + c];
            }
        }
        GroupElement { n, entries }
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let id = Self::identity(self.n);
        let mut p = self.clone();
        let mut k = 1;
        while p != id {
            p = p.mul(self);
            k += 1;
        }
        k
    }

    /// Coefficients `[1, c_1, …, c_n]` of `det(1 - t·w)`.
    pub fn char_coeffs(&self) -> Vec<i64> {
        berkowitz(&self.rows())
    }

    /// `det(1 - t·w)` as a polynomial in `t`.
    pub fn char_poly(&self) -> LaurentPoly {
        let c = self.char_coeffs();
        LaurentPoly::from_ints(0, &c)
    }

    pub fn determinant(&self) -> i64 {
        let c = self.char_coeffs();
        let top = *c.last().unwrap();
        if self.n % 2 == 0 {
            top
        } else {
            -top
        }
    }

    pub fn to_exact(&self) -> ExactMatrix {
        let flat: Vec<i64> = self.entries.iter().map(|&v| v as i64).collect();
        ExactMatrix::from_ints(self.n, self.n, &flat)
    }

    /// `w - 1` as integer rows.
    pub fn minus_identity(&self) -> Vec<Vec<i128>> {
        (0..self.n)
            .map(|r| {
                (0..self.n)
                    .map(|c| self.get(r, c) as i128 - i128::from(r == c))
                    .collect()
            })
            .collect()
    }
}

/// A finite matrix group listed without repetition, with a breadth-first
/// spanning tree over the generators for recovering words.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    dim: usize,
    elements: Vec<GroupElement>,
    generators: Vec<GroupElement>,
    parent: Vec<Option<(u32, u8)>>,
    index: BTreeMap<Vec<i32>, u32>,
}

impl WeylGroup {
    /// Closure of `generators` under left multiplication, starting at the
    /// identity.
    pub fn generated_by(dim: usize, generators: Vec<GroupElement>, budget: u64) -> Result<Self> {
        let mut g = WeylGroup {
            dim,
            elements: vec![GroupElement::identity(dim)],
            generators,
            parent: vec![None],
            index: BTreeMap::new(),
        };
        g.index.insert(g.elements[0].entries.clone(), 0);
        let mut head = 0;
        while head < g.elements.len() {
            for (gi, s) in g.generators.iter().enumerate() {
                let next = s.mul(&g.elements[head]);
                if g.index.contains_key(&next.entries) {
                    continue;
                }
                if g.elements.len() as u64 >= budget {
                    return Err(Error::BudgetExceeded {
                        budget: "group order",
                        requested: g.elements.len() as u128 + 1,
                        limit: budget as u128,
                    });
                }
                g.index
                    .insert(next.entries.clone(), g.elements.len() as u32);
                g.elements.push(next);
                g.parent.push(Some((head as u32, gi as u8)));
            }
            head += 1;
        }
        Ok(g)
    }

    /// The group containing only the identity.
    pub fn trivial(dim: usize) -> Self {
        Self::generated_by(dim, Vec::new(), 1).expect("trivial group fits any budget")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn position(&self, w: &GroupElement) -> Option<usize> {
        self.index.get(&w.entries).map(|&i| i as usize)
    }

    pub fn contains(&self, w: &GroupElement) -> bool {
        self.index.contains_key(&w.entries)
    }

    /// Generator indices `[g_1, …, g_k]` with `element(i) = g_1 ⋯ g_k`.
    pub fn word(&self, i: usize) -> Vec<u8> {
        let mut w = Vec::new();
        let mut cur = i;
        while let Some((p, g)) = self.parent[cur] {
            w.push(g);
            cur = p as usize;
        }
        w
    }

    /// Every product `s·w` with `s` a generator lands back in the list.
    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|w| self.generators.iter().all(|s| self.contains(&s.mul(w))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_generates_cyclic_group() {
        let r = GroupElement::from_rows(&[vec![0, -1], vec![1, -1]]);
        assert_eq!(r.order(), 3);
        let g = WeylGroup::generated_by(2, vec![r.clone()], 100).unwrap();
        assert_eq!(g.order(), 3);
        assert!(g.is_closed());
        let i = g.position(&r.mul(&r)).unwrap();
        let w = g.word(i);
        assert_eq!(w, vec![0, 0]);
    }

    #[test]
    fn budget_is_enforced() {
        let r = GroupElement::from_rows(&[vec![0, -1], vec![1, -1]]);
        let err = WeylGroup::generated_by(2, vec![r], 2).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { limit: 2, .. }));
    }

    #[test]
    fn determinant_from_char_poly() {
        let s = GroupElement::from_rows(&[vec![-1, 1], vec![0, 1]]);
        assert_eq!(s.determinant(), -1);
        assert_eq!(GroupElement::identity(3).determinant(), 1);
    }
}
