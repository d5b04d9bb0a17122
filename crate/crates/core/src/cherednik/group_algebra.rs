//! The group algebra of `W` over the parameter ring.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;

use crate::algebra::{rational, Rational};
use crate::character::{ParamScalar, Params};
use crate::root_system::{GroupElement, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<GroupElement, ParamScalar>,
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: GroupElement, coeff: ParamScalar) -> Self {
        let mut e = Self::zero();
        e.add_term(w, coeff);
        e
    }

    pub fn identity(n: usize) -> Self {
        Self::basis(GroupElement::identity(n), ParamScalar::one())
    }

    /// `|W|⁻¹ Σ w`.
    pub fn trivial_idempotent(group: &WeylGroup) -> Self {
        let k = rational::rat(1, group.order() as i64);
        let mut e = Self::zero();
        for w in group.elements() {
            e.add_term(w.clone(), ParamScalar::constant(k.clone()));
        }
        e
    }

    /// `|W|⁻¹ Σ ε(w) w`.
    pub fn sign_idempotent(group: &WeylGroup) -> Self {
        let k = rational::rat(1, group.order() as i64);
        let mut e = Self::zero();
        for w in group.elements() {
            let s = rational::int(w.determinant());
            e.add_term(w.clone(), ParamScalar::constant(&k * s));
        }
        e
    }

    pub fn add_term(&mut self, w: GroupElement, coeff: ParamScalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &GroupElement) -> ParamScalar {
        self.terms.get(w).cloned().unwrap_or_else(ParamScalar::zero)
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

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (w, c) in &other.terms {
            r.add_term(w.clone(), c.clone());
        }
        r
    }

    pub fn scale(&self, k: &ParamScalar) -> Self {
        let mut r = Self::zero();
        for (w, c) in &self.terms {
            r.add_term(w.clone(), c * k);
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                r.add_term(a.mul(b), ca * cb);
            }
        }
        r
    }

    /// Image under the trivial character `w ↦ 1`.
    pub fn augmentation(&self) -> ParamScalar {
        self.terms
            .values()
            .fold(ParamScalar::zero(), |acc, c| &acc + c)
    }

    /// Image under `w ↦ ε(w)`.
    pub fn sign_augmentation(&self) -> ParamScalar {
        self.terms.iter().fold(ParamScalar::zero(), |acc, (w, c)| {
            let s = rational::int(w.determinant());
            &acc + &c.scale(&s)
        })
    }

    /// Substitutes numeric parameters into every coefficient.
    pub fn eval(&self, c: &Params) -> BTreeMap<GroupElement, Rational> {
        self.terms
            .iter()
            .map(|(w, k)| (w.clone(), k.eval(c)))
            .filter(|(_, v)| *v != rational::zero())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_with_group, TypeLabel, DEFAULT_GROUP_BUDGET};

    #[test]
    fn idempotents() {
        for (l, n) in [(TypeLabel::A, 2), (TypeLabel::B, 2)] {
            let (_, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
            let g = g.unwrap();
            let e = GroupAlgebraElement::trivial_idempotent(&g);
            let es = GroupAlgebraElement::sign_idempotent(&g);
            assert_eq!(e.mul(&e), e);
            assert_eq!(es.mul(&es), es);
            assert!(e.mul(&es).is_zero());
            assert_eq!(e.augmentation(), ParamScalar::one());
            assert_eq!(es.sign_augmentation(), ParamScalar::one());
        }
    }

    #[test]
    fn cancellation_removes_terms() {
        let w = GroupElement::identity(1);
        let mut a = GroupAlgebraElement::basis(w.clone(), ParamScalar::int(2));
        a.add_term(w, ParamScalar::int(-2));
        assert!(a.is_zero());
    }
}
