//! Elements of `H_c` in PBW normal form `x^a · w · y^b`, and rewriting of
//! arbitrary words in the generators into that form.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{commutator_yx, GroupAlgebraElement};
use crate::algebra::{rational, Monomial, Rational};
use crate::character::ParamScalar;
use crate::error::{Error, Result};
use crate::root_system::{GroupElement, RootSystemData};

/// Default cap on the number of `x`, `y` letters in a rewritten word.
pub const DEFAULT_PBW_DEGREE: usize = 4;

/// A generator: `x_j = α_j`, `y_i = ω_i∨`, or a group element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X(usize),
    Y(usize),
    G(GroupElement),
}

pub type Word = Vec<Letter>;

/// Which redex the rewriter contracts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwKey {
    pub x: Monomial,
    pub w: GroupElement,
    pub y: Monomial,
}

/// `Σ coeff · x^a w y^b` with merged keys and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HcElement {
    n: usize,
    terms: BTreeMap<PbwKey, ParamScalar>,
}

impl HcElement {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, key: PbwKey, c: ParamScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwKey, &ParamScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &PbwKey) -> ParamScalar {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(ParamScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn scale(&self, k: &ParamScalar) -> Self {
        let mut r = Self::zero(self.n);
        for (key, c) in &self.terms {
            r.add_term(key.clone(), c * k);
        }
        r
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (key, c) in &other.terms {
            r.add_term(key.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&ParamScalar::int(-1)))
    }

    /// The group-algebra element `Σ c_w w` viewed in `H_c`.
    pub fn from_group_algebra(n: usize, g: &GroupAlgebraElement) -> Self {
        let mut r = Self::zero(n);
        for (w, c) in g.terms() {
            r.add_term(
                PbwKey {
                    x: vec![0; n],
                    w: w.clone(),
                    y: vec![0; n],
                },
                c.clone(),
            );
        }
        r
    }

    /// Each term spelled as a word `x…x w y…y`.
    pub fn to_words(&self) -> Vec<(ParamScalar, Word)> {
        self.terms
            .iter()
            .map(|(k, c)| {
                let mut word = Vec::new();
                for (i, &e) in k.x.iter().enumerate() {
                    word.extend(core::iter::repeat_n(Letter::X(i), e as usize));
                }
                if !k.w.is_identity() {
                    word.push(Letter::G(k.w.clone()));
                }
                for (i, &e) in k.y.iter().enumerate() {
                    word.extend(core::iter::repeat_n(Letter::Y(i), e as usize));
                }
                (c.clone(), word)
            })
            .collect()
    }

    /// `λ` with `self = λ · other`, if one exists.
    pub fn ratio_to(&self, other: &Self) -> Option<ParamScalar> {
        if other.is_zero() {
            return if self.is_zero() {
                Some(ParamScalar::zero())
            } else {
                None
            };
        }
        let (key, c0) = other
            .terms
            .iter()
            .find_map(|(k, c)| c.as_constant().map(|c| (k, c)))?;
        let lambda = self.coeff(key).scale(&(rational::one() / c0));
        (other.scale(&lambda) == *self).then_some(lambda)
    }

    /// Action on `f ⊗ 1 ∈ M_c(triv)` for `f = 1`: `y` kills the generator
    /// and `W` fixes it, so only `y`-free terms survive with `w ↦ 1`.
    pub fn on_trivial_generator(&self) -> BTreeMap<Monomial, ParamScalar> {
        let mut out: BTreeMap<Monomial, ParamScalar> = BTreeMap::new();
        for (k, c) in &self.terms {
            if k.y.iter().all(|&e| e == 0) {
                let slot = out.entry(k.x.clone()).or_insert_with(ParamScalar::zero);
                *slot = &*slot + c;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }
}

/// Rewrites words with the defining relations
/// `w x = (w·x) w`, `y w = w (w⁻¹·y)`, `y_i x_j = x_j y_i + [y_i, x_j]`
/// together with commutativity among the `x` and among the `y`.
pub struct Rewriter<'a> {
    rs: &'a RootSystemData,
    commutators: Vec<Vec<GroupAlgebraElement>>,
    degree_bound: usize,
    strategy: Strategy,
}

impl<'a> Rewriter<'a> {
    pub fn new(rs: &'a RootSystemData, degree_bound: usize) -> Self {
        let n = rs.rank;
        let commutators = (0..n)
            .map(|i| (0..n).map(|j| commutator_yx(rs, i, j)).collect())
            .collect();
        Self {
            rs,
            commutators,
            degree_bound,
            strategy: Strategy::Leftmost,
        }
    }

    pub fn with_strategy(mut self, s: Strategy) -> Self {
        self.strategy = s;
        self
    }

    fn find_redex(&self, word: &[Letter]) -> Option<usize> {
        let is_redex = |p: usize| -> bool {
            if let Letter::G(w) = &word[p] {
                if w.is_identity() {
                    return true;
                }
            }
            if p + 1 >= word.len() {
                return false;
            }
            match (&word[p], &word[p + 1]) {
                (Letter::X(a), Letter::X(b)) | (Letter::Y(a), Letter::Y(b)) => a > b,
                (Letter::Y(_), Letter::X(_))
                | (Letter::G(_), Letter::X(_))
                | (Letter::Y(_), Letter::G(_))
                | (Letter::G(_), Letter::G(_)) => true,
                _ => false,
            }
        };
        match self.strategy {
            Strategy::Leftmost => (0..word.len()).find(|&p| is_redex(p)),
            Strategy::Rightmost => (0..word.len()).rev().find(|&p| is_redex(p)),
        }
    }

    /// Replacements for the redex at `p`, as (coefficient, letters) pairs.
    fn contract(&self, word: &[Letter], p: usize) -> Vec<(ParamScalar, Vec<Letter>)> {
        let n = self.rs.rank;
        if let Letter::G(w) = &word[p] {
            if w.is_identity() {
                return vec![(ParamScalar::one(), Vec::new())];
            }
        }
        let one = ParamScalar::one;
        match (&word[p], &word[p + 1]) {
            (Letter::X(a), Letter::X(b)) => vec![(one(), vec![Letter::X(*b), Letter::X(*a)])],
            (Letter::Y(a), Letter::Y(b)) => vec![(one(), vec![Letter::Y(*b), Letter::Y(*a)])],
            (Letter::G(a), Letter::G(b)) => vec![(one(), vec![Letter::G(a.mul(b))])],
            (Letter::G(w), Letter::X(j)) => (0..n)
                .filter(|&k| w.get(k, *j) != 0)
                .map(|k| {
                    (
                        ParamScalar::int(w.get(k, *j)),
                        vec![Letter::X(k), Letter::G(w.clone())],
                    )
                })
                .collect(),
            (Letter::Y(i), Letter::G(w)) => (0..n)
                .filter(|&k| w.get(*i, k) != 0)
                .map(|k| {
                    (
                        ParamScalar::int(w.get(*i, k)),
                        vec![Letter::G(w.clone()), Letter::Y(k)],
                    )
                })
                .collect(),
            (Letter::Y(i), Letter::X(j)) => {
                let mut out = vec![(one(), vec![Letter::X(*j), Letter::Y(*i)])];
                for (g, c) in self.commutators[*i][*j].terms() {
                    out.push((c.clone(), vec![Letter::G(g.clone())]));
                }
                out
            }
            _ => unreachable!("not a redex"),
        }
    }

    fn degree(word: &[Letter]) -> usize {
        word.iter().filter(|l| !matches!(l, Letter::G(_))).count()
    }

    /// Normal form of `Σ c · word`.
    pub fn normal_form_sum(&self, input: &[(ParamScalar, Word)]) -> Result<HcElement> {
        let n = self.rs.rank;
        let mut pending: BTreeMap<Word, ParamScalar> = BTreeMap::new();
        let push = |pending: &mut BTreeMap<Word, ParamScalar>, w: Word, c: ParamScalar| {
            if c.is_zero() {
                return;
            }
            match pending.entry(w) {
                Entry::Vacant(v) => {
                    v.insert(c);
                }
                Entry::Occupied(mut o) => {
                    let s = o.get() + &c;
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
            }
        };
        for (c, w) in input {
            let d = Self::degree(w);
            if d > self.degree_bound {
                return Err(Error::DegreeBudgetExceeded {
                    requested: d,
                    limit: self.degree_bound,
                });
            }
            push(&mut pending, w.clone(), c.clone());
        }
        let mut out = HcElement::zero(n);
        while let Some((word, c)) = pending.pop_first() {
            match self.find_redex(&word) {
                None => out.add_term(key_of(n, &word), c),
                Some(p) => {
                    let width = if matches!(&word[p], Letter::G(w) if w.is_identity()) {
                        1
                    } else {
                        2
                    };
                    for (k, repl) in self.contract(&word, p) {
                        let mut next = Vec::with_capacity(word.len() + 1);
                        next.extend_from_slice(&word[..p]);
                        next.extend(repl);
                        next.extend_from_slice(&word[p + width..]);
                        push(&mut pending, next, &c * &k);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn normal_form(&self, word: &[Letter]) -> Result<HcElement> {
        self.normal_form_sum(&[(ParamScalar::one(), word.to_vec())])
    }

    pub fn product(&self, a: &HcElement, b: &HcElement) -> Result<HcElement> {
        let wa = a.to_words();
        let wb = b.to_words();
        let mut all = Vec::with_capacity(wa.len() * wb.len());
        for (ca, xa) in &wa {
            for (cb, xb) in &wb {
                let mut w = xa.clone();
                w.extend(xb.iter().cloned());
                all.push((ca * cb, w));
            }
        }
        self.normal_form_sum(&all)
    }

    /// `ab - ba`.
    pub fn bracket(&self, a: &HcElement, b: &HcElement) -> Result<HcElement> {
        Ok(self.product(a, b)?.sub(&self.product(b, a)?))
    }
}

fn key_of(n: usize, word: &[Letter]) -> PbwKey {
    let mut x = vec![0u32; n];
    let mut y = vec![0u32; n];
    let mut w = GroupElement::identity(n);
    for l in word {
        match l {
            Letter::X(i) => x[*i] += 1,
            Letter::Y(i) => y[*i] += 1,
            Letter::G(g) => w = g.clone(),
        }
    }
    PbwKey { x, w, y }
}

/// Linear combination `Σ coeffs[i] · letter(i)` as a list of words.
pub fn linear_words(coeffs: &[Rational], letter: fn(usize) -> Letter) -> Vec<(ParamScalar, Word)> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != rational::zero())
        .map(|(i, c)| (ParamScalar::constant(c.clone()), vec![letter(i)]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_with_group, TypeLabel, WeylGroup, DEFAULT_GROUP_BUDGET};
    use proptest::prelude::{prop_assert_eq, ProptestConfig};

    fn setup(l: TypeLabel, n: usize) -> (RootSystemData, WeylGroup) {
        let (rs, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
        (rs, g.unwrap())
    }

    #[test]
    fn yx_matches_commutator() {
        let (rs, _) = setup(TypeLabel::B, 2);
        let rw = Rewriter::new(&rs, 4);
        for i in 0..2 {
            for j in 0..2 {
                let nf = rw.normal_form(&[Letter::Y(i), Letter::X(j)]).unwrap();
                let xy = rw.normal_form(&[Letter::X(j), Letter::Y(i)]).unwrap();
                let comm = HcElement::from_group_algebra(2, &commutator_yx(&rs, i, j));
                assert_eq!(nf, xy.add(&comm));
            }
        }
    }

    #[test]
    fn group_conjugates_x() {
        let (rs, g) = setup(TypeLabel::A, 2);
        let rw = Rewriter::new(&rs, 4);
        let w = g.elements()[3].clone();
        let nf = rw
            .normal_form(&[Letter::G(w.clone()), Letter::X(0)])
            .unwrap();
        let mut want = HcElement::zero(2);
        for k in 0..2 {
            let mut x = vec![0, 0];
            x[k] = 1;
            want.add_term(
                PbwKey {
                    x,
                    w: w.clone(),
                    y: vec![0, 0],
                },
                ParamScalar::int(w.get(k, 0)),
            );
        }
        assert_eq!(nf, want);
    }

    #[test]
    fn x_commute_and_idempotent() {
        let (rs, _) = setup(TypeLabel::A, 2);
        let rw = Rewriter::new(&rs, 4);
        let a = rw.normal_form(&[Letter::X(0), Letter::X(1)]).unwrap();
        let b = rw.normal_form(&[Letter::X(1), Letter::X(0)]).unwrap();
        assert_eq!(a, b);
        let again = rw.normal_form_sum(&a.to_words()).unwrap();
        assert_eq!(again, a);
    }

    #[test]
    fn degree_bound_enforced() {
        let (rs, _) = setup(TypeLabel::A, 1);
        let rw = Rewriter::new(&rs, 4);
        let w = vec![Letter::Y(0); 5];
        assert!(matches!(
            rw.normal_form(&w),
            Err(Error::DegreeBudgetExceeded {
                requested: 5,
                limit: 4
            })
        ));
    }

    #[test]
    fn group_inverse_relation() {
        // y w = w (w⁻¹·y): check w y w⁻¹ normal form is a linear form in y
        let (rs, g) = setup(TypeLabel::G, 2);
        let rw = Rewriter::new(&rs, 4);
        for w in g.elements() {
            let winv = rs.inverse(w);
            let nf = rw
                .normal_form(&[Letter::G(w.clone()), Letter::Y(0), Letter::G(winv)])
                .unwrap();
            let d = rs.coweight_action(w);
            let mut want = HcElement::zero(2);
            for k in 0..2 {
                let mut y = vec![0, 0];
                y[k] = 1;
                want.add_term(
                    PbwKey {
                        x: vec![0, 0],
                        w: GroupElement::identity(2),
                        y,
                    },
                    ParamScalar::int(d.get(k, 0)),
                );
            }
            assert_eq!(nf, want);
        }
    }

    fn letter_strategy(
        n: usize,
        order: usize,
    ) -> impl proptest::strategy::Strategy<Value = (u8, usize)> {
        (0u8..3, 0..n.max(order))
    }

    fn confluence(l: TypeLabel, rank: usize) {
        let (rs, g) = setup(l, rank);
        let left = Rewriter::new(&rs, 4);
        let right = Rewriter::new(&rs, 4).with_strategy(super::Strategy::Rightmost);
        let order = g.order();
        let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig::with_cases(100));
        runner
            .run(
                &proptest::collection::vec(letter_strategy(rank, order), 0..7),
                |spec| {
                    let mut word = Vec::new();
                    let mut deg = 0;
                    for (kind, idx) in spec {
                        match kind {
                            0 if deg < 4 => {
                                word.push(Letter::X(idx % rank));
                                deg += 1;
                            }
                            1 if deg < 4 => {
                                word.push(Letter::Y(idx % rank));
                                deg += 1;
                            }
                            _ => word.push(Letter::G(g.elements()[idx % order].clone())),
                        }
                    }
                    let a = left.normal_form(&word).unwrap();
                    let b = right.normal_form(&word).unwrap();
                    prop_assert_eq!(a, b);
                    Ok(())
                },
            )
            .unwrap();
    }

    #[test]
    fn confluent_a2() {
        confluence(TypeLabel::A, 2);
    }

    #[test]
    fn confluent_b2() {
        confluence(TypeLabel::B, 2);
    }

    #[test]
    fn confluent_g2() {
        confluence(TypeLabel::G, 2);
    }
}
