//! Dunkl operators realizing the `y`-action on `M_c(triv) = C[h]`.
//!
//! `T_y f = ∂_y f - Σ_{α∈R_+} c_α ⟨y, α⟩ (f - s_α f) / α`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::GroupAlgebraElement;
use crate::algebra::{rational, Monomial, MultiPoly, Rational};
use crate::character::Params;
use crate::error::{Error, Result};
use crate::root_system::{GroupElement, RootSystemData};

pub struct DunklContext<'a> {
    rs: &'a RootSystemData,
    c: Params,
    forms: Vec<MultiPoly>,
    substitutions: Vec<Vec<MultiPoly>>,
    weights: Vec<Rational>,
    cache: RefCell<BTreeMap<(usize, Monomial), MultiPoly>>,
}

/// Images of the variables `x_j = α_j` under `w`.
fn substitution(w: &GroupElement) -> Vec<MultiPoly> {
    let n = w.dim();
    (0..n)
        .map(|j| {
            let col: Vec<Rational> = (0..n).map(|k| rational::int(w.get(k, j))).collect();
            MultiPoly::linear(&col)
        })
        .collect()
}

/// `w · f` for `f ∈ C[h] = S(h*)`.
pub fn act(w: &GroupElement, f: &MultiPoly) -> MultiPoly {
    f.substitute(&substitution(w))
}

impl<'a> DunklContext<'a> {
    pub fn new(rs: &'a RootSystemData, c: Params) -> Self {
        let forms = rs
            .positive_roots()
            .iter()
            .map(|r| MultiPoly::linear(&r.iter().map(|&k| rational::int(k)).collect::<Vec<_>>()))
            .collect();
        let substitutions = rs.reflections().iter().map(substitution).collect();
        let weights = (0..rs.num_positive())
            .map(|a| c.get(rs.length_class(a)).clone())
            .collect();
        Self {
            rs,
            c,
            forms,
            substitutions,
            weights,
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystemData {
        self.rs
    }

    pub fn params(&self) -> &Params {
        &self.c
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    /// `s_α · f` for the `a`-th positive root.
    pub fn reflect(&self, a: usize, f: &MultiPoly) -> MultiPoly {
        f.substitute(&self.substitutions[a])
    }

    fn apply_monomial(&self, i: usize, m: &Monomial) -> Result<MultiPoly> {
        if let Some(v) = self.cache.borrow().get(&(i, m.clone())) {
            return Ok(v.clone());
        }
        let f = MultiPoly::monomial(m.clone(), rational::one());
        let mut out = f.derivative(i);
        for (a, root) in self.rs.positive_roots().iter().enumerate() {
            let k = root[i];
            if k == 0 || self.weights[a] == rational::zero() {
                continue;
            }
            let diff = &f - &self.reflect(a, &f);
            if diff.is_zero() {
                continue;
            }
            let q = diff
                .div_linear_exact(&self.forms[a])
                .ok_or(Error::ExactDivisionFailed("f - s_a f by a"))?;
            out.add_scaled(&q, &-(&self.weights[a] * rational::int(k)));
        }
        self.cache.borrow_mut().insert((i, m.clone()), out.clone());
        Ok(out)
    }

    /// `T_{y_i} f` with `y_i = ω_i∨`.
    pub fn apply(&self, i: usize, f: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.rank());
        for (m, c) in f.terms() {
            out.add_scaled(&self.apply_monomial(i, m)?, c);
        }
        Ok(out)
    }

    /// `T_y f` for `y` in coweight coordinates.
    pub fn apply_vector(&self, y: &[Rational], f: &MultiPoly) -> Result<MultiPoly> {
        let mut out = MultiPoly::zero(self.rank());
        for (i, yi) in y.iter().enumerate() {
            if *yi != rational::zero() {
                out.add_scaled(&self.apply(i, f)?, yi);
            }
        }
        Ok(out)
    }

    /// Action of a group-algebra element, with parameters substituted.
    pub fn act_group_algebra(&self, g: &GroupAlgebraElement, f: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(self.rank());
        for (w, k) in g.eval(&self.c) {
            out.add_scaled(&act(&w, f), &k);
        }
        out
    }

    /// `T_i T_j f = T_j T_i f`.
    pub fn commute_on(&self, i: usize, j: usize, f: &MultiPoly) -> Result<bool> {
        Ok(self.apply(i, &self.apply(j, f)?)? == self.apply(j, &self.apply(i, f)?)?)
    }

    /// `T_i (x_j f) - x_j T_i f` equals `[y_i, x_j]` acting on `f`.
    pub fn relation_holds_on(&self, i: usize, j: usize, f: &MultiPoly) -> Result<bool> {
        let lhs = &self.apply(i, &f.mul_var(j))? - &self.apply(i, f)?.mul_var(j);
        let rhs = self.act_group_algebra(&super::commutator_yx(self.rs, i, j), f);
        Ok(lhs == rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, TypeLabel};
    use proptest::prelude::*;

    fn poly_strategy(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, n), -4i64..5), 1..5).prop_map(
            move |ts| {
                let mut f = MultiPoly::zero(n);
                for (m, c) in ts {
                    f.add_term(m, rational::int(c));
                }
                f
            },
        )
    }

    #[test]
    fn constants_are_killed() {
        let rs = build_root_system(TypeLabel::B, 2).unwrap();
        let ctx = DunklContext::new(&rs, Params::new(rational::rat(1, 3), rational::rat(2, 5)));
        assert!(ctx.apply(0, &MultiPoly::one(2)).unwrap().is_zero());
    }

    #[test]
    fn a1_on_x_squared() {
        // s x = -x, so T x^k = (k - c(1 - (-1)^k)) x^(k-1); at c = 3/2 the
        // cube is singular.
        let rs = build_root_system(TypeLabel::A, 1).unwrap();
        let ctx = DunklContext::new(&rs, Params::uniform(rational::rat(3, 2)));
        let x = MultiPoly::var(1, 0);
        assert_eq!(
            ctx.apply(0, &x).unwrap(),
            MultiPoly::constant(1, rational::int(-2))
        );
        assert_eq!(ctx.apply(0, &x.pow(2)).unwrap(), x.scale(&rational::int(2)));
        assert_eq!(ctx.apply(0, &x.pow(3)).unwrap(), MultiPoly::zero(1));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn dunkl_operators_commute(f in poly_strategy(2), p in 1i64..7, q in 1i64..7) {
            for l in [TypeLabel::A, TypeLabel::B, TypeLabel::G] {
                let rs = build_root_system(l, 2).unwrap();
                let ctx = DunklContext::new(&rs, Params::new(rational::rat(p, 3), rational::rat(q, 5)));
                prop_assert!(ctx.commute_on(0, 1, &f).unwrap());
            }
        }

        #[test]
        fn dunkl_matches_defining_relation(f in poly_strategy(2), p in -6i64..7) {
            for l in [TypeLabel::A, TypeLabel::B, TypeLabel::G] {
                let rs = build_root_system(l, 2).unwrap();
                let ctx = DunklContext::new(&rs, Params::new(rational::rat(p, 4), rational::rat(p + 1, 7)));
                for i in 0..2 {
                    for j in 0..2 {
                        prop_assert!(ctx.relation_holds_on(i, j, &f).unwrap());
                    }
                }
            }
        }
    }
}
