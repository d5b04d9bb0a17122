//! The rational Cherednik algebra `H_c`: defining commutators, PBW normal
//! form, the `sl_2`-triple, Dunkl operators on `M_c(triv) = C[h]`, and the
//! contravariant form whose radical cuts out `L_c(triv)`.
//!
//! Bases: `x_j = α_j` spans `h*`, `y_i = ω_i∨` spans `h`, so
//! `⟨y_i, x_j⟩ = δ_ij`.

pub mod contravariant;
pub mod dunkl;
pub mod group_algebra;
pub mod pbw;
pub mod sl2;
pub mod type_b_display;

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

pub use contravariant::{
    coinvariant_image_check, contravariant_ranks, CoinvariantImageReport, ContravariantForm,
};
pub use dunkl::DunklContext;
pub use group_algebra::GroupAlgebraElement;
pub use pbw::{HcElement, Letter, PbwKey, Rewriter, Strategy, Word, DEFAULT_PBW_DEGREE};
pub use sl2::{h_grading_check, sl2_closure_check, Sl2Report};
pub use type_b_display::{type_b_commutator_display, TypeBDisplay};

use crate::algebra::{rational, Monomial, Rational};
use crate::character::{sum_c, ParamScalar, Params};
use crate::root_system::RootSystemData;

/// `[y, x] = ⟨y, x⟩ - Σ_{α∈R_+} c_α ⟨y, α⟩ ⟨α∨, x⟩ s_α` for `y` in
/// coweight coordinates and `x` in root coordinates.
pub fn commutator_general(
    rs: &RootSystemData,
    y: &[Rational],
    x: &[Rational],
) -> GroupAlgebraElement {
    let n = rs.rank;
    let pairing: Rational = (0..n).map(|a| &y[a] * &x[a]).sum();
    let mut e = GroupAlgebraElement::identity(n).scale(&ParamScalar::constant(pairing));
    for (a, root) in rs.positive_roots().iter().enumerate() {
        let ya: Rational = (0..n).map(|i| &y[i] * rational::int(root[i])).sum();
        if ya == rational::zero() {
            continue;
        }
        let ax = rs.coroot_pairing(a, x);
        let k = -(ya * ax);
        if k != rational::zero() {
            e.add_term(
                rs.reflection(a).clone(),
                ParamScalar::param(rs.length_class(a)).scale(&k),
            );
        }
    }
    e
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    (0..n)
        .map(|k| {
            if k == i {
                rational::one()
            } else {
                rational::zero()
            }
        })
        .collect()
}

/// `[y_i, x_j]` in the group algebra.
pub fn commutator_yx(rs: &RootSystemData, i: usize, j: usize) -> GroupAlgebraElement {
    commutator_general(rs, &unit(rs.rank, i), &unit(rs.rank, j))
}

/// The same commutator written as `½ Σ_{α∈R}` over all roots.
pub fn commutator_yx_all_roots(rs: &RootSystemData, i: usize, j: usize) -> GroupAlgebraElement {
    let n = rs.rank;
    let xj = unit(n, j);
    let mut e = if i == j {
        GroupAlgebraElement::identity(n)
    } else {
        GroupAlgebraElement::zero()
    };
    let half = rational::rat(1, 2);
    for (a, root) in rs.positive_roots().iter().enumerate() {
        for sign in [1i64, -1] {
            // ⟨y_i, ±α⟩ ⟨(±α)∨, x_j⟩ with s_{-α} = s_α
            let ya = rational::int(sign * root[i]);
            let ax = rs.coroot_pairing(a, &xj) * rational::int(sign);
            let k = -(&half * ya * ax);
            e.add_term(
                rs.reflection(a).clone(),
                ParamScalar::param(rs.length_class(a)).scale(&k),
            );
        }
    }
    e
}

/// Whether `w ↦ 1`, `x, y ↦ 0` defines a module at these parameters, i.e.
/// every `[y_i, x_j]` has augmentation zero.
pub fn trivial_module_check(rs: &RootSystemData, c: &Params) -> bool {
    trivial_module_defect(rs, c)
        .iter()
        .flatten()
        .all(|v| *v == rational::zero())
}

/// Augmentations of `[y_i, x_j]` at `c`.
pub fn trivial_module_defect(rs: &RootSystemData, c: &Params) -> Vec<Vec<Rational>> {
    let n = rs.rank;
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| commutator_yx(rs, i, j).augmentation().eval(c))
                .collect()
        })
        .collect()
}

/// `Σ_{α∈R_+} ⟨y_i, α⟩ ⟨α∨, x_j⟩`, which equals `h δ_ij`.
pub fn coroot_pairing_sum(rs: &RootSystemData) -> Vec<Vec<i64>> {
    let n = rs.rank;
    let mut m = vec![vec![0i64; n]; n];
    for (a, root) in rs.positive_roots().iter().enumerate() {
        for j in 0..n {
            let e: Vec<i64> = (0..n).map(|k| i64::from(k == j)).collect();
            let p = rs.coroot_pairing_int(a, &e);
            for i in 0..n {
                m[i][j] += root[i] * p;
            }
        }
    }
    m
}

/// `Σ_{α∈R_+} c_α s_α` applied to the constant `1`: just `Σ c_α`.
pub fn sum_c_value(rs: &RootSystemData, c: &Params) -> Rational {
    sum_c(rs).eval(c)
}

/// Monomials of `x`-degree exactly `d` in `n` variables.
pub(crate) fn monomials(n: usize, d: u32) -> Vec<Monomial> {
    crate::algebra::monomials_of_degree(n, d)
}

/// Stable ordering helper shared by the submodules.
pub(crate) fn index_of(list: &[Monomial]) -> BTreeMap<Monomial, usize> {
    list.iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect()
}
