//! The quotient `C[x_1..x_n] / (x_1^q, …, x_n^q)` for `W(B_n)` (`q = 2n+1`)
//! or `W(D_n)` (`q = 2n-1`), and its identification with the permutation
//! module of `W` on `S = (Z/q)^n ≅ Q/qQ`.
//!
//! Group elements here are signed permutation matrices in the orthonormal
//! coordinates `x_i`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{rational, LaurentPoly, RationalFunction, RowSpace, SparseVec};
use crate::character::{graded_char_l, perm_char_q_mod};
use crate::error::{Error, Result};
use crate::report::Check;
use crate::root_system::{build_root_system, GroupElement, RootSystemData, TypeLabel, WeylGroup};

/// Largest quotient dimension `q^n` accepted.
pub const KOSZUL_BUDGET: u128 = 1_000_000;

/// `w · x_j = sign_j x_{π(j)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPermutation {
    pub target: Vec<usize>,
    pub sign: Vec<i64>,
}

impl SignedPermutation {
    pub fn from_matrix(w: &GroupElement) -> Result<Self> {
        let n = w.dim();
        let mut target = vec![0; n];
        let mut sign = vec![0; n];
        for j in 0..n {
            let nz: Vec<usize> = (0..n).filter(|&i| w.get(i, j) != 0).collect();
            match nz.as_slice() {
                [i] if w.get(*i, j).abs() == 1 => {
                    target[j] = *i;
                    sign[j] = w.get(*i, j);
                }
                _ => {
                    return Err(Error::InvalidArgument(
                        "not a signed permutation matrix".into(),
                    ))
                }
            }
        }
        Ok(Self { target, sign })
    }

    /// Image of `x^m` as `(sign, exponents)`.
    pub fn act_monomial(&self, m: &[u32]) -> (i64, Vec<u32>) {
        let mut out = vec![0; m.len()];
        let mut s = 1;
        for (j, &e) in m.iter().enumerate() {
            out[self.target[j]] = e;
            if e % 2 == 1 {
                s *= self.sign[j];
            }
        }
        (s, out)
    }

    /// Image of a point of `(Z/q)^n`.
    pub fn act_point(&self, p: &[u32], q: u32) -> Vec<u32> {
        let mut out = vec![0; p.len()];
        for (j, &v) in p.iter().enumerate() {
            out[self.target[j]] = if self.sign[j] == 1 || v == 0 {
                v
            } else {
                q - v
            };
        }
        out
    }
}

fn signed_matrix(n: usize, entries: &[(usize, usize, i64)]) -> GroupElement {
    let mut rows = vec![vec![0i64; n]; n];
    let moved: Vec<usize> = entries.iter().map(|e| e.1).collect();
    for i in 0..n {
        if !moved.contains(&i) {
            rows[i][i] = 1;
        }
    }
    for &(r, c, v) in entries {
        rows[r][c] = v;
    }
    GroupElement::from_rows(&rows)
}

/// Generators of `W(B_n)` or `W(D_n)` acting on the `x_i`.
pub fn orthonormal_generators(label: TypeLabel, n: usize) -> Result<Vec<GroupElement>> {
    if n < 2 || !matches!(label, TypeLabel::B | TypeLabel::D) || (label == TypeLabel::D && n < 4) {
        return Err(Error::InvalidArgument(format!(
            "no signed-permutation model for {label}{n}"
        )));
    }
    let mut gens: Vec<GroupElement> = (0..n - 1)
        .map(|i| signed_matrix(n, &[(i, i + 1, 1), (i + 1, i, 1)]))
        .collect();
    gens.push(match label {
        TypeLabel::B => signed_matrix(n, &[(n - 1, n - 1, -1)]),
        _ => signed_matrix(n, &[(n - 2, n - 1, -1), (n - 1, n - 2, -1)]),
    });
    Ok(gens)
}

pub struct KoszulModel {
    pub label: TypeLabel,
    pub n: usize,
    pub modulus: u32,
    pub rs: RootSystemData,
    pub group: WeylGroup,
    perms: Vec<SignedPermutation>,
}

impl KoszulModel {
    pub fn dim(&self) -> usize {
        (self.modulus as usize).pow(self.n as u32)
    }

    pub fn exponents(&self, index: usize) -> Vec<u32> {
        let q = self.modulus as usize;
        let mut rest = index;
        (0..self.n)
            .map(|_| {
                let e = (rest % q) as u32;
                rest /= q;
                e
            })
            .collect()
    }

    pub fn index(&self, m: &[u32]) -> usize {
        m.iter()
            .rev()
            .fold(0, |acc, &e| acc * self.modulus as usize + e as usize)
    }

    pub fn permutation(&self, w: usize) -> &SignedPermutation {
        &self.perms[w]
    }

    /// Whether `x^m` survives in the quotient.
    pub fn in_quotient(&self, m: &[u32]) -> bool {
        m.iter().all(|&e| e < self.modulus)
    }

    /// Trace of the `w`-th element on the quotient, optionally twisted by
    /// the sign character.
    pub fn trace(&self, w: usize, twisted: bool) -> i64 {
        let p = &self.perms[w];
        let mut t = 0;
        for i in 0..self.dim() {
            let (s, m) = p.act_monomial(&self.exponents(i));
            if self.index(&m) == i {
                t += s;
            }
        }
        if twisted {
            t * self.group.elements()[w].determinant()
        } else {
            t
        }
    }

    /// `Σ_m tr(w on x^m) t^{|m|}` over the quotient basis.
    pub fn graded_character(&self, w: usize) -> LaurentPoly {
        let p = &self.perms[w];
        let mut out = LaurentPoly::zero();
        for i in 0..self.dim() {
            let e = self.exponents(i);
            let (s, m) = p.act_monomial(&e);
            if self.index(&m) == i {
                out.add_term(e.iter().sum::<u32>() as i64, rational::int(s));
            }
        }
        out
    }

    /// `Σ_k (-1)^k tr(w | ∧^k V) t^{qk} / det(1 - t w) = det(1 - t^q w) / det(1 - t w)`.
    pub fn koszul_character(&self, w: usize) -> Result<RationalFunction> {
        let g = &self.group.elements()[w];
        let cp = g.char_poly();
        RationalFunction::new(cp.substitute_power(self.modulus as i64), cp)
    }

    /// Trace of `w` on `V = span{x_i^q}`.
    pub fn v_trace(&self, w: usize) -> i64 {
        let p = &self.perms[w];
        (0..self.n)
            .map(|i| {
                let mut m = vec![0; self.n];
                m[i] = self.modulus;
                let (s, img) = p.act_monomial(&m);
                if img == m {
                    s
                } else {
                    0
                }
            })
            .sum()
    }

    pub fn fixed_points(&self, w: usize) -> u128 {
        let p = &self.perms[w];
        (0..self.dim())
            .filter(|&i| {
                let pt = self.exponents(i);
                p.act_point(&pt, self.modulus) == pt
            })
            .count() as u128
    }
}

/// Builds the quotient by `(x_1^q, …, x_n^q)` with `q = h + 1`.
pub fn build_koszul_model(label: TypeLabel, n: usize) -> Result<KoszulModel> {
    let gens = orthonormal_generators(label, n)?;
    let rs = build_root_system(label, n)?;
    let modulus = rs.coxeter_number + 1;
    let size = (modulus as u128).pow(n as u32);
    if size > KOSZUL_BUDGET {
        return Err(Error::BudgetExceeded {
            budget: "quotient dimension",
            requested: size,
            limit: KOSZUL_BUDGET,
        });
    }
    let group = WeylGroup::generated_by(n, gens, crate::root_system::DEFAULT_GROUP_BUDGET)?;
    if group.order() as u128 != rs.group_order {
        return Err(Error::Inconsistent(format!(
            "signed permutations generate {} elements, expected {}",
            group.order(),
            rs.group_order
        )));
    }
    let perms = group
        .elements()
        .iter()
        .map(SignedPermutation::from_matrix)
        .collect::<Result<_>>()?;
    Ok(KoszulModel {
        label,
        n,
        modulus,
        rs,
        group,
        perms,
    })
}

/// How the monomial basis is sent into `C S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThetaReading {
    /// `x^m ↦ ε_{1,m_1} ⊗ ⋯ ⊗ ε_{n,m_n}`.
    Tensor,
    /// `x^m ↦ Σ_i ε_{i,m_i}` with `[k x_i]` the point `k` on axis `i`.
    LiteralSum,
}

/// `ε_{k}` on one axis: `ε_0 = [0]`, `ε_{2m} = [m] + [q-m]`,
/// `ε_{2m-1} = [m] - [q-m]` for `1 ≤ m ≤ (q-1)/2`.
pub fn axis_vector(k: u32, q: u32) -> Vec<(u32, i64)> {
    if k == 0 {
        return vec![(0, 1)];
    }
    let m = k.div_ceil(2);
    let sign = if k % 2 == 0 { 1 } else { -1 };
    vec![(m, 1), (q - m, sign)]
}

pub struct ThetaMap<'a> {
    model: &'a KoszulModel,
    pub reading: ThetaReading,
}

impl<'a> ThetaMap<'a> {
    pub fn new(model: &'a KoszulModel, reading: ThetaReading) -> Self {
        Self { model, reading }
    }

    fn point_index(&self, p: &[u32]) -> usize {
        self.model.index(p)
    }

    /// Image of the `i`-th basis monomial in the basis `[s]` of `C S`.
    pub fn image(&self, index: usize) -> SparseVec {
        let q = self.model.modulus;
        let m = self.model.exponents(index);
        let mut out: BTreeMap<usize, crate::algebra::Rational> = BTreeMap::new();
        match self.reading {
            ThetaReading::Tensor => {
                let mut partial: Vec<(Vec<u32>, i64)> = vec![(Vec::new(), 1)];
                for &k in &m {
                    let axis = axis_vector(k, q);
                    partial = partial
                        .iter()
                        .flat_map(|(p, c)| {
                            axis.iter().map(move |(v, s)| {
                                let mut p = p.clone();
                                p.push(*v);
                                (p, c * s)
                            })
                        })
                        .collect();
                }
                for (p, c) in partial {
                    out.insert(self.point_index(&p), rational::int(c));
                }
            }
            ThetaReading::LiteralSum => {
                for (i, &k) in m.iter().enumerate() {
                    for (v, s) in axis_vector(k, q) {
                        let mut p = vec![0; self.model.n];
                        p[i] = v;
                        let slot = out
                            .entry(self.point_index(&p))
                            .or_insert_with(rational::zero);
                        *slot += rational::int(s);
                    }
                }
                out.retain(|_, v| *v != rational::zero());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new();
        for i in 0..self.model.dim() {
            space.insert(self.image(i));
        }
        space.rank()
    }

    pub fn is_bijective(&self) -> bool {
        self.rank() == self.model.dim()
    }

    fn permute_points(&self, w: usize, v: &SparseVec) -> SparseVec {
        let p = self.model.permutation(w);
        v.iter()
            .map(|(i, c)| {
                let pt = self.model.exponents(*i);
                (
                    self.point_index(&p.act_point(&pt, self.model.modulus)),
                    c.clone(),
                )
            })
            .collect()
    }

    /// `θ(g · x^m) = g · θ(x^m)` for every generator `g` and monomial,
    /// with the quotient action optionally twisted by the sign character.
    pub fn check_equivariance(&self, twisted: bool) -> Result<()> {
        let model = self.model;
        for (gi, g) in model.group.generators().iter().enumerate() {
            let w = model
                .group
                .position(g)
                .expect("generator lies in the group");
            let p = model.permutation(w);
            let twist = if twisted { g.determinant() } else { 1 };
            for i in 0..model.dim() {
                let (s, m) = p.act_monomial(&model.exponents(i));
                let k = rational::int(s * twist);
                let lhs: SparseVec = self
                    .image(model.index(&m))
                    .into_iter()
                    .map(|(j, c)| (j, c * &k))
                    .collect();
                let rhs = self.permute_points(w, &self.image(i));
                if lhs != rhs {
                    return Err(Error::EquivarianceFailed {
                        generator: gi,
                        basis_index: i,
                    });
                }
            }
        }
        Ok(())
    }
}

/// For every `w`: trace on the quotient, fixed points on `S` and
/// `|Q/qQ|^w` agree. The sign-twisted trace is reported alongside.
pub fn fixed_point_cross_check(model: &KoszulModel) -> Vec<Check> {
    let q = model.modulus as u64;
    let mut untwisted_ok = true;
    let mut twisted_ok = true;
    let mut first_bad = None;
    for (w, g) in model.group.elements().iter().enumerate() {
        let tr = model.trace(w, false);
        let fixed = model.fixed_points(w);
        let perm = perm_char_q_mod(g, q);
        let ok = tr >= 0 && tr as u128 == fixed && fixed == perm;
        if !ok && first_bad.is_none() {
            first_bad = Some((w, tr, fixed, perm));
        }
        untwisted_ok &= ok;
        twisted_ok &= model.trace(w, true) as i128 == fixed as i128;
    }
    let order = model.group.order();
    vec![
        Check::holds(
            "fixed points",
            "trace on the quotient = #fixed points on S = |Q/qQ|^w for every w",
            untwisted_ok,
            format!("all {order} elements"),
            match first_bad {
                None => format!("all {order} elements"),
                Some((w, tr, f, p)) => format!("element {w}: trace {tr}, fixed {f}, lattice {p}"),
            },
        ),
        Check::holds(
            "sign-twisted trace",
            "trace on the quotient tensored with the sign character, against fixed points (informational)",
            true,
            "recorded",
            if twisted_ok { "agrees" } else { "differs" },
        ),
    ]
}

/// Koszul alternating sum, the comparison with `t^N · ch L_c(triv)` and
/// `V ≅ h`, for every group element.
pub fn koszul_checks(model: &KoszulModel) -> Result<Vec<Check>> {
    let big_n = model.rs.num_positive() as i64;
    let mut koszul = true;
    let mut l_char = true;
    let mut v_ok = true;
    for (w, g) in model.group.elements().iter().enumerate() {
        let direct = RationalFunction::from_poly(model.graded_character(w));
        koszul &= direct == model.koszul_character(w)?;
        l_char &= direct == graded_char_l(&model.rs, g).shift(big_n);
        v_ok &= model.v_trace(w) == g.trace();
    }
    let dim_ok = model.dim() as u128 == (model.modulus as u128).pow(model.n as u32);
    Ok(vec![
        Check::equal(
            "quotient dimension",
            "dim C[h]/I = q^n",
            &(model.modulus as u128).pow(model.n as u32),
            &if dim_ok { model.dim() as u128 } else { 0 },
        ),
        Check::holds(
            "Koszul character",
            "graded character of C[h]/I = sum_k (-1)^k t^(qk) ch(wedge^k V) / det(1 - t w)",
            koszul,
            "all elements",
            if koszul { "all elements" } else { "mismatch" },
        ),
        Check::holds(
            "L character",
            "graded character of C[h]/I = t^N times the graded character of L_c(triv)",
            l_char,
            "all elements",
            if l_char { "all elements" } else { "mismatch" },
        ),
        Check::holds(
            "V is the reflection representation",
            "trace on span{x_i^q} equals the trace on h",
            v_ok,
            "all elements",
            if v_ok { "all elements" } else { "mismatch" },
        ),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimensions() {
        assert_eq!(build_koszul_model(TypeLabel::B, 2).unwrap().dim(), 25);
        assert_eq!(build_koszul_model(TypeLabel::B, 3).unwrap().dim(), 343);
        assert!(build_koszul_model(TypeLabel::A, 3).is_err());
    }

    #[test]
    fn axis_vectors() {
        assert_eq!(axis_vector(0, 5), vec![(0, 1)]);
        assert_eq!(axis_vector(2, 5), vec![(1, 1), (4, 1)]);
        assert_eq!(axis_vector(1, 5), vec![(1, 1), (4, -1)]);
        assert_eq!(axis_vector(4, 5), vec![(2, 1), (3, 1)]);
        assert_eq!(axis_vector(3, 5), vec![(2, 1), (3, -1)]);
    }

    #[test]
    fn examples_n2() {
        let m = build_koszul_model(TypeLabel::B, 2).unwrap();
        let minus = m
            .group
            .position(&GroupElement::from_rows(&[vec![-1, 0], vec![0, -1]]))
            .unwrap();
        let swap = m
            .group
            .position(&GroupElement::from_rows(&[vec![0, 1], vec![1, 0]]))
            .unwrap();
        assert_eq!(m.fixed_points(0), 25);
        assert_eq!(m.fixed_points(minus), 1);
        assert_eq!(m.fixed_points(swap), 5);
        assert_eq!(m.trace(minus, false), 1);
        assert_eq!(m.trace(swap, false), 5);
        let theta = ThetaMap::new(&m, ThetaReading::Tensor);
        assert_eq!(
            theta.image(0),
            [(0usize, rational::one())].into_iter().collect()
        );
    }

    #[test]
    fn tensor_reading_is_an_equivariant_bijection() {
        for n in [2, 3] {
            let m = build_koszul_model(TypeLabel::B, n).unwrap();
            let theta = ThetaMap::new(&m, ThetaReading::Tensor);
            assert!(theta.is_bijective());
            theta.check_equivariance(false).unwrap();
            assert!(matches!(
                theta.check_equivariance(true),
                Err(Error::EquivarianceFailed { .. })
            ));
            assert!(crate::report::all_pass(&fixed_point_cross_check(&m)));
            assert!(crate::report::all_pass(&koszul_checks(&m).unwrap()));
        }
    }

    #[test]
    fn literal_sum_is_not_bijective() {
        let m = build_koszul_model(TypeLabel::B, 2).unwrap();
        let theta = ThetaMap::new(&m, ThetaReading::LiteralSum);
        assert!(theta.rank() < 25);
    }

    #[test]
    fn d4_model() {
        let m = build_koszul_model(TypeLabel::D, 4).unwrap();
        assert_eq!(m.modulus, 7);
        assert_eq!(m.dim(), 2401);
        assert!(crate::report::all_pass(&fixed_point_cross_check(&m)));
        let theta = ThetaMap::new(&m, ThetaReading::Tensor);
        theta.check_equivariance(false).unwrap();
    }
}
