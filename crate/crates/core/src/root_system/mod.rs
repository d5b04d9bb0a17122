//! Root systems of the Weyl types, their Weyl groups, and the numerical
//! invariants `N`, `h`, exponents and degrees.
//!
//! Vectors are written in the basis of simple roots and the bilinear form
//! is the integer Gram matrix from [`cartan::gram_matrix`], so every group
//! element is an integer matrix.

pub mod cartan;
pub mod group;
pub mod molien;

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

pub use cartan::TypeLabel;
pub use group::{GroupElement, WeylGroup, DEFAULT_GROUP_BUDGET, MAX_GROUP_BUDGET};
pub use molien::{degrees_from_series, molien_degrees, molien_series};

use crate::algebra::{rational, ExactMatrix, Rational};
use crate::error::{Error, Result};

/// Orbit of a root under `W`. Simply-laced types have only `Short`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LengthClass {
    Short,
    Long,
}

/// Where the degrees came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeSource {
    /// Read off the Molien series of the enumerated group.
    Molien,
    /// Dual partition of the root-height counts; used when the group is
    /// too large to enumerate under the budget.
    RootHeights,
}

#[derive(Clone, Debug)]
pub struct RootSystemData {
    pub label: TypeLabel,
    pub rank: usize,
    gram: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    gram_inverse: ExactMatrix,
    positive_roots: Vec<Vec<i64>>,
    root_index: BTreeMap<Vec<i64>, usize>,
    coroots: Vec<Vec<i64>>,
    norms: Vec<i64>,
    length_class: Vec<LengthClass>,
    simple_reflections: Vec<GroupElement>,
    reflections: Vec<GroupElement>,
    pub coxeter_number: u32,
    pub exponents: Vec<u32>,
    pub degrees: Vec<u32>,
    pub degree_source: DegreeSource,
    pub group_order: u128,
}

/// Builds the root data; the Weyl group is enumerated on the way when its
/// order fits `DEFAULT_GROUP_BUDGET`.
pub fn build_root_system(label: TypeLabel, rank: usize) -> Result<RootSystemData> {
    build_with_group(label, rank, DEFAULT_GROUP_BUDGET).map(|(rs, _)| rs)
}

/// Like [`build_root_system`], also returning the enumerated group when
/// its order is within `budget`.
pub fn build_with_group(
    label: TypeLabel,
    rank: usize,
    budget: u64,
) -> Result<(RootSystemData, Option<WeylGroup>)> {
    check_budget(budget)?;
    let gram = cartan::gram_matrix(label, rank)?;
    let cartan_m = cartan::cartan_from_gram(&gram);
    let n = rank;

    let simple_reflections: Vec<GroupElement> = (0..n)
        .map(|i| {
            let mut rows: Vec<Vec<i64>> = (0..n)
                .map(|r| (0..n).map(|c| i64::from(r == c)).collect())
                .collect();
            for j in 0..n {
                rows[i][j] -= cartan_m[i][j];
            }
            GroupElement::from_rows(&rows)
        })
        .collect();

    let positive_roots = close_roots(n, &simple_reflections);
    let root_index: BTreeMap<Vec<i64>, usize> = positive_roots
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();
    let form = |u: &[i64], v: &[i64]| -> i64 {
        (0..n)
            .map(|i| (0..n).map(|j| u[i] * gram[i][j] * v[j]).sum::<i64>())
            .sum()
    };
    let norms: Vec<i64> = positive_roots.iter().map(|r| form(r, r)).collect();
    let coroots: Vec<Vec<i64>> = positive_roots
        .iter()
        .zip(&norms)
        .map(|(r, &nm)| {
            (0..n)
                .map(|i| {
                    let v = r[i] * gram[i][i];
                    debug_assert_eq!(v % nm, 0);
                    v / nm
                })
                .collect()
        })
        .collect();
    let reflections: Vec<GroupElement> = positive_roots
        .iter()
        .zip(&norms)
        .map(|(r, &nm)| {
            // s_α(v) = v - 2(α,v)/(α,α) α
            let mut rows: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect();
            for j in 0..n {
                let e: Vec<i64> = (0..n).map(|k| i64::from(k == j)).collect();
                let pairing = 2 * form(r, &e);
                debug_assert_eq!(pairing % nm, 0);
                for i in 0..n {
                    rows[i][j] -= r[i] * pairing / nm;
                }
            }
            GroupElement::from_rows(&rows)
        })
        .collect();
    let length_class = classify_lengths(&positive_roots, &root_index, &simple_reflections, &norms)?;

    let gram_exact =
        ExactMatrix::from_ints(n, n, &gram.iter().flatten().copied().collect::<Vec<_>>());
    let gram_inverse = gram_exact.inverse()?;

    let mut coxeter = GroupElement::identity(n);
    for s in &simple_reflections {
        coxeter = coxeter.mul(s);
    }
    let h = coxeter.order() as u32;
    let big_n = positive_roots.len();
    if 2 * big_n != n * h as usize {
        return Err(Error::Inconsistent(format!(
            "2N = {} but nh = {}",
            2 * big_n,
            n * h as usize
        )));
    }

    let height_exponents = exponents_from_heights(&positive_roots, n)?;
    let predicted: u128 = height_exponents.iter().map(|&e| e as u128 + 1).product();
    let (degrees, source, group) = if predicted <= budget as u128 {
        let g = WeylGroup::generated_by(n, simple_reflections.clone(), budget)?;
        let degrees = molien_degrees(&g, h as usize)?;
        (degrees, DegreeSource::Molien, Some(g))
    } else {
        let d: Vec<u32> = height_exponents.iter().map(|e| e + 1).collect();
        (d, DegreeSource::RootHeights, None)
    };
    let exponents: Vec<u32> = degrees.iter().map(|d| d - 1).collect();
    if exponents != cartan::reference_exponents(label, n) {
        return Err(Error::Inconsistent(format!(
            "computed exponents {exponents:?} disagree with the reference table"
        )));
    }
    if exponents != height_exponents {
        return Err(Error::Inconsistent(
            "Molien degrees disagree with root-height exponents".into(),
        ));
    }
    let group_order: u128 = degrees.iter().map(|&d| d as u128).product();
    if let Some(g) = &group {
        if g.order() as u128 != group_order {
            return Err(Error::Inconsistent(format!(
                "enumerated {} elements but the degrees multiply to {group_order}",
                g.order()
            )));
        }
    }

    let rs = RootSystemData {
        label,
        rank: n,
        gram,
        cartan: cartan_m,
        gram_inverse,
        positive_roots,
        root_index,
        coroots,
        norms,
        length_class,
        simple_reflections,
        reflections,
        coxeter_number: h,
        exponents,
        degrees,
        degree_source: source,
        group_order,
    };
    Ok((rs, group))
}

fn check_budget(budget: u64) -> Result<()> {
    if budget == 0 || budget > MAX_GROUP_BUDGET {
        return Err(Error::InvalidArgument(format!(
            "group budget must lie in 1..={MAX_GROUP_BUDGET}, got {budget}"
        )));
    }
    Ok(())
}

/// Lists the Weyl group of `rs`.
pub fn enumerate_weyl_group(rs: &RootSystemData, budget: u64) -> Result<WeylGroup> {
    check_budget(budget)?;
    if rs.group_order > budget as u128 {
        return Err(Error::BudgetExceeded {
            budget: "group order",
            requested: rs.group_order,
            limit: budget as u128,
        });
    }
    WeylGroup::generated_by(rs.rank, rs.simple_reflections.clone(), budget)
}

/// The product `s_1 s_2 ⋯ s_n`.
pub fn coxeter_element(rs: &RootSystemData) -> GroupElement {
    rs.simple_reflections
        .iter()
        .fold(GroupElement::identity(rs.rank), |acc, s| acc.mul(s))
}

/// Positive roots by closure of the simple roots under simple reflections,
/// sorted by height then coordinates.
fn close_roots(n: usize, simple: &[GroupElement]) -> Vec<Vec<i64>> {
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect();
    while let Some(r) = queue.pop() {
        if !seen.insert(r.clone()) {
            continue;
        }
        for s in simple {
            let image = s.apply(&r);
            if !seen.contains(&image) {
                queue.push(image);
            }
        }
    }
    let mut pos: Vec<Vec<i64>> = seen
        .into_iter()
        .filter(|r| r.iter().all(|&c| c >= 0))
        .collect();
    pos.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    pos
}

fn positive_representative(r: &[i64]) -> Vec<i64> {
    if r.iter().any(|&c| c < 0) {
        r.iter().map(|c| -c).collect()
    } else {
        r.to_vec()
    }
}

fn classify_lengths(
    roots: &[Vec<i64>],
    index: &BTreeMap<Vec<i64>, usize>,
    simple: &[GroupElement],
    norms: &[i64],
) -> Result<Vec<LengthClass>> {
    let mut orbit = vec![usize::MAX; roots.len()];
    let mut orbit_norms = Vec::new();
    for start in 0..roots.len() {
        if orbit[start] != usize::MAX {
            continue;
        }
        let id = orbit_norms.len();
        orbit_norms.push(norms[start]);
        let mut stack = vec![start];
        orbit[start] = id;
        while let Some(i) = stack.pop() {
            for s in simple {
                let j = index[&positive_representative(&s.apply(&roots[i]))];
                if orbit[j] == usize::MAX {
                    orbit[j] = id;
                    stack.push(j);
                }
            }
        }
    }
    match orbit_norms.len() {
        1 => Ok(vec![LengthClass::Short; roots.len()]),
        2 => {
            let short = if orbit_norms[0] < orbit_norms[1] {
                0
            } else {
                1
            };
            Ok(orbit
                .iter()
                .map(|&o| {
                    if o == short {
                        LengthClass::Short
                    } else {
                        LengthClass::Long
                    }
                })
                .collect())
        }
        k => Err(Error::Inconsistent(format!(
            "{k} root orbits, expected at most 2"
        ))),
    }
}

/// Exponents as the partition dual to the root-height counts.
fn exponents_from_heights(roots: &[Vec<i64>], n: usize) -> Result<Vec<u32>> {
    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    for r in roots {
        *count.entry(r.iter().sum()).or_default() += 1;
    }
    let max = count.keys().next_back().copied().unwrap_or(0);
    let mut exps = Vec::new();
    for k in 1..=max {
        let here = count.get(&k).copied().unwrap_or(0);
        let next = count.get(&(k + 1)).copied().unwrap_or(0);
        if next > here {
            return Err(Error::Inconsistent(
                "root heights are not a partition".into(),
            ));
        }
        exps.extend(core::iter::repeat_n(k as u32, here - next));
    }
    if count.get(&1).copied().unwrap_or(0) != n || exps.len() != n {
        return Err(Error::Inconsistent(
            "height-one roots are not the simple roots".into(),
        ));
    }
    exps.sort_unstable();
    Ok(exps)
}

impl RootSystemData {
    /// Label such as `"B3"`.
    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    /// `N = |R_+|`.
    pub fn num_positive(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.positive_roots
    }

    /// Index of `±root` among the positive roots.
    pub fn root_position(&self, root: &[i64]) -> Option<usize> {
        self.root_index.get(&positive_representative(root)).copied()
    }

    /// Coroot of the `i`-th positive root in the simple-coroot basis.
    pub fn coroot(&self, i: usize) -> &[i64] {
        &self.coroots[i]
    }

    /// `(α, α)` for the `i`-th positive root.
    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    pub fn height(&self, i: usize) -> i64 {
        self.positive_roots[i].iter().sum()
    }

    pub fn length_class(&self, i: usize) -> LengthClass {
        self.length_class[i]
    }

    pub fn num_length_classes(&self) -> usize {
        if self.length_class.contains(&LengthClass::Long) {
            2
        } else {
            1
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        self.num_length_classes() == 1
    }

    /// Number of positive roots in each class.
    pub fn class_sizes(&self) -> BTreeMap<LengthClass, usize> {
        let mut m = BTreeMap::new();
        for &c in &self.length_class {
            *m.entry(c).or_default() += 1;
        }
        m
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    pub fn gram_exact(&self) -> ExactMatrix {
        ExactMatrix::from_ints(
            self.rank,
            self.rank,
            &self.gram.iter().flatten().copied().collect::<Vec<_>>(),
        )
    }

    pub fn gram_inverse(&self) -> &ExactMatrix {
        &self.gram_inverse
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_exact(&self) -> ExactMatrix {
        ExactMatrix::from_ints(
            self.rank,
            self.rank,
            &self.cartan.iter().flatten().copied().collect::<Vec<_>>(),
        )
    }

    /// `(u, v)` for integer vectors in the root basis.
    pub fn form(&self, u: &[i64], v: &[i64]) -> i64 {
        let n = self.rank;
        (0..n)
            .map(|i| (0..n).map(|j| u[i] * self.gram[i][j] * v[j]).sum::<i64>())
            .sum()
    }

    /// `⟨α∨, x⟩ = 2(α, x)/(α, α)` for the `i`-th positive root and a
    /// rational vector `x` in the root basis.
    pub fn coroot_pairing(&self, i: usize, x: &[Rational]) -> Rational {
        let r = &self.positive_roots[i];
        let n = self.rank;
        let mut acc = rational::zero();
        for a in 0..n {
            for b in 0..n {
                let k = r[a] * self.gram[a][b];
                if k != 0 {
                    acc += &x[b] * rational::int(k);
                }
            }
        }
        acc * rational::rat(2, self.norms[i])
    }

    /// Same as [`Self::coroot_pairing`] on an integer vector; always an
    /// integer on the root lattice.
    pub fn coroot_pairing_int(&self, i: usize, x: &[i64]) -> i64 {
        let v = 2 * self.form(&self.positive_roots[i], x);
        debug_assert_eq!(v % self.norms[i], 0);
        v / self.norms[i]
    }

    pub fn simple_reflections(&self) -> &[GroupElement] {
        &self.simple_reflections
    }

    /// Reflection in the `i`-th positive root.
    pub fn reflection(&self, i: usize) -> &GroupElement {
        &self.reflections[i]
    }

    pub fn reflections(&self) -> &[GroupElement] {
        &self.reflections
    }

    /// `w⁻¹ = B⁻¹ wᵀ B`, using that `w` preserves the form.
    pub fn inverse(&self, w: &GroupElement) -> GroupElement {
        let wt = w.transpose().to_exact();
        let m = self
            .gram_inverse
            .mul(&wt)
            .and_then(|p| p.mul(&self.gram_exact()))
            .expect("square matrices of equal size");
        integer_element(&m)
    }

    /// Matrix of `w` on `h` in the basis of fundamental coweights, i.e.
    /// `B w B⁻¹`; this is the contragredient of the action on roots.
    pub fn coweight_action(&self, w: &GroupElement) -> GroupElement {
        let m = self
            .gram_exact()
            .mul(&w.to_exact())
            .and_then(|p| p.mul(&self.gram_inverse))
            .expect("square matrices of equal size");
        integer_element(&m)
    }

    /// `wᵀ B w = B`.
    pub fn preserves_form(&self, w: &GroupElement) -> bool {
        let n = self.rank;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let mut s = 0;
                for a in 0..n {
                    for b in 0..n {
                        s += w.get(a, i) * self.gram[a][b] * w.get(b, j);
                    }
                }
                s == self.gram[i][j]
            })
        })
    }

    /// `w` maps every root to a root.
    pub fn permutes_roots(&self, w: &GroupElement) -> bool {
        let mut hit = vec![false; self.positive_roots.len()];
        for r in &self.positive_roots {
            match self.root_position(&w.apply(r)) {
                Some(j) if !hit[j] => hit[j] = true,
                _ => return false,
            }
        }
        true
    }

    /// The sign character `det(w)`.
    pub fn sign(&self, w: &GroupElement) -> i64 {
        w.determinant()
    }
}

fn integer_element(m: &ExactMatrix) -> GroupElement {
    let rows: Vec<Vec<i64>> = (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| {
                    let v = m.get(r, c);
                    assert!(v.is_integer(), "group element must be integral");
                    v.to_integer().to_i64().expect("entry fits in i64")
                })
                .collect()
        })
        .collect();
    GroupElement::from_rows(&rows)
}
