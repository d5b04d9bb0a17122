//! The commutative side: diagonal invariants of `W` on `C[h ⊕ h*]`, the
//! Poisson bracket, and bigraded dimensions of the diagonal coinvariants
//! `D_W`.
//!
//! Variables `0..n` are `x_j = α_j`, variables `n..2n` are `y_i = ω_i∨`.

mod table;
mod wallach;

pub use table::{
    compare_dw_rw, diagonal_coinvariant_dims, table_checks, BigradedTable, DwComparison,
    DEFAULT_CELL_BUDGET,
};
pub use wallach::{wallach_spot_check, WallachReport};

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::algebra::{
    monomials_of_degree, rational, Monomial, MultiPoly, Rational, RowSpace, SparseVec,
};
use crate::error::{Error, Result};
use crate::root_system::{GroupElement, RootSystemData, WeylGroup};

/// A polynomial in `x_1..x_n, y_1..y_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    n: usize,
    poly: MultiPoly,
}

impl BiPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            poly: MultiPoly::zero(2 * n),
        }
    }

    pub fn one(n: usize) -> Self {
        Self {
            n,
            poly: MultiPoly::one(2 * n),
        }
    }

    pub fn x(n: usize, i: usize) -> Self {
        Self {
            n,
            poly: MultiPoly::var(2 * n, i),
        }
    }

    pub fn y(n: usize, i: usize) -> Self {
        Self {
            n,
            poly: MultiPoly::var(2 * n, n + i),
        }
    }

    pub fn from_poly(n: usize, poly: MultiPoly) -> Result<Self> {
        if poly.nvars() != 2 * n {
            return Err(Error::DimensionMismatch("bipolynomial needs 2n variables"));
        }
        Ok(Self { n, poly })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            n: self.n,
            poly: self.poly.scale(c),
        }
    }

    /// Common bidegree of all terms, if the polynomial is bihomogeneous.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut out = None;
        for (m, _) in self.poly.terms() {
            let d = monomial_bidegree(self.n, m);
            match out {
                None => out = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        out
    }

    pub fn fmt_names(&self) -> alloc::string::String {
        let names: Vec<alloc::string::String> = (0..self.n)
            .map(|i| alloc::format!("x{}", i + 1))
            .chain((0..self.n).map(|i| alloc::format!("y{}", i + 1)))
            .collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        self.poly.fmt_with(&refs)
    }
}

impl core::ops::Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly {
            n: self.n,
            poly: &self.poly + &rhs.poly,
        }
    }
}

impl core::ops::Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        BiPoly {
            n: self.n,
            poly: &self.poly - &rhs.poly,
        }
    }
}

impl core::ops::Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        BiPoly {
            n: self.n,
            poly: &self.poly * &rhs.poly,
        }
    }
}

pub fn monomial_bidegree(n: usize, m: &[u32]) -> (u32, u32) {
    (m[..n].iter().sum(), m[n..].iter().sum())
}

/// `{f, g} = Σ_i (∂f/∂y_i ∂g/∂x_i - ∂f/∂x_i ∂g/∂y_i)`, so `{y_i, x_j} = δ_ij`.
pub fn poisson_bracket(f: &BiPoly, g: &BiPoly) -> BiPoly {
    let n = f.n;
    let mut out = MultiPoly::zero(2 * n);
    for i in 0..n {
        out = &out + &(&f.poly.derivative(n + i) * &g.poly.derivative(i));
        out = &out - &(&f.poly.derivative(i) * &g.poly.derivative(n + i));
    }
    BiPoly { n, poly: out }
}

/// Monomials of bidegree `(a, b)` with a lookup table.
#[derive(Clone, Debug)]
pub struct Cell {
    pub monomials: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl Cell {
    pub fn new(n: usize, a: u32, b: u32) -> Self {
        let xs = monomials_of_degree(n, a);
        let ys = monomials_of_degree(n, b);
        let mut monomials = Vec::with_capacity(xs.len() * ys.len());
        for mx in &xs {
            for my in &ys {
                let mut m = mx.clone();
                m.extend_from_slice(my);
                monomials.push(m);
            }
        }
        let index = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        Self { monomials, index }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn to_vec(&self, f: &MultiPoly) -> Result<SparseVec> {
        f.terms()
            .map(|(m, c)| {
                self.position(m)
                    .map(|i| (i, c.clone()))
                    .ok_or(Error::DimensionMismatch("polynomial outside this bidegree"))
            })
            .collect()
    }

    pub fn to_poly(&self, v: &SparseVec) -> MultiPoly {
        let nvars = self.monomials.first().map_or(0, |m| m.len());
        let mut p = MultiPoly::zero(nvars);
        for (i, c) in v {
            p.add_term(self.monomials[*i].clone(), c.clone());
        }
        p
    }
}

/// Diagonal action of an enumerated Weyl group with cached powers of the
/// images of each variable.
pub struct DiagonalLab<'a> {
    rs: &'a RootSystemData,
    group: &'a WeylGroup,
    images: Vec<Vec<MultiPoly>>,
    powers: RefCell<BTreeMap<(usize, usize, u32), MultiPoly>>,
    invariants: RefCell<BTreeMap<(u32, u32), Vec<BiPoly>>>,
    cell_budget: usize,
}

impl<'a> DiagonalLab<'a> {
    pub fn new(rs: &'a RootSystemData, group: &'a WeylGroup) -> Self {
        let images = group
            .elements()
            .iter()
            .map(|w| variable_images(rs, w))
            .collect();
        Self {
            rs,
            group,
            images,
            powers: RefCell::new(BTreeMap::new()),
            invariants: RefCell::new(BTreeMap::new()),
            cell_budget: DEFAULT_CELL_BUDGET,
        }
    }

    pub fn with_cell_budget(mut self, budget: usize) -> Self {
        self.cell_budget = budget;
        self
    }

    pub fn root_system(&self) -> &RootSystemData {
        self.rs
    }

    pub fn group(&self) -> &WeylGroup {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.rs.rank
    }

    pub fn cell(&self, a: u32, b: u32) -> Result<Cell> {
        let n = self.rank();
        let size = crate::algebra::multipoly::count_monomials(n, a)
            * crate::algebra::multipoly::count_monomials(n, b);
        if size > self.cell_budget as u128 {
            return Err(Error::BudgetExceeded {
                budget: "bidegree cell size",
                requested: size,
                limit: self.cell_budget as u128,
            });
        }
        Ok(Cell::new(n, a, b))
    }

    fn power(&self, w: usize, var: usize, e: u32) -> MultiPoly {
        if let Some(p) = self.powers.borrow().get(&(w, var, e)) {
            return p.clone();
        }
        let p = self.images[w][var].pow(e);
        self.powers.borrow_mut().insert((w, var, e), p.clone());
        p
    }

    fn act_monomial(&self, w: usize, m: &[u32]) -> MultiPoly {
        let mut out = MultiPoly::one(2 * self.rank());
        for (var, &e) in m.iter().enumerate() {
            if e > 0 {
                out = &out * &self.power(w, var, e);
            }
        }
        out
    }

    /// `w · f` for the `w`-th group element.
    pub fn act(&self, w: usize, f: &BiPoly) -> BiPoly {
        let mut out = MultiPoly::zero(2 * self.rank());
        for (m, c) in f.poly.terms() {
            out.add_scaled(&self.act_monomial(w, m), c);
        }
        BiPoly { n: f.n, poly: out }
    }

    /// `|W|⁻¹ Σ_w w · f`.
    pub fn reynolds(&self, f: &BiPoly) -> BiPoly {
        let mut out = MultiPoly::zero(2 * self.rank());
        for (m, c) in f.poly.terms() {
            for w in 0..self.group.order() {
                out.add_scaled(&self.act_monomial(w, m), c);
            }
        }
        let k = rational::rat(1, self.group.order() as i64);
        BiPoly {
            n: f.n,
            poly: out.scale(&k),
        }
    }

    pub fn is_invariant(&self, f: &BiPoly) -> bool {
        (0..self.group.order()).all(|w| self.act(w, f) == *f)
    }

    /// Basis of the invariants of bidegree `(a, b)`.
    pub fn invariant_space_basis(&self, a: u32, b: u32) -> Result<Vec<BiPoly>> {
        if let Some(v) = self.invariants.borrow().get(&(a, b)) {
            return Ok(v.clone());
        }
        let n = self.rank();
        let cell = self.cell(a, b)?;
        let mut space = RowSpace::new();
        for m in &cell.monomials {
            let r = self.reynolds(&BiPoly {
                n,
                poly: MultiPoly::monomial(m.clone(), rational::one()),
            });
            if !r.is_zero() {
                space.insert(cell.to_vec(&r.poly)?);
            }
        }
        let basis: Vec<BiPoly> = space
            .into_basis()
            .iter()
            .map(|v| BiPoly {
                n,
                poly: cell.to_poly(v),
            })
            .collect();
        self.invariants.borrow_mut().insert((a, b), basis.clone());
        Ok(basis)
    }
}

/// Images of `x_j` and `y_j` under `w`: `x` transforms by `w` in root
/// coordinates and `y` by the contragredient in coweight coordinates.
fn variable_images(rs: &RootSystemData, w: &GroupElement) -> Vec<MultiPoly> {
    let n = rs.rank;
    let cw = rs.coweight_action(w);
    let mut out = Vec::with_capacity(2 * n);
    for j in 0..n {
        let mut p = MultiPoly::zero(2 * n);
        for k in 0..n {
            let v = w.get(k, j);
            if v != 0 {
                p.add_term(var_monomial(2 * n, k), rational::int(v));
            }
        }
        out.push(p);
    }
    for j in 0..n {
        let mut p = MultiPoly::zero(2 * n);
        for k in 0..n {
            let v = cw.get(k, j);
            if v != 0 {
                p.add_term(var_monomial(2 * n, n + k), rational::int(v));
            }
        }
        out.push(p);
    }
    out
}

fn var_monomial(nvars: usize, i: usize) -> Monomial {
    let mut m = alloc::vec![0; nvars];
    m[i] = 1;
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_with_group, TypeLabel, DEFAULT_GROUP_BUDGET};
    use proptest::prelude::*;

    fn lab_for(l: TypeLabel, n: usize) -> (RootSystemData, WeylGroup) {
        let (rs, g) = build_with_group(l, n, DEFAULT_GROUP_BUDGET).unwrap();
        (rs, g.unwrap())
    }

    #[test]
    fn a1_reynolds() {
        let (rs, g) = lab_for(TypeLabel::A, 1);
        let lab = DiagonalLab::new(&rs, &g);
        let x = BiPoly::x(1, 0);
        let y = BiPoly::y(1, 0);
        assert_eq!(lab.reynolds(&(&x * &x)), &x * &x);
        assert!(lab.reynolds(&x).is_zero());
        assert_eq!(lab.reynolds(&(&x * &y)), &x * &y);
        assert_eq!(lab.invariant_space_basis(1, 1).unwrap().len(), 1);
        assert!(lab.invariant_space_basis(1, 0).unwrap().is_empty());
        assert_eq!(lab.invariant_space_basis(2, 0).unwrap().len(), 1);
    }

    #[test]
    fn pairing_element_is_invariant() {
        for (l, n) in [(TypeLabel::B, 2), (TypeLabel::G, 2), (TypeLabel::A, 3)] {
            let (rs, g) = lab_for(l, n);
            let lab = DiagonalLab::new(&rs, &g);
            let mut e = BiPoly::zero(n);
            for i in 0..n {
                e = &e + &(&BiPoly::x(n, i) * &BiPoly::y(n, i));
            }
            assert!(lab.is_invariant(&e));
            assert_eq!(lab.reynolds(&e), e);
        }
    }

    #[test]
    fn bracket_normalization() {
        let n = 2;
        assert_eq!(
            poisson_bracket(&BiPoly::y(n, 0), &BiPoly::x(n, 0)),
            BiPoly::one(n)
        );
        assert!(poisson_bracket(&BiPoly::y(n, 0), &BiPoly::x(n, 1)).is_zero());
    }

    #[test]
    fn bracket_of_squares() {
        // x² = Σ (B⁻¹)_ij x_i x_j and y² = Σ B_ij y_i y_j bracket to -4 Σ x_i y_i.
        let (rs, _) = lab_for(TypeLabel::B, 2);
        let n = 2;
        let binv = rs.gram_inverse();
        let (mut x2, mut y2, mut e) = (BiPoly::zero(n), BiPoly::zero(n), BiPoly::zero(n));
        for i in 0..n {
            e = &e + &(&BiPoly::x(n, i) * &BiPoly::y(n, i));
            for j in 0..n {
                x2 = &x2 + &(&BiPoly::x(n, i) * &BiPoly::x(n, j)).scale(binv.get(i, j));
                y2 = &y2
                    + &(&BiPoly::y(n, i) * &BiPoly::y(n, j)).scale(&rational::int(rs.gram()[i][j]));
            }
        }
        assert_eq!(poisson_bracket(&x2, &y2), e.scale(&rational::int(-4)));
        assert_eq!(poisson_bracket(&y2, &x2), e.scale(&rational::int(4)));
    }

    fn bipoly(n: usize) -> impl Strategy<Value = BiPoly> {
        prop::collection::vec((prop::collection::vec(0u32..3, 2 * n), -3i64..4), 1..4).prop_map(
            move |ts| {
                let mut p = MultiPoly::zero(2 * n);
                for (m, c) in ts {
                    p.add_term(m, rational::int(c));
                }
                BiPoly { n, poly: p }
            },
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]
        #[test]
        fn bracket_is_a_poisson_structure(f in bipoly(2), g in bipoly(2), h in bipoly(2)) {
            prop_assert!(poisson_bracket(&f, &f).is_zero());
            prop_assert_eq!(poisson_bracket(&f, &g), poisson_bracket(&g, &f).scale(&rational::int(-1)));
            let leibniz = &(&poisson_bracket(&f, &g) * &h) + &(&g * &poisson_bracket(&f, &h));
            prop_assert_eq!(poisson_bracket(&f, &(&g * &h)), leibniz);
            let jacobi = &(&poisson_bracket(&f, &poisson_bracket(&g, &h))
                + &poisson_bracket(&g, &poisson_bracket(&h, &f)))
                + &poisson_bracket(&h, &poisson_bracket(&f, &g));
            prop_assert!(jacobi.is_zero());
        }

        #[test]
        fn reynolds_is_an_invariant_projector(f in bipoly(2)) {
            let (rs, g) = lab_for(TypeLabel::B, 2);
            let lab = DiagonalLab::new(&rs, &g);
            let r = lab.reynolds(&f);
            prop_assert!(lab.is_invariant(&r));
            prop_assert_eq!(lab.reynolds(&r), r.clone());
            let mut e = BiPoly::zero(2);
            for i in 0..2 {
                e = &e + &(&BiPoly::x(2, i) * &BiPoly::y(2, i));
            }
            prop_assert_eq!(lab.reynolds(&(&e * &f)), &e * &r);
        }
    }
}
